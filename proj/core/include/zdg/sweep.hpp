#pragma once

// Families of moduli analyzed in bulk: enumeration, a parallel worker
// pool, JSON-lines output in ascending-n order, and a verdict summary.

#include "zdg/analysis.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zdg {

enum class SweepForm {
    p3,      // n = p^3 over primes p <= p_max
    p2q,     // n = p^2 q over primes p <= p_max, q <= q_max, p != q
    general, // every n <= n_cap whose graph is nonempty, any form
};

const char* to_string(SweepForm form);

struct SweepConfig {
    SweepForm form = SweepForm::general;
    std::uint64_t p_max = 0; // p3/p2q; 0 enumerates nothing
    std::uint64_t q_max = 0; // p2q; 0 means "use p_max"
    std::uint64_t n_cap = 0; // p3/p2q: 0 = uncapped; general: required
    AnalyzeOptions analysis;
    int jobs = 1;        // worker threads; values < 1 behave as 1
    bool timings = true; // include per-record timings_ms in the output
};

// The moduli the sweep will analyze, ascending.
std::vector<std::uint64_t> sweep_moduli(const SweepConfig& config);

struct FormulaTally {
    std::string formula_id;
    std::int64_t match = 0;
    std::int64_t mismatch = 0;
    std::int64_t unchecked = 0;
};

struct SweepSummary {
    std::size_t moduli = 0;
    std::size_t structural_failures = 0;
    std::vector<FormulaTally> formulas; // canonical formula order

    bool ok() const { return structural_failures == 0; }
};

// Analyze every modulus, writing one JSON record per line (ascending n)
// followed by one summary line. Worker threads run analyses concurrently;
// output order and bytes are independent of jobs. Errors other than the
// per-modulus empty-graph case propagate (general sweeps simply skip
// moduli without zero divisors before this point).
SweepSummary run_sweep(const SweepConfig& config, std::ostream& out);

// The summary line run_sweep writes, exposed for reuse.
std::string render_summary_json(const SweepSummary& summary);

} // namespace zdg
