#pragma once

// Error taxonomy for the zdg library. Every failure mode that callers are
// expected to distinguish gets its own type; all of them derive from
// zdg::error so a catch-all remains possible.

#include <stdexcept>
#include <string>

namespace zdg {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument to a library entry point (n < 2, wrong modulus form,
// equal primes, out-of-range parameter, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// The requested modulus yields an empty graph (n prime, or n too small to
// have zero divisors).
class empty_graph_error : public error {
public:
    explicit empty_graph_error(const std::string& what) : error(what) {}
};

// A dense-matrix operation was requested for a graph whose order exceeds
// the configured cap, or a vertex enumeration would be astronomically big.
class size_cap_error : public error {
public:
    explicit size_cap_error(const std::string& what) : error(what) {}
};

// The eigensolver failed to reach its tolerance within the sweep budget.
class convergence_error : public error {
public:
    explicit convergence_error(const std::string& what) : error(what) {}
};

// A graph-distance computation found the graph disconnected where a
// connected graph is required (Wiener index).
class disconnected_error : public error {
public:
    explicit disconnected_error(const std::string& what) : error(what) {}
};

// A structural invariant failed: vertex distances are not constant across
// a divisor-class pair, so no class-level distance table exists.
class nonuniform_distance_error : public error {
public:
    explicit nonuniform_distance_error(const std::string& what) : error(what) {}
};

// An exact integer formula evaluated to a non-integer (parity failure).
class integrality_error : public error {
public:
    explicit integrality_error(const std::string& what) : error(what) {}
};

// Exact integer arithmetic would overflow the result type.
class overflow_error : public error {
public:
    explicit overflow_error(const std::string& what) : error(what) {}
};

} // namespace zdg
