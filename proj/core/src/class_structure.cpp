#include "zdg/class_structure.hpp"

#include "zdg/errors.hpp"

#include <numeric>
#include <string>

namespace zdg {

namespace {

std::uint64_t vertex_count_or_throw(const FactoredModulus& fm) {
    if (fm.n < 2) {
        throw domain_error("modulus must be at least 2");
    }
    const std::uint64_t count = fm.n - 1 - euler_phi(fm);
    if (count == 0) {
        throw empty_graph_error("Z_" + std::to_string(fm.n) +
                                " has no zero divisors");
    }
    if (count > kMaxEnumerableVertices) {
        throw size_cap_error("Z_" + std::to_string(fm.n) + " has " +
                             std::to_string(count) +
                             " zero divisors; enumeration cap is " +
                             std::to_string(kMaxEnumerableVertices));
    }
    return count;
}

} // namespace

std::vector<std::uint64_t> zero_divisors(const FactoredModulus& fm) {
    const std::uint64_t expected = vertex_count_or_throw(fm);
    std::vector<std::uint64_t> result;
    result.reserve(expected);
    for (std::uint64_t x = 2; x < fm.n; ++x) {
        if (std::gcd(x, fm.n) > 1) {
            result.push_back(x);
        }
    }
    return result;
}

ClassStructure class_partition(const FactoredModulus& fm) {
    ClassStructure cs;
    cs.modulus = fm;
    cs.total_vertices = vertex_count_or_throw(fm);

    std::vector<std::uint64_t> order;
    switch (fm.form) {
    case ModulusForm::p_cubed:
        order = {fm.p, fm.p * fm.p};
        break;
    case ModulusForm::p_squared_q:
        order = {fm.p, fm.q, fm.p * fm.q, fm.p * fm.p};
        break;
    case ModulusForm::general:
        order = proper_divisors(fm);
        break;
    }

    cs.classes.reserve(order.size());
    for (std::uint64_t d : order) {
        DivisorClass cls;
        cls.divisor = d;
        const std::uint64_t cofactor = fm.n / d;
        cls.members.reserve(euler_phi_of_divisor(fm, cofactor));
        // gcd(d*k, n) == d exactly when gcd(k, n/d) == 1.
        for (std::uint64_t k = 1; k < cofactor; ++k) {
            if (std::gcd(k, cofactor) == 1) {
                cls.members.push_back(d * k);
            }
        }
        // n | d^2 <=> (d*d) % n == 0; d < n <= 2^64 so compute via mul_mod.
        cls.looped = mul_mod(d % fm.n, d % fm.n, fm.n) == 0;
        cs.classes.push_back(std::move(cls));
    }

    std::uint64_t counted = 0;
    for (const auto& cls : cs.classes) counted += cls.size();
    if (counted != cs.total_vertices) {
        throw domain_error("class partition does not cover the vertex set of Z_" +
                           std::to_string(fm.n));
    }
    return cs;
}

} // namespace zdg
