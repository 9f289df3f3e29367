#pragma once

// Divisor-class (gcd-class) decomposition of the zero-divisor graph of Z_n.
//
// The vertex set is { x : 0 < x < n, gcd(x, n) > 1, x != 0 mod n }, i.e.
// the nonzero zero divisors. Vertices with the same gcd with n behave
// identically: the class of a proper divisor d is
//   V_d = { x : gcd(x, n) = d },   |V_d| = phi(n / d),
// two classes V_d, V_e are fully joined iff n | d*e, and V_d is internally
// a clique iff n | d^2 (equivalently, its members square to zero).

#include "zdg/factorization.hpp"

#include <cstdint>
#include <vector>

namespace zdg {

struct DivisorClass {
    std::uint64_t divisor = 0;          // d with d | n, 1 < d < n
    std::vector<std::uint64_t> members; // { x : gcd(x, n) = d }, ascending
    bool looped = false;                // n | d^2: members square to zero
    std::size_t size() const { return members.size(); }
};

struct ClassStructure {
    FactoredModulus modulus;
    std::vector<DivisorClass> classes; // canonical order, see class_partition
    std::uint64_t total_vertices = 0;  // sum of class sizes = n - 1 - phi(n)
};

// Largest vertex count we are willing to enumerate explicitly.
constexpr std::uint64_t kMaxEnumerableVertices = 50'000'000;

// The nonzero zero divisors of Z_n, ascending, found by direct gcd scan.
// Throws empty_graph_error if there are none (n prime or n < 4) and
// size_cap_error if there are more than kMaxEnumerableVertices.
std::vector<std::uint64_t> zero_divisors(const FactoredModulus& fm);

// Partition the zero divisors into divisor classes.
//
// Class order is canonical per modulus form:
//   p^3:    [p, p^2]
//   p^2 q:  [p, q, pq, p^2]
//   other:  proper divisors of n, ascending.
// Throws like zero_divisors.
ClassStructure class_partition(const FactoredModulus& fm);

} // namespace zdg
