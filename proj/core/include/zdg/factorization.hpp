#pragma once

// Integer groundwork: 64-bit modular arithmetic, deterministic primality,
// and full factorization of a modulus, with recognition of the two shapes
// that admit closed-form results (n = p^3 and n = p^2 q).

#include <cstdint>
#include <utility>
#include <vector>

namespace zdg {

enum class ModulusForm {
    p_cubed,     // n = p^3, p prime
    p_squared_q, // n = p^2 q, p != q primes
    general,     // anything else
};

const char* to_string(ModulusForm form);

struct FactoredModulus {
    std::uint64_t n = 0;
    // Prime factorization, primes ascending: n = prod(first ^ second).
    std::vector<std::pair<std::uint64_t, int>> factors;
    ModulusForm form = ModulusForm::general;
    // For p_cubed: p is the prime, q is 0.
    // For p_squared_q: p is the squared prime, q the other one.
    std::uint64_t p = 0;
    std::uint64_t q = 0;
};

// (a * b) mod m without overflow, valid for all 64-bit operands.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// (base ^ exp) mod m, m >= 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Full factorization via trial division with a Pollard-rho fallback.
// Throws domain_error for n < 2.
FactoredModulus factorize(std::uint64_t n);

// Euler's totient of m, where every prime factor of m divides fm.n.
// Used for phi(n / d) with d | n. Throws domain_error otherwise.
std::uint64_t euler_phi_of_divisor(const FactoredModulus& fm, std::uint64_t m);

// Euler's totient of fm.n itself.
std::uint64_t euler_phi(const FactoredModulus& fm);

// All divisors d of n with 1 < d < n, ascending.
std::vector<std::uint64_t> proper_divisors(const FactoredModulus& fm);

} // namespace zdg
