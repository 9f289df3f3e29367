#include "zdg/factorization.hpp"

#include "zdg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zdg {

namespace {

constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

// Pollard's rho (Brent variant) for composites with no small factors.
// Deterministic: cycles through fixed polynomial increments until a
// nontrivial factor splits off. Inputs here are odd composites > 1e12
// whose prime factors all exceed the trial-division bound.
std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t saved_x = x;
        // Brent cycle detection with batched gcds.
        for (std::uint64_t limit = 1; d == 1; limit *= 2) {
            saved_x = y;
            std::uint64_t product = 1;
            std::uint64_t count = 0;
            for (std::uint64_t i = 0; i < limit && d == 1; ++i) {
                y = mul_mod(y, y, n) + c;
                if (y >= n) y -= n;
                std::uint64_t diff = x > y ? x - y : y - x;
                if (diff == 0) {
                    d = n; // degenerate cycle; retry with next c
                    break;
                }
                product = mul_mod(product, diff, n);
                if (++count == 64 || i + 1 == limit) {
                    d = std::gcd(product, n);
                    product = 1;
                    count = 0;
                }
            }
            x = y;
            (void)saved_x;
        }
        if (d != n) return d;
        // d == n: either the batch collapsed or the cycle degenerated;
        // retry with a different increment.
    }
}

void factor_recursive(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_recursive(d, primes);
    factor_recursive(n / d, primes);
}

} // namespace

const char* to_string(ModulusForm form) {
    switch (form) {
    case ModulusForm::p_cubed: return "p3";
    case ModulusForm::p_squared_q: return "p2q";
    case ModulusForm::general: return "general";
    }
    return "general";
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    // Miller-Rabin with the first twelve primes as witnesses is exact for
    // every n < 2^64 (Sorenson & Webster).
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FactoredModulus factorize(std::uint64_t n) {
    if (n < 2) {
        throw domain_error("factorize: n must be at least 2, got " +
                           std::to_string(n));
    }
    FactoredModulus fm;
    fm.n = n;

    std::uint64_t rest = n;
    for (std::uint64_t d = 2; d <= kTrialDivisionBound && d * d <= rest; ++d) {
        if (rest % d == 0) {
            int exponent = 0;
            while (rest % d == 0) {
                rest /= d;
                ++exponent;
            }
            fm.factors.emplace_back(d, exponent);
        }
    }
    if (rest > 1) {
        if (is_prime(rest)) {
            fm.factors.emplace_back(rest, 1);
        } else {
            std::vector<std::uint64_t> primes;
            factor_recursive(rest, primes);
            std::sort(primes.begin(), primes.end());
            for (std::size_t i = 0; i < primes.size();) {
                std::size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                fm.factors.emplace_back(primes[i], static_cast<int>(j - i));
                i = j;
            }
            std::sort(fm.factors.begin(), fm.factors.end());
        }
    }

    if (fm.factors.size() == 1 && fm.factors[0].second == 3) {
        fm.form = ModulusForm::p_cubed;
        fm.p = fm.factors[0].first;
    } else if (fm.factors.size() == 2) {
        const auto& [p1, e1] = fm.factors[0];
        const auto& [p2, e2] = fm.factors[1];
        if (e1 == 2 && e2 == 1) {
            fm.form = ModulusForm::p_squared_q;
            fm.p = p1;
            fm.q = p2;
        } else if (e1 == 1 && e2 == 2) {
            fm.form = ModulusForm::p_squared_q;
            fm.p = p2;
            fm.q = p1;
        }
    }
    return fm;
}

std::uint64_t euler_phi_of_divisor(const FactoredModulus& fm, std::uint64_t m) {
    if (m == 0 || fm.n % m != 0) {
        throw domain_error("euler_phi_of_divisor: " + std::to_string(m) +
                           " does not divide " + std::to_string(fm.n));
    }
    std::uint64_t phi = m;
    for (const auto& [prime, exponent] : fm.factors) {
        (void)exponent;
        if (m % prime == 0) {
            phi -= phi / prime;
        }
    }
    return phi;
}

std::uint64_t euler_phi(const FactoredModulus& fm) {
    return euler_phi_of_divisor(fm, fm.n);
}

std::vector<std::uint64_t> proper_divisors(const FactoredModulus& fm) {
    std::vector<std::uint64_t> divisors{1};
    for (const auto& [prime, exponent] : fm.factors) {
        const std::size_t base_count = divisors.size();
        std::uint64_t power = 1;
        for (int e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base_count; ++i) {
                divisors.push_back(divisors[i] * power);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());
    // Strip 1 and n.
    return {divisors.begin() + 1, divisors.end() - 1};
}

} // namespace zdg
