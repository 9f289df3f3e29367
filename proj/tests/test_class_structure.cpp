#include "zdg/class_structure.hpp"

#include "zdg/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace zdg;

TEST_CASE("zero_divisors enumerates exactly the non-units") {
    CHECK(zero_divisors(factorize(27)) ==
          std::vector<std::uint64_t>{3, 6, 9, 12, 15, 18, 21, 24});
    CHECK(zero_divisors(factorize(12)) ==
          std::vector<std::uint64_t>{2, 3, 4, 6, 8, 9, 10});
    CHECK(zero_divisors(factorize(8)) == std::vector<std::uint64_t>{2, 4, 6});
    CHECK(zero_divisors(factorize(4)) == std::vector<std::uint64_t>{2});
}

TEST_CASE("prime moduli have empty graphs") {
    CHECK_THROWS_AS(zero_divisors(factorize(7)), empty_graph_error);
    CHECK_THROWS_AS(zero_divisors(factorize(2)), empty_graph_error);
    CHECK_THROWS_AS(class_partition(factorize(97)), empty_graph_error);
    CHECK_THROWS_AS(class_partition(factorize(3)), empty_graph_error);
}

TEST_CASE("class_partition of Z_27 (p^3 canonical order)") {
    const ClassStructure cs = class_partition(factorize(27));
    REQUIRE(cs.classes.size() == 2);
    CHECK(cs.total_vertices == 8);

    CHECK(cs.classes[0].divisor == 3);
    CHECK(cs.classes[0].members ==
          std::vector<std::uint64_t>{3, 6, 12, 15, 21, 24});
    CHECK_FALSE(cs.classes[0].looped);

    CHECK(cs.classes[1].divisor == 9);
    CHECK(cs.classes[1].members == std::vector<std::uint64_t>{9, 18});
    CHECK(cs.classes[1].looped);
}

TEST_CASE("class_partition of Z_12 (p^2 q canonical order)") {
    const ClassStructure cs = class_partition(factorize(12));
    REQUIRE(cs.classes.size() == 4);
    CHECK(cs.total_vertices == 7);

    // Canonical order [p, q, pq, p^2] = [2, 3, 6, 4].
    CHECK(cs.classes[0].divisor == 2);
    CHECK(cs.classes[0].members == std::vector<std::uint64_t>{2, 10});
    CHECK(cs.classes[1].divisor == 3);
    CHECK(cs.classes[1].members == std::vector<std::uint64_t>{3, 9});
    CHECK(cs.classes[2].divisor == 6);
    CHECK(cs.classes[2].members == std::vector<std::uint64_t>{6});
    CHECK(cs.classes[3].divisor == 4);
    CHECK(cs.classes[3].members == std::vector<std::uint64_t>{4, 8});

    CHECK_FALSE(cs.classes[0].looped);
    CHECK_FALSE(cs.classes[1].looped);
    CHECK(cs.classes[2].looped); // 36 = 0 mod 12
    CHECK_FALSE(cs.classes[3].looped); // 16 = 4 mod 12
}

TEST_CASE("class_partition of Z_18 keeps the p^2 q order when q < p") {
    const ClassStructure cs = class_partition(factorize(18)); // p=3, q=2
    REQUIRE(cs.classes.size() == 4);
    // [p, q, pq, p^2] = [3, 2, 6, 9].
    CHECK(cs.classes[0].divisor == 3);
    CHECK(cs.classes[0].size() == 2); // (p-1)(q-1)
    CHECK(cs.classes[1].divisor == 2);
    CHECK(cs.classes[1].size() == 6); // p(p-1)
    CHECK(cs.classes[2].divisor == 6);
    CHECK(cs.classes[2].size() == 2); // p-1
    CHECK(cs.classes[2].looped);
    CHECK(cs.classes[3].divisor == 9);
    CHECK(cs.classes[3].size() == 1); // q-1
}

TEST_CASE("class_partition of Z_8 and Z_4") {
    const ClassStructure cs8 = class_partition(factorize(8));
    REQUIRE(cs8.classes.size() == 2);
    CHECK(cs8.classes[0].members == std::vector<std::uint64_t>{2, 6});
    CHECK_FALSE(cs8.classes[0].looped);
    CHECK(cs8.classes[1].members == std::vector<std::uint64_t>{4});
    CHECK(cs8.classes[1].looped);

    const ClassStructure cs4 = class_partition(factorize(4));
    REQUIRE(cs4.classes.size() == 1);
    CHECK(cs4.classes[0].divisor == 2);
    CHECK(cs4.classes[0].members == std::vector<std::uint64_t>{2});
    CHECK(cs4.classes[0].looped);
}

TEST_CASE("general form uses ascending divisor order") {
    const ClassStructure cs = class_partition(factorize(36));
    std::vector<std::uint64_t> divisors;
    for (const auto& cls : cs.classes) divisors.push_back(cls.divisor);
    CHECK(divisors == std::vector<std::uint64_t>{2, 3, 4, 6, 9, 12, 18});

    std::vector<std::uint64_t> looped;
    for (const auto& cls : cs.classes) {
        if (cls.looped) looped.push_back(cls.divisor);
    }
    CHECK(looped == std::vector<std::uint64_t>{6, 12, 18});
}

TEST_CASE("p^3 and p^2 q class sizes follow the closed formulas") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL}) {
        const ClassStructure cs = class_partition(factorize(p * p * p));
        REQUIRE(cs.classes.size() == 2);
        CHECK(cs.classes[0].size() == p * p - p);
        CHECK(cs.classes[1].size() == p - 1);
        CHECK(cs.total_vertices == p * p - 1);
    }
    for (auto [p, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {2, 3}, {3, 2}, {2, 5}, {5, 2}, {3, 5}, {5, 3}, {2, 7}, {7, 2}}) {
        const ClassStructure cs = class_partition(factorize(p * p * q));
        REQUIRE(cs.classes.size() == 4);
        CHECK(cs.classes[0].size() == (p - 1) * (q - 1));
        CHECK(cs.classes[1].size() == p * (p - 1));
        CHECK(cs.classes[2].size() == p - 1);
        CHECK(cs.classes[3].size() == q - 1);
    }
}

TEST_CASE("partition covers the zero divisors for many n") {
    for (std::uint64_t n = 4; n <= 200; ++n) {
        const FactoredModulus fm = factorize(n);
        if (is_prime(n)) continue;
        const ClassStructure cs = class_partition(fm);

        // Sizes are phi(n / d) and members carry gcd(x, n) = d.
        std::vector<std::uint64_t> all;
        for (const auto& cls : cs.classes) {
            CHECK(cls.size() == euler_phi_of_divisor(fm, n / cls.divisor));
            CHECK(cls.looped == (cls.divisor * cls.divisor % n == 0));
            for (std::uint64_t x : cls.members) {
                CHECK(std::gcd(x, n) == cls.divisor);
                if (cls.looped) {
                    CHECK(mul_mod(x, x, n) == 0);
                } else {
                    CHECK(mul_mod(x, x, n) != 0);
                }
            }
            all.insert(all.end(), cls.members.begin(), cls.members.end());
        }
        std::sort(all.begin(), all.end());
        CHECK(all == zero_divisors(fm));
        CHECK(cs.total_vertices == n - 1 - euler_phi(fm));
    }
}
