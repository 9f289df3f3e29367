#include "zdg/adjacency.hpp"

#include "zdg/class_structure.hpp"
#include "zdg/errors.hpp"
#include "zdg/factorization.hpp"

#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

namespace {

zdg::AdjacencyMatrix build_for(std::uint64_t n, zdg::Convention convention) {
    const auto fm = zdg::factorize(n);
    const auto cs = zdg::class_partition(fm);
    return zdg::build_adjacency(cs, convention);
}

} // namespace

TEST_CASE("adjacency oracle on Z_8") {
    const auto fm = zdg::factorize(8);

    SUBCASE("pair truths") {
        CHECK(zdg::adjacency_oracle(2, 4, fm, zdg::Convention::paper_loops));
        CHECK(zdg::adjacency_oracle(6, 4, fm, zdg::Convention::paper_loops));
        CHECK_FALSE(zdg::adjacency_oracle(2, 6, fm, zdg::Convention::paper_loops));
        CHECK(zdg::adjacency_oracle(2, 4, fm, zdg::Convention::simple));
    }

    SUBCASE("diagonal honors the convention") {
        CHECK(zdg::adjacency_oracle(4, 4, fm, zdg::Convention::paper_loops));
        CHECK_FALSE(zdg::adjacency_oracle(4, 4, fm, zdg::Convention::simple));
        // 2 * 2 = 4 != 0 (mod 8): no loop under either convention.
        CHECK_FALSE(zdg::adjacency_oracle(2, 2, fm, zdg::Convention::paper_loops));
        CHECK_FALSE(zdg::adjacency_oracle(2, 2, fm, zdg::Convention::simple));
    }

    SUBCASE("non-vertices are rejected") {
        CHECK_THROWS_AS(zdg::adjacency_oracle(3, 4, fm, zdg::Convention::paper_loops),
                        zdg::domain_error);
        CHECK_THROWS_AS(zdg::adjacency_oracle(2, 7, fm, zdg::Convention::paper_loops),
                        zdg::domain_error);
        CHECK_THROWS_AS(zdg::adjacency_oracle(0, 4, fm, zdg::Convention::paper_loops),
                        zdg::domain_error);
        CHECK_THROWS_AS(zdg::adjacency_oracle(8, 4, fm, zdg::Convention::paper_loops),
                        zdg::domain_error);
    }
}

TEST_CASE("build_adjacency lays vertices out class-major") {
    SUBCASE("Z_8 labels") {
        const auto m = build_for(8, zdg::Convention::paper_loops);
        CHECK(m.labels == std::vector<std::uint64_t>{2, 6, 4});
    }

    SUBCASE("Z_12 labels follow the p, q, pq, p^2 class order") {
        const auto m = build_for(12, zdg::Convention::paper_loops);
        CHECK(m.labels == std::vector<std::uint64_t>{2, 10, 3, 9, 6, 4, 8});
    }
}

TEST_CASE("build_adjacency entries for Z_8") {
    SUBCASE("paper_loops keeps the loop on 4") {
        const auto m = build_for(8, zdg::Convention::paper_loops);
        REQUIRE(m.order == 3);
        const std::vector<std::uint8_t> expected = {
            0, 0, 1,
            0, 0, 1,
            1, 1, 1,
        };
        CHECK(m.entries == expected);
        CHECK(m.modulus == 8);
        CHECK(m.convention == zdg::Convention::paper_loops);
    }

    SUBCASE("simple zeroes the diagonal") {
        const auto m = build_for(8, zdg::Convention::simple);
        REQUIRE(m.order == 3);
        const std::vector<std::uint8_t> expected = {
            0, 0, 1,
            0, 0, 1,
            1, 1, 0,
        };
        CHECK(m.entries == expected);
    }
}

TEST_CASE("every dense entry agrees with the pairwise oracle") {
    const std::vector<std::uint64_t> moduli = {8, 12, 18, 27, 30, 36, 45, 50, 64, 72, 100};
    for (const auto n : moduli) {
        CAPTURE(n);
        const auto fm = zdg::factorize(n);
        const auto cs = zdg::class_partition(fm);
        for (const auto convention : {zdg::Convention::paper_loops, zdg::Convention::simple}) {
            const auto m = zdg::build_adjacency(cs, convention);
            REQUIRE(m.order == cs.total_vertices);
            for (std::size_t i = 0; i < m.order; ++i) {
                for (std::size_t j = 0; j < m.order; ++j) {
                    const bool expected =
                        zdg::adjacency_oracle(m.labels[i], m.labels[j], fm, convention);
                    if (m.at(i, j) != (expected ? 1 : 0)) {
                        CAPTURE(i);
                        CAPTURE(j);
                        REQUIRE(m.at(i, j) == (expected ? 1 : 0));
                    }
                }
            }
        }
    }
}

TEST_CASE("adjacency matrices are symmetric with 0/1 entries") {
    for (const auto n : {12u, 27u, 36u, 100u}) {
        CAPTURE(n);
        const auto m = build_for(n, zdg::Convention::paper_loops);
        for (std::size_t i = 0; i < m.order; ++i) {
            for (std::size_t j = 0; j < m.order; ++j) {
                REQUIRE(m.at(i, j) <= 1);
                REQUIRE(m.at(i, j) == m.at(j, i));
            }
        }
    }
}

TEST_CASE("check_block_form accepts canonical matrices and rejects tampering") {
    const std::vector<std::uint64_t> moduli = {8, 12, 18, 27, 50, 125, 147, 30, 36};
    for (const auto n : moduli) {
        CAPTURE(n);
        const auto fm = zdg::factorize(n);
        const auto cs = zdg::class_partition(fm);
        const auto spec = zdg::canonical_block_spec(cs);
        for (const auto convention : {zdg::Convention::paper_loops, zdg::Convention::simple}) {
            auto m = zdg::build_adjacency(cs, convention);
            CHECK(zdg::check_block_form(m, spec));

            // Any single flipped entry must break the block form.
            m.entries[1] ^= 1;
            CHECK_FALSE(zdg::check_block_form(m, spec));
            m.entries[1] ^= 1;
        }
    }

    SUBCASE("size mismatch is rejected") {
        const auto fm = zdg::factorize(12);
        const auto cs = zdg::class_partition(fm);
        const auto m = zdg::build_adjacency(cs, zdg::Convention::paper_loops);
        auto spec = zdg::canonical_block_spec(cs);
        spec.class_sizes[0] += 1;
        CHECK_FALSE(zdg::check_block_form(m, spec));
    }
}

TEST_CASE("canonical_block_spec for Z_12 matches the four-class pattern") {
    const auto cs = zdg::class_partition(zdg::factorize(12));
    const auto spec = zdg::canonical_block_spec(cs);
    REQUIRE(spec.class_sizes == std::vector<std::size_t>{2, 2, 1, 2});

    // Class order [2, 3, 6, 4]: joined pairs are exactly
    // (2,6), (3,4), (6,6), (6,4) and their transposes.
    const std::vector<std::uint8_t> joined = {
        0, 0, 1, 0,
        0, 0, 0, 1,
        1, 0, 1, 1,
        0, 1, 1, 0,
    };
    CHECK(spec.joined == joined);
    CHECK(spec.looped == std::vector<std::uint8_t>{0, 0, 1, 0});
}

TEST_CASE("dense size cap") {
    const auto cs = zdg::class_partition(zdg::factorize(12));
    CHECK_THROWS_AS(zdg::build_adjacency(cs, zdg::Convention::paper_loops, 5),
                    zdg::size_cap_error);
    CHECK_NOTHROW(zdg::build_adjacency(cs, zdg::Convention::paper_loops, 7));
}

TEST_CASE("row sums in Z_p^3 under the simple convention") {
    // Multiples of p that are not multiples of p^2 see exactly the p - 1
    // multiples of p^2; each multiple of p^2 sees everything else.
    for (const std::uint64_t p : {2ull, 3ull, 5ull}) {
        CAPTURE(p);
        const auto n = p * p * p;
        const auto cs = zdg::class_partition(zdg::factorize(n));
        const auto m = zdg::build_adjacency(cs, zdg::Convention::simple);
        const std::size_t a_size = cs.classes[0].size();
        for (std::size_t i = 0; i < m.order; ++i) {
            std::size_t degree = 0;
            for (std::size_t j = 0; j < m.order; ++j) {
                degree += m.at(i, j);
            }
            if (i < a_size) {
                REQUIRE(degree == p - 1);
            } else {
                REQUIRE(degree == p * p - 2);
            }
        }
    }
}

TEST_CASE("CSV export") {
    SUBCASE("Z_4 simple is the one-vertex empty graph") {
        const auto m = build_for(4, zdg::Convention::simple);
        CHECK(zdg::to_csv(m) == "2\n0\n");
    }

    SUBCASE("Z_4 paper_loops keeps the loop on 2") {
        const auto m = build_for(4, zdg::Convention::paper_loops);
        CHECK(zdg::to_csv(m) == "2\n1\n");
    }

    SUBCASE("Z_8 paper_loops") {
        const auto m = build_for(8, zdg::Convention::paper_loops);
        CHECK(zdg::to_csv(m) == "2,6,4\n0,0,1\n0,0,1\n1,1,1\n");
    }
}

TEST_CASE("DOT export") {
    SUBCASE("Z_8 paper_loops includes the loop edge") {
        const auto m = build_for(8, zdg::Convention::paper_loops);
        const std::string expected =
            "graph zdg_8 {\n"
            "  2;\n"
            "  6;\n"
            "  4;\n"
            "  2 -- 4;\n"
            "  6 -- 4;\n"
            "  4 -- 4;\n"
            "}\n";
        CHECK(zdg::to_dot(m) == expected);
    }

    SUBCASE("Z_8 simple drops the loop edge") {
        const auto m = build_for(8, zdg::Convention::simple);
        const std::string expected =
            "graph zdg_8 {\n"
            "  2;\n"
            "  6;\n"
            "  4;\n"
            "  2 -- 4;\n"
            "  6 -- 4;\n"
            "}\n";
        CHECK(zdg::to_dot(m) == expected);
    }
}

TEST_CASE("export_matrix dispatches on format") {
    const auto m = build_for(8, zdg::Convention::paper_loops);
    CHECK(zdg::export_matrix(m, zdg::MatrixFormat::csv) == zdg::to_csv(m));
    CHECK(zdg::export_matrix(m, zdg::MatrixFormat::dot) == zdg::to_dot(m));
}

TEST_CASE("convention names") {
    CHECK(std::string(zdg::to_string(zdg::Convention::paper_loops)) == "paper");
    CHECK(std::string(zdg::to_string(zdg::Convention::simple)) == "simple");
}
