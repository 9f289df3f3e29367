#include "zdg/distances.hpp"

#include "zdg/adjacency.hpp"
#include "zdg/class_structure.hpp"
#include "zdg/errors.hpp"
#include "zdg/factorization.hpp"

#include <doctest.h>

#include <cstdint>
#include <vector>

namespace {

zdg::ClassStructure cs_for(std::uint64_t n) {
    return zdg::class_partition(zdg::factorize(n));
}

zdg::DistanceMatrix distances_for(std::uint64_t n, zdg::Convention convention) {
    const auto cs = cs_for(n);
    return zdg::bfs_distances(zdg::build_adjacency(cs, convention));
}

} // namespace

TEST_CASE("BFS distances on Z_8") {
    // Vertex order [2, 6, 4]: 2 and 6 meet only through 4.
    const auto d = distances_for(8, zdg::Convention::paper_loops);
    REQUIRE(d.order == 3);
    const std::vector<std::int32_t> expected = {
        0, 2, 1,
        2, 0, 1,
        1, 1, 0,
    };
    CHECK(d.dist == expected);
    CHECK(d.diameter == 2);
    CHECK(d.connected());
    CHECK(zdg::wiener_index(d) == 4);
}

TEST_CASE("distances ignore loops") {
    for (const auto n : {8u, 12u, 27u, 36u}) {
        CAPTURE(n);
        const auto paper = distances_for(n, zdg::Convention::paper_loops);
        const auto simple = distances_for(n, zdg::Convention::simple);
        CHECK(paper.dist == simple.dist);
        CHECK(paper.diameter == simple.diameter);
    }
}

TEST_CASE("brute-force Wiener indices") {
    struct Expected {
        std::uint64_t n;
        std::int64_t wiener;
        std::int32_t diameter;
    };
    const std::vector<Expected> cases = {
        {8, 4, 2},
        {12, 38, 3},
        {18, 109, 3},
        {27, 43, 2},
    };
    for (const auto& c : cases) {
        CAPTURE(c.n);
        const auto d = distances_for(c.n, zdg::Convention::paper_loops);
        CHECK(zdg::wiener_index(d) == c.wiener);
        CHECK(d.diameter == c.diameter);
    }

    SUBCASE("single vertex of Z_4") {
        const auto d = distances_for(4, zdg::Convention::paper_loops);
        REQUIRE(d.order == 1);
        CHECK(d.at(0, 0) == 0);
        CHECK(d.diameter == 0);
        CHECK(zdg::wiener_index(d) == 0);
    }
}

TEST_CASE("closed-form Wiener for Z_p^3") {
    CHECK(zdg::wiener_closed_p3(2) == 4);
    CHECK(zdg::wiener_closed_p3(3) == 43);
    CHECK(zdg::wiener_closed_p3(5) == 466);
    CHECK(zdg::wiener_closed_p3(7) == 1989);

    SUBCASE("closed form equals BFS") {
        for (const std::uint64_t p : {2ull, 3ull, 5ull}) {
            CAPTURE(p);
            const auto d = distances_for(p * p * p, zdg::Convention::paper_loops);
            CHECK(zdg::wiener_index(d) == zdg::wiener_closed_p3(p));
        }
    }

    SUBCASE("input validation") {
        CHECK_THROWS_AS(zdg::wiener_closed_p3(6), zdg::domain_error);
        CHECK_THROWS_AS(zdg::wiener_closed_p3(2147483647ull), zdg::overflow_error);
    }
}

TEST_CASE("printed closed form for Z_p^2q") {
    // Evaluated exactly as printed; (2,3) famously disagrees with BFS.
    CHECK(zdg::wiener_paper_p2q(2, 3) == 34);
    CHECK(zdg::wiener_paper_p2q(3, 2) == 97);
    CHECK(zdg::wiener_paper_p2q(2, 5) == 94);
    CHECK(zdg::wiener_paper_p2q(5, 2) == 766);

    SUBCASE("input validation") {
        CHECK_THROWS_AS(zdg::wiener_paper_p2q(4, 3), zdg::domain_error);
        CHECK_THROWS_AS(zdg::wiener_paper_p2q(3, 3), zdg::domain_error);
    }
}

TEST_CASE("disconnected graphs are reported, not summed") {
    zdg::AdjacencyMatrix isolated;
    isolated.order = 2;
    isolated.entries = {0, 0, 0, 0};
    isolated.labels = {1, 2};
    isolated.convention = zdg::Convention::simple;
    isolated.modulus = 0;

    const auto d = zdg::bfs_distances(isolated);
    CHECK_FALSE(d.connected());
    CHECK(d.at(0, 1) == -1);
    CHECK_THROWS_AS(zdg::wiener_index(d), zdg::disconnected_error);
}

TEST_CASE("class distance table for Z_12") {
    const auto cs = cs_for(12);
    const auto matrix = zdg::build_adjacency(cs, zdg::Convention::paper_loops);
    const auto table = zdg::class_distance_table(cs, matrix);
    REQUIRE(table.class_count == 4);

    // Class order [2, 3, 6, 4]; the 6-class is a singleton, so its
    // within-class distance is absent.
    const std::vector<std::int32_t> expected = {
        2, 3, 1, 2,
        3, 2, 2, 1,
        1, 2, -1, 1,
        2, 1, 1, 2,
    };
    CHECK(table.entries == expected);
    CHECK(zdg::wiener_from_class_table(cs, table) == 38);
}

TEST_CASE("class distance table for Z_27") {
    const auto cs = cs_for(27);
    const auto table = zdg::class_distance_table(
        cs, zdg::build_adjacency(cs, zdg::Convention::paper_loops));
    REQUIRE(table.class_count == 2);
    const std::vector<std::int32_t> expected = {
        2, 1,
        1, 1,
    };
    CHECK(table.entries == expected);
    CHECK(zdg::wiener_from_class_table(cs, table) == 43);
}

TEST_CASE("class distance table for Z_8") {
    const auto cs = cs_for(8);
    const auto table = zdg::class_distance_table(
        cs, zdg::build_adjacency(cs, zdg::Convention::simple));
    REQUIRE(table.class_count == 2);
    CHECK(table.at(0, 0) == 2);
    CHECK(table.at(0, 1) == 1);
    CHECK(table.at(1, 1) == -1);
    CHECK(zdg::wiener_from_class_table(cs, table) == 4);
}

TEST_CASE("table construction rejects nonuniform distances") {
    const auto cs = cs_for(12);
    auto d = zdg::bfs_distances(zdg::build_adjacency(cs, zdg::Convention::paper_loops));
    // Vertices 0 and 2 sit in different classes with other representatives,
    // so perturbing this one pair makes the (A, B) distance nonuniform.
    d.dist[0 * d.order + 2] = 1;
    d.dist[2 * d.order + 0] = 1;
    CHECK_THROWS_AS(zdg::class_distance_table(cs, d), zdg::nonuniform_distance_error);
}

TEST_CASE("table construction rejects order mismatches") {
    const auto cs = cs_for(12);
    const auto d = distances_for(8, zdg::Convention::paper_loops);
    CHECK_THROWS_AS(zdg::class_distance_table(cs, d), zdg::domain_error);
}

TEST_CASE("distances satisfy the triangle inequality") {
    for (const auto n : {12u, 18u, 27u, 30u, 100u}) {
        CAPTURE(n);
        const auto d = distances_for(n, zdg::Convention::paper_loops);
        for (std::size_t i = 0; i < d.order; ++i) {
            for (std::size_t j = 0; j < d.order; ++j) {
                for (std::size_t k = 0; k < d.order; ++k) {
                    REQUIRE(d.at(i, j) <= d.at(i, k) + d.at(k, j));
                }
            }
        }
    }
}

TEST_CASE("class table reconstruction matches BFS across both special forms") {
    for (const auto n : {8u, 12u, 18u, 20u, 27u, 45u, 50u, 125u}) {
        CAPTURE(n);
        const auto cs = cs_for(n);
        const auto matrix = zdg::build_adjacency(cs, zdg::Convention::paper_loops);
        const auto d = zdg::bfs_distances(matrix);
        const auto table = zdg::class_distance_table(cs, d);
        CHECK(zdg::wiener_from_class_table(cs, table) == zdg::wiener_index(d));
    }
}
