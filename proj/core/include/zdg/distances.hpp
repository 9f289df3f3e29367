#pragma once

// Shortest-path distances, the Wiener index (brute force and closed
// forms), and the class-level distance table.

#include "zdg/adjacency.hpp"
#include "zdg/class_structure.hpp"

#include <cstdint>
#include <vector>

namespace zdg {

struct DistanceMatrix {
    std::size_t order = 0;
    std::vector<std::int32_t> dist; // row-major; -1 marks unreachable
    std::int32_t diameter = 0;      // max finite distance

    std::int32_t at(std::size_t i, std::size_t j) const {
        return dist[i * order + j];
    }
    bool connected() const;
};

// All-pairs distances by BFS from every vertex. Loops are ignored: only
// off-diagonal adjacency contributes, and dist(v, v) = 0.
DistanceMatrix bfs_distances(const AdjacencyMatrix& matrix);

// Sum of dist(u, v) over unordered pairs u < v.
// Throws disconnected_error if any pair is unreachable.
std::int64_t wiener_index(const DistanceMatrix& distances);

// Closed-form Wiener index of the graph of Z_{p^3}:
//   (p - 1)(2 p^3 - 3 p - 2) / 2.
// Exact integer arithmetic; throws overflow_error if it exceeds 64 bits.
std::int64_t wiener_closed_p3(std::uint64_t p);

// The printed closed form for Z_{p^2 q}:
//   (1/2) [ p^2 (2p^2 - 4p - 1) + p (4p^2 q + 2pq^2 - 8pq - 2q + 5) + 2 ],
// evaluated exactly as printed. Throws integrality_error if the bracket
// is odd and overflow_error past 64 bits. Its agreement with the graph
// is checked by callers, not assumed.
std::int64_t wiener_paper_p2q(std::uint64_t p, std::uint64_t q);

// Distances at class granularity: entry (i, j) is the common distance
// between any vertex of class i and any vertex of class j (i != j), and
// between distinct vertices within class i (i == j). A within-class entry
// is -1 when the class has a single vertex (no distinct pair exists).
struct ClassDistanceTable {
    std::size_t class_count = 0;
    std::vector<std::int32_t> entries; // row-major, class_count^2

    std::int32_t at(std::size_t i, std::size_t j) const {
        return entries[i * class_count + j];
    }
};

// Build the table from per-vertex distances, verifying that the distance
// is constant over every class pair; a violation (impossible for these
// graphs, but checked, not assumed) throws nonuniform_distance_error.
// The matrix must be in the class-major vertex order of cs.
ClassDistanceTable class_distance_table(const ClassStructure& cs,
                                        const DistanceMatrix& distances);

// Convenience overload that runs the BFS itself.
ClassDistanceTable class_distance_table(const ClassStructure& cs,
                                        const AdjacencyMatrix& matrix);

// Wiener index recomputed from class sizes and the class table:
//   sum_{i < j} s_i s_j T_ij + sum_i C(s_i, 2) T_ii.
std::int64_t wiener_from_class_table(const ClassStructure& cs,
                                     const ClassDistanceTable& table);

} // namespace zdg
