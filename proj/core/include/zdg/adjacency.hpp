#pragma once

// Dense adjacency matrices of zero-divisor graphs in canonical block
// layout, plus the block-form predicate and CSV/DOT export.

#include "zdg/class_structure.hpp"
#include "zdg/factorization.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zdg {

// Diagonal convention for the adjacency matrix.
//   paper_loops: A[i][i] = 1 when the vertex squares to zero (x^2 = 0 mod n),
//                matching the published matrices, which keep those loops.
//   simple:      zero diagonal (plain simple-graph adjacency).
enum class Convention {
    paper_loops,
    simple,
};

const char* to_string(Convention convention);

enum class MatrixFormat {
    csv,
    dot,
};

struct AdjacencyMatrix {
    std::size_t order = 0;
    std::vector<std::uint8_t> entries; // row-major, order x order, 0/1
    std::vector<std::uint64_t> labels; // vertex residues, class-major order
    Convention convention = Convention::paper_loops;
    std::uint64_t modulus = 0;

    std::uint8_t at(std::size_t i, std::size_t j) const {
        return entries[i * order + j];
    }
};

// Default cap on the order of any dense matrix this library will build.
constexpr std::size_t kDefaultDenseCap = 5000;

// Ground truth for a single pair: x and y adjacent iff x*y = 0 (mod n),
// with x == y allowed only under paper_loops (the loop case).
// Both arguments must be vertices (nonzero zero divisors).
bool adjacency_oracle(std::uint64_t x, std::uint64_t y,
                      const FactoredModulus& fm, Convention convention);

// Dense adjacency in class-major vertex order (classes in cs.classes
// order, members ascending inside each class).
// Throws size_cap_error when the order exceeds dense_cap.
AdjacencyMatrix build_adjacency(const ClassStructure& cs, Convention convention,
                                std::size_t dense_cap = kDefaultDenseCap);

// Expected coarse structure of the matrix: per-class sizes plus, for every
// class pair, whether the corresponding block is all-ones or all-zeros.
struct BlockSpec {
    std::vector<std::size_t> class_sizes;
    // joined[i*k + j]: classes i and j fully joined (off-diagonal blocks,
    // and the off-diagonal part of the i == j block).
    std::vector<std::uint8_t> joined;
    // looped[i]: class i squares to zero; its diagonal block is all-ones
    // under paper_loops and ones-minus-identity under simple.
    std::vector<std::uint8_t> looped;
};

// The block structure implied by the class decomposition (any form).
BlockSpec canonical_block_spec(const ClassStructure& cs);

// Check a matrix entry-by-entry against a block spec, honoring the
// matrix's diagonal convention. Also fails if sizes are inconsistent.
bool check_block_form(const AdjacencyMatrix& matrix, const BlockSpec& spec);

// CSV: first line is the vertex labels, then one 0/1 row per vertex.
std::string to_csv(const AdjacencyMatrix& matrix);

// DOT: undirected graph, vertex lines then edge lines (i <= j order);
// loops appear only under paper_loops.
std::string to_dot(const AdjacencyMatrix& matrix);

std::string export_matrix(const AdjacencyMatrix& matrix, MatrixFormat format);

} // namespace zdg
