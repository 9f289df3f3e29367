#include "zdg/adjacency.hpp"

#include "zdg/errors.hpp"

#include <numeric>
#include <string>

namespace zdg {

const char* to_string(Convention convention) {
    switch (convention) {
    case Convention::paper_loops: return "paper";
    case Convention::simple: return "simple";
    }
    return "paper";
}

bool adjacency_oracle(std::uint64_t x, std::uint64_t y,
                      const FactoredModulus& fm, Convention convention) {
    const std::uint64_t n = fm.n;
    x %= n;
    y %= n;
    if (x == 0 || y == 0 || std::gcd(x, n) == 1 || std::gcd(y, n) == 1) {
        throw domain_error("adjacency_oracle: arguments must be nonzero zero "
                           "divisors of Z_" + std::to_string(n));
    }
    if (x == y && convention == Convention::simple) return false;
    return mul_mod(x, y, n) == 0;
}

AdjacencyMatrix build_adjacency(const ClassStructure& cs, Convention convention,
                                std::size_t dense_cap) {
    const std::uint64_t n = cs.modulus.n;
    if (cs.total_vertices > dense_cap) {
        throw size_cap_error("dense adjacency for Z_" + std::to_string(n) +
                             " needs order " +
                             std::to_string(cs.total_vertices) +
                             " but the dense cap is " +
                             std::to_string(dense_cap));
    }

    AdjacencyMatrix matrix;
    matrix.order = static_cast<std::size_t>(cs.total_vertices);
    matrix.convention = convention;
    matrix.modulus = n;
    matrix.labels.reserve(matrix.order);
    for (const auto& cls : cs.classes) {
        matrix.labels.insert(matrix.labels.end(), cls.members.begin(),
                             cls.members.end());
    }
    matrix.entries.assign(matrix.order * matrix.order, 0);

    // Class offsets in the vertex order.
    std::vector<std::size_t> offsets(cs.classes.size() + 1, 0);
    for (std::size_t c = 0; c < cs.classes.size(); ++c) {
        offsets[c + 1] = offsets[c] + cs.classes[c].size();
    }

    // x*y = 0 (mod n) depends only on the gcd classes: with x in V_d and
    // y in V_e, n | x*y iff n | d*e, so blocks are all-ones or all-zero.
    for (std::size_t a = 0; a < cs.classes.size(); ++a) {
        for (std::size_t b = a; b < cs.classes.size(); ++b) {
            const bool joined =
                mul_mod(cs.classes[a].divisor, cs.classes[b].divisor, n) == 0;
            if (!joined) continue;
            for (std::size_t i = offsets[a]; i < offsets[a + 1]; ++i) {
                std::uint8_t* row = matrix.entries.data() + i * matrix.order;
                for (std::size_t j = offsets[b]; j < offsets[b + 1]; ++j) {
                    row[j] = 1;
                    matrix.entries[j * matrix.order + i] = 1;
                }
            }
        }
    }
    // Diagonal: a vertex x has x*x = 0 exactly when its class is looped.
    for (std::size_t c = 0; c < cs.classes.size(); ++c) {
        if (!cs.classes[c].looped) continue;
        const std::uint8_t diag =
            convention == Convention::paper_loops ? 1 : 0;
        for (std::size_t i = offsets[c]; i < offsets[c + 1]; ++i) {
            matrix.entries[i * matrix.order + i] = diag;
        }
    }
    // Non-looped classes never join themselves (n | d^2 fails), so their
    // diagonal blocks are already zero.
    return matrix;
}

BlockSpec canonical_block_spec(const ClassStructure& cs) {
    const std::size_t k = cs.classes.size();
    BlockSpec spec;
    spec.class_sizes.resize(k);
    spec.joined.assign(k * k, 0);
    spec.looped.assign(k, 0);
    for (std::size_t a = 0; a < k; ++a) {
        spec.class_sizes[a] = cs.classes[a].size();
        spec.looped[a] = cs.classes[a].looped ? 1 : 0;
        for (std::size_t b = 0; b < k; ++b) {
            spec.joined[a * k + b] =
                mul_mod(cs.classes[a].divisor, cs.classes[b].divisor,
                        cs.modulus.n) == 0
                    ? 1
                    : 0;
        }
    }
    return spec;
}

bool check_block_form(const AdjacencyMatrix& matrix, const BlockSpec& spec) {
    const std::size_t k = spec.class_sizes.size();
    std::size_t total = 0;
    for (std::size_t s : spec.class_sizes) total += s;
    if (total != matrix.order) return false;
    if (spec.joined.size() != k * k || spec.looped.size() != k) return false;

    std::vector<std::size_t> offsets(k + 1, 0);
    for (std::size_t c = 0; c < k; ++c) {
        offsets[c + 1] = offsets[c] + spec.class_sizes[c];
    }

    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            const bool joined = spec.joined[a * k + b] != 0;
            for (std::size_t i = offsets[a]; i < offsets[a + 1]; ++i) {
                for (std::size_t j = offsets[b]; j < offsets[b + 1]; ++j) {
                    std::uint8_t expected;
                    if (i == j) {
                        expected = (spec.looped[a] &&
                                    matrix.convention == Convention::paper_loops)
                                       ? 1
                                       : 0;
                    } else {
                        expected = joined ? 1 : 0;
                    }
                    if (matrix.at(i, j) != expected) return false;
                }
            }
        }
    }
    return true;
}

std::string to_csv(const AdjacencyMatrix& matrix) {
    std::string out;
    out.reserve((matrix.order + 1) * (2 * matrix.order + 1));
    for (std::size_t j = 0; j < matrix.order; ++j) {
        if (j > 0) out.push_back(',');
        out += std::to_string(matrix.labels[j]);
    }
    out.push_back('\n');
    for (std::size_t i = 0; i < matrix.order; ++i) {
        for (std::size_t j = 0; j < matrix.order; ++j) {
            if (j > 0) out.push_back(',');
            out.push_back(matrix.at(i, j) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

std::string to_dot(const AdjacencyMatrix& matrix) {
    std::string out = "graph zdg_" + std::to_string(matrix.modulus) + " {\n";
    for (std::size_t i = 0; i < matrix.order; ++i) {
        out += "  " + std::to_string(matrix.labels[i]) + ";\n";
    }
    for (std::size_t i = 0; i < matrix.order; ++i) {
        for (std::size_t j = i; j < matrix.order; ++j) {
            if (matrix.at(i, j)) {
                out += "  " + std::to_string(matrix.labels[i]) + " -- " +
                       std::to_string(matrix.labels[j]) + ";\n";
            }
        }
    }
    out += "}\n";
    return out;
}

std::string export_matrix(const AdjacencyMatrix& matrix, MatrixFormat format) {
    switch (format) {
    case MatrixFormat::csv: return to_csv(matrix);
    case MatrixFormat::dot: return to_dot(matrix);
    }
    throw domain_error("export_matrix: unknown format");
}

} // namespace zdg
