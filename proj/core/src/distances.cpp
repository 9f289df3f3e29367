#include "zdg/distances.hpp"

#include "zdg/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace zdg {

bool DistanceMatrix::connected() const {
    for (std::int32_t d : dist) {
        if (d < 0) return false;
    }
    return true;
}

DistanceMatrix bfs_distances(const AdjacencyMatrix& matrix) {
    const std::size_t n = matrix.order;
    DistanceMatrix result;
    result.order = n;
    result.dist.assign(n * n, -1);
    result.diameter = 0;

    // Flattened adjacency lists with loops dropped: the all-pairs pass then
    // touches only real edges, which matters because these block graphs are
    // sparse (edge count linear in n for the two special families).
    std::vector<std::size_t> offsets(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const std::uint8_t* row = matrix.entries.data() + v * n;
        std::size_t degree = 0;
        for (std::size_t w = 0; w < n; ++w) {
            if (row[w] && w != v) ++degree;
        }
        offsets[v + 1] = offsets[v] + degree;
    }
    std::vector<std::uint32_t> neighbors(offsets[n]);
    for (std::size_t v = 0; v < n; ++v) {
        const std::uint8_t* row = matrix.entries.data() + v * n;
        std::size_t at = offsets[v];
        for (std::size_t w = 0; w < n; ++w) {
            if (row[w] && w != v) {
                neighbors[at++] = static_cast<std::uint32_t>(w);
            }
        }
    }

    std::vector<std::size_t> queue(n);
    for (std::size_t source = 0; source < n; ++source) {
        std::int32_t* dist_row = result.dist.data() + source * n;
        std::size_t head = 0, tail = 0;
        dist_row[source] = 0;
        queue[tail++] = source;
        while (head < tail) {
            const std::size_t v = queue[head++];
            const std::int32_t next = dist_row[v] + 1;
            for (std::size_t idx = offsets[v]; idx < offsets[v + 1]; ++idx) {
                const std::size_t w = neighbors[idx];
                if (dist_row[w] < 0) {
                    dist_row[w] = next;
                    result.diameter = std::max(result.diameter, next);
                    queue[tail++] = w;
                }
            }
        }
    }
    return result;
}

std::int64_t wiener_index(const DistanceMatrix& distances) {
    const std::size_t n = distances.order;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::int32_t d = distances.at(i, j);
            if (d < 0) {
                throw disconnected_error(
                    "wiener_index: vertices " + std::to_string(i) + " and " +
                    std::to_string(j) + " are in different components");
            }
            sum += d;
        }
    }
    return sum;
}

namespace {

std::int64_t narrow_to_int64(__int128 value, const char* what) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min()) {
        throw overflow_error(std::string(what) + ": result exceeds 64 bits");
    }
    return static_cast<std::int64_t>(value);
}

void require_prime_arg(std::uint64_t p, const char* where) {
    if (!is_prime(p)) {
        throw domain_error(std::string(where) + ": " + std::to_string(p) +
                           " is not prime");
    }
}

} // namespace

std::int64_t wiener_closed_p3(std::uint64_t p) {
    require_prime_arg(p, "wiener_closed_p3");
    const __int128 pw = static_cast<__int128>(p);
    const __int128 numerator = (pw - 1) * (2 * pw * pw * pw - 3 * pw - 2);
    // 2p^3 - 3p - 2 is even for p = 2 and (p - 1) even for odd p, so the
    // quotient is exact.
    return narrow_to_int64(numerator / 2, "wiener_closed_p3");
}

std::int64_t wiener_paper_p2q(std::uint64_t p, std::uint64_t q) {
    require_prime_arg(p, "wiener_paper_p2q");
    require_prime_arg(q, "wiener_paper_p2q");
    if (p == q) {
        throw domain_error("wiener_paper_p2q: p and q must be distinct");
    }
    const __int128 pw = static_cast<__int128>(p);
    const __int128 qw = static_cast<__int128>(q);
    const __int128 bracket =
        pw * pw * (2 * pw * pw - 4 * pw - 1) +
        pw * (4 * pw * pw * qw + 2 * pw * qw * qw - 8 * pw * qw - 2 * qw + 5) +
        2;
    if (bracket % 2 != 0) {
        throw integrality_error(
            "wiener_paper_p2q: bracket is odd at p = " + std::to_string(p) +
            ", q = " + std::to_string(q));
    }
    return narrow_to_int64(bracket / 2, "wiener_paper_p2q");
}

ClassDistanceTable class_distance_table(const ClassStructure& cs,
                                        const DistanceMatrix& distances) {
    const std::size_t k = cs.classes.size();
    if (distances.order != cs.total_vertices) {
        throw domain_error("class_distance_table: distance matrix order " +
                           std::to_string(distances.order) +
                           " does not match vertex count " +
                           std::to_string(cs.total_vertices));
    }
    std::vector<std::size_t> offsets(k + 1, 0);
    for (std::size_t c = 0; c < k; ++c) {
        offsets[c + 1] = offsets[c] + cs.classes[c].size();
    }

    ClassDistanceTable table;
    table.class_count = k;
    table.entries.assign(k * k, -1);

    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            std::int32_t common = -1;
            bool first = true;
            for (std::size_t i = offsets[a]; i < offsets[a + 1]; ++i) {
                for (std::size_t j = (a == b ? i + 1 : offsets[b]);
                     j < offsets[b + 1]; ++j) {
                    const std::int32_t d = distances.at(i, j);
                    if (first) {
                        common = d;
                        first = false;
                    } else if (d != common) {
                        throw nonuniform_distance_error(
                            "class_distance_table: classes " +
                            std::to_string(cs.classes[a].divisor) + " and " +
                            std::to_string(cs.classes[b].divisor) +
                            " have vertex pairs at distances " +
                            std::to_string(common) + " and " +
                            std::to_string(d));
                    }
                }
            }
            // first stays true only for a == b with a singleton class;
            // the entry stays -1 (no distinct pair).
            table.entries[a * k + b] = common;
            table.entries[b * k + a] = common;
        }
    }
    return table;
}

ClassDistanceTable class_distance_table(const ClassStructure& cs,
                                        const AdjacencyMatrix& matrix) {
    return class_distance_table(cs, bfs_distances(matrix));
}

std::int64_t wiener_from_class_table(const ClassStructure& cs,
                                     const ClassDistanceTable& table) {
    const std::size_t k = cs.classes.size();
    if (table.class_count != k) {
        throw domain_error("wiener_from_class_table: table has " +
                           std::to_string(table.class_count) +
                           " classes, structure has " + std::to_string(k));
    }
    __int128 sum = 0;
    for (std::size_t a = 0; a < k; ++a) {
        const __int128 sa = static_cast<__int128>(cs.classes[a].size());
        const std::int32_t within = table.at(a, a);
        if (within >= 0) {
            sum += sa * (sa - 1) / 2 * within;
        } else if (sa > 1) {
            throw domain_error("wiener_from_class_table: missing within-class "
                               "distance for class " +
                               std::to_string(cs.classes[a].divisor));
        }
        for (std::size_t b = a + 1; b < k; ++b) {
            const std::int32_t between = table.at(a, b);
            if (between < 0) {
                throw disconnected_error(
                    "wiener_from_class_table: classes " +
                    std::to_string(cs.classes[a].divisor) + " and " +
                    std::to_string(cs.classes[b].divisor) +
                    " have no recorded distance");
            }
            sum += sa * static_cast<__int128>(cs.classes[b].size()) * between;
        }
    }
    return narrow_to_int64(sum, "wiener_from_class_table");
}

} // namespace zdg
