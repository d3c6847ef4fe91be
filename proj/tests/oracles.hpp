#pragma once

// Test-only reference computations. Nothing here calls into the library's
// solvers: exact rational elimination, a full-pivot Gauss-Jordan in double,
// and a brute-force walk enumerator.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "infrank/dense_matrix.hpp"
#include "infrank/graph.hpp"

namespace infrank::oracle {

using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix rational_row_normalize(const std::vector<std::vector<int>>& a) {
    const std::size_t n = a.size();
    RationalMatrix w(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        int od = 0;
        for (int x : a[i]) od += x;
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(a[i][j], od);
    }
    return w;
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
inline RationalMatrix rational_inverse(RationalMatrix m) {
    const std::size_t n = m.size();
    RationalMatrix inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) throw std::runtime_error("oracle: singular matrix");
        std::swap(m[p], m[k]);
        std::swap(inv[p], inv[k]);
        const Rational pivot = m[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            m[k][j] /= pivot;
            inv[k][j] /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            const Rational f = m[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

/// Exact V = (1 - alpha)(I - alpha W)^{-1}.
inline RationalMatrix rational_influence(const RationalMatrix& w, const Rational& alpha) {
    const std::size_t n = w.size();
    RationalMatrix m(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? 1 : 0) - alpha * w[i][j];
    }
    RationalMatrix v = rational_inverse(std::move(m));
    for (auto& row : v) {
        for (auto& x : row) x *= (1 - alpha);
    }
    return v;
}

/// Exact column sums of V (the unnormalized centrality).
inline std::vector<Rational> rational_column_sums(const RationalMatrix& v) {
    std::vector<Rational> c(v.size(), 0);
    for (const auto& row : v) {
        for (std::size_t j = 0; j < row.size(); ++j) c[j] += row[j];
    }
    return c;
}

/// Gauss-Jordan inverse with full pivoting in double precision.
inline DenseMatrix full_pivot_inverse(DenseMatrix m) {
    const std::size_t n = m.rows();
    DenseMatrix inv = DenseMatrix::identity(n);
    std::vector<std::size_t> col_perm(n);
    for (std::size_t i = 0; i < n; ++i) col_perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = k, pc = k;
        double best = -1.0;
        for (std::size_t i = k; i < n; ++i) {
            for (std::size_t j = k; j < n; ++j) {
                if (std::abs(m(i, j)) > best) {
                    best = std::abs(m(i, j));
                    pr = i;
                    pc = j;
                }
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m(k, j), m(pr, j));
            std::swap(inv(k, j), inv(pr, j));
        }
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, pc));
        std::swap(col_perm[k], col_perm[pc]);
        const double pivot = m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) /= pivot;
            inv(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const double f = m(i, k);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    // Column swaps on A permute the rows of A^{-1}.
    DenseMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) out(col_perm[k], j) = inv(k, j);
    }
    return out;
}

inline DenseMatrix oracle_influence(const DenseMatrix& w, double alpha) {
    const std::size_t n = w.rows();
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? 1.0 : 0.0) - alpha * w(i, j);
    }
    DenseMatrix v = full_pivot_inverse(std::move(m));
    for (double& x : v.data()) x *= 1.0 - alpha;
    return v;
}

/// Sum over all walks i = v0 -> v1 -> ... -> vl = j with l <= max_length of
/// alpha^l * prod w(v_t, v_t+1), by explicit depth-first enumeration.
inline double walk_mass(const DenseMatrix& w, double alpha, std::size_t from, std::size_t to,
                        std::size_t max_length) {
    const std::size_t n = w.rows();
    double total = 0.0;
    auto visit = [&](auto&& self, std::size_t node, std::size_t length, double weight) -> void {
        if (node == to) total += weight;
        if (length == max_length) return;
        for (std::size_t next = 0; next < n; ++next) {
            const double step = w(node, next);
            if (step != 0.0) self(self, next, length + 1, weight * alpha * step);
        }
    };
    visit(visit, from, 0, 1.0);
    return total;
}

/// mass[l][j]: summed weight alpha^l * prod w over all walks of length
/// exactly l from `from` to j, for l = 0..max_length.
inline std::vector<std::vector<double>> walk_mass_by_length(const DenseMatrix& w, double alpha,
                                                            std::size_t from,
                                                            std::size_t max_length) {
    const std::size_t n = w.rows();
    std::vector<std::vector<double>> mass(max_length + 1, std::vector<double>(n, 0.0));
    auto visit = [&](auto&& self, std::size_t node, std::size_t length, double weight) -> void {
        mass[length][node] += weight;
        if (length == max_length) return;
        for (std::size_t next = 0; next < n; ++next) {
            const double step = w(node, next);
            if (step != 0.0) self(self, next, length + 1, weight * alpha * step);
        }
    };
    visit(visit, from, 0, 1.0);
    return mass;
}

inline DenseMatrix random_row_stochastic(std::size_t n, std::mt19937_64& rng, double density = 0.3) {
    std::uniform_real_distribution<double> value(0.0, 1.0);
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    DenseMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (keep(rng)) {
                w(i, j) = value(rng) + 1e-3;
                sum += w(i, j);
            }
        }
        if (sum == 0.0) {
            const std::size_t j = pick(rng);
            w(i, j) = 1.0;
            sum = 1.0;
        }
        for (std::size_t j = 0; j < n; ++j) w(i, j) /= sum;
    }
    return w;
}

/// Directed Erdos-Renyi graph on labels "v0".."v{n-1}", no self-loops.
inline AdjacencyMatrix erdos_renyi(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution link(p);
    std::vector<std::string> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && link(rng)) edges.emplace_back(nodes[i], nodes[j]);
        }
    }
    return build_adjacency(edges, nodes);
}

/// n-cycle permutation: node i links to node i+1 mod n.
inline DenseMatrix cycle(std::size_t n) {
    DenseMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i) w(i, (i + 1) % n) = 1.0;
    return w;
}

}  // namespace infrank::oracle
