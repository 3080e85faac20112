#pragma once

// The explicit N-color quantum coloring strategy for Hadamard graphs of
// order N (N divisible by 4), and its numerical verification.
//
// Alice's measurement for vertex x (an N-bit word read in the 0/1
// convention) and color alpha is the rank-one projector E_x^alpha onto
//
//     v_j = omega^{j alpha} (-1)^{x_j} / sqrt(N),   omega = exp(2 pi i / N).
//
// The projectors for the N colors sum to the identity.  Bob measures the
// entrywise conjugates.  With the maximally entangled state
// |psi> = (1/sqrt N) sum_j |j>|j>, the correlation factors into a closed
// form:
//
//     p(alpha, beta | x, y) = |S|^2 / N^3,
//     S = sum_l omega^{l (alpha - beta)} (-1)^{x_l + y_l},
//
// which vanishes on adjacent vertices with equal colors (half the signs
// flip) and on equal vertices with distinct colors (full root-of-unity sum).
// verification compares this closed form against a literal tensor
// contraction <psi| E_x^alpha (x) conj(E_y^beta) |psi> and checks the PVM
// conditions vertex by vertex.
//
// Note E_x^alpha is invariant under complementing x (the vector flips sign
// globally), so the two Hadamard vertex conventions give the same strategy.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchrom/graph.hpp"
#include "qchrom/group.hpp"
#include "qchrom/parallel.hpp"

namespace qchrom {

// Phase omega^numerator with omega = exp(2 pi i k / n), computed from the
// reduced exponent so repeated multiplication never accumulates drift.
inline std::complex<double> root_phase(long long numerator, int n) {
    long long e = numerator % n;
    if (e < 0) e += n;
    if (e == 0) return {1.0, 0.0};
    const double angle = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

namespace detail {

inline void check_strategy_order(int n) {
    if (n <= 0) throw std::invalid_argument("strategy order must be positive");
    if (n % 4 != 0)
        throw std::invalid_argument("coloring strategy requires order divisible by 4, got " +
                                    std::to_string(n));
    if (n > 64) throw std::invalid_argument("strategy materialization capped at n = 64");
}

inline void check_vertex(int n, const GroupElement& x) {
    if (x.length != n)
        throw std::invalid_argument("vertex word length " + std::to_string(x.length) +
                                    " does not match strategy order " + std::to_string(n));
}

inline void check_color(int n, int color) {
    if (color < 0 || color >= n)
        throw std::invalid_argument("color out of range [0, " + std::to_string(n) + ")");
}

}  // namespace detail

struct MeasurementVector {
    std::vector<std::complex<double>> coords;
    GroupElement vertex;
    int color = 0;
};

inline MeasurementVector measurement_vector(int n, const GroupElement& x, int color,
                                            int root_power = 1) {
    detail::check_strategy_order(n);
    detail::check_vertex(n, x);
    detail::check_color(n, color);
    MeasurementVector v{std::vector<std::complex<double>>(static_cast<std::size_t>(n)), x, color};
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) {
        const double sign = ((x.bits >> j) & 1) ? -1.0 : 1.0;
        v.coords[static_cast<std::size_t>(j)] =
            root_phase(static_cast<long long>(root_power) * j * color, n) * (sign * scale);
    }
    return v;
}

struct ColorProjector {
    Eigen::MatrixXcd matrix;
    GroupElement vertex;
    int color = 0;
};

inline ColorProjector color_projector(int n, const GroupElement& x, int color, int root_power = 1) {
    const MeasurementVector mv = measurement_vector(n, x, color, root_power);
    Eigen::VectorXcd v(n);
    for (int j = 0; j < n; ++j) v(j) = mv.coords[static_cast<std::size_t>(j)];
    return {v * v.adjoint(), x, color};
}

// The N projectors for vertex x; they sum to the identity when the root is
// primitive.
inline std::vector<ColorProjector> build_pvm(int n, const GroupElement& x, int root_power = 1) {
    detail::check_strategy_order(n);
    detail::check_vertex(n, x);
    std::vector<ColorProjector> pvm;
    pvm.reserve(static_cast<std::size_t>(n));
    for (int color = 0; color < n; ++color) pvm.push_back(color_projector(n, x, color, root_power));
    return pvm;
}

// Closed-form correlation p(alpha, beta | x, y) = |S|^2 / N^3.
inline double correlation(int n, const GroupElement& x, const GroupElement& y, int alpha, int beta,
                          int root_power = 1) {
    detail::check_strategy_order(n);
    detail::check_vertex(n, x);
    detail::check_vertex(n, y);
    detail::check_color(n, alpha);
    detail::check_color(n, beta);
    std::complex<double> s{0.0, 0.0};
    const std::uint64_t flips = x.bits ^ y.bits;
    const long long diff = static_cast<long long>(root_power) * (alpha - beta);
    for (int l = 0; l < n; ++l) {
        const double sign = ((flips >> l) & 1) ? -1.0 : 1.0;
        s += root_phase(diff * l, n) * sign;
    }
    return std::norm(s) / (static_cast<double>(n) * n * n);
}

// Independent oracle: materializes the projector pair, the maximally
// entangled state as a length-N^2 vector, and contracts the Kronecker
// product entry by entry.
inline std::complex<double> correlation_oracle_value(int n, const GroupElement& x,
                                                     const GroupElement& y, int alpha, int beta,
                                                     int root_power = 1) {
    if (n > 32) throw std::invalid_argument("correlation oracle capped at n = 32");
    const Eigen::MatrixXcd a = color_projector(n, x, alpha, root_power).matrix;
    const Eigen::MatrixXcd b = color_projector(n, y, beta, root_power).matrix.conjugate();
    const int dim = n * n;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) psi(j * n + j) = scale;
    std::complex<double> value{0.0, 0.0};
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            value += std::conj(psi(r)) * a(r / n, c / n) * b(r % n, c % n) * psi(c);
    return value;
}

inline double correlation_oracle(int n, const GroupElement& x, const GroupElement& y, int alpha,
                                 int beta, int root_power = 1) {
    return correlation_oracle_value(n, x, y, alpha, beta, root_power).real();
}

struct Sampling {
    bool exhaustive = true;
    long long count = 0;
    std::uint64_t seed = 0;

    static Sampling exhaustive_mode() { return {true, 0, 0}; }
    static Sampling sampled(long long count, std::uint64_t seed) { return {false, count, seed}; }
};

struct StrategyOptions {
    int root_power = 1;
    double tolerance = 1e-9;
};

struct StrategyReport {
    int n = 0;
    Sampling sampling;
    double tolerance = 1e-9;
    double max_completeness_residual = 0.0;  // ||sum_alpha E_x^alpha - I||_F over checked x
    double max_projection_residual = 0.0;    // max ||E^2 - E||_F over checked (x, alpha)
    double max_adjacent_violation = 0.0;     // max p(alpha, alpha | x, y) over checked x ~ y
    double max_synchronous_violation = 0.0;  // max p(alpha, beta | x, x) over checked alpha != beta
    long long pairs_checked = 0;
    bool pass = false;
};

namespace detail {

inline std::uint64_t random_word(int n, std::mt19937_64& rng) { return rng() & word_mask(n); }

inline std::uint64_t random_word_of_weight(int n, int w, std::mt19937_64& rng) {
    int idx[64];
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::uint64_t word = 0;
    for (int i = 0; i < w; ++i) {
        const int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i));
        std::swap(idx[i], idx[j]);
        word |= std::uint64_t{1} << idx[i];
    }
    return word;
}

inline void pvm_residuals(int n, const GroupElement& x, int root_power, double& completeness,
                          double& projection) {
    const std::vector<ColorProjector> pvm = build_pvm(n, x, root_power);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
    for (const ColorProjector& p : pvm) {
        sum += p.matrix;
        const double res = (p.matrix * p.matrix - p.matrix).norm();
        if (res > projection) projection = res;
    }
    const double res = (sum - Eigen::MatrixXcd::Identity(n, n)).norm();
    if (res > completeness) completeness = res;
}

}  // namespace detail

// Checks all four winning-strategy conditions.  Exhaustive mode walks every
// ordered vertex pair (adjacent pairs feed the coloring condition, equal
// pairs the synchronicity condition); sampled mode draws `count` tuples from
// the given seed.  Failures are reported, never thrown.
inline StrategyReport verify_strategy(int n, const Sampling& sampling,
                                      const StrategyOptions& opt = {}) {
    detail::check_strategy_order(n);
    StrategyReport rep;
    rep.n = n;
    rep.sampling = sampling;
    rep.tolerance = opt.tolerance;

    const int budget = thread_budget();

    if (sampling.exhaustive) {
        if (n > 8)
            throw std::invalid_argument("exhaustive verification capped at n = 8; use sampling");
        const long long nv = 1LL << n;
        for (long long x = 0; x < nv; ++x)
            detail::pvm_residuals(n, GroupElement{static_cast<std::uint64_t>(x), n}, opt.root_power,
                                  rep.max_completeness_residual, rep.max_projection_residual);

        std::vector<double> adj(static_cast<std::size_t>(budget), 0.0);
        std::vector<double> sync(static_cast<std::size_t>(budget), 0.0);
        for_each_chunk(nv, budget, [&](int chunk, long long lo, long long hi) {
            double worst_adj = 0.0;
            double worst_sync = 0.0;
            for (long long xi = lo; xi < hi; ++xi) {
                const GroupElement x{static_cast<std::uint64_t>(xi), n};
                for (long long yi = 0; yi < nv; ++yi) {
                    const GroupElement y{static_cast<std::uint64_t>(yi), n};
                    const int d = std::popcount(x.bits ^ y.bits);
                    if (d == n / 2) {
                        for (int a = 0; a < n; ++a) {
                            const double p = correlation(n, x, y, a, a, opt.root_power);
                            if (p > worst_adj) worst_adj = p;
                        }
                    } else if (yi == xi) {
                        for (int a = 0; a < n; ++a)
                            for (int b = 0; b < n; ++b) {
                                if (a == b) continue;
                                const double p = correlation(n, x, x, a, b, opt.root_power);
                                if (p > worst_sync) worst_sync = p;
                            }
                    }
                }
            }
            adj[static_cast<std::size_t>(chunk)] = worst_adj;
            sync[static_cast<std::size_t>(chunk)] = worst_sync;
        });
        for (const double v : adj)
            if (v > rep.max_adjacent_violation) rep.max_adjacent_violation = v;
        for (const double v : sync)
            if (v > rep.max_synchronous_violation) rep.max_synchronous_violation = v;
        rep.pairs_checked = nv * nv;
    } else {
        if (sampling.count < 1) throw std::invalid_argument("sample count must be positive");
        std::mt19937_64 rng(sampling.seed);

        // PVM conditions at up to 256 sampled vertices.
        const long long nv_checked = std::min<long long>(n >= 63 ? 256 : (1LL << n), 256);
        for (long long i = 0; i < nv_checked; ++i)
            detail::pvm_residuals(n, GroupElement{detail::random_word(n, rng), n}, opt.root_power,
                                  rep.max_completeness_residual, rep.max_projection_residual);

        struct Tuple {
            std::uint64_t x, y;
            int alpha, beta;
            bool adjacent;
        };
        const long long half = (sampling.count + 1) / 2;
        std::vector<Tuple> tuples;
        tuples.reserve(static_cast<std::size_t>(sampling.count));
        for (long long i = 0; i < half; ++i) {
            const std::uint64_t x = detail::random_word(n, rng);
            const std::uint64_t c = detail::random_word_of_weight(n, n / 2, rng);
            const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            tuples.push_back({x, x ^ c, a, a, true});
        }
        for (long long i = half; i < sampling.count; ++i) {
            const std::uint64_t x = detail::random_word(n, rng);
            const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            if (b >= a) ++b;
            tuples.push_back({x, x, a, b, false});
        }

        std::vector<double> adj(static_cast<std::size_t>(budget), 0.0);
        std::vector<double> sync(static_cast<std::size_t>(budget), 0.0);
        for_each_chunk(static_cast<long long>(tuples.size()), budget,
                       [&](int chunk, long long lo, long long hi) {
                           double worst_adj = 0.0;
                           double worst_sync = 0.0;
                           for (long long i = lo; i < hi; ++i) {
                               const Tuple& t = tuples[static_cast<std::size_t>(i)];
                               const double p =
                                   correlation(n, GroupElement{t.x, n}, GroupElement{t.y, n},
                                               t.alpha, t.beta, opt.root_power);
                               if (t.adjacent) {
                                   if (p > worst_adj) worst_adj = p;
                               } else if (p > worst_sync) {
                                   worst_sync = p;
                               }
                           }
                           adj[static_cast<std::size_t>(chunk)] = worst_adj;
                           sync[static_cast<std::size_t>(chunk)] = worst_sync;
                       });
        for (const double v : adj)
            if (v > rep.max_adjacent_violation) rep.max_adjacent_violation = v;
        for (const double v : sync)
            if (v > rep.max_synchronous_violation) rep.max_synchronous_violation = v;
        rep.pairs_checked = sampling.count;
    }

    rep.pass = rep.max_completeness_residual <= opt.tolerance &&
               rep.max_projection_residual <= opt.tolerance &&
               rep.max_adjacent_violation <= opt.tolerance &&
               rep.max_synchronous_violation <= opt.tolerance;
    return rep;
}

// Block-diagonal color operators P_alpha = diag(E_{x_1}^alpha, ...,
// E_{x_n}^alpha) over the graph's vertex words, with the operator-space
// coloring conditions checked literally: sum_alpha P_alpha = I and
// P_alpha (E_{x,y} (x) I_N) P_alpha = 0 for every edge.
struct BlockDiagonalPvm {
    std::vector<Eigen::MatrixXcd> operators;
    double completeness_residual = 0.0;
    double max_edge_residual = 0.0;
    bool pass = false;
};

inline BlockDiagonalPvm build_color_pvm_blockdiag(int n_colors, const DenseGraph& g,
                                                  int root_power = 1, double tol = 1e-10) {
    detail::check_strategy_order(n_colors);
    if (!g.has_labels()) throw std::invalid_argument("block PVM requires vertex labels");
    if (g.labels().front().length != n_colors)
        throw std::invalid_argument("vertex word length must equal the color count");
    const int nv = g.size();
    const long long dim = static_cast<long long>(nv) * n_colors;
    if (dim > 4096) throw std::invalid_argument("block PVM materialization capped at 4096");

    // Strategy vertices read in the 0/1 convention.
    const DenseGraph graph01 = convert_convention(g, Convention::zero_one);

    BlockDiagonalPvm out;
    out.operators.reserve(static_cast<std::size_t>(n_colors));
    for (int alpha = 0; alpha < n_colors; ++alpha) {
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
        for (int v = 0; v < nv; ++v)
            p.block(v * n_colors, v * n_colors, n_colors, n_colors) =
                color_projector(n_colors, graph01.labels()[static_cast<std::size_t>(v)], alpha,
                                root_power)
                    .matrix;
        out.operators.push_back(std::move(p));
    }

    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    for (const Eigen::MatrixXcd& p : out.operators) sum += p;
    out.completeness_residual = (sum - Eigen::MatrixXcd::Identity(dim, dim)).norm();

    for (const auto& [u, v] : g.edges()) {
        for (const auto& [x, y] : {std::pair<int, int>{u, v}, std::pair<int, int>{v, u}}) {
            Eigen::MatrixXcd exy = Eigen::MatrixXcd::Zero(nv, nv);
            exy(x, y) = 1.0;
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
            for (int r = 0; r < nv; ++r)
                for (int c = 0; c < nv; ++c)
                    if (exy(r, c) != std::complex<double>{0.0, 0.0})
                        m.block(r * n_colors, c * n_colors, n_colors, n_colors) =
                            exy(r, c) * Eigen::MatrixXcd::Identity(n_colors, n_colors);
            for (const Eigen::MatrixXcd& p : out.operators) {
                const double res = (p * m * p).norm();
                if (res > out.max_edge_residual) out.max_edge_residual = res;
            }
        }
    }

    out.pass = out.completeness_residual <= tol && out.max_edge_residual <= tol;
    return out;
}

}  // namespace qchrom
