#pragma once

// Brute-force spectral oracle: dense symmetric eigendecomposition of the
// adjacency matrix, with eigenvalues clustered into multiplicities.  Used to
// cross-check every exact spectral route in this library.
//
// The solver is LAPACK's divide-and-conquer driver dsyevd; Eigen's QR
// iteration stalls on adjacency matrices with very large eigenvalue
// multiplicities (e.g. lexicographic Hadamard products).

#include <Eigen/Dense>
#include <lapacke.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qchrom/graph.hpp"
#include "qchrom/spectrum.hpp"

namespace qchrom {

struct FloatSpectrum {
    std::vector<std::pair<double, std::int64_t>> entries;  // descending by value

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [v, m] : entries) t += m;
        return t;
    }
};

inline Eigen::MatrixXd adjacency_matrix(const DenseGraph& g) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.size(), g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (g.adjacent(i, j)) a(i, j) = 1.0;
    return a;
}

// tol <= 0 selects the default gap threshold 1e-6 * max(1, ||A||_1).
inline FloatSpectrum dense_spectrum(const DenseGraph& g, double tol = 0.0) {
    if (g.size() > 4096) throw std::invalid_argument("dense spectrum capped at 4096 vertices");
    for (int i = 0; i < g.size(); ++i) {
        if (g.adjacent(i, i)) throw std::invalid_argument("invariant violation: nonzero diagonal");
        for (int j = i + 1; j < g.size(); ++j)
            if (g.adjacent(i, j) != g.adjacent(j, i))
                throw std::invalid_argument("invariant violation: adjacency not symmetric");
    }
    Eigen::MatrixXd a = adjacency_matrix(g);
    if (tol <= 0.0) {
        const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
        tol = 1e-6 * std::max(1.0, norm1);
    }
    const int n = static_cast<int>(a.rows());
    std::vector<double> ev(static_cast<std::size_t>(n));  // ascending
    const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'U', n, a.data(), n, ev.data());
    if (info != 0) throw std::runtime_error("eigensolver failed: dsyevd info " + std::to_string(info));

    FloatSpectrum s;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || ev[static_cast<std::size_t>(i)] - ev[static_cast<std::size_t>(i - 1)] > tol) {
            double mean = 0.0;
            for (int k = start; k < i; ++k) mean += ev[static_cast<std::size_t>(k)];
            mean /= (i - start);
            s.entries.emplace_back(mean, i - start);
            start = i;
        }
    }
    std::reverse(s.entries.begin(), s.entries.end());
    return s;
}

// Multiset comparison: same cluster count, multiplicities equal, each
// floating eigenvalue within value_tol of its exact partner.
inline bool spectra_match(const Spectrum& exact, const FloatSpectrum& oracle, double value_tol) {
    if (exact.entries.size() != oracle.entries.size()) return false;
    for (std::size_t i = 0; i < exact.entries.size(); ++i) {
        if (exact.entries[i].second != oracle.entries[i].second) return false;
        if (std::abs(static_cast<double>(exact.entries[i].first) - oracle.entries[i].first) > value_tol)
            return false;
    }
    return true;
}

}  // namespace qchrom
