#pragma once

// Exact spectra of Cayley graphs of 2-groups via characters, the Hadamard
// closed form, and the Hoffman lower bound.
//
// For a Cayley graph with connection set C, the character chi_S contributes
// the eigenvalue sum_{c in C} chi_S(c); running S over all masks is a
// Walsh-Hadamard transform of the indicator of C.  For the even component of
// a Hadamard graph the eigenvalue depends only on the weight r of the
// character's canonical mask:
//
//   lambda(r) = 0                                               (r odd)
//   lambda(r) = (-1)^{r/2} r! (N-r)! / ((N/2)! (r/2)! ((N-r)/2)!)  (r even)
//
// realized with multiplicity binom(N-1, r).  lambda(0) = binom(N, N/2) is the
// degree and the maximum; the minimum -binom(N, N/2)/(N-1) is attained at
// r = N-2 (and, by the r <-> N-r symmetry, at r = 2).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchrom/arith.hpp"
#include "qchrom/graph.hpp"

namespace qchrom {

// Multiset of (eigenvalue, multiplicity), descending by eigenvalue.
struct Spectrum {
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [v, m] : entries) t += m;
        return t;
    }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

inline Spectrum make_spectrum(const std::map<std::int64_t, std::int64_t>& hist) {
    Spectrum s;
    s.entries.reserve(hist.size());
    for (auto it = hist.rbegin(); it != hist.rend(); ++it)
        s.entries.emplace_back(it->first, it->second);
    return s;
}

inline std::int64_t spectrum_trace(const Spectrum& s) {
    std::int64_t t = 0;
    for (const auto& [v, m] : s.entries) t += v * m;
    return t;
}

inline std::int64_t spectrum_second_moment(const Spectrum& s) {
    __int128 t = 0;
    for (const auto& [v, m] : s.entries) t += static_cast<__int128>(v) * v * m;
    if (t > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("spectrum second moment exceeds 64 bits");
    return static_cast<std::int64_t>(t);
}

// Eigenvalues of the Cayley graph for every character mask at once: a
// Walsh-Hadamard transform of the connection-set indicator, O(2^k k).
inline Spectrum spectrum_by_characters(const CayleyGraphSpec& spec) {
    if (spec.group_dim < 1 || spec.group_dim > 24)
        throw std::invalid_argument("character-transform spectrum capped at group dimension 24");
    const std::size_t n = std::size_t{1} << spec.group_dim;
    std::vector<std::int64_t> f(n, 0);
    for (const std::uint64_t c : spec.connection.elements) {
        if (c == 0 || (c & ~word_mask(spec.group_dim)))
            throw std::invalid_argument("invalid connection set element");
        f[c] = 1;
    }
    for (std::size_t h = 1; h < n; h <<= 1)
        for (std::size_t i = 0; i < n; i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int64_t a = f[j];
                const std::int64_t b = f[j + h];
                f[j] = a + b;
                f[j + h] = a - b;
            }
    std::map<std::int64_t, std::int64_t> hist;
    for (const std::int64_t v : f) ++hist[v];
    return make_spectrum(hist);
}

// lambda(r) evaluated as (-1)^{r/2} C(r, r/2) C(N-r, (N-r)/2) / C(N/2, r/2);
// the division is exact (same factorial quotient, smaller intermediates).
inline std::int64_t lambda_closed_form(int n, int r) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("closed form requires order divisible by 4, got " +
                                    std::to_string(n));
    if (r < 0 || r > n)
        throw std::invalid_argument("character weight out of range [0, " + std::to_string(n) + "]");
    if (r % 2 != 0) return 0;
    const __int128 num = static_cast<__int128>(binomial(r, r / 2)) * binomial(n - r, (n - r) / 2);
    const std::int64_t den = binomial(n / 2, r / 2);
    if (num % den != 0) throw std::logic_error("lambda closed form: inexact division");
    const std::int64_t v = static_cast<std::int64_t>(num / den);
    return ((r / 2) % 2 != 0) ? -v : v;
}

inline std::pair<std::int64_t, std::int64_t> hadamard_extremes(int n) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("hadamard extremes require order divisible by 4, got " +
                                    std::to_string(n));
    const std::int64_t lmax = binomial(n, n / 2);
    if (lmax % (n - 1) != 0) throw std::logic_error("hadamard extremes: inexact division");
    return {lmax, -lmax / (n - 1)};
}

// Even-component spectrum from the closed form: weight r in 0..N-1 carries
// multiplicity binom(N-1, r).
inline Spectrum hadamard_even_spectrum(int n) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("even-component spectrum requires order divisible by 4");
    std::map<std::int64_t, std::int64_t> hist;
    for (int r = 0; r < n; ++r) hist[lambda_closed_form(n, r)] += binomial(n - 1, r);
    return make_spectrum(hist);
}

// Full-graph spectrum: both components together; weight r in 0..N carries
// multiplicity binom(N, r).
inline Spectrum hadamard_full_spectrum(int n) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("full spectrum requires order divisible by 4");
    std::map<std::int64_t, std::int64_t> hist;
    for (int r = 0; r <= n; ++r) hist[lambda_closed_form(n, r)] += binomial(n, r);
    return make_spectrum(hist);
}

struct HoffmanReport {
    std::int64_t lambda_max = 0;
    std::int64_t lambda_min = 0;
    Rational ratio;               // 1 + lambda_max / |lambda_min|, exact
    std::int64_t integer_bound = 0;  // ceil(ratio); valid since chi_q is an integer
};

inline HoffmanReport hoffman_bound(const Spectrum& s) {
    if (s.entries.empty()) throw std::invalid_argument("hoffman bound: empty spectrum");
    const std::int64_t lmax = s.entries.front().first;
    const std::int64_t lmin = s.entries.back().first;
    if (lmax <= 0 || lmin >= 0)
        throw std::invalid_argument(
            "hoffman bound undefined: spectrum must have a positive maximum and a negative minimum");
    HoffmanReport r;
    r.lambda_max = lmax;
    r.lambda_min = lmin;
    r.ratio = Rational(1) + Rational(lmax, -lmin);
    r.integer_bound = r.ratio.ceil_value();
    return r;
}

}  // namespace qchrom
