#pragma once

// The four standard graph products at the dense-graph and connection-set
// level, product spectra via eigenvalue combination, and Hoffman bounds for
// products of Hadamard graphs.
//
// Over a direct product of 2-groups (first factor in the high bits, so that
// ascending words match g-major row-major vertex order), the product graphs
// are Cayley graphs with connection sets
//
//   categorical    C_G x C_H
//   cartesian      ({e} x C_H) u (C_G x {e})
//   strong         ({e} u C_G) x ({e} u C_H)  minus the identity pair
//   lexicographic  (C_G x Gamma_H) u ({e} x C_H)
//
// and the character pair (chi_G, chi_H) contributes
//
//   categorical    lambda_G lambda_H
//   cartesian      lambda_G + lambda_H
//   strong         lambda_G lambda_H + lambda_G + lambda_H
//   lexicographic  |Gamma_H| lambda_G + |C_H|   (chi_H trivial)
//                  lambda_H                     (chi_H non-trivial)
//
// Bounds are always computed from the realized product spectrum, then fed to
// hoffman_bound; no closed-form min/max labeling is assumed.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchrom/arith.hpp"
#include "qchrom/graph.hpp"
#include "qchrom/spectrum.hpp"

namespace qchrom {

enum class ProductKind { categorical, cartesian, strong, lexicographic };

inline const char* to_string(ProductKind kind) {
    switch (kind) {
        case ProductKind::categorical: return "categorical";
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::strong: return "strong";
        case ProductKind::lexicographic: return "lexicographic";
    }
    return "?";
}

inline ProductKind product_kind_from_string(const std::string& s) {
    if (s == "categorical") return ProductKind::categorical;
    if (s == "cartesian") return ProductKind::cartesian;
    if (s == "strong") return ProductKind::strong;
    if (s == "lexicographic") return ProductKind::lexicographic;
    throw std::invalid_argument("unknown product kind: " + s);
}

// Vertex (i, j) of the product is index i * |V_H| + j.
inline DenseGraph product_graph(const DenseGraph& g, const DenseGraph& h, ProductKind kind) {
    const long long n = static_cast<long long>(g.size()) * h.size();
    if (n > 4096) throw std::invalid_argument("product graph capped at 4096 vertices");
    DenseGraph p(static_cast<int>(n));
    for (int vg = 0; vg < g.size(); ++vg)
        for (int vh = 0; vh < h.size(); ++vh) {
            const int u = vg * h.size() + vh;
            for (int wg = 0; wg < g.size(); ++wg)
                for (int wh = 0; wh < h.size(); ++wh) {
                    const int v = wg * h.size() + wh;
                    if (v <= u) continue;
                    const bool ga = g.adjacent(vg, wg);
                    const bool ha = h.adjacent(vh, wh);
                    const bool geq = vg == wg;
                    const bool heq = vh == wh;
                    bool edge = false;
                    switch (kind) {
                        case ProductKind::categorical: edge = ga && ha; break;
                        case ProductKind::cartesian: edge = (geq && ha) || (ga && heq); break;
                        case ProductKind::strong:
                            edge = (geq && ha) || (ga && heq) || (ga && ha);
                            break;
                        case ProductKind::lexicographic: edge = ga || (geq && ha); break;
                    }
                    if (edge) p.add_edge(u, v);
                }
        }
    return p;
}

inline CayleyGraphSpec product_connection_set(const CayleyGraphSpec& a, const CayleyGraphSpec& b,
                                              ProductKind kind) {
    const int dim = a.group_dim + b.group_dim;
    if (dim > 24) throw std::invalid_argument("product group dimension capped at 24");
    const auto encode = [&](std::uint64_t ca, std::uint64_t cb) {
        return (ca << b.group_dim) | cb;
    };
    std::vector<std::uint64_t> elems;
    switch (kind) {
        case ProductKind::categorical:
            for (const std::uint64_t ca : a.connection.elements)
                for (const std::uint64_t cb : b.connection.elements) elems.push_back(encode(ca, cb));
            break;
        case ProductKind::cartesian:
            for (const std::uint64_t cb : b.connection.elements) elems.push_back(encode(0, cb));
            for (const std::uint64_t ca : a.connection.elements) elems.push_back(encode(ca, 0));
            break;
        case ProductKind::strong: {
            std::vector<std::uint64_t> wa{0}, wb{0};
            wa.insert(wa.end(), a.connection.elements.begin(), a.connection.elements.end());
            wb.insert(wb.end(), b.connection.elements.begin(), b.connection.elements.end());
            for (const std::uint64_t ca : wa)
                for (const std::uint64_t cb : wb)
                    if (ca != 0 || cb != 0) elems.push_back(encode(ca, cb));
            break;
        }
        case ProductKind::lexicographic: {
            const std::uint64_t hsize = std::uint64_t{1} << b.group_dim;
            for (const std::uint64_t ca : a.connection.elements)
                for (std::uint64_t t = 0; t < hsize; ++t) elems.push_back(encode(ca, t));
            for (const std::uint64_t cb : b.connection.elements) elems.push_back(encode(0, cb));
            break;
        }
    }
    return make_cayley_spec(dim, std::move(elems));
}

struct LexParams {
    std::int64_t group_order = 0;      // |Gamma_H|
    std::int64_t connection_size = 0;  // |C_H|, the trivial-character eigenvalue of H
};

inline Spectrum product_spectrum(const Spectrum& sg, const Spectrum& sh, ProductKind kind,
                                 const std::optional<LexParams>& lex = std::nullopt) {
    std::map<std::int64_t, std::int64_t> hist;
    if (kind == ProductKind::lexicographic) {
        if (!lex)
            throw std::invalid_argument("lexicographic product spectrum requires |Gamma_H| and |C_H|");
        if (lex->group_order != sh.total())
            throw std::invalid_argument("|Gamma_H| must equal the total multiplicity of the H spectrum");
        // Trivial character of H: eigenvalue |C_H|, one copy.
        bool found = false;
        std::vector<std::pair<std::int64_t, std::int64_t>> nontrivial;
        for (const auto& [v, m] : sh.entries) {
            if (v == lex->connection_size && !found) {
                found = true;
                if (m > 1) nontrivial.emplace_back(v, m - 1);
            } else {
                nontrivial.emplace_back(v, m);
            }
        }
        if (!found)
            throw std::invalid_argument(
                "H spectrum does not contain the trivial-character eigenvalue |C_H|");
        const std::int64_t g_order = sg.total();
        for (const auto& [vg, mg] : sg.entries)
            hist[lex->group_order * vg + lex->connection_size] += mg;
        for (const auto& [vh, mh] : nontrivial) hist[vh] += g_order * mh;
        return make_spectrum(hist);
    }
    for (const auto& [vg, mg] : sg.entries)
        for (const auto& [vh, mh] : sh.entries) {
            std::int64_t value = 0;
            switch (kind) {
                case ProductKind::categorical: value = vg * vh; break;
                case ProductKind::cartesian: value = vg + vh; break;
                case ProductKind::strong: value = vg * vh + vg + vh; break;
                case ProductKind::lexicographic: break;  // handled above
            }
            hist[value] += mg * mh;
        }
    return make_spectrum(hist);
}

struct CitedValue {
    std::int64_t value = 0;
    std::string tag;
};

struct ProductBoundReport {
    ProductKind kind = ProductKind::categorical;
    Spectrum spec_g;
    Spectrum spec_h;
    Spectrum product;
    std::int64_t lambda_max = 0;
    std::int64_t lambda_min = 0;
    Rational ratio;
    std::int64_t integer_bound = 0;
    std::optional<CitedValue> cited_upper;
};

inline ProductBoundReport product_bound(ProductKind kind, const Spectrum& sg, const Spectrum& sh,
                                        const std::optional<LexParams>& lex = std::nullopt) {
    ProductBoundReport rep;
    rep.kind = kind;
    rep.spec_g = sg;
    rep.spec_h = sh;
    rep.product = product_spectrum(sg, sh, kind, lex);
    const HoffmanReport h = hoffman_bound(rep.product);
    rep.lambda_max = h.lambda_max;
    rep.lambda_min = h.lambda_min;
    rep.ratio = h.ratio;
    rep.integer_bound = h.integer_bound;
    return rep;
}

struct HadamardProductReport {
    ProductKind kind = ProductKind::categorical;
    int n = 0;
    int m = 0;
    ProductBoundReport bound;
    std::int64_t lower_bound = 0;
    std::optional<CitedValue> cited_lower;
    std::optional<CitedValue> cited_upper;
    std::optional<std::int64_t> exact;
};

// Bounds for products of Hadamard graphs, computed on the even-parity
// components (products of the two-component graphs are disjoint unions of
// copies of the component product, so the chromatic data agrees).
inline HadamardProductReport hadamard_product_chromatic(int n, int m, ProductKind kind) {
    if (n < 4 || n % 4 != 0 || m < 4 || m % 4 != 0)
        throw std::invalid_argument("hadamard product bounds require orders divisible by 4");
    if (kind == ProductKind::categorical && n < m)
        throw std::invalid_argument("categorical exact value requires n >= m");

    const Spectrum sg = hadamard_even_spectrum(n);
    const Spectrum sh = hadamard_even_spectrum(m);
    std::optional<LexParams> lex;
    if (kind == ProductKind::lexicographic)
        lex = LexParams{std::int64_t{1} << (m - 1), binomial(m, m / 2)};

    HadamardProductReport rep;
    rep.kind = kind;
    rep.n = n;
    rep.m = m;
    rep.bound = product_bound(kind, sg, sh, lex);
    rep.lower_bound = rep.bound.integer_bound;

    switch (kind) {
        case ProductKind::categorical:
            rep.cited_upper = CitedValue{std::min(n, m), "min-factor-quantum-chromatic"};
            rep.bound.cited_upper = rep.cited_upper;
            if (rep.lower_bound == rep.cited_upper->value) rep.exact = rep.lower_bound;
            break;
        case ProductKind::cartesian:
        case ProductKind::strong:
            rep.cited_lower = CitedValue{std::max(n, m), "max-factor-quantum-chromatic"};
            rep.lower_bound = std::max(rep.lower_bound, rep.cited_lower->value);
            break;
        case ProductKind::lexicographic:
            rep.cited_lower = CitedValue{n + 1, "first-factor-plus-one"};
            rep.lower_bound = std::max(rep.lower_bound, rep.cited_lower->value);
            break;
    }
    return rep;
}

}  // namespace qchrom
