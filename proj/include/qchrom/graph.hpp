#pragma once

// Hadamard graphs and Cayley graphs of elementary abelian 2-groups, plus the
// dense adjacency representation used as the brute-force oracle.
//
// The Hadamard graph of order N has the 2^N sign words as vertices, adjacent
// exactly when they differ in N/2 positions (orthogonal as +-1 vectors).  For
// N divisible by 4 it splits into two isomorphic components; the component of
// the all-+1 word is the even-parity subgroup, and the graph restricted to it
// is the Cayley graph of that subgroup whose connection set is the
// neighborhood of the identity, i.e. all words of weight N/2.
//
// Vertex order is deterministic everywhere: words ascending by integer value
// (the even component inherits that order, which coincides with ascending
// order of the (N-1)-bit subgroup coordinates).

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qchrom/group.hpp"

namespace qchrom {

enum class Convention { plus_minus_one, zero_one };
enum class Component { full, even_component };

struct HadamardParams {
    int n = 4;
    Component component = Component::full;
    Convention convention = Convention::plus_minus_one;
};

// Symmetric irreflexive adjacency matrix over packed bit rows.
class DenseGraph {
  public:
    DenseGraph() = default;

    explicit DenseGraph(int n) : size_(n) {
        if (n < 1 || n > 4096)
            throw std::invalid_argument("graph size must be in [1, 4096], got " + std::to_string(n));
        words_per_row_ = (n + 63) / 64;
        rows_.assign(static_cast<std::size_t>(n) * words_per_row_, 0);
    }

    int size() const { return size_; }

    bool adjacent(int i, int j) const {
        return (rows_[static_cast<std::size_t>(i) * words_per_row_ + static_cast<unsigned>(j) / 64] >>
                (static_cast<unsigned>(j) % 64)) &
               1u;
    }

    void add_edge(int i, int j) {
        if (i < 0 || j < 0 || i >= size_ || j >= size_)
            throw std::out_of_range("edge endpoint out of range");
        if (i == j) throw std::invalid_argument("irreflexive graph: no self-loops");
        set_bit(i, j);
        set_bit(j, i);
    }

    int degree(int i) const {
        int d = 0;
        const std::size_t base = static_cast<std::size_t>(i) * words_per_row_;
        for (int w = 0; w < words_per_row_; ++w) d += std::popcount(rows_[base + w]);
        return d;
    }

    long long edge_count() const {
        long long twice = 0;
        for (int i = 0; i < size_; ++i) twice += degree(i);
        return twice / 2;
    }

    // Unordered edges, u < v, ascending.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < size_; ++u)
            for (int v = u + 1; v < size_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    bool adjacency_equals(const DenseGraph& o) const {
        return size_ == o.size_ && rows_ == o.rows_;
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<GroupElement>& labels() const { return labels_; }
    Convention label_convention() const { return label_convention_; }

    void set_labels(std::vector<GroupElement> labels, Convention conv) {
        if (static_cast<int>(labels.size()) != size_)
            throw std::invalid_argument("label count must equal vertex count");
        labels_ = std::move(labels);
        label_convention_ = conv;
    }

  private:
    void set_bit(int i, int j) {
        rows_[static_cast<std::size_t>(i) * words_per_row_ + static_cast<unsigned>(j) / 64] |=
            std::uint64_t{1} << (static_cast<unsigned>(j) % 64);
    }

    int size_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<GroupElement> labels_;
    Convention label_convention_ = Convention::plus_minus_one;
};

// Cayley graph data: vertices are the 2^group_dim words in ascending order,
// u ~ v iff u XOR v lies in the connection set.
struct CayleyGraphSpec {
    int group_dim = 0;
    ConnectionSet connection;
};

inline CayleyGraphSpec make_cayley_spec(int group_dim, std::vector<std::uint64_t> connection) {
    if (group_dim < 1 || group_dim > 24)
        throw std::invalid_argument("group dimension must be in [1, 24]");
    ConnectionSet c = make_connection_set(std::move(connection), group_dim);
    return {group_dim, std::move(c)};
}

// All words of weight exactly N/2: the set adjacent to the all-+1 word.
inline ConnectionSet hadamard_connection_set(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("hadamard order must be a positive even integer, got " +
                                    std::to_string(n));
    if (n > 24) throw std::invalid_argument("hadamard connection set enumeration capped at n = 24");
    std::vector<std::uint64_t> elems;
    elems.reserve(static_cast<std::size_t>(binomial(n, n / 2)));
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t w = 1; w < limit; ++w)
        if (std::popcount(w) == n / 2) elems.push_back(w);
    return make_connection_set(std::move(elems), n);
}

// The even component as a Cayley graph of the dimension-(N-1) subgroup.
// Needs N divisible by 4 so that the weight-N/2 words have even parity.
inline CayleyGraphSpec hadamard_even_cayley_spec(int n) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("even-component Cayley view requires order divisible by 4");
    const ConnectionSet full = hadamard_connection_set(n);
    std::vector<std::uint64_t> coords;
    coords.reserve(full.elements.size());
    for (const std::uint64_t w : full.elements) coords.push_back(even_word_to_coord(w, n));
    return make_cayley_spec(n - 1, std::move(coords));
}

// The full Hadamard graph is itself a Cayley graph of the whole word group.
inline CayleyGraphSpec hadamard_full_cayley_spec(int n) {
    ConnectionSet c = hadamard_connection_set(n);
    return {n, std::move(c)};
}

inline std::uint64_t nth_even_word(std::uint64_t index) {
    return (index << 1) | static_cast<std::uint64_t>(std::popcount(index) & 1);
}

inline DenseGraph build_hadamard(const HadamardParams& p) {
    if (p.n < 2 || p.n % 2 != 0)
        throw std::invalid_argument("hadamard order must be a positive even integer, got " +
                                    std::to_string(p.n));
    if (p.n > 12) throw std::invalid_argument("dense hadamard construction capped at n = 12");
    const bool even_only = p.component == Component::even_component;
    const int count = even_only ? (1 << (p.n - 1)) : (1 << p.n);
    std::vector<std::uint64_t> words(count);
    for (int i = 0; i < count; ++i)
        words[i] = even_only ? nth_even_word(static_cast<std::uint64_t>(i))
                             : static_cast<std::uint64_t>(i);

    DenseGraph g(count);
    const int half = p.n / 2;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (std::popcount(words[i] ^ words[j]) == half) g.add_edge(i, j);

    std::vector<GroupElement> labels;
    labels.reserve(count);
    for (const std::uint64_t w : words) labels.push_back(GroupElement{w, p.n});
    g.set_labels(std::move(labels), p.convention);
    return g;
}

inline DenseGraph build_cayley(const CayleyGraphSpec& spec) {
    if (spec.group_dim < 1 || spec.group_dim > 12)
        throw std::invalid_argument("dense Cayley construction capped at group dimension 12");
    for (const std::uint64_t c : spec.connection.elements) {
        if (c == 0) throw std::invalid_argument("connection set must not contain the identity");
        if (c & ~word_mask(spec.group_dim))
            throw std::invalid_argument("connection element exceeds group dimension");
    }
    const int count = 1 << spec.group_dim;
    DenseGraph g(count);
    for (int u = 0; u < count; ++u)
        for (const std::uint64_t c : spec.connection.elements) {
            const std::uint64_t v = static_cast<std::uint64_t>(u) ^ c;
            if (v > static_cast<std::uint64_t>(u)) g.add_edge(u, static_cast<int>(v));
        }
    std::vector<GroupElement> labels;
    labels.reserve(count);
    for (int u = 0; u < count; ++u)
        labels.push_back(GroupElement{static_cast<std::uint64_t>(u), spec.group_dim});
    g.set_labels(std::move(labels), Convention::plus_minus_one);
    return g;
}

// Rendering under a convention: sign words print '+'/'-' per entry, 0/1
// words print the digits directly (entry -1 corresponds to digit 0).
inline std::string to_string(const GroupElement& g, Convention conv) {
    std::string s(static_cast<std::size_t>(g.length), '?');
    for (int i = 0; i < g.length; ++i) {
        const bool bit = (g.bits >> i) & 1;
        s[static_cast<std::size_t>(i)] =
            conv == Convention::plus_minus_one ? (bit ? '-' : '+') : (bit ? '1' : '0');
    }
    return s;
}

// Re-encodes a word between conventions: the digit-0/1 form of a sign word
// is its complement (+1 -> 1, -1 -> 0), and vice versa.
inline GroupElement convert_convention(const GroupElement& g, Convention to,
                                       Convention from = Convention::plus_minus_one) {
    if (from == to) return g;
    return {g.bits ^ word_mask(g.length), g.length};
}

inline DenseGraph convert_convention(const DenseGraph& g, Convention to) {
    if (!g.has_labels()) throw std::invalid_argument("conversion requires vertex labels");
    DenseGraph out = g;
    if (g.label_convention() == to) return out;
    std::vector<GroupElement> labels = g.labels();
    for (GroupElement& l : labels) l = convert_convention(l, to, g.label_convention());
    out.set_labels(std::move(labels), to);
    return out;
}

inline int count_components(const DenseGraph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    int components = 0;
    for (int s = 0; s < g.size(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++components;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v = 0; v < g.size(); ++v)
                if (!seen[static_cast<std::size_t>(v)] && g.adjacent(u, v)) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    q.push(v);
                }
        }
    }
    return components;
}

}  // namespace qchrom
