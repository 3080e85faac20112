#pragma once

// Elementary abelian 2-group arithmetic and its sign characters.
//
// Vertices are length-N words over {+1, -1}, stored as bit-words with bit i
// set when entry i is -1.  Componentwise multiplication of words is XOR of
// bit-words, the identity is the all-zero word, and every element is an
// involution.  Characters are chi_S(v) = (-1)^{|S & v|}; under XOR of masks
// they form a group isomorphic to the word group.
//
// The even-parity words (even popcount) form a subgroup of dimension N-1:
// this is the connected component of the identity in a Hadamard graph.  Its
// basis is w(0,1), ..., w(0,N-1), and the coordinates of an even word in
// that basis are its bits 1..N-1, so the isomorphism is "drop bit 0".
// Complementary masks S and ~S agree on even words; the canonical mask for
// a subgroup character is the representative with bit 0 clear.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchrom/arith.hpp"

namespace qchrom {

inline std::uint64_t word_mask(int length) {
    return length >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
}

inline void check_word_length(int length) {
    if (length < 1 || length > 64)
        throw std::invalid_argument("word length must be in [1, 64], got " + std::to_string(length));
}

struct GroupElement {
    std::uint64_t bits = 0;
    int length = 0;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement group_element(std::uint64_t bits, int length) {
    check_word_length(length);
    if (bits & ~word_mask(length))
        throw std::invalid_argument("bits exceed word length " + std::to_string(length));
    return {bits, length};
}

inline GroupElement identity_element(int length) { return group_element(0, length); }

inline GroupElement element_mul(const GroupElement& a, const GroupElement& b) {
    if (a.length != b.length)
        throw std::invalid_argument("dimension mismatch: word lengths " + std::to_string(a.length) +
                                    " and " + std::to_string(b.length));
    return {a.bits ^ b.bits, a.length};
}

inline int weight(const GroupElement& g) { return std::popcount(g.bits); }

inline bool even_parity(const GroupElement& g) { return (std::popcount(g.bits) & 1) == 0; }

// w(i,j): the word with -1 exactly at positions i and j.
inline GroupElement pair_generator(int length, int i, int j) {
    check_word_length(length);
    if (i < 0 || j < 0 || i >= length || j >= length || i == j)
        throw std::out_of_range("pair_generator: indices must be distinct and in [0, " +
                                std::to_string(length) + ")");
    return {(std::uint64_t{1} << i) | (std::uint64_t{1} << j), length};
}

struct Character {
    std::uint64_t mask = 0;
    int length = 0;

    friend bool operator==(const Character&, const Character&) = default;
};

inline Character character(std::uint64_t mask, int length) {
    check_word_length(length);
    if (mask & ~word_mask(length))
        throw std::invalid_argument("mask exceeds word length " + std::to_string(length));
    return {mask, length};
}

inline Character trivial_character(int length) { return character(0, length); }

inline int char_eval(const Character& s, const GroupElement& v) {
    if (s.length != v.length)
        throw std::invalid_argument("dimension mismatch: character length " + std::to_string(s.length) +
                                    ", word length " + std::to_string(v.length));
    return (std::popcount(s.mask & v.bits) & 1) ? -1 : +1;
}

// <alpha, beta> = 2^{-k} sum_{g in F_2^k} alpha(g) beta(g), summed literally.
// Equals 1 when the masks agree and 0 otherwise (tested, not assumed).
inline Rational char_inner_product(const Character& alpha, const Character& beta, int group_dim) {
    if (group_dim < 1 || group_dim > 24)
        throw std::invalid_argument("char_inner_product: group dimension must be in [1, 24]");
    if (alpha.length != group_dim || beta.length != group_dim)
        throw std::invalid_argument("dimension mismatch: characters must live on the 2^" +
                                    std::to_string(group_dim) + " group");
    const std::uint64_t n = std::uint64_t{1} << group_dim;
    std::int64_t sum = 0;
    for (std::uint64_t g = 0; g < n; ++g) {
        const int a = (std::popcount(alpha.mask & g) & 1) ? -1 : 1;
        const int b = (std::popcount(beta.mask & g) & 1) ? -1 : 1;
        sum += a * b;
    }
    return Rational(sum, static_cast<std::int64_t>(n));
}

// Inverse-closed set of non-identity elements; inverse closure is automatic
// in a 2-group. Stored sorted and deduplicated.
struct ConnectionSet {
    std::vector<std::uint64_t> elements;
    int length = 0;
};

inline ConnectionSet make_connection_set(std::vector<std::uint64_t> elements, int length) {
    check_word_length(length);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (const std::uint64_t e : elements) {
        if (e == 0)
            throw std::invalid_argument("connection set must not contain the identity");
        if (e & ~word_mask(length))
            throw std::invalid_argument("connection set element exceeds word length");
    }
    return {std::move(elements), length};
}

inline int gf2_rank(std::vector<std::uint64_t> words) {
    int rank = 0;
    for (int bit = 63; bit >= 0; --bit) {
        const std::uint64_t probe = std::uint64_t{1} << bit;
        std::size_t pivot = rank;
        while (pivot < words.size() && !(words[pivot] & probe)) ++pivot;
        if (pivot == words.size()) continue;
        std::swap(words[rank], words[pivot]);
        for (std::size_t i = 0; i < words.size(); ++i)
            if (i != static_cast<std::size_t>(rank) && (words[i] & probe)) words[i] ^= words[rank];
        ++rank;
    }
    return rank;
}

inline bool generates(const ConnectionSet& c, int target_dim) {
    return gf2_rank(c.elements) == target_dim;
}

inline std::uint64_t even_word_to_coord(std::uint64_t word, int length) {
    check_word_length(length);
    if (word & ~word_mask(length)) throw std::invalid_argument("word exceeds length");
    if (std::popcount(word) & 1)
        throw std::invalid_argument("word has odd parity; not in the even subgroup");
    return word >> 1;
}

inline std::uint64_t coord_to_even_word(std::uint64_t coord, int length) {
    check_word_length(length);
    if (coord & ~word_mask(length - 1)) throw std::invalid_argument("coordinate exceeds length - 1 bits");
    return (coord << 1) | static_cast<std::uint64_t>(std::popcount(coord) & 1);
}

inline std::uint64_t canonical_subgroup_mask(std::uint64_t mask, int length) {
    check_word_length(length);
    if (mask & ~word_mask(length)) throw std::invalid_argument("mask exceeds length");
    return (mask & 1) ? (mask ^ word_mask(length)) : mask;
}

inline std::uint64_t subgroup_char_coord(std::uint64_t mask, int length) {
    return canonical_subgroup_mask(mask, length) >> 1;
}

}  // namespace qchrom
