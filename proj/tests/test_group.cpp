#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "qchrom/graph.hpp"
#include "qchrom/group.hpp"

using namespace qchrom;

namespace {

// Independent oracle: sign of chi_S at word g, straight from the definition.
int sign_at(std::uint64_t mask, std::uint64_t word) {
    return (std::popcount(mask & word) & 1) ? -1 : 1;
}

// Independent oracle: sum alpha(g) beta(g) over the even-parity words of
// length n, with characters given as n-bit masks.
std::int64_t even_subgroup_pairing(std::uint64_t alpha, std::uint64_t beta, int n) {
    std::int64_t sum = 0;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
        if (std::popcount(w) & 1) continue;
        sum += sign_at(alpha, w) * sign_at(beta, w);
    }
    return sum;
}

}  // namespace

TEST_CASE("element_mul is XOR of bit-words") {
    const GroupElement id = identity_element(4);
    const GroupElement v = group_element(0b0110, 4);
    REQUIRE(element_mul(id, v) == v);
    REQUIRE(element_mul(v, v) == id);
    REQUIRE(element_mul(pair_generator(4, 0, 1), pair_generator(4, 0, 2)) == pair_generator(4, 1, 2));
    REQUIRE_THROWS_AS(element_mul(v, identity_element(5)), std::invalid_argument);
}

TEST_CASE("element_mul group laws over random triples") {
    std::mt19937_64 rng(12345);
    for (int n : {4, 8, 12, 24}) {
        const std::uint64_t mask = word_mask(n);
        for (int trial = 0; trial < 200; ++trial) {
            const GroupElement a{rng() & mask, n};
            const GroupElement b{rng() & mask, n};
            const GroupElement c{rng() & mask, n};
            REQUIRE(element_mul(element_mul(a, b), c) == element_mul(a, element_mul(b, c)));
            REQUIRE(element_mul(a, b) == element_mul(b, a));
            REQUIRE(element_mul(a, a) == identity_element(n));
        }
    }
}

TEST_CASE("pair_generator places exactly two -1 entries") {
    const GroupElement w = pair_generator(4, 0, 1);
    REQUIRE(w.bits == 0b0011);
    REQUIRE(weight(w) == 2);
    REQUIRE(w == element_mul(pair_generator(4, 0, 2), pair_generator(4, 1, 2)));
    REQUIRE_THROWS_AS(pair_generator(4, 2, 2), std::out_of_range);
    REQUIRE_THROWS_AS(pair_generator(4, 0, 4), std::out_of_range);
    REQUIRE_THROWS_AS(pair_generator(4, -1, 2), std::out_of_range);
}

TEST_CASE("two half-length generator products multiply to a single generator") {
    // w(0,i1)...w(0,i_{N/2}) and w(0,i2)...w(0,i_{N/2}) both have weight N/2,
    // and their product is w(0,i1).
    const int n = 8;
    const int idx[4] = {1, 3, 4, 6};  // i1..i_{N/2}, all distinct, nonzero
    GroupElement first = identity_element(n);
    for (int k = 0; k < n / 2; ++k) first = element_mul(first, pair_generator(n, 0, idx[k]));
    GroupElement second = identity_element(n);
    for (int k = 1; k < n / 2; ++k) second = element_mul(second, pair_generator(n, 0, idx[k]));
    REQUIRE(weight(first) == n / 2);
    REQUIRE(weight(second) == n / 2);
    REQUIRE(element_mul(first, second) == pair_generator(n, 0, idx[0]));
}

TEST_CASE("char_eval on generators") {
    const int n = 8;
    for (int i = 1; i < n; ++i) {
        // chi_{0,i} has the single-bit mask {i}: -1 on w(0,i), +1 on w(0,j).
        const Character chi = character(std::uint64_t{1} << i, n);
        for (int j = 1; j < n; ++j)
            REQUIRE(char_eval(chi, pair_generator(n, 0, j)) == (i == j ? -1 : 1));
    }
    const Character triv = trivial_character(n);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 64; ++trial)
        REQUIRE(char_eval(triv, GroupElement{rng() & word_mask(n), n}) == 1);
    REQUIRE_THROWS_AS(char_eval(trivial_character(4), identity_element(8)), std::invalid_argument);
}

TEST_CASE("char_eval is multiplicative") {
    std::mt19937_64 rng(99);
    const int n = 12;
    for (int trial = 0; trial < 200; ++trial) {
        const Character s{rng() & word_mask(n), n};
        const GroupElement a{rng() & word_mask(n), n};
        const GroupElement b{rng() & word_mask(n), n};
        REQUIRE(char_eval(s, element_mul(a, b)) == char_eval(s, a) * char_eval(s, b));
    }
}

TEST_CASE("char_inner_product on the even-parity subgroup of N=4") {
    const int n = 4;
    const int k = n - 1;
    // chi_{0,i} corresponds to the n-bit mask {i}; its subgroup coordinate
    // mask is (1 << i) >> 1.
    const std::uint64_t m01 = subgroup_char_coord(std::uint64_t{1} << 1, n);
    const std::uint64_t m02 = subgroup_char_coord(std::uint64_t{1} << 2, n);

    // Direct summation over the 8 even-parity words (independent oracle).
    REQUIRE(even_subgroup_pairing(0, 1ull << 1, n) == 0);
    REQUIRE(even_subgroup_pairing(1ull << 1, 1ull << 2, n) == 0);
    REQUIRE(even_subgroup_pairing(1ull << 1, 1ull << 1, n) == 8);

    REQUIRE(char_inner_product(trivial_character(k), character(m01, k), k) == Rational(0));
    REQUIRE(char_inner_product(character(m01, k), character(m02, k), k) == Rational(0));
    REQUIRE(char_inner_product(character(m01, k), character(m01, k), k) == Rational(1));
}

TEST_CASE("subgroup coordinates agree with n-bit masks on even words") {
    std::mt19937_64 rng(31337);
    for (int n : {4, 8, 12}) {
        for (int trial = 0; trial < 100; ++trial) {
            const std::uint64_t mask = rng() & word_mask(n);
            const std::uint64_t coord_mask = subgroup_char_coord(mask, n);
            const std::uint64_t coord = rng() & word_mask(n - 1);
            const std::uint64_t word = coord_to_even_word(coord, n);
            REQUIRE(even_word_to_coord(word, n) == coord);
            REQUIRE(sign_at(mask, word) == sign_at(coord_mask, coord));
        }
    }
}

TEST_CASE("character orthonormality holds exactly for all mask pairs") {
    for (int k = 1; k <= 10; ++k) {
        const std::uint64_t count = std::uint64_t{1} << k;
        for (std::uint64_t s = 0; s < count; ++s)
            for (std::uint64_t t = 0; t < count; ++t) {
                const Rational ip = char_inner_product(character(s, k), character(t, k), k);
                REQUIRE(ip == (s == t ? Rational(1) : Rational(0)));
            }
    }
}

TEST_CASE("translation identity: sum_g chi_S(g) chi_T(g h) = |G| chi_T(h) delta_ST") {
    for (int k = 1; k <= 6; ++k) {
        const std::uint64_t count = std::uint64_t{1} << k;
        for (std::uint64_t s = 0; s < count; ++s)
            for (std::uint64_t t = 0; t < count; ++t)
                for (std::uint64_t h = 0; h < count; ++h) {
                    std::int64_t sum = 0;
                    for (std::uint64_t g = 0; g < count; ++g)
                        sum += sign_at(s, g) * sign_at(t, g ^ h);
                    const std::int64_t expected =
                        s == t ? static_cast<std::int64_t>(count) * sign_at(t, h) : 0;
                    REQUIRE(sum == expected);
                }
    }
}

TEST_CASE("inversion identity: sum_S chi_S(g) = |G| delta_{g,e}") {
    for (int k = 1; k <= 10; ++k) {
        const std::uint64_t count = std::uint64_t{1} << k;
        for (std::uint64_t g = 0; g < count; ++g) {
            std::int64_t sum = 0;
            for (std::uint64_t s = 0; s < count; ++s) sum += sign_at(s, g);
            REQUIRE(sum == (g == 0 ? static_cast<std::int64_t>(count) : 0));
        }
    }
}

TEST_CASE("generates reports the GF(2) rank") {
    const GroupElement w1 = pair_generator(4, 0, 1);
    const GroupElement w2 = pair_generator(4, 0, 2);
    const GroupElement w3 = pair_generator(4, 0, 3);
    REQUIRE(generates(make_connection_set({w1.bits, w2.bits, w3.bits}, 4), 3));
    REQUIRE_FALSE(generates(make_connection_set({w1.bits}, 4), 3));
    REQUIRE(generates(ConnectionSet{{}, 4}, 0));
    REQUIRE_FALSE(generates(ConnectionSet{{}, 4}, 3));
}

TEST_CASE("hadamard connection sets generate the even subgroup") {
    for (int n : {4, 8, 12}) {
        const ConnectionSet c = hadamard_connection_set(n);
        REQUIRE(gf2_rank(c.elements) == n - 1);
        REQUIRE(generates(c, n - 1));
    }
}

TEST_CASE("connection set construction rejects the identity") {
    REQUIRE_THROWS_AS(make_connection_set({0, 3}, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(make_connection_set({1ull << 40}, 4), std::invalid_argument);
}
