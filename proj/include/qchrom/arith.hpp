#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qchrom {

// Exact binomial coefficient. Returns 0 outside the Pascal triangle; throws
// if the result does not fit in a signed 64-bit integer.
inline std::int64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (acc > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
            throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                      std::to_string(k) + ") exceeds 64 bits");
    }
    return static_cast<std::int64_t>(acc);
}

// Reduced fraction with positive denominator. Big enough for Hoffman ratios
// and product-bound arithmetic at this library's size caps.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    // den > 0, so truncation already rounds negative values up.
    std::int64_t ceil_value() const { return num / den + (num % den > 0 ? 1 : 0); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

inline Rational operator+(const Rational& a, const Rational& b) {
    const __int128 num = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    const __int128 den = static_cast<__int128>(a.den) * b.den;
    const __int128 g = [](__int128 x, __int128 y) {
        if (x < 0) x = -x;
        while (y != 0) {
            const __int128 t = x % y;
            x = y;
            y = t;
        }
        return x;
    }(num, den);
    const __int128 rn = g ? num / g : num;
    const __int128 rd = g ? den / g : den;
    if (rn > std::numeric_limits<std::int64_t>::max() || rn < std::numeric_limits<std::int64_t>::min() ||
        rd > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("rational addition exceeds 64 bits");
    return Rational(static_cast<std::int64_t>(rn), static_cast<std::int64_t>(rd));
}

}  // namespace qchrom
