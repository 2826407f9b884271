#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace scaffold {

namespace detail {

inline int64_t narrow128(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational arithmetic overflow");
    return static_cast<int64_t>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

/**
 * Exact rational number; denominator kept positive and terms reduced.
 * Small on purpose: the error-term thresholds are single fractions with
 * denominator p^n, and the q <= 2^32 cap bounds every magnitude that can
 * appear. All arithmetic is overflow-checked.
 */
class Rational {
public:
    Rational() = default;
    Rational(int64_t value) : num_(value) {}  // NOLINT: implicit from integers is the point
    Rational(int64_t num, int64_t den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        *this = make(num, den);
    }

    int64_t num() const noexcept { return num_; }
    int64_t den() const noexcept { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                    __int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(__int128(a.num_) * b.den_ - __int128(b.num_) * a.den_,
                    __int128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    bool operator==(const Rational&) const = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 lhs = __int128(a.num_) * b.den_;
        const __int128 rhs = __int128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "-7/2", or just "-7" when integral.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Rational make(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 g = num == 0 ? den : detail::gcd128(num, den);
        Rational r;
        r.num_ = detail::narrow128(num / g);
        r.den_ = detail::narrow128(den / g);
        return r;
    }

    int64_t num_ = 0;
    int64_t den_ = 1;
};

}  // namespace scaffold
