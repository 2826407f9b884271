#include "scaffold/digits.hpp"

#include <stdexcept>

namespace scaffold {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimePower::PrimePower(uint32_t p, uint32_t n) : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    constexpr int64_t kCap = int64_t(1) << 32;
    int64_t q = 1;
    for (uint32_t s = 0; s <= n; ++s) {
        if (q > kCap / int64_t(p)) throw std::out_of_range("q = p^(n+1) exceeds the 2^32 cap");
        q *= p;
    }
    q_ = q;
}

int64_t residue(int64_t x, int64_t q) {
    if (q <= 0) throw std::out_of_range("modulus must be positive");
    const int64_t r = x % q;
    return r < 0 ? r + q : r;
}

DigitVector digits(int64_t x, const PrimePower& pp) {
    if (x < 0 || x >= pp.q()) throw std::out_of_range("digits: value not in [0, q)");
    DigitVector out(pp.digit_count());
    const int64_t p = pp.p();
    for (auto& d : out) {
        d = uint32_t(x % p);
        x /= p;
    }
    return out;
}

bool digit_leq(int64_t x, int64_t y, const PrimePower& pp) {
    if (x < 0 || x >= pp.q() || y < 0 || y >= pp.q())
        throw std::out_of_range("digit_leq: value not in [0, q)");
    const int64_t p = pp.p();
    while (x != 0) {  // remaining digits of x are 0 once x is exhausted
        if (x % p > y % p) return false;
        x /= p;
        y /= p;
    }
    return true;
}

bool binomial_nonzero_mod_p(int64_t i, int64_t h, uint32_t p) {
    if (h < 0 || i < 0 || h > i) throw std::out_of_range("binomial_nonzero_mod_p: need 0 <= h <= i");
    const int64_t pv = p;
    // C(i,h) = prod_s C(i_(s), h_(s)) mod p, nonzero iff h_(s) <= i_(s)
    // for all s, i.e. no carries when adding h and i-h in base p.
    while (h != 0) {
        if (h % pv > i % pv) return false;
        h /= pv;
        i /= pv;
    }
    return true;
}

}  // namespace scaffold
