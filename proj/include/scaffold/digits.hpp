#pragma once

#include <cstdint>
#include <vector>

namespace scaffold {

/**
 * The pair (p, n) with q = p^(n+1): the degree of the extension and the
 * modulus for all digit arithmetic. p is checked prime by trial division;
 * q is capped at 2^32 so that q^2-sized enumeration loops stay inside
 * 64-bit intermediates.
 */
class PrimePower {
public:
    PrimePower(uint32_t p, uint32_t n);

    int64_t p() const noexcept { return p_; }
    uint32_t n() const noexcept { return n_; }
    int64_t q() const noexcept { return q_; }
    uint32_t digit_count() const noexcept { return n_ + 1; }

    bool operator==(const PrimePower&) const = default;

private:
    uint32_t p_;
    uint32_t n_;
    int64_t q_;
};

// Base-p digits, least significant first, fixed length n+1.
using DigitVector = std::vector<uint32_t>;

// Least non-negative residue of x modulo q; x may be negative.
int64_t residue(int64_t x, int64_t q);

// Digit expansion of x. Requires 0 <= x < q; reduce with residue() first.
DigitVector digits(int64_t x, const PrimePower& pp);

// x_(s) <= y_(s) for every digit position s = 0..n.
bool digit_leq(int64_t x, int64_t y, const PrimePower& pp);

// C(i,h) != 0 (mod p), decided by the no-carry test on h and i-h.
// Never forms the binomial coefficient itself.
bool binomial_nonzero_mod_p(int64_t i, int64_t h, uint32_t p);

}  // namespace scaffold
