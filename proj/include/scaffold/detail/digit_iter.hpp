#pragma once

#include <cstdint>
#include <span>

namespace scaffold::detail {

/**
 * Enumerates, in increasing numeric order, every value whose base-p digits
 * satisfy lo[s] <= digit_s <= hi[s] for all s. Requires lo[s] <= hi[s] and
 * at most 33 digit positions (q <= 2^32). The visitor returns false to stop
 * the sweep early.
 *
 * This is the workhorse behind every "a digit-below q-1-j" style loop:
 * it touches exactly the admissible values instead of filtering all of
 * [0, q) through a digit test.
 */
template <typename Visit>
void for_each_digit_boxed(uint32_t p, std::span<const uint32_t> lo,
                          std::span<const uint32_t> hi, Visit&& visit) {
    const size_t k = lo.size();
    uint32_t digit[33];
    int64_t weight[33];
    int64_t value = 0;
    int64_t w = 1;
    for (size_t s = 0; s < k; ++s) {
        digit[s] = lo[s];
        weight[s] = w;
        value += int64_t(lo[s]) * w;
        w *= p;
    }
    for (;;) {
        if (!visit(value)) return;
        size_t s = 0;
        while (s < k && digit[s] == hi[s]) {
            value -= int64_t(digit[s] - lo[s]) * weight[s];
            digit[s] = lo[s];
            ++s;
        }
        if (s == k) return;
        ++digit[s];
        value += weight[s];
    }
}

}  // namespace scaffold::detail
