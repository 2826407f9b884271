#include "scaffold/assoc_order.hpp"

#include <limits>
#include <stdexcept>

#include "scaffold/detail/digit_iter.hpp"
#include "scaffold/extension.hpp"

namespace scaffold {

namespace {

// Digits of q-1-j are the digitwise complements p-1-j_(s); no borrows occur.
void complement_digits(int64_t j, const PrimePower& pp, std::vector<uint32_t>& out) {
    const int64_t p = pp.p();
    for (auto& d : out) {
        d = uint32_t(p - 1 - j % p);
        j /= p;
    }
}

}  // namespace

OrderData order_data(int64_t b_max, const PrimePower& pp) {
    if (b_max < 1) throw std::out_of_range("b_max must be >= 1");
    if (b_max % pp.p() == 0) throw std::invalid_argument("b_max must be coprime to p");

    const int64_t q = pp.q();
    OrderData od{pp, b_max, {}, {}, true, std::nullopt};
    od.d.resize(q);
    for (int64_t a = 0; a < q; ++a) od.d[a] = d_value(a, b_max, q);

    od.w.resize(q);
    const uint32_t p = uint32_t(pp.p());
    std::vector<uint32_t> lo(pp.digit_count(), 0);
    std::vector<uint32_t> hi(pp.digit_count());
    const int64_t* d = od.d.data();
    for (int64_t j = 0; j < q; ++j) {
        complement_digits(j, pp, hi);
        int64_t best = std::numeric_limits<int64_t>::max();
        detail::for_each_digit_boxed(p, lo, hi, [&](int64_t a) {
            const int64_t v = d[a + j] - d[a];
            if (v < best) best = v;
            return true;
        });
        od.w[j] = best;
        if (best != d[j] - d[0] && !od.failing_j) {
            od.free = false;
            od.failing_j = j;
        }
    }
    return od;
}

bool membership_oracle(std::span<const CoeffValuation> coeff_vals, const OrderData& order) {
    const int64_t q = order.q();
    if (int64_t(coeff_vals.size()) != q)
        throw std::invalid_argument("membership_oracle: coefficient list must have length q");

    const uint32_t p = uint32_t(order.pp.p());
    std::vector<uint32_t> lo(order.pp.digit_count(), 0);
    std::vector<uint32_t> hi(order.pp.digit_count());
    const int64_t* d = order.d.data();
    for (int64_t j = 0; j < q; ++j) {
        if (!coeff_vals[j]) continue;  // absent term is integral against everything
        const int64_t v = *coeff_vals[j];
        // j digit-below q-1-a is the same as a digit-below q-1-j
        complement_digits(j, order.pp, hi);
        bool ok = true;
        detail::for_each_digit_boxed(p, lo, hi, [&](int64_t a) {
            if (v < d[a] - d[a + j]) {
                ok = false;
                return false;
            }
            return true;
        });
        if (!ok) return false;
    }
    return true;
}

std::optional<FreeGenerator> free_generator_check(const OrderData& order) {
    if (!order.free) return std::nullopt;
    const int64_t q = order.q();
    FreeGenerator gen;
    gen.valuation = residue(order.b_max, q);
    gen.image_valuations.resize(q);
    for (int64_t j = 0; j < q; ++j)
        gen.image_valuations[j] = rho_valuation(j, order.b_max, q);
    return gen;
}

}  // namespace scaffold
