#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "scaffold/digits.hpp"

namespace scaffold {

/**
 * The associated order of O_L described by exponents: it has O_K-basis
 * { t^(-w_j) Psi^(j) }, and O_L is free over it exactly when
 * w_j = d_j - d_0 for every j. failing_j records the smallest offender.
 */
struct OrderData {
    PrimePower pp;
    int64_t b_max;
    std::vector<int64_t> d;  // d_a = floor((1+a) b_max / q),       a = 0..q-1
    std::vector<int64_t> w;  // w_j = min{ d_{a+j} - d_a : a digit-below q-1-j }
    bool free;
    std::optional<int64_t> failing_j;

    int64_t q() const noexcept { return pp.q(); }
};

// Requires b_max >= 1 coprime to p.
OrderData order_data(int64_t b_max, const PrimePower& pp);

// Valuation of the coefficient of Psi^(j); absent = +infinity (no term).
using CoeffValuation = std::optional<int64_t>;

/**
 * Decides membership of alpha = sum_j c_j Psi^(j) in the associated order
 * straight from the definition: alpha * rho_a integral for every a, i.e.
 * v_K(c_j) >= d_a - d_{j+a} whenever j is digit-below q-1-a. Deliberately
 * never consults w; it is the independent side of the w_j characterization.
 */
bool membership_oracle(std::span<const CoeffValuation> coeff_vals, const OrderData& order);

/**
 * When O_L is free, any rho_* with v_L(rho_*) = r(b_max) generates it, and
 * the basis element t^(-w_j) Psi^(j) carries rho_* to rho_j.
 * image_valuations[j] = v_L(rho_j).
 */
struct FreeGenerator {
    int64_t valuation;
    std::vector<int64_t> image_valuations;
};

std::optional<FreeGenerator> free_generator_check(const OrderData& order);

}  // namespace scaffold
