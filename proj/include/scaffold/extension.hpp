#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scaffold/digits.hpp"
#include "scaffold/rational.hpp"

namespace scaffold {

/**
 * Valuation-level description of a near one-dimensional elementary abelian
 * extension: v_K(beta) = -b together with the Omega valuations
 * v_K(Omega_0), ..., v_K(Omega_n). Nothing about the field elements
 * themselves is kept; the whole calculus runs on these integers.
 *
 * Extensions with equal-valuation Omegas additionally require the residue
 * classes to be independent over F_p; that hypothesis is carried as a flag
 * and assumed, never checked (it needs concrete residue-field arithmetic).
 */
struct ExtensionParams {
    PrimePower pp;
    int64_t b;                        // v_K(beta) = -b, b > 0, gcd(b, p) = 1
    std::vector<int64_t> omega_vals;  // length n+1, [0] = 0, non-increasing
    bool omegas_assumed_independent = true;
};

// Checks every invariant and returns the validated record.
ExtensionParams validate_params(PrimePower pp, int64_t b, std::vector<int64_t> omega_vals);

struct RamificationData {
    std::vector<int64_t> breaks;           // b_(0) .. b_(n), non-decreasing
    std::vector<int64_t> distinct_breaks;  // strictly increasing
    int64_t b_max;                         // = breaks[n]
};

// b_(i) = b + p^n * sum_{j=1}^{i} p^j m_j with m_j = omega[j-1] - omega[j].
// Every break is congruent to r(b) mod q.
RamificationData ramification_breaks(const ExtensionParams& params);

// Strict lower bound for the error-term valuation: epsilon_i is admissible
// iff v_K(epsilon_i) > epsilon_threshold(params, i). Exact rational; the
// boundary case is decided exactly, never by rounding.
Rational epsilon_threshold(const ExtensionParams& params, uint32_t i);

// d_a = floor((1+a) * b_max / q)
int64_t d_value(int64_t a, int64_t b_max, int64_t q);

// v_L(rho_a) = r((1+a) * b_max)
int64_t rho_valuation(int64_t a, int64_t b_max, int64_t q);

// Psi^(a) * Psi^(j): the exponent a+j when a is digit-below q-1-j,
// otherwise nothing (some nilpotent factor repeats).
std::optional<int64_t> psi_mult(int64_t a, int64_t j, const PrimePower& pp);

/**
 * Result of Psi^(j) acting on the basis element rho_a: either
 * t^(d_{a+j} - d_a) rho_{a+j}, or zero.
 */
struct RhoAction {
    bool zero;
    int64_t t_exponent;    // meaningful only when !zero
    int64_t target_index;  // meaningful only when !zero

    static RhoAction annihilated() { return {true, 0, 0}; }
    bool operator==(const RhoAction&) const = default;
};

RhoAction psi_action_on_rho(int64_t j, int64_t a, int64_t b_max, const PrimePower& pp);

}  // namespace scaffold
