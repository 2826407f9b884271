#include "scaffold/extension.hpp"

#include <stdexcept>

namespace scaffold {

namespace {

int64_t narrow(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
    return static_cast<int64_t>(v);
}

}  // namespace

ExtensionParams validate_params(PrimePower pp, int64_t b, std::vector<int64_t> omega_vals) {
    if (b <= 0) throw std::invalid_argument("b must be positive");
    if (b % pp.p() == 0) throw std::invalid_argument("b must be coprime to p");
    if (omega_vals.size() != pp.digit_count())
        throw std::invalid_argument("expected n+1 Omega valuations");
    if (omega_vals[0] != 0) throw std::invalid_argument("v_K(Omega_0) must be 0");
    for (size_t i = 0; i < omega_vals.size(); ++i) {
        if (omega_vals[i] > 0) throw std::invalid_argument("Omega valuations must be <= 0");
        if (i > 0 && omega_vals[i] > omega_vals[i - 1])
            throw std::invalid_argument("Omega valuations must be non-increasing");
    }
    return ExtensionParams{pp, b, std::move(omega_vals)};
}

RamificationData ramification_breaks(const ExtensionParams& params) {
    const PrimePower& pp = params.pp;
    const int64_t p = pp.p();
    const __int128 pn = pp.q() / p;  // p^n

    RamificationData out;
    out.breaks.reserve(pp.digit_count());
    out.breaks.push_back(params.b);

    __int128 acc = 0;  // sum_{j=1}^{i} p^j m_j
    __int128 pj = 1;
    for (uint32_t i = 1; i <= pp.n(); ++i) {
        pj *= p;
        const int64_t m = params.omega_vals[i - 1] - params.omega_vals[i];  // >= 0 by validation
        acc += pj * m;
        out.breaks.push_back(narrow(params.b + pn * acc, "ramification break overflows"));
    }

    out.distinct_breaks.push_back(out.breaks.front());
    for (int64_t br : out.breaks)
        if (br != out.distinct_breaks.back()) out.distinct_breaks.push_back(br);
    out.b_max = out.breaks.back();
    return out;
}

Rational epsilon_threshold(const ExtensionParams& params, uint32_t i) {
    const PrimePower& pp = params.pp;
    if (i > pp.n()) throw std::out_of_range("epsilon_threshold: index not in [0, n]");
    const int64_t p = pp.p();
    const int64_t pn = pp.q() / p;  // p^n

    // T_i = p^n omega_i - b + (p^n - 1) b / p^n - (p-1) sum_{j=1}^{n-1} p^j omega_j
    const int64_t lead = narrow(__int128(pn) * params.omega_vals[i] - params.b,
                                "epsilon threshold overflows");
    Rational t = Rational(lead) + Rational(narrow(__int128(pn - 1) * params.b,
                                                  "epsilon threshold overflows"),
                                           pn);
    __int128 tail = 0;
    __int128 pj = 1;
    for (int64_t j = 1; j + 1 <= int64_t(pp.n()); ++j) {
        pj *= p;
        tail += pj * params.omega_vals[j];
    }
    return t - Rational(narrow(__int128(p - 1) * tail, "epsilon threshold overflows"));
}

int64_t d_value(int64_t a, int64_t b_max, int64_t q) {
    if (q <= 0) throw std::out_of_range("modulus must be positive");
    if (a < 0 || a >= q) throw std::out_of_range("d_value: a not in [0, q)");
    if (b_max < 1) throw std::out_of_range("b_max must be >= 1");
    return int64_t(__int128(1 + a) * b_max / q);  // quotient <= b_max, fits
}

int64_t rho_valuation(int64_t a, int64_t b_max, int64_t q) {
    if (q <= 0) throw std::out_of_range("modulus must be positive");
    if (a < 0 || a >= q) throw std::out_of_range("rho_valuation: a not in [0, q)");
    if (b_max < 1) throw std::out_of_range("b_max must be >= 1");
    return int64_t(__int128(1 + a) * b_max % q);
}

std::optional<int64_t> psi_mult(int64_t a, int64_t j, const PrimePower& pp) {
    const int64_t q = pp.q();
    if (a < 0 || a >= q || j < 0 || j >= q)
        throw std::out_of_range("psi_mult: exponent not in [0, q)");
    if (!digit_leq(a, q - 1 - j, pp)) return std::nullopt;  // a nilpotent factor repeats
    return a + j;
}

RhoAction psi_action_on_rho(int64_t j, int64_t a, int64_t b_max, const PrimePower& pp) {
    const int64_t q = pp.q();
    if (a < 0 || a >= q || j < 0 || j >= q)
        throw std::out_of_range("psi_action_on_rho: index not in [0, q)");
    if (!digit_leq(a, q - 1 - j, pp)) return RhoAction::annihilated();
    return RhoAction{false, d_value(a + j, b_max, q) - d_value(a, b_max, q), a + j};
}

}  // namespace scaffold
