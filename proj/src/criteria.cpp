#include "scaffold/criteria.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "scaffold/assoc_order.hpp"
#include "scaffold/detail/digit_iter.hpp"
#include "scaffold/extension.hpp"

namespace scaffold {

namespace {

void validate_residue(int64_t c, const PrimePower& pp) {
    if (c < 1 || c >= pp.q()) throw std::out_of_range("residue class must lie in [1, q-1]");
    if (c % pp.p() == 0) throw std::invalid_argument("residue class must be coprime to p");
}

// Runs item(i) for i in [0, count), striding workers across the range.
// Results must be written to disjoint slots; the first exception wins.
void parallel_stride(size_t count, unsigned threads, const std::function<void(size_t)>& item) {
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2 * threads) {
        for (size_t i = 0; i < count; ++i) item(i);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (size_t i = t; i < count; i += threads) item(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

CriterionReport evaluate(int64_t c, const PrimePower& pp, Method method) {
    CriterionReport rep;
    rep.c = c;
    rep.h_c = h_value(c, pp);
    rep.divisibility = divisibility_test(c, pp);
    if (method == Method::w || method == Method::all)
        rep.verdict_w = order_data(c, pp).free;
    if (method == Method::miyata || method == Method::all) {
        auto [ok, wit] = miyata_condition(c, pp);
        rep.verdict_miyata = ok;
        rep.witness_miyata = wit;
    }
    if (method == Method::sq || method == Method::all) {
        auto [ok, wit] = in_S_q(c, pp);
        rep.verdict_sq = ok;
        rep.witness_sq = wit;
    }
    return rep;
}

std::string describe_disagreement(const CriterionReport& rep, const PrimePower& pp) {
    std::ostringstream os;
    os << "criteria disagree for c=" << rep.c << ", q=" << pp.q() << ":";
    if (rep.verdict_w) os << " w=" << (*rep.verdict_w ? "free" : "not-free");
    if (rep.verdict_miyata) os << " miyata=" << (*rep.verdict_miyata ? "free" : "not-free");
    if (rep.verdict_sq) os << " sq=" << (*rep.verdict_sq ? "free" : "not-free");
    if (rep.witness_miyata)
        os << " miyata-witness=(" << rep.witness_miyata->h << "," << rep.witness_miyata->i << ","
           << rep.witness_miyata->j << ")";
    if (rep.witness_sq)
        os << " sq-witness=(" << rep.witness_sq->u << "," << rep.witness_sq->v << ")";
    return os.str();
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::w: return "w";
        case Method::miyata: return "miyata";
        case Method::sq: return "sq";
        case Method::all: return "all";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string& name) {
    if (name == "w") return Method::w;
    if (name == "miyata") return Method::miyata;
    if (name == "sq") return Method::sq;
    if (name == "all") return Method::all;
    return std::nullopt;
}

bool CriterionReport::consistent() const {
    std::optional<bool> seen;
    for (const auto& v : {verdict_w, verdict_miyata, verdict_sq}) {
        if (!v) continue;
        if (seen && *seen != *v) return false;
        seen = v;
    }
    return true;
}

std::optional<bool> CriterionReport::verdict() const {
    if (!consistent()) return std::nullopt;
    for (const auto& v : {verdict_w, verdict_miyata, verdict_sq})
        if (v) return v;
    return std::nullopt;
}

int64_t h_value(int64_t c, const PrimePower& pp) {
    validate_residue(c, pp);
    const int64_t q = pp.q();
    // extended Euclid for c^{-1} mod q; gcd(c, p) = 1 makes c a unit
    int64_t r0 = q, r1 = c, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const int64_t k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        s0 -= k * s1;
        std::swap(s0, s1);
    }
    return residue(-s0, q);  // h = -c^{-1} mod q; never 0 since q > 1
}

std::pair<bool, std::optional<MiyataWitness>> miyata_condition(int64_t c, const PrimePower& pp) {
    validate_residue(c, pp);
    const int64_t q = pp.q();
    const uint32_t p = uint32_t(pp.p());
    const uint32_t k = pp.digit_count();

    // rneg[m] = r(-m c), stepped by q - c
    std::vector<int64_t> rneg(q);
    rneg[0] = 0;
    for (int64_t m = 1; m < q; ++m) {
        int64_t v = rneg[m - 1] + (q - c);
        if (v >= q) v -= q;
        rneg[m] = v;
    }

    // For fixed h the admissible i are exactly those with i digit-above h
    // (Lucas), enumerated in increasing order; j = q-1+h-i stays >= i while
    // i <= (q-1+h)/2. Scanning h then i yields the lex-smallest failure.
    std::vector<uint32_t> lo(k), hi(k, p - 1);
    const int64_t r1 = rneg[1];
    for (int64_t h = 0; h < q; ++h) {
        int64_t hh = h;
        for (auto& d : lo) {
            d = uint32_t(hh % p);
            hh /= p;
        }
        const int64_t limit = (q - 1 + h) / 2;
        const int64_t base = r1 - rneg[h];
        int64_t failing_i = -1;
        detail::for_each_digit_boxed(p, lo, hi, [&](int64_t i) {
            if (i > limit) return false;
            if (base + rneg[i] <= 0) {
                failing_i = i;
                return false;
            }
            return true;
        });
        if (failing_i >= 0)
            return {false, MiyataWitness{h, failing_i, q - 1 + h - failing_i}};
    }
    return {true, std::nullopt};
}

std::pair<bool, std::optional<SqWitness>> in_S_q(int64_t c, const PrimePower& pp) {
    validate_residue(c, pp);
    if (c <= 2) return {true, std::nullopt};  // no u,v >= 1 with u+v < c

    const int64_t q = pp.q();
    const int64_t p = pp.p();
    const uint32_t k = pp.digit_count();
    const int64_t h = h_value(c, pp);

    // digit table row u-1 holds the digits of r(h u), u = 1..c-2
    std::vector<uint8_t> table(size_t(c - 2) * k);
    int64_t hm = 0;
    for (int64_t u = 1; u <= c - 2; ++u) {
        hm += h;
        if (hm >= q) hm -= q;
        int64_t v = hm;
        uint8_t* row = &table[size_t(u - 1) * k];
        for (uint32_t s = 0; s < k; ++s) {
            row[s] = uint8_t(v % p);
            v /= p;
        }
    }

    // The failing set is symmetric in (u,v), so the lex-smallest failing
    // pair has u <= v and the half-range scan below finds exactly it.
    for (int64_t u = 1; u + u < c; ++u) {
        const uint8_t* du = &table[size_t(u - 1) * k];
        for (int64_t v = u; u + v < c; ++v) {
            const uint8_t* dv = &table[size_t(v - 1) * k];
            bool ok = false;
            for (uint32_t s = 0; s < k; ++s) {
                if (du[s] + dv[s] < p - 1) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return {false, SqWitness{u, v}};
        }
    }
    return {true, std::nullopt};
}

DivisibilityTag divisibility_test(int64_t c, const PrimePower& pp) {
    validate_residue(c, pp);
    int64_t pd = 1;
    for (uint32_t d = 1; d <= pp.n() + 1; ++d) {
        pd *= pp.p();
        if ((pd - 1) % c == 0) {
            if (d == pp.n() + 1) return {DivisibilityTag::divides_q_minus_1, d};
            return {DivisibilityTag::divides_p_d_minus_1, d};
        }
    }
    return {DivisibilityTag::none, 0};
}

CriterionReport freeness(int64_t c, const PrimePower& pp, Method method) {
    CriterionReport rep = evaluate(c, pp, method);
    if (!rep.consistent()) throw ConsistencyError(describe_disagreement(rep, pp), rep);
    return rep;
}

EquivalenceSummary equivalence_report(const PrimePower& pp, unsigned threads) {
    std::vector<int64_t> cs;
    for (int64_t c = 1; c < pp.q(); ++c)
        if (c % pp.p() != 0) cs.push_back(c);

    EquivalenceSummary sum{pp, std::vector<CriterionReport>(cs.size()), 0, 0, {}};
    parallel_stride(cs.size(), threads,
                    [&](size_t i) { sum.reports[i] = evaluate(cs[i], pp, Method::all); });

    for (const auto& rep : sum.reports) {
        if (!rep.consistent())
            sum.mismatches.push_back(rep.c);
        else if (*rep.verdict())
            ++sum.free_count;
        else
            ++sum.nonfree_count;
    }
    return sum;
}

std::vector<ConverseWitness> converse_search(const std::vector<PrimePower>& pps,
                                             unsigned threads) {
    for (const auto& pp : pps)
        if (pp.n() < 2)
            throw std::invalid_argument("converse search requires n >= 2 (the divisibility "
                                        "condition is exact for n <= 1)");

    std::vector<ConverseWitness> out;
    for (const auto& pp : pps) {
        std::vector<int64_t> cs;
        for (int64_t c = 1; c < pp.q(); ++c)
            if (c % pp.p() != 0) cs.push_back(c);

        std::vector<uint8_t> hit(cs.size(), 0);
        std::vector<int64_t> hs(cs.size(), 0);
        parallel_stride(cs.size(), threads, [&](size_t i) {
            const CriterionReport rep = freeness(cs[i], pp, Method::all);
            if (*rep.verdict() && rep.divisibility.kind == DivisibilityTag::none) {
                hit[i] = 1;
                hs[i] = rep.h_c;
            }
        });
        for (size_t i = 0; i < cs.size(); ++i)
            if (hit[i]) out.push_back({pp.p(), pp.n(), pp.q(), cs[i], hs[i]});
    }
    return out;
}

}  // namespace scaffold
