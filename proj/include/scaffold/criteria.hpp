#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scaffold/digits.hpp"

namespace scaffold {

enum class Method { w, miyata, sq, all };

const char* method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

// Failing triple of the Miyata inequality, lexicographically smallest.
struct MiyataWitness {
    int64_t h, i, j;
    bool operator==(const MiyataWitness&) const = default;
};

// Failing pair of the digit condition, lexicographically smallest.
struct SqWitness {
    int64_t u, v;
    bool operator==(const SqWitness&) const = default;
};

/**
 * Which sufficient divisibility condition c satisfies: the smallest
 * d in {1..n+1} with c | p^d - 1 wins; d = n+1 is reported as
 * divides_q_minus_1 (p^(n+1) - 1 = q - 1).
 */
struct DivisibilityTag {
    enum Kind { divides_q_minus_1, divides_p_d_minus_1, none } kind = none;
    uint32_t d = 0;  // meaningful unless kind == none

    bool operator==(const DivisibilityTag&) const = default;
};

struct CriterionReport {
    int64_t c = 0;
    int64_t h_c = 0;  // h_c * c == -1 (mod q), 1 <= h_c <= q-1
    std::optional<bool> verdict_w;
    std::optional<bool> verdict_miyata;
    std::optional<bool> verdict_sq;
    DivisibilityTag divisibility;
    std::optional<MiyataWitness> witness_miyata;
    std::optional<SqWitness> witness_sq;

    // All verdicts that were computed agree.
    bool consistent() const;
    // The agreed verdict; nullopt when inconsistent.
    std::optional<bool> verdict() const;

    bool operator==(const CriterionReport&) const = default;
};

/**
 * Two provably equivalent criteria disagreed. This alarm firing means a
 * bug somewhere in the digit calculus; it is the primary correctness
 * instrument of the library.
 */
class ConsistencyError : public std::logic_error {
public:
    ConsistencyError(const std::string& what, CriterionReport report)
        : std::logic_error(what), report_(std::move(report)) {}
    const CriterionReport& report() const noexcept { return report_; }

private:
    CriterionReport report_;
};

// The unique h with h*c == -1 (mod q), 1 <= h <= q-1.
int64_t h_value(int64_t c, const PrimePower& pp);

// Triple inequality r(-c) + r(-ic) - r(-hc) > 0 over all 0 <= h <= i <= j < q
// with i + j = q-1+h and C(i,h) != 0 mod p.
std::pair<bool, std::optional<MiyataWitness>> miyata_condition(int64_t c, const PrimePower& pp);

// Digit condition: for all u,v >= 1 with u+v < c some digit position s has
// (h_c u)_(s) + (h_c v)_(s) < p-1.
std::pair<bool, std::optional<SqWitness>> in_S_q(int64_t c, const PrimePower& pp);

DivisibilityTag divisibility_test(int64_t c, const PrimePower& pp);

// Runs the requested criteria for c and cross-checks them. With
// Method::all, a disagreement throws ConsistencyError.
CriterionReport freeness(int64_t c, const PrimePower& pp, Method method = Method::all);

struct EquivalenceSummary {
    PrimePower pp;
    std::vector<CriterionReport> reports;  // ascending c, one per admissible c
    int64_t free_count = 0;
    int64_t nonfree_count = 0;
    std::vector<int64_t> mismatches;  // c values whose verdicts disagree; empty on success
};

// All three criteria for every admissible c in [1, q-1]. Reports are
// assembled in ascending c regardless of thread count.
EquivalenceSummary equivalence_report(const PrimePower& pp, unsigned threads = 1);

// A residue that is free although no divisibility condition certifies it.
struct ConverseWitness {
    int64_t p, n, q, c, h_c;
    bool operator==(const ConverseWitness&) const = default;
};

// Scans each modulus (all must have n >= 2) for converse failures:
// verdict true with divisibility tag "none". Propagates ConsistencyError.
std::vector<ConverseWitness> converse_search(const std::vector<PrimePower>& pps,
                                             unsigned threads = 1);

}  // namespace scaffold
