// scaffold-order: decides whether the valuation ring of a scaffolded
// elementary abelian extension is free over its associated order, and
// exposes the supporting digit/ramification calculus.
//
// Exit codes: 0 free or non-empty results, 1 not free or empty results,
// 2 invalid input or internal consistency alarm.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "scaffold/assoc_order.hpp"
#include "scaffold/criteria.hpp"
#include "scaffold/extension.hpp"
#include "scaffold/report.hpp"

namespace {

using nlohmann::ordered_json;
using namespace scaffold;

constexpr int64_t kDefaultQCap = int64_t(1) << 20;

struct CommonOpts {
    std::string format = "table";
    std::string out;
    bool allow_large = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--out", opts.out, "Write the report to this file instead of stdout");
    cmd->add_flag("--allow-large", opts.allow_large,
                  "Permit q above the default cap of 2^20 (enumeration is O(q^2))");
}

PrimePower make_pp(int64_t p, int64_t n) {
    if (p < 2 || p > (int64_t(1) << 32)) throw std::invalid_argument("p must be a prime >= 2");
    if (n < 0 || n > 32) throw std::invalid_argument("n must be in [0, 32]");
    return PrimePower(uint32_t(p), uint32_t(n));
}

unsigned thread_count() {
    if (const char* env = std::getenv("SCAFFOLD_ORDER_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 256) return unsigned(v);
        std::cerr << "warning: ignoring invalid SCAFFOLD_ORDER_THREADS value\n";
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

void enforce_cap(int64_t q, const CommonOpts& opts) {
    if (q > kDefaultQCap && !opts.allow_large)
        throw std::invalid_argument("q exceeds the default cap of 2^20; pass --allow-large "
                                    "to accept the O(q^2) enumeration cost");
}

int emit(const ReportDocument& doc, const CommonOpts& opts) {
    const std::string text = doc.render(*parse_format(opts.format));
    if (opts.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + opts.out);
    file << text;
    return 0;
}

ordered_json divisibility_json(const DivisibilityTag& tag) {
    ordered_json j;
    switch (tag.kind) {
        case DivisibilityTag::divides_q_minus_1:
            j["kind"] = "divides_q_minus_1";
            break;
        case DivisibilityTag::divides_p_d_minus_1:
            j["kind"] = "divides_p_d_minus_1";
            j["d"] = tag.d;
            break;
        case DivisibilityTag::none:
            j["kind"] = "none";
            break;
    }
    return j;
}

std::string divisibility_text(const DivisibilityTag& tag) {
    switch (tag.kind) {
        case DivisibilityTag::divides_q_minus_1: return "divides q-1";
        case DivisibilityTag::divides_p_d_minus_1:
            return "divides p^" + std::to_string(tag.d) + "-1";
        case DivisibilityTag::none: return "none";
    }
    return "?";
}

ordered_json witness_json(const std::optional<MiyataWitness>& w) {
    if (!w) return nullptr;
    return ordered_json{{"h", w->h}, {"i", w->i}, {"j", w->j}};
}

ordered_json witness_json(const std::optional<SqWitness>& w) {
    if (!w) return nullptr;
    return ordered_json{{"u", w->u}, {"v", w->v}};
}

// ---- check ----------------------------------------------------------

struct CheckArgs {
    int64_t p = 0;
    int64_t n = 0;
    int64_t b = 0;
    std::string method = "all";
    CommonOpts common;
};

int run_check(const CheckArgs& args) {
    const PrimePower pp = make_pp(args.p, args.n);
    enforce_cap(pp.q(), args.common);
    if (args.b < 1) throw std::invalid_argument("b must be >= 1");
    if (args.b % pp.p() == 0) throw std::invalid_argument("b must be coprime to p");
    const int64_t c = residue(args.b, pp.q());

    const CriterionReport rep = freeness(c, pp, *parse_method(args.method));
    const bool free = *rep.verdict();

    ReportDocument doc;
    doc.command = "check";
    doc.parameters = {{"p", args.p}, {"n", args.n}, {"b", args.b}, {"method", args.method}};
    doc.columns = {"criterion", "verdict", "witness"};
    auto add_row = [&](const char* name, const std::optional<bool>& v, ordered_json witness) {
        if (!v) return;
        doc.rows.push_back({{"criterion", name},
                            {"verdict", *v ? "free" : "not-free"},
                            {"witness", std::move(witness)}});
    };
    add_row("w", rep.verdict_w, nullptr);
    add_row("miyata", rep.verdict_miyata, witness_json(rep.witness_miyata));
    add_row("sq", rep.verdict_sq, witness_json(rep.witness_sq));
    doc.summary = {{"q", pp.q()},
                   {"c", rep.c},
                   {"h_c", rep.h_c},
                   {"divisibility", divisibility_json(rep.divisibility)},
                   {"free", free}};
    emit(doc, args.common);
    return free ? 0 : 1;
}

// ---- sq -------------------------------------------------------------

struct SqArgs {
    int64_t p = 0;
    int64_t n = 0;
    CommonOpts common;
};

int run_sq(const SqArgs& args) {
    const PrimePower pp = make_pp(args.p, args.n);
    enforce_cap(pp.q(), args.common);

    const EquivalenceSummary sum = equivalence_report(pp, thread_count());
    if (!sum.mismatches.empty()) {
        std::cerr << "error: criteria disagree for c in {";
        for (size_t i = 0; i < sum.mismatches.size(); ++i)
            std::cerr << (i ? "," : "") << sum.mismatches[i];
        std::cerr << "}; this is a bug, please report it\n";
        return 2;
    }

    ReportDocument doc;
    doc.command = "sq";
    doc.parameters = {{"p", args.p}, {"n", args.n}};
    doc.columns = {"c", "h_c", "member", "divisibility", "witness_sq"};
    ordered_json members = ordered_json::array();
    for (const auto& rep : sum.reports) {
        const bool member = *rep.verdict();
        if (member) members.push_back(rep.c);
        doc.rows.push_back({{"c", rep.c},
                            {"h_c", rep.h_c},
                            {"member", member},
                            {"divisibility", divisibility_text(rep.divisibility)},
                            {"witness_sq", witness_json(rep.witness_sq)}});
    }
    doc.summary = {{"q", pp.q()},
                   {"members", members},
                   {"member_count", sum.free_count},
                   {"excluded_count", sum.nonfree_count}};
    emit(doc, args.common);
    return 0;
}

// ---- breaks ---------------------------------------------------------

struct BreaksArgs {
    int64_t p = 0;
    int64_t n = 0;
    int64_t b = 0;
    std::vector<int64_t> omega;
    CommonOpts common;
};

int run_breaks(const BreaksArgs& args) {
    const PrimePower pp = make_pp(args.p, args.n);
    const ExtensionParams params = validate_params(pp, args.b, args.omega);
    const RamificationData ram = ramification_breaks(params);

    ReportDocument doc;
    doc.command = "breaks";
    doc.parameters = {{"p", args.p}, {"n", args.n}, {"b", args.b}, {"omega", args.omega}};
    doc.columns = {"i", "omega_valuation", "break", "epsilon_threshold"};
    for (uint32_t i = 0; i <= pp.n(); ++i)
        doc.rows.push_back({{"i", i},
                            {"omega_valuation", params.omega_vals[i]},
                            {"break", ram.breaks[i]},
                            {"epsilon_threshold", epsilon_threshold(params, i).str()}});
    doc.summary = {{"q", pp.q()},
                   {"distinct_breaks", ram.distinct_breaks},
                   {"b_max", ram.b_max},
                   {"r_b", residue(params.b, pp.q())}};
    emit(doc, args.common);
    return 0;
}

// ---- basis ----------------------------------------------------------

struct BasisArgs {
    int64_t p = 0;
    int64_t n = 0;
    int64_t b = 0;
    CommonOpts common;
};

int run_basis(const BasisArgs& args) {
    const PrimePower pp = make_pp(args.p, args.n);
    enforce_cap(pp.q(), args.common);

    const OrderData od = order_data(args.b, pp);  // b is used as b_max verbatim

    ReportDocument doc;
    doc.command = "basis";
    doc.parameters = {{"p", args.p}, {"n", args.n}, {"b", args.b}};
    doc.columns = {"j", "digits", "d", "w", "d_minus_d0"};
    for (int64_t j = 0; j < od.q(); ++j)
        doc.rows.push_back({{"j", j},
                            {"digits", digits(j, pp)},
                            {"d", od.d[j]},
                            {"w", od.w[j]},
                            {"d_minus_d0", od.d[j] - od.d[0]}});
    doc.summary = {{"q", pp.q()},
                   {"b_max", od.b_max},
                   {"free", od.free},
                   {"failing_j", od.failing_j ? ordered_json(*od.failing_j) : nullptr}};
    if (const auto gen = free_generator_check(od))
        doc.summary["generator_valuation"] = gen->valuation;
    emit(doc, args.common);
    return od.free ? 0 : 1;
}

// ---- search-converse ------------------------------------------------

struct SearchArgs {
    std::vector<int64_t> primes;
    int64_t q_max = 0;
    CommonOpts common;
};

int run_search(const SearchArgs& args) {
    enforce_cap(args.q_max, args.common);
    std::set<int64_t> primes(args.primes.begin(), args.primes.end());

    std::vector<PrimePower> pps;
    for (int64_t p : primes)
        for (uint32_t n = 2;; ++n) {
            __int128 q = 1;
            for (uint32_t s = 0; s <= n; ++s) q *= p;
            if (q > args.q_max) break;
            pps.push_back(make_pp(p, n));
        }
    if (pps.empty())
        throw std::invalid_argument("no q = p^(n+1) <= q-max with n >= 2 for the given primes");
    std::sort(pps.begin(), pps.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.q() < b.q(); });

    const std::vector<ConverseWitness> witnesses = converse_search(pps, thread_count());

    ReportDocument doc;
    doc.command = "search-converse";
    doc.parameters = {{"p", std::vector<int64_t>(primes.begin(), primes.end())},
                      {"q_max", args.q_max}};
    doc.columns = {"p", "n", "q", "c", "h_c"};
    for (const auto& w : witnesses)
        doc.rows.push_back(
            {{"p", w.p}, {"n", w.n}, {"q", w.q}, {"c", w.c}, {"h_c", w.h_c}});
    ordered_json scanned = ordered_json::array();
    for (const auto& pp : pps) scanned.push_back(pp.q());
    doc.summary = {{"q_scanned", scanned}, {"witness_count", witnesses.size()}};
    if (witnesses.empty()) {
        doc.summary["smallest_witness"] = nullptr;
        doc.summary["none_in_range"] = true;
    } else {
        doc.summary["smallest_witness"] =
            ordered_json{{"q", witnesses.front().q}, {"c", witnesses.front().c}};
    }
    emit(doc, args.common);
    if (witnesses.empty()) {
        std::cerr << "search-converse: NO WITNESSES IN RANGE: every free residue satisfied a "
                     "divisibility condition; widen --q-max before drawing conclusions\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Freeness of valuation rings over associated orders, by digit combinatorics"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Decide freeness for one extension class");
    check->add_option("--p", check_args.p, "Prime p")->required();
    check->add_option("--n", check_args.n, "Level n (degree q = p^(n+1))")->required();
    check->add_option("--b", check_args.b, "First ramification break b (coprime to p)")->required();
    check->add_option("--method", check_args.method, "Criterion to run: w, miyata, sq or all")
        ->check(CLI::IsMember({"w", "miyata", "sq", "all"}));
    add_common(check, check_args.common);

    SqArgs sq_args;
    auto* sq = app.add_subcommand("sq", "Enumerate the digit-condition set S(q)");
    sq->add_option("--p", sq_args.p, "Prime p")->required();
    sq->add_option("--n", sq_args.n, "Level n")->required();
    add_common(sq, sq_args.common);

    BreaksArgs breaks_args;
    auto* breaks = app.add_subcommand("breaks", "Ramification breaks and error-term thresholds");
    breaks->add_option("--p", breaks_args.p, "Prime p")->required();
    breaks->add_option("--n", breaks_args.n, "Level n")->required();
    breaks->add_option("--b", breaks_args.b, "b = -v_K(beta)")->required();
    breaks->add_option("--omega", breaks_args.omega,
                       "Comma-separated v_K(Omega_0),...,v_K(Omega_n); starts with 0")
        ->required()
        ->delimiter(',');
    add_common(breaks, breaks_args.common);

    BasisArgs basis_args;
    auto* basis = app.add_subcommand("basis", "Associated-order basis exponents d_j and w_j");
    basis->add_option("--p", basis_args.p, "Prime p")->required();
    basis->add_option("--n", basis_args.n, "Level n")->required();
    basis->add_option("--b", basis_args.b, "Largest break b_max (coprime to p)")->required();
    add_common(basis, basis_args.common);

    SearchArgs search_args;
    auto* search = app.add_subcommand(
        "search-converse", "Find free residues that no divisibility condition certifies");
    search->add_option("--p", search_args.primes, "Comma-separated primes to scan")
        ->required()
        ->delimiter(',');
    search->add_option("--q-max", search_args.q_max, "Largest q = p^(n+1) to scan")->required();
    add_common(search, search_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help and --version are not errors
    }

    try {
        if (*check) return run_check(check_args);
        if (*sq) return run_sq(sq_args);
        if (*breaks) return run_breaks(breaks_args);
        if (*basis) return run_basis(basis_args);
        if (*search) return run_search(search_args);
    } catch (const ConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
