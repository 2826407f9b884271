#pragma once

// Independent cross-checks for the unit and acceptance tests. Everything in
// here recomputes results from first definitions with its own arithmetic:
// exact Pascal-triangle binomials, plain triple loops, its own digit
// extraction. None of it may call into the library paths it is checking.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

// Exact binomial coefficient; valid through i = 64 (C(64,32) < 2^61).
inline uint64_t binomial(unsigned i, unsigned h) {
    if (h > i) return 0;
    if (i > 64) throw std::logic_error("oracle binomial limited to i <= 64");
    std::vector<uint64_t> row{1};
    for (unsigned r = 1; r <= i; ++r) {
        std::vector<uint64_t> next(r + 1, 1);
        for (unsigned k = 1; k < r; ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
    return row[h];
}

inline int64_t mod_pos(int64_t x, int64_t q) {
    const int64_t r = x % q;
    return r < 0 ? r + q : r;
}

inline unsigned digit_of(int64_t x, unsigned s, int64_t p) {
    for (unsigned k = 0; k < s; ++k) x /= p;
    return unsigned(x % p);
}

struct Triple {
    int64_t h, i, j;
};

// Every failing triple of the Miyata inequality, in lexicographic order,
// via the full h/i/j triple loop and exact binomials. Needs q <= 64.
inline std::vector<Triple> miyata_failures(int64_t c, int64_t p, int64_t q) {
    std::vector<std::vector<uint64_t>> pascal(q);  // rows 0..q-1, exact
    for (int64_t r = 0; r < q; ++r) {
        pascal[r].assign(size_t(r) + 1, 1);
        for (int64_t k = 1; k < r; ++k) pascal[r][k] = pascal[r - 1][k - 1] + pascal[r - 1][k];
    }
    std::vector<Triple> fails;
    for (int64_t h = 0; h < q; ++h)
        for (int64_t i = h; i < q; ++i)
            for (int64_t j = i; j < q; ++j) {
                if (i + j != q - 1 + h) continue;
                if (pascal[i][h] % uint64_t(p) == 0) continue;
                if (mod_pos(-c, q) + mod_pos(-i * c, q) - mod_pos(-h * c, q) <= 0)
                    fails.push_back({h, i, j});
            }
    return fails;
}

// h c == -1 (mod q) by linear scan.
inline int64_t h_of(int64_t c, int64_t q) {
    for (int64_t h = 1; h < q; ++h)
        if (mod_pos(h * c, q) == q - 1) return h;
    throw std::logic_error("oracle h_of: no inverse (c not coprime to q?)");
}

// First failing (u,v) of the digit condition in full lexicographic order
// over ALL pairs u,v >= 1 with u+v < c (no symmetry shortcut).
inline std::optional<std::pair<int64_t, int64_t>> sq_failure(int64_t c, int64_t p, int64_t q,
                                                             unsigned digit_count) {
    const int64_t h = h_of(c, q);
    for (int64_t u = 1; u < c; ++u)
        for (int64_t v = 1; u + v < c; ++v) {
            bool ok = false;
            for (unsigned s = 0; s < digit_count && !ok; ++s)
                ok = digit_of(mod_pos(h * u, q), s, p) + digit_of(mod_pos(h * v, q), s, p) <
                     p - 1;
            if (!ok) return std::make_pair(u, v);
        }
    return std::nullopt;
}

inline bool sq_member(int64_t c, int64_t p, int64_t q, unsigned digit_count) {
    return !sq_failure(c, p, q, digit_count).has_value();
}

inline std::set<int64_t> sq_set(int64_t p, int64_t q, unsigned digit_count) {
    std::set<int64_t> out;
    for (int64_t c = 1; c < q; ++c)
        if (c % p != 0 && sq_member(c, p, q, digit_count)) out.insert(c);
    return out;
}

}  // namespace oracle
