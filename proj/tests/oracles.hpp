#pragma once

// Brute-force reference implementations. They work on plain vectors and
// share no code with the library beyond the BigInt type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <regex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Parts = std::vector<std::int64_t>;
using Big = boost::multiprecision::cpp_int;

// Every partition of n, parts <= cap, largest first.
inline void partitions_rec(std::int64_t n, std::int64_t cap, Parts& cur, std::vector<Parts>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::int64_t p = std::min(n, cap); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Parts> partitions_of(std::int64_t n) {
    std::vector<Parts> out;
    Parts cur;
    partitions_rec(n, n, cur, out);
    return out;
}

inline std::vector<Parts> partitions_up_to(std::int64_t max_size) {
    std::vector<Parts> out;
    for (std::int64_t n = 1; n <= max_size; ++n)
        for (auto& p : partitions_of(n)) out.push_back(std::move(p));
    return out;
}

// Partitions with exactly `len` parts, each in [1, cap].
inline void bounded_rec(std::size_t len, std::int64_t cap, Parts& cur, std::vector<Parts>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (std::int64_t p = cap; p >= 1; --p) {
        cur.push_back(p);
        bounded_rec(len, p, cur, out);
        cur.pop_back();
    }
}

// Every partition with largest part + length - 1 = n, by choosing the largest
// part a and filling n - a further parts <= a.
inline std::vector<Parts> partitions_with_perimeter(std::int64_t n) {
    std::vector<Parts> out;
    for (std::int64_t a = n; a >= 1; --a) {
        const auto rest = static_cast<std::size_t>(n - a);
        std::vector<Parts> tails;
        Parts cur;
        bounded_rec(rest, a, cur, tails);
        for (auto& t : tails) {
            Parts p{a};
            p.insert(p.end(), t.begin(), t.end());
            out.push_back(std::move(p));
        }
    }
    return out;
}

inline std::int64_t sum(const Parts& p) {
    std::int64_t s = 0;
    for (auto v : p) s += v;
    return s;
}

inline std::int64_t perimeter(const Parts& p) { return p.front() + static_cast<std::int64_t>(p.size()) - 1; }

// ---- membership straight from the definitions ----

inline bool distinct(const Parts& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] == p[i - 1]) return false;
    return true;
}

inline bool odd(const Parts& p) {
    return std::all_of(p.begin(), p.end(), [](std::int64_t v) { return v % 2 == 1; });
}

inline bool d_distinct(const Parts& p, std::int64_t d) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i - 1] - p[i] < d) return false;
    return true;
}

inline bool mod_one(const Parts& p, std::int64_t d) {
    return std::all_of(p.begin(), p.end(), [d](std::int64_t v) { return v % (d + 1) == 1 % (d + 1); });
}

// Condition i: every part is 1 or d+2 mod 2d+1. Condition ii: p_i - p_{i+1}
// <= 2d+1 with p_{r+1} = 0, strictly when p_i is 1 mod 2d+1.
inline bool g_class(const Parts& p, std::int64_t d) {
    const std::int64_t m = 2 * d + 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const std::int64_t r = p[i] % m;
        const bool one = r == 1 % m;
        if (!one && r != (d + 2) % m) return false;
        const std::int64_t next = i + 1 < p.size() ? p[i + 1] : 0;
        const std::int64_t gap = p[i] - next;
        if (one ? !(gap < m) : !(gap <= m)) return false;
    }
    return true;
}

// ---- statistics ----

inline Parts conjugate(const Parts& p) {
    Parts out;
    for (std::int64_t col = 1; col <= p.front(); ++col) {
        std::int64_t height = 0;
        for (auto v : p)
            if (v >= col) ++height;
        out.push_back(height);
    }
    return out;
}

// Hook length of cell (i, j) by counting cells to the right and below.
inline std::vector<std::vector<std::int64_t>> hooks(const Parts& p) {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<std::int64_t> row;
        for (std::int64_t j = 0; j < p[i]; ++j) {
            const std::int64_t arm = p[i] - j - 1;
            std::int64_t leg = 0;
            for (std::size_t k = i + 1; k < p.size(); ++k)
                if (p[k] > j) ++leg;
            row.push_back(arm + leg + 1);
        }
        out.push_back(row);
    }
    return out;
}

// Boundary walk from the bottom-left corner: each row contributes its step
// right then one step up.
inline std::string word(const Parts& p) {
    std::string w;
    std::int64_t x = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        w.append(static_cast<std::size_t>(*it - x), 'E');
        w.push_back('N');
        x = *it;
    }
    return w;
}

// ---- numbers ----

inline Big binom(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    static std::vector<std::vector<Big>> rows;
    while (rows.size() <= static_cast<std::size_t>(n)) {
        std::vector<Big> row(rows.size() + 1, 1);
        for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = rows.back()[i - 1] + rows.back()[i];
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline Big fib(std::int64_t n) {
    Big a = 0, b = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        Big c = a + b;
        a = b;
        b = c;
    }
    return a;
}

inline bool generalized_pentagonal(std::int64_t n) {
    for (std::int64_t k = -100; k <= 100; ++k)
        if (k != 0 && k * (3 * k - 1) / 2 == n) return true;
    return false;
}

// Membership in G_d through the block grammar written as a regular
// expression over the profile word.
inline bool g_class_by_regex(const std::string& w, std::int64_t d) {
    const auto D = std::to_string(d);
    const auto D1 = std::to_string(d + 1);
    const std::regex re("^EN*(E{" + D1 + "}N*NE{" + D + "}N*)*(E{" + D1 + "}N*)?N$");
    return std::regex_match(w, re);
}

// Dense univariate truncated power series helpers.
using Dense = std::vector<Big>;

inline Dense mul(const Dense& a, const Dense& b, std::size_t bound) {
    Dense out(bound + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= bound; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= bound; ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace oracle
