#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hookcomb {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Binomial coefficient with the combinatorial convention that it vanishes
/// outside 0 <= k <= n (negative n included).
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Fibonacci numbers with F(0)=0, F(1)=F(2)=1. This offset is the one for
/// which the number of distinct-part partitions with perimeter n is F(n).
inline BigInt fibonacci(std::uint64_t n) {
    BigInt a = 0, b = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

/// F(0..n) in one pass.
inline std::vector<BigInt> fibonacci_table(std::uint64_t n) {
    std::vector<BigInt> f(n + 1);
    if (n >= 1) f[1] = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f[i] = f[i - 1] + f[i - 2];
    return f;
}

}  // namespace hookcomb
