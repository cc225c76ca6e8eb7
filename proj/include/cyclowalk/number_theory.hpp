#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "cyclowalk/error.hpp"

namespace cyclowalk {

inline constexpr unsigned long long kDefaultLevelCap = 30000;

/// Largest cyclotomic level any lcm computation may produce.
/// CYCLOWALK_LEVEL_CAP overrides the default.
inline unsigned long long level_cap() {
    if (const char* env = std::getenv("CYCLOWALK_LEVEL_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultLevelCap;
}

/// lcm(a, b), throwing LevelCapExceeded past the configured cap.
inline unsigned checked_lcm(unsigned long long a, unsigned long long b) {
    unsigned long long l = std::lcm(a, b);
    const auto cap = level_cap();
    if (l > cap) throw LevelCapExceeded(l, cap);
    return static_cast<unsigned>(l);
}

inline std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Euler's totient.
inline unsigned totient(unsigned n) {
    if (n == 0) throw Error("totient: n must be positive");
    unsigned result = n;
    for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

/// Divisors in ascending order.
inline std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace cyclowalk
