#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "cyclowalk/number_theory.hpp"
#include "cyclowalk/rational.hpp"

namespace cyclowalk {

/// Integer coefficients of Φ_n, lowest degree first. Monic of degree φ(n).
struct CycloPoly {
    unsigned n = 1;
    std::vector<Integer> coeffs;

    unsigned degree() const { return static_cast<unsigned>(coeffs.size() - 1); }
    friend bool operator==(const CycloPoly&, const CycloPoly&) = default;
};

namespace detail {

// Exact division by a monic integer polynomial; returns the quotient and
// leaves the remainder in `num`.
inline std::vector<Integer> divide_monic(std::vector<Integer>& num, const std::vector<Integer>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) return {Integer(0)};
    std::vector<Integer> quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        const Integer c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t t = 0; t <= dd; ++t) num[i - dd + t] -= c * den[t];
    }
    num.resize(dd);
    return quot;
}

}  // namespace detail

CycloPoly cyclotomic_poly(unsigned n);

/// Reduction data for ℚ[ζ_n] in the power basis ζ_n^0..ζ_n^{φ(n)-1}.
/// Shared and immutable once built.
class CyclotomicField {
public:
    explicit CyclotomicField(unsigned n) : n_(n), modulus_(cyclotomic_poly(n)) {
        phi_ = modulus_.degree();
        for (unsigned t = 0; t < phi_; ++t)
            if (modulus_.coeffs[t] != 0) terms_.emplace_back(t, modulus_.coeffs[t].get_si());
        constant_ = modulus_.coeffs[0].get_si();
    }

    unsigned level() const { return n_; }
    unsigned degree() const { return phi_; }
    const CycloPoly& modulus() const { return modulus_; }

    /// Reduces a polynomial of any degree modulo Φ_n in place.
    void reduce(std::vector<Integer>& poly) const {
        for (std::size_t i = poly.size(); i-- > phi_;) {
            if (poly[i] == 0) continue;
            const Integer c = poly[i];
            const std::size_t base = i - phi_;
            for (auto [t, a] : terms_) {
                if (a > 0)
                    mpz_submul_ui(poly[base + t].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(a));
                else
                    mpz_addmul_ui(poly[base + t].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-a));
            }
        }
        poly.resize(phi_);
    }

    /// v ← x·v mod Φ_n for a reduced vector.
    void mul_by_x(std::vector<Integer>& v) const {
        v.insert(v.begin(), Integer(0));
        reduce(v);
    }

    /// v ← x⁻¹·v mod Φ_n. Φ_n(0) = ±1, so x is a unit.
    void div_by_x(std::vector<Integer>& v) const {
        const Integer c = v[0] * constant_;  // c / Φ(0) == c·Φ(0) for Φ(0) = ±1
        if (c != 0) {
            for (auto [t, a] : terms_) v[t] -= c * a;
            // the leading x^φ term contributes -c at degree φ
        }
        v.erase(v.begin());
        v.push_back(-c);
    }

private:
    unsigned n_;
    unsigned phi_ = 0;
    CycloPoly modulus_;
    std::vector<std::pair<unsigned, long>> terms_;  // nonzero non-leading terms of Φ_n
    long constant_ = 0;
};

namespace detail {

struct FieldCache {
    std::mutex mu;
    std::map<unsigned, std::shared_ptr<const CycloPoly>> polys;
    std::map<unsigned, std::shared_ptr<const CyclotomicField>> fields;

    static FieldCache& instance() {
        static FieldCache cache;
        return cache;
    }
};

}  // namespace detail

/// Φ_n = (x^n - 1) / ∏_{d | n, d < n} Φ_d, by exact division.
inline CycloPoly cyclotomic_poly(unsigned n) {
    if (n == 0) throw Error("cyclotomic_poly: n must be positive");
    auto& cache = detail::FieldCache::instance();
    {
        std::lock_guard lock(cache.mu);
        if (auto it = cache.polys.find(n); it != cache.polys.end()) return *it->second;
    }
    std::vector<Integer> num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d : divisors(n)) {
        if (d == n) break;
        auto phi_d = cyclotomic_poly(d);
        auto quot = detail::divide_monic(num, phi_d.coeffs);
        for (const auto& r : num)
            if (r != 0) throw std::logic_error("cyclotomic_poly: inexact division");
        num = std::move(quot);
    }
    CycloPoly out{n, std::move(num)};
    std::lock_guard lock(cache.mu);
    cache.polys.emplace(n, std::make_shared<const CycloPoly>(out));
    return out;
}

inline std::shared_ptr<const CyclotomicField> field(unsigned n) {
    if (n == 0) throw Error("cyclotomic level must be positive");
    auto& cache = detail::FieldCache::instance();
    {
        std::lock_guard lock(cache.mu);
        if (auto it = cache.fields.find(n); it != cache.fields.end()) return it->second;
    }
    auto f = std::make_shared<const CyclotomicField>(n);
    std::lock_guard lock(cache.mu);
    return cache.fields.emplace(n, std::move(f)).first->second;
}

}  // namespace cyclowalk
