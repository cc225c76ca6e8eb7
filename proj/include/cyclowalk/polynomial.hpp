#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "cyclowalk/exact_matrix.hpp"

namespace cyclowalk {

/// Univariate polynomial over ℚ[ζ_n]; coeffs[j] multiplies λ^j.
/// All coefficients share one level; the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<CycloNum> ascending) : c_(std::move(ascending)) { trim(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const CycloNum& coeff(std::size_t j) const { return c_.at(j); }
    const std::vector<CycloNum>& coeffs() const { return c_; }
    unsigned level() const { return c_.empty() ? 1 : c_.front().level(); }

    CycloNum operator()(const CycloNum& x) const {
        CycloNum acc(x.level());
        for (std::size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
        return acc;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<CycloNum> r(a.c_.size() + b.c_.size() - 1, CycloNum(a.level()));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial derivative() const {
        std::vector<CycloNum> r;
        for (std::size_t j = 1; j < c_.size(); ++j) r.push_back(Rational(static_cast<long>(j)) * c_[j]);
        return Polynomial(std::move(r));
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        const CycloNum inv = inverse(c_.back());
        std::vector<CycloNum> r;
        for (const auto& c : c_) r.push_back(c * inv);
        return Polynomial(std::move(r));
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw Error("polynomial division by zero");
        if (degree() < d.degree()) return {Polynomial(), *this};
        std::vector<CycloNum> rem = c_;
        std::vector<CycloNum> quot(c_.size() - d.c_.size() + 1, CycloNum(level()));
        const CycloNum lead_inv = inverse(d.c_.back());
        for (std::size_t i = rem.size(); i-- >= d.c_.size();) {
            const std::size_t shift = i - (d.c_.size() - 1);
            const CycloNum f = rem[i] * lead_inv;
            quot[shift] = f;
            if (f.is_zero()) continue;
            for (std::size_t t = 0; t < d.c_.size(); ++t) rem[shift + t] -= f * d.c_[t];
        }
        rem.resize(d.c_.size() - 1, CycloNum(level()));
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    /// Division by λ - r, which must be exact.
    Polynomial divide_by_root(const CycloNum& r) const {
        auto [q, rem] = divmod(Polynomial({-r, CycloNum::from_rational(r.level(), 1)}));
        if (!rem.is_zero()) throw std::logic_error("divide_by_root: not a root");
        return q;
    }

    /// Numerically evaluated coefficients.
    std::vector<std::complex<double>> eval_coeffs() const {
        std::vector<std::complex<double>> r;
        for (const auto& c : c_) r.push_back(c.eval());
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<CycloNum> c_;
};

/// Monic gcd by the Euclidean algorithm.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// det(λ·I - M) of a 3×3 matrix: λ³ - tr(M)·λ² + e₂(M)·λ - det(M).
inline Polynomial char_poly_exact(const ExactMatrix& m) {
    if (m.dim() != 3) throw DimensionMismatch("char_poly_exact expects a 3x3 matrix");
    auto minor2 = [&](std::size_t i, std::size_t j) { return m(i, i) * m(j, j) - m(i, j) * m(j, i); };
    const CycloNum e2 = minor2(0, 1) + minor2(0, 2) + minor2(1, 2);
    const CycloNum det = m(0, 0) * minor2(1, 2) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    return Polynomial({-det, e2, -m.trace(), CycloNum::from_rational(m.level(), 1)});
}

}  // namespace cyclowalk
