#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cyclowalk/cyclotomic.hpp"
#include "cyclowalk/linear_solve.hpp"

namespace cyclowalk {

/**
 * An element of the cyclotomic field ℚ[ζ_n], ζ_n = e^{2πi/n}.
 *
 * Stored in the power basis ζ_n^0..ζ_n^{φ(n)-1} as an integer numerator
 * vector over one common positive denominator. The representation is
 * canonical (reduced mod Φ_n, gcd of numerators and denominator is 1), so
 * equality is coefficient-wise equality.
 *
 * The level is explicit and never minimized automatically: arithmetic
 * requires both operands at the same level, use embed() first.
 */
class CycloNum {
public:
    CycloNum() : CycloNum(1u) {}

    /// Zero at the given level.
    explicit CycloNum(unsigned level) : field_(field(level)), num_(field_->degree()), den_(1) {}

    static CycloNum from_rational(unsigned level, Rational r) {
        r.canonicalize();
        CycloNum x(level);
        x.num_[0] = r.get_num();
        x.den_ = r.get_den();
        return x;
    }

    static CycloNum from_integers(unsigned level, std::vector<Integer> num, Integer den = 1) {
        CycloNum x(level);
        if (num.size() != x.degree())
            throw DimensionMismatch("level " + std::to_string(level) + " needs " + std::to_string(x.degree()) +
                                    " coefficients, got " + std::to_string(num.size()));
        if (den == 0) throw Error("zero denominator");
        if (den < 0) {
            den = -den;
            for (auto& c : num) c = -c;
        }
        x.num_ = std::move(num);
        x.den_ = std::move(den);
        x.normalize();
        return x;
    }

    static CycloNum from_coeffs(unsigned level, const std::vector<Rational>& coeffs) {
        CycloNum x(level);
        if (coeffs.size() != x.degree())
            throw DimensionMismatch("level " + std::to_string(level) + " needs " + std::to_string(x.degree()) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
        Integer den = 1;
        for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        for (std::size_t j = 0; j < coeffs.size(); ++j) x.num_[j] = coeffs[j].get_num() * (den / coeffs[j].get_den());
        x.den_ = den;
        x.normalize();
        return x;
    }

    unsigned level() const { return field_->level(); }
    unsigned degree() const { return field_->degree(); }

    Rational coeff(std::size_t j) const {
        Rational r(num_.at(j), den_);
        r.canonicalize();
        return r;
    }
    std::vector<Rational> coeffs() const {
        std::vector<Rational> out;
        out.reserve(num_.size());
        for (std::size_t j = 0; j < num_.size(); ++j) out.push_back(coeff(j));
        return out;
    }
    const std::vector<Integer>& numerators() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const {
        for (const auto& c : num_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t j = 1; j < num_.size(); ++j)
            if (num_[j] != 0) return false;
        return true;
    }
    /// All power-basis coefficients are integers, i.e. x ∈ ℤ[ζ_n].
    bool has_integer_coeffs() const { return den_ == 1; }

    CycloNum operator-() const {
        CycloNum r = *this;
        for (auto& c : r.num_) c = -c;
        return r;
    }

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) { return combine(a, b, false); }
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) { return combine(a, b, true); }

    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        check_same_level(a, b);
        CycloNum r(a.level());
        if (a.is_zero() || b.is_zero()) return r;
        const std::size_t d = a.degree();
        std::vector<Integer> prod(2 * d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            if (a.num_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (b.num_[j] == 0) continue;
                mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
            }
        }
        a.field_->reduce(prod);
        r.num_ = std::move(prod);
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }

    friend CycloNum operator*(const Rational& s, const CycloNum& x) {
        CycloNum r = x;
        for (auto& c : r.num_) c *= s.get_num();
        r.den_ *= s.get_den();
        r.normalize();
        return r;
    }
    friend CycloNum operator*(const CycloNum& x, const Rational& s) { return s * x; }

    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return a.level() == b.level() && a.den_ == b.den_ && a.num_ == b.num_;
    }

    /// Complex embedding Σ_j c_j·e^{2πij/n}.
    std::complex<double> eval() const {
        std::complex<double> acc = 0.0;
        const double step = 2.0 * std::numbers::pi / level();
        for (std::size_t j = 0; j < num_.size(); ++j) {
            if (num_[j] == 0) continue;
            const double c = Rational(num_[j], den_).get_d();
            acc += c * std::polar(1.0, step * static_cast<double>(j));
        }
        return acc;
    }

    /// Human-readable form, e.g. "1/3 - 2*z6^1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t j = 0; j < num_.size(); ++j) {
            if (num_[j] == 0) continue;
            Rational c = coeff(j);
            bool neg = sgn(c) < 0;
            if (neg) c = -c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (j == 0) {
                out += c.get_str();
            } else {
                if (c != 1) out += c.get_str() + "*";
                out += "z" + std::to_string(level()) + "^" + std::to_string(j);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.to_string(); }

    const CyclotomicField& field_data() const { return *field_; }

private:
    static void check_same_level(const CycloNum& a, const CycloNum& b) {
        if (a.level() != b.level()) throw LevelMismatch(a.level(), b.level());
    }

    static CycloNum combine(const CycloNum& a, const CycloNum& b, bool subtract) {
        check_same_level(a, b);
        CycloNum r(a.level());
        auto op = [subtract](Integer& out, const Integer& x, const Integer& y) {
            if (subtract)
                mpz_sub(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            else
                mpz_add(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        };
        if (a.den_ == b.den_) {
            for (std::size_t j = 0; j < r.num_.size(); ++j) op(r.num_[j], a.num_[j], b.num_[j]);
            r.den_ = a.den_;
        } else {
            for (std::size_t j = 0; j < r.num_.size(); ++j) op(r.num_[j], a.num_[j] * b.den_, b.num_[j] * a.den_);
            r.den_ = a.den_ * b.den_;
        }
        r.normalize();
        return r;
    }

    void normalize() {
        if (den_ == 1) return;
        if (is_zero()) {
            den_ = 1;
            return;
        }
        Integer g = den_;
        for (const auto& c : num_) {
            if (c == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) return;
        }
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Integer> num_;
    Integer den_;
};

/// ζ_n^power, canonically reduced.
inline CycloNum zeta(unsigned n, long long power) {
    const auto f = field(n);
    long long e = power % static_cast<long long>(n);
    if (e < 0) e += n;
    std::vector<Integer> v(f->degree());
    v[0] = 1;
    for (long long i = 0; i < e; ++i) f->mul_by_x(v);
    return CycloNum::from_integers(n, std::move(v));
}

namespace detail {

// Level-`target` images of x^{step·j}, j = 0..count-1.
inline std::vector<std::vector<Integer>> monomial_images(unsigned target, unsigned step, unsigned count) {
    const auto f = field(target);
    std::vector<std::vector<Integer>> out;
    out.reserve(count);
    std::vector<Integer> cur(f->degree());
    cur[0] = 1;
    for (unsigned j = 0; j < count; ++j) {
        out.push_back(cur);
        if (j + 1 < count)
            for (unsigned s = 0; s < step; ++s) f->mul_by_x(cur);
    }
    return out;
}

inline CycloNum apply_images(const CycloNum& x, unsigned target, const std::vector<std::vector<Integer>>& images) {
    const std::size_t out_deg = field(target)->degree();
    std::vector<Integer> acc(out_deg);
    for (std::size_t j = 0; j < images.size(); ++j) {
        const Integer& c = x.numerators()[j];
        if (c == 0) continue;
        for (std::size_t t = 0; t < out_deg; ++t)
            if (images[j][t] != 0) mpz_addmul(acc[t].get_mpz_t(), c.get_mpz_t(), images[j][t].get_mpz_t());
    }
    return CycloNum::from_integers(target, std::move(acc), x.denominator());
}

}  // namespace detail

/// Complex conjugation, the automorphism ζ_n ↦ ζ_n^{-1}.
inline CycloNum conj(const CycloNum& x) {
    const auto& f = x.field_data();
    std::vector<std::vector<Integer>> images;
    images.reserve(f.degree());
    std::vector<Integer> cur(f.degree());
    cur[0] = 1;
    for (unsigned j = 0; j < f.degree(); ++j) {
        images.push_back(cur);
        f.div_by_x(cur);
    }
    return detail::apply_images(x, x.level(), images);
}

/// The Galois automorphism ζ_n ↦ ζ_n^a, gcd(a, n) = 1.
inline CycloNum galois(const CycloNum& x, unsigned a) {
    const unsigned n = x.level();
    if (std::gcd(a, n) != 1) throw Error("galois: exponent not coprime to level");
    std::vector<std::vector<Integer>> images;
    for (unsigned j = 0; j < x.degree(); ++j)
        images.push_back(zeta(n, static_cast<long long>(a % n) * j).numerators());
    return detail::apply_images(x, n, images);
}

/// The same field element written at level L (x.level() must divide L).
inline CycloNum embed(const CycloNum& x, unsigned L) {
    if (L == 0 || L % x.level() != 0) throw NotAMultiple(x.level(), L);
    if (L == x.level()) return x;
    const auto images = detail::monomial_images(L, L / x.level(), x.degree());
    return detail::apply_images(x, L, images);
}

/// True iff x is fixed by every σ_a with a ≡ 1 (mod n), gcd(a, L) = 1,
/// which characterizes ℚ[ζ_n] inside ℚ[ζ_L]. Independent check for descend().
inline bool galois_fixed(const CycloNum& x, unsigned n) {
    const unsigned L = x.level();
    if (n == 0 || L % n != 0) throw NotAMultiple(n, L);
    for (unsigned a = 1 + n; a < L; a += n)
        if (std::gcd(a, L) == 1 && galois(x, a) != x) return false;
    return true;
}

/// Decides x ∈ ℚ[ζ_n] for x at level L, n | L, by solving the exact rational
/// system  Σ_j y_j·embed(ζ_n^j, L) = x.  Returns the level-n representation,
/// or nullopt when x is not in the subfield.
inline std::optional<CycloNum> descend(const CycloNum& x, unsigned n) {
    const unsigned L = x.level();
    if (n == 0 || L % n != 0) throw NotAMultiple(n, L);
    if (n == L) return x;
    const unsigned dn = totient(n), dL = x.degree();
    const auto images = detail::monomial_images(L, L / n, dn);
    RationalMatrix a(dL, dn);
    for (unsigned j = 0; j < dn; ++j)
        for (unsigned t = 0; t < dL; ++t) a(t, j) = images[j][t];
    std::vector<Rational> rhs(x.numerators().begin(), x.numerators().end());
    auto sol = solve_exact(std::move(a), std::move(rhs));
    std::optional<CycloNum> out;
    if (sol) {
        for (auto& y : *sol) y /= x.denominator();
        out = CycloNum::from_coeffs(n, *sol);
    }
#if defined(CYCLOWALK_CHECK_DESCENT) || !defined(NDEBUG)
    if (out.has_value() != galois_fixed(x, n))
        throw std::logic_error("descend: linear solve disagrees with Galois fixed-point test");
#endif
    return out;
}

/// Smallest divisor n of x.level() with x ∈ ℚ[ζ_n], and x written there.
inline std::pair<unsigned, CycloNum> descend_minimal(const CycloNum& x) {
    for (unsigned n : divisors(x.level()))
        if (auto d = descend(x, n)) return {n, *d};
    return {x.level(), x};
}

/// x ∈ (1/denominator)·ℤ[ζ_n]. Levels are reconciled through lcm(n, x.level())
/// followed by descent to n; a failed descent means false.
inline bool in_ring_of_integers(const CycloNum& x, unsigned n, const Integer& denominator = 1) {
    const unsigned L = checked_lcm(n, x.level());
    const CycloNum scaled = Rational(denominator) * embed(x, L);
    auto d = descend(scaled, n);
    return d && d->has_integer_coeffs();
}

}  // namespace cyclowalk

namespace cyclowalk {

/// Multiplicative inverse in ℚ[ζ_n], by solving the exact linear system of
/// multiplication by x. Throws on zero.
inline CycloNum inverse(const CycloNum& x) {
    if (x.is_zero()) throw Error("inverse of zero");
    const auto& f = x.field_data();
    const unsigned d = f.degree();
    RationalMatrix m(d, d);
    std::vector<Integer> col = x.numerators();
    for (unsigned j = 0; j < d; ++j) {
        for (unsigned t = 0; t < d; ++t) m(t, j) = Rational(col[t]);
        f.mul_by_x(col);
    }
    std::vector<Rational> rhs(d);
    rhs[0] = x.denominator();
    auto sol = solve_exact(std::move(m), std::move(rhs));
    if (!sol) throw std::logic_error("inverse: singular multiplication map");
    return CycloNum::from_coeffs(x.level(), *sol);
}

}  // namespace cyclowalk
