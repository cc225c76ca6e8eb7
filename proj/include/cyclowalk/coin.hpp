#pragma once

#include <string>
#include <utility>

#include "cyclowalk/exact_matrix.hpp"

namespace cyclowalk {

/// Exact square root of a positive integer inside a cyclotomic field.
///
/// Built from quadratic Gauss sums: for an odd prime p,
/// Σ_a (a|p)·ζ_p^a equals √p (p ≡ 1 mod 4) or i·√p (p ≡ 3 mod 4);
/// √2 = ζ_8 + ζ_8^{-1}. The result lives at the lcm of the needed levels.
inline CycloNum sqrt_exact(unsigned n) {
    if (n == 0) throw Error("sqrt_exact: n must be positive");
    Integer outside = 1;
    CycloNum root = CycloNum::from_rational(1, 1);
    for (auto [p, e] : factorize(n)) {
        for (unsigned i = 0; i < e / 2; ++i) outside *= p;
        if (e % 2 == 0) continue;
        CycloNum sp;
        if (p == 2) {
            sp = zeta(8, 1) + zeta(8, 7);
        } else {
            CycloNum g(p);
            for (unsigned a = 1; a < p; ++a) {
                // Euler's criterion for the Legendre symbol
                Integer r;
                mpz_powm_ui(r.get_mpz_t(), Integer(a).get_mpz_t(), (p - 1) / 2, Integer(p).get_mpz_t());
                g += (r == 1) ? zeta(p, a) : -zeta(p, a);
            }
            if (p % 4 == 1) {
                sp = g;
            } else {
                const unsigned L = 4 * p;
                sp = -embed(zeta(4, 1), L) * embed(g, L);
            }
        }
        const unsigned L = checked_lcm(root.level(), sp.level());
        root = embed(root, L) * embed(sp, L);
    }
    return Rational(outside) * root;
}

/// Grover matrix G(n): 2/n - 1 on the diagonal, 2/n elsewhere, at level 1.
inline ExactMatrix grover_matrix(unsigned n) {
    if (n < 2) throw Error("grover_matrix: n must be at least 2");
    ExactMatrix g(n, 1);
    Rational off(2, n);
    off.canonicalize();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            g.set(i, j, CycloNum::from_rational(1, off - (i == j ? 1 : 0)));
    return g;
}

/// Fourier matrix F(n) with entries ζ_n^{uv}/√n, u, v = 0..n-1.
/// F(3) lives at level 12 since 1/√3 = (ζ_12 + ζ_12^{11})/3.
inline ExactMatrix fourier_matrix(unsigned n) {
    if (n < 2) throw Error("fourier_matrix: n must be at least 2");
    const CycloNum root = sqrt_exact(n);
    const unsigned L = checked_lcm(n, root.level());
    const CycloNum scale = Rational(1, n) * embed(root, L);  // 1/√n = √n/n
    ExactMatrix f(n, L);
    for (unsigned u = 0; u < n; ++u)
        for (unsigned v = 0; v < n; ++v) f.set(u, v, embed(zeta(n, static_cast<long long>(u) * v), L) * scale);
    return f;
}

/// A 3×3 exactly unitary coin. Construction validates unitarity.
class CoinMatrix {
public:
    explicit CoinMatrix(ExactMatrix m) : m_(std::move(m)) {
        if (m_.dim() != 3) throw DimensionMismatch("coin must be 3x3, got " + std::to_string(m_.dim()));
        require_unitary(m_);
    }

    unsigned level() const { return m_.level(); }
    const ExactMatrix& matrix() const { return m_; }
    /// Entry c_{ij} with 1-based indices, as written in the literature.
    const CycloNum& entry(std::size_t i, std::size_t j) const { return m_(i - 1, j - 1); }

private:
    ExactMatrix m_;
};

inline CoinMatrix grover_coin() { return CoinMatrix(grover_matrix(3)); }
inline CoinMatrix fourier_coin() { return CoinMatrix(fourier_matrix(3)); }

}  // namespace cyclowalk
