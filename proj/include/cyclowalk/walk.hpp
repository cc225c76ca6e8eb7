#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "cyclowalk/coin.hpp"
#include "cyclowalk/polynomial.hpp"

namespace cyclowalk {

// Chirality order inside every vertex block.
enum Chirality : std::size_t { kLeft = 0, kStay = 1, kRight = 2 };

enum class ShiftType { Moving, FlipFlop };

inline std::string to_string(ShiftType s) { return s == ShiftType::Moving ? "moving" : "flip-flop"; }

/// A 3-state walk on the cycle C_N: cycle size, coin and shift convention.
class WalkSpec {
public:
    WalkSpec(unsigned n, CoinMatrix coin, ShiftType shift = ShiftType::Moving)
        : n_(n), coin_(std::move(coin)), shift_(shift) {
        if (n_ < 2) throw Error("cycle size N must be at least 2");
    }

    unsigned n() const { return n_; }
    const CoinMatrix& coin() const { return coin_; }
    ShiftType shift() const { return shift_; }

    /// Level of the Fourier blocks, lcm(N, coin level).
    unsigned block_level() const { return checked_lcm(n_, coin_.level()); }

    /// The matrix whose rows feed P, R and Q: C itself for the moving shift,
    /// C with rows ← and → exchanged for the flip-flop shift
    /// (P = |←⟩⟨→|C, Q = |→⟩⟨←|C).
    ExactMatrix effective_coin() const {
        const ExactMatrix& c = coin_.matrix();
        if (shift_ == ShiftType::Moving) return c;
        ExactMatrix s(3, c.level());
        for (std::size_t j = 0; j < 3; ++j) {
            s.set(kLeft, j, c(kRight, j));
            s.set(kStay, j, c(kStay, j));
            s.set(kRight, j, c(kLeft, j));
        }
        return s;
    }

private:
    unsigned n_;
    CoinMatrix coin_;
    ShiftType shift_;
};

/// Û(k) = diag(ζ_N^k, 1, ζ_N^{-k})·C' for k = 0..N-1, where C' is the
/// effective coin. Every block is exact at level lcm(N, coin level).
inline std::vector<ExactMatrix> build_blocks(const WalkSpec& spec) {
    const unsigned n = spec.n(), L = spec.block_level();
    const ExactMatrix c = spec.effective_coin().embedded(L);
    std::vector<ExactMatrix> blocks;
    blocks.reserve(n);
    const long long step = L / n;
    for (unsigned k = 0; k < n; ++k) {
        const CycloNum up = zeta(L, step * k), down = zeta(L, -step * static_cast<long long>(k));
        ExactMatrix b(3, L);
        for (std::size_t j = 0; j < 3; ++j) {
            b.set(kLeft, j, up * c(kLeft, j));
            b.set(kStay, j, c(kStay, j));
            b.set(kRight, j, down * c(kRight, j));
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

/// The 3N×3N evolution operator U_N at the coin level.
///
/// Block row x holds R at column x, P at column x+1 and Q at column x-1
/// (mod N); for N = 2 the operator is [[R, P+Q], [P+Q, R]].
inline ExactMatrix build_full(const WalkSpec& spec) {
    const unsigned n = spec.n();
    (void)spec.block_level();  // level cap applies to the walk as a whole
    const ExactMatrix c = spec.effective_coin();
    const unsigned m = c.level();
    ExactMatrix u(3 * n, m);
    auto add_row = [&](unsigned bx, unsigned by, std::size_t chir) {
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t r = 3 * bx + chir, col = 3 * by + j;
            u.set(r, col, u(r, col) + c(chir, j));
        }
    };
    for (unsigned x = 0; x < n; ++x) {
        add_row(x, x, kStay);
        add_row(x, (x + 1) % n, kLeft);
        add_row(x, (x + n - 1) % n, kRight);
    }
    return u;
}

inline Eigen::MatrixXcd to_complex(const ExactMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXcd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(i, j).eval();
    return out;
}

/// Floating-point state Ψ_t: vertex-major, chirality (←, •, →) inside.
struct WalkState {
    std::vector<std::complex<double>> amplitudes;

    std::size_t vertices() const { return amplitudes.size() / 3; }
    const std::complex<double>& at(std::size_t vertex, std::size_t chirality) const {
        return amplitudes.at(3 * vertex + chirality);
    }
    double norm() const {
        double s = 0;
        for (const auto& a : amplitudes) s += std::norm(a);
        return std::sqrt(s);
    }
};

inline constexpr double kNormTolerance = 1e-10;

/// Ψ_0..Ψ_steps with Ψ_{t+1} = U_N·Ψ_t in double precision.
inline std::vector<WalkState> evolve(const WalkSpec& spec, const WalkState& initial, std::size_t steps) {
    if (initial.amplitudes.size() != 3 * spec.n())
        throw DimensionMismatch("initial state has " + std::to_string(initial.amplitudes.size()) +
                                " amplitudes, expected " + std::to_string(3 * spec.n()));
    if (std::abs(initial.norm() - 1.0) > kNormTolerance) throw Error("initial state is not normalized");

    const Eigen::MatrixXcd u = to_complex(build_full(spec));
    std::vector<WalkState> out{initial};
    out.reserve(steps + 1);
    Eigen::VectorXcd psi = Eigen::Map<const Eigen::VectorXcd>(initial.amplitudes.data(),
                                                              static_cast<Eigen::Index>(initial.amplitudes.size()));
    for (std::size_t t = 0; t < steps; ++t) {
        psi = u * psi;
        out.push_back(WalkState{{psi.data(), psi.data() + psi.size()}});
    }
    return out;
}

using Spinor = std::array<std::complex<double>, 3>;

/// Ψ̂(k) = Σ_x e^{-2πikx/N}·Ψ(x), no normalization.
inline std::vector<Spinor> fourier_transform(const WalkState& state, unsigned n) {
    if (state.amplitudes.size() != 3 * n) throw DimensionMismatch("state length does not match 3N");
    std::vector<Spinor> out(n, Spinor{});
    for (unsigned k = 0; k < n; ++k)
        for (unsigned x = 0; x < n; ++x) {
            const auto w = std::polar(1.0, -2.0 * std::numbers::pi * k * x / n);
            for (std::size_t c = 0; c < 3; ++c) out[k][c] += w * state.at(x, c);
        }
    return out;
}

/// Ψ(x) = (1/N)·Σ_k e^{2πikx/N}·Ψ̂(k).
inline WalkState inverse_fourier_transform(const std::vector<Spinor>& modes) {
    const auto n = static_cast<unsigned>(modes.size());
    WalkState out{std::vector<std::complex<double>>(3 * n)};
    for (unsigned x = 0; x < n; ++x)
        for (unsigned k = 0; k < n; ++k) {
            const auto w = std::polar(1.0, 2.0 * std::numbers::pi * k * x / n) / static_cast<double>(n);
            for (std::size_t c = 0; c < 3; ++c) out.amplitudes[3 * x + c] += w * modes[k][c];
        }
    return out;
}

/// Numeric roots of an exact polynomial with multiplicity.
///
/// Repeated roots are separated exactly first: with g = gcd(p, p'), a cubic
/// with a multiple root has it as the root of a linear or quadratic g, which
/// is found in the coefficient field itself. Only the squarefree remainder
/// goes through the companion-matrix eigensolver.
inline std::vector<std::complex<double>> polynomial_roots(const Polynomial& p) {
    std::vector<std::complex<double>> roots;
    Polynomial rest = p.monic();
    const Polynomial g = gcd(rest, rest.derivative());
    if (g.degree() >= 1) {
        // For degree ≤ 3 every repeated root r is the root of (λ - r)^{deg g}.
        const CycloNum r = -(Rational(1, g.degree()) * g.coeff(static_cast<std::size_t>(g.degree() - 1)));
        while (rest.degree() > 0 && rest(r).is_zero()) {
            rest = rest.divide_by_root(r);
            roots.push_back(r.eval());
        }
        if (gcd(rest, rest.derivative()).degree() >= 1) throw std::logic_error("polynomial_roots: degree too high");
    }
    const int d = rest.degree();
    if (d >= 1) {
        const auto c = rest.eval_coeffs();
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
        for (int j = 0; j < d; ++j) companion(0, j) = -c[static_cast<std::size_t>(d - 1 - j)];
        for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
        for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
    }
    return roots;
}

/// Eigenvalues of each Fourier block, index k.
inline std::vector<std::vector<std::complex<double>>> block_spectra(const WalkSpec& spec) {
    std::vector<std::vector<std::complex<double>>> out;
    for (const auto& b : build_blocks(spec)) out.push_back(polynomial_roots(char_poly_exact(b)));
    return out;
}

/// Spec(U_N) as the union of the block spectra, concatenated in k order.
inline std::vector<std::complex<double>> spectrum_numeric(const WalkSpec& spec) {
    std::vector<std::complex<double>> all;
    for (auto& s : block_spectra(spec)) all.insert(all.end(), s.begin(), s.end());
    return all;
}

}  // namespace cyclowalk
