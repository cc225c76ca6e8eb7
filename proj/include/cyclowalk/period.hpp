#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclowalk/walk.hpp"

namespace cyclowalk {

inline constexpr std::uint64_t kDefaultTMax = 4096;

/// Exact evidence that a walk is not periodic.
///
/// If U_N^T = I then every eigenvalue of every block is a root of unity,
/// so every coefficient of every factor of the characteristic polynomial of
/// Û(k) is an algebraic integer. `trace` is such a quantity (minus a
/// coefficient of the factor left after removing eigenvalues ±1); it lies in
/// ℚ[ζ_level], so periodicity would force it into ℤ[ζ_level]. The certificate
/// shows it is not: `reduced_form` = scale·ζ_level^unit_power·trace has
/// integer coefficients, and those at `violations` are not divisible by
/// `scale`.
struct TraceCertificate {
    unsigned k = 0;
    CycloNum trace;
    unsigned level = 1;
    CycloNum reduced_form;
    Integer scale = 1;
    unsigned unit_power = 0;
    /// The tested quantity is -a_j for the residual factor Σ a_j λ^j.
    unsigned coefficient_index = 0;
    unsigned residual_degree = 0;
    std::vector<int> removed_roots;
    std::vector<std::size_t> violations;
};

struct Finite {
    std::uint64_t period = 0;
    std::vector<std::uint64_t> block_orders;
};

struct CertifiedInfinite {
    TraceCertificate certificate;
};

struct UnknownUpTo {
    std::uint64_t bound = 0;
    std::vector<std::optional<std::uint64_t>> block_orders;
};

using PeriodResult = std::variant<Finite, CertifiedInfinite, UnknownUpTo>;

/// Smallest t ≤ t_max with M^t = I, by iterated exact multiplication.
///
/// M must be unitary, so M^{a+b} = I iff M^a = (M^b)†; powers are only
/// carried up to ⌈t/2⌉, which halves both the step count and operand size.
inline std::optional<std::uint64_t> block_order(const ExactMatrix& m, std::uint64_t t_max = kDefaultTMax) {
    ExactMatrix prev_adj = ExactMatrix::identity(m.dim(), m.level());  // (M^{a-1})†
    ExactMatrix cur = m;                                                 // M^a
    for (std::uint64_t a = 1; 2 * a - 1 <= t_max; ++a) {
        if (cur == prev_adj) return 2 * a - 1;
        ExactMatrix cur_adj = cur.adjoint();
        if (2 * a <= t_max && cur == cur_adj) return 2 * a;
        prev_adj = std::move(cur_adj);
        cur = cur * m;
    }
    return std::nullopt;
}

/// Removes the linear factors λ ∓ 1 (with multiplicity) from a polynomial.
inline Polynomial remove_unit_roots(Polynomial p, std::vector<int>& removed) {
    for (int r : {1, -1}) {
        const CycloNum root = CycloNum::from_rational(p.level(), r);
        while (p.degree() > 0 && p(root).is_zero()) {
            p = p.divide_by_root(root);
            removed.push_back(r);
        }
    }
    return p;
}

/// Integrality test of one block. Returns a certificate when some tested
/// quantity is not an algebraic integer.
inline std::optional<TraceCertificate> certify_block(const ExactMatrix& block, unsigned k, unsigned n) {
    std::vector<int> removed;
    const Polynomial residual = remove_unit_roots(char_poly_exact(block), removed);
    const int d = residual.degree();
    if (d <= 0) return std::nullopt;

    // The λ¹ coefficient first, then the trace, then the rest.
    std::vector<unsigned> order;
    if (d >= 2) order.push_back(1);
    if (d - 1 != 1) order.push_back(static_cast<unsigned>(d - 1));
    for (unsigned j = 0; j + 1 < static_cast<unsigned>(d); ++j)
        if (j != 1) order.push_back(j);

    for (unsigned j : order) {
        const CycloNum q = -residual.coeff(j);
        const auto [minimal, q_min] = descend_minimal(q);
        const unsigned level = std::lcm(minimal, n);
        const CycloNum value = embed(q_min, level);
        if (value.has_integer_coeffs()) continue;

        TraceCertificate cert;
        cert.k = k;
        cert.trace = value;
        cert.level = level;
        cert.scale = value.denominator();
        // Real quantities are symmetric in ζ_N^{±k}; the phase ζ_N^k turns them
        // into ordinary polynomials in ζ_N.
        cert.unit_power = conj(value) == value ? static_cast<unsigned>((static_cast<std::uint64_t>(k) * (level / n)) % level) : 0;
        cert.reduced_form = Rational(cert.scale) * (zeta(level, cert.unit_power) * value);
        cert.coefficient_index = j;
        cert.residual_degree = static_cast<unsigned>(d);
        cert.removed_roots = removed;
        for (std::size_t i = 0; i < cert.reduced_form.degree(); ++i)
            if (!mpz_divisible_p(cert.reduced_form.numerators()[i].get_mpz_t(), cert.scale.get_mpz_t()))
                cert.violations.push_back(i);
        return cert;
    }
    return std::nullopt;
}

/// Scans the blocks in k order and returns the first non-integrality
/// certificate, or nullopt when every tested quantity is integral.
inline std::optional<TraceCertificate> certify_infinite(const WalkSpec& spec) {
    const auto blocks = build_blocks(spec);
    for (unsigned k = 0; k < blocks.size(); ++k)
        if (auto cert = certify_block(blocks[k], k, spec.n())) return cert;
    return std::nullopt;
}

/// Re-checks a certificate with cyclotomic arithmetic only.
inline bool verify_certificate(const TraceCertificate& c) {
    if (c.trace.level() != c.level || c.reduced_form.level() != c.level || c.scale <= 1) return false;
    if (c.reduced_form != Rational(c.scale) * (zeta(c.level, c.unit_power) * c.trace)) return false;
    if (!c.reduced_form.has_integer_coeffs()) return false;
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < c.reduced_form.degree(); ++i)
        if (!mpz_divisible_p(c.reduced_form.numerators()[i].get_mpz_t(), c.scale.get_mpz_t())) bad.push_back(i);
    return !bad.empty() && bad == c.violations && !in_ring_of_integers(c.trace, c.level, 1);
}

namespace detail {

// U^T = I and U^{T/p} ≠ I for every prime p | T, checked per block.
inline bool is_exact_period(const std::vector<ExactMatrix>& blocks, std::uint64_t t) {
    auto all_identity = [&](std::uint64_t e) {
        for (const auto& b : blocks)
            if (!b.pow(e).is_identity()) return false;
        return true;
    };
    if (!all_identity(t)) return false;
    std::uint64_t rest = t;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        while (rest % p == 0) rest /= p;
        if (all_identity(t / p)) return false;
    }
    if (rest > 1 && all_identity(t / rest)) return false;
    return true;
}

}  // namespace detail

/// Decides the period of the walk.
///
/// A trace certificate settles non-periodicity; otherwise the period is the
/// lcm of the block orders, since U_N^T = I iff Û(k)^T = I for every k.
inline PeriodResult walk_period(const WalkSpec& spec, std::uint64_t t_max = kDefaultTMax) {
    if (auto cert = certify_infinite(spec)) return CertifiedInfinite{std::move(*cert)};
    const auto blocks = build_blocks(spec);
    std::vector<std::optional<std::uint64_t>> orders;
    bool all_finite = true;
    for (const auto& b : blocks) {
        orders.push_back(block_order(b, t_max));
        all_finite = all_finite && orders.back().has_value();
    }
    if (!all_finite) return UnknownUpTo{t_max, orders};

    Integer period = 1;
    Finite result;
    for (const auto& o : orders) {
        mpz_lcm_ui(period.get_mpz_t(), period.get_mpz_t(), *o);
        result.block_orders.push_back(*o);
    }
    if (!period.fits_ulong_p()) throw Error("period does not fit in 64 bits");
    result.period = period.get_ui();
    if (!detail::is_exact_period(blocks, result.period))
        throw std::logic_error("walk_period: lcm of block orders is not the exact period");
    return result;
}

struct EntryCheck {
    std::string name;
    CycloNum value;
    unsigned ring_level = 1;
    bool member = false;
};

/// Membership of c11, c22, c33 in (1/N)·ℤ[ζ_lcm(N,T)], (1/N)·ℤ[ζ_T],
/// (1/N)·ℤ[ζ_lcm(N,T)]. A failing entry proves U_N^T ≠ I.
struct CoinConditionReport {
    unsigned n = 0;
    std::uint64_t t = 0;
    bool passes = false;
    std::vector<EntryCheck> entries;
};

inline CoinConditionReport check_coin_necessary(const ExactMatrix& coin, unsigned n, std::uint64_t t) {
    if (n < 2) throw Error("check_coin_necessary: N must be at least 2");
    if (t < 1) throw Error("check_coin_necessary: T must be positive");
    if (t > level_cap()) throw LevelCapExceeded(t, level_cap());
    const auto t32 = static_cast<unsigned>(t);
    const unsigned outer = checked_lcm(n, t32);
    CoinConditionReport report{n, t, true, {}};
    const std::pair<const char*, std::size_t> diag[] = {{"c11", 0}, {"c22", 1}, {"c33", 2}};
    for (auto [name, i] : diag) {
        EntryCheck e{name, coin(i, i), i == 1 ? t32 : outer, false};
        e.member = in_ring_of_integers(e.value, e.ring_level, n);
        report.passes = report.passes && e.member;
        report.entries.push_back(std::move(e));
    }
    return report;
}

inline CoinConditionReport check_coin_necessary(const CoinMatrix& coin, unsigned n, std::uint64_t t) {
    return check_coin_necessary(coin.matrix(), n, t);
}

/// The condition applied to the walk's effective coin, so flip-flop walks
/// test the diagonal that actually enters tr Û(k).
inline CoinConditionReport check_coin_necessary(const WalkSpec& spec, std::uint64_t t) {
    return check_coin_necessary(spec.effective_coin(), spec.n(), t);
}

}  // namespace cyclowalk
