// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runs standalone or under ctest.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "cyclowalk/period.hpp"
#include "oracles.hpp"

using namespace cyclowalk;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) o.require(false, "runtime limit exceeded");
    if (!o.ok) ++failures;
    std::printf("%s  criterion %2d  %-72s %8.3fs%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

const Finite* as_finite(const PeriodResult& r) { return std::get_if<Finite>(&r); }

CycloNum ints(unsigned level, std::vector<long> c) {
    std::vector<Integer> v(c.begin(), c.end());
    return CycloNum::from_integers(level, v);
}

}  // namespace

int main() {
    const double pi = std::numbers::pi;

    criterion(1, "Grover period at N=3 is 6, blocks {2,3,3}, U^6 = I", 1.0, [] {
        Outcome o;
        const WalkSpec spec(3, grover_coin());
        const auto r = walk_period(spec);
        const auto* f = as_finite(r);
        o.require(f && f->period == 6, "period is not Finite(6)");
        o.require(f && f->block_orders == std::vector<std::uint64_t>{2, 3, 3}, "block orders differ");
        o.require(build_full(spec).pow(6).is_identity(), "U_3^6 != I_9");
        return o;
    });

    criterion(2, "Fourier period at N=3 is 12, eigenvalue angles as displayed", 1.0, [pi] {
        Outcome o;
        const WalkSpec spec(3, fourier_coin());
        const auto r = walk_period(spec);
        const auto* f = as_finite(r);
        o.require(f && f->period == 12, "period is not Finite(12)");
        const auto spectra = block_spectra(spec);
        const std::vector<std::complex<double>> k01{{0, 1}, 1.0, -1.0};
        const std::vector<std::complex<double>> k2{std::polar(1.0, 2 * pi / 3), std::polar(1.0, 5 * pi / 3),
                                                   std::polar(1.0, 7 * pi / 6)};
        o.require(oracle::multiset_distance(spectra[0], k01) < 1e-8, "k=0 eigenvalues");
        o.require(oracle::multiset_distance(spectra[1], k01) < 1e-8, "k=1 eigenvalues");
        o.require(oracle::multiset_distance(spectra[2], k2) < 1e-8, "k=2 eigenvalues");
        return o;
    });

    criterion(3, "flip-flop periods at N=3: Grover 4, Fourier 12", 0, [] {
        Outcome o;
        const auto rg = walk_period(WalkSpec(3, grover_coin(), ShiftType::FlipFlop));
        const auto rf = walk_period(WalkSpec(3, fourier_coin(), ShiftType::FlipFlop));
        const auto *g = as_finite(rg), *f = as_finite(rf);
        o.require(g && g->period == 4, "Grover flip-flop is not Finite(4)");
        o.require(f && f->period == 12, "Fourier flip-flop is not Finite(12)");
        return o;
    });

    criterion(4, "Grover certificates for N in 2..30 minus 3; reduced forms at 2,4,6", 0, [] {
        Outcome o;
        for (unsigned n = 2; n <= 30; ++n) {
            const auto c = certify_infinite(WalkSpec(n, grover_coin()));
            if (n == 3) {
                o.require(!c, "certificate issued for the periodic N=3 walk");
                continue;
            }
            o.require(c.has_value(), "no certificate at N=" + std::to_string(n));
            if (c) o.require(verify_certificate(*c), "certificate does not verify at N=" + std::to_string(n));
        }
        const std::pair<unsigned, CycloNum> forms[] = {{2, ints(2, {2})}, {4, ints(4, {0, -4})}, {6, ints(6, {0, -5})}};
        for (const auto& [n, form] : forms) {
            const auto c = certify_infinite(WalkSpec(n, grover_coin()));
            o.require(c && c->k == 1 && c->scale == 3 && c->reduced_form == form,
                      "reduced form differs at N=" + std::to_string(n));
        }
        return o;
    });

    criterion(5, "Fourier certificates at N=2 and N=9 with the expected reduced forms", 0, [] {
        Outcome o;
        const std::pair<unsigned, CycloNum> forms[] = {{2, ints(6, {1, -2})}, {9, ints(9, {1, 1, 1, -1, -1, -1})}};
        for (const auto& [n, form] : forms) {
            const auto c = certify_infinite(WalkSpec(n, fourier_coin()));
            o.require(c && c->k == 1 && c->scale == 3 && c->reduced_form == form,
                      "reduced form differs at N=" + std::to_string(n));
            if (!c) continue;
            o.require(!in_ring_of_integers(Rational(1, 3) * form, form.level(), 1),
                      "form/3 unexpectedly integral at N=" + std::to_string(n));
            o.require(verify_certificate(*c), "certificate does not verify at N=" + std::to_string(n));
        }
        return o;
    });

    criterion(6, "block-wise periods agree with full-matrix powering, t<=64", 60.0, [] {
        Outcome o;
        int finite = 0, cases = 0;
        for (const auto& spec : oracle::specs_up_to(6)) {
            ++cases;
            const auto r = walk_period(spec, 64);
            const auto brute = oracle::brute_force_period(spec, 64);
            const auto* f = as_finite(r);
            if (brute) {
                ++finite;
                o.require(f && f->period == *brute, "disagreement at " + oracle::label(spec));
            } else {
                o.require(!f, "block-wise Finite but full matrix aperiodic at " + oracle::label(spec));
            }
        }
        o.require(cases == 20 && finite == 4, "unexpected case counts");
        return o;
    });

    criterion(7, "exact char polys equal the closed forms (Grover N<=12, Fourier N<=9)", 0, [] {
        Outcome o;
        for (unsigned n = 2; n <= 12; ++n) {
            const auto blocks = build_blocks(WalkSpec(n, grover_coin()));
            for (unsigned k = 0; k < n; ++k)
                o.require(char_poly_exact(blocks[k]) == oracle::grover_char_poly(n, k),
                          "Grover N=" + std::to_string(n) + " k=" + std::to_string(k));
        }
        for (unsigned n = 2; n <= 9; ++n) {
            const auto blocks = build_blocks(WalkSpec(n, fourier_coin()));
            for (unsigned k = 0; k < n; ++k)
                o.require(char_poly_exact(blocks[k]) == oracle::fourier_char_poly(n, k, zeta(3, 1)),
                          "Fourier N=" + std::to_string(n) + " k=" + std::to_string(k));
        }
        return o;
    });

    criterion(8, "block spectra equal full-matrix spectra within 1e-6, N<=8", 0, [] {
        Outcome o;
        double worst = 0;
        for (const auto& spec : oracle::specs_up_to(8)) {
            const double d = oracle::multiset_distance(spectrum_numeric(spec),
                                                       oracle::dense_eigenvalues(to_complex(build_full(spec))));
            worst = std::max(worst, d);
            o.require(d < 1e-6, "mismatch at " + oracle::label(spec));
        }
        if (o.ok) {
            std::ostringstream os;
            os << "worst " << worst;
            o.detail = os.str();
        }
        return o;
    });

    criterion(9, "field arithmetic properties over randomized cases", 0, [] {
        Outcome o;
        std::mt19937_64 rng(0x5eed);
        long cases = 0;
        for (unsigned level = 1; level <= 16; ++level)
            for (int i = 0; i < 40; ++i, ++cases) {
                const auto a = oracle::random_cyclo(rng, level), b = oracle::random_cyclo(rng, level),
                           c = oracle::random_cyclo(rng, level);
                o.require((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity");
                o.require(a + b == b + a && a * b == b * a, "commutativity");
                o.require(a * (b + c) == a * b + a * c, "distributivity");
                o.require(std::abs((a * b).eval() - a.eval() * b.eval()) < 1e-10, "eval homomorphism");
            }
        for (unsigned n = 1; n <= 60; ++n, ++cases) {
            // Φ_n(ζ_n) with the coefficients of Φ_n taken from the root-product oracle
            const auto phi = oracle::cyclotomic_poly(n);
            const CycloNum z = zeta(n, 1);
            CycloNum acc(n), p = CycloNum::from_rational(n, 1);
            for (long c : phi) {
                acc += Rational(c) * p;
                p *= z;
            }
            o.require(acc.is_zero(), "Phi_n(zeta_n) != 0 at n=" + std::to_string(n));
        }
        for (unsigned L = 1; L <= 48; ++L)
            for (unsigned n : divisors(L))
                for (int i = 0; i < 2; ++i, ++cases) {
                    const auto x = oracle::random_cyclo(rng, n);
                    const auto back = descend(embed(x, L), n);
                    o.require(back && *back == x, "round trip " + std::to_string(n) + " | " + std::to_string(L));
                }
        o.require(cases >= 1000, "fewer than 1000 cases");
        if (o.ok) o.detail = std::to_string(cases) + " cases";
        return o;
    });

    criterion(10, "excluded; substitute: Fourier sweep N<=30, none finite except N=3", 0, [] {
        Outcome o;
        std::ostringstream report;
        int certified = 0, unknown = 0;
        for (unsigned n = 2; n <= 30; ++n) {
            const auto r = walk_period(WalkSpec(n, fourier_coin()), 48);
            if (const auto* f = as_finite(r)) {
                o.require(n == 3 && f->period == 12, "unexpected finite period at N=" + std::to_string(n));
                report << " 3:T=" << f->period;
            } else if (const auto* c = std::get_if<CertifiedInfinite>(&r)) {
                ++certified;
                o.require(verify_certificate(c->certificate), "certificate fails at N=" + std::to_string(n));
            } else {
                ++unknown;
                report << ' ' << n << ":unknown";
            }
        }
        if (o.ok) o.detail = std::to_string(certified) + " certified, " + std::to_string(unknown) + " unknown;" + report.str();
        return o;
    });

    std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
