#pragma once

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclowalk/io.hpp"

namespace cyclowalk::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kUndecided = 2, kConditionViolated = 3 };

struct RunConfig {
    std::string command;
    unsigned n = 3;
    std::string coin = "grover";
    std::string shift = "moving";
    std::uint64_t t_max = kDefaultTMax;
    std::uint64_t t = 0;
    std::size_t steps = 10;
    std::string format;
    std::string out;
    std::string initial = "0:0,1,0";
};

inline CoinMatrix resolve_coin(const std::string& selector) {
    if (selector == "grover") return grover_coin();
    if (selector == "fourier") return fourier_coin();
    return load_coin_file(selector);
}

inline WalkSpec make_spec(const RunConfig& c) {
    if (c.n < 2) throw Error("--n must be at least 2");
    const ShiftType shift = c.shift == "flip-flop" ? ShiftType::FlipFlop : ShiftType::Moving;
    return WalkSpec(c.n, resolve_coin(c.coin), shift);
}

/// Best rational approximation p/q of x with q ≤ max_den, via continued
/// fractions; only returned when it matches within tol.
inline std::optional<std::pair<long long, long long>> suggest_rational(double x, long long max_den = 10000,
                                                                       double tol = 1e-9) {
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(r);
        const auto ai = static_cast<long long>(a);
        const long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) return std::pair{p1, q1};
        const double frac = r - a;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    return std::nullopt;
}

/// Eigenvalue angle as a fraction of a full turn, in [0, 1).
inline double turn_fraction(std::complex<double> z) {
    double a = std::arg(z) / (2.0 * std::numbers::pi);
    if (a < 0) a += 1.0;
    if (a >= 1.0 - 1e-12) a = 0.0;
    return a;
}

inline json spectrum_json(const WalkSpec& spec, const std::string& coin_name) {
    const auto blocks = build_blocks(spec);
    json out{{"N", spec.n()}, {"coin", coin_name}, {"shift", to_string(spec.shift())}, {"level", spec.block_level()}};
    json arr = json::array();
    for (unsigned k = 0; k < blocks.size(); ++k) {
        const Polynomial chi = char_poly_exact(blocks[k]);
        json eig = json::array();
        for (const auto& z : polynomial_roots(chi)) {
            const double turn = turn_fraction(z);
            json e{{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}, {"angle_over_2pi", turn}};
            if (auto r = suggest_rational(turn))
                e["suggested_rational"] =
                    r->first == 0 ? std::string("0") : std::to_string(r->first) + "/" + std::to_string(r->second);
            else
                e["suggested_rational"] = nullptr;
            eig.push_back(std::move(e));
        }
        json poly = json::array();
        for (int j = chi.degree(); j >= 0; --j) poly.push_back(chi.coeff(static_cast<std::size_t>(j)));
        arr.push_back(json{{"k", k}, {"eigenvalues", std::move(eig)}, {"char_poly", std::move(poly)}});
    }
    out["blocks"] = std::move(arr);
    return out;
}

/// Parses "uniform" or "VERTEX:w_left,w_stay,w_right" into a normalized state.
inline WalkState parse_initial(const std::string& text, unsigned n) {
    WalkState s{std::vector<std::complex<double>>(3 * n)};
    if (text == "uniform") {
        for (auto& a : s.amplitudes) a = 1.0;
    } else {
        const auto colon = text.find(':');
        if (colon == std::string::npos) throw ParseError("initial state must be 'uniform' or 'VERTEX:a,b,c'");
        unsigned long vertex = 0;
        std::vector<double> w;
        try {
            vertex = std::stoul(text.substr(0, colon));
            std::stringstream ss(text.substr(colon + 1));
            std::string item;
            while (std::getline(ss, item, ',')) w.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ParseError("malformed initial state '" + text + "'");
        }
        if (vertex >= n) throw ParseError("initial vertex " + std::to_string(vertex) + " out of range");
        if (w.size() != 3) throw ParseError("initial state needs three chirality weights");
        for (std::size_t c = 0; c < 3; ++c) s.amplitudes[3 * vertex + c] = w[c];
    }
    const double norm = s.norm();
    if (!(norm > 0) || !std::isfinite(norm)) throw ParseError("initial state cannot be normalized");
    for (auto& a : s.amplitudes) a /= norm;
    return s;
}

inline std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

inline std::string evolve_csv(const std::vector<WalkState>& states) {
    std::ostringstream os;
    os << "t,vertex,p_left,p_stay,p_right,total\n";
    for (std::size_t t = 0; t < states.size(); ++t) {
        const auto& s = states[t];
        const double total = s.norm() * s.norm();
        for (std::size_t x = 0; x < s.vertices(); ++x)
            os << t << ',' << x << ',' << fmt_double(std::norm(s.at(x, kLeft))) << ','
               << fmt_double(std::norm(s.at(x, kStay))) << ',' << fmt_double(std::norm(s.at(x, kRight))) << ','
               << fmt_double(total) << '\n';
    }
    return os.str();
}

inline json evolve_json(const std::vector<WalkState>& states) {
    json rows = json::array();
    for (std::size_t t = 0; t < states.size(); ++t) {
        const auto& s = states[t];
        const double total = s.norm() * s.norm();
        for (std::size_t x = 0; x < s.vertices(); ++x)
            rows.push_back(json{{"t", t},
                                {"vertex", x},
                                {"p_left", std::norm(s.at(x, kLeft))},
                                {"p_stay", std::norm(s.at(x, kStay))},
                                {"p_right", std::norm(s.at(x, kRight))},
                                {"total", total}});
    }
    return rows;
}

// Human renderings read only from the JSON reports.

inline std::string cyclo_text(const json& j) { return j.get<CycloNum>().to_string(); }

inline std::string period_human(const json& r) {
    std::ostringstream os;
    const auto kind = r.at("result").get<std::string>();
    if (kind == "finite") {
        os << "periodic: T = " << r.at("T") << "\n";
        os << "block orders:";
        for (const auto& o : r.at("block_orders")) os << ' ' << o;
        os << '\n';
    } else if (kind == "certified_infinite") {
        const auto& c = r.at("certificate");
        os << "not periodic (certified)\n";
        os << "block k = " << c.at("k") << ", tested quantity " << cyclo_text(c.at("trace")) << " at level "
           << c.at("level") << '\n';
        os << "scaled by " << c.at("scale").get<std::string>() << ": coefficients [";
        bool first = true;
        for (const auto& s : c.at("scaled_coeffs")) os << (first ? "" : ", ") << s.get<std::string>(), first = false;
        os << "], not divisible by " << c.at("scale").get<std::string>() << " at indices";
        for (const auto& v : c.at("violations")) os << ' ' << v;
        os << '\n';
    } else {
        os << "undecided: no period found up to t_max = " << r.at("t_max") << '\n';
    }
    return os.str();
}

inline std::string spectrum_human(const json& s) {
    std::ostringstream os;
    os << "N = " << s.at("N") << ", coin " << s.at("coin").get<std::string>() << ", shift "
       << s.at("shift").get<std::string>() << ", level " << s.at("level") << '\n';
    for (const auto& b : s.at("blocks")) {
        os << "k = " << b.at("k") << ":";
        for (const auto& e : b.at("eigenvalues")) {
            os << "  " << fmt_double(e.at("angle_over_2pi").get<double>());
            if (!e.at("suggested_rational").is_null())
                os << " (~" << e.at("suggested_rational").get<std::string>() << ")";
        }
        os << "   [turns]\n    char poly (λ^3..λ^0):";
        for (const auto& c : b.at("char_poly")) os << "  " << cyclo_text(c) << ';';
        os << '\n';
    }
    return os.str();
}

inline std::string coin_report_human(const json& r) {
    std::ostringstream os;
    os << "N = " << r.at("N") << ", T = " << r.at("T") << ": " << (r.at("passes").get<bool>() ? "passes" : "violated")
       << '\n';
    for (const auto& e : r.at("entries"))
        os << "  " << e.at("entry").get<std::string>() << " = " << cyclo_text(e.at("value")) << "  in "
           << e.at("ring").get<std::string>() << ": " << (e.at("member").get<bool>() ? "yes" : "no") << '\n';
    return os.str();
}

inline std::string render(const json& j, const std::string& format, std::string (*human)(const json&)) {
    if (format == "human") return human(j);
    return j.dump(2) + "\n";
}

inline void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw Error("cannot write '" + c.out + "'");
    f << text;
}

inline int cmd_period(const RunConfig& c, std::ostream& out) {
    const auto spec = make_spec(c);
    const auto result = walk_period(spec, c.t_max);
    const json j = to_json(result);
    emit(c, render(j, c.format, period_human), out);
    return std::holds_alternative<UnknownUpTo>(result) ? kUndecided : kOk;
}

inline int cmd_spectrum(const RunConfig& c, std::ostream& out) {
    const auto spec = make_spec(c);
    const json j = spectrum_json(spec, c.coin);
    if (c.format == "csv") {
        std::ostringstream os;
        os << "k,index,re,im,angle_over_2pi,suggested_rational\n";
        for (const auto& b : j.at("blocks")) {
            std::size_t i = 0;
            for (const auto& e : b.at("eigenvalues"))
                os << b.at("k") << ',' << i++ << ',' << fmt_double(e.at("re")) << ',' << fmt_double(e.at("im")) << ','
                   << fmt_double(e.at("angle_over_2pi")) << ','
                   << (e.at("suggested_rational").is_null() ? "" : e.at("suggested_rational").get<std::string>())
                   << '\n';
        }
        emit(c, os.str(), out);
    } else {
        emit(c, render(j, c.format, spectrum_human), out);
    }
    return kOk;
}

inline int cmd_evolve(const RunConfig& c, std::ostream& out) {
    const auto spec = make_spec(c);
    const auto states = evolve(spec, parse_initial(c.initial, spec.n()), c.steps);
    if (c.format == "json")
        emit(c, evolve_json(states).dump(2) + "\n", out);
    else
        emit(c, evolve_csv(states), out);
    return kOk;
}

inline int cmd_check_coin(const RunConfig& c, std::ostream& out) {
    const auto spec = make_spec(c);
    const auto report = check_coin_necessary(spec, c.t);
    emit(c, render(to_json(report), c.format, coin_report_human), out);
    return report.passes ? kOk : kConditionViolated;
}

/// Parses arguments and runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact periodicity analysis of 3-state quantum walks on cycles", "cyclowalk"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, const std::string& default_format, std::vector<std::string> formats) {
        sub->add_option("--n", cfg.n, "cycle size N (>= 2)")->required()->check(CLI::Range(2u, 1000000u));
        sub->add_option("--coin", cfg.coin, "grover | fourier | PATH to a coin JSON file");
        sub->add_option("--shift", cfg.shift, "moving | flip-flop")->check(CLI::IsMember({"moving", "flip-flop"}));
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", cfg.out, "write output to PATH instead of stdout");
        sub->callback([&cfg, sub, default_format] {
            cfg.command = sub->get_name();
            if (cfg.format.empty()) cfg.format = default_format;
        });
    };

    auto* period = app.add_subcommand("period", "decide the period T_N");
    add_common(period, "json", {"json", "human"});
    period->add_option("--t-max", cfg.t_max, "search bound for block orders")->check(CLI::PositiveNumber);

    auto* spectrum = app.add_subcommand("spectrum", "block eigenvalues and exact characteristic polynomials");
    add_common(spectrum, "json", {"json", "human", "csv"});

    auto* evolve_cmd = app.add_subcommand("evolve", "simulate Psi_t = U_N^t Psi_0");
    add_common(evolve_cmd, "csv", {"csv", "json"});
    evolve_cmd->add_option("--steps", cfg.steps, "number of steps");
    evolve_cmd->add_option("--initial", cfg.initial, "'uniform' or 'VERTEX:w_left,w_stay,w_right'");

    auto* check = app.add_subcommand("check-coin", "necessary coin condition for a candidate period T");
    add_common(check, "json", {"json", "human"});
    check->add_option("--t", cfg.t, "candidate period T")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (cfg.command == "period") return cmd_period(cfg, out);
        if (cfg.command == "spectrum") return cmd_spectrum(cfg, out);
        if (cfg.command == "evolve") return cmd_evolve(cfg, out);
        if (cfg.command == "check-coin") return cmd_check_coin(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace cyclowalk::cli
