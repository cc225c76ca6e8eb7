#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "cyclowalk/period.hpp"

namespace cyclowalk {

using nlohmann::json;

// CycloNum: {"level": n, "coeffs": ["p/q", ...]} with φ(n) fraction strings.

inline void to_json(json& j, const CycloNum& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
    j = json{{"level", x.level()}, {"coeffs", std::move(coeffs)}};
}

inline void from_json(const json& j, CycloNum& x) {
    if (!j.is_object() || !j.contains("level") || !j.contains("coeffs"))
        throw ParseError("cyclotomic number needs \"level\" and \"coeffs\"");
    const auto& lv = j.at("level");
    if (!lv.is_number_integer() || lv.get<long long>() < 1) throw ParseError("\"level\" must be a positive integer");
    const auto level = lv.get<unsigned>();
    if (level > level_cap()) throw LevelCapExceeded(level, level_cap());
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (c.is_string())
            coeffs.push_back(parse_rational(c.get<std::string>()));
        else if (c.is_number_integer())
            coeffs.push_back(Rational(c.get<long>()));
        else
            throw ParseError("coefficients must be fraction strings");
    }
    if (coeffs.size() != totient(level))
        throw ParseError("level " + std::to_string(level) + " needs " + std::to_string(totient(level)) +
                         " coefficients, got " + std::to_string(coeffs.size()));
    x = CycloNum::from_coeffs(level, coeffs);
}

/// Custom coin: {"level": m, "entries": [[CycloNum x3] x3]}. Entries may sit
/// at any level dividing m; the matrix must be exactly unitary.
inline CoinMatrix parse_coin_config(const json& j) {
    if (!j.is_object() || !j.contains("level") || !j.contains("entries"))
        throw ParseError("coin config needs \"level\" and \"entries\"");
    if (!j.at("level").is_number_integer() || j.at("level").get<long long>() < 1)
        throw ParseError("coin \"level\" must be a positive integer");
    const auto level = j.at("level").get<unsigned>();
    if (level > level_cap()) throw LevelCapExceeded(level, level_cap());
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != 3) throw ParseError("coin \"entries\" must be a 3x3 array");
    ExactMatrix m(3, level);
    for (std::size_t i = 0; i < 3; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 3) throw ParseError("coin \"entries\" must be a 3x3 array");
        for (std::size_t k = 0; k < 3; ++k) {
            const auto x = rows[i][k].get<CycloNum>();
            if (level % x.level() != 0)
                throw ParseError("entry level " + std::to_string(x.level()) + " does not divide coin level " +
                                 std::to_string(level));
            m.set(i, k, embed(x, level));
        }
    }
    return CoinMatrix(std::move(m));
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

inline CoinMatrix load_coin_file(const std::string& path) { return parse_coin_config(read_json_file(path)); }

inline json coin_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    return json{{"level", m.level()}, {"entries", std::move(rows)}};
}

inline json to_json(const TraceCertificate& c) {
    json scaled = json::array();
    for (const auto& v : c.reduced_form.coeffs()) scaled.push_back(v.get_str());
    return json{{"kind", "trace_nonintegrality"},
                {"k", c.k},
                {"level", c.level},
                {"trace", c.trace},
                {"scale", c.scale.get_str()},
                {"unit_power", c.unit_power},
                {"scaled_coeffs", std::move(scaled)},
                {"violations", c.violations},
                {"coefficient_index", c.coefficient_index},
                {"residual_degree", c.residual_degree},
                {"removed_roots", c.removed_roots}};
}

inline TraceCertificate certificate_from_json(const json& j) {
    if (j.value("kind", "") != "trace_nonintegrality") throw ParseError("not a trace_nonintegrality certificate");
    TraceCertificate c;
    c.k = j.at("k").get<unsigned>();
    c.level = j.at("level").get<unsigned>();
    c.trace = j.at("trace").get<CycloNum>();
    c.scale = Integer(j.at("scale").get<std::string>());
    c.unit_power = j.at("unit_power").get<unsigned>();
    std::vector<Rational> scaled;
    for (const auto& s : j.at("scaled_coeffs")) scaled.push_back(parse_rational(s.get<std::string>()));
    c.reduced_form = CycloNum::from_coeffs(c.level, scaled);
    c.violations = j.at("violations").get<std::vector<std::size_t>>();
    c.coefficient_index = j.value("coefficient_index", 0u);
    c.residual_degree = j.value("residual_degree", 0u);
    c.removed_roots = j.value("removed_roots", std::vector<int>{});
    return c;
}

inline json to_json(const PeriodResult& r) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Finite>) {
                return json{{"result", "finite"}, {"T", v.period}, {"block_orders", v.block_orders}};
            } else if constexpr (std::is_same_v<T, CertifiedInfinite>) {
                return json{{"result", "certified_infinite"}, {"certificate", to_json(v.certificate)},
                            {"block_orders", json::array()}};
            } else {
                json orders = json::array();
                for (const auto& o : v.block_orders) orders.push_back(o ? json(*o) : json(nullptr));
                return json{{"result", "unknown"}, {"t_max", v.bound}, {"block_orders", std::move(orders)}};
            }
        },
        r);
}

inline json to_json(const CoinConditionReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"entry", e.name},
                               {"value", e.value},
                               {"ring", "(1/" + std::to_string(r.n) + ")Z[zeta_" + std::to_string(e.ring_level) + "]"},
                               {"ring_level", e.ring_level},
                               {"denominator", r.n},
                               {"member", e.member}});
    return json{{"N", r.n}, {"T", r.t}, {"passes", r.passes}, {"entries", std::move(entries)}};
}

}  // namespace cyclowalk
