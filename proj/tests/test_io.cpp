#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "cyclowalk/io.hpp"
#include "oracles.hpp"

using namespace cyclowalk;

TEST(CycloJson, RoundTrip) {
    std::mt19937_64 rng(31);
    for (unsigned level = 1; level <= 24; ++level) {
        const auto x = oracle::random_cyclo(rng, level, 9, 7);
        const json j = x;
        EXPECT_EQ(j.at("level"), level);
        EXPECT_EQ(j.at("coeffs").size(), totient(level));
        EXPECT_EQ(json::parse(j.dump()).get<CycloNum>(), x);
    }
}

TEST(CycloJson, Format) {
    const json j = CycloNum::from_coeffs(3, {Rational(1, 2), Rational(-4)});
    EXPECT_EQ(j.dump(), R"({"coeffs":["1/2","-4"],"level":3})");
    EXPECT_EQ(json::parse(R"({"level":4,"coeffs":[2,"-1/3"]})").get<CycloNum>(),
              CycloNum::from_coeffs(4, {Rational(2), Rational(-1, 3)}));
}

TEST(CycloJson, Rejects) {
    EXPECT_THROW(json::parse(R"({"level":5,"coeffs":["1"]})").get<CycloNum>(), ParseError);
    EXPECT_THROW(json::parse(R"({"level":0,"coeffs":[]})").get<CycloNum>(), ParseError);
    EXPECT_THROW(json::parse(R"({"level":2,"coeffs":["0.5"]})").get<CycloNum>(), ParseError);
    EXPECT_THROW(json::parse(R"({"coeffs":["1"]})").get<CycloNum>(), ParseError);
    EXPECT_THROW(json::parse(R"({"level":2,"coeffs":[1.5]})").get<CycloNum>(), ParseError);
}

TEST(CoinConfig, FourierRoundTrip) {
    const auto j = coin_to_json(fourier_coin().matrix());
    const auto coin = parse_coin_config(json::parse(j.dump()));
    EXPECT_EQ(coin.matrix(), fourier_coin().matrix());
}

TEST(CoinConfig, MixedLevels) {
    // Grover entries written at level 1 inside a level-4 coin
    const json j = json::parse(R"({"level": 4, "entries": [
        [{"level":1,"coeffs":["-1/3"]}, {"level":1,"coeffs":["2/3"]}, {"level":1,"coeffs":["2/3"]}],
        [{"level":1,"coeffs":["2/3"]}, {"level":1,"coeffs":["-1/3"]}, {"level":1,"coeffs":["2/3"]}],
        [{"level":1,"coeffs":["2/3"]}, {"level":1,"coeffs":["2/3"]}, {"level":1,"coeffs":["-1/3"]}]]})");
    const auto coin = parse_coin_config(j);
    EXPECT_EQ(coin.level(), 4u);
    EXPECT_EQ(coin.matrix(), grover_coin().matrix().embedded(4));
}

TEST(CoinConfig, PhaseCoin) {
    // diag(ζ_4, 1, -1) is unitary and has a genuinely complex entry
    const json j = json::parse(R"({"level": 4, "entries": [
        [{"level":4,"coeffs":["0","1"]}, {"level":1,"coeffs":["0"]}, {"level":1,"coeffs":["0"]}],
        [{"level":1,"coeffs":["0"]}, {"level":1,"coeffs":["1"]}, {"level":1,"coeffs":["0"]}],
        [{"level":1,"coeffs":["0"]}, {"level":1,"coeffs":["0"]}, {"level":2,"coeffs":["-1"]}]]})");
    const auto coin = parse_coin_config(j);
    const auto r = walk_period(WalkSpec(3, coin));
    ASSERT_TRUE(std::holds_alternative<Finite>(r));
}

TEST(CoinConfig, NonUnitaryMessageNamesInnerProduct) {
    const json j = json::parse(R"({"level": 1, "entries": [
        [{"level":1,"coeffs":["1"]}, {"level":1,"coeffs":["1"]}, {"level":1,"coeffs":["0"]}],
        [{"level":1,"coeffs":["0"]}, {"level":1,"coeffs":["1"]}, {"level":1,"coeffs":["0"]}],
        [{"level":1,"coeffs":["0"]}, {"level":1,"coeffs":["0"]}, {"level":1,"coeffs":["1"]}]]})");
    try {
        parse_coin_config(j);
        FAIL() << "accepted a non-unitary coin";
    } catch (const NotUnitary& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("row 1, row 1"), std::string::npos) << msg;
        EXPECT_NE(msg.find("= 2"), std::string::npos) << msg;
    }
}

TEST(CoinConfig, StructuralErrors) {
    EXPECT_THROW(parse_coin_config(json::parse(R"({"level": 1})")), ParseError);
    EXPECT_THROW(parse_coin_config(json::parse(R"({"level": 1, "entries": [[]]})")), ParseError);
    EXPECT_THROW(parse_coin_config(json::parse(R"({"level": 3, "entries": [
        [{"level":4,"coeffs":["1","0"]}, {"level":1,"coeffs":["0"]}, {"level":1,"coeffs":["0"]}],
        [{"level":1,"coeffs":["0"]}, {"level":1,"coeffs":["1"]}, {"level":1,"coeffs":["0"]}],
        [{"level":1,"coeffs":["0"]}, {"level":1,"coeffs":["0"]}, {"level":1,"coeffs":["1"]}]]})")),
                 ParseError);
    EXPECT_THROW(load_coin_file("/nonexistent/coin.json"), ParseError);
}

TEST(CoinConfig, LoadFromFile) {
    const std::string path = ::testing::TempDir() + "fourier_coin.json";
    std::ofstream(path) << coin_to_json(fourier_coin().matrix()).dump();
    EXPECT_EQ(load_coin_file(path).matrix(), fourier_coin().matrix());
    std::ofstream(path) << "{ not json";
    EXPECT_THROW(load_coin_file(path), ParseError);
    std::remove(path.c_str());
}

TEST(CertificateJson, ReverifiesFromText) {
    for (unsigned n : {2u, 4u, 5u, 6u, 9u, 10u})
        for (const auto& coin : {grover_coin(), fourier_coin()}) {
            const auto c = certify_infinite(WalkSpec(n, coin));
            ASSERT_TRUE(c);
            const json j = to_json(*c);
            EXPECT_EQ(j.at("kind"), "trace_nonintegrality");
            const auto back = certificate_from_json(json::parse(j.dump()));
            EXPECT_TRUE(verify_certificate(back)) << n;
            EXPECT_EQ(back.reduced_form, c->reduced_form);

            // checkable with cyclotomic arithmetic alone
            const CycloNum trace = j.at("trace").get<CycloNum>();
            EXPECT_FALSE(in_ring_of_integers(trace, j.at("level").get<unsigned>(), 1));
        }
}

TEST(CertificateJson, RejectsForgery) {
    auto j = to_json(*certify_infinite(WalkSpec(2, grover_coin())));
    j["scaled_coeffs"] = json::array({"3"});
    EXPECT_FALSE(verify_certificate(certificate_from_json(j)));
    j["kind"] = "other";
    EXPECT_THROW(certificate_from_json(j), ParseError);
}

TEST(PeriodJson, Shapes) {
    const json f = to_json(walk_period(WalkSpec(3, grover_coin())));
    EXPECT_EQ(f.at("result"), "finite");
    EXPECT_EQ(f.at("T"), 6);
    EXPECT_EQ(f.at("block_orders"), json::array({2, 3, 3}));

    const json c = to_json(walk_period(WalkSpec(2, fourier_coin())));
    EXPECT_EQ(c.at("result"), "certified_infinite");
    EXPECT_EQ(c.at("certificate").at("k"), 1);

    const json u = to_json(walk_period(WalkSpec(3, fourier_coin()), 5));
    EXPECT_EQ(u.at("result"), "unknown");
    EXPECT_EQ(u.at("t_max"), 5);
    EXPECT_TRUE(u.at("block_orders")[2].is_null());
}

TEST(CoinReportJson, Shape) {
    const json r = to_json(check_coin_necessary(fourier_coin(), 3, 12));
    EXPECT_EQ(r.at("passes"), true);
    ASSERT_EQ(r.at("entries").size(), 3u);
    EXPECT_EQ(r.at("entries")[1].at("ring"), "(1/3)Z[zeta_12]");
    EXPECT_EQ(r.at("entries")[1].at("value").get<CycloNum>(), fourier_coin().entry(2, 2));
}
