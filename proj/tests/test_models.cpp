#include "catch_amalgamated.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "landau1d/models.hpp"

using namespace landau1d;
using Catch::Matchers::WithinRel;

TEST_CASE("m-momentum models", "[models]") {
    auto const m0 = make_m_model(0);
    CHECK(m0.kind == ModelKind::m_momentum);
    CHECK(m0.label == "m0");
    CHECK(m0.mu == 0);
    CHECK(m0.nu == 0);
    CHECK(m0.charge_multiplier == 1.0);
    for (double x : {0.0, 0.5, 4.0, 30.0}) {
        CHECK(m0.nuclear(x) == eval_vm(0, x));
        CHECK(m0.interaction_at(x) == scaled_vm(0, x));
    }
    auto const m2 = make_m_model(2);
    CHECK(m2.mu == 2);
    CHECK(m2.nu == 4);
    CHECK(m2.label == "m:2");
    for (int m = 0; m <= 6; ++m) {
        auto const s = make_m_model(m);
        CHECK(s.satisfies_nu_le_2mu());
        CHECK(check_envelope(s).ok);
    }
    CHECK_THROWS_AS(make_m_model(-1), InvalidInput);
}

TEST_CASE("slater models", "[models]") {
    auto const s2 = make_slater_model(2);
    for (double x : {0.0, 1.0, 7.0}) CHECK_THAT(s2.interaction_at(x), WithinRel(scaled_vm(1, x), 1e-15));
    auto const s5 = make_slater_model(5);
    CHECK(s5.mu == 5);
    CHECK(s5.nu == 8);
    CHECK(s5.floor == 7);
    CHECK(s5.charge_multiplier == 2.0);
    for (int N = 2; N <= 8; ++N) {
        auto const s = make_slater_model(N);
        CHECK(s.nu == 2 * N - 2);
        CHECK(s.satisfies_nu_le_2mu());
        auto const rep = check_envelope(s);
        INFO("N=" << N << " nuclear " << rep.nuclear_worst << " interaction " << rep.interaction_worst);
        CHECK(rep.ok);
    }
    CHECK_THROWS_AS(make_slater_model(1), InvalidInput);
}

TEST_CASE("custom models", "[models]") {
    auto v1 = [](double x) { return eval_vm(1, x); };
    auto const ok = make_custom_model(v1, pair_coefficients(0, 0), 1, 1, 1.0);
    CHECK(ok.satisfies_nu_le_2mu());
    CHECK(ok.floor == 0);

    auto v0 = [](double x) { return eval_vm(0, x); };
    try {
        (void)make_custom_model(v0, pair_coefficients(0, 0), 3, 0, 1.0);
        FAIL("expected EnvelopeError");
    } catch (EnvelopeError const& e) {
        CHECK(e.worst_x == 0.0);
        CHECK(e.worst_violation > 0.0);
    }
    // interaction too weak for the declared nu
    CHECK_THROWS_AS(make_custom_model(v1, pair_coefficients(3, 3), 1, 1, 1.0), EnvelopeError);

    // equal indices give an even-index interaction, unequal ones need not
    auto const same = pair_coefficients(3, 3);
    for (std::size_t j = 1; j < same.weights.size(); j += 2) CHECK(same.weights[j] == 0.0);
    CHECK(pair_coefficients(1, 3).weights[1] == 0.25);

    // nu = 2mu + 1 is representable; the hypothesis flag reports it
    auto const loose = make_custom_model(v0, pair_coefficients(0, 0), 0, 1, 1.0);
    CHECK_FALSE(loose.satisfies_nu_le_2mu());

    CHECK_THROWS_AS(make_custom_model(v1, pair_coefficients(0, 0), 1, 1, 0.5), InvalidInput);
    CoefficientVector bad;
    bad.weights = {0.5, 0.6};
    CHECK_THROWS_AS(make_custom_model(v1, bad, 1, 1, 1.0), InvalidInput);
}

TEST_CASE("model strings", "[models]") {
    CHECK(parse_model("m0").mu == 0);
    CHECK(parse_model("m:3").nu == 6);
    CHECK(parse_model("slater:4").charge_multiplier == 2.0);
    CHECK_THROWS_AS(parse_model("slater"), InvalidInput);
    CHECK_THROWS_AS(parse_model("m:x"), InvalidInput);
    CHECK_THROWS_AS(parse_model("m:2x"), InvalidInput);
    CHECK_THROWS_AS(parse_model("q"), InvalidInput);
    CHECK_THROWS_AS(parse_model("custom:/nonexistent/model.json"), InvalidInput);

    std::string const path = "test_models_custom.json";
    {
        std::ofstream out(path);
        out << R"({"nuclear": {"kind": "vm", "m": 1}, "interaction": {"kind": "pair", "m": [0, 0]},)"
            << R"( "mu": 1, "nu": 1, "multiplier": 1})";
    }
    auto const c = parse_model("custom:" + path);
    CHECK(c.kind == ModelKind::custom);
    CHECK(c.mu == 1);
    CHECK(c.nuclear(0.5) == eval_vm(1, 0.5));
    {
        std::ofstream out(path);
        out << R"({"nuclear": {"kind": "vm", "m": 0}, "interaction": {"kind": "weights", "weights": [1]},)"
            << R"( "mu": 3, "nu": 0})";
    }
    CHECK_THROWS_AS(parse_model("custom:" + path), EnvelopeError);
    {
        std::ofstream out(path);
        out << R"({"nuclear": {"kind": "mix", "weights": [0.5, 0.5]}, "interaction": {"kind": "det", "m": [0, 1, 2]},)"
            << R"( "mu": 1, "nu": 4, "multiplier": 2})";
    }
    auto const mix = parse_model("custom:" + path);
    CHECK_THAT(mix.nuclear(1.0), WithinRel(0.5 * (eval_vm(0, 1.0) + eval_vm(1, 1.0)), 1e-15));
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(parse_model("custom:" + path), InvalidInput);
    std::remove(path.c_str());
}
