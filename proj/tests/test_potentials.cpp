#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "landau1d/potentials.hpp"
#include "oracle_values.hpp"

using namespace landau1d;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
double const sqrt_pi = std::sqrt(std::numbers::pi);
}

TEST_CASE("V_m matches the frozen quadrature table", "[potentials][oracle]") {
    for (auto const& o : oracle::vm_values) {
        INFO("m=" << o.m << " x=" << o.x);
        CHECK_THAT(eval_vm(o.m, o.x), WithinRel(o.value, 1e-11));
    }
}

TEST_CASE("V_m closed forms", "[potentials]") {
    CHECK_THAT(eval_vm(0, 0.0), WithinRel(sqrt_pi, 1e-14));
    CHECK_THAT(eval_vm(0, 1.0), WithinRel(sqrt_pi * std::exp(1.0) * std::erfc(1.0), 1e-14));
    CHECK_THAT(eval_vm(0, 1.0), WithinAbs(0.7579, 1e-4));
    // Gamma(m+1/2)/m! at the origin
    for (int m : {1, 2, 5, 20, 60, 150, 400}) {
        double const expect = std::exp(std::lgamma(m + 0.5) - std::lgamma(m + 1.0));
        CHECK_THAT(eval_vm(m, 0.0), WithinRel(expect, 1e-12));
    }
    double const v32 = eval_vm(3, 2.0);
    CHECK(v32 > 1.0 / std::sqrt(8.0));
    CHECK(v32 < 1.0 / std::sqrt(7.0));
}

TEST_CASE("m = 0 agrees with erfc form on [0, 10]", "[potentials]") {
    for (int i = 0; i <= 1000; ++i) {
        double const x = 0.01 * i;
        double const ref = sqrt_pi * std::exp(x * x) * std::erfc(x);
        CHECK(std::abs(eval_vm(0, x) - ref) < 1e-10);
    }
}

TEST_CASE("field scaling", "[potentials]") {
    CHECK_THAT(eval_vm_field(0, 4.0, 0.0), WithinRel(2.0 * sqrt_pi, 1e-14));
    CHECK(eval_vm_field(0, 1.0, 1.0) == eval_vm(0, 1.0));
    CHECK_THAT(eval_vm_field(2, 9.0, 0.5), WithinRel(3.0 * eval_vm(2, 1.5), 2e-13));
    for (int m : {0, 3, 7, 12})
        for (double B : {0.25, 3.0, 100.0})
            for (double x : {0.0, 0.3, 2.0, 11.0}) {
                double const sb = std::sqrt(B);
                CHECK_THAT(eval_vm_field(m, B, x), WithinRel(sb * eval_vm(m, sb * x), 2e-13));
            }
    CHECK_THROWS_AS(eval_vm_field(0, 0.0, 1.0), InvalidInput);
}

TEST_CASE("V_av", "[potentials]") {
    for (double x : {0.0, 0.7, 3.0, 40.0}) CHECK(eval_vav(1, x) == eval_vm(0, x));
    double s = 0.0;
    for (int j = 0; j < 10; ++j) s += std::exp(std::lgamma(j + 0.5) - std::lgamma(j + 1.0));
    CHECK_THAT(eval_vav(10, 0.0), WithinRel(s / 10.0, 1e-13));
    CHECK(eval_vav(20, 3.0) <= 2.0 * eval_vm(20, 3.0));
    CHECK_THROWS_AS(eval_vav(0, 1.0), InvalidInput);
    // the refined identity is only an approximation
    double const approx = vav_refined_estimate(20, 3.0);
    CHECK(std::isfinite(approx));
}

TEST_CASE("envelope bracket", "[potentials]") {
    auto e = vm_envelope(1, 0.0);
    CHECK(e.lower == 1.0 / std::sqrt(2.0));
    REQUIRE(e.upper);
    CHECK(*e.upper == 1.0);
    e = vm_envelope(0, 0.0);
    CHECK(e.lower == 1.0);
    CHECK_FALSE(e.upper.has_value());
    e = vm_envelope(4, 3.0);
    CHECK(e.lower == 1.0 / std::sqrt(14.0));
    CHECK(*e.upper == 1.0 / std::sqrt(13.0));
    for (int m = 0; m <= 50; m += 7)
        for (double x : {0.0, 0.4, 1.9, 2.0, 2.1, 9.0, 19.5}) {
            if (m == 0 && x == 0.0) continue;
            CHECK(vm_envelope(m, x).contains_strictly(eval_vm(m, x)));
        }
}

TEST_CASE("monotone in x and m", "[potentials]") {
    for (int m : {0, 1, 4, 17, 50}) {
        double prev = eval_vm(m, 0.0);
        for (int i = 1; i <= 400; ++i) {
            double const x = 0.05 * i;
            double const v = eval_vm(m, x);
            CHECK(v < prev);
            CHECK(eval_vm(m + 1, x) < v);
            CHECK(v < 1.0 / x);
            prev = v;
        }
    }
}

TEST_CASE("asymptotics and evenness", "[potentials]") {
    for (int m : {0, 2, 10, 30})
        for (double x : {50.0, 80.0, 300.0, 1e4}) CHECK(std::abs(x * eval_vm(m, x) - 1.0) < 10.0 * (m + 1) / (x * x));
    for (int m : {0, 3, 40})
        for (double x : {0.2, 1.5, 2.5, 8.0, 120.0}) CHECK(eval_vm(m, x) == eval_vm(m, -x));
}

TEST_CASE("regime boundaries are continuous", "[potentials]") {
    // recurrence / quadrature switch at |x| = 2 and the asymptotic switch
    for (int m : {1, 5, 20}) {
        double const a = eval_vm(m, std::nextafter(2.0, 0.0));
        double const b = eval_vm(m, 2.0);
        CHECK_THAT(a, WithinRel(b, 1e-12));
        double const xs = 10.0 * std::sqrt(m + 1.0);
        CHECK_THAT(eval_vm(m, std::nextafter(xs, 0.0)), WithinRel(eval_vm(m, std::nextafter(xs, 1e9)), 1e-12));
    }
    auto const range = eval_vm_range(12, 1.3);
    for (int m = 0; m <= 12; ++m) CHECK_THAT(range[m], WithinRel(eval_vm(m, 1.3), 1e-15));
}

TEST_CASE("vm_table", "[potentials]") {
    std::vector<int> const m0{0};
    std::vector<double> const x0{0.0};
    auto t = vm_table(m0, x0);
    REQUIRE(t.values.size() == 1);
    CHECK_THAT(t.values[0][0], WithinRel(sqrt_pi, 1e-14));

    std::vector<int> const none;
    t = vm_table(none, x0);
    CHECK(t.values.empty());

    std::vector<int> const three{0, 1, 2};
    std::vector<double> const one{1.0};
    t = vm_table(three, one);
    REQUIRE(t.values.size() == 3);
    CHECK(t.values[1][0] < t.values[0][0]);
    CHECK(t.values[2][0] < t.values[1][0]);

    t = vm_table(three, Grid1D(2.0, 5));
    CHECK(t.x.size() == 5);
    CHECK_THROWS_AS(vm_table(three, std::vector<double>{}), InvalidInput);
}

TEST_CASE("argument errors", "[potentials]") {
    CHECK_THROWS_AS(LandauIndex(-1), InvalidInput);
    QuadratureSpec bad;
    bad.node_count = 1;
    CHECK_THROWS_AS(eval_vm(1, 3.0, bad), InvalidInput);
    CHECK_THROWS_AS(eval_vm(1, std::nan(""), {}), InvalidInput);
    CHECK_THROWS_AS(FieldParams(0.0, 1.0), InvalidInput);
    CHECK(FieldParams(1.0, 100.0).M() == 0.1);

    QuadratureSpec tight;
    tight.max_refinements = 0;
    tight.node_count = 2;
    try {
        (void)eval_vm(5, 3.0, tight);
        FAIL("expected AccuracyError");
    } catch (AccuracyError const& e) {
        CHECK(std::isfinite(e.best_estimate));
        CHECK(e.error_bound > 0.0);
    }
}
