#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nnsamp/experiments.hpp"
#include "nnsamp/smoothness.hpp"
#include "nnsamp/steklov.hpp"
#include "test_support.hpp"

using namespace nnsamp;
using testsup::kSquare;

namespace {

ScalarField2D from_lambda(std::function<double(double, double)> f) {
    ScalarField2D field;
    field.evaluator = std::move(f);
    return field;
}

const double kProbes[][2] = {{-0.7, 0.3}, {0.1, -0.9}, {0.45, 0.45}, {-0.2, -0.1}, {0.8, -0.6}};

}  // namespace

TEST_CASE("parameter validation") {
    ScalarField2D f = test_function_f();
    CHECK_THROWS_AS(steklov_average(f, SteklovParams{0, 0.1}), std::domain_error);
    CHECK_THROWS_AS(steklov_average(f, SteklovParams{5, 0.1}), std::domain_error);
    CHECK_THROWS_AS(steklov_average(f, SteklovParams{2, 0.0}), std::domain_error);
    CHECK_THROWS_AS(modified_steklov(f, SteklovParams{2, 0.1, 1}), std::domain_error);
}

TEST_CASE("box average of linear fields has the closed-form shift") {
    ScalarField2D lin = from_lambda([](double x, double y) { return x + y; });

    ScalarField2D f1 = steklov_average(lin, SteklovParams{1, 0.1});
    ScalarField2D f2 = steklov_average(lin, SteklovParams{2, 0.1});
    for (auto [x, y] : kProbes) {
        CHECK(f1(x, y) == doctest::Approx(x + y + 0.1).epsilon(1e-12));
        CHECK(f2(x, y) == doctest::Approx(x + y + 0.2).epsilon(1e-12));
    }
}

TEST_CASE("constants are preserved for every order") {
    for (int r = 1; r <= 4; ++r) {
        ScalarField2D avg = steklov_average(constant_field(3.7), SteklovParams{r, 0.07});
        ScalarField2D mod = modified_steklov(constant_field(3.7), SteklovParams{r, 0.07});
        for (auto [x, y] : kProbes) {
            CHECK(avg(x, y) == doctest::Approx(3.7).epsilon(1e-12));
            CHECK(mod(x, y) == doctest::Approx(3.7).epsilon(1e-12));
        }
    }
}

TEST_CASE("modified average reproduces affine fields at r = 2") {
    ScalarField2D affine = from_lambda([](double x, double y) { return 2.0 * x - 3.0 * y + 1.0; });
    ScalarField2D mod = modified_steklov(affine, SteklovParams{2, 0.05});
    for (auto [x, y] : kProbes) {
        CHECK(mod(x, y) == doctest::Approx(2.0 * x - 3.0 * y + 1.0).epsilon(1e-11));
    }

    // the r = 2 combination of linear shifts cancels: 2(x+y+h) - (x+y+2h) = x+y
    ScalarField2D lin = from_lambda([](double x, double y) { return x + y; });
    ScalarField2D mlin = modified_steklov(lin, SteklovParams{2, 0.1});
    CHECK(mlin(0.2, 0.3) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("linearity at probe points") {
    std::mt19937 rng(71);
    ScalarField2D f = testsup::random_trig_field(rng);
    ScalarField2D g = testsup::random_trig_field(rng);
    ScalarField2D combo = from_lambda([f, g](double x, double y) {
        return 1.5 * f(x, y) - 0.75 * g(x, y);
    });

    SteklovParams params{2, 0.05};
    ScalarField2D mf = modified_steklov(f, params);
    ScalarField2D mg = modified_steklov(g, params);
    ScalarField2D mc = modified_steklov(combo, params);
    for (auto [x, y] : kProbes) {
        CHECK(mc(x, y) == doctest::Approx(1.5 * mf(x, y) - 0.75 * mg(x, y)).epsilon(1e-10));
    }
}

TEST_CASE("pointwise distance to the smoothed field sits under the local modulus") {
    ScalarField2D f = test_function_f();
    const double h = 0.05;
    ScalarField2D mod = modified_steklov(f, SteklovParams{2, h});

    std::mt19937 rng(2);
    std::uniform_real_distribution<double> coord(-0.9, 0.9);
    for (int i = 0; i < 50; ++i) {
        double x = coord(rng), y = coord(rng);
        double lhs = std::abs(f(x, y) - mod(x, y));
        double rhs = local_modulus(f, ModulusSpec{2, 6.0 * h}, x, y, kSquare);
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("smoothing does not roughen the field") {
    std::mt19937 rng(9);
    MixedExponents e23(2, 3);
    for (int trial = 0; trial < 2; ++trial) {
        ScalarField2D f = testsup::random_trig_field(rng);
        ScalarField2D smooth = modified_steklov(f, SteklovParams{2, 0.05});
        double tf = tau_modulus(f, ModulusSpec{1, 0.1}, kSquare, e23, 16);
        double ts = tau_modulus(smooth, ModulusSpec{1, 0.1}, kSquare, e23, 16);
        CHECK(ts <= tf * 1.05 + 1e-12);  // probe tolerance
    }
}

TEST_CASE("domain bookkeeping for restricted fields") {
    ScalarField2D f = from_lambda([](double x, double y) { return x * y; });
    f.domain = Rect{-1.0, 1.0, -1.0, 1.0};

    SteklovParams params{2, 0.1};
    Rect usable = usable_region(*f.domain, params);
    CHECK(usable.x_hi == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(usable.y_hi == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(usable.x_lo == -1.0);

    ScalarField2D avg = steklov_average(f, params);
    REQUIRE(avg.domain.has_value());
    CHECK(avg.domain->x_hi == doctest::Approx(0.8).epsilon(1e-15));
    CHECK_NOTHROW(avg(0.0, 0.0));
    CHECK_THROWS_AS(avg(0.9, 0.0), std::domain_error);

    // margin too large for the domain
    CHECK_THROWS_AS(usable_region(*f.domain, SteklovParams{4, 0.6}), std::domain_error);
}
