#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "polyharm/modes.hpp"

using namespace polyharm;

namespace {

// Independent derivative oracle: iterated central differences.
double central_derivative(const std::function<double(double)>& f, double x, int order,
                          double h = 1e-4) {
    if (order == 0) return f(x);
    auto lower = [&](double y) { return central_derivative(f, y, order - 1, h); };
    return (lower(x + h) - lower(x - h)) / (2 * h);
}

const std::vector<double> kSamples = {-1.7, -0.4, 0.0, 0.3, 1.1, 2.0};

} // namespace

TEST_CASE("oscillatory mode closed-form derivatives") {
    auto mode = Mode1D<double>::oscillatory(1.0, 1.0, 0.0);
    CHECK(mode.eval(0.0, 0) == doctest::Approx(1.0));
    for (double x : kSamples)
        CHECK(mode.eval(x, 2) == doctest::Approx(-mode.eval(x, 0)).epsilon(1e-12));

    // cross-check low orders against finite differences
    auto mixed = Mode1D<double>::oscillatory(1.3, 0.7, -0.4);
    auto f = [&](double x) { return mixed.eval(x, 0); };
    for (double x : {-0.8, 0.5, 1.2}) {
        CHECK(mixed.eval(x, 1) == doctest::Approx(central_derivative(f, x, 1)).epsilon(1e-6));
        CHECK(mixed.eval(x, 2) == doctest::Approx(central_derivative(f, x, 2)).epsilon(1e-5));
    }
}

TEST_CASE("hyperbolic and affine derivatives") {
    auto hyp = Mode1D<double>::hyperbolic(0.9, 0.3, 1.1);
    auto f = [&](double x) { return hyp.eval(x, 0); };
    for (double x : {-0.6, 0.4}) {
        CHECK(hyp.eval(x, 1) == doctest::Approx(central_derivative(f, x, 1)).epsilon(1e-6));
        CHECK(hyp.eval(x, 2) == doctest::Approx(central_derivative(f, x, 2)).epsilon(1e-5));
    }

    auto aff = Mode1D<double>::affine(3.0, 5.0);
    CHECK(aff.eval(2.0, 0) == doctest::Approx(13.0));
    CHECK(aff.eval(7.0, 1) == doctest::Approx(5.0));
    for (double x : kSamples) CHECK(aff.eval(x, 2) == 0.0);
}

TEST_CASE("mode lambda by variant") {
    CHECK(Mode1D<double>::oscillatory(2.0, 1, 0).lambda() == doctest::Approx(-4.0));
    CHECK(Mode1D<double>::hyperbolic(3.0, 1, 0).lambda() == doctest::Approx(9.0));
    CHECK(Mode1D<double>::affine(1, 1).lambda() == 0.0);
}

TEST_CASE("mode construction rejects zero rates and silly orders") {
    CHECK_THROWS_AS(Mode1D<double>::oscillatory(0.0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Mode1D<double>::hyperbolic(-1.0, 1, 0), std::invalid_argument);
    auto mode = Mode1D<double>::oscillatory(1.0, 1, 0);
    CHECK_THROWS_AS(mode.eval(0.0, kMaxDerivativeOrder + 1), std::invalid_argument);
}

TEST_CASE("even-order derivatives are lambda powers times the mode") {
    std::vector<Mode1D<double>> variants = {
        Mode1D<double>::oscillatory(1.2, 0.5, -1.5),
        Mode1D<double>::hyperbolic(0.7, 1.0, 0.25),
        Mode1D<double>::affine(-2.0, 0.5),
    };
    for (const auto& mode : variants)
        for (int j = 1; j <= 4; ++j)
            for (double x : kSamples) {
                const double expected = std::pow(mode.lambda(), j) * mode.eval(x, 0);
                const double got = mode.eval(x, 2 * j);
                CHECK(std::abs(got - expected) <= 1e-12 * std::max(std::abs(expected), 1.0));
            }
}

TEST_CASE("derivative linearity in (a, b)") {
    const double a = 0.8, b = -1.3;
    auto full = Mode1D<double>::oscillatory(1.5, a, b);
    auto ca = Mode1D<double>::oscillatory(1.5, 1.0, 0.0);
    auto cb = Mode1D<double>::oscillatory(1.5, 0.0, 1.0);
    for (int order = 0; order <= 5; ++order)
        for (double x : kSamples)
            CHECK(full.eval(x, order) ==
                  doctest::Approx(a * ca.eval(x, order) + b * cb.eval(x, order)).epsilon(1e-13));
}

TEST_CASE("lambda-power ODE chain") {
    auto osc = Mode1D<double>::oscillatory(1.0, 1.0, 1.0);
    CHECK(check_ode_chain(osc, 2, kSamples, 1e-12).pass);

    auto aff = Mode1D<double>::affine(2.0, -1.0);
    CHECK(check_ode_chain(aff, 1, kSamples, 1e-12).pass);

    auto hyp = Mode1D<double>::hyperbolic(2.0, 0.0, 1.0);
    auto rep = check_ode_chain(hyp, 3, kSamples, 1e-12);
    CHECK(rep.pass);
    CHECK(std::pow(hyp.lambda(), 3) == doctest::Approx(64.0));

    CHECK_THROWS_AS(check_ode_chain(osc, 9, kSamples, 1e-12), std::invalid_argument);
}

TEST_CASE("last factor evaluation") {
    // cosh x
    auto chf = LastFactor<double>::make(-1.0, 1, Eigen::ArrayXd::Ones(1), Eigen::ArrayXd::Zero(1));
    CHECK(chf.eval(0.0, 0) == doctest::Approx(1.0));
    CHECK(chf.eval(0.7, 0) == doctest::Approx(std::cosh(0.7)));

    // K = 0, X = x
    Eigen::ArrayXd poly(2);
    poly << 0.0, 1.0;
    auto lin = LastFactor<double>::make(0.0, 1, poly, Eigen::ArrayXd());
    for (double x : kSamples) CHECK(lin.eval(x, 1) == doctest::Approx(1.0));

    // x e^{-x}: second derivative is (x - 2) e^{-x}
    Eigen::ArrayXd q(2), f0(2);
    q << 0.0, 1.0;
    f0 << 0.0, 0.0;
    auto xexp = ExpBasisFactor<double>::make(-1.0, 2, q, f0);
    CHECK(xexp.eval(1.0, 2) == doctest::Approx(-std::exp(-1.0)).epsilon(1e-12));

    // Leibniz result against finite differences for a mixed factor
    Eigen::ArrayXd c(2), d(2);
    c << 0.4, -1.1;
    d << 0.9, 0.3;
    auto mixed = LastFactor<double>::make(-2.0, 2, c, d);
    auto f = [&](double x) { return mixed.eval(x, 0); };
    for (double x : {-0.5, 0.8}) {
        CHECK(mixed.eval(x, 1) == doctest::Approx(central_derivative(f, x, 1)).epsilon(1e-6));
        CHECK(mixed.eval(x, 2) == doctest::Approx(central_derivative(f, x, 2)).epsilon(1e-5));
    }

    CHECK_THROWS_AS(chf.eval(0.0, kMaxDerivativeOrder + 1), std::invalid_argument);
}

TEST_CASE("annihilation check accepts valid bases and flags the overfull one") {
    // (D^2 - 1)^2 kills x e^{-x}
    Eigen::ArrayXd q(2), fg(2);
    q << 0.0, 1.0;
    fg << 0.0, 0.0;
    auto valid = ExpBasisFactor<double>::make(-1.0, 2, q, fg);
    CHECK(annihilation_check(valid, 2, kSamples, 1e-12).pass);

    // affine factor is harmonic
    Eigen::ArrayXd poly(2);
    poly << 1.5, -0.5;
    auto aff = LastFactor<double>::make(0.0, 1, poly, Eigen::ArrayXd());
    CHECK(annihilation_check(aff, 1, kSamples, 1e-12).pass);

    // (D^2 - 1)(x e^{-x}) = -2 e^{-x} != 0: the r = 2 term with
    // multiplicity 1 needs the permissive constructor and must fail
    Eigen::ArrayXd c(2), d(2);
    c << 0.0, 1.0;
    d << 0.0, -1.0;  // cosh - sinh = e^{-x}
    CHECK_THROWS_AS(LastFactor<double>::make(-1.0, 1, c, d), std::invalid_argument);
    auto invalid = LastFactor<double>::paper_basis(-1.0, 1, c, d);
    auto rep = annihilation_check(invalid, 1, kSamples, 1e-12);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_residual > 1e-3);
}

TEST_CASE("any r > n term with K != 0 fails annihilation for power n") {
    for (int n = 1; n <= 3; ++n) {
        Eigen::ArrayXd c = Eigen::ArrayXd::Zero(n + 1), d = Eigen::ArrayXd::Zero(n + 1);
        c[n] = 1.0;  // pure x^n cosh term, r = n + 1
        auto lf = LastFactor<double>::paper_basis(-1.5, n, c, d);
        CHECK_FALSE(annihilation_check(lf, n, kSamples, 1e-9).pass);
        // the same coefficients are a valid basis one power higher
        auto ok = LastFactor<double>::make(-1.5, n + 1, c, d);
        CHECK(annihilation_check(ok, n + 1, kSamples, 1e-11).pass);
    }
}

TEST_CASE("cosh/sinh to exponential basis round trip") {
    Eigen::ArrayXd c(3), d(3);
    c << 1.2, -0.7, 0.3;
    d << 0.5, 0.9, -1.4;
    auto lf = LastFactor<double>::make(-2.5, 3, c, d);
    auto ef = to_exp_basis(lf);
    auto back = to_hyperbolic_basis(ef);
    for (double x : kSamples)
        for (int order = 0; order <= 4; ++order) {
            const double ref = lf.eval(x, order);
            CHECK(std::abs(ef.eval(x, order) - ref) <= 1e-12 * std::max(std::abs(ref), 1.0));
            CHECK(std::abs(back.eval(x, order) - ref) <= 1e-12 * std::max(std::abs(ref), 1.0));
        }
}

TEST_CASE("basis length validation") {
    CHECK_THROWS_AS(LastFactor<double>::make(-1.0, 1, Eigen::ArrayXd::Ones(2), Eigen::ArrayXd::Zero(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LastFactor<double>::paper_basis(-1.0, 1, Eigen::ArrayXd::Ones(3), Eigen::ArrayXd::Zero(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LastFactor<double>::make(0.0, 1, Eigen::ArrayXd::Ones(3), Eigen::ArrayXd()),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExpBasisFactor<double>::make(1.0, 1, Eigen::ArrayXd::Ones(1), Eigen::ArrayXd::Zero(1)),
                    std::invalid_argument);
}
