#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sgm/orlicz.hpp"

using namespace sgm;

TEST_SUITE("orlicz") {

TEST_CASE("power moment functions classify by exponent") {
    CHECK(orlicz::phi_power(2.0).cls == orlicz::PhiClass::PowerAtLeastTwo);
    CHECK(orlicz::phi_power(3.5).cls == orlicz::PhiClass::PowerAtLeastTwo);
    CHECK(orlicz::phi_power(1.5).cls == orlicz::PhiClass::PowerBetweenOneTwo);
    CHECK(orlicz::phi_power(2.0).sum_exponent() == 2.0);
    CHECK(orlicz::phi_power(6.0).sum_exponent() == 2.0);
    CHECK(orlicz::phi_power(1.5).sum_exponent() == 1.5);
    CHECK_THROWS_AS(orlicz::phi_power(1.0), std::invalid_argument);
    CHECK_THROWS_AS(orlicz::phi_power(0.5), std::invalid_argument);
}

TEST_CASE("conjugate pair meets the equality case") {
    for (const double zeta : {1.3, 1.8, 2.0, 2.5, 4.0}) {
        const auto phi = orlicz::phi_power(zeta);
        CHECK(phi.conjugate_exponent() == doctest::Approx(zeta / (zeta - 1.0)));
        for (const double t : {0.25, 1.0, 1.7, 3.0}) {
            const double s = std::pow(t, zeta - 1.0);
            CHECK(phi(t) + phi.conjugate(s) == doctest::Approx(t * s).epsilon(1e-12));
        }
    }
    const auto phi = orlicz::phi_power(2.5);
    CHECK(phi(2.0) == doctest::Approx(std::pow(2.0, 2.5) / 2.5));
    CHECK(phi(-2.0) == phi(2.0));
}

TEST_CASE("sum exponent admissibility") {
    CHECK(orlicz::phi_sum_exponent_valid(orlicz::phi_power(3.0), 2.0));
    CHECK(orlicz::phi_sum_exponent_valid(orlicz::phi_power(1.5), 1.5));
    CHECK(orlicz::phi_sum_exponent_valid(orlicz::phi_power(2.0), 2.0));
    CHECK_FALSE(orlicz::phi_sum_exponent_valid(orlicz::phi_power(1.5), 2.0));
    CHECK_FALSE(orlicz::phi_sum_exponent_valid(orlicz::phi_power(3.0), 3.0));
    CHECK_FALSE(orlicz::phi_sum_exponent_valid(orlicz::phi_power(2.0), 0.0));
}

TEST_CASE("coefficient constructors pin the standard") {
    const auto g = orlicz::coef_gaussian(1.7);
    CHECK(g.dist == orlicz::CoefDist::StandardGaussian);
    CHECK(g.tau == 1.7);
    const auto b = orlicz::coef_bounded(0.4);
    CHECK(b.dist == orlicz::CoefDist::SymmetricBounded);
    CHECK(b.tau == 0.4);
    CHECK_THROWS_AS(orlicz::coef_gaussian(0.0), std::invalid_argument);
    CHECK_THROWS_AS(orlicz::coef_bounded(-1.0), std::invalid_argument);
}

TEST_CASE("weighted standard reduces to the gaussian deviation at s = 2") {
    const std::vector<double> taus{1.0, 0.5, 2.0, 1.25};
    const std::vector<double> weights{0.3, -1.1, 0.7, 2.0};
    double var = 0.0;
    for (std::size_t k = 0; k < taus.size(); ++k)
        var += weights[k] * weights[k] * taus[k] * taus[k];
    CHECK(orlicz::sum_standard(taus, weights, 2.0) ==
          doctest::Approx(std::sqrt(var)).epsilon(1e-14));

    // s = 1.5 by hand on a two-term vector
    const double byhand = std::pow(std::pow(0.6, 1.5) + std::pow(2.2, 1.5), 1.0 / 1.5);
    CHECK(orlicz::sum_standard({0.6, 1.1}, {1.0, -2.0}, 1.5) ==
          doctest::Approx(byhand).epsilon(1e-14));

    CHECK_THROWS_AS(orlicz::sum_standard({1.0}, {1.0, 2.0}, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(orlicz::sum_standard({1.0}, {1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("bounded symmetric draws satisfy the declared moment inequality") {
    // log E exp(lambda xi) = log cosh(lambda b) must stay below (b lambda)^zeta / zeta
    const double b = 0.7;
    for (const double zeta : {1.2, 1.5, 2.0}) {
        for (double lam = 0.1; lam <= 6.0; lam += 0.1) {
            const double lhs = std::log(std::cosh(lam * b));
            const double rhs = std::pow(lam * b, zeta) / zeta;
            CHECK(lhs <= rhs * (1.0 + 1e-12));
        }
    }
}

} // TEST_SUITE
