#include "angleworks/angles.hpp"
#include "angleworks/quadrature.hpp"
#include "angleworks/trig.hpp"
#include "angleworks/verify.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace aw;

TEST_CASE("inner cumulative integral") {
    CHECK(inner_cumulative(0, 0, Family::beta) == 0);
    CHECK(inner_cumulative(0, 1.5, Family::beta) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(inner_cumulative(1, 1.0, Family::beta) == doctest::Approx(std::sinh(1.0)).epsilon(1e-13));
    CHECK(inner_cumulative(2, 1.0, Family::betaprime) == doctest::Approx(std::sinh(1.0)).epsilon(1e-13));
}

TEST_CASE("numeric angle sums") {
    CHECK(std::abs(bJ_numeric(4, 1, -1).value - 0.125) < 1e-10);
    CHECK(std::abs(bJ_numeric(5, 1, 0).value - 0.0358269593206881257) < 1e-10);
    CHECK(std::abs(outer_integral(4, 1, 1, Family::beta).value - 0.125) < 1e-10);
    CHECK(std::abs(outer_integral(5, 1, 4, Family::beta).value - 0.0358269593206881257) < 1e-10);
    for (int n = 1; n <= 6; ++n) {
        CHECK(bJtilde_numeric(n, n, n / 2.0 + 0.3).value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(outer_integral(n, n, std::max(2.5, n - 3.0), Family::beta).value == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("numeric and exact agree for n <= 7") {
    for (int n = 2; n <= 7; ++n)
        for (long tb = -2; tb <= 3; ++tb)
            for (int k = 1; k <= n; ++k) {
                double x = bJ_exact(n, k, tb).to_double();
                CHECK(std::abs(bJ_numeric(n, k, tb / 2.0).value - x) <= 1e-8);
            }
    for (int n = 2; n <= 7; ++n)
        for (int a = 1; a <= 4; ++a)
            for (int k = 1; k <= n; ++k) {
                long tb = a + n - 1;
                CHECK(std::abs(bJtilde_numeric(n, k, tb / 2.0).value - bJtilde_exact(n, k, tb).to_double()) <= 1e-8);
            }
}

TEST_CASE("the fixed 30-case grid") {
    auto grid = numeric_grid();
    CHECK(grid.size() == 30);
    for (const auto& c : grid) {
        CHECK(c.n <= 7);
        bool tilde = c.family == Family::betaprime;
        double q = (tilde ? bJtilde_numeric(c.n, c.k, c.twice_beta / 2.0) : bJ_numeric(c.n, c.k, c.twice_beta / 2.0)).value;
        double x = (tilde ? bJtilde_exact(c.n, c.k, c.twice_beta) : bJ_exact(c.n, c.k, c.twice_beta)).to_double();
        CHECK(std::abs(q - x) <= 1e-8);
    }
}

TEST_CASE("doubling the horizon stays within the error estimate") {
    struct C {
        int n, k;
        double alpha;
        Family f;
    };
    std::vector<C> cases = {{4, 1, 1, Family::beta},      {5, 2, 2.5, Family::beta},    {6, 3, 3, Family::beta},
                            {7, 1, 4, Family::beta},      {5, 1, 2.5, Family::beta},    {3, 1, 1, Family::betaprime},
                            {4, 2, 2, Family::betaprime}, {5, 3, 1.5, Family::betaprime}, {6, 1, 3, Family::betaprime},
                            {7, 2, 2, Family::betaprime}};
    for (const auto& c : cases) {
        auto a = outer_integral(c.n, c.k, c.alpha, c.f, 1.0);
        auto b = outer_integral(c.n, c.k, c.alpha, c.f, 2.0);
        CHECK(std::abs(a.value - b.value) <= std::max(a.abs_error, 1e-12) + 1e-12);
        CHECK(std::abs(a.imag) < 1e-10);
    }
}

TEST_CASE("plain cosh powers") {
    // cosh^-P integrates to sqrt(pi) Gamma(P/2) / Gamma((P+1)/2)
    for (double P : {1.5, 2.0, 3.0, 5.5}) {
        auto q = cosh_integral(P, 0, 0, 0);
        double want = std::sqrt(M_PI) * std::tgamma(P / 2) / std::tgamma((P + 1) / 2);
        CHECK(q.value == doctest::Approx(want).epsilon(1e-11));
        CHECK(std::abs(q.imag) < 1e-14);
    }
}

TEST_CASE("external sums numerically") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (int a = 1; a <= 3; ++a) {
                CHECK(external_numeric(n, k, a, Family::beta).value == doctest::Approx(external_bI(n, k, a).to_double()).epsilon(1e-9));
                CHECK(external_numeric(n, k, a, Family::betaprime).value ==
                      doctest::Approx(external_bI_tilde(n, k, a).to_double()).epsilon(1e-9));
            }
}
