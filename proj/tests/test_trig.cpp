#include "angleworks/angles.hpp"
#include "angleworks/trig.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace aw;

namespace {

// composite Gauss-Legendre, 20 panels of 5 nodes
double gauss(const std::function<double(double)>& f, double a, double b) {
    static const double x[5] = {0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640, 0.9061798459386640};
    static const double w[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665, 0.2369268850561891, 0.2369268850561891};
    const int panels = 40;
    double h = (b - a) / panels, s = 0;
    for (int p = 0; p < panels; ++p) {
        double m = a + (p + 0.5) * h;
        for (int i = 0; i < 5; ++i) s += w[i] * f(m + 0.5 * h * x[i]);
    }
    return s * h / 2;
}

}  // namespace

TEST_CASE("cos powers as Fourier sums") {
    CHECK(cos_power_fourier(0) == FourierPoly::constant(1));
    CHECK(cos_power_fourier(2) == FourierPoly::constant(rat(1, 2)) + FourierPoly::term(rat(1, 2), 0, 2, Wave::cos));
    CHECK(cos_power_fourier(3) == FourierPoly::term(rat(3, 4), 0, 1, Wave::cos) + FourierPoly::term(rat(1, 4), 0, 3, Wave::cos));
}

TEST_CASE("antiderivatives from -pi/2") {
    auto F0 = fourier_antiderivative(FourierPoly::constant(1));
    CHECK(F0.poly == FourierPoly::term(1, 1, 0, Wave::cos));
    CHECK(F0.constant == PiNumber(rat(1, 2), 2));
    auto F1 = fourier_antiderivative(cos_power_fourier(1));
    CHECK(F1.poly == FourierPoly::term(1, 0, 1, Wave::sin));
    CHECK(F1.constant == PiNumber(1));
    auto F2 = fourier_antiderivative(cos_power_fourier(2));
    CHECK(F2.poly == FourierPoly::term(rat(1, 2), 1, 0, Wave::cos) + FourierPoly::term(rat(1, 4), 0, 2, Wave::sin));
    CHECK(F2.constant == PiNumber(rat(1, 4), 2));
}

TEST_CASE("symmetric integrals") {
    CHECK(integrate_symmetric(cos_power_fourier(2)) == PiNumber(rat(1, 2), 2));
    CHECK(integrate_symmetric(FourierPoly::term(1, 1, 1, Wave::cos)).is_zero());
    CHECK(integrate_symmetric(FourierPoly::term(1, 1, 1, Wave::sin)) == PiNumber(2));
}

TEST_CASE("products integrate like quadrature") {
    std::mt19937 g(17);
    std::uniform_int_distribution<int> j(0, 3), m(0, 4), c(-5, 5), kind(0, 1);
    auto rnd = [&] {
        FourierPoly p;
        for (int i = 0; i < 3; ++i) p += FourierPoly::term(rat(c(g), 3), j(g), m(g), kind(g) ? Wave::cos : Wave::sin);
        return p;
    };
    for (int t = 0; t < 100; ++t) {
        FourierPoly p = rnd(), q = rnd();
        FourierPoly pq = p * q;
        double exact = integrate_symmetric(pq).to_double();
        double num = gauss([&](double x) { return p.eval(x) * q.eval(x); }, -M_PI / 2, M_PI / 2);
        CHECK(std::abs(exact - num) <= 1e-10 * std::max(1.0, std::abs(num)));
    }
}

TEST_CASE("odd integrands vanish") {
    for (int j = 1; j <= 5; j += 2)
        for (int m = 0; m <= 4; ++m) CHECK(integrate_symmetric(FourierPoly::term(1, j, m, Wave::cos)).is_zero());
    for (int j = 0; j <= 4; j += 2)
        for (int m = 1; m <= 4; ++m) CHECK(integrate_symmetric(FourierPoly::term(1, j, m, Wave::sin)).is_zero());
}

TEST_CASE("b-values") {
    // alpha = 2, alpha kappa = 2
    CHECK(external_lB(1, 1, 2) == PiNumber(rat(1, 2), 2));
    CHECK(external_lB(2, 1, 2) == PiNumber(rat(1, 4), 4));
    CHECK(external_lB(1, 2, 2).is_zero());
}

TEST_CASE("external angle sums") {
    for (int a = 0; a <= 8; ++a) {
        CHECK(external_bI(3, 1, a) == PiNumber(1));
        CHECK(external_bI(2, 1, a) == PiNumber(1));
        for (int n = 1; n <= 6; ++n) CHECK(external_bI(n, n, a) == PiNumber(1));
    }
    for (int a = 1; a <= 6; ++a) {
        CHECK(external_bI_tilde(3, 1, a) == PiNumber(1));
        for (int n = 1; n <= 6; ++n) CHECK(external_bI_tilde(n, n, a) == PiNumber(1));
    }
    CHECK(external_bI_tilde(2, 1, 2) == PiNumber(1));
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k < n; ++k)
            for (int a = 0; a <= 6; ++a) {
                double v = external_bI(n, k, a).to_double();
                CHECK(v > 0);
                CHECK(v < binomial(n, k).get_d());
            }
}

TEST_CASE("tangent antiderivatives") {
    auto t1 = inner_tan_antiderivative(1);
    CHECK(t1.degree() == 1);
    CHECK(t1.coeffs[1] == 1);
    auto t3 = inner_tan_antiderivative(3);
    CHECK(t3.coeffs[1] == 1);
    CHECK(t3.coeffs[3] == rat(1, 3));
    auto t5 = inner_tan_antiderivative(5);
    CHECK(t5.coeffs[1] == 1);
    CHECK(t5.coeffs[3] == rat(2, 3));
    CHECK(t5.coeffs[5] == rat(1, 5));
}

TEST_CASE("case (iii) through the tangent algebra") {
    CHECK(bJ_exact_case_iii(4, 1, 1) == PiNumber(rat(1, 8)));
    CHECK(bJ_exact_case_iii(4, 1, 3) == PiNumber(rat(401, 2560)));
    CHECK(bJ_exact_case_iii(4, 4, 3) == PiNumber(1));
    for (int n = 2; n <= 8; n += 2)
        for (int a = std::max(1, n - 3) | 1; a <= 9; a += 2)
            for (int k = 1; k <= n; ++k) {
                auto [re, im] = bJ_tan_algebra(n, k, a);
                CHECK(im.is_zero());
                CHECK(re == bJ_exact_case_iii(n, k, a));
            }
}
