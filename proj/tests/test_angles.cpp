#include "angleworks/angles.hpp"
#include "angleworks/series.hpp"
#include "angleworks/verify.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace aw;

namespace {

const PiNumber j51m1 = PiNumber(rat(539, 288), -4) - PiNumber(rat(1, 6));
const PiNumber j510 = PiNumber(rat(1692197, 846720), -4) - PiNumber(rat(1, 6));

}  // namespace

TEST_CASE("known internal angle sums") {
    CHECK(bJ_exact(4, 1, -2) == PiNumber(rat(1, 8)));
    CHECK(bJ_exact(5, 1, -2) == j51m1);
    CHECK(bJ_exact(4, 1, 0) == PiNumber(rat(401, 2560)));
    CHECK(bJ_exact(5, 1, 0) == j510);
    CHECK(bJ_exact(3, 1, 7) == PiNumber(rat(1, 2)));
    CHECK(bJ_exact(3, 1, 10) == PiNumber(rat(1, 2)));
    CHECK(bJ_exact(4, 3, -1) == PiNumber(2));
    CHECK(bJtilde_exact(4, 2, 5) == PiNumber(rat(6, 5)));
    CHECK(bJtilde_exact(3, 2, 3) == PiNumber(rat(3, 2)));
    for (int n = 1; n <= 7; ++n) {
        CHECK(bJ_exact(n, n, 1) == PiNumber(1));
        CHECK(bJtilde_exact(n, n, n + 2) == PiNumber(1));
    }
}

TEST_CASE("residue formula entries") {
    CHECK(bJ_residue(4, 3, 2) == PiNumber(2));
    CHECK(bJtilde_residue(4, 2, 2) == PiNumber(rat(6, 5)));
    CHECK(bJtilde_residue(3, 2, 2) == PiNumber(rat(3, 2)));
    CHECK(bJtilde_residue(3, 2, 1) == PiNumber(rat(3, 2)));
    PiNumber z2 = bJ_residue(5, 2, 2);
    CHECK(support_within(z2, {0, -4}));
}

TEST_CASE("residue_rational") {
    // Res (sin x)^-3 = 1/2, odd order poles of even functions vanish
    CHECK(residue_rational({0, 0, 3}) == rat(1, 2));
    CHECK(residue_rational({0, 0, 2}) == 0);
    CHECK(residue_rational({1, 1, 5}) == residue(antiderivative_from_zero(sin_power(1, 12)) * int_power(sin_power(1, 12), -5)));
}

TEST_CASE("Bernoulli fill") {
    std::vector<std::optional<PiNumber>> z(4);
    z[0] = PiNumber();
    z[2] = PiNumber(rat(3, 2));
    z[3] = PiNumber(1);
    CHECK(poincare_fill(z)[1] == PiNumber(rat(1, 2)));
    std::vector<std::optional<PiNumber>> w(6);
    w[0] = PiNumber();
    w[2] = bJ_residue(5, 2, 2);
    w[4] = bJ_residue(5, 4, 2);
    w[5] = PiNumber(1);
    CHECK(poincare_fill(w)[1] == j51m1);
    std::vector<std::optional<PiNumber>> zero(5);
    for (int i = 0; i < 5; i += 2) zero[i] = PiNumber();
    for (const auto& v : poincare_fill(zero)) CHECK(v.is_zero());
}

TEST_CASE("ugly formulas") {
    CHECK(bJ_ugly(5, 1, 2) == j51m1);
    CHECK(bJtilde_ugly(3, 1, 1) == bJtilde_exact(3, 1, 3));
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            if ((n - k) % 2 == 0)
                for (int a = std::max(2, n - 3 + (n - 3) % 2); a <= 6; a += 2) CHECK(bJ_ugly(n, k, a) == bJ_exact(n, k, a - n + 1));
            if (k % 2 == 1)
                for (int a = 1; a <= 5; a += 2) CHECK(bJtilde_ugly(n, k, a) == bJtilde_exact(n, k, a + n - 1));
        }
}

TEST_CASE("Poincare relations and arithmetic forms, n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        for (long tb = -2; tb <= 5; ++tb) {
            auto r = check_poincare(Family::beta, n, tb);
            CHECK_MESSAGE(r.passed, r.name << " " << r.detail);
        }
        for (int a = 1; a <= 5; ++a) {
            auto r = check_poincare(Family::betaprime, n, a + n - 1);
            CHECK_MESSAGE(r.passed, r.name << " " << r.detail);
        }
    }
}

TEST_CASE("single-term form when 2 beta + n and n - k are odd") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            if ((n - k) % 2 == 1) {
                long tb = 1 - n % 2;  // 2 beta + n odd
                PiNumber v = bJ_exact(n, k, tb);
                CHECK(v.is_monomial());
                CHECK(v.terms().begin()->first == -2 * (n - k - 1));
            }
}

TEST_CASE("a-values on the diagonal") {
    // a[k,k] = (alpha/2) Gamma(alpha k / 2) / (sqrt(pi) Gamma((alpha k + 1)/2))
    for (int alpha = 1; alpha <= 4; ++alpha)
        for (long kn = 1; kn <= 8; ++kn) {
            if (kn % 2 == 0) continue;  // parity: alpha kappa odd
            PiNumber want = gamma_half(kn) * rat(alpha, 2) / (PiNumber(1, 1) * gamma_half(kn + 1));
            CHECK(lA_residue(kn, kn, alpha) == want);
        }
    // a~[k,k] = c~_{(alpha k + 1)/2} / kappa
    for (int alpha = 1; alpha <= 4; ++alpha)
        for (long kn = 2; kn <= 8; kn += 2) CHECK(lA_tilde_residue(kn, kn, alpha) == c_tilde_beta(kn + 1) * rat(alpha, kn));
    CHECK_THROWS_AS(lA_residue(4, 2, 1), DomainError);
}

TEST_CASE("inversion relations") {
    for (int n = 2; n <= 6; ++n) {
        for (int a = std::max(0, n - 3); a <= 6; ++a) CHECK(check_inversion(Family::beta, n, a).passed);
        for (int a = 1; a <= 6; ++a) CHECK(check_inversion(Family::betaprime, n, a).passed);
    }
}

TEST_CASE("Kronecker relations") {
    for (int a = 1; a <= 3; ++a)
        for (int n = 1; n <= 5; ++n) {
            auto r = check_kronecker(n, a);
            CHECK_MESSAGE(r.passed, r.detail);
            auto t = check_kronecker_tilde(n, a);
            CHECK_MESSAGE(t.passed, t.detail);
        }
}

TEST_CASE("structure values") {
    for (int n = 3; n <= 10; ++n) CHECK(rm_value(0, n) == 1);
    CHECK(rm_value(1, 5) == 2);
    for (int n = 4; n <= 10; ++n) CHECK(p_alpha_k_value(1, 4, n) == rat(n - 1, 6));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bJ_table(4, -3), DomainError);
    CHECK_THROWS_AS(bJtilde_table(4, 3), DomainError);
    CHECK_THROWS_AS(bJ_exact(4, 5, 0), DomainError);
}
