#include "angleworks/polytope.hpp"
#include "angleworks/verify.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace aw;

namespace {

std::vector<PiNumber> values(const FVector& f) {
    std::vector<PiNumber> v;
    for (const auto& e : f.entries) v.push_back(e.value);
    return v;
}

const PiNumber pi_sq = PiNumber::pi(4);

}  // namespace

TEST_CASE("Poisson polytope") {
    CHECK(values(poisson_polytope_fvector(3, 2)) == std::vector<PiNumber>{12, 30, 20});
    for (int a = 1; a <= 5; ++a) CHECK(values(poisson_polytope_fvector(1, a)) == std::vector<PiNumber>{2});
    CHECK(poisson_polytope_fvector(2, 1).at(1).value == pi_sq * rat(1, 2));
    for (int d = 1; d <= 10; ++d) {
        auto f = poisson_polytope_fvector(d, 2);
        for (int k = 1; k <= d; ++k) CHECK(f.at(k - 1).value == PiNumber(Rational(binomial(d, k) * binomial(d + k, k))));
    }
    for (int d = 0; d <= 10; ++d)
        for (int k = 0; k <= d; ++k) CHECK(sin_cos_residue(d, k) == Rational(binomial(d + k, k)));
    for (int d = 1; d <= 7; ++d)
        for (int a = 1; a <= 4; ++a) {
            auto f = poisson_polytope_fvector(d, a);
            for (int k = 1; k <= d; ++k)
                if ((a * k) % 2 == 0) CHECK(poisson_residue(d, k, a) == f.at(k - 1).value);
        }
    auto num = poisson_polytope_numeric(3, 2.0);
    for (int l = 0; l < 3; ++l) CHECK(num.at(l).numeric == doctest::Approx(values(poisson_polytope_fvector(3, 2))[l].to_double()).epsilon(1e-9));
    auto mid = poisson_polytope_numeric(3, 2.5);
    for (int l = 0; l < 3; ++l) CHECK(mid.at(l).numeric > 0);
}

TEST_CASE("zero cell") {
    CHECK(values(zero_cell_fvector(2)) == std::vector<PiNumber>{pi_sq * rat(1, 2), pi_sq * rat(1, 2)});
    CHECK(zero_cell_product(3, 1) == pi_sq * Rational(2));
    CHECK(zero_cell_fvector(3).at(1).value == pi_sq * Rational(2));
    for (int d = 1; d <= 12; ++d)
        for (int l = d % 2; l <= d; l += 2) CHECK(zero_cell_product(d, l) == zero_cell_series(d, l));
    for (int d = 1; d <= 8; ++d) {
        auto z = zero_cell_fvector(d);
        auto p = poisson_polytope_fvector(d, 1);
        for (int l = 0; l < d; ++l) CHECK(z.at(l).value == p.at(d - 1 - l).value);
    }
}

TEST_CASE("typical Voronoi cell") {
    CHECK(values(typical_voronoi_fvector(1)) == std::vector<PiNumber>{2});
    CHECK(values(typical_voronoi_fvector(2)) == std::vector<PiNumber>{6, 6});
    CHECK(values(typical_voronoi_fvector(3)) ==
          std::vector<PiNumber>{pi_sq * rat(96, 35), pi_sq * rat(144, 35), PiNumber(2) + pi_sq * rat(48, 35)});
    CHECK(face_intensity(2, 0) == PiNumber(2));
    CHECK(face_intensity(2, 2) == PiNumber(1));
    CHECK(face_intensity(3, 1) == pi_sq * rat(48, 35));
    for (int d = 1; d <= 10; ++d) {
        auto v = typical_voronoi_fvector(d);
        for (int l = 0; l < d; ++l) CHECK(support_within(v.at(l).value, voronoi_form(d, l)));
        if (d % 2 == 0)
            for (int l = 0; l < d; ++l) CHECK(v.at(l).value.is_rational());
    }
}

TEST_CASE("Euler and Dehn-Sommerville on exact f-vectors, d <= 10") {
    for (int d = 1; d <= 10; ++d) {
        CHECK(check_fvector_relations("zerocell", zero_cell_fvector(d)).passed);
        CHECK(check_fvector_relations("voronoi", typical_voronoi_fvector(d)).passed);
        for (int a = 1; a <= 3; ++a) CHECK(check_fvector_relations("poisson", poisson_polytope_fvector(d, a)).passed);
    }
}

TEST_CASE("beta polytopes") {
    CHECK(beta_polytope_fvector(4, 2, 0).at(0).value == PiNumber(4) - PiNumber(rat(35, 12), -4));
    for (int d = 1; d <= 5; ++d)
        for (long tb : {-1L, 0L, 1L, 4L}) {
            auto f = beta_polytope_fvector(d + 1, d, tb);
            for (int k = 1; k <= d; ++k) CHECK(f.at(k - 1).value == PiNumber(Rational(binomial(d + 1, k))));
            auto g = betaprime_polytope_fvector(d + 1, d, d + 1 + std::abs(tb));
            for (int k = 1; k <= d; ++k) CHECK(g.at(k - 1).value == PiNumber(Rational(binomial(d + 1, k))));
        }
    for (int d = 2; d <= 5; ++d)
        for (int n = d + 1; n <= d + 3; ++n) {
            for (long tb : {-2L, 0L, 3L}) {
                auto f = beta_polytope_fvector(n, d, tb);
                CHECK(f.at(d - 2).value == f.at(d - 1).value * rat(d, 2));
                CHECK(check_fvector_relations("beta", f).passed);
                for (int k = 1; k <= d; ++k) CHECK(support_within(f.at(k - 1).value, beta_polytope_form(Family::beta, n, d, k, tb)));
            }
            auto g = betaprime_polytope_fvector(n, d, d + 2);
            CHECK(g.at(d - 2).value == g.at(d - 1).value * rat(d, 2));
            CHECK(check_fvector_relations("betaprime", g).passed);
        }
    // half-sphere model
    auto h = betaprime_polytope_fvector(4, 2, 3);
    CHECK(h.at(0).value == PiNumber(6) - PiNumber(24, -4));
    CHECK(h.at(0).numeric == doctest::Approx(3.568292).epsilon(1e-6));
    auto num = beta_polytope_numeric(4, 2, 0.0);
    CHECK(num.at(0).numeric == doctest::Approx(4 - 35 / (12 * M_PI * M_PI)).epsilon(1e-10));
}

TEST_CASE("Reitzner constants") {
    for (int d = 2; d <= 8; ++d) CHECK(*reitzner_sphere(d, 0).exact == PiNumber(1));
    CHECK(*reitzner_sphere(2, 1).exact == *reitzner_sphere(2, 0).exact);
    for (int d = 3; d <= 8; ++d) {
        double a = reitzner_ball(d, d - 2).value, b = reitzner_ball(d, d - 1).value;
        CHECK(std::abs(a - d * b / 2) <= 1e-10 * a);
        CHECK(*reitzner_sphere(d, d - 2).exact == *reitzner_sphere(d, d - 1).exact * rat(d, 2));
    }
    for (int d = 2; d <= 7; ++d)
        for (int k = 0; k < d; ++k) CHECK(reitzner_ball(d, k).value > 0);
    // Renyi-Sulanke for the disk, mpmath: 3.38322896579692088999...
    CHECK(reitzner_ball(2, 0).decimal.substr(0, 18) == "3.3832289657969208");
    CHECK(*reitzner_sphere(4, 2).exact == pi_sq * rat(48, 35));
    for (int d = 3; d <= 8; ++d)
        for (int k = 0; k < d; ++k)
            if (reitzner_residue_applies(d, k)) {
                CHECK(reitzner_sphere_residue(d, k) == *reitzner_sphere(d, k).exact);
                CHECK(reitzner_ball_residue(d, k) == doctest::Approx(reitzner_ball(d, k).value).epsilon(1e-12));
            }
}

TEST_CASE("Dehn-Sommerville checker rejects a broken vector") {
    // an octahedron passes, a perturbed one does not
    CHECK(dehn_sommerville_holds({1, 6, 12, 8}));
    CHECK_FALSE(dehn_sommerville_holds({1, 6, 12, 9}));
}
