#include "angleworks/angles.hpp"
#include "angleworks/montecarlo.hpp"
#include "angleworks/polytope.hpp"

#include "support.hpp"

#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <cstdlib>

using namespace aw;

TEST_CASE("generator is deterministic") {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        auto x = a.next();
        CHECK(x == b.next());
        CHECK(x != c.next());
    }
}

TEST_CASE("beta points") {
    Rng rng(1);
    for (int i = 0; i < 2000; ++i) {
        Point p = sample_beta_point(4, -1.0, rng);
        double r2 = 0;
        for (double x : p) r2 += x * x;
        CHECK(std::abs(std::sqrt(r2) - 1) < 1e-14);
    }
    auto r2_mean = run_trials(100000, 9, [](Rng& g) {
        Point p = sample_beta_point(2, 0.0, g);
        return p[0] * p[0] + p[1] * p[1];
    });
    CHECK(std::abs(r2_mean.z_score(0.5)) < 4);
    auto x_mean = run_trials(100000, 10, [](Rng& g) { return sample_beta_point(1, 0.0, g)[0]; });
    CHECK(std::abs(x_mean.z_score(0.0)) < 4);
}

TEST_CASE("beta' points") {
    auto m = run_trials(100000, 11, [](Rng& g) {
        Point p = sample_betaprime_point(2, 3.0, g);
        double r2 = p[0] * p[0] + p[1] * p[1];
        return r2 / (1 + r2);
    });
    CHECK(std::abs(m.z_score(1.0 / 3)) < 4);
    auto x = run_trials(100000, 12, [](Rng& g) { return sample_betaprime_point(2, 3.0, g)[1]; });
    CHECK(std::abs(x.z_score(0.0)) < 4);
    Rng rng(2);
    std::vector<double> r;
    for (int i = 0; i < 10001; ++i) r.push_back(std::abs(sample_betaprime_point(1, 1.0, rng)[0]));
    std::nth_element(r.begin(), r.begin() + 5000, r.end());
    CHECK(std::isfinite(r[5000]));
    CHECK_THROWS(sample_betaprime_point(2, 1.0, rng));
}

TEST_CASE("radial laws pass Kolmogorov-Smirnov") {
    Rng rng(5);
    std::vector<double> s;
    for (int i = 0; i < 100000; ++i) {
        Point p = sample_beta_point(3, 1.0, rng);
        s.push_back(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    }
    double d = ks_statistic(s, [](double x) { return x <= 0 ? 0.0 : x >= 1 ? 1.0 : boost::math::ibeta(1.5, 2.0, x); });
    CHECK(d < ks_critical_1pct(100000));
    // the statistic notices a wrong law
    double wrong = ks_statistic(s, [](double x) { return x <= 0 ? 0.0 : x >= 1 ? 1.0 : x; });
    CHECK(wrong > ks_critical_1pct(100000));
}

TEST_CASE("estimates do not depend on the thread count") {
    auto run = [] { return mc_angle_sum(Family::beta, 4, 1, -1.0, 3000, 4, 77); };
    setenv("ANGLEWORKS_THREADS", "1", 1);
    auto one = run();
    setenv("ANGLEWORKS_THREADS", "4", 1);
    auto four = run();
    unsetenv("ANGLEWORKS_THREADS");
    CHECK(one.mean == four.mean);
    CHECK(one.stderr_ == four.stderr_);
}

TEST_CASE("angle sums") {
    auto tri = mc_angle_sum(Family::beta, 3, 1, 0.0, 20000, 4, 3);
    CHECK(std::abs(tri.z_score(0.5)) < 4);
    auto j41 = mc_angle_sum(Family::beta, 4, 1, -1.0, 20000, 4, 4);
    CHECK(std::abs(j41.z_score(0.125)) < 4);
    auto full = mc_angle_sum(Family::beta, 4, 4, 0.5, 1000, 4, 5);
    CHECK(full.mean == 1.0);
    auto tilde = mc_angle_sum(Family::betaprime, 4, 2, 2.5, 20000, 4, 6);
    CHECK(std::abs(tilde.z_score(1.2)) < 4);
    CHECK_THROWS(mc_angle_sum(Family::beta, 8, 1, 0.0, 10, 1, 1));
}

TEST_CASE("planar hulls") {
    CHECK(mc_beta_hull_2d(3, 0.0, 1000, 1).mean == 3.0);
    auto s = mc_beta_hull_2d(4, 0.0, 100000, 2);
    CHECK(std::abs(s.z_score(4 - 35 / (12 * M_PI * M_PI))) < 4);
    auto h = mc_beta_hull_2d(4, 1.5, 100000, 3, Family::betaprime);
    CHECK(std::abs(h.z_score(betaprime_polytope_fvector(4, 2, 3).at(0).numeric)) < 4);
    auto hull = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}});
    CHECK(hull.size() == 4);
}

TEST_CASE("planar Voronoi cell") {
    auto v = mc_voronoi_2d(5.0, 10000, 8);
    CHECK(std::abs(v.z_score(6.0)) < 4);
    auto w = mc_voronoi_2d(2.5, 10000, 9, 4.0);
    CHECK(std::abs(v.mean - w.mean) < 4 * std::hypot(v.stderr_, w.stderr_));
    // square lattice neighbours give a square
    std::vector<std::pair<double, double>> pts = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
    CHECK(voronoi_cell_2d(pts, 4.0).size() == 4);
}

TEST_CASE("reproducible from seed and trials") {
    auto a = mc_voronoi_2d(5.0, 2000, 123);
    auto b = mc_voronoi_2d(5.0, 2000, 123);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_ == b.stderr_);
    auto c = mc_beta_hull_2d(5, 1.0, 3000, 9);
    auto d = mc_beta_hull_2d(5, 1.0, 3000, 9);
    CHECK(c.mean == d.mean);
}
