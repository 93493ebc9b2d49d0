#pragma once

#include "angleworks/polytope.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace aw {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    int max_n = 8;
    std::uint64_t seed = 42;
    long trials = 20000;
};

struct GridCase {
    Family family;
    int n;
    int k;
    long twice_beta;
};

// Fixed 30-case grid for numeric against exact angles, n <= 7.
std::vector<GridCase> numeric_grid();

// Suites: relations, crosscheck, montecarlo.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);
std::vector<CheckResult> relations_suite(const VerifyOptions& opt);
std::vector<CheckResult> crosscheck_suite(const VerifyOptions& opt);
std::vector<CheckResult> montecarlo_suite(const VerifyOptions& opt);

// Pieces shared with the acceptance tests.
CheckResult check_poincare(Family family, int n, long twice_beta);
CheckResult check_inversion(Family family, int n, int alpha);
CheckResult check_kronecker(int n, int alpha);
// Signed relation only, rows with alpha k even and alpha k > 1.
CheckResult check_kronecker_tilde(int n, int alpha);
// Euler, plus Dehn-Sommerville on the simplicial side (the dual for zero
// cells and Voronoi cells).
CheckResult check_fvector_relations(const std::string& label, const FVector& f);

// True when every pi exponent of x (as stored, halves) is in allowed.
bool support_within(const PiNumber& x, const std::vector<int>& allowed);
// Arithmetic forms of J, J~, the Voronoi entries and beta polytope entries.
std::vector<int> bJ_form(int n, int k, long twice_beta);
std::vector<int> bJtilde_form(int n, int k, long twice_beta);
std::vector<int> voronoi_form(int d, int l);
std::vector<int> beta_polytope_form(Family family, int n, int d, int k, long twice_beta);

}  // namespace aw
