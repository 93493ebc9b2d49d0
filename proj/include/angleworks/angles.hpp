#pragma once

#include "angleworks/exact.hpp"
#include "angleworks/quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aw {

enum class Provenance { closed, residue, fill, tan_algebra, numeric, sum };
std::string to_string(Provenance p);

struct AngleEntry {
    bool exact = true;
    PiNumber value;       // when exact
    double numeric = 0;   // always filled
    double abs_error = 0;
    Provenance provenance = Provenance::closed;
};

struct AngleTable {
    Family family = Family::beta;
    int n = 0;
    std::optional<long> twice_beta;  // set for exact tables
    double beta = 0;
    std::vector<AngleEntry> entries;  // entries[k-1]
    const AngleEntry& at(int k) const { return entries.at(static_cast<size_t>(k - 1)); }
};

struct ResidueSpec {
    int a;  // inner sine power
    int p;  // outer power
    int q;  // denominator sine power
};

// Res_{x=0} (int_0^x sin^a)^p / sin^q.
Rational residue_rational(const ResidueSpec& spec);

PiNumber bJ_residue(int n, int k, int alpha);
PiNumber bJtilde_residue(int n, int k, int alpha);
// The ugly bivariate formulas: alpha and n-k even (beta), alpha k odd (beta').
PiNumber bJ_ugly(int n, int k, int alpha);
PiNumber bJtilde_ugly(int n, int k, int alpha);

// z[0..n]; missing entries are filled from the other parity class of n-k.
std::vector<PiNumber> poincare_fill(const std::vector<std::optional<PiNumber>>& z);

AngleTable bJ_table(int n, long twice_beta);
AngleTable bJtilde_table(int n, long twice_beta);
PiNumber bJ_exact(int n, int k, long twice_beta);
PiNumber bJtilde_exact(int n, int k, long twice_beta);

QuadResult bJ_numeric(int n, int k, double beta);
QuadResult bJtilde_numeric(int n, int k, double beta);
AngleTable numeric_table(Family family, int n, double beta);

// a[nu,kappa] with nu = nu_num/alpha, kappa = kappa_num/alpha.
PiNumber lA_residue(long nu_num, long kappa_num, int alpha);
PiNumber lA_tilde_residue(long nu_num, long kappa_num, int alpha);

Rational rm_value(int m, int n);
Rational p_alpha_k_value(int alpha, int k, int n);

}  // namespace aw
