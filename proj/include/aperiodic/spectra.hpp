#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aperiodic/operators.hpp"
#include "aperiodic/rational.hpp"

namespace aperiodic {

struct SpectrumEstimate {
    int level = 0;
    std::vector<double> eigenvalues;  // ascending
    double hull_min = 0, hull_max = 0;  // Gershgorin interval

    double hull_width() const { return hull_max - hull_min; }
};

std::pair<double, double> gershgorin_hull(const JacobiMatrix& m);

// Number of eigenvalues strictly below x: negative pivots of the shifted
// LDL^T recurrence (with a pivot floor against division blowup).
int sturm_count_below(const JacobiMatrix& m, double x);

// All eigenvalues by Sturm-count bisection, each bracketed to width
// <= tol * (Gershgorin hull width). Zero off-diagonal entries split the
// matrix into independent blocks; their eigenvalues are concatenated and
// sorted. workers = 0 takes the hardware thread count; any worker count
// produces bit-identical results.
std::vector<double> eigenvalues(const JacobiMatrix& m, double tol = 1e-12, int workers = 0);

// Eigenvalues of the level-n operators for n = 1..n_max. Parameters must lie
// in P (every off-diagonal weight nonzero).
std::vector<SpectrumEstimate> spectrum_tower(int n_max, const WeightParams& p,
                                             double tol = 1e-12, int workers = 0);

// Lebesgue measure of the union of intervals [e - eps, e + eps].
double measure_estimate(const std::vector<double>& sorted_eigs, double eps);

// Normalized counting function #{e <= E} / N as an exact fraction.
Rat64 ids(const std::vector<double>& sorted_eigs, double E);

// sup over E of the gap between two normalized counting functions.
double ids_sup_distance(const std::vector<double>& a, const std::vector<double>& b);

struct GordonWitness {
    Letter s = Letter::x;  // x, y or z
    int m = 0;             // witness rank; period exponent q = 3m + k(s)
    std::int64_t scale = 0;  // block length |w| = 2^(q+1)
    Word block;              // w = p(q) followed by s
    Word prefix;             // v = p(q)
};

// Witnesses m = 0..m_max for the letter s. Each is literally verified against
// the two-sided special word: the window around the origin reads  w w | w v.
std::vector<GordonWitness> gordon_witnesses(Letter s, int m_max);

struct GordonGrowthReport {
    double energy = 0;
    double log2_norm_fwd_L = 0;   // log2 ||u~(L)||, seed normalized to 1
    double log2_norm_fwd_2L = 0;  // log2 ||u~(2L)||
    double log2_norm_bwd_L = 0;   // log2 ||u~(-L)||
    double log2_ratio = 0;        // log2 of the largest of the three
    bool bound_holds = false;     // largest >= 1/4
    double det_error = 0;         // worst |det - 1| over the three step products
};

// Three-block growth bound: transfer the solution seeded by the unit
// direction of (seed_c, seed_s) across the witness window; norms carry an
// explicit power-of-two exponent so hyperbolic energies cannot overflow, and
// product determinants are accumulated factor by factor.
GordonGrowthReport gordon_growth_check(const GordonWitness& witness, double E,
                                       const WeightParams& p, double seed_c = 1.0,
                                       double seed_s = 0.0);

// Static SVG scatter of a tower: x = eigenvalue, y = level.
std::string tower_svg(const std::vector<SpectrumEstimate>& tower);

}  // namespace aperiodic
