// riemann_stieltjes.hpp - multidimensional Riemann-Stieltjes sums and the lemmas behind
// replacing a continuous integrator by a step function
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "dtrain/errors.hpp"

namespace dtrain::rs {

inline constexpr long long cell_budget = 1000000;  // largest cell count any routine accepts

// axis-aligned box [lo_1, hi_1] x ... x [lo_n, hi_n], 1 <= n <= 4
struct Rect {
    std::vector<double> lo;
    std::vector<double> hi;

    int dim() const { return static_cast<int>(lo.size()); }
    void validate() const;
};

using Fn = std::function<std::complex<double>(const std::vector<double>&)>;

// alternating corner sum of g over the box, the n-dimensional increment
std::complex<double> delta_n(const Fn& g, const Rect& rect);

// per-axis break points with one tag inside every cell
struct TaggedPartition {
    std::vector<std::vector<double>> breaks;  // breaks[i] strictly increasing
    std::vector<std::vector<double>> tags;    // tags[i][j] in [breaks[i][j], breaks[i][j+1]]

    void validate() const;
    long long cell_count() const;

    // m uniform cells per axis, tags at cell midpoints
    static TaggedPartition uniform_midpoint(const Rect& rect, int m);
};

// sum over cells of f(tag) times the increment of g on the cell
std::complex<double> rs_sum(const Fn& f, const Fn& g, const TaggedPartition& partition);

// step-function integrator error term: prod_i count(z_i) - N^k prod_i z_i with
// count(t) = #{ j in 1..N : (j - 1/2) / N <= t }
double v_n(int k, int n_kicks, const std::vector<double>& z);

// Vitali variation estimate from nested dyadic partitions, levels doublings deep
double variation_estimate(const Fn& g, const Rect& rect, int levels);

// discrepancy of the integration-by-parts identity at the given dyadic mesh level
struct Lemma1Result {
    std::complex<double> lhs{0.0};  // sum of g(tag) against the increments of f
    std::complex<double> rhs{0.0};  // sum of f(tag) against the increments of g
    double discrepancy{0.0};        // |lhs - (-1)^n rhs|
    bool pass{false};
};

Lemma1Result verify_lemma1(const Fn& f, const Fn& g, const Rect& rect, int mesh_levels,
                           double tol);

} // namespace dtrain::rs
