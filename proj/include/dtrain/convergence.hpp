// convergence.hpp - sweeps over kick counts, power-law rate fits and report emission
#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "dtrain/errors.hpp"

namespace dtrain {

// one observable evaluated over a grid of kick counts against a reference value
struct ConvergenceReport {
    std::string observable_id;
    std::vector<int> n_values;                 // strictly increasing kick counts
    std::vector<std::complex<double>> values;  // train observable at each count
    std::complex<double> exact{0.0};           // reference value
    std::vector<double> rel_errors;            // |value - exact| / |exact|
    double fitted_slope{0.0};                  // log-log slope over the default window
    double fit_residual{0.0};                  // rms residual of that fit
    int fit_lo{0};                             // fit window lower count
    int fit_hi{0};                             // fit window upper count
    bool fit_valid{false};                     // false when the window holds under 4 points
};

struct SlopeFit {
    double slope{0.0};
    double residual{0.0};
};

using TrainObservable = std::function<std::complex<double>(int n)>;

// evaluate the observable on the grid and fit the default window [n_max / 10, n_max]
ConvergenceReport sweep(const std::string& observable_id, const TrainObservable& observable,
                        const std::vector<int>& n_values, std::complex<double> exact,
                        double exact_tol);

// least-squares slope of log rel_error against log n over counts in [n_lo, n_hi]
SlopeFit fit_slope(const ConvergenceReport& report, int n_lo, int n_hi);

// write "N,value_re,value_im,exact_re,exact_im,rel_error" rows with 12 significant digits
void emit_report_csv(const ConvergenceReport& report, const std::string& path);

// geometric grid of at most k distinct integer counts from lo to hi inclusive
std::vector<int> geometric_counts(int lo, int hi, int k);

} // namespace dtrain
