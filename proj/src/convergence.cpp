// convergence.cpp - kick-count sweeps, log-log rate fits and CSV emission
#include "dtrain/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace dtrain {

ConvergenceReport sweep(const std::string& observable_id, const TrainObservable& observable,
                        const std::vector<int>& n_values, std::complex<double> exact,
                        double exact_tol) {
    if (n_values.empty()) {
        throw DomainError("sweep: n_values must be nonempty");
    }
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] < 1) {
            throw DomainError("sweep: kick counts must be positive");
        }
        if (i > 0 && n_values[i] <= n_values[i - 1]) {
            throw DomainError("sweep: kick counts must be strictly increasing");
        }
    }
    const double exact_mag = std::abs(exact);
    if (!(exact_mag > 0.0)) {
        throw DomainError("sweep: reference value must be nonzero");
    }
    if (!(exact_tol >= 0.0)) {
        throw DomainError("sweep: exact_tol must be nonnegative");
    }

    ConvergenceReport report;
    report.observable_id = observable_id;
    report.n_values = n_values;
    report.exact = exact;
    report.values.reserve(n_values.size());
    report.rel_errors.reserve(n_values.size());
    double min_abs_err = -1.0;
    for (const int n : n_values) {
        const std::complex<double> value = observable(n);
        report.values.push_back(value);
        const double abs_err = std::abs(value - exact);
        report.rel_errors.push_back(abs_err / exact_mag);
        if (min_abs_err < 0.0 || abs_err < min_abs_err) {
            min_abs_err = abs_err;
        }
    }
    if (exact_tol > min_abs_err / 10.0) {
        throw ReferenceTooCoarse("sweep: reference tolerance is not an order of magnitude below the smallest train error");
    }

    const int n_max = n_values.back();
    report.fit_lo = std::max(n_values.front(), (n_max + 9) / 10);
    report.fit_hi = n_max;
    try {
        const SlopeFit fit = fit_slope(report, report.fit_lo, report.fit_hi);
        report.fitted_slope = fit.slope;
        report.fit_residual = fit.residual;
        report.fit_valid = true;
    } catch (const InsufficientPoints&) {
        report.fit_valid = false;
    }
    return report;
}

SlopeFit fit_slope(const ConvergenceReport& report, int n_lo, int n_hi) {
    if (report.n_values.size() != report.rel_errors.size()) {
        throw DomainError("fit_slope: report counts and errors disagree in length");
    }
    if (n_lo > n_hi) {
        throw DomainError("fit_slope: window bounds out of order");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < report.n_values.size(); ++i) {
        const int n = report.n_values[i];
        const double rel = report.rel_errors[i];
        if (n < n_lo || n > n_hi || !(rel > 0.0)) {
            continue;
        }
        xs.push_back(std::log(double(n)));
        ys.push_back(std::log(rel));
    }
    if (xs.size() < 4) {
        throw InsufficientPoints("fit_slope: fewer than four usable points in the window");
    }
    double x_mean = 0.0;
    double y_mean = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= double(xs.size());
    y_mean /= double(xs.size());
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    }
    if (!(sxx > 0.0)) {
        throw InsufficientPoints("fit_slope: degenerate abscissa spread");
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    const double intercept = y_mean - fit.slope * x_mean;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double resid = ys[i] - (intercept + fit.slope * xs[i]);
        ss += resid * resid;
    }
    fit.residual = std::sqrt(ss / double(xs.size()));
    return fit;
}

void emit_report_csv(const ConvergenceReport& report, const std::string& path) {
    if (report.n_values.size() != report.values.size() ||
        report.n_values.size() != report.rel_errors.size()) {
        throw DomainError("emit_report_csv: report columns disagree in length");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("emit_report_csv: cannot open " + path);
    }
    out << "N,value_re,value_im,exact_re,exact_im,rel_error\n";
    char row[256];
    for (std::size_t i = 0; i < report.n_values.size(); ++i) {
        std::snprintf(row, sizeof(row), "%d,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                      report.n_values[i], report.values[i].real(), report.values[i].imag(),
                      report.exact.real(), report.exact.imag(), report.rel_errors[i]);
        out << row;
    }
    out.flush();
    if (!out) {
        throw IoError("emit_report_csv: write failed for " + path);
    }
}

std::vector<int> geometric_counts(int lo, int hi, int k) {
    if (lo < 1 || hi < lo || k < 1) {
        throw DomainError("geometric_counts: requires 1 <= lo <= hi and k >= 1");
    }
    std::vector<int> counts;
    counts.push_back(lo);
    if (hi > lo) {
        if (k < 2) {
            throw DomainError("geometric_counts: k must be at least 2 when hi > lo");
        }
        const double ratio = std::log(double(hi) / double(lo)) / double(k - 1);
        for (int i = 1; i < k - 1; ++i) {
            const int n = int(std::lround(lo * std::exp(ratio * i)));
            if (n > counts.back() && n < hi) {
                counts.push_back(n);
            }
        }
        counts.push_back(hi);
    }
    return counts;
}

} // namespace dtrain
