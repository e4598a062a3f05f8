// train.cpp - delta-train construction and its exact Fourier transform
#include "dtrain/train.hpp"

#include <cmath>

namespace dtrain {

DeltaTrain build_train(const SwitchingSpec& spec, int n) {
    return build_train_window(spec, n, 0.0, 1.0);
}

DeltaTrain build_train_window(const SwitchingSpec& spec, int n, double t_start,
                              double duration) {
    if (n < 1) {
        throw DomainError("build_train_window: kick count must be at least 1");
    }
    if (!(duration > 0.0) || !std::isfinite(t_start) || !std::isfinite(duration)) {
        throw DomainError("build_train_window: requires finite t_start and duration > 0");
    }
    spec.validate();
    DeltaTrain train;
    train.taus.reserve(n);
    train.etas.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double fraction = (j + 0.5) / n;
        train.taus.push_back(t_start + fraction * duration);
        train.etas.push_back(switching_value(spec, fraction) * duration / n);
    }
    return train;
}

std::complex<double> train_ft(const DeltaTrain& train, double k) {
    const std::size_t n = train.taus.size();
    if (n != train.etas.size()) {
        throw DomainError("train_ft: taus and etas lengths differ");
    }
    if (n == 0) {
        return {0.0, 0.0};
    }
    if (n == 1) {
        const double phase = -k * train.taus[0];
        return train.etas[0] * std::complex<double>(std::cos(phase), std::sin(phase));
    }

    // uniformly spaced kicks collapse to a single Horner recursion in exp(-i k h)
    const double h = train.taus[1] - train.taus[0];
    const double span = std::max(std::abs(train.taus.front()), std::abs(train.taus.back()));
    bool uniform = true;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        if (std::abs(train.taus[j + 1] - train.taus[j] - h) > 1e-14 * std::max(span, 1.0)) {
            uniform = false;
            break;
        }
    }
    if (uniform) {
        const std::complex<double> step(std::cos(k * h), -std::sin(k * h));
        std::complex<double> acc = train.etas[n - 1];
        for (std::size_t j = n - 1; j-- > 0;) {
            acc = acc * step + train.etas[j];
        }
        const double phase = -k * train.taus[0];
        return acc * std::complex<double>(std::cos(phase), std::sin(phase));
    }

    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        const double phase = -k * train.taus[j];
        acc += train.etas[j] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc;
}

} // namespace dtrain
