// bump_ft.cpp - memoised numeric Fourier transform of the unit bump
#include "dtrain/bump_ft.hpp"

#include <cmath>
#include <cstdio>
#include <mutex>
#include <string>
#include <unordered_map>

#include "dtrain/errors.hpp"
#include "dtrain/quadrature.hpp"

namespace dtrain::quad {

namespace {

// cache key: |kappa| rounded to 12 significant digits, tol to 3
std::string cache_key(double kappa, double tol) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.11e|%.2e", kappa, tol);
    return buf;
}

} // namespace

double bump_value(double t) {
    if (t <= 0.0 || t >= 1.0) {
        return 0.0;
    }
    return std::exp(-1.0 / (4.0 * t * (1.0 - t)));
}

std::complex<double> bump_ft(double k, double tol) {
    if (!(tol > 0.0) || !std::isfinite(k)) {
        throw DomainError("bump_ft: requires finite k and tol > 0");
    }
    const double ka = std::abs(k);

    static std::mutex cache_mutex;
    static std::unordered_map<std::string, std::complex<double>> cache;
    const std::string key = cache_key(ka, tol);
    {
        const std::lock_guard<std::mutex> lock(cache_mutex);
        const auto hit = cache.find(key);
        if (hit != cache.end()) {
            return k < 0.0 ? std::conj(hit->second) : hit->second;
        }
    }

    const Integrand f = [ka](double t) {
        const double amp = bump_value(t);
        return std::complex<double>(amp * std::cos(ka * t), -amp * std::sin(ka * t));
    };
    const QuadResult result = integrate_finite(f, 0.0, 1.0, tol, 4000, std::max(ka, 8.0));

    {
        const std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(key, result.value);
    }
    return k < 0.0 ? std::conj(result.value) : result.value;
}

} // namespace dtrain::quad
