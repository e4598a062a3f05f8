// train.hpp - delta-coupling trains sampled from a switching profile
#pragma once

#include <complex>
#include <vector>

#include "dtrain/model.hpp"

namespace dtrain {

// instants and weights of a train of delta couplings
struct DeltaTrain {
    std::vector<double> taus;  // kick instants, strictly increasing
    std::vector<double> etas;  // kick weights
};

// n kicks at the midpoints of [0, 1] split into n equal slots, weights xi(tau) / n
DeltaTrain build_train(const SwitchingSpec& spec, int n);

// same construction on the window [t_start, t_start + duration]
DeltaTrain build_train_window(const SwitchingSpec& spec, int n, double t_start, double duration);

// sum_j eta_j exp(-i k tau_j); uses a Horner recursion when the spacing is uniform
std::complex<double> train_ft(const DeltaTrain& train, double k);

} // namespace dtrain
