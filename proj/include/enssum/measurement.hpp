#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "enssum/ensemble.hpp"
#include "enssum/errors.hpp"
#include "enssum/rng.hpp"

namespace enssum {

// Readout noise: zero-mean Gaussian per normalized spin signal with scale
// (1/snr)/sqrt(trials). Averaging over trials improves the effective
// signal-to-noise ratio by sqrt(trials); a single effective draw stands in
// for simulating the trials individually.
struct NoiseModel {
    double snr = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;

    void validate() const {
        if (!(snr > 0.0)) throw ParameterError("snr must be positive");
        if (trials < 1) throw ParameterError("trial count must be at least 1");
    }

    double sigma() const { return (1.0 / snr) / std::sqrt(static_cast<double>(trials)); }
};

// Result of the analog register readout.
struct MeasurementResult {
    std::vector<double> spin_signals;  // normalized per-spin signals, spin 1 first
    double register_mean = 0.0;        // 2^-k * sum_j 2^(j-1) * signal_j
    double sum_estimate = 0.0;         // register_mean * padded sample count
    std::uint64_t trials = 1;
    bool noiseless = true;
};

// Binary-weighted combination of the normalized spin signals, accumulated from
// spin 1 upward. Kept separate so results can be re-derived from the stored
// signals bit-for-bit.
inline double register_mean_from_signals(const std::vector<double>& signals) {
    double acc = 0.0;
    for (std::size_t j = 0; j < signals.size(); ++j)
        acc += std::ldexp(signals[j], static_cast<int>(j));
    return std::ldexp(acc, -static_cast<int>(signals.size()));
}

// Ideal readout: spin j's signal is the total weight of subensembles with spin
// j set. Calibration against the maximum signal (every subensemble set) makes
// that a fraction in [0,1] directly.
inline MeasurementResult measure_ideal(const DiagonalEnsemble& e) {
    const std::uint64_t n_samples = e.spec.sample_count();
    if (e.weights.size() != n_samples || e.codes.size() != n_samples)
        throw ValidationError("ensemble must hold exactly one entry per input index");
    const int k = e.spec.output_spins;
    std::vector<double> signals(static_cast<std::size_t>(k), 0.0);
    for (std::uint64_t idx = 0; idx < n_samples; ++idx) {
        const std::uint64_t code = e.codes[idx];
        if (code == 0) continue;
        for (int j = 0; j < k; ++j)
            if ((code >> j) & 1u) signals[static_cast<std::size_t>(j)] += e.weights[idx];
    }
    MeasurementResult r;
    r.spin_signals = std::move(signals);
    r.register_mean = register_mean_from_signals(r.spin_signals);
    r.sum_estimate = r.register_mean * static_cast<double>(n_samples);
    r.trials = 1;
    r.noiseless = true;
    return r;
}

// Noisy readout: ideal signals plus one Gaussian draw per spin, clamped back
// into [0,1] (clamping is a small bias source at extreme signals). Each spin
// uses its own stream derived from (seed, spin index), so results are
// reproducible given (seed, trials, snr) and independent across spins.
inline MeasurementResult measure_noisy(const DiagonalEnsemble& e, const NoiseModel& noise) {
    noise.validate();
    MeasurementResult r = measure_ideal(e);
    const double sigma = noise.sigma();
    for (int j = 1; j <= e.spec.output_spins; ++j) {
        std::mt19937_64 eng(stream_seed(noise.seed, static_cast<std::uint64_t>(j)));
        const double jitter = sigma * standard_normal(eng);
        auto& signal = r.spin_signals[static_cast<std::size_t>(j - 1)];
        signal = std::clamp(signal + jitter, 0.0, 1.0);
    }
    r.register_mean = register_mean_from_signals(r.spin_signals);
    r.sum_estimate = r.register_mean * static_cast<double>(e.spec.sample_count());
    r.trials = noise.trials;
    r.noiseless = false;
    return r;
}

enum class TrialsMode { paper, parametric };

// Experimental trials needed before per-spin signal differences of 1/N become
// resolvable. paper mode is the flat N^2 repetition rule. parametric mode is
// the smallest count whose averaged noise scale (1/S)/sqrt(N_e) drops to the
// half-step 1/(2N): ceil((2N/S)^2), clamped below at one.
inline std::uint64_t required_trials(std::uint64_t n_samples, double snr, TrialsMode mode) {
    if (n_samples < 1) throw ParameterError("sample count must be at least 1");
    if (!(snr > 0.0)) throw ParameterError("snr must be positive");
    if (mode == TrialsMode::paper) {
        if (n_samples > (std::uint64_t{1} << 32))
            throw CapacityError("trial count N^2 exceeds the 64-bit range");
        return n_samples * n_samples;
    }
    const double t = 2.0 * static_cast<double>(n_samples) / snr;
    const double q = std::ceil(t * t);
    if (!(q < 1.8e19)) throw CapacityError("required trial count exceeds the 64-bit range");
    const auto trials = static_cast<std::uint64_t>(q);
    return trials < 1 ? 1 : trials;
}

// Worst-case bias of the register mean when a run starts from a thermal state
// instead of the uniform mixture: n*alpha/2.
inline double thermal_error_bound(int input_spins, double alpha) {
    if (input_spins < 1) throw ParameterError("input spin count must be at least 1");
    if (!(alpha >= 0.0)) throw ParameterError("thermal factor alpha must be non-negative");
    return 0.5 * static_cast<double>(input_spins) * alpha;
}

}  // namespace enssum
