#pragma once

#include <cstdint>
#include <optional>

#include "enssum/ensemble.hpp"
#include "enssum/measurement.hpp"
#include "enssum/oracle.hpp"
#include "enssum/registers.hpp"

namespace enssum {

// How a noisy run picks its trial count.
struct TrialsChoice {
    enum class Mode { paper, parametric, fixed };

    Mode mode = Mode::parametric;
    std::uint64_t count = 1;  // used by Mode::fixed

    static TrialsChoice paper() { return {Mode::paper, 0}; }
    static TrialsChoice parametric() { return {Mode::parametric, 0}; }
    static TrialsChoice fixed(std::uint64_t n) { return {Mode::fixed, n}; }

    std::uint64_t resolve(std::uint64_t n_samples, double snr) const {
        switch (mode) {
            case Mode::paper: return required_trials(n_samples, snr, TrialsMode::paper);
            case Mode::parametric: return required_trials(n_samples, snr, TrialsMode::parametric);
            case Mode::fixed:
                if (count < 1) throw ParameterError("trial count must be at least 1");
                return count;
        }
        throw ParameterError("unknown trials mode");
    }
};

struct RunSettings {
    int output_spins = 16;
    double alpha = 0.0;         // 0 = uniform initialization
    std::optional<double> snr;  // absent = ideal readout
    TrialsChoice trials = TrialsChoice::parametric();
    std::uint64_t seed = 0;
};

// One full initialize -> oracle -> measure pass plus the bookkeeping reports
// need. sum_estimate inside the measurement is scaled by the padded sample
// count; mean_true() divides by the unpadded table length instead.
//
// The error budget is on the sum estimate: the encoding term bounds the floor
// truncation (< delta per real sample), the noise term propagates a one-sigma
// per-spin deviation through the binary-weighted mean, and the thermal term is
// the worst-case initialization bias.
struct RunOutcome {
    RegisterSpec spec;
    std::uint64_t true_size = 0;
    MeasurementResult measurement;
    QueryLedger ledger;
    double encoding_bound = 0.0;
    double noise_bound = 0.0;
    double thermal_bound = 0.0;

    double mean_true() const {
        return measurement.sum_estimate / static_cast<double>(true_size);
    }
};

inline RunOutcome run_summing(SampledFunction& f, const RunSettings& settings) {
    const RegisterSpec spec(f.input_spins(), settings.output_spins);
    const std::uint64_t n_samples = spec.sample_count();

    const DiagonalEnsemble initial =
        settings.alpha == 0.0 ? init_uniform(spec) : init_thermal(spec, settings.alpha);
    DiagonalEnsemble finale = apply_oracle(initial, f);

    RunOutcome out{spec, f.true_size(), {}, QueryLedger{1, 1}, 0.0, 0.0, 0.0};
    if (settings.snr) {
        const std::uint64_t trials = settings.trials.resolve(n_samples, *settings.snr);
        const NoiseModel noise{*settings.snr, settings.seed, trials};
        out.measurement = measure_noisy(finale, noise);
        out.ledger.trials = trials;
        out.noise_bound =
            noise.sigma() * (1.0 - spec.precision()) * static_cast<double>(n_samples);
    } else {
        out.measurement = measure_ideal(finale);
    }
    out.encoding_bound = static_cast<double>(f.true_size()) * spec.precision();
    if (settings.alpha > 0.0)
        out.thermal_bound = thermal_error_bound(spec.input_spins, settings.alpha) *
                            static_cast<double>(n_samples);
    return out;
}

}  // namespace enssum
