#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "enssum/errors.hpp"
#include "enssum/oracle.hpp"
#include "enssum/pipeline.hpp"
#include "enssum/rng.hpp"

namespace enssum {

// Integrand g: [a,b] -> [0,1]. Callers pre-scale their function into [0,1];
// the grid values are validated rather than rescaled so the error budget stays
// attached to the function actually summed.
struct IntegrandSpec {
    std::function<double(double)> g;
    double a = 0.0;
    double b = 1.0;
    std::optional<double> lipschitz;
};

// Left endpoints of N equal subintervals of [a,b].
inline std::vector<double> sample_points(double a, double b, std::uint64_t n_samples) {
    if (!(a < b)) throw DomainError("interval must satisfy a < b");
    if (n_samples < 1) throw ParameterError("sample count must be at least 1");
    std::vector<double> xs(n_samples);
    const double step = (b - a) / static_cast<double>(n_samples);
    for (std::uint64_t i = 0; i < n_samples; ++i)
        xs[i] = a + static_cast<double>(i) * step;
    return xs;
}

// Riemann-sum estimate with its three-part error budget. The Lipschitz term
// (b-a)L/N is certified only on intervals with (b-a) <= 2, where it dominates
// the left-endpoint bound L(b-a)^2/(2N); on wider intervals it is still
// reported but flagged as heuristic.
struct IntegralEstimate {
    double value = 0.0;
    std::optional<double> riemann_bound;   // (b-a)*L/N when L is known
    bool riemann_bound_guaranteed = true;  // false when (b-a) > 2
    double encoding_bound = 0.0;           // (b-a)*delta
    double noise_bound = 0.0;              // (b-a) * sigma * (1 - delta)
    std::uint64_t n_samples = 0;
    int output_spins = 0;
    std::uint64_t trials = 1;

    double total_bound() const {
        return riemann_bound.value_or(0.0) + encoding_bound + noise_bound;
    }
};

// Spot-check |g(x)-g(y)| <= L|x-y| on seeded random pairs (tolerance 1e-9).
inline void check_lipschitz(const IntegrandSpec& spec, int pairs = 64) {
    if (!spec.lipschitz) return;
    if (!(*spec.lipschitz >= 0.0))
        throw ParameterError("Lipschitz constant must be non-negative");
    std::mt19937_64 eng(stream_seed(0x4c697073ULL, 0));
    for (int p = 0; p < pairs; ++p) {
        const double x = spec.a + (spec.b - spec.a) * uniform_unit(eng);
        const double y = spec.a + (spec.b - spec.a) * uniform_unit(eng);
        const double dg = std::abs(spec.g(x) - spec.g(y));
        if (dg > *spec.lipschitz * std::abs(x - y) + 1e-9)
            throw ValidationError("integrand violates the declared Lipschitz constant near x = " +
                                  std::to_string(x));
    }
}

// Estimate the definite integral of g over [a,b] through the summing pipeline:
// table the integrand at 2^n left endpoints, run initialize -> oracle ->
// measure, and scale the register mean by the interval width.
inline IntegralEstimate estimate_integral(const IntegrandSpec& spec, int input_spins,
                                          int output_spins,
                                          const std::optional<NoiseModel>& noise = {}) {
    const RegisterSpec reg(input_spins, output_spins);
    if (!spec.g) throw ValidationError("integrand callable is empty");
    if (!(spec.a < spec.b)) throw DomainError("interval must satisfy a < b");
    check_lipschitz(spec);

    const std::uint64_t n_samples = reg.sample_count();
    const auto xs = sample_points(spec.a, spec.b, n_samples);
    std::vector<double> table(n_samples);
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        const double v = spec.g(xs[i]);
        if (!(v >= 0.0 && v <= 1.0))
            throw ValidationError("integrand value " + std::to_string(v) + " at x = " +
                                  std::to_string(xs[i]) + " outside [0,1]");
        table[i] = v;
    }

    SampledFunction f = SampledFunction::from_table(std::move(table), input_spins);
    RunSettings settings;
    settings.output_spins = output_spins;
    if (noise) {
        noise->validate();
        settings.snr = noise->snr;
        settings.seed = noise->seed;
        settings.trials = TrialsChoice::fixed(noise->trials);
    }
    const RunOutcome run = run_summing(f, settings);

    const double width = spec.b - spec.a;
    IntegralEstimate est;
    est.value = width * run.measurement.register_mean;
    if (spec.lipschitz)
        est.riemann_bound = width * *spec.lipschitz / static_cast<double>(n_samples);
    est.riemann_bound_guaranteed = width <= 2.0;
    est.encoding_bound = width * reg.precision();
    est.noise_bound = noise ? width * NoiseModel{noise->snr, noise->seed, noise->trials}.sigma() *
                                  (1.0 - reg.precision())
                            : 0.0;
    est.n_samples = n_samples;
    est.output_spins = output_spins;
    est.trials = run.measurement.trials;
    return est;
}

// Ensemble average of f over its true (unpadded) domain.
inline double estimate_mean(SampledFunction& f, int output_spins,
                            const std::optional<NoiseModel>& noise = {}) {
    RunSettings settings;
    settings.output_spins = output_spins;
    if (noise) {
        noise->validate();
        settings.snr = noise->snr;
        settings.seed = noise->seed;
        settings.trials = TrialsChoice::fixed(noise->trials);
    }
    return run_summing(f, settings).mean_true();
}

}  // namespace enssum
