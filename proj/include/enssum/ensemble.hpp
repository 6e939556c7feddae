#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "enssum/errors.hpp"
#include "enssum/registers.hpp"

namespace enssum {

// Diagonal density matrix of input (x) output registers: one statistical
// weight and one output code per input index, stored densely (entry idx-1
// belongs to input index idx). Off-diagonal terms are absent by construction.
struct DiagonalEnsemble {
    RegisterSpec spec;
    std::vector<double> weights;
    std::vector<std::uint64_t> codes;

    // Unit trace within 1e-12, non-negative weights, one entry per index,
    // codes within the output register width.
    void validate() const {
        const std::uint64_t n_samples = spec.sample_count();
        if (weights.size() != n_samples || codes.size() != n_samples)
            throw ValidationError("ensemble must hold exactly one entry per input index");
        double trace = 0.0;
        for (const double w : weights) {
            if (!(w >= 0.0)) throw ValidationError("ensemble weight is negative");
            trace += w;
        }
        if (!(std::abs(trace - 1.0) <= 1e-12))
            throw ValidationError("ensemble trace deviates from 1 by more than 1e-12");
        for (const std::uint64_t code : codes)
            if (spec.output_spins < 64 && (code >> spec.output_spins) != 0)
                throw ValidationError("ensemble code exceeds the output register width");
    }
};

// Equally weighted mixture over all 2^n input states, output register zeroed.
inline DiagonalEnsemble init_uniform(const RegisterSpec& spec) {
    const std::uint64_t n_samples = spec.sample_count();
    const double w = 1.0 / static_cast<double>(n_samples);
    return DiagonalEnsemble{spec, std::vector<double>(n_samples, w),
                            std::vector<std::uint64_t>(n_samples, 0)};
}

// Net spin excess of input index i: (#up - #down) = n - 2*popcount(i-1).
// Traceless over the register and bounded by |chi_i| <= n. The thermal state
// only constrains the coefficients this far; the popcount assignment is the
// one model choice made here, isolated so alternatives can be swapped in.
inline std::vector<int> deviation_coefficients(int input_spins) {
    if (input_spins < 1 || input_spins > max_input_spins)
        throw CapacityError("input spin count " + std::to_string(input_spins) + " outside [1, " +
                            std::to_string(max_input_spins) + "]");
    const std::uint64_t n_samples = std::uint64_t{1} << input_spins;
    std::vector<int> chi(n_samples);
    for (std::uint64_t v = 0; v < n_samples; ++v)
        chi[v] = input_spins - 2 * std::popcount(v);
    return chi;
}

// Deviation part of a thermal initial state: amplitude alpha and one integer
// coefficient per input index.
struct ThermalParams {
    double alpha = 0.0;
    std::vector<int> chi;

    static ThermalParams for_register(int input_spins, double alpha) {
        if (!(alpha >= 0.0)) throw DomainError("thermal factor alpha must be non-negative");
        return ThermalParams{alpha, deviation_coefficients(input_spins)};
    }

    // |chi_i| <= n and sum chi_i == 0 for a 2^n-entry coefficient set.
    void validate() const {
        if (chi.empty() || std::popcount(chi.size()) != 1)
            throw ValidationError("deviation coefficients must cover a power-of-two index set");
        const int n = std::bit_width(chi.size()) - 1;
        long long sum = 0;
        for (const int c : chi) {
            if (c < -n || c > n)
                throw ValidationError("deviation coefficient outside [-n, n]");
            sum += c;
        }
        if (sum != 0) throw ValidationError("deviation coefficients must sum to zero");
    }
};

// Thermal initial state with explicit deviation coefficients:
// w_i = (1 + alpha*chi_i)/N. Requires alpha*n < 1 so every weight stays
// non-negative; the traceless deviation keeps the trace at one.
inline DiagonalEnsemble init_thermal(const RegisterSpec& spec, const ThermalParams& params) {
    params.validate();
    if (params.chi.size() != spec.sample_count())
        throw DomainError("deviation coefficient count does not match the register");
    if (!(params.alpha >= 0.0)) throw DomainError("thermal factor alpha must be non-negative");
    if (params.alpha * spec.input_spins >= 1.0)
        throw ModelValidityError("alpha*n = " + std::to_string(params.alpha * spec.input_spins) +
                                 " >= 1 would make mixture weights negative");
    const std::uint64_t n_samples = spec.sample_count();
    const double inv_n = 1.0 / static_cast<double>(n_samples);
    DiagonalEnsemble e{spec, std::vector<double>(n_samples),
                       std::vector<std::uint64_t>(n_samples, 0)};
    for (std::uint64_t idx = 0; idx < n_samples; ++idx)
        e.weights[idx] = (1.0 + params.alpha * params.chi[idx]) * inv_n;
    return e;
}

inline DiagonalEnsemble init_thermal(const RegisterSpec& spec, double alpha) {
    return init_thermal(spec, ThermalParams::for_register(spec.input_spins, alpha));
}

}  // namespace enssum
