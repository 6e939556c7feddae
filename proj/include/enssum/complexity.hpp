#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

#include "enssum/errors.hpp"

namespace enssum {

// The four algorithms compared: this library's ensemble summing, ensemble
// database search, and Grover's search on pseudopure and pure states.
enum class AlgorithmKind { ensemble_summing, ensemble_search, grover_pseudopure, grover_pure };

inline std::string_view algorithm_name(AlgorithmKind kind) {
    switch (kind) {
        case AlgorithmKind::ensemble_summing: return "ensemble_summing";
        case AlgorithmKind::ensemble_search: return "ensemble_search";
        case AlgorithmKind::grover_pseudopure: return "grover_pseudopure";
        case AlgorithmKind::grover_pure: return "grover_pure";
    }
    return "unknown";
}

// Query-cost columns for one algorithm at a given sample count. Values are
// leading-term magnitudes with unit constants; the sources give only
// asymptotic orders.
struct ComplexityReport {
    AlgorithmKind kind;
    std::uint64_t n_samples;
    double single_run_queries;
    double trials;
    double overall_queries;
    std::string_view sensitivity_scaling;  // "1/N" or "1"
};

inline ComplexityReport table_row(AlgorithmKind kind, std::uint64_t n_samples) {
    if (n_samples < 2) throw ParameterError("sample count must be at least 2");
    const double N = static_cast<double>(n_samples);
    switch (kind) {
        case AlgorithmKind::ensemble_summing:
            return {kind, n_samples, 1.0, N * N, N * N, "1/N"};
        case AlgorithmKind::ensemble_search:
            return {kind, n_samples, std::log2(N), N * N, N * N * std::log2(N), "1/N"};
        case AlgorithmKind::grover_pseudopure:
            return {kind, n_samples, std::sqrt(N), N * N, N * N * std::sqrt(N), "1/N"};
        case AlgorithmKind::grover_pure:
            return {kind, n_samples, std::sqrt(N), 1.0, std::sqrt(N), "1"};
    }
    throw ParameterError("unknown algorithm kind");
}

inline std::array<ComplexityReport, 4> all_table_rows(std::uint64_t n_samples) {
    return {table_row(AlgorithmKind::ensemble_summing, n_samples),
            table_row(AlgorithmKind::ensemble_search, n_samples),
            table_row(AlgorithmKind::grover_pseudopure, n_samples),
            table_row(AlgorithmKind::grover_pure, n_samples)};
}

// Largest N with N*sqrt(N) < S^2, the regime where ensemble summing beats
// pure-state Grover search: S^(4/3) in closed form.
inline double summing_threshold(double snr) {
    if (!(snr > 0.0)) throw ParameterError("snr must be positive");
    return std::pow(snr, 4.0 / 3.0);
}

// Largest N with N*sqrt(N)*log2(N) < S^2 (the ensemble search advantage
// condition), found by bisection to 1e-9 relative width. The left side is
// strictly increasing for N > 1, so the root is unique; a result below 2
// means no advantage regime exists at that sensitivity.
inline double search_threshold(double snr) {
    if (!(snr > 1.0)) throw ParameterError("snr must exceed 1");
    const double target = snr * snr;
    const auto lhs = [](double N) { return std::pow(N, 1.5) * std::log2(N); };
    double lo = 1.0;
    double hi = 2.0;
    while (lhs(hi) < target) hi *= 2.0;
    while (hi - lo > 1e-9 * hi) {
        const double mid = 0.5 * (lo + hi);
        (lhs(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

enum class Verdict { ensemble_advantage, no_advantage };

inline std::string_view verdict_name(Verdict v) {
    return v == Verdict::ensemble_advantage ? "ensemble_advantage" : "no_advantage";
}

// Outcome of the strict comparison N*sqrt(N) < S^2, with both threshold curves
// attached for context.
struct AdvantageReport {
    Verdict verdict;
    double n_sqrt_n;        // comparison left side
    double snr_squared;     // comparison right side
    double summing_limit;   // summing_threshold(S)
    double search_limit;    // search_threshold(S); below 2 means no regime
};

inline AdvantageReport advantage_regime(std::uint64_t n_samples, double snr) {
    if (n_samples < 2) throw ParameterError("sample count must be at least 2");
    if (!(snr > 0.0)) throw ParameterError("snr must be positive");
    const double N = static_cast<double>(n_samples);
    const double lhs = N * std::sqrt(N);
    const double rhs = snr * snr;
    return AdvantageReport{lhs < rhs ? Verdict::ensemble_advantage : Verdict::no_advantage,
                           lhs, rhs, summing_threshold(snr),
                           snr > 1.0 ? search_threshold(snr) : 1.0};
}

}  // namespace enssum
