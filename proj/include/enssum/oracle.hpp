#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "enssum/ensemble.hpp"
#include "enssum/errors.hpp"
#include "enssum/registers.hpp"

namespace enssum {

class SampledFunction;
inline DiagonalEnsemble apply_oracle(const DiagonalEnsemble& e, SampledFunction& f);

// The oracle: f on {1..N} with values in [0,1], plus a counter of oracle
// applications. Copies are views of the same oracle and share the counter.
//
// Domains whose size is not a power of two are zero-padded up to the next one
// (minimum two entries, one input spin). Padding entries contribute nothing to
// the sum, but the measured register mean runs over the padded domain, so sum
// reconstruction always multiplies by padded_size(); true_size() is kept for
// scaling means back to the real domain.
//
// Callables are evaluated over the whole domain once, at the first oracle
// application, and memoized; each application still counts as exactly one
// query no matter how many sample points it touches.
class SampledFunction {
public:
    static SampledFunction from_table(std::vector<double> values) {
        const int n = spins_for(values.size());
        return from_table(std::move(values), n);
    }

    // Pads the table to 2^input_spins entries.
    static SampledFunction from_table(std::vector<double> values, int input_spins) {
        check_spins(values.size(), input_spins);
        check_range(values);
        auto st = std::make_shared<State>();
        st->true_size = values.size();
        st->input_spins = input_spins;
        st->padded_size = std::uint64_t{1} << input_spins;
        values.resize(st->padded_size, 0.0);
        st->values = std::move(values);
        st->evaluated.store(true, std::memory_order_release);
        return SampledFunction(std::move(st));
    }

    static SampledFunction from_callable(std::function<double(std::uint64_t)> fn,
                                         std::uint64_t domain_size) {
        if (!fn) throw ValidationError("oracle callable is empty");
        const int n = spins_for(domain_size);
        auto st = std::make_shared<State>();
        st->true_size = domain_size;
        st->input_spins = n;
        st->padded_size = std::uint64_t{1} << n;
        st->fn = std::move(fn);
        return SampledFunction(std::move(st));
    }

    std::uint64_t true_size() const { return state_->true_size; }
    std::uint64_t padded_size() const { return state_->padded_size; }
    int input_spins() const { return state_->input_spins; }

    // f(i) for i in [1, padded_size]; forces evaluation of a callable source.
    double sample(std::uint64_t i) const {
        if (i < 1 || i > state_->padded_size)
            throw DomainError("input index " + std::to_string(i) + " outside [1, " +
                              std::to_string(state_->padded_size) + "]");
        ensure_evaluated();
        return state_->values[i - 1];
    }

    // Padded value table; forces evaluation of a callable source.
    const std::vector<double>& values() const {
        ensure_evaluated();
        return state_->values;
    }

    std::uint64_t query_count() const { return state_->queries.load(std::memory_order_relaxed); }

private:
    struct State {
        std::uint64_t true_size = 0;
        std::uint64_t padded_size = 0;
        int input_spins = 0;
        std::function<double(std::uint64_t)> fn;
        std::vector<double> values;
        std::once_flag fill_once;
        std::atomic<bool> evaluated{false};
        std::atomic<std::uint64_t> queries{0};
    };

    explicit SampledFunction(std::shared_ptr<State> st) : state_(std::move(st)) {}

    static int spins_for(std::uint64_t size) {
        if (size == 0) throw ValidationError("function table is empty");
        if (size > (std::uint64_t{1} << max_input_spins))
            throw CapacityError("domain of " + std::to_string(size) + " samples exceeds 2^" +
                                std::to_string(max_input_spins));
        const int n = static_cast<int>(std::bit_width(size - 1));
        return n < 1 ? 1 : n;
    }

    static void check_spins(std::uint64_t size, int input_spins) {
        if (input_spins < 1 || input_spins > max_input_spins)
            throw CapacityError("input spin count " + std::to_string(input_spins) +
                                " outside [1, " + std::to_string(max_input_spins) + "]");
        if (size == 0) throw ValidationError("function table is empty");
        if (size > (std::uint64_t{1} << input_spins))
            throw ValidationError("table of " + std::to_string(size) +
                                  " values does not fit in " + std::to_string(input_spins) +
                                  " input spins");
    }

    static void check_range(const std::vector<double>& values) {
        std::string offending;
        int listed = 0;
        for (std::size_t idx = 0; idx < values.size(); ++idx) {
            if (values[idx] >= 0.0 && values[idx] <= 1.0) continue;
            if (listed < 8) {
                if (!offending.empty()) offending += ", ";
                offending += std::to_string(idx + 1);
            } else if (listed == 8) {
                offending += ", ...";
            }
            ++listed;
        }
        if (listed > 0)
            throw ValidationError("table values outside [0,1] at indices " + offending);
    }

    void ensure_evaluated() const {
        if (state_->evaluated.load(std::memory_order_acquire)) return;
        State* st = state_.get();
        std::call_once(st->fill_once, [st] {
            st->values.assign(st->padded_size, 0.0);
            for (std::uint64_t i = 1; i <= st->true_size; ++i) {
                const double v = st->fn(i);
                if (!(v >= 0.0 && v <= 1.0))
                    throw OracleContractError("oracle returned " + std::to_string(v) +
                                              " at index " + std::to_string(i));
                st->values[i - 1] = v;
            }
            st->evaluated.store(true, std::memory_order_release);
        });
    }

    void record_query() { state_->queries.fetch_add(1, std::memory_order_relaxed); }

    friend DiagonalEnsemble apply_oracle(const DiagonalEnsemble& e, SampledFunction& f);

    std::shared_ptr<State> state_;
};

// Oracle invocation bookkeeping for a whole run: one application per run times
// the number of experimental trials.
struct QueryLedger {
    std::uint64_t single_run_queries = 0;
    std::uint64_t trials = 1;

    std::uint64_t overall_queries() const { return single_run_queries * trials; }
};

// One oracle query: XOR each subensemble's output code with the encoded value
// of its input index. Weights are untouched, so applying the same oracle twice
// restores the original ensemble. Starting from zeroed codes this writes the
// encoded values directly.
inline DiagonalEnsemble apply_oracle(const DiagonalEnsemble& e, SampledFunction& f) {
    if (e.spec.sample_count() != f.padded_size())
        throw DomainError("ensemble covers " + std::to_string(e.spec.sample_count()) +
                          " samples but the oracle domain holds " +
                          std::to_string(f.padded_size()));
    const int k = e.spec.output_spins;
    const auto& vals = f.values();
    DiagonalEnsemble out = e;
    for (std::uint64_t idx = 0; idx < vals.size(); ++idx)
        out.codes[idx] ^= encode_value(vals[idx], k).word;
    f.record_query();
    return out;
}

}  // namespace enssum
