// Command-line driver for the ensemble summing simulator.
//
// Subcommands: sum, integrate, analyze, sweep. Reports are JSON key-value
// documents ("kv") or flat CSV tables; identical configuration and seed give
// byte-identical output. Failures print a single machine-parsable record
//   error code=<code> message="..."
// and exit 2 (validation-class errors) or 3 (capacity errors).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "enssum/enssum.hpp"

using json = nlohmann::ordered_json;
using namespace enssum;

namespace {

// Shortest round-trip formatting, shared with the JSON serializer so kv and
// csv output agree on every digit.
std::string fmt(double v) { return json(v).dump(); }

std::string escape_quotes(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        if (c == '\\' || c == '"') out.push_back('\\');
        out.push_back(c == '\n' ? ' ' : c);
    }
    return out;
}

int fail(const Error& e) {
    std::fprintf(stderr, "error code=%s message=\"%s\"\n", e.code().c_str(),
                 escape_quotes(e.what()).c_str());
    return e.code() == "capacity" ? 3 : 2;
}

// Reports go to stdout unless --output is given; relative output paths are
// resolved against ENSSUM_OUTDIR when it is set.
void emit(const std::string& text, const std::optional<std::string>& output) {
    if (!output) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::filesystem::path path(*output);
    if (path.is_relative())
        if (const char* dir = std::getenv("ENSSUM_OUTDIR"); dir && *dir)
            path = std::filesystem::path(dir) / path;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write output file '" + path.string() + "'");
    out << text;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("ENSSUM_SEED");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw ValidationError("ENSSUM_SEED is not an unsigned integer: '" + std::string(env) +
                              "'");
    return v;
}

double parse_double_token(const std::string& token, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || token.empty())
        throw UsageError(what + " is not a number: '" + token + "'");
    return v;
}

long long parse_int_token(const std::string& token, const std::string& what) {
    char* end = nullptr;
    const long long v = std::strtoll(token.c_str(), &end, 10);
    if (end != token.c_str() + token.size() || token.empty())
        throw UsageError(what + " is not an integer: '" + token + "'");
    return v;
}

std::vector<std::string> split_list(const std::string& s, const std::string& what) {
    std::vector<std::string> tokens;
    std::string::size_type start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const std::string token =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.empty()) throw UsageError(what + " contains an empty list entry");
        tokens.push_back(token);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return tokens;
}

TrialsChoice parse_trials(const std::string& s) {
    if (s == "paper") return TrialsChoice::paper();
    if (s == "parametric") return TrialsChoice::parametric();
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0' || v == 0)
        throw UsageError("--trials must be 'paper', 'parametric', or a positive integer");
    return TrialsChoice::fixed(v);
}

std::string trials_mode_name(const TrialsChoice& t) {
    switch (t.mode) {
        case TrialsChoice::Mode::paper: return "paper";
        case TrialsChoice::Mode::parametric: return "parametric";
        case TrialsChoice::Mode::fixed: return "fixed";
    }
    return "unknown";
}

std::pair<double, double> parse_interval(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= s.size())
        throw UsageError("--interval must look like a:b");
    const double a = parse_double_token(s.substr(0, colon), "interval endpoint");
    const double b = parse_double_token(s.substr(colon + 1), "interval endpoint");
    return {a, b};
}

std::function<double(double)> make_integrand(const std::string& id) {
    if (id == "linear") return [](double x) { return x; };
    if (id == "quadratic") return [](double x) { return x * x; };
    if (id == "sine") return [](double x) { return 0.5 * (1.0 + std::sin(x)); };
    if (id.rfind("constant:", 0) == 0) {
        const double c = parse_double_token(id.substr(9), "constant integrand level");
        return [c](double) { return c; };
    }
    throw UsageError("unknown integrand '" + id +
                     "' (use linear|quadratic|sine|constant:<c>)");
}

// One grid cell of a run: everything the pipeline needs plus echo strings.
struct CellConfig {
    int n = 0;
    int k = 16;
    std::optional<double> snr;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    TrialsChoice trials = TrialsChoice::parametric();
    std::string trials_mode = "parametric";
};

RunOutcome run_cell(const std::vector<double>& values, const CellConfig& c) {
    SampledFunction f = SampledFunction::from_table(values, c.n);
    RunSettings settings;
    settings.output_spins = c.k;
    settings.alpha = c.alpha;
    settings.seed = c.seed;
    settings.trials = c.trials;
    if (c.snr) settings.snr = *c.snr;
    return run_summing(f, settings);
}

const char* run_csv_header =
    "cell,n,k,snr,trials_mode,trials,alpha,seed,samples_true,samples_padded,sum_estimate,"
    "register_mean,mean_true,encoding_bound,noise_bound,thermal_bound,queries_overall";

std::string run_csv_row(std::uint64_t cell, const CellConfig& c, const RunOutcome& out) {
    std::ostringstream row;
    row << cell << ',' << c.n << ',' << c.k << ',' << (c.snr ? fmt(*c.snr) : "") << ','
        << c.trials_mode << ',' << out.ledger.trials << ',' << fmt(c.alpha) << ',' << c.seed
        << ',' << out.true_size << ',' << out.spec.sample_count() << ','
        << fmt(out.measurement.sum_estimate) << ',' << fmt(out.measurement.register_mean) << ','
        << fmt(out.mean_true()) << ',' << fmt(out.encoding_bound) << ','
        << fmt(out.noise_bound) << ',' << fmt(out.thermal_bound) << ','
        << out.ledger.overall_queries();
    return row.str();
}

json register_json(const RunOutcome& out) {
    json reg;
    reg["input_spins"] = out.spec.input_spins;
    reg["output_spins"] = out.spec.output_spins;
    reg["samples_true"] = out.true_size;
    reg["samples_padded"] = out.spec.sample_count();
    reg["precision"] = out.spec.precision();
    return reg;
}

json queries_json(const QueryLedger& ledger) {
    json q;
    q["single_run"] = ledger.single_run_queries;
    q["trials"] = ledger.trials;
    q["overall"] = ledger.overall_queries();
    return q;
}

json advantage_json(const AdvantageReport& adv) {
    json a;
    a["verdict"] = std::string(verdict_name(adv.verdict));
    a["n_sqrt_n"] = adv.n_sqrt_n;
    a["snr_squared"] = adv.snr_squared;
    a["summing_threshold"] = adv.summing_limit;
    a["search_threshold"] = adv.search_limit;
    return a;
}

// ---------------------------------------------------------------- sum -----

struct SumOptions {
    std::string input;
    std::optional<int> pad_spins;
    int k = 16;
    std::optional<double> snr;
    std::string trials = "parametric";
    double alpha = 0.0;
    std::uint64_t seed = 0;
    std::optional<std::string> output;
    std::string format = "kv";
};

int cmd_sum(const SumOptions& opt) {
    const auto values = load_table_file(opt.input);
    CellConfig cell;
    cell.n = opt.pad_spins ? *opt.pad_spins
                           : SampledFunction::from_table(values).input_spins();
    cell.k = opt.k;
    cell.snr = opt.snr;
    cell.alpha = opt.alpha;
    cell.seed = opt.seed;
    cell.trials = parse_trials(opt.trials);
    cell.trials_mode = trials_mode_name(cell.trials);

    const RunOutcome out = run_cell(values, cell);

    if (opt.format == "csv") {
        emit(std::string(run_csv_header) + "\n" + run_csv_row(0, cell, out) + "\n", opt.output);
        return 0;
    }

    json j;
    j["command"] = "sum";
    json cfg;
    cfg["input"] = opt.input;
    cfg["n"] = cell.n;
    cfg["k"] = cell.k;
    cfg["snr"] = cell.snr ? json(*cell.snr) : json(nullptr);
    cfg["trials_mode"] = cell.trials_mode;
    if (cell.trials.mode == TrialsChoice::Mode::fixed) cfg["trials"] = cell.trials.count;
    cfg["alpha"] = cell.alpha;
    cfg["seed"] = cell.seed;
    cfg["format"] = opt.format;
    cfg["output"] = opt.output ? json(*opt.output) : json(nullptr);
    j["config"] = cfg;
    j["register"] = register_json(out);
    json res;
    res["sum_estimate"] = out.measurement.sum_estimate;
    res["register_mean"] = out.measurement.register_mean;
    res["mean_true"] = out.mean_true();
    res["spin_signals"] = out.measurement.spin_signals;
    res["noiseless"] = out.measurement.noiseless;
    j["result"] = res;
    json err;
    err["encoding_bound"] = out.encoding_bound;
    err["noise_bound"] = out.noise_bound;
    err["thermal_bound"] = out.thermal_bound;
    err["total"] = out.encoding_bound + out.noise_bound + out.thermal_bound;
    j["error_budget"] = err;
    j["queries"] = queries_json(out.ledger);
    if (cell.snr) j["complexity"] = advantage_json(advantage_regime(out.spec.sample_count(), *cell.snr));
    emit(j.dump(2) + "\n", opt.output);
    return 0;
}

// ---------------------------------------------------------- integrate -----

struct IntegrateOptions {
    std::string integrand;
    std::string interval = "0:1";
    std::optional<double> lipschitz;
    int n = 0;
    int k = 16;
    std::optional<double> snr;
    std::string trials = "parametric";
    std::uint64_t seed = 0;
    std::optional<std::string> output;
    std::string format = "kv";
};

int cmd_integrate(const IntegrateOptions& opt) {
    const auto [a, b] = parse_interval(opt.interval);
    IntegrandSpec spec{make_integrand(opt.integrand), a, b, opt.lipschitz};

    const TrialsChoice trials = parse_trials(opt.trials);
    std::optional<NoiseModel> noise;
    if (opt.snr) {
        const RegisterSpec reg(opt.n, opt.k);
        noise = NoiseModel{*opt.snr, opt.seed, trials.resolve(reg.sample_count(), *opt.snr)};
    }
    const IntegralEstimate est = estimate_integral(spec, opt.n, opt.k, noise);
    const QueryLedger ledger{1, est.trials};

    if (opt.format == "csv") {
        std::ostringstream text;
        text << "integrand,a,b,n,k,snr,trials_mode,trials,seed,value,riemann_bound,"
                "riemann_bound_guaranteed,encoding_bound,noise_bound,total_bound,queries_overall\n";
        text << opt.integrand << ',' << fmt(a) << ',' << fmt(b) << ',' << opt.n << ',' << opt.k
             << ',' << (opt.snr ? fmt(*opt.snr) : "") << ',' << trials_mode_name(trials) << ','
             << est.trials << ',' << opt.seed << ',' << fmt(est.value) << ','
             << (est.riemann_bound ? fmt(*est.riemann_bound) : "") << ','
             << (est.riemann_bound_guaranteed ? "true" : "false") << ','
             << fmt(est.encoding_bound) << ',' << fmt(est.noise_bound) << ','
             << fmt(est.total_bound()) << ',' << ledger.overall_queries() << '\n';
        emit(text.str(), opt.output);
        return 0;
    }

    json j;
    j["command"] = "integrate";
    json cfg;
    cfg["integrand"] = opt.integrand;
    cfg["interval"] = {{"a", a}, {"b", b}};
    cfg["lipschitz"] = opt.lipschitz ? json(*opt.lipschitz) : json(nullptr);
    cfg["n"] = opt.n;
    cfg["k"] = opt.k;
    cfg["snr"] = opt.snr ? json(*opt.snr) : json(nullptr);
    cfg["trials_mode"] = trials_mode_name(trials);
    cfg["seed"] = opt.seed;
    cfg["format"] = opt.format;
    cfg["output"] = opt.output ? json(*opt.output) : json(nullptr);
    j["config"] = cfg;
    json e;
    e["value"] = est.value;
    e["riemann_bound"] = est.riemann_bound ? json(*est.riemann_bound) : json(nullptr);
    e["riemann_bound_guaranteed"] = est.riemann_bound_guaranteed;
    e["encoding_bound"] = est.encoding_bound;
    e["noise_bound"] = est.noise_bound;
    e["total_bound"] = est.total_bound();
    e["samples"] = est.n_samples;
    e["output_spins"] = est.output_spins;
    e["trials"] = est.trials;
    j["estimate"] = e;
    j["queries"] = queries_json(ledger);
    emit(j.dump(2) + "\n", opt.output);
    return 0;
}

// ------------------------------------------------------------- analyze ----

struct AnalyzeOptions {
    std::uint64_t samples = 0;
    double snr = 0.0;
    std::optional<std::string> output;
    std::string format = "kv";
};

int cmd_analyze(const AnalyzeOptions& opt) {
    const auto rows = all_table_rows(opt.samples);
    const AdvantageReport adv = advantage_regime(opt.samples, opt.snr);

    if (opt.format == "csv") {
        std::ostringstream text;
        text << "algorithm,samples,single_run_queries,trials,overall_queries,"
                "sensitivity_scaling,verdict,summing_threshold,search_threshold\n";
        for (const auto& row : rows)
            text << algorithm_name(row.kind) << ',' << row.n_samples << ','
                 << fmt(row.single_run_queries) << ',' << fmt(row.trials) << ','
                 << fmt(row.overall_queries) << ',' << row.sensitivity_scaling << ','
                 << verdict_name(adv.verdict) << ',' << fmt(adv.summing_limit) << ','
                 << fmt(adv.search_limit) << '\n';
        emit(text.str(), opt.output);
        return 0;
    }

    json j;
    j["command"] = "analyze";
    json cfg;
    cfg["samples"] = opt.samples;
    cfg["snr"] = opt.snr;
    cfg["format"] = opt.format;
    cfg["output"] = opt.output ? json(*opt.output) : json(nullptr);
    j["config"] = cfg;
    json rows_json = json::array();
    for (const auto& row : rows) {
        json r;
        r["algorithm"] = std::string(algorithm_name(row.kind));
        r["single_run_queries"] = row.single_run_queries;
        r["trials"] = row.trials;
        r["overall_queries"] = row.overall_queries;
        r["sensitivity_scaling"] = std::string(row.sensitivity_scaling);
        rows_json.push_back(r);
    }
    j["rows"] = rows_json;
    json th;
    th["summing_max_samples"] = adv.summing_limit;
    th["search_max_samples"] = adv.search_limit;
    th["search_advantage_possible"] = adv.search_limit >= 2.0;
    j["thresholds"] = th;
    j["advantage"] = advantage_json(adv);
    emit(j.dump(2) + "\n", opt.output);
    return 0;
}

// --------------------------------------------------------------- sweep ----

struct SweepOptions {
    std::string input;
    std::string n_list;      // empty = implied by the table
    std::string k_list = "16";
    std::string snr_list;    // empty = ideal only
    std::string alpha_list = "0";
    std::string trials = "parametric";
    std::uint64_t seed = 0;
    std::optional<std::string> output;
    std::string format = "csv";
};

int cmd_sweep(const SweepOptions& opt) {
    const auto values = load_table_file(opt.input);
    const TrialsChoice trials = parse_trials(opt.trials);
    const std::string trials_mode = trials_mode_name(trials);

    std::vector<int> ns;
    if (opt.n_list.empty()) {
        ns.push_back(SampledFunction::from_table(values).input_spins());
    } else {
        for (const auto& tok : split_list(opt.n_list, "--n"))
            ns.push_back(static_cast<int>(parse_int_token(tok, "--n entry")));
    }
    std::vector<int> ks;
    for (const auto& tok : split_list(opt.k_list, "--k"))
        ks.push_back(static_cast<int>(parse_int_token(tok, "--k entry")));
    std::vector<std::optional<double>> snrs;
    if (opt.snr_list.empty()) {
        snrs.emplace_back(std::nullopt);
    } else {
        for (const auto& tok : split_list(opt.snr_list, "--snr")) {
            if (tok == "ideal")
                snrs.emplace_back(std::nullopt);
            else
                snrs.emplace_back(parse_double_token(tok, "--snr entry"));
        }
    }
    std::vector<double> alphas;
    for (const auto& tok : split_list(opt.alpha_list, "--alpha"))
        alphas.push_back(parse_double_token(tok, "--alpha entry"));

    const std::uint64_t cells =
        ns.size() * ks.size() * snrs.size() * alphas.size();
    if (cells > 10000)
        throw ValidationError("sweep grid has " + std::to_string(cells) +
                              " cells; the limit is 10000");

    // fail before emitting anything rather than mid-table
    for (const int n : ns)
        for (const int k : ks) {
            const RegisterSpec reg(n, k);
            if (reg.sample_count() < values.size())
                throw ValidationError("table of " + std::to_string(values.size()) +
                                      " values does not fit in " + std::to_string(n) +
                                      " input spins");
            for (const double alpha : alphas) {
                if (!(alpha >= 0.0))
                    throw ValidationError("alpha must be non-negative");
                if (alpha * n >= 1.0)
                    throw ModelValidityError("alpha*n = " + std::to_string(alpha * n) +
                                             " >= 1 would make mixture weights negative");
            }
        }
    for (const auto& snr : snrs)
        if (snr && !(*snr > 0.0)) throw ValidationError("snr must be positive");

    // row-major over (n, k, snr, alpha); cell seeds are master + index so a
    // one-cell sweep reproduces `sum` exactly
    std::uint64_t index = 0;
    std::ostringstream csv;
    csv << run_csv_header << '\n';
    json cells_json = json::array();
    for (const int n : ns)
        for (const int k : ks)
            for (const auto& snr : snrs)
                for (const double alpha : alphas) {
                    CellConfig cell;
                    cell.n = n;
                    cell.k = k;
                    cell.snr = snr;
                    cell.alpha = alpha;
                    cell.seed = opt.seed + index;
                    cell.trials = trials;
                    cell.trials_mode = trials_mode;
                    const RunOutcome out = run_cell(values, cell);
                    if (opt.format == "csv") {
                        csv << run_csv_row(index, cell, out) << '\n';
                    } else {
                        json c;
                        c["cell"] = index;
                        c["n"] = n;
                        c["k"] = k;
                        c["snr"] = snr ? json(*snr) : json(nullptr);
                        c["trials_mode"] = trials_mode;
                        c["trials"] = out.ledger.trials;
                        c["alpha"] = alpha;
                        c["seed"] = cell.seed;
                        c["samples_true"] = out.true_size;
                        c["samples_padded"] = out.spec.sample_count();
                        c["sum_estimate"] = out.measurement.sum_estimate;
                        c["register_mean"] = out.measurement.register_mean;
                        c["mean_true"] = out.mean_true();
                        c["encoding_bound"] = out.encoding_bound;
                        c["noise_bound"] = out.noise_bound;
                        c["thermal_bound"] = out.thermal_bound;
                        c["queries_overall"] = out.ledger.overall_queries();
                        cells_json.push_back(c);
                    }
                    ++index;
                }

    if (opt.format == "csv") {
        emit(csv.str(), opt.output);
        return 0;
    }
    json j;
    j["command"] = "sweep";
    json cfg;
    cfg["input"] = opt.input;
    cfg["n"] = opt.n_list.empty() ? json(nullptr) : json(opt.n_list);
    cfg["k"] = opt.k_list;
    cfg["snr"] = opt.snr_list.empty() ? json(nullptr) : json(opt.snr_list);
    cfg["alpha"] = opt.alpha_list;
    cfg["trials_mode"] = trials_mode;
    cfg["seed"] = opt.seed;
    cfg["format"] = opt.format;
    cfg["output"] = opt.output ? json(*opt.output) : json(nullptr);
    j["config"] = cfg;
    j["cells"] = cells_json;
    emit(j.dump(2) + "\n", opt.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ensemble summing simulator: sums, Riemann integrals, and query-cost analysis"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    try {
        seed = default_seed();
    } catch (const Error& e) {
        return fail(e);
    }

    SumOptions sum_opt;
    sum_opt.seed = seed;
    std::string sum_output;
    int sum_pad_spins = -1;
    double sum_snr = -1.0;
    CLI::App* sum = app.add_subcommand("sum", "Sum a table of values in [0,1]");
    sum->add_option("--input", sum_opt.input, "table file (text or .json)")->required();
    auto* sum_n = sum->add_option("--n", sum_pad_spins, "pad the table to 2^n samples");
    sum->add_option("--k", sum_opt.k, "output spins (precision 2^-k)")->capture_default_str();
    auto* sum_s = sum->add_option("--snr", sum_snr, "signal-to-noise ratio (omit for ideal readout)");
    sum->add_option("--trials", sum_opt.trials, "paper | parametric | <count>")->capture_default_str();
    sum->add_option("--alpha", sum_opt.alpha, "thermal deviation factor (0 = uniform init)")
        ->capture_default_str();
    sum->add_option("--seed", sum_opt.seed, "noise RNG seed")->capture_default_str();
    auto* sum_o = sum->add_option("--output", sum_output, "write the report here instead of stdout");
    sum->add_option("--format", sum_opt.format, "kv | csv")
        ->check(CLI::IsMember({"kv", "csv"}))
        ->capture_default_str();

    IntegrateOptions int_opt;
    int_opt.seed = seed;
    std::string int_output;
    double int_lipschitz = -1.0;
    double int_snr = -1.0;
    CLI::App* integrate = app.add_subcommand("integrate", "Estimate a definite integral");
    integrate->add_option("--integrand", int_opt.integrand,
                          "linear | quadratic | sine | constant:<c>")->required();
    integrate->add_option("--interval", int_opt.interval, "integration interval a:b")
        ->capture_default_str();
    auto* int_l = integrate->add_option("--lipschitz", int_lipschitz,
                                        "Lipschitz constant (enables the Riemann bound)");
    integrate->add_option("--n", int_opt.n, "input spins (2^n sample points)")->required();
    integrate->add_option("--k", int_opt.k, "output spins")->capture_default_str();
    auto* int_s = integrate->add_option("--snr", int_snr, "signal-to-noise ratio");
    integrate->add_option("--trials", int_opt.trials, "paper | parametric | <count>")
        ->capture_default_str();
    integrate->add_option("--seed", int_opt.seed, "noise RNG seed")->capture_default_str();
    auto* int_o = integrate->add_option("--output", int_output, "report path");
    integrate->add_option("--format", int_opt.format, "kv | csv")
        ->check(CLI::IsMember({"kv", "csv"}))
        ->capture_default_str();

    AnalyzeOptions ana_opt;
    std::string ana_output;
    CLI::App* analyze = app.add_subcommand("analyze", "Query-cost table and advantage thresholds");
    analyze->add_option("--samples", ana_opt.samples, "total sample count N")->required();
    analyze->add_option("--snr", ana_opt.snr, "signal-to-noise ratio")->required();
    auto* ana_o = analyze->add_option("--output", ana_output, "report path");
    analyze->add_option("--format", ana_opt.format, "kv | csv")
        ->check(CLI::IsMember({"kv", "csv"}))
        ->capture_default_str();

    SweepOptions sweep_opt;
    sweep_opt.seed = seed;
    std::string sweep_output;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a grid over n, k, snr and alpha");
    sweep->add_option("--input", sweep_opt.input, "table file (text or .json)")->required();
    sweep->add_option("--n", sweep_opt.n_list, "comma list of input spin counts");
    sweep->add_option("--k", sweep_opt.k_list, "comma list of output spin counts")
        ->capture_default_str();
    sweep->add_option("--snr", sweep_opt.snr_list, "comma list of snr values or 'ideal'");
    sweep->add_option("--alpha", sweep_opt.alpha_list, "comma list of thermal factors")
        ->capture_default_str();
    sweep->add_option("--trials", sweep_opt.trials, "paper | parametric | <count>")
        ->capture_default_str();
    sweep->add_option("--seed", sweep_opt.seed, "master seed; cell i uses seed + i")
        ->capture_default_str();
    auto* sweep_o = sweep->add_option("--output", sweep_output, "report path");
    sweep->add_option("--format", sweep_opt.format, "csv | kv")
        ->check(CLI::IsMember({"kv", "csv"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(UsageError(e.what()));
    }

    try {
        if (sum->parsed()) {
            if (sum_n->count() > 0) sum_opt.pad_spins = sum_pad_spins;
            if (sum_s->count() > 0) sum_opt.snr = sum_snr;
            if (sum_o->count() > 0) sum_opt.output = sum_output;
            return cmd_sum(sum_opt);
        }
        if (integrate->parsed()) {
            if (int_l->count() > 0) int_opt.lipschitz = int_lipschitz;
            if (int_s->count() > 0) int_opt.snr = int_snr;
            if (int_o->count() > 0) int_opt.output = int_output;
            return cmd_integrate(int_opt);
        }
        if (analyze->parsed()) {
            if (ana_o->count() > 0) ana_opt.output = ana_output;
            return cmd_analyze(ana_opt);
        }
        if (sweep->parsed()) {
            if (sweep_o->count() > 0) sweep_opt.output = sweep_output;
            return cmd_sweep(sweep_opt);
        }
    } catch (const Error& e) {
        return fail(e);
    } catch (const std::exception& e) {
        return fail(ValidationError(e.what()));
    }
    return fail(UsageError("no subcommand given"));
}
