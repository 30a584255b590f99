// Copyright 2026 The groverlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "groverlab/calib/calibration.hpp"
#include "groverlab/core/rng.hpp"
#include "groverlab/core/simulate.hpp"
#include "groverlab/errors.hpp"
#include "groverlab/grover/grover.hpp"
#include "groverlab/kernels/kernels.hpp"
#include "groverlab/metrics/metrics.hpp"
#include "groverlab/noise/noise.hpp"
#include "groverlab/stats/stats.hpp"
#include "groverlab/tomo/tomography.hpp"

namespace {

using namespace groverlab;
using nlohmann::json;

// Flag-value problems exit with code 2; runtime failures with 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BackendChoice {
    bool noisy = false;
    noise::NoiseModel model;  // valid when noisy
    std::string tag;          // "ideal" or the full "noisy:..." string
};

BackendChoice parse_backend(const std::string& text) {
    BackendChoice choice;
    choice.tag = text;
    if (text == "ideal") return choice;
    if (text.rfind("noisy:", 0) != 0) {
        throw UsageError("backend must be \"ideal\", \"noisy:default\" or \"noisy:<file>\"");
    }
    choice.noisy = true;
    const std::string source = text.substr(6);
    if (source == "default") {
        choice.model = noise::default_noise_model();
        return choice;
    }
    std::ifstream in(source);
    if (!in) throw std::runtime_error("cannot open noise model file: " + source);
    std::stringstream buf;
    buf << in.rdbuf();
    choice.model = noise::noise_model_from_json(buf.str());
    for (const std::string& w : choice.model.warnings) std::cerr << "warning: " << w << "\n";
    return choice;
}

std::vector<std::string> split_labels(const std::string& text) {
    std::vector<std::string> labels;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) labels.push_back(item);
    }
    return labels;
}

grover::OracleSpec parse_oracle(int n, const std::string& marked, const std::string& style) {
    grover::OracleStyle s;
    if (style == "phase") {
        s = grover::OracleStyle::Phase;
    } else if (style == "boolean") {
        s = grover::OracleStyle::Boolean;
    } else {
        throw UsageError("style must be \"phase\" or \"boolean\"");
    }
    try {
        return grover::make_oracle_spec(n, split_labels(marked), s);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad oracle: ") + e.what());
    }
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write to " + out_path);
    out << text << "\n";
}

json counts_to_json(const CountsHistogram& counts) {
    json j = json::object();
    for (const auto& [label, c] : counts.counts) j[label] = c;
    return j;
}

json distribution_to_json(const std::vector<double>& dist, int n) {
    json j = json::object();
    for (std::size_t i = 0; i < dist.size(); ++i) j[basis_label(i, n)] = dist[i];
    return j;
}

// Work-register marginal of a full-width histogram (drops the ancilla bit of
// boolean-oracle labels; identity for phase oracles).
CountsHistogram marginalize_counts(const CountsHistogram& counts, int n_work) {
    if (counts.n == n_work) return counts;
    CountsHistogram out{n_work, counts.shots, {}};
    for (const auto& [label, c] : counts.counts) {
        out.counts[label.substr(label.size() - static_cast<std::size_t>(n_work))] += c;
    }
    return out;
}

std::vector<double> marginalize_dist(const std::vector<double>& dist, int n_work) {
    const std::size_t work_dim = std::size_t{1} << n_work;
    if (dist.size() == work_dim) return dist;
    std::vector<double> out(work_dim, 0.0);
    for (std::size_t i = 0; i < dist.size(); ++i) out[i & (work_dim - 1)] += dist[i];
    return out;
}

struct RunOptions {
    int n = 3;
    std::string marked;
    std::string style = "phase";
    std::string backend = "ideal";
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    int iterations = 1;
    int repetitions = 1;
    std::string out;
};

// One sampled repetition: counts plus ASP/SSO on the work register.
struct Repetition {
    CountsHistogram counts;
    double asp = 0.0;
    double sso = 0.0;
};

Repetition run_once(const grover::OracleSpec& spec, const Circuit& circuit,
                    const BackendChoice& backend,
                    const metrics::PopulationDistribution& expected, std::uint64_t shots,
                    std::uint64_t seed) {
    CountsHistogram counts;
    if (backend.noisy) {
        counts = noise::run_noisy(circuit, backend.model, shots, seed).counts;
    } else {
        const std::vector<double> dist =
            probabilities(apply_circuit(zero_state(circuit.width()), circuit));
        counts = sample_counts(dist, shots, seed);
    }
    counts = marginalize_counts(counts, spec.n);

    Repetition rep;
    rep.counts = counts;
    rep.asp = metrics::asp(counts, spec.marked);
    rep.sso = metrics::sso(expected, metrics::distribution_from_counts(counts));
    return rep;
}

std::vector<double> analytic_work_distribution(const Circuit& circuit,
                                               const BackendChoice& backend, int n_work) {
    if (backend.noisy) {
        const DensityMatrix dm = noise::evolve_noisy(circuit, backend.model);
        return marginalize_dist(
            noise::apply_readout_confusion(diagonal_probabilities(dm), backend.model, dm.n),
            n_work);
    }
    return marginalize_dist(probabilities(apply_circuit(zero_state(circuit.width()), circuit)),
                            n_work);
}

json summary_rows(const std::vector<double>& values) {
    const stats::StatSummary s = stats::summarize(values);
    return json{{"median", s.median}, {"stdev", s.stdev}, {"mean", s.mean},
                {"se_mean", s.se_mean}};
}

int cmd_run(const RunOptions& opt) {
    const grover::OracleSpec spec = parse_oracle(opt.n, opt.marked, opt.style);
    const BackendChoice backend = parse_backend(opt.backend);
    if (opt.iterations < 0) throw UsageError("--iterations must be >= 0");
    if (opt.repetitions < 1) throw UsageError("--repetitions must be >= 1");
    if (opt.shots < 1) throw UsageError("--shots must be >= 1");

    const grover::GroverPlan plan{spec, opt.iterations, opt.repetitions};
    const Circuit circuit = grover::grover_circuit(plan);
    const metrics::PopulationDistribution expected =
        metrics::make_distribution(spec.n, probabilities(grover::expected_state(spec)));
    const std::vector<double> analytic = analytic_work_distribution(circuit, backend, spec.n);
    const metrics::PopulationDistribution analytic_dist =
        metrics::make_distribution(spec.n, analytic);

    json reps = json::array();
    std::vector<double> asps, ssos;
    for (int r = 0; r < opt.repetitions; ++r) {
        const Repetition rep = run_once(spec, circuit, backend, expected, opt.shots,
                                        derive_stream_seed(opt.seed, r));
        asps.push_back(rep.asp);
        ssos.push_back(rep.sso);
        reps.push_back(json{{"counts", counts_to_json(rep.counts)},
                            {"asp", rep.asp},
                            {"sso", rep.sso}});
    }

    json j;
    j["command"] = "run";
    j["oracle"] = json::parse(grover::to_json(spec));
    j["backend"] = backend.tag;
    j["iterations"] = opt.iterations;
    j["shots"] = opt.shots;
    j["seed"] = opt.seed;
    j["probabilities"] = distribution_to_json(analytic, spec.n);
    j["analytic_asp"] = metrics::asp(analytic_dist, spec.marked);
    j["analytic_sso"] = metrics::sso(expected, analytic_dist);
    j["theoretical_success"] =
        grover::theoretical_success(spec.marked.size(), std::uint64_t{1} << spec.n);
    j["classical_baseline"] =
        grover::classical_baseline(spec.marked.size(), std::uint64_t{1} << spec.n);
    j["repetitions"] = reps;
    if (opt.repetitions > 1) {
        j["aggregate"] = json{{"asp", summary_rows(asps)}, {"sso", summary_rows(ssos)}};
    }
    write_output(j.dump(), opt.out);
    return 0;
}

struct SweepOptions {
    std::string suite = "single";
    std::string style = "phase";
    std::string backend = "ideal";
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    int iterations = 1;
    int repetitions = 1;
    std::string format = "json";
    std::string out;
};

struct SweepRow {
    std::string marked;
    double sso_analytic = 0.0;
    double asp_analytic = 0.0;
    double sso = 0.0;
    double asp = 0.0;
};

SweepRow sweep_one(const grover::OracleSpec& spec, const BackendChoice& backend,
                   const SweepOptions& opt, std::uint64_t oracle_index) {
    const grover::GroverPlan plan{spec, opt.iterations, opt.repetitions};
    const Circuit circuit = grover::grover_circuit(plan);
    const metrics::PopulationDistribution expected =
        metrics::make_distribution(spec.n, probabilities(grover::expected_state(spec)));
    const std::vector<double> analytic = analytic_work_distribution(circuit, backend, spec.n);
    const metrics::PopulationDistribution analytic_dist =
        metrics::make_distribution(spec.n, analytic);

    SweepRow row;
    std::string sep;
    for (std::uint64_t m : spec.marked) {
        row.marked += sep + basis_label(m, spec.n);
        sep = " ";
    }
    row.sso_analytic = metrics::sso(expected, analytic_dist);
    row.asp_analytic = metrics::asp(analytic_dist, spec.marked);

    double asp_sum = 0.0, sso_sum = 0.0;
    for (int r = 0; r < opt.repetitions; ++r) {
        const Repetition rep =
            run_once(spec, circuit, backend, expected, opt.shots,
                     derive_stream_seed(opt.seed, oracle_index * 1000003ULL + r));
        asp_sum += rep.asp;
        sso_sum += rep.sso;
    }
    row.asp = asp_sum / opt.repetitions;
    row.sso = sso_sum / opt.repetitions;
    return row;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const json& summary) {
    std::ostringstream out;
    out << "marked,sso,asp,sso_analytic,asp_analytic\r\n";
    out.precision(10);
    for (const SweepRow& r : rows) {
        out << r.marked << ',' << r.sso << ',' << r.asp << ',' << r.sso_analytic << ','
            << r.asp_analytic << "\r\n";
    }
    for (const char* stat : {"median", "stdev", "mean", "se_mean"}) {
        out << stat << ',' << summary["sso"][stat].get<double>() << ','
            << summary["asp"][stat].get<double>() << ",,\r\n";
    }
    return out.str();
}

int cmd_sweep(const SweepOptions& opt) {
    if (opt.suite != "single" && opt.suite != "double") {
        throw UsageError("--suite must be \"single\" or \"double\"");
    }
    if (opt.format != "json" && opt.format != "csv") {
        throw UsageError("--format must be \"json\" or \"csv\"");
    }
    const grover::OracleStyle style =
        opt.style == "boolean" ? grover::OracleStyle::Boolean : grover::OracleStyle::Phase;
    if (opt.style != "phase" && opt.style != "boolean") {
        throw UsageError("style must be \"phase\" or \"boolean\"");
    }
    const BackendChoice backend = parse_backend(opt.backend);
    const std::vector<grover::OracleSpec> suite = opt.suite == "single"
                                                      ? grover::single_marked_suite(3, style)
                                                      : grover::two_marked_suite(style);

    // Fan out with per-oracle derived seed streams; assembly order is fixed.
    std::vector<std::future<SweepRow>> futures;
    futures.reserve(suite.size());
    for (std::size_t i = 0; i < suite.size(); ++i) {
        futures.push_back(std::async(std::launch::async, [&, i] {
            return sweep_one(suite[i], backend, opt, i);
        }));
    }
    std::vector<SweepRow> rows;
    std::vector<double> asps, ssos;
    json jrows = json::array();
    for (auto& f : futures) {
        rows.push_back(f.get());
        const SweepRow& r = rows.back();
        asps.push_back(r.asp);
        ssos.push_back(r.sso);
        jrows.push_back(json{{"marked", r.marked},
                             {"sso", r.sso},
                             {"asp", r.asp},
                             {"sso_analytic", r.sso_analytic},
                             {"asp_analytic", r.asp_analytic}});
    }
    const json summary = json{{"asp", summary_rows(asps)}, {"sso", summary_rows(ssos)}};

    if (opt.format == "csv") {
        // CSV already ends each record with CRLF.
        std::ostringstream trimmed;
        trimmed << sweep_csv(rows, summary);
        std::string text = trimmed.str();
        if (opt.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(opt.out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write to " + opt.out);
            f << text;
        }
        return 0;
    }

    json j;
    j["command"] = "sweep";
    j["suite"] = opt.suite;
    j["style"] = opt.style;
    j["backend"] = backend.tag;
    j["iterations"] = opt.iterations;
    j["repetitions"] = opt.repetitions;
    j["shots"] = opt.shots;
    j["seed"] = opt.seed;
    j["rows"] = jrows;
    j["summary"] = summary;
    write_output(j.dump(), opt.out);
    return 0;
}

struct QstOptions {
    int n = 3;
    std::string marked;
    std::string backend = "ideal";
    std::uint64_t shots_per_setting = 4096;
    bool analytic = false;
    std::uint64_t seed = 0;
    int iterations = 1;
    std::string out;
};

int cmd_qst(const QstOptions& opt) {
    const grover::OracleSpec spec = parse_oracle(opt.n, opt.marked, "phase");
    const BackendChoice backend = parse_backend(opt.backend);
    const grover::GroverPlan plan{spec, opt.iterations, 1};
    const Circuit circuit = grover::grover_circuit(plan);
    const StateVector target = grover::expected_state(spec);

    const std::uint64_t shots = opt.analytic ? 0 : opt.shots_per_setting;
    if (!opt.analytic && shots < 1) throw UsageError("--shots-per-setting must be >= 1");

    const tomo::TomographyResult result =
        tomo::run_qst(circuit, target,
                      backend.noisy ? std::optional<noise::NoiseModel>(backend.model)
                                    : std::nullopt,
                      shots, opt.seed);

    json j = json::parse(tomo::to_json(result));
    j["command"] = "qst";
    j["oracle"] = json::parse(grover::to_json(spec));
    j["backend"] = backend.tag;
    j["seed"] = opt.seed;
    write_output(j.dump(), opt.out);
    return 0;
}

struct StatsOptions {
    std::string input;
    double null_mean = 0.0;
    bool have_null_mean = false;
    double null_stdev = 0.0;
    bool have_null_stdev = false;
    std::size_t summary_n = 0;
    double summary_mean = 0.0;
    double summary_stdev = 0.0;
    bool have_summary = false;
    double alpha = 0.05;
    std::string out;
};

std::vector<double> read_value_column(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            std::size_t used = 0;
            const double v = std::stod(line, &used);
            if (used != line.size()) throw std::invalid_argument("trailing characters");
            values.push_back(v);
        } catch (const std::exception&) {
            if (lineno == 1) continue;  // header row
            throw ParseError("line " + std::to_string(lineno) + ": cannot parse \"" + line +
                             "\" as a number");
        }
    }
    return values;
}

int cmd_stats(const StatsOptions& opt) {
    json j;
    j["command"] = "stats";
    std::ostringstream table;
    table.precision(6);

    std::size_t n = 0;
    double mean = 0.0, stdev = 0.0;
    if (opt.have_summary) {
        n = opt.summary_n;
        mean = opt.summary_mean;
        stdev = opt.summary_stdev;
        j["input"] = json{{"n", n}, {"mean", mean}, {"stdev", stdev}};
        table << "Summarized input: N = " << n << ", Mean = " << mean << ", StDev = " << stdev
              << "\n";
    } else {
        if (opt.input.empty()) {
            throw UsageError("provide --input <csv> or summarized data via --summary-n/"
                             "--summary-mean/--summary-stdev");
        }
        const std::vector<double> values = read_value_column(opt.input);
        const stats::StatSummary s = stats::summarize(values);
        n = s.n;
        mean = s.mean;
        stdev = s.stdev;
        j["summary"] = json::parse(stats::to_json(s));
        table << "N       " << s.n << "\n"
              << "Median  " << s.median << "\n"
              << "StDev   " << s.stdev << "\n"
              << "Mean    " << s.mean << "\n"
              << "SE Mean " << s.se_mean << "\n";
    }

    if (opt.have_null_mean) {
        const stats::TestResult t =
            stats::t_test_mean_summary(n, mean, stdev, opt.null_mean, opt.alpha);
        j["t_test"] = json::parse(stats::to_json(t));
        table << "t-test (" << 100.0 * (1.0 - opt.alpha) << "% CI)  (" << t.ci_low << ", "
              << t.ci_high << ")\n"
              << "Hypothesis test (Mean)  P-value: " << t.p_value << "\n";
    }
    if (opt.have_null_stdev) {
        const stats::VarianceTest v =
            stats::variance_test_summary(n, stdev, opt.null_stdev, opt.alpha);
        j["variance_test"] = json::parse(stats::to_json(v));
        table << 100.0 * (1.0 - opt.alpha) << "% CI StDev  (" << v.sd_ci_low << ", "
              << v.sd_ci_high << ")\n"
              << 100.0 * (1.0 - opt.alpha) << "% CI Variance  (" << v.var_ci_low << ", "
              << v.var_ci_high << ")\n"
              << "Hypothesis test (Variance)  P-value: " << v.p_value << "\n";
    }

    std::cout << table.str();
    if (!opt.out.empty()) write_output(j.dump(), opt.out);
    return 0;
}

struct CalibOptions {
    std::string input;
    bool as_json = false;
    std::string emit_noise_model;
    std::string out;
};

std::string calibration_table(const calib::CalibrationSummary& summary) {
    static const char* const fields[] = {"T1_us",    "T2_us",  "f_GHz",    "anharmonicity_GHz",
                                         "readout_error", "P_m0p1", "P_m1p0", "t_readout_ns",
                                         "ID_error", "SX_error", "X_error", "ECR_error"};
    static const char* const rows[] = {"Mean", "StDev", "Min.", "25%", "Median", "75%", "Max."};
    std::ostringstream out;
    out.precision(6);
    out << "Properties";
    for (const char* f : fields) {
        if (summary.fields.count(f)) out << '\t' << f;
    }
    out << '\n';
    for (int r = 0; r < 7; ++r) {
        out << rows[r];
        for (const char* fname : fields) {
            const auto it = summary.fields.find(fname);
            if (it == summary.fields.end()) continue;
            const calib::FieldSummary& f = it->second;
            const double v = r == 0   ? f.mean
                             : r == 1 ? f.stdev
                             : r == 2 ? f.min
                             : r == 3 ? f.q25
                             : r == 4 ? f.median
                             : r == 5 ? f.q75
                                      : f.max;
            out << '\t' << v;
        }
        out << '\n';
    }
    return out.str();
}

int cmd_calib(const CalibOptions& opt) {
    const std::vector<calib::CalibrationRecord> records = calib::load_calibration(opt.input);
    const calib::CalibrationSummary summary = calib::summarize_calibration(records);

    if (!opt.emit_noise_model.empty()) {
        const noise::NoiseModel model = noise::from_calibration_with_readout_length(summary);
        for (const std::string& w : model.warnings) std::cerr << "warning: " << w << "\n";
        write_output(noise::to_json(model), opt.emit_noise_model);
    }
    if (opt.as_json || !opt.out.empty()) {
        write_output(calib::to_json(summary), opt.out);
    }
    if (!opt.as_json && opt.out.empty()) {
        std::cout << calibration_table(summary);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grover search simulation and characterization toolkit"};
    app.require_subcommand(1);

    std::string kernels = "auto";
    app.add_option("--kernels", kernels, "Kernel backend: auto, scalar, avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "Run one Grover experiment");
    run->add_option("--n", run_opt.n, "Work-register width")->default_val(3);
    run->add_option("--marked", run_opt.marked, "Comma-separated marked labels, e.g. 000,111")
        ->required();
    run->add_option("--style", run_opt.style, "Oracle style: phase or boolean");
    run->add_option("--backend", run_opt.backend, "ideal | noisy:default | noisy:<file>");
    run->add_option("--shots", run_opt.shots, "Shots per repetition")->default_val(100000);
    run->add_option("--iterations", run_opt.iterations, "Grover iterations")->default_val(1);
    run->add_option("--repetitions", run_opt.repetitions, "Independent repeats")->default_val(1);
    run->add_option("--seed", run_opt.seed, "RNG seed (required for sampling)")
        ->envname("GSA_SEED")
        ->required();
    run->add_option("--out", run_opt.out, "Write JSON here instead of stdout");

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "Run the single- or two-marked suite");
    sweep->add_option("--suite", sweep_opt.suite, "single | double")->required();
    sweep->add_option("--style", sweep_opt.style, "Oracle style: phase or boolean");
    sweep->add_option("--backend", sweep_opt.backend, "ideal | noisy:default | noisy:<file>");
    sweep->add_option("--shots", sweep_opt.shots, "Shots per repetition")->default_val(100000);
    sweep->add_option("--iterations", sweep_opt.iterations, "Grover iterations")->default_val(1);
    sweep->add_option("--repetitions", sweep_opt.repetitions, "Independent repeats per oracle")
        ->default_val(1);
    sweep->add_option("--seed", sweep_opt.seed, "RNG seed")->envname("GSA_SEED")->required();
    sweep->add_option("--format", sweep_opt.format, "json | csv");
    sweep->add_option("--out", sweep_opt.out, "Write output here instead of stdout");

    QstOptions qst_opt;
    CLI::App* qst = app.add_subcommand("qst", "Quantum state tomography of a Grover run");
    qst->add_option("--n", qst_opt.n, "Work-register width")->default_val(3);
    qst->add_option("--marked", qst_opt.marked, "Comma-separated marked labels")->required();
    qst->add_option("--backend", qst_opt.backend, "ideal | noisy:default | noisy:<file>");
    qst->add_option("--shots-per-setting", qst_opt.shots_per_setting,
                    "Shots per basis setting (paper presets: 1024, 7779, 7797)")
        ->default_val(4096);
    qst->add_flag("--analytic", qst_opt.analytic, "Infinite-shot mode (exact distributions)");
    qst->add_option("--iterations", qst_opt.iterations, "Grover iterations")->default_val(1);
    qst->add_option("--seed", qst_opt.seed, "RNG seed")->envname("GSA_SEED");
    qst->add_option("--out", qst_opt.out, "Write JSON here instead of stdout");

    StatsOptions stats_opt;
    CLI::App* stats_cmd = app.add_subcommand("stats", "Summary statistics and hypothesis tests");
    stats_cmd->add_option("--input", stats_opt.input, "CSV file with one value per line");
    auto* mean_opt = stats_cmd->add_option("--mean", stats_opt.null_mean, "Null mean for the t test");
    auto* sd_opt =
        stats_cmd->add_option("--stdev", stats_opt.null_stdev, "Null stdev for the variance test");
    auto* sn = stats_cmd->add_option("--summary-n", stats_opt.summary_n, "Summarized-data n");
    auto* sm =
        stats_cmd->add_option("--summary-mean", stats_opt.summary_mean, "Summarized-data mean");
    auto* ss =
        stats_cmd->add_option("--summary-stdev", stats_opt.summary_stdev, "Summarized-data stdev");
    stats_cmd->add_option("--alpha", stats_opt.alpha, "Test level")->default_val(0.05);
    stats_cmd->add_option("--out", stats_opt.out, "Write JSON here");

    CalibOptions calib_opt;
    CLI::App* calib_cmd = app.add_subcommand("calib", "Summarize a calibration CSV");
    calib_cmd->add_option("file", calib_opt.input, "Calibration CSV path")->required();
    calib_cmd->add_flag("--json", calib_opt.as_json, "Emit the summary as JSON");
    calib_cmd->add_option("--emit-noise-model", calib_opt.emit_noise_model,
                          "Write a NoiseModel JSON built from the medians");
    calib_cmd->add_option("--out", calib_opt.out, "Write the JSON summary here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (kernels == "scalar") {
            kernels::set_backend(kernels::Backend::Scalar);
        } else if (kernels == "avx2") {
            kernels::set_backend(kernels::Backend::Avx2);
        }

        if (run->parsed()) return cmd_run(run_opt);
        if (sweep->parsed()) return cmd_sweep(sweep_opt);
        if (qst->parsed()) {
            if (!qst_opt.analytic && qst->count("--seed") == 0 &&
                std::getenv("GSA_SEED") == nullptr) {
                throw UsageError("sampled QST needs --seed (or GSA_SEED)");
            }
            return cmd_qst(qst_opt);
        }
        if (stats_cmd->parsed()) {
            stats_opt.have_null_mean = mean_opt->count() > 0;
            stats_opt.have_null_stdev = sd_opt->count() > 0;
            stats_opt.have_summary = sn->count() > 0 || sm->count() > 0 || ss->count() > 0;
            if (stats_opt.have_summary &&
                (sn->count() == 0 || sm->count() == 0 || ss->count() == 0)) {
                throw UsageError("summarized input needs all of --summary-n, --summary-mean, "
                                 "--summary-stdev");
            }
            return cmd_stats(stats_opt);
        }
        if (calib_cmd->parsed()) return cmd_calib(calib_opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
