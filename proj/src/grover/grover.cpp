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

#include "groverlab/grover/grover.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "groverlab/core/simulate.hpp"
#include "groverlab/errors.hpp"

namespace groverlab::grover {

namespace {

void validate_spec(const OracleSpec& spec) {
    if (spec.n < 1 || spec.n > kStateVectorQubitCap) {
        throw std::invalid_argument("oracle width " + std::to_string(spec.n) +
                                    " outside supported range");
    }
    const std::uint64_t space = std::uint64_t{1} << spec.n;
    if (spec.marked.empty()) throw std::invalid_argument("oracle needs at least one marked state");
    if (spec.marked.size() >= space) {
        throw std::invalid_argument("marked set must leave at least one unmarked state");
    }
    std::set<std::uint64_t> seen;
    for (std::uint64_t m : spec.marked) {
        if (m >= space) {
            throw std::invalid_argument("marked state " + std::to_string(m) +
                                        " outside a " + std::to_string(spec.n) +
                                        "-qubit space");
        }
        if (!seen.insert(m).second) {
            throw std::invalid_argument("marked state " + basis_label(m, spec.n) + " repeated");
        }
    }
}

std::vector<int> all_qubits(int n) {
    std::vector<int> qs(n);
    for (int q = 0; q < n; ++q) qs[q] = q;
    return qs;
}

// X on every work qubit whose bit in `marked` is zero.
void add_zero_bit_conjugation(Circuit& c, int n, std::uint64_t marked) {
    for (int q = 0; q < n; ++q) {
        if (((marked >> q) & 1) == 0) c.add(GateKind::X, {q});
    }
}

void add_register_mcz(Circuit& c, int n) {
    if (n == 1) {
        c.add(GateKind::Z, {0});
    } else if (n == 2) {
        c.add(GateKind::CZ, {0, 1});
    } else {
        c.add(GateKind::MCZ, all_qubits(n));
    }
}

// One phase-flip block per marked state, without ancilla bookkeeping.
void add_phase_oracle_body(Circuit& c, const OracleSpec& spec) {
    for (std::uint64_t m : spec.marked) {
        add_zero_bit_conjugation(c, spec.n, m);
        add_register_mcz(c, spec.n);
        add_zero_bit_conjugation(c, spec.n, m);
    }
}

// Kickback blocks onto ancilla q_n, without the |-> preparation.
void add_boolean_oracle_body(Circuit& c, const OracleSpec& spec) {
    const int ancilla = spec.n;
    for (std::uint64_t m : spec.marked) {
        add_zero_bit_conjugation(c, spec.n, m);
        std::vector<int> operands = all_qubits(spec.n);
        operands.push_back(ancilla);
        if (spec.n == 1) {
            c.add(GateKind::CX, operands);
        } else {
            c.add(GateKind::MCX, operands);
        }
        add_zero_bit_conjugation(c, spec.n, m);
    }
}

void add_diffusion_body(Circuit& c, int n) {
    for (int q = 0; q < n; ++q) c.add(GateKind::H, {q});
    for (int q = 0; q < n; ++q) c.add(GateKind::X, {q});
    add_register_mcz(c, n);
    for (int q = 0; q < n; ++q) c.add(GateKind::X, {q});
    for (int q = 0; q < n; ++q) c.add(GateKind::H, {q});
}

}  // namespace

OracleSpec make_oracle_spec(int n, const std::vector<std::string>& marked_labels,
                            OracleStyle style) {
    std::vector<std::uint64_t> marked;
    marked.reserve(marked_labels.size());
    for (const std::string& label : marked_labels) {
        if (static_cast<int>(label.size()) != n) {
            throw std::invalid_argument("marked label \"" + label + "\" is not " +
                                        std::to_string(n) + " bits long");
        }
        marked.push_back(parse_basis_label(label));
    }
    return make_oracle_spec(n, std::move(marked), style);
}

OracleSpec make_oracle_spec(int n, std::vector<std::uint64_t> marked, OracleStyle style) {
    std::sort(marked.begin(), marked.end());
    OracleSpec spec{n, std::move(marked), style};
    validate_spec(spec);
    return spec;
}

OracleSpec oracle_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("oracle spec JSON: ") + e.what());
    }
    if (!j.contains("n")) throw SchemaError("oracle spec missing field \"n\"");
    if (!j.contains("marked")) throw SchemaError("oracle spec missing field \"marked\"");
    const int n = j.at("n").get<int>();
    std::vector<std::string> labels = j.at("marked").get<std::vector<std::string>>();
    OracleStyle style = OracleStyle::Phase;
    if (j.contains("style")) {
        const std::string s = j.at("style").get<std::string>();
        if (s == "phase") {
            style = OracleStyle::Phase;
        } else if (s == "boolean") {
            style = OracleStyle::Boolean;
        } else {
            throw SchemaError("oracle style must be \"phase\" or \"boolean\", got \"" + s + "\"");
        }
    }
    return make_oracle_spec(n, labels, style);
}

std::string to_json(const OracleSpec& spec) {
    nlohmann::json j;
    j["n"] = spec.n;
    std::vector<std::string> labels;
    labels.reserve(spec.marked.size());
    for (std::uint64_t m : spec.marked) labels.push_back(basis_label(m, spec.n));
    j["marked"] = labels;
    j["style"] = spec.style == OracleStyle::Phase ? "phase" : "boolean";
    return j.dump();
}

Circuit phase_oracle(const OracleSpec& spec) {
    validate_spec(spec);
    if (spec.style != OracleStyle::Phase) {
        throw std::invalid_argument("phase_oracle called with a non-phase spec");
    }
    Circuit c(spec.n);
    add_phase_oracle_body(c, spec);
    return c;
}

Circuit boolean_oracle(const OracleSpec& spec) {
    validate_spec(spec);
    if (spec.style != OracleStyle::Boolean) {
        throw std::invalid_argument("boolean_oracle called with a non-boolean spec");
    }
    Circuit c(spec.n + 1);
    const int ancilla = spec.n;
    c.add(GateKind::X, {ancilla});
    c.add(GateKind::H, {ancilla});
    add_boolean_oracle_body(c, spec);
    return c;
}

Circuit diffusion(int n) {
    if (n < 1) throw std::invalid_argument("diffusion needs n >= 1");
    Circuit c(n);
    add_diffusion_body(c, n);
    return c;
}

Circuit grover_circuit(const GroverPlan& plan) {
    validate_spec(plan.oracle);
    if (plan.iterations < 0) throw std::invalid_argument("iterations must be >= 0");
    const OracleSpec& spec = plan.oracle;
    const bool boolean = spec.style == OracleStyle::Boolean;
    Circuit c(boolean ? spec.n + 1 : spec.n);

    if (boolean) {
        // Ancilla goes to |-> exactly once; the kickback blocks leave it there.
        c.add(GateKind::X, {spec.n});
        c.add(GateKind::H, {spec.n});
    }
    for (int q = 0; q < spec.n; ++q) c.add(GateKind::H, {q});
    for (int it = 0; it < plan.iterations; ++it) {
        if (boolean) {
            add_boolean_oracle_body(c, spec);
        } else {
            add_phase_oracle_body(c, spec);
        }
        // Diffusion touches only the work register.
        Circuit d(c.width());
        add_diffusion_body(d, spec.n);
        c.append(d);
    }
    return c;
}

StateVector expected_state(const OracleSpec& spec) {
    validate_spec(spec);
    const std::uint64_t space = std::uint64_t{1} << spec.n;
    const double s = static_cast<double>(space);
    const double k = static_cast<double>(spec.marked.size());
    const double inv_sqrt = 1.0 / std::sqrt(s);
    // After the oracle the mean amplitude is mu = (S - 2k) / (S sqrt(S));
    // inversion about the mean leaves 2 mu + 1/sqrt(S) on marked states and
    // 2 mu - 1/sqrt(S) elsewhere.
    const double two_mu = 2.0 * (s - 2.0 * k) / s * inv_sqrt;
    const double marked_amp = two_mu + inv_sqrt;
    const double unmarked_amp = two_mu - inv_sqrt;

    std::vector<Complex> amps(space, Complex{unmarked_amp, 0.0});
    for (std::uint64_t m : spec.marked) amps[m] = Complex{marked_amp, 0.0};

    double norm = 0.0;
    for (const Complex& a : amps) norm += std::norm(a);
    const double scale = 1.0 / std::sqrt(norm);
    for (Complex& a : amps) a *= scale;
    return make_state(spec.n, std::move(amps));
}

double theoretical_success(std::uint64_t k, std::uint64_t space) {
    if (space < 2 || (space & (space - 1)) != 0) {
        throw std::invalid_argument("search-space size must be a power of two >= 2");
    }
    if (k < 1 || k >= space) {
        throw std::invalid_argument("marked count must satisfy 1 <= k < space");
    }
    const double s = static_cast<double>(space);
    const double kk = static_cast<double>(k);
    const double bracket = (s - 2.0 * kk) / s + 2.0 * (s - kk) / s;
    const double amp = bracket / std::sqrt(s);
    return kk * amp * amp;
}

double classical_baseline(std::uint64_t k, std::uint64_t space) {
    if (space < 2) throw std::invalid_argument("space must have at least two answers");
    if (k < 1 || k >= space) {
        throw std::invalid_argument("correct-answer count must satisfy 1 <= k < space");
    }
    const double s = static_cast<double>(space);
    const double kk = static_cast<double>(k);
    return kk / s + (1.0 - kk / s) * kk / (s - 1.0);
}

std::vector<double> work_register_probabilities(const StateVector& state, int n_work) {
    if (n_work < 1 || n_work > state.n) {
        throw std::invalid_argument("work register width out of range");
    }
    const std::uint64_t work_dim = std::uint64_t{1} << n_work;
    const std::vector<double> full = probabilities(state);
    std::vector<double> out(work_dim, 0.0);
    for (std::size_t i = 0; i < full.size(); ++i) {
        out[i & (work_dim - 1)] += full[i];
    }
    return out;
}

std::vector<OracleSpec> single_marked_suite(int n, OracleStyle style) {
    std::vector<OracleSpec> suite;
    const std::uint64_t space = std::uint64_t{1} << n;
    suite.reserve(space);
    for (std::uint64_t m = 0; m < space; ++m) {
        suite.push_back(make_oracle_spec(n, std::vector<std::uint64_t>{m}, style));
    }
    return suite;
}

std::vector<OracleSpec> two_marked_suite(OracleStyle style) {
    static const std::vector<std::pair<const char*, const char*>> pairs = {
        {"000", "111"}, {"001", "100"}, {"011", "100"},
        {"010", "111"}, {"000", "110"}, {"010", "101"},
        {"101", "110"}, {"101", "111"}, {"100", "111"},
    };
    std::vector<OracleSpec> suite;
    suite.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        suite.push_back(make_oracle_spec(3, std::vector<std::string>{a, b}, style));
    }
    return suite;
}

}  // namespace groverlab::grover
