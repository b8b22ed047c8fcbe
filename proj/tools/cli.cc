// Copyright 2026 The qudit-mub Authors
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

#include "cli.h"

#include <filesystem>
#include <fstream>

#include "CLI11.hpp"
#include "qudit_mub/fidelity_mc.h"
#include "qudit_mub/gates.h"
#include "qudit_mub/json_io.h"

namespace qmub {

namespace {

struct Config {
    std::vector<int> dims;
    double tol = kMatchTol;
    bool json = false;
    std::string out_path;
    std::string basis_file;
    int knight_d = 0;
    int knight_b = 0;
    std::string gate;
    std::string channel;
    uint64_t samples = 1000;
    uint64_t seed = 0;
    int shots = 0;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

UnitaryGate load_gate(const Config &cfg) {
    if (std::filesystem::is_regular_file(cfg.gate)) {
        UnitaryGate g = gate_from_json(read_json_file(cfg.gate));
        if (!cfg.dims.empty() && cfg.dims != g.dims()) {
            throw UsageError("--dims disagrees with the gate file");
        }
        return g;
    }
    if (cfg.dims.empty()) {
        throw UsageError("--dims is required for named gates");
    }
    return gate_from_name(cfg.gate, cfg.dims);
}

double parse_parameter(const std::string &spec, size_t colon) {
    std::string s = spec.substr(colon + 1);
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw UsageError("channel '" + spec + "': bad parameter");
    }
    return v;
}

/// Named noise is applied after the ideal gate; files and unitary:NAME describe the
/// whole implemented operation.
QuantumChannel load_channel(const std::string &spec, const UnitaryGate &u) {
    if (std::filesystem::is_regular_file(spec)) {
        return channel_from_json(read_json_file(spec));
    }
    if (spec.starts_with("unitary:")) {
        return unitary_error(gate_from_name(spec.substr(8), u.dims()));
    }
    if (spec == "identity") {
        return after_gate(identity_channel(u.dims()), u);
    }
    size_t colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    if (colon == std::string::npos) {
        throw UsageError("unknown channel '" + spec + "'");
    }
    double p = parse_parameter(spec, colon);
    if (kind == "depolarizing") {
        return after_gate(depolarizing(u.dims(), p), u);
    }
    if (kind == "local_depolarizing") {
        return after_gate(local_depolarizing(u.dims(), p), u);
    }
    if (kind == "dephasing") {
        return after_gate(dephasing(u.dims(), p), u);
    }
    throw UsageError("unknown channel '" + spec + "'");
}

OperatorBasis basis_for(const std::vector<int> &dims) {
    if (dims.empty()) {
        throw UsageError("--dims is required");
    }
    for (int d : dims) {
        if (d < 2) {
            throw UsageError("dimensions must be >= 2");
        }
    }
    if (dims.size() == 1 && !is_prime(dims[0])) {
        return build_composite_basis(dims[0]);
    }
    return build_tensor_basis(dims);
}

int cmd_basis(const Config &cfg, Json &report) {
    report = to_json(basis_for(cfg.dims));
    return kExitOk;
}

int cmd_verify(const Config &cfg, Json &report) {
    OperatorBasis basis = basis_from_json(read_json_file(cfg.basis_file));
    BasisAudit audit = audit_basis(basis);
    report = to_json(audit);
    return audit.pass() ? kExitOk : kExitFailed;
}

int cmd_partition(const Config &cfg, Json &report) {
    if (cfg.dims.size() != 1 || !is_prime(cfg.dims[0])) {
        throw UsageError("partition needs a single prime dimension");
    }
    MubCollection c = partition_basis(build_basis(cfg.dims[0]));
    MubReport r = verify_mub(c);
    report = to_json(c, r);
    return r.pass ? kExitOk : kExitFailed;
}

int cmd_knight(const Config &cfg, Json &report) {
    int d = cfg.knight_d;
    if (d < 3) {
        throw UsageError("knight needs --d >= 3");
    }
    std::vector<int> steps;
    if (cfg.knight_b != 0) {
        if (cfg.knight_b < 2 || cfg.knight_b > d - 1) {
            throw UsageError("--b must lie in [2, d-1]");
        }
        steps.push_back(cfg.knight_b);
    } else {
        for (int b = 2; b < d; b++) {
            steps.push_back(b);
        }
    }
    bool prime = is_prime(d);
    bool ok = true;
    Json matrices = Json::array();
    for (int b : steps) {
        KnightResult k = knight_move_unitary(d, b);
        std::optional<DiagonalReport> diag;
        if (k.valid()) {
            diag = verify_diagonal_property(k.placement);
            ok = ok && diag->pass;
        } else {
            ok = ok && !prime;
        }
        matrices.push_back(to_json(k, diag));
    }
    report = Json{{"d", d}, {"prime", prime}, {"matrices", matrices}};
    if (prime && d <= kMaxKnightSearchDimension) {
        KnightCount count = count_knight_unitaries(d);
        report["search"] = to_json(count);
        ok = ok && count.count_matches && count.set_matches;
    }
    report["pass"] = ok;
    return ok ? kExitOk : kExitFailed;
}

int cmd_classify(const Config &cfg, Json &report) {
    UnitaryGate u = load_gate(cfg);
    OperatorBasis basis = basis_for(u.dims());
    report = to_json(classify(u, basis, cfg.tol), basis);
    return kExitOk;
}

int cmd_estimate(const Config &cfg, Json &report) {
    UnitaryGate u = load_gate(cfg);
    QuantumChannel ch = load_channel(cfg.channel, u);
    OperatorBasis basis = basis_for(u.dims());
    FidelityEstimate e = mc_estimate(u, ch, basis, cfg.samples, cfg.seed, McOptions{cfg.shots});
    report = to_json(e);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Operator bases, mutually unbiased bases and gate fidelity estimation for qudits", "qudit-mub"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App *sub) {
        sub->add_flag("--json", cfg.json, "Emit JSON instead of text");
        sub->add_option("--out", cfg.out_path, "Write the report to this file");
        sub->add_option("--tol", cfg.tol, "Match tolerance")->check(CLI::PositiveNumber);
    };
    auto add_dims = [&](CLI::App *sub, bool required) {
        auto *o = sub->add_option("--dims", cfg.dims, "Factor dimensions, e.g. 3 or 3,3")->delimiter(',');
        if (required) {
            o->required();
        }
    };

    auto *basis = app.add_subcommand("basis", "Build the generalized Pauli operator basis");
    add_dims(basis, true);
    add_common(basis);

    auto *verify = app.add_subcommand("verify", "Audit a basis JSON file");
    verify->add_option("file", cfg.basis_file, "Basis JSON")->required();
    add_common(verify);

    auto *partition = app.add_subcommand("partition", "Split the basis into commuting families and check unbiasedness");
    add_dims(partition, true);
    add_common(partition);

    auto *knight = app.add_subcommand("knight", "Knight-move basis-change matrices");
    knight->add_option("--d", cfg.knight_d, "Dimension")->required();
    knight->add_option("--b", cfg.knight_b, "Knight step in [2, d-1]; all steps if omitted");
    add_common(knight);

    auto *cls = app.add_subcommand("classify", "Classify a gate against the operator basis");
    cls->add_option("--gate", cfg.gate, "Gate name or JSON file")->required();
    add_dims(cls, false);
    add_common(cls);

    auto *est = app.add_subcommand("estimate", "Monte Carlo average gate fidelity estimate");
    est->add_option("--gate", cfg.gate, "Gate name or JSON file")->required();
    est->add_option("--channel", cfg.channel, "NAME:PARAM, unitary:GATE or a channel JSON file")->required();
    est->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::PositiveNumber);
    est->add_option("--seed", cfg.seed, "Random seed");
    est->add_option("--shots", cfg.shots, "Shots per input state; 0 for exact expectations")
        ->check(CLI::NonNegativeNumber);
    add_dims(est, false);
    add_common(est);

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Json report;
    int code = kExitOk;
    try {
        if (*basis) {
            code = cmd_basis(cfg, report);
        } else if (*verify) {
            code = cmd_verify(cfg, report);
        } else if (*partition) {
            code = cmd_partition(cfg, report);
        } else if (*knight) {
            code = cmd_knight(cfg, report);
        } else if (*cls) {
            code = cmd_classify(cfg, report);
        } else {
            code = cmd_estimate(cfg, report);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string text = cfg.json ? report.dump(2) + "\n" : render_text(report);
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write '" << cfg.out_path << "'\n";
            return kExitUsage;
        }
        f << text;
    }
    return code;
}

}  // namespace qmub
