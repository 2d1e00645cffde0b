// Copyright 2026 toric3d Contributors
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

// toric3d command line: code info, single-instance decoding, Monte Carlo sweeps.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toric3d/decoder_matching.h"
#include "toric3d/harness.h"

using namespace toric3d;

namespace {

struct CodeArgs {
    std::string family = "solid";
    int ell = 2;
    int R = 1;
};

void add_code_options(CLI::App *cmd, CodeArgs &a) {
    cmd->add_option("--family", a.family, "periodic3d, solid or welded")
        ->check(CLI::IsMember({"periodic3d", "solid", "welded"}));
    cmd->add_option("--ell", a.ell, "lattice size");
    cmd->add_option("--R", a.R, "solids per direction (welded)");
}

CodeSpec build_from(const CodeArgs &a) {
    SimConfig c;
    c.family = parse_family(a.family);
    c.ell = a.ell;
    c.R = a.R;
    validate(c);
    try {
        return build_code(c.family, c.ell, c.R);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

size_t weight(const std::vector<uint32_t> &support) {
    return support.size();
}

int cmd_info(const CodeArgs &a) {
    CodeSpec c = build_from(a);
    CodeDimensions d = code_dimensions(c);
    std::cout << "family " << family_name(c.family) << "\n";
    std::cout << "ell " << c.ell << "\n";
    if (c.family == CodeFamily::welded) {
        std::cout << "R " << c.R << "\n";
    }
    std::cout << "n " << c.n << "\n";
    std::cout << "k " << d.k << "\n";
    std::cout << "x_checks " << c.num_x_checks() << " (rank " << d.rank_h << ")\n";
    std::cout << "z_checks " << c.num_z_checks() << " (rank " << d.rank_t << ")\n";
    size_t welded = 0;
    for (const auto &m : c.qubit_meta) {
        welded += m.welded;
    }
    if (c.family == CodeFamily::welded) {
        std::cout << "welded_qubits " << welded << "\n";
    }
    std::cout << "logical_z_weights";
    for (const auto &l : c.logicals_z) {
        std::cout << " " << weight(l);
    }
    std::cout << "\nlogical_x_weights";
    for (const auto &l : c.logicals_x) {
        std::cout << " " << weight(l);
    }
    std::cout << "\n";
    return 0;
}

// one qubit per line, optionally followed by I/X/Y/Z; '#' starts a comment
struct PatternEntry {
    uint32_t q;
    char pauli;
};

std::vector<PatternEntry> read_pattern(const std::string &path, size_t n) {
    std::ifstream f(path);
    if (!f) {
        throw IoError("cannot read '" + path + "'");
    }
    std::vector<PatternEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        lineno++;
        line = line.substr(0, line.find('#'));
        std::istringstream in(line);
        long long q;
        if (!(in >> q)) {
            continue;
        }
        std::string p = "I";
        in >> p;
        if (q < 0 || (size_t)q >= n || p.size() != 1 || std::string("IXYZ").find(p[0]) == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": bad entry");
        }
        out.push_back({(uint32_t)q, p[0]});
    }
    return out;
}

void print_support(const char *label, const Bits &v) {
    std::cout << label;
    for (size_t q = 0; q < v.size(); q++) {
        if (v[q]) {
            std::cout << " " << q;
        }
    }
    std::cout << "\n";
}

int cmd_decode(const CodeArgs &a, const std::string &channel_text, const std::string &input, const DecoderFlags &flags) {
    Channel channel = parse_channel(channel_text);
    SimConfig cfg;
    cfg.family = parse_family(a.family);
    cfg.ell = a.ell;
    cfg.R = a.R;
    cfg.channel = channel;
    cfg.flags = flags;
    validate(cfg);
    auto code = std::make_shared<const CodeSpec>(build_from(a));
    const CodeSpec &c = *code;
    std::vector<PatternEntry> pattern = read_pattern(input, c.n);
    TrialRunner runner(code, flags);

    TrialOutcome o;
    if (channel == Channel::erasure) {
        std::vector<uint32_t> erased;
        PauliFrame induced = PauliFrame::zeros(c.n);
        for (const auto &e : pattern) {
            erased.push_back(e.q);
            induced.x[e.q] = e.pauli == 'X' || e.pauli == 'Y';
            induced.z[e.q] = e.pauli == 'Z' || e.pauli == 'Y';
        }
        std::sort(erased.begin(), erased.end());
        erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
        ErasureSample sample = make_erasure(c.n, erased, induced);
        o = runner.decode_erasure_sample(sample);
        std::cout << "erased " << erased.size() << "\n";
    } else {
        PauliFrame err = PauliFrame::zeros(c.n);
        for (const auto &e : pattern) {
            (channel == Channel::bitflip ? err.x : err.z)[e.q] ^= 1;
        }
        Syndrome s = syndrome(c, err);
        PauliFrame res = PauliFrame::zeros(c.n);
        if (channel == Channel::phaseflip) {
            Bits est = decode_phase(c, s.sigma);
            print_support("estimate", est);
            for (size_t q = 0; q < c.n; q++) {
                res.z[q] = err.z[q] ^ est[q];
            }
            o.z_failed = is_logical_failure(c, res).z_failed;
        } else {
            ToomOptions opts;
            opts.i_max = flags.i_max;
            opts.j_max = flags.j_max;
            BitflipDecodeResult r = decode_bitflip(c, s.tau, opts);
            print_support("estimate", r.estimate);
            if (r.decoder_failure) {
                o.decoder_failure = true;
            } else {
                for (size_t q = 0; q < c.n; q++) {
                    res.x[q] = err.x[q] ^ r.estimate[q];
                }
                o.x_failed = is_logical_failure(c, res).x_failed;
            }
        }
    }
    const char *verdict = o.decoder_failure ? "decoder_failure"
                          : o.z_failed && o.x_failed ? "both"
                          : o.z_failed ? "z_fail"
                          : o.x_failed ? "x_fail"
                                       : "success";
    std::cout << "outcome " << verdict << "\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"3D toric code construction, decoding and threshold sweeps"};
    app.require_subcommand(1);

    CodeArgs info_args;
    auto *info = app.add_subcommand("info", "print code parameters");
    add_code_options(info, info_args);

    CodeArgs dec_args;
    std::string dec_channel = "erasure", dec_input, dec_policy = "", dec_variant = "freeze_first";
    DecoderFlags dec_flags;
    auto *decode = app.add_subcommand("decode", "decode one error or erasure pattern read from a file");
    add_code_options(decode, dec_args);
    decode->add_option("--channel", dec_channel)->check(CLI::IsMember({"bitflip", "phaseflip", "erasure"}));
    decode->add_option("--input", dec_input, "qubit indices, one per line, optional Pauli for erasures")
        ->required();
    decode->add_option("--imax", dec_flags.i_max);
    decode->add_option("--jmax", dec_flags.j_max);
    decode->add_option("--stuck-policy", dec_policy)->check(CLI::IsMember({"declare_failure", "fail", "gauss"}));
    decode->add_option("--variant", dec_variant)->check(CLI::IsMember({"freeze_first", "alternating"}));

    CodeArgs sim_args;
    SimConfig cfg;
    std::string sim_channel = "erasure", sim_policy = "", sim_variant = "freeze_first";
    bool quiet = false;
    auto *sim = app.add_subcommand("simulate", "Monte Carlo sweep over physical error rates");
    add_code_options(sim, sim_args);
    sim->add_option("--channel", sim_channel)->check(CLI::IsMember({"bitflip", "phaseflip", "erasure"}));
    sim->add_option("--p-min", cfg.p_min);
    sim->add_option("--p-max", cfg.p_max);
    sim->add_option("--p-steps", cfg.p_steps);
    sim->add_option("--trials", cfg.trials, "trials per point")->capture_default_str();
    sim->add_option("--seed", cfg.seed)->capture_default_str();
    sim->add_option("--workers", cfg.workers, "0: all cores")->capture_default_str();
    sim->add_option("--out", cfg.out, "CSV output path");
    sim->add_option("--imax", cfg.flags.i_max, "0: ceil(ell/2)");
    sim->add_option("--jmax", cfg.flags.j_max, "0: ell");
    sim->add_option("--stuck-policy", sim_policy, "default declare_failure, gauss for welded codes")
        ->check(CLI::IsMember({"declare_failure", "fail", "gauss"}));
    sim->add_option("--variant", sim_variant)->check(CLI::IsMember({"freeze_first", "alternating"}));
    sim->add_flag("--paired-baseline", cfg.flags.paired_baseline, "also decode each sample by plain elimination");
    sim->add_flag("--timing", cfg.timing, "record elapsed_ms (output no longer reproducible)");
    sim->add_flag("--quiet", quiet);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*info) {
            return cmd_info(info_args);
        }
        if (*decode) {
            if (!dec_policy.empty()) {
                dec_flags.stuck_policy = parse_stuck_policy(dec_policy);
            }
            dec_flags.variant = parse_z_variant(dec_variant);
            return cmd_decode(dec_args, dec_channel, dec_input, dec_flags);
        }
        cfg.family = parse_family(sim_args.family);
        cfg.ell = sim_args.ell;
        cfg.R = sim_args.R;
        cfg.channel = parse_channel(sim_channel);
        if (!sim_policy.empty()) {
            cfg.flags.stuck_policy = parse_stuck_policy(sim_policy);
        }
        cfg.flags.variant = parse_z_variant(sim_variant);
        if (sim->count("--p-max") == 0) {
            cfg.p_max = cfg.p_min;
        }
        auto progress = [&](size_t, const SimResult &r) {
            if (!quiet) {
                std::cerr << r.label << " ell=" << r.ell << " R=" << r.R << " p=" << r.p << " failures=" << r.failures
                          << "/" << r.trials << "\n";
            }
        };
        std::vector<SimResult> results = run_sweep(cfg, progress);
        if (cfg.out.empty()) {
            std::cout << to_csv(results);
        }
        return 0;
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
