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

#include "toric3d/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "toric3d/decoder_matching.h"
#include "toric3d/decoder_welded.h"

namespace toric3d {

namespace {

Bits xor_bits(const Bits &a, const Bits &b) {
    Bits out(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        out[i] = a[i] ^ b[i];
    }
    return out;
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// per-point counters, merged across workers
struct Tally {
    uint64_t failures = 0, z = 0, x = 0, dec = 0;

    void add(const TrialOutcome &o) {
        failures += o.failed();
        z += o.z_failed;
        x += o.x_failed;
        dec += o.decoder_failure;
    }
    void merge(const Tally &o) {
        failures += o.failures;
        z += o.z;
        x += o.x;
        dec += o.dec;
    }
};

}  // namespace

std::string channel_name(Channel c) {
    switch (c) {
        case Channel::bitflip:
            return "bitflip";
        case Channel::phaseflip:
            return "phaseflip";
        case Channel::erasure:
            return "erasure";
    }
    return "?";
}

Channel parse_channel(const std::string &text) {
    for (Channel c : {Channel::bitflip, Channel::phaseflip, Channel::erasure}) {
        if (text == channel_name(c)) {
            return c;
        }
    }
    throw std::invalid_argument("unknown channel '" + text + "'");
}

StuckPolicy effective_stuck_policy(CodeFamily family, const DecoderFlags &flags) {
    if (flags.stuck_policy) {
        return *flags.stuck_policy;
    }
    return family == CodeFamily::welded ? StuckPolicy::gauss : StuckPolicy::declare_failure;
}

void validate(const SimConfig &c) {
    if (c.ell < 1) {
        throw ConfigError("ell must be >= 1");
    }
    if (c.family == CodeFamily::periodic3d && c.ell < 2) {
        throw ConfigError("periodic codes need ell >= 2");
    }
    if (c.R < 1) {
        throw ConfigError("R must be >= 1");
    }
    if (c.family != CodeFamily::welded && c.R != 1) {
        throw ConfigError("R applies to welded codes only");
    }
    if (c.channel != Channel::erasure && c.family != CodeFamily::solid) {
        throw ConfigError(channel_name(c.channel) + " channel is only supported on solid codes");
    }
    if (c.flags.paired_baseline && c.channel != Channel::erasure) {
        throw ConfigError("the paired baseline needs the erasure channel");
    }
    if (!(c.p_min >= 0.0 && c.p_max <= 1.0 && c.p_min <= c.p_max)) {
        throw ConfigError("p grid must satisfy 0 <= p-min <= p-max <= 1");
    }
    if (c.p_steps < 1) {
        throw ConfigError("p-steps must be >= 1");
    }
    if (c.p_steps == 1 && c.p_min != c.p_max) {
        throw ConfigError("a single-point grid needs p-min == p-max");
    }
    if (c.trials < 1) {
        throw ConfigError("trials must be >= 1");
    }
    if (c.flags.i_max < 0 || c.flags.j_max < 0) {
        throw ConfigError("imax and jmax must be >= 0");
    }
}

std::vector<double> p_grid(const SimConfig &c) {
    std::vector<double> out;
    for (int i = 0; i < c.p_steps; i++) {
        out.push_back(c.p_steps == 1 ? c.p_min : c.p_min + (c.p_max - c.p_min) * i / (c.p_steps - 1));
    }
    return out;
}

TrialRunner::TrialRunner(std::shared_ptr<const CodeSpec> code, DecoderFlags flags)
    : code_(std::move(code)), flags_(flags), policy_(effective_stuck_policy(code_->family, flags)) {
    toom_opts_.i_max = flags.i_max;
    toom_opts_.j_max = flags.j_max;
    if (code_->family == CodeFamily::solid) {
        toom_ = std::make_unique<ToomGeometry>(*code_);
    }
}

TrialOutcome TrialRunner::decode_erasure_sample(const ErasureSample &e) const {
    const CodeSpec &c = *code_;
    Syndrome s = syndrome(c, e.induced);
    ErasureDecodeResult z, x;
    if (c.family == CodeFamily::welded) {
        z = decode_welded_z(c, e.erased, s.sigma);
        x = decode_welded_x(c, e.erased, s.tau, policy_);
    } else {
        z = decode_erasure_z(c, e.erased, s.sigma, flags_.variant);
        x = decode_erasure_x(c, e.erased, s.tau, policy_);
    }
    TrialOutcome o;
    PauliFrame res = PauliFrame::zeros(c.n);
    res.z = xor_bits(e.induced.z, z.estimate);
    if (x.failure) {
        o.decoder_failure = true;
    } else {
        res.x = xor_bits(e.induced.x, x.estimate);
    }
    LogicalOutcome l = is_logical_failure(c, res);
    o.z_failed = l.z_failed;
    o.x_failed = l.x_failed;
    return o;
}

TrialOutcome TrialRunner::decode_gauss_sample(const ErasureSample &e) const {
    const CodeSpec &c = *code_;
    GaussDecodeResult g = decode_welded_gauss(c, e.erased, syndrome(c, e.induced));
    TrialOutcome o;
    if (g.failure) {
        o.decoder_failure = true;
        return o;
    }
    PauliFrame res{xor_bits(e.induced.x, g.estimate.x), xor_bits(e.induced.z, g.estimate.z)};
    LogicalOutcome l = is_logical_failure(c, res);
    o.z_failed = l.z_failed;
    o.x_failed = l.x_failed;
    return o;
}

TrialOutcome TrialRunner::run(Channel channel, double p, TrialRng &rng, TrialOutcome *baseline) const {
    const CodeSpec &c = *code_;
    TrialOutcome o;
    switch (channel) {
        case Channel::bitflip: {
            if (!toom_) {
                throw std::invalid_argument("bit-flip decoding needs a solid code");
            }
            PauliFrame err = sample_bitflip(c.n, p, rng);
            BitflipDecodeResult r = decode_bitflip(*toom_, apply_rows(c.z_checks, err.x), toom_opts_);
            if (r.decoder_failure) {
                o.decoder_failure = true;
                break;
            }
            PauliFrame res = PauliFrame::zeros(c.n);
            res.x = xor_bits(err.x, r.estimate);
            o.x_failed = is_logical_failure(c, res).x_failed;
            break;
        }
        case Channel::phaseflip: {
            PauliFrame err = sample_phaseflip(c.n, p, rng);
            Bits est = decode_phase(c, apply_rows(c.x_checks, err.z));
            PauliFrame res = PauliFrame::zeros(c.n);
            res.z = xor_bits(err.z, est);
            o.z_failed = is_logical_failure(c, res).z_failed;
            break;
        }
        case Channel::erasure: {
            ErasureSample e = sample_erasure(c.n, p, rng);
            o = decode_erasure_sample(e);
            if (baseline) {
                *baseline = decode_gauss_sample(e);
            }
            break;
        }
    }
    return o;
}

double SimResult::std_error() const {
    if (trials == 0) {
        return 0.0;
    }
    double f = failure_rate();
    return std::sqrt(f * (1.0 - f) / (double)trials);
}

std::pair<double, double> wilson_interval(uint64_t failures, uint64_t trials, double z) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    double n = (double)trials, f = (double)failures / n, z2 = z * z;
    double centre = (f + z2 / (2 * n)) / (1 + z2 / n);
    double half = z / (1 + z2 / n) * std::sqrt(f * (1 - f) / n + z2 / (4 * n * n));
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::vector<SimResult> run_sweep(const SimConfig &config, const ProgressFn &progress) {
    validate(config);
    std::shared_ptr<const CodeSpec> code;
    try {
        code = std::make_shared<const CodeSpec>(build_code(config.family, config.ell, config.R));
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    const TrialRunner runner(code, config.flags);
    const bool paired = config.flags.paired_baseline;
    unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = (unsigned)std::min<uint64_t>(workers, config.trials);

    std::vector<SimResult> results, baselines;
    const std::vector<double> grid = p_grid(config);
    for (size_t point = 0; point < grid.size(); point++) {
        const double p = grid[point];
        auto start = std::chrono::steady_clock::now();
        Tally main_total, base_total;
        std::mutex merge;
        std::atomic<uint64_t> next{0};
        std::exception_ptr error;
        auto work = [&] {
            Tally mine, base;
            try {
                constexpr uint64_t chunk = 64;
                for (;;) {
                    uint64_t begin = next.fetch_add(chunk);
                    if (begin >= config.trials) {
                        break;
                    }
                    uint64_t end = std::min(config.trials, begin + chunk);
                    for (uint64_t t = begin; t < end; t++) {
                        TrialRng rng(config.seed, point, t);
                        TrialOutcome b;
                        mine.add(runner.run(config.channel, p, rng, paired ? &b : nullptr));
                        if (paired) {
                            base.add(b);
                        }
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(merge);
                if (!error) {
                    error = std::current_exception();
                }
                next = config.trials;
                return;
            }
            std::lock_guard<std::mutex> lock(merge);
            main_total.merge(mine);
            base_total.merge(base);
        };
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; w++) {
                pool.emplace_back(work);
            }
            for (auto &th : pool) {
                th.join();
            }
        }
        if (error) {
            std::rethrow_exception(error);
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        auto make = [&](const Tally &t, const std::string &label) {
            SimResult r;
            r.label = label;
            r.ell = config.ell;
            r.R = config.R;
            r.channel = config.channel;
            r.p = p;
            r.trials = config.trials;
            r.failures = t.failures;
            r.z_failures = t.z;
            r.x_failures = t.x;
            r.decoder_failures = t.dec;
            r.seed = config.seed;
            r.elapsed_ms = config.timing ? ms : -1;
            return r;
        };
        results.push_back(make(main_total, family_name(config.family)));
        if (progress) {
            progress(point, results.back());
        }
        if (paired) {
            baselines.push_back(make(base_total, family_name(config.family) + "_gauss"));
            if (progress) {
                progress(point, baselines.back());
            }
        }
    }
    results.insert(results.end(), baselines.begin(), baselines.end());
    if (!config.out.empty()) {
        write_csv_atomic(config.out, results);
    }
    return results;
}

const char *const CSV_HEADER = "family,ell,R,channel,p,trials,failures,failure_rate,stderr,seed,elapsed_ms";

std::string to_csv(const std::vector<SimResult> &results) {
    std::string out = std::string(CSV_HEADER) + "\n";
    for (const auto &r : results) {
        out += r.label + "," + std::to_string(r.ell) + "," + std::to_string(r.R) + "," + channel_name(r.channel) + "," +
               fmt_double(r.p) + "," + std::to_string(r.trials) + "," + std::to_string(r.failures) + "," +
               fmt_double(r.failure_rate()) + "," + fmt_double(r.std_error()) + "," + std::to_string(r.seed) + "," +
               (r.elapsed_ms >= 0 ? fmt_double(std::round(r.elapsed_ms * 1000) / 1000) : "") + "\n";
    }
    return out;
}

void write_csv_atomic(const std::string &path, const std::vector<SimResult> &results) {
    namespace fs = std::filesystem;
    const std::string body = to_csv(results);
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        }
        f.write(body.data(), (std::streamsize)body.size());
        f.flush();
        if (!f) {
            std::error_code ignore;
            fs::remove(tmp, ignore);
            throw IoError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move results into '" + path + "'");
    }
}

}  // namespace toric3d
