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

#ifndef TORIC3D_HARNESS_H
#define TORIC3D_HARNESS_H

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toric3d/css_code.h"
#include "toric3d/decoder_erasure.h"
#include "toric3d/decoder_toom.h"
#include "toric3d/noise.h"

namespace toric3d {

/// Raised for invalid simulation settings (CLI exit code 1).
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when results cannot be written (CLI exit code 2).
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Channel : uint8_t { bitflip, phaseflip, erasure };

std::string channel_name(Channel c);
Channel parse_channel(const std::string &text);

struct DecoderFlags {
    int i_max = 0;  // 0: decoder default
    int j_max = 0;
    /// Unset: declare_failure, except gauss for welded codes.
    std::optional<StuckPolicy> stuck_policy;
    ZVariant variant = ZVariant::freeze_first;
    bool paired_baseline = false;
};

StuckPolicy effective_stuck_policy(CodeFamily family, const DecoderFlags &flags);

struct SimConfig {
    CodeFamily family = CodeFamily::solid;
    int ell = 2;
    int R = 1;
    Channel channel = Channel::erasure;
    double p_min = 0.0;
    double p_max = 0.0;
    int p_steps = 1;
    uint64_t trials = 10000;
    uint64_t seed = 1;
    DecoderFlags flags;
    std::string out;       // CSV path; empty: no file
    unsigned workers = 1;  // 0: hardware concurrency
    bool timing = false;   // fill elapsed_ms (makes the CSV run dependent)
};

/// Throws ConfigError.
void validate(const SimConfig &config);
std::vector<double> p_grid(const SimConfig &config);

struct TrialOutcome {
    bool z_failed = false;
    bool x_failed = false;
    bool decoder_failure = false;  // stuck or unresolved syndrome

    bool failed() const {
        return z_failed || x_failed || decoder_failure;
    }
};

/// Decoders for one code, shared read-only by all workers.
class TrialRunner {
   public:
    TrialRunner(std::shared_ptr<const CodeSpec> code, DecoderFlags flags);

    const CodeSpec &code() const {
        return *code_;
    }
    /// Samples, decodes and classifies one trial. With a paired baseline, `baseline` receives the
    /// Gaussian-elimination outcome on the same sample.
    TrialOutcome run(Channel channel, double p, TrialRng &rng, TrialOutcome *baseline = nullptr) const;

    TrialOutcome decode_erasure_sample(const ErasureSample &e) const;
    TrialOutcome decode_gauss_sample(const ErasureSample &e) const;

   private:
    std::shared_ptr<const CodeSpec> code_;
    DecoderFlags flags_;
    StuckPolicy policy_;
    std::unique_ptr<ToomGeometry> toom_;
    ToomOptions toom_opts_;
};

struct SimResult {
    std::string label;  // family name, with "_gauss" for paired-baseline rows
    int ell = 0;
    int R = 0;
    Channel channel = Channel::erasure;
    double p = 0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    uint64_t z_failures = 0;
    uint64_t x_failures = 0;
    uint64_t decoder_failures = 0;
    uint64_t seed = 0;
    double elapsed_ms = -1;  // negative: not recorded

    double failure_rate() const {
        return trials ? (double)failures / (double)trials : 0.0;
    }
    /// sqrt(f (1 - f) / N)
    double std_error() const;
};

std::pair<double, double> wilson_interval(uint64_t failures, uint64_t trials, double z = 1.96);

using ProgressFn = std::function<void(size_t point, const SimResult &)>;

/// Runs every (p, trial) pair; trial t of point i draws from TrialRng(seed, i, t), so counts
/// are independent of the worker count. Writes the CSV when `config.out` is set.
std::vector<SimResult> run_sweep(const SimConfig &config, const ProgressFn &progress = nullptr);

extern const char *const CSV_HEADER;
std::string to_csv(const std::vector<SimResult> &results);
/// Temp file plus rename, so readers never see a partial file. Throws IoError.
void write_csv_atomic(const std::string &path, const std::vector<SimResult> &results);

}  // namespace toric3d

#endif
