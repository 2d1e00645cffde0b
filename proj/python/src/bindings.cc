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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toric3d/decoder_erasure.h"
#include "toric3d/decoder_matching.h"
#include "toric3d/decoder_toom.h"
#include "toric3d/decoder_welded.h"
#include "toric3d/harness.h"

namespace py = pybind11;
using namespace toric3d;

namespace {

Bits to_bits_checked(const std::vector<int> &v, size_t len, const char *what) {
    if (v.size() != len) {
        throw py::value_error(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                              std::to_string(len));
    }
    Bits out(len);
    for (size_t i = 0; i < len; i++) {
        out[i] = v[i] & 1;
    }
    return out;
}

std::vector<int> from_bits(const Bits &b) {
    return std::vector<int>(b.begin(), b.end());
}

py::dict result_dict(const SimResult &r) {
    py::dict d;
    d["family"] = r.label;
    d["ell"] = r.ell;
    d["R"] = r.R;
    d["channel"] = channel_name(r.channel);
    d["p"] = r.p;
    d["trials"] = r.trials;
    d["failures"] = r.failures;
    d["z_failures"] = r.z_failures;
    d["x_failures"] = r.x_failures;
    d["decoder_failures"] = r.decoder_failures;
    d["failure_rate"] = r.failure_rate();
    d["stderr"] = r.std_error();
    d["seed"] = r.seed;
    if (r.elapsed_ms >= 0) {
        d["elapsed_ms"] = r.elapsed_ms;
    } else {
        d["elapsed_ms"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "3D toric, solid and welded codes: construction, decoders and Monte Carlo sweeps";

    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<CodeSpec, std::shared_ptr<CodeSpec>>(m, "CodeSpec")
        .def_property_readonly("family", [](const CodeSpec &c) { return family_name(c.family); })
        .def_readonly("ell", &CodeSpec::ell)
        .def_readonly("R", &CodeSpec::R)
        .def_readonly("n", &CodeSpec::n)
        .def_readonly("x_checks", &CodeSpec::x_checks)
        .def_readonly("z_checks", &CodeSpec::z_checks)
        .def_readonly("logicals_x", &CodeSpec::logicals_x)
        .def_readonly("logicals_z", &CodeSpec::logicals_z)
        .def_property_readonly("welded",
                               [](const CodeSpec &c) {
                                   std::vector<int> out;
                                   for (const auto &q : c.qubit_meta) {
                                       out.push_back(q.welded);
                                   }
                                   return out;
                               })
        .def("dimensions",
             [](const CodeSpec &c) {
                 CodeDimensions d = code_dimensions(c);
                 py::dict out;
                 out["n"] = c.n;
                 out["k"] = d.k;
                 out["rank_x_checks"] = d.rank_h;
                 out["rank_z_checks"] = d.rank_t;
                 return out;
             })
        .def("__repr__", [](const CodeSpec &c) {
            return "<CodeSpec " + family_name(c.family) + " ell=" + std::to_string(c.ell) +
                   (c.family == CodeFamily::welded ? " R=" + std::to_string(c.R) : std::string()) +
                   " n=" + std::to_string(c.n) + ">";
        });

    m.def(
        "build_code",
        [](const std::string &family, int ell, int R) {
            return std::make_shared<CodeSpec>(build_code(parse_family(family), ell, R));
        },
        py::arg("family"), py::arg("ell"), py::arg("R") = 1);

    m.def(
        "syndrome",
        [](const CodeSpec &c, const std::vector<int> &x, const std::vector<int> &z) {
            Syndrome s = syndrome(c, {to_bits_checked(x, c.n, "x"), to_bits_checked(z, c.n, "z")});
            return py::make_tuple(from_bits(s.sigma), from_bits(s.tau));
        },
        py::arg("code"), py::arg("x"), py::arg("z"), "Returns (sigma, tau): X-check and Z-check outcomes.");

    m.def(
        "is_logical_failure",
        [](const CodeSpec &c, const std::vector<int> &x, const std::vector<int> &z) {
            LogicalOutcome o = is_logical_failure(c, {to_bits_checked(x, c.n, "x"), to_bits_checked(z, c.n, "z")});
            return py::make_tuple(o.z_failed, o.x_failed);
        },
        py::arg("code"), py::arg("x"), py::arg("z"), "Returns (z_failed, x_failed) for a zero-syndrome residual.");

    m.def(
        "decode_phase",
        [](const CodeSpec &c, const std::vector<int> &sigma) {
            return from_bits(decode_phase(c, to_bits_checked(sigma, c.num_x_checks(), "sigma")));
        },
        py::arg("code"), py::arg("sigma"));

    m.def(
        "decode_bitflip",
        [](const CodeSpec &c, const std::vector<int> &tau, int i_max, int j_max, bool residual_step) {
            ToomOptions o;
            o.i_max = i_max;
            o.j_max = j_max;
            o.residual_step = residual_step;
            BitflipDecodeResult r = decode_bitflip(c, to_bits_checked(tau, c.num_z_checks(), "tau"), o);
            return py::make_tuple(from_bits(r.estimate), r.decoder_failure);
        },
        py::arg("code"), py::arg("tau"), py::arg("i_max") = 0, py::arg("j_max") = 0, py::arg("residual_step") = true,
        "Returns (estimate, decoder_failure).");

    m.def(
        "decode_erasure_z",
        [](const CodeSpec &c, std::vector<uint32_t> erased, const std::vector<int> &sigma, const std::string &variant) {
            return from_bits(
                decode_erasure_z(c, erased, to_bits_checked(sigma, c.num_x_checks(), "sigma"), parse_z_variant(variant))
                    .estimate);
        },
        py::arg("code"), py::arg("erased"), py::arg("sigma"), py::arg("variant") = "freeze_first");

    m.def(
        "decode_erasure_x",
        [](const CodeSpec &c, std::vector<uint32_t> erased, const std::vector<int> &tau, const std::string &policy) {
            auto r =
                decode_erasure_x(c, erased, to_bits_checked(tau, c.num_z_checks(), "tau"), parse_stuck_policy(policy));
            return py::make_tuple(from_bits(r.estimate), r.failure);
        },
        py::arg("code"), py::arg("erased"), py::arg("tau"), py::arg("stuck_policy") = "declare_failure",
        "Returns (estimate, failure).");

    m.def(
        "decode_welded_z",
        [](const CodeSpec &c, std::vector<uint32_t> erased, const std::vector<int> &sigma) {
            return from_bits(decode_welded_z(c, erased, to_bits_checked(sigma, c.num_x_checks(), "sigma")).estimate);
        },
        py::arg("code"), py::arg("erased"), py::arg("sigma"));

    m.def(
        "decode_welded_x",
        [](const CodeSpec &c, std::vector<uint32_t> erased, const std::vector<int> &tau, const std::string &policy) {
            auto r =
                decode_welded_x(c, erased, to_bits_checked(tau, c.num_z_checks(), "tau"), parse_stuck_policy(policy));
            return py::make_tuple(from_bits(r.estimate), r.failure);
        },
        py::arg("code"), py::arg("erased"), py::arg("tau"), py::arg("stuck_policy") = "gauss",
        "Returns (estimate, failure).");

    m.def(
        "decode_gauss",
        [](const CodeSpec &c, std::vector<uint32_t> erased, const std::vector<int> &sigma,
           const std::vector<int> &tau) {
            auto r = decode_welded_gauss(
                c, erased,
                {to_bits_checked(sigma, c.num_x_checks(), "sigma"), to_bits_checked(tau, c.num_z_checks(), "tau")});
            return py::make_tuple(from_bits(r.estimate.x), from_bits(r.estimate.z), r.failure);
        },
        py::arg("code"), py::arg("erased"), py::arg("sigma"), py::arg("tau"),
        "Elimination on the erased columns of both sectors. Returns (x, z, failure).");

    m.def(
        "simulate",
        [](const std::string &family, int ell, int R, const std::string &channel, double p_min,
           std::optional<double> p_max, int p_steps, uint64_t trials, uint64_t seed, unsigned workers, int imax,
           int jmax, std::optional<std::string> stuck_policy, const std::string &variant, bool paired_baseline,
           std::optional<std::string> out, bool timing) {
            SimConfig c;
            c.family = parse_family(family);
            c.ell = ell;
            c.R = R;
            c.channel = parse_channel(channel);
            c.p_min = p_min;
            c.p_max = p_max.value_or(p_min);
            c.p_steps = p_steps;
            c.trials = trials;
            c.seed = seed;
            c.workers = workers;
            c.flags.i_max = imax;
            c.flags.j_max = jmax;
            if (stuck_policy) {
                c.flags.stuck_policy = parse_stuck_policy(*stuck_policy);
            }
            c.flags.variant = parse_z_variant(variant);
            c.flags.paired_baseline = paired_baseline;
            c.out = out.value_or("");
            c.timing = timing;
            std::vector<SimResult> rs;
            {
                py::gil_scoped_release release;
                rs = run_sweep(c);
            }
            py::list l;
            for (const auto &r : rs) {
                l.append(result_dict(r));
            }
            return l;
        },
        py::arg("family"), py::arg("ell"), py::arg("R") = 1, py::arg("channel") = "erasure", py::arg("p_min") = 0.0,
        py::arg("p_max") = py::none(), py::arg("p_steps") = 1, py::arg("trials") = 10000, py::arg("seed") = 1,
        py::arg("workers") = 1, py::arg("imax") = 0, py::arg("jmax") = 0, py::arg("stuck_policy") = py::none(),
        py::arg("variant") = "freeze_first", py::arg("paired_baseline") = false, py::arg("out") = py::none(),
        py::arg("timing") = false, "Monte Carlo sweep; returns one dict per (decoder, p) point.");

    m.attr("CSV_HEADER") = CSV_HEADER;
}
