# Copyright 2026 toric3d Contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import random

import pytest

import toric3d


def solid_n(ell):
    return 3 * ell**3 + 5 * ell**2 + 3 * ell + 1


def test_solid_dimensions():
    for ell in (1, 2, 3):
        code = toric3d.build_code("solid", ell)
        d = code.dimensions()
        assert code.n == solid_n(ell)
        assert d["k"] == 1
        assert d["rank_x_checks"] + d["rank_z_checks"] == code.n - 1


def test_welded_length():
    code = toric3d.build_code("welded", 1, 2)
    assert code.n == 44
    assert sum(code.welded) == 12
    assert "R=2" in repr(code)


def test_phase_single_error_roundtrip():
    code = toric3d.build_code("solid", 3)
    zero = [0] * code.n
    for q in range(0, code.n, 7):
        z = zero.copy()
        z[q] = 1
        sigma, tau = toric3d.syndrome(code, zero, z)
        assert not any(tau)
        est = toric3d.decode_phase(code, sigma)
        residual = [a ^ b for a, b in zip(z, est)]
        assert toric3d.is_logical_failure(code, zero, residual) == (False, False)


def test_bitflip_single_error():
    code = toric3d.build_code("solid", 3)
    zero = [0] * code.n
    x = zero.copy()
    x[10] = 1
    _, tau = toric3d.syndrome(code, x, zero)
    est, failed = toric3d.decode_bitflip(code, tau)
    assert not failed
    assert est == x


def test_erasure_decoders_respect_syndrome():
    code = toric3d.build_code("periodic3d", 3)
    rng = random.Random(4)
    erased = sorted(rng.sample(range(code.n), 20))
    x = [0] * code.n
    z = [0] * code.n
    for q in erased:
        x[q] = rng.randint(0, 1)
        z[q] = rng.randint(0, 1)
    sigma, tau = toric3d.syndrome(code, x, z)
    ez = toric3d.decode_erasure_z(code, erased, sigma)
    ex, failed = toric3d.decode_erasure_x(code, erased, tau, stuck_policy="gauss")
    assert not failed
    assert toric3d.syndrome(code, ex, ez) == (sigma, tau)
    assert all(q in set(erased) for q in range(code.n) if ez[q] or ex[q])
    gx, gz, gfail = toric3d.decode_gauss(code, erased, sigma, tau)
    assert not gfail
    assert toric3d.syndrome(code, gx, gz) == (sigma, tau)


def test_welded_decoders():
    code = toric3d.build_code("welded", 2, 2)
    zero_sigma = [0] * len(code.x_checks)
    zero_tau = [0] * len(code.z_checks)
    assert toric3d.decode_welded_z(code, [], zero_sigma) == [0] * code.n
    est, failed = toric3d.decode_welded_x(code, [], zero_tau)
    assert not failed and est == [0] * code.n


def test_simulate_is_deterministic(tmp_path):
    kw = dict(family="solid", ell=2, channel="erasure", p_min=0.1, p_max=0.3, p_steps=3, trials=50, seed=9)
    a = toric3d.simulate(**kw)
    b = toric3d.simulate(**kw, workers=4)
    assert [r["failures"] for r in a] == [r["failures"] for r in b]
    out = tmp_path / "sweep.csv"
    toric3d.simulate(**kw, out=str(out))
    lines = out.read_text().splitlines()
    assert lines[0] == toric3d.CSV_HEADER
    assert len(lines) == 4
    assert a[0]["elapsed_ms"] is None


def test_errors():
    with pytest.raises(ValueError):
        toric3d.build_code("klein", 3)
    with pytest.raises(ValueError):
        toric3d.simulate("periodic3d", 3, channel="bitflip", p_min=0.1)
    with pytest.raises(OSError):
        toric3d.simulate("solid", 2, p_min=0.1, trials=2, out="/nonexistent/dir/x.csv")
    code = toric3d.build_code("solid", 2)
    with pytest.raises(ValueError):
        toric3d.decode_phase(code, [0, 1])
