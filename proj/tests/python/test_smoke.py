# Copyright 2026 pfstate developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import pfstate


def random_antisymmetric(L, rng, scale=1.0):
    m = scale * (rng.normal(size=(L, L)) + 1j * rng.normal(size=(L, L)))
    return (m - m.T) / 2


def test_pfaffian_squared_is_det():
    rng = np.random.default_rng(1)
    for L in (2, 4, 8, 12):
        A = random_antisymmetric(L, rng)
        pf = pfstate.pfaffian(A)
        assert abs(pf**2 - np.linalg.det(A)) < 1e-9 * abs(np.linalg.det(A))


def test_pfaffinho_submatrix():
    rng = np.random.default_rng(2)
    A = random_antisymmetric(6, rng)
    keep = [0, 1, 3, 5]
    sub = A[np.ix_(keep, keep)]
    assert abs(pfstate.pfaffinho(A, keep) - pfstate.pfaffian(sub)) < 1e-12


def test_amplitudes_normalize_and_match_oracle():
    rng = np.random.default_rng(3)
    L = 6
    state = pfstate.GaussianState(random_antisymmetric(L, rng), "010010")
    dense = pfstate.oracle.dense_from_gaussian(state)
    assert abs(np.linalg.norm(dense) - 1) < 1e-10
    # sigma^z amplitudes
    for idx in (0, 9, 33, 63):
        config = format(idx, f"0{L}b")
        assert abs(pfstate.amplitude_z(state, config) - dense[idx]) < 1e-12
    # rotated probabilities vs the dense rotation
    rot = pfstate.oracle.rotate(dense, 0.7, 0.3)
    total = 0.0
    for idx in range(2**L):
        seq = "".join("-" if (idx >> (L - 1 - j)) & 1 else "+" for j in range(L))
        p = pfstate.prob_phi(state, seq, 0.7)
        assert abs(p - abs(rot[idx]) ** 2) < 1e-10
        total += p
    assert abs(total - 1) < 1e-10


def test_rebase_preserves_amplitudes():
    rng = np.random.default_rng(4)
    state = pfstate.GaussianState(random_antisymmetric(4, rng), "0000")
    rebased = pfstate.rebase(state, "1100")
    for idx in range(16):
        config = format(idx, "04b")
        assert abs(pfstate.amplitude_z(state, config) - pfstate.amplitude_z(rebased, config)) < 1e-10


def test_domain_wall_machinery():
    assert pfstate.domain_wall("++--") == "0101"
    assert pfstate.base_domain_config("100") == "101"
    assert pfstate.sequence_sign("000", "++-") == -1
    dual = pfstate.dual_matrix(np.zeros((3, 3)))
    assert abs(dual["Rtilde"][0, 1] - 1.0) < 1e-12


def test_kw_residuals_close():
    rng = np.random.default_rng(5)
    R = random_antisymmetric(8, rng, scale=1 / math.sqrt(8))
    dual = pfstate.dual_matrix(R)
    assert pfstate.kw_residuals(R, dual["Rtilde"]) < 1e-9


def test_tfi_scan_and_fit():
    rows = pfstate.scan_formation("periodic", "z", 0.0, "01", 40, 160, stride=4, threads=1)
    assert len(rows) >= 10
    Ls = [r[0] for r in rows]
    assert Ls == sorted(Ls)
    fit = pfstate.fit_pbc([(r[0], r[1]) for r in rows])
    # even at small sizes the Neel boundary entropy is near ln2/2
    assert abs(fit["s_or_a"] - math.log(2) / 2) < 0.02
    assert fit["class"] in ("mixed", "unresolved")


def test_tfi_matches_exact_diagonalization():
    state = pfstate.tfi_R(6, "open")
    gs = pfstate.oracle.tfi_exact_ground_state(6, "open")
    assert abs(pfstate.prob_z(state, "010010") - abs(gs[0b010010]) ** 2) < 1e-8
    assert abs(pfstate.prob_x(state, "++-+-+") - pfstate.prob_phi(state, "++-+-+", 0.0)) < 1e-10


def test_state_json_roundtrip():
    rng = np.random.default_rng(6)
    state = pfstate.GaussianState(random_antisymmetric(3, rng), "101")
    text = pfstate.state_to_json(state)
    back = pfstate.state_from_json(text)
    assert back.base == "101"
    assert np.max(np.abs(back.R - state.R)) == 0.0


def test_errors_are_typed():
    with pytest.raises(pfstate.SingularCayleyError):
        m = np.array([[0, 1j], [-1j, 0]])
        pfstate.dual_matrix(m)
    with pytest.raises(pfstate.ZeroAmplitudeBaseError):
        m = np.zeros((4, 4), dtype=complex)
        m[0, 1], m[1, 0] = 1.0, -1.0
        pfstate.rebase(pfstate.GaussianState(m, "0000"), "0011")
