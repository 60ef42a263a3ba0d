# Copyright 2026 The Authors.
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

"""Exact omega invariants of small matroids."""

from fractions import Fraction

from . import _omega
from ._omega import Matroid, OmegaError, uniform, schubert, variants

__all__ = [
    "Matroid",
    "OmegaError",
    "uniform",
    "schubert",
    "variants",
    "omega",
    "omega_schubert",
    "chain_sum",
    "closed_forms",
    "report",
    "count_paths",
    "in_base_polytope",
    "check_identity",
    "x_values",
    "y_values",
    "bergman_contains",
    "graded_matroid",
]


def _point(z):
    out = []
    for c in z:
        f = Fraction(c)
        out.append((str(f.numerator), str(f.denominator)))
    return out


def _fractions(pairs):
    return [Fraction(int(n), int(d)) for n, d in pairs]


def omega(m, method="final_flats"):
    """omega(M) by one chain-sum variant, or by "auto" dispatch."""
    if method == "auto":
        return report(m, "auto")["consensus"]
    return int(_omega.omega_variant(m, method))


def omega_schubert(chain, a, n):
    return int(_omega.omega_schubert(chain, a, n))


def chain_sum(m, variant, depth_first=False):
    """Signed chain sum (the covaluative value) and the number of chains."""
    value, chains = _omega.chain_sum(m, variant, depth_first)
    return int(value), int(chains)


def closed_forms(m):
    return {name: int(value) for name, value in _omega.closed_forms(m)}


def report(m, method="auto", id=""):
    rep = _omega.report(m, method, id)
    for entry in rep["methods"]:
        entry["chains"] = int(entry["chains"])
        if entry["value"] is not None:
            entry["value"] = int(entry["value"])
    if rep["consensus"] is not None:
        rep["consensus"] = int(rep["consensus"])
    return rep


def count_paths(n, r, constraints=()):
    """constraints: iterable of (x, y, weakly_above)."""
    return int(_omega.count_paths(n, r, [tuple(c) for c in constraints]))


def in_base_polytope(m, z):
    return _omega.in_base_polytope(m, _point(z))


def check_identity(m, kind, z):
    return _omega.check_identity(m, kind, _point(z))


def x_values(m, z):
    return _fractions(_omega.x_values(m, _point(z)))


def y_values(m, z):
    return _fractions(_omega.y_values(m, _point(z)))


def bergman_contains(m, z):
    return _omega.bergman_contains(m, _point(z))


def graded_matroid(m, z):
    return _omega.graded_matroid(m, _point(z))
