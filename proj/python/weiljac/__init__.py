"""Python access to the weiljac C++ core.

Expansions are passed around as dictionaries in the same JSON layout the
command-line tool reads and writes; rationals are strings.
"""

import json

from . import _core
from ._core import DomainError, ParseError, WeiljacError, discriminant, fixture_names, principal_part_table, product_weight, run_cli, weil

__all__ = [
    "DomainError",
    "ParseError",
    "WeiljacError",
    "check_s",
    "discriminant",
    "e3_a2",
    "fixture",
    "fixture_names",
    "hecke_u",
    "hecke_u_jacobi",
    "principal_part_table",
    "product_weight",
    "run_cli",
    "scalarize",
    "specialize",
    "theta_compose",
    "theta_decompose",
    "theta_series",
    "to_level3",
    "to_plus",
    "weil",
]


def _text(x):
    return x if isinstance(x, str) else json.dumps(x)


def fixture(name):
    return json.loads(_core.fixture_text(name))


def e3_a2(prec):
    return json.loads(_core.e3_a2(str(prec)))


def hecke_u(form, split, ell):
    return json.loads(_core.hecke_u(_text(form), split, ell))


def hecke_u_jacobi(phi, ell):
    return json.loads(_core.hecke_u_jacobi(_text(phi), ell))


def theta_decompose(form, split):
    return json.loads(_core.theta_decompose(_text(form), split))


def theta_compose(phi):
    return json.loads(_core.theta_compose(_text(phi)))


def specialize(phi):
    return json.loads(_core.specialize(_text(phi)))


def theta_series(gram, prec):
    return json.loads(_core.theta_series(gram, str(prec)))


def scalarize(form):
    return json.loads(_core.scalarize(_text(form)))


def to_plus(series, weight):
    return json.loads(_core.to_plus(_text(series), weight))


def to_level3(series, weight):
    return json.loads(_core.to_level3(_text(series), str(weight)))


def check_s(form, tau, tol=1e-6):
    """(passed, residual, truncation tail) for f(-1/tau) = tau^k rho(S) f(tau)."""
    return _core.check_s(_text(form), complex(tau), tol)
