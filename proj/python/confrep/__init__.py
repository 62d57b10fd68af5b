"""Generalized conformal representations of orthogonal Lie algebras, in exact arithmetic."""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "weyl_dim",
    "casimir",
    "classify",
    "critical_set",
    "build_irrep",
    "charpoly",
    "scan",
    "verify_brackets",
    "harmonic_dims",
    "suite",
]


def _mu(mu):
    if isinstance(mu, str):
        return mu
    return ",".join(str(Fraction(x)) for x in mu)


def weyl_dim(series, mu):
    return _core.weyl_dim(series, _mu(mu))


def casimir(series, mu):
    return Fraction(_core.casimir(series, _mu(mu)))


def classify(series, mu, b):
    return _core.classify(series, _mu(mu), str(Fraction(b)))


def critical_set(series, mu):
    return _core.critical_set(series, _mu(mu))


def build_irrep(series, mu):
    return json.loads(_core.build_irrep_json(series, _mu(mu)))


def charpoly(series, mu):
    return json.loads(_core.charpoly_json(series, _mu(mu)))


def scan(series, mu, b, max_degree=4):
    return json.loads(_core.scan_json(series, _mu(mu), str(Fraction(b)), max_degree))


def verify_brackets(n, series):
    return json.loads(_core.verify_brackets_json(n, series))


def harmonic_dims(k, n, series):
    return list(_core.harmonic_dims(k, n, series))


def suite(only=(), inject_fault=False):
    return json.loads(_core.suite_json(list(only), inject_fault))
