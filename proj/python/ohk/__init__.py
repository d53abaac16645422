"""Exact linearization engine for Lawvere theories and coalgebraic models.

Thin wrapper over the C++ extension: inputs are .lth/.lmod/.lhom texts,
reports come back as plain dicts (parsed from the versioned JSON emitted
by the core).
"""

import json as _json

try:
    from ohk._ohk import *  # noqa: F401,F403  (installed layout)
    from ohk import _ohk
except ImportError:  # build-tree layout: _ohk.so on PYTHONPATH
    from _ohk import *  # noqa: F401,F403
    import _ohk

ParseError = _ohk.ParseError
GrouplikeUnresolvedError = _ohk.GrouplikeUnresolvedError


def _wrap_report(raw):
    return _json.loads(raw)


def check(model, theories=()):
    """Full axiom report for a .lmod text, as a dict."""
    return _wrap_report(_ohk.check_model(model, list(theories)))


def check_hom(models, hom):
    return _wrap_report(_ohk.check_hom(list(models), hom))


def kernel(models, hom):
    return _wrap_report(_ohk.kernel(list(models), hom))


def cokernel(models, hom):
    report, lmod = _ohk.cokernel(list(models), hom)
    return _wrap_report(report), lmod


def factorize(models, hom):
    report, lmod = _ohk.factorize(list(models), hom)
    return _wrap_report(report), lmod


def coequalizer(models, hom_f, hom_g):
    report, lmod = _ohk.coequalizer(list(models), hom_f, hom_g)
    return _wrap_report(report), lmod


def normal(models, inclusion):
    return _wrap_report(_ohk.normal(list(models), inclusion))


def reflect(model, target_theory, theories=()):
    report, lmod = _ohk.reflect(model, target_theory, list(theories))
    return _wrap_report(report), lmod
