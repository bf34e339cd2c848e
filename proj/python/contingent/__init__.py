"""Exact-rational checks and constructions for likelihood assessments.

Inputs are dicts in the same JSON schemas the command-line tool reads;
results come back as dicts. Rationals are strings such as "1/4".
"""

import json

from . import _core
from ._core import InputError, PreconditionError

__all__ = ["check", "build", "identify", "rationalize", "choquet", "InputError", "PreconditionError"]

ALL_AXIOMS = ("nt", "e", "i", "ie", "a")


def _text(value):
    return None if value is None else json.dumps(value)


def check(assessment, axioms=ALL_AXIOMS, theory=None):
    return json.loads(_core.check(_text(assessment), list(axioms), _text(theory)))


def build(construction, assessment=None, model=None, complete_maxent=False):
    """Run a construction; the result carries the built model under "model"."""
    return json.loads(_core.build(construction, _text(assessment), _text(model), complete_maxent))


def identify(assessment, theory=None, via_certainty=False):
    return json.loads(_core.identify(_text(assessment), _text(theory), via_certainty))


def rationalize(model, strategies, chosen=None, additive_only=False, weak=False):
    return json.loads(_core.rationalize(_text(model), _text(strategies), chosen, additive_only, weak))


def choquet(model, payoffs):
    return _core.choquet(_text(model), [str(p) for p in payoffs])
