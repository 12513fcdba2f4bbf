"""Exact Poisson-Lie computations over the rationals.

Algebras, bialgebras and point data are plain dicts in the same JSON
schema the ``plie`` command-line tool reads. Rationals are ints or
``"p/q"`` strings.
"""

import json as _json

from . import _core
from ._core import ConditionFailure, InputError, JacobiFailure, MathRejection, PlieError

__all__ = [
    "PlieError",
    "InputError",
    "MathRejection",
    "ConditionFailure",
    "JacobiFailure",
    "validate",
    "double",
    "cohomology",
    "relative_cohomology",
    "anchor_kernel",
    "matched_pair",
    "flag_cohomology",
    "kostant_check",
    "bruhat_leaves",
    "root_system",
    "weyl_group",
    "standard_bialgebra",
    "builtin_types",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def _roots(root_type):
    """A type name such as "B2", or a dict {"cartan": [[...]], "name": ...}."""
    if isinstance(root_type, str):
        return {"type_name": root_type}
    return {"cartan": _text(root_type)}


def validate(doc):
    """Jacobi report, plus a compatibility report when ``doc`` has a cocommutator."""
    return _json.loads(_core.validate(_text(doc)))


def double(doc):
    """Structure constants of the double of a Lie bialgebra."""
    return _json.loads(_core.double(_text(doc)))


def cohomology(doc, module="trivial"):
    return _json.loads(_core.cohomology(_text(doc), module))


def relative_cohomology(doc, h):
    """``h`` is a list of spanning vectors."""
    return _json.loads(_core.relative_cohomology(_text(doc), _text(h)))


def anchor_kernel(doc):
    return _json.loads(_core.anchor_kernel(_text(doc)))


def matched_pair(doc, h, n=None):
    """Split of an algebra along h + n, or the coisotropic double of a bialgebra at h."""
    return _json.loads(_core.matched_pair(_text(doc), _text(h), "" if n is None else _text(n)))


def flag_cohomology(root_type):
    return _json.loads(_core.flag_cohomology(**_roots(root_type)))


def kostant_check(root_type):
    return _json.loads(_core.kostant_check(**_roots(root_type)))


def bruhat_leaves(root_type):
    return _json.loads(_core.bruhat_leaves(**_roots(root_type)))


def root_system(root_type):
    return _json.loads(_core.root_system(**_roots(root_type)))


def weyl_group(root_type):
    return _json.loads(_core.weyl_group(**_roots(root_type)))


def standard_bialgebra(root_type):
    return _json.loads(_core.standard_bialgebra(**_roots(root_type)))


def builtin_types():
    return list(_core.builtin_types())
