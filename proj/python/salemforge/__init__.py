"""Salem numbers, McMullen pairs, MAU sequences and Siegel disks of product automorphisms.

Every function returns plain Python data decoded from the JSON reports of the
C++ core. Big integers and certified reals are strings.
"""

import json
import os

from . import _core

__all__ = [
    "en_formula",
    "en_matrix",
    "salem_factor",
    "integrality_certificate",
    "mcmullen_data",
    "mau_build",
    "standard_fan",
    "check_fan",
    "classify_product",
    "run",
]


def en_formula(n):
    return json.loads(_core.en_formula(n))


def en_matrix(n):
    return json.loads(_core.en_matrix(n))


def salem_factor(n):
    return json.loads(_core.salem_factor(n))


def integrality_certificate(n):
    return json.loads(_core.integrality_certificate(n))


def mcmullen_data(n, precision=256):
    return json.loads(_core.mcmullen_data(n, precision))


def mau_build(length, precision=512, bound=32):
    return json.loads(_core.mau_build(length, precision, bound))


def standard_fan(name):
    return json.loads(_core.standard_fan(name))


def check_fan(fan):
    """`fan` is a dict or a path to a fan JSON file."""
    if not isinstance(fan, dict):
        with open(fan) as f:
            fan = json.load(f)
    return json.loads(_core.check_fan(json.dumps(fan)))


def classify_product(spec, precision=512, bound=32):
    """`spec` is a dict or a path to a product spec JSON file."""
    base = ""
    if not isinstance(spec, dict):
        base = os.path.dirname(os.path.abspath(spec))
        with open(spec) as f:
            spec = json.load(f)
    return json.loads(_core.classify_product(json.dumps(spec), base, precision, bound))


def run(*argv):
    """Run a CLI command. Returns (exit_code, report_or_None, stderr)."""
    code, out, err = _core.run([str(a) for a in argv])
    report = json.loads(out) if out.startswith("{") else None
    return code, report, err
