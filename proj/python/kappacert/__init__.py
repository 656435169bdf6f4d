"""Exact certificates for counterexamples to subadditivity of Kodaira dimension."""

import json as _json
from fractions import Fraction as _Fraction

from ._core import *  # noqa: F401,F403
from ._core import (
    assemble_counterexample_1_json,
    assemble_counterexample_2_json,
    certify_kappa_negative_json,
    min_age as _min_age,
    pushforward_product_json,
)


def certify_kappa_negative(params, m, n_max=20):
    return _json.loads(certify_kappa_negative_json(params, m, n_max))


def pushforward_product(params, m, n):
    return _json.loads(pushforward_product_json(params, m, n))


def assemble_counterexample_1(params, m):
    return _json.loads(assemble_counterexample_1_json(params, m))


def assemble_counterexample_2(fp):
    return _json.loads(assemble_counterexample_2_json(fp))


def min_age(cq):
    num, den = _min_age(cq)
    return _Fraction(num, den)
