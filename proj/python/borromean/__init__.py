"""Modular data and Borromean tensors of twisted Drinfeld doubles."""

import json

from . import _core
from ._core import (
    Error,
    InternalConsistencyError,
    UnsolvableCoboundary,
    UnsupportedCentralizer,
    ValidationError,
    normalize_cyclotomic,
    oracle_trace,
    proof_support,
    selftest,
)

__all__ = [
    "Error",
    "InternalConsistencyError",
    "UnsolvableCoboundary",
    "UnsupportedCentralizer",
    "ValidationError",
    "bundle",
    "match",
    "normalize_cyclotomic",
    "oracle_trace",
    "pq_bundle",
    "proof_support",
    "selftest",
    "simples",
    "verify_theorem",
]


def simples(group, cocycle="trivial", chars=()):
    """List simple objects as dicts with label, base, degree and dimension."""
    return json.loads(_core.simples(group, cocycle, list(chars)))


def bundle(group, cocycle="trivial", invariants="T", chars=(), mode="general", jobs=0):
    """Compute an invariant bundle; group and cocycle use the CLI argument syntax."""
    return json.loads(_core.bundle(group, cocycle, invariants, list(chars), mode, jobs))


def pq_bundle(p, q, u, invariants="T", mode="general", jobs=0):
    """Invariant bundle of the pq family member with twist u."""
    return json.loads(_core.pq_bundle(p, q, u, invariants, mode, jobs))


def match(a, b, invariants, max_nodes=0):
    """Search for a relabeling carrying bundle a onto bundle b."""
    return json.loads(_core.match(json.dumps(a), json.dumps(b), invariants, max_nodes))


def verify_theorem(p, q, invariants="T,B", fast=False, jobs=0):
    """Pairwise match all twists of the pq family."""
    return json.loads(_core.verify_theorem(p, q, invariants, fast, jobs))
