"""Exact checks of the complex identities behind the similarity ratios.

For unit-modulus ``alpha, beta, gamma`` with

    sigma = alpha^2 + beta^2 + gamma^2 - alpha beta - beta gamma - gamma alpha
    Pi    = (alpha - beta)(beta - gamma)(gamma - alpha)
    N     = alpha^2 beta + beta^2 gamma + gamma^2 alpha - 3 alpha beta gamma

we check ``|N|^2 == |Pi|^2 + |sigma|^2`` and the symmetry of ``N / Pi``
by exact evaluation on random rational points of the unit circle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .kernel import Point, Triangle
from .naka import (
    ext_numerator_poly,
    pi_poly,
    sigma_poly,
    similarity_ratio_sq_complex,
    similarity_ratio_sq_metric,
)
from .numeric import GaussianRational, norm_sq, unimodular_from_parameter


@dataclass(frozen=True)
class UnimodularTriple:
    alpha: GaussianRational
    beta: GaussianRational
    gamma: GaussianRational

    def __post_init__(self):
        vals = (self.alpha, self.beta, self.gamma)
        for name, v in zip(("alpha", "beta", "gamma"), vals):
            if norm_sq(v) != 1:
                raise ValueError(f"{name} = {v} is not unimodular")
        if len(set(vals)) < 3:
            raise ValueError("triple entries must be pairwise distinct")

    @classmethod
    def from_parameters(cls, t1, t2, t3) -> "UnimodularTriple":
        return cls(*(unimodular_from_parameter(t) for t in (t1, t2, t3)))

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))


def sigma(tr: UnimodularTriple) -> GaussianRational:
    return sigma_poly(*tr)


def pi_product(tr: UnimodularTriple) -> GaussianRational:
    return pi_poly(*tr)


def ext_numerator(tr: UnimodularTriple) -> GaussianRational:
    return ext_numerator_poly(*tr)


def check_norm_identity(tr: UnimodularTriple) -> bool:
    return norm_sq(ext_numerator(tr)) == norm_sq(pi_product(tr)) + norm_sq(sigma(tr))


def check_ratio_consistency(t: Triangle) -> bool:
    """Complex-form and side-length form of the DEF ratio agree exactly."""
    return similarity_ratio_sq_complex(t, "def") == similarity_ratio_sq_metric(t)


@dataclass(frozen=True)
class PermutationReport:
    """``N/Pi`` for every ordering of a triple.

    ``even_value`` is the common value on the identity and the two cyclic
    shifts, ``odd_value`` the one on the three transpositions (when those
    agree).  The norm of ``N/Pi`` is the same for all six orderings.
    """

    values: dict
    cyclic_invariant: bool
    odd_invariant: bool
    norm_invariant: bool
    even_value: GaussianRational
    odd_value: GaussianRational

    @property
    def ok(self) -> bool:
        return self.cyclic_invariant and self.norm_invariant


_EVEN = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def permutation_behavior(tr: UnimodularTriple) -> PermutationReport:
    vals = tuple(tr)
    values = {}
    for perm in permutations(range(3)):
        a, b, c = (vals[i] for i in perm)
        values[perm] = ext_numerator_poly(a, b, c) / pi_poly(a, b, c)
    even = [values[p] for p in _EVEN]
    odd = [v for p, v in values.items() if p not in _EVEN]
    norms = {norm_sq(v) for v in values.values()}
    return PermutationReport(
        values=values,
        cyclic_invariant=len(set(even)) == 1,
        odd_invariant=len(set(odd)) == 1,
        norm_invariant=len(norms) == 1,
        even_value=even[0],
        odd_value=odd[0],
    )


# -- fuzzing ----------------------------------------------------------------

MAX_PARAM = 10**4


def random_parameter(rng: random.Random, bound: int = MAX_PARAM) -> Fraction:
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def random_unimodular_triple(rng: random.Random, bound: int = MAX_PARAM) -> UnimodularTriple:
    while True:
        ts = [random_parameter(rng, bound) for _ in range(3)]
        if len(set(ts)) == 3:
            return UnimodularTriple.from_parameters(*ts)


@dataclass
class FuzzSummary:
    iterations: int
    seed: int
    failures: int = 0
    counterexamples: list = field(default_factory=list)

    def summary_line(self) -> str:
        return f"identity fuzz: iterations={self.iterations} failures={self.failures} seed={self.seed}"

    def dump(self) -> str:
        """One line per failing triple, in rational text form."""
        return "\n".join(
            f"counterexample {i}: alpha={tr.alpha} beta={tr.beta} gamma={tr.gamma} ({why})"
            for i, (tr, why) in enumerate(self.counterexamples)
        )


def check_triple(tr: UnimodularTriple) -> list[str]:
    """Names of the identity checks that fail on ``tr`` (empty when all pass)."""
    problems = []
    if not check_norm_identity(tr):
        problems.append("norm identity")
    if sigma(tr) == 0:
        problems.append("sigma vanishes on a rational triple")
    report = permutation_behavior(tr)
    if not report.cyclic_invariant:
        problems.append("N/Pi not cyclic-invariant")
    if not report.norm_invariant:
        problems.append("|N/Pi| not permutation-invariant")
    return problems


def fuzz_identities(iterations: int, seed: int = 0) -> FuzzSummary:
    rng = random.Random(seed)
    summary = FuzzSummary(iterations=iterations, seed=seed)
    for _ in range(iterations):
        tr = random_unimodular_triple(rng)
        problems = check_triple(tr)
        if problems:
            summary.failures += 1
            summary.counterexamples.append((tr, ", ".join(problems)))
    return summary


def triangle_from_triple(tr: UnimodularTriple) -> Triangle:
    """The triangle inscribed in the unit circle with vertices at the triple."""
    return Triangle(*(Point(z.re, z.im) for z in tr))
