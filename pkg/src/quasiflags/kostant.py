"""Kostant partition counts and their q-analogue polynomials.

K_gamma(t) is the generating polynomial whose coefficient of t^j counts the
coroot partitions kappa of gamma with |gamma| - K(kappa) = j. Evaluating at
t = 1 recovers the plain Kostant partition count; the coefficients are also
the stratum counts of the fiber attached to gamma, graded by dimension,
which gives a second, independently computable route to the same polynomial
(kostant_poly_via_strata). For a multiset Gamma of degree vectors the fiber
polynomial is the product of the per-part polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .limits import Caps, DEFAULT_CAPS
from .partitions import GammaPartition, kappa_partitions, mu_triangles, stratum_dim
from .roots import GammaVec


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in t with nonnegative integer coefficients.

    coeffs[j] is the coefficient of t^j; trailing zeros are stripped on
    construction so equal polynomials compare equal. The zero polynomial is
    the empty tuple and has degree None. Arithmetic is exact (Python ints),
    so counting can never overflow or wrap.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"coefficients must be nonnegative integers, got {c!r}")

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, j: int) -> int:
        if j < 0:
            raise ValueError(f"exponent must be nonnegative, got {j}")
        return self.coeffs[j] if j < len(self.coeffs) else 0

    def eval_at(self, x: int) -> int:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise ValueError(f"evaluation point must be a nonnegative integer, got {x!r}")
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            elif j == 1:
                terms.append("t" if c == 1 else f"{c}*t")
            else:
                terms.append(f"t^{j}" if c == 1 else f"{c}*t^{j}")
        return " + ".join(terms)


ONE = IntPolynomial((1,))


def _dense(counts: dict[int, int]) -> IntPolynomial:
    if not counts:
        return IntPolynomial(())
    out = [0] * (max(counts) + 1)
    for j, c in counts.items():
        out[j] = c
    return IntPolynomial(tuple(out))


@lru_cache(maxsize=None)
def _kostant_coeffs(coeffs: tuple[int, ...], caps: Caps) -> tuple[int, ...]:
    gamma = GammaVec(coeffs)
    counts: dict[int, int] = {}
    for kappa in kappa_partitions(gamma, caps=caps):
        j = gamma.length - kappa.num_parts
        counts[j] = counts.get(j, 0) + 1
    return _dense(counts).coeffs


def kostant_poly(gamma: GammaVec, *, caps: Caps = DEFAULT_CAPS) -> IntPolynomial:
    """The q-analogue K_gamma(t), tallied over coroot partitions.

    Coefficient of t^j = number of kappa with |gamma| - K(kappa) = j. For
    gamma = 0 the empty partition gives the constant polynomial 1. The
    degree is at most |gamma| - 1, with equality exactly when gamma is
    itself a positive coroot.
    """
    return IntPolynomial(_kostant_coeffs(gamma.coeffs, caps))


def kostant_poly_via_strata(gamma: GammaVec, *, caps: Caps = DEFAULT_CAPS) -> IntPolynomial:
    """K_gamma(t) recomputed from mu triangles: t^j counts strata of dimension j."""
    counts: dict[int, int] = {}
    for mu in mu_triangles(gamma, caps=caps):
        j = stratum_dim(mu)
        counts[j] = counts.get(j, 0) + 1
    if not counts:
        return IntPolynomial(())
    return _dense(counts)


def fiber_poincare(parts: GammaPartition, *, caps: Caps = DEFAULT_CAPS) -> IntPolynomial:
    """Product of K over the parts of a degree-vector partition (1 when empty)."""
    poly = ONE
    for part in parts.parts:
        poly = poly * kostant_poly(part, caps=caps)
    return poly
