"""Coroot partitions and the mu/nu/kappa triangle calculus.

A KappaPartition writes a degree vector gamma as a multiset of positive
coroots with multiplicities (kappa_{pq} copies of [p, q]). Two triangular
integer arrays are attached to each such partition:

    nu_{pq} = sum over r <= q of kappa_{pr}          (prefix sums in q)
    mu_{pq} = sum over s >= p of nu_{sq}             (suffix sums in p)

both indexed by 1 <= q <= p <= n-1. The passage kappa -> nu -> mu is a
bijection onto its image, inverted entry by entry:

    nu_{pq} = mu_{pq} - mu_{p+1,q},   kappa_{pq} = nu_{pq} - nu_{p,q-1}

(with out-of-range entries read as 0). The mu arrays are the fiber
invariants of flag chains: mu_{pq} records the defect of the p-th chain
member against the q-th coordinate subspace, and the quantity

    stratum_dim(mu) = mu_{21} + mu_{32} + ... + mu_{n-1,n-2}

is the dimension of the corresponding fiber stratum. GammaPartition is the
separate notion of an unordered multiset of nonzero degree vectors summing
to alpha; the two kinds of partition never coerce into each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .limits import Caps, DEFAULT_CAPS, check_length, check_rank
from .roots import GammaVec, Interval, interval_to_gamma, positive_coroots


class NotInMError(ValueError):
    """A mu triangle that is not the image of any coroot partition of gamma."""


@dataclass(frozen=True)
class KappaPartition:
    """A partition of a degree vector into positive coroots.

    mult lists (interval, multiplicity) pairs sorted by (q, p), with all
    multiplicities >= 1; absent coroots have multiplicity 0. The partitioned
    vector is recovered by the gamma property, so consistency is automatic.
    """

    n: int
    mult: tuple[tuple[Interval, int], ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("rank context must be >= 2")
        keys = []
        for c, m in self.mult:
            if c.p > self.n - 1:
                raise ValueError(f"coroot {c} does not fit in rank n={self.n}")
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"multiplicity of {c} must be a positive integer, got {m!r}")
            keys.append((c.q, c.p))
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("mult must be sorted by (q, p) without repeats")

    @classmethod
    def of(cls, n: int, multiplicities: dict[Interval, int]) -> "KappaPartition":
        """Build from an interval -> multiplicity mapping (zeros dropped)."""
        items = tuple(
            (c, m)
            for c, m in sorted(multiplicities.items(), key=lambda cm: (cm[0].q, cm[0].p))
            if m != 0
        )
        return cls(n, items)

    def multiplicity(self, c: Interval) -> int:
        for iv, m in self.mult:
            if iv == c:
                return m
        return 0

    @property
    def gamma(self) -> GammaVec:
        total = GammaVec.zero(self.n)
        for c, m in self.mult:
            total = total + interval_to_gamma(c, self.n).scaled(m)
        return total

    @property
    def num_parts(self) -> int:
        """K(kappa), the number of coroots counted with multiplicity."""
        return sum(m for _, m in self.mult)

    def __str__(self) -> str:
        if not self.mult:
            return "0"
        return "+".join(str(c) if m == 1 else f"{m}*{c}" for c, m in self.mult)


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular integer array a_{pq}, 1 <= q <= p <= n-1.

    kind is "nu" or "mu" and rows[p-1] holds (a_{p1}, ..., a_{pp}). Only the
    shape is validated here; the order and boundary inequalities satisfied by
    arrays in the image of the partition transforms are theorems about that
    image, not constraints on the container (mu_to_kappa must be able to
    examine arbitrary candidate triangles and reject them).
    """

    n: int
    kind: str
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.kind not in ("mu", "nu"):
            raise ValueError(f'kind must be "mu" or "nu", got {self.kind!r}')
        if self.n < 2:
            raise ValueError("rank context must be >= 2")
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} rows, got {len(rows)}")
        for p, row in enumerate(rows, start=1):
            if len(row) != p:
                raise ValueError(f"row {p} must have {p} entries, got {len(row)}")
            for a in row:
                if not isinstance(a, int) or isinstance(a, bool):
                    raise ValueError("triangle entries must be integers")

    def entry(self, p: int, q: int) -> int:
        """a_{pq} (1-based, q <= p)."""
        if not 1 <= q <= p <= self.n - 1:
            raise ValueError(f"no entry at (p={p}, q={q}) for n={self.n}")
        return self.rows[p - 1][q - 1]

    def flat(self) -> list[int]:
        """Row-major flattening [a11, a21, a22, a31, ...]."""
        return [a for row in self.rows for a in row]

    @classmethod
    def from_flat(cls, n: int, kind: str, values) -> "Triangle":
        values = list(values)
        if len(values) != n * (n - 1) // 2:
            raise ValueError(f"expected {n * (n - 1) // 2} entries for n={n}, got {len(values)}")
        rows, pos = [], 0
        for p in range(1, n):
            rows.append(tuple(values[pos : pos + p]))
            pos += p
        return cls(n, kind, tuple(rows))

    def __str__(self) -> str:
        return ";".join(",".join(str(a) for a in row) for row in self.rows)


@dataclass(frozen=True)
class GammaPartition:
    """An unordered multiset of nonzero degree vectors, stored sorted.

    Parts are kept in weakly decreasing lexicographic order, which is the
    canonical form used everywhere (hashing, printing, enumeration order).
    The empty partition of 0 is allowed and needs the explicit rank context.
    """

    n: int
    parts: tuple[GammaVec, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("rank context must be >= 2")
        for part in self.parts:
            if part.n != self.n:
                raise ValueError("part rank context does not match the partition")
            if part.is_zero():
                raise ValueError("parts must be nonzero")
        keys = [part.coeffs for part in self.parts]
        if keys != sorted(keys, reverse=True):
            raise ValueError("parts must be sorted in weakly decreasing lexicographic order")

    @classmethod
    def of(cls, n: int, parts) -> "GammaPartition":
        """Build from any iterable of parts, sorting into canonical order."""
        ordered = tuple(sorted(parts, key=lambda v: v.coeffs, reverse=True))
        return cls(n, ordered)

    @property
    def m(self) -> int:
        """Number of parts."""
        return len(self.parts)

    @property
    def total(self) -> GammaVec:
        total = GammaVec.zero(self.n)
        for part in self.parts:
            total = total + part
        return total

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts) if self.parts else "-"


def kappa_partitions(gamma: GammaVec, *, caps: Caps = DEFAULT_CAPS) -> list[KappaPartition]:
    """All partitions of gamma into positive coroots, deterministically ordered.

    Recursive descent over the coroots in (q, p) order, trying multiplicities
    from the largest possible downward, so partitions using long coroots come
    later and the all-simple partition (when gamma is supported everywhere)
    comes first.
    """
    check_rank(gamma.n, caps)
    check_length(gamma.length, caps)
    coroots = positive_coroots(gamma.n, caps=caps)
    out: list[KappaPartition] = []
    chosen: dict[Interval, int] = {}

    def descend(idx: int, remaining: tuple[int, ...]) -> None:
        if idx == len(coroots):
            if not any(remaining):
                out.append(KappaPartition.of(gamma.n, chosen))
            return
        c = coroots[idx]
        # coordinates before the current block start can never be reduced again
        if any(remaining[k] for k in range(c.q - 1)):
            return
        top = min(remaining[c.q - 1 : c.p])
        for m in range(top, -1, -1):
            if m:
                chosen[c] = m
            else:
                chosen.pop(c, None)
            reduced = tuple(
                r - m if c.q - 1 <= k <= c.p - 1 else r for k, r in enumerate(remaining)
            )
            descend(idx + 1, reduced)
        chosen.pop(c, None)

    descend(0, gamma.coeffs)
    return out


def kappa_to_nu(kappa: KappaPartition) -> Triangle:
    """Prefix sums nu_{pq} = kappa_{p1} + ... + kappa_{pq}."""
    n = kappa.n
    rows = []
    for p in range(1, n):
        running, row = 0, []
        for q in range(1, p + 1):
            running += kappa.multiplicity(Interval(p, q))
            row.append(running)
        rows.append(tuple(row))
    return Triangle(n, "nu", tuple(rows))


def nu_to_mu(nu: Triangle) -> Triangle:
    """Suffix sums mu_{pq} = nu_{pq} + nu_{p+1,q} + ... + nu_{n-1,q}."""
    if nu.kind != "nu":
        raise ValueError(f'expected a "nu" triangle, got kind {nu.kind!r}')
    n = nu.n
    rows: list[tuple[int, ...]] = [()] * (n - 1)
    below = [0] * n
    for p in range(n - 1, 0, -1):
        row = tuple(nu.entry(p, q) + below[q] for q in range(1, p + 1))
        for q in range(1, p + 1):
            below[q] = row[q - 1]
        rows[p - 1] = row
    return Triangle(n, "mu", tuple(rows))


def mu_to_kappa(mu: Triangle, gamma: GammaVec) -> KappaPartition:
    """Invert the triangle transforms, rejecting mu outside the image.

    Differencing is always possible; membership fails exactly when some
    derived kappa_{pq} is negative or some diagonal entry mu_{qq} differs
    from the coefficient c_q of gamma. NotInMError reports the first
    violation found.
    """
    if mu.kind != "mu":
        raise ValueError(f'expected a "mu" triangle, got kind {mu.kind!r}')
    n = mu.n
    if gamma.n != n:
        raise ValueError("gamma rank context does not match the triangle")
    for q in range(1, n):
        if mu.entry(q, q) != gamma.coeff(q):
            raise NotInMError(
                f"mu_{{{q}{q}}} = {mu.entry(q, q)} differs from c_{q} = {gamma.coeff(q)}"
            )
    multiplicities: dict[Interval, int] = {}
    for p in range(1, n):
        prev_nu = 0
        for q in range(1, p + 1):
            nu_pq = mu.entry(p, q) - (mu.entry(p + 1, q) if p + 1 <= n - 1 else 0)
            k_pq = nu_pq - prev_nu
            prev_nu = nu_pq
            if k_pq < 0:
                raise NotInMError(f"derived kappa_{{{p}{q}}} = {k_pq} is negative")
            if k_pq:
                multiplicities[Interval(p, q)] = k_pq
    return KappaPartition.of(n, multiplicities)


def mu_triangles(gamma: GammaVec, *, caps: Caps = DEFAULT_CAPS) -> list[Triangle]:
    """The mu triangles of all coroot partitions of gamma, in kappa order."""
    return [nu_to_mu(kappa_to_nu(k)) for k in kappa_partitions(gamma, caps=caps)]


def stratum_dim(mu: Triangle) -> int:
    """Subdiagonal sum mu_{21} + mu_{32} + ... + mu_{n-1,n-2}.

    Equals |gamma| - K(kappa) for the partition behind mu, and is the fiber
    dimension contributed by the stratum with invariant mu.
    """
    if mu.kind != "mu":
        raise ValueError(f'expected a "mu" triangle, got kind {mu.kind!r}')
    return sum(mu.entry(k + 1, k) for k in range(1, mu.n - 1))


def gamma_partitions(alpha: GammaVec, *, caps: Caps = DEFAULT_CAPS) -> list[GammaPartition]:
    """All multisets of nonzero degree vectors summing to alpha.

    Parts are chosen in weakly decreasing lexicographic order, so each
    multiset appears exactly once; partitions are emitted in decreasing
    lexicographic order of their part sequences. alpha = 0 yields just the
    empty partition.
    """
    check_rank(alpha.n, caps)
    check_length(alpha.length, caps)
    ranges = [range(a, -1, -1) for a in alpha.coeffs]
    candidates = [GammaVec(v) for v in product(*ranges) if any(v)]
    out: list[GammaPartition] = []
    chosen: list[GammaVec] = []

    def descend(remaining: GammaVec, start: int) -> None:
        if remaining.is_zero():
            out.append(GammaPartition(alpha.n, tuple(chosen)))
            return
        for idx in range(start, len(candidates)):
            v = candidates[idx]
            if v.leq(remaining):
                chosen.append(v)
                descend(remaining - v, idx)
                chosen.pop()

    descend(alpha, 0)
    return out
