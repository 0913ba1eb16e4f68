"""Finite-field lattice oracle: brute-force fiber counting over F_q[z].

This module is the package's independent check on the combinatorial
calculus. It builds actual chains of modules over F_q[z] and counts them,
while the partition/polynomial side predicts the counts; the two share no
code beyond the Triangle container, so agreement between them is evidence,
not tautology.

Representation
--------------
Work happens in the free module R^k over R = F_q[z], modelling a vector
bundle near one point (z is the local coordinate). A *lattice* is a
full-rank submodule L of R^k whose quotient R^k/L has finite length and is
killed by a power of z, i.e. all defect is concentrated at z = 0. Its
*colength* is that length, and a colength-c lattice always contains
z^c * R^k.

Every lattice has exactly one canonical basis, stored as the columns of a
lower-triangular k x k matrix B:

  * B[j][j] = z^(d_j), a monic power of z (the pivot of column j);
  * B[i][j] = 0 for i < j (nothing above the pivot);
  * for i > j the entry B[i][j] is reduced modulo the pivot of *row* i,
    i.e. deg B[i][j] < d_i.

The colength is d_1 + ... + d_k. Existence follows from column reduction
over R; uniqueness of this exact reduction rule is proved exhaustively in
the test suite by double enumeration against an independent linear-algebra
enumeration of z-stable subspaces.

A FlagChain is a sequence L_1 c L_2 c ... c L_{n-1} with L_k of rank k and
prescribed colength c_k, where rank k sits inside rank k+1 as the first k
coordinates. Its mu invariants are the colengths of the intersections
L_p n R^q, computed by exact elimination (no truncation, no fraction
field); bucketing chains by mu and comparing with the predicted counts
q^stratum_dim is what verify_against_kostant does.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import gfpoly as gf
from .gfpoly import Poly
from .kostant import kostant_poly
from .limits import Caps, DEFAULT_CAPS, CapExceededError
from .partitions import Triangle, mu_triangles, stratum_dim
from .roots import GammaVec

Column = tuple[Poly, ...]


def _require_prime(q: int) -> None:
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be a prime, got {q!r}")
    d = 2
    while d * d <= q:
        if q % d == 0:
            raise ValueError(f"q must be a prime, got {q}")
        d += 1


@dataclass(frozen=True)
class Lattice:
    """A finite-colength submodule of R^rank in canonical triangular form.

    cols[j][i] is the row-i entry of basis column j. The constructor insists
    on the canonical shape, so distinct Lattice values are distinct
    submodules and equality/hashing is structural.
    """

    rank: int
    q: int
    cols: tuple[Column, ...]

    def __post_init__(self) -> None:
        _require_prime(self.q)
        k = self.rank
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"rank must be a positive integer, got {k!r}")
        if len(self.cols) != k or any(len(col) != k for col in self.cols):
            raise ValueError("basis must be a square matrix of columns")
        for col in self.cols:
            for entry in col:
                if any(not isinstance(c, int) or not 0 <= c < self.q for c in entry):
                    raise ValueError("polynomial coefficients must lie in [0, q)")
                if entry and entry[-1] == 0:
                    raise ValueError("polynomials must be trimmed")
        diag = []
        for j, col in enumerate(self.cols):
            if any(col[i] for i in range(j)):
                raise ValueError("entries above the pivot must vanish")
            if not gf.is_z_power(col[j]):
                raise ValueError(f"pivot of column {j} must be a monic power of z")
            diag.append(gf.degree(col[j]))
        for j, col in enumerate(self.cols):
            for i in range(j + 1, k):
                if gf.degree(col[i]) >= diag[i]:
                    raise ValueError(
                        f"entry at row {i}, column {j} is not reduced modulo its row pivot"
                    )

    @property
    def diag(self) -> tuple[int, ...]:
        """Pivot exponents (d_1, ..., d_k)."""
        return tuple(gf.degree(col[j]) for j, col in enumerate(self.cols))

    @property
    def colength(self) -> int:
        return sum(self.diag)

    @classmethod
    def full(cls, rank: int, q: int) -> "Lattice":
        """The ambient module R^rank itself (colength 0)."""
        cols = tuple(
            tuple(gf.ONE if i == j else gf.ZERO for i in range(rank)) for j in range(rank)
        )
        return cls(rank, q, cols)

    @classmethod
    def from_generators(cls, rank: int, q: int, vectors) -> "Lattice":
        """Canonicalize any generating set of a full-rank z-local submodule."""
        _require_prime(q)
        cols = _canonical_columns([tuple(v) for v in vectors], rank, q)
        return cls(rank, q, cols)

    def __str__(self) -> str:
        rows = []
        for i in range(self.rank):
            rows.append(" ".join(_poly_str(self.cols[j][i]) for j in range(self.rank)))
        return "; ".join(rows)


def _poly_str(a: Poly) -> str:
    if not a:
        return "0"
    terms = []
    for i, c in enumerate(a):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("z" if c == 1 else f"{c}z")
        else:
            terms.append(f"z^{i}" if c == 1 else f"{c}z^{i}")
    return "+".join(terms)


def _pivot_row(columns: list[Column], row: int, q: int) -> tuple[Column | None, list[Column]]:
    """Concentrate the row's entries into one column by unimodular combinations.

    Returns (pivot, rest) where pivot carries the gcd of the original row
    entries (None when the row vanishes identically) and every column in
    rest has a zero in the row. The span of the columns is unchanged.
    """
    pivot = None
    rest = []
    for col in columns:
        if not col[row]:
            rest.append(col)
            continue
        if pivot is None:
            pivot = col
            continue
        a, b = pivot[row], col[row]
        g, x, y = gf.xgcd(a, b, q)
        u = gf.divmod_poly(b, g, q)[0]
        v = gf.divmod_poly(a, g, q)[0]
        merged = tuple(
            gf.add(gf.mul(x, pc, q), gf.mul(y, cc, q), q) for pc, cc in zip(pivot, col)
        )
        cleared = tuple(
            gf.sub(gf.mul(u, pc, q), gf.mul(v, cc, q), q) for pc, cc in zip(pivot, col)
        )
        pivot = merged
        rest.append(cleared)
    return pivot, rest


def _canonical_columns(gens: list[Column], k: int, q: int) -> tuple[Column, ...]:
    if any(len(col) != k for col in gens):
        raise ValueError("generator length does not match the rank")
    work = list(gens)
    basis: list[list[Poly]] = []
    for row in range(k):
        pivot, work = _pivot_row(work, row, q)
        if pivot is None:
            raise ValueError("generators do not span a full-rank submodule")
        lead = pivot[row]
        pivot = tuple(gf.scale(entry, pow(lead[-1], -1, q), q) for entry in pivot)
        if not gf.is_z_power(pivot[row]):
            raise ValueError("span is not z-local: a pivot ideal is not a power of z")
        basis.append(list(pivot))
    # whatever remains was a dependent combination and must have died
    for col in work:
        if any(col):
            raise AssertionError("leftover generator survived triangularization")
    diag = [gf.degree(basis[j][j]) for j in range(k)]
    # reduce below-pivot entries modulo their row pivots, top to bottom
    for j in range(k):
        for i in range(j + 1, k):
            quo, _ = gf.divmod_poly(basis[j][i], gf.monomial(diag[i]), q)
            if quo:
                basis[j] = [
                    gf.sub(bj, gf.mul(quo, bi, q), q) for bj, bi in zip(basis[j], basis[i])
                ]
    return tuple(tuple(col) for col in basis)


def _compositions(total: int, parts: int):
    """Weak compositions in decreasing lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _polys_below(d: int, q: int) -> list[Poly]:
    """All residues modulo z^d, in lexicographic coefficient order."""
    return [gf.trim(cs) for cs in product(range(q), repeat=d)]


def enumerate_lattices(rank: int, colength: int, q: int, *, caps: Caps = DEFAULT_CAPS) -> list[Lattice]:
    """Every lattice of the given rank and colength, each exactly once.

    Pivot exponent vectors run in decreasing lexicographic order, and for
    each the free below-pivot entries run through all residues modulo the
    row pivots. Because the canonical form is unique, distinct emitted
    matrices are distinct lattices and the list is exhaustive.
    """
    _require_prime(q)
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")
    if not isinstance(colength, int) or colength < 0:
        raise ValueError(f"colength must be a nonnegative integer, got {colength!r}")
    volume = sum(
        q ** sum(i * d for i, d in enumerate(diag))
        for diag in _compositions(colength, rank)
    )
    if volume > caps.max_lattice_volume:
        raise CapExceededError(
            f"{volume} candidate lattices exceed the volume cap {caps.max_lattice_volume}"
        )
    out = []
    for diag in _compositions(colength, rank):
        free = [(i, j) for j in range(rank) for i in range(j + 1, rank) if diag[i] > 0]
        pools = [_polys_below(diag[i], q) for i, _ in free]
        for assignment in product(*pools):
            entries = dict(zip(free, assignment))
            cols = tuple(
                tuple(
                    gf.monomial(diag[j]) if i == j else entries.get((i, j), gf.ZERO)
                    for i in range(rank)
                )
                for j in range(rank)
            )
            out.append(Lattice(rank, q, cols))
    return out


def contains(outer: Lattice, inner: Lattice) -> bool:
    """Whether every basis vector of inner lies in outer.

    inner may have smaller rank; its vectors are read inside the outer
    module via the first-coordinates embedding. Membership is decided by
    forward substitution against the triangular basis, where each step needs
    an exact division by the pivot z^(d_i).
    """
    if inner.q != outer.q:
        raise ValueError("lattices live over different fields")
    if inner.rank > outer.rank:
        raise ValueError(
            f"inner rank {inner.rank} exceeds outer rank {outer.rank}"
        )
    q = outer.q
    k = outer.rank
    diag = outer.diag
    for col in inner.cols:
        v = list(col) + [gf.ZERO] * (k - inner.rank)
        for i in range(k):
            if not v[i]:
                continue
            quo = gf.div_z_power(v[i], diag[i])
            if quo is None:
                return False
            for r in range(i, k):
                v[r] = gf.sub(v[r], gf.mul(quo, outer.cols[i][r], q), q)
    return True


def coordinate_intersection(lat: Lattice, m: int) -> Lattice:
    """The lattice L n R^m inside the first m coordinates.

    Elimination from the bottom row up concentrates each of the rows
    m..rank-1 into one column and discards it; the surviving columns are a
    basis of the kernel of the projection onto the trailing coordinates,
    supported entirely in the leading m. Canonicalizing their truncations
    gives the intersection.
    """
    if not 1 <= m <= lat.rank:
        raise ValueError(f"coordinate count must be in 1..{lat.rank}, got {m}")
    if m == lat.rank:
        return lat
    active = list(lat.cols)
    for row in range(lat.rank - 1, m - 1, -1):
        _, active = _pivot_row(active, row, lat.q)
    gens = [col[:m] for col in active]
    return Lattice.from_generators(m, lat.q, gens)


@dataclass(frozen=True)
class FlagChain:
    """A nested chain L_1 c ... c L_{n-1} with colength(L_k) = c_k(gamma)."""

    n: int
    q: int
    gamma: GammaVec
    lattices: tuple[Lattice, ...]

    def __post_init__(self) -> None:
        if self.gamma.n != self.n:
            raise ValueError("gamma rank context does not match n")
        if len(self.lattices) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} lattices, got {len(self.lattices)}")
        for k, lat in enumerate(self.lattices, start=1):
            if lat.rank != k:
                raise ValueError(f"member {k} has rank {lat.rank}")
            if lat.q != self.q:
                raise ValueError("chain members live over different fields")
            if lat.colength != self.gamma.coeff(k):
                raise ValueError(
                    f"member {k} has colength {lat.colength}, expected {self.gamma.coeff(k)}"
                )
        for prev, nxt in zip(self.lattices, self.lattices[1:]):
            if not contains(nxt, prev):
                raise ValueError("chain members are not nested")


def _check_oracle_caps(n: int, gamma: GammaVec, q: int, caps: Caps) -> None:
    _require_prime(q)
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank parameter n must be an integer >= 2, got {n!r}")
    if gamma.n != n:
        raise ValueError("gamma rank context does not match n")
    if n > caps.oracle_max_rank:
        raise CapExceededError(f"n = {n} exceeds the oracle rank cap {caps.oracle_max_rank}")
    if gamma.length > caps.oracle_max_length:
        raise CapExceededError(
            f"|gamma| = {gamma.length} exceeds the oracle length cap {caps.oracle_max_length}"
        )
    if q not in caps.oracle_primes:
        raise CapExceededError(f"q = {q} is not among the allowed primes {caps.oracle_primes}")


def enumerate_fiber_chains(
    n: int, gamma: GammaVec, q: int, *, caps: Caps = DEFAULT_CAPS
) -> list[FlagChain]:
    """All flag chains over F_q with colength profile gamma, layer by layer."""
    _check_oracle_caps(n, gamma, q, caps)
    partial: list[tuple[Lattice, ...]] = [()]
    for k in range(1, n):
        layer = enumerate_lattices(k, gamma.coeff(k), q, caps=caps)
        grown = []
        for chain in partial:
            prev = chain[-1] if chain else None
            for lat in layer:
                if prev is None or contains(lat, prev):
                    grown.append(chain + (lat,))
        partial = grown
    return [FlagChain(n=n, q=q, gamma=gamma, lattices=chain) for chain in partial]


def mu_invariants(chain: FlagChain) -> Triangle:
    """The mu triangle of a chain: mu_{pq} = colength of L_p n R^q."""
    rows = []
    for p in range(1, chain.n):
        lat = chain.lattices[p - 1]
        row = tuple(
            lat.colength if q_ == p else coordinate_intersection(lat, q_).colength
            for q_ in range(1, p + 1)
        )
        rows.append(row)
    return Triangle(n=chain.n, kind="mu", rows=tuple(rows))


@dataclass
class FiberCount:
    """Chain total plus the per-mu bucket counts, in canonical mu order."""

    total: int
    buckets: dict[Triangle, int]


def fiber_point_count(
    n: int, gamma: GammaVec, q: int, *, caps: Caps = DEFAULT_CAPS
) -> FiberCount:
    """Count chains and bucket them by mu invariant.

    Buckets follow the canonical mu_triangles order; a mu showing up outside
    that list would be a theory violation and is appended at the end rather
    than dropped, so verify_against_kostant can report it.
    """
    chains = enumerate_fiber_chains(n, gamma, q, caps=caps)
    raw: dict[Triangle, int] = {}
    for chain in chains:
        mu = mu_invariants(chain)
        raw[mu] = raw.get(mu, 0) + 1
    buckets: dict[Triangle, int] = {}
    for mu in mu_triangles(gamma, caps=caps):
        if mu in raw:
            buckets[mu] = raw.pop(mu)
    for mu in sorted(raw, key=lambda t: t.rows):
        buckets[mu] = raw[mu]
    return FiberCount(total=len(chains), buckets=buckets)


@dataclass(frozen=True)
class BucketCheck:
    mu: Triangle
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class OracleReport:
    """Outcome of checking brute-force counts against the predicted values."""

    n: int
    gamma: GammaVec
    q: int
    total_expected: int
    total_actual: int
    missing_mu: tuple[Triangle, ...]
    unexpected_mu: tuple[Triangle, ...]
    buckets: tuple[BucketCheck, ...]

    @property
    def total_ok(self) -> bool:
        return self.total_expected == self.total_actual

    @property
    def keys_ok(self) -> bool:
        return not self.missing_mu and not self.unexpected_mu

    @property
    def buckets_ok(self) -> bool:
        return all(b.ok for b in self.buckets)

    @property
    def passed(self) -> bool:
        return self.total_ok and self.keys_ok and self.buckets_ok


def verify_against_kostant(
    n: int, gamma: GammaVec, q: int, *, caps: Caps = DEFAULT_CAPS
) -> OracleReport:
    """Compare the oracle with the partition calculus on three points.

    (a) the chain total must equal K_gamma(q); (b) the bucket keys must be
    exactly the mu triangles of gamma's coroot partitions; (c) each bucket
    must hold q^stratum_dim(mu) chains. Any discrepancy lands in the report
    with its witnesses; nothing is swallowed.
    """
    count = fiber_point_count(n, gamma, q, caps=caps)
    expected_mus = mu_triangles(gamma, caps=caps)
    expected_set = set(expected_mus)
    total_expected = kostant_poly(gamma, caps=caps).eval_at(q)
    missing = tuple(mu for mu in expected_mus if mu not in count.buckets)
    unexpected = tuple(mu for mu in count.buckets if mu not in expected_set)
    checks = tuple(
        BucketCheck(mu=mu, expected=q ** stratum_dim(mu), actual=count.buckets.get(mu, 0))
        for mu in expected_mus
    )
    return OracleReport(
        n=n,
        gamma=gamma,
        q=q,
        total_expected=total_expected,
        total_actual=count.total,
        missing_mu=missing,
        unexpected_mu=unexpected,
        buckets=checks,
    )


def transformed(lat: Lattice, matrix) -> Lattice:
    """Image of the lattice under a constant invertible change of coordinates.

    matrix is a rank x rank array of F_q scalars acting on coordinates from
    the left; the image basis is recanonicalized. For chain-level use the
    matrix must preserve the coordinate flag, i.e. be upper triangular, so
    that its leading principal blocks act consistently on every rank.
    """
    k, q = lat.rank, lat.q
    gens = []
    for col in lat.cols:
        vec = []
        for i in range(k):
            acc = gf.ZERO
            for r in range(k):
                if matrix[i][r] % q:
                    acc = gf.add(acc, gf.scale(col[r], matrix[i][r], q), q)
            vec.append(acc)
        gens.append(tuple(vec))
    return Lattice.from_generators(k, q, gens)
