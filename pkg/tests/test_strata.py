from itertools import product

import pytest

import helpers
from quasiflags.partitions import GammaPartition, gamma_partitions
from quasiflags.roots import GammaVec, gamma_as_coroot
from quasiflags.strata import (
    ICStalkTable,
    StalkEntry,
    enumerate_strata,
    ic_stalk_table,
    moduli_dim,
    parity_check,
    smallness_report,
)


def test_moduli_dim():
    assert moduli_dim(3, GammaVec((1, 1))) == 7
    assert moduli_dim(2, GammaVec((1,))) == 3
    assert moduli_dim(2, GammaVec((3,))) == 7
    assert moduli_dim(4, GammaVec((0, 0, 0))) == 6


def test_atlas_rank_three():
    recs = enumerate_strata(3, GammaVec((1, 1)))
    summary = [
        (r.beta.coeffs, [p.coeffs for p in r.parts.parts], r.m, r.stratum_dim, r.codim)
        for r in recs
    ]
    assert summary == [
        ((1, 1), [], 0, 7, 0),
        ((1, 0), [(0, 1)], 1, 6, 1),
        ((0, 1), [(1, 0)], 1, 6, 1),
        ((0, 0), [(1, 1)], 1, 4, 3),
        ((0, 0), [(1, 0), (0, 1)], 2, 5, 2),
    ]
    deep = recs[3]
    assert deep.fiber_dim == 1
    assert str(deep.fiber_poincare) == "1 + t"
    assert recs[0].fiber_dim == 0


def test_atlas_rank_two():
    recs = enumerate_strata(2, GammaVec((1,)))
    assert len(recs) == 2
    assert recs[0].codim == 0
    assert recs[1].codim == 1
    assert all(r.fiber_dim == 0 for r in recs)


def test_atlas_zero():
    recs = enumerate_strata(3, GammaVec((0, 0)))
    assert len(recs) == 1
    assert recs[0].m == 0
    assert recs[0].codim == 0


def test_open_stratum_comes_first():
    for n in (2, 3):
        for alpha in helpers.vectors_with_length_at_most(n, 3):
            recs = enumerate_strata(n, alpha)
            assert recs[0].beta == alpha
            assert recs[0].m == 0


def test_dimension_accounting():
    for n in (2, 3, 4):
        for alpha in helpers.vectors_with_length_at_most(n, 4):
            dim = moduli_dim(n, alpha)
            for r in enumerate_strata(n, alpha):
                assert r.stratum_dim + r.codim == dim
                assert r.m == r.parts.m
                defect = alpha - r.beta
                assert r.parts.total == defect
                assert r.codim == 2 * defect.length - r.m
                assert r.fiber_dim <= defect.length - r.m
                all_coroots = all(
                    gamma_as_coroot(p) is not None for p in r.parts.parts
                )
                assert (r.fiber_dim == defect.length - r.m) == all_coroots


def test_atlas_covers_index_set_exactly_once():
    for n in (2, 3):
        for alpha in helpers.vectors_with_length_at_most(n, 3):
            recs = enumerate_strata(n, alpha)
            keys = {
                (r.beta.coeffs, tuple(p.coeffs for p in r.parts.parts)) for r in recs
            }
            assert len(keys) == len(recs)
            expected = 0
            for beta_coeffs in product(*(range(a + 1) for a in alpha.coeffs)):
                expected += len(gamma_partitions(alpha - GammaVec(beta_coeffs)))
            assert len(recs) == expected


def test_smallness_pass_with_margin():
    rep = smallness_report(3, GammaVec((1, 1)))
    assert rep.passed and not rep.vacuous
    assert rep.min_margin == 1
    assert rep.witness.beta.is_zero()
    assert [p.coeffs for p in rep.witness.parts.parts] == [(1, 1)]
    assert all(row.ok for row in rep.rows)
    assert all(ok for _, _, ok in rep.aggregate)


def test_smallness_vacuous_rank_two():
    rep = smallness_report(2, GammaVec((3,)))
    assert rep.passed and rep.vacuous
    assert rep.min_margin is None
    assert rep.witness is None
    assert rep.aggregate == ()
    assert all(row.margin is None and row.ok for row in rep.rows)


def test_smallness_grid():
    for n in (2, 3, 4):
        for alpha in helpers.vectors_with_length_at_most(n, 4):
            assert smallness_report(n, alpha).passed, alpha


def test_smallness_margin_definition():
    # a margin is reported exactly on the strata with positive fiber_dim
    rep = smallness_report(3, GammaVec((2, 2)))
    margins = []
    for row in rep.rows:
        if row.record.fiber_dim > 0:
            assert row.margin == row.record.codim - 2 * row.record.fiber_dim
            assert row.ok == (row.margin > 0)
            margins.append(row.margin)
        else:
            assert row.margin is None and row.ok
    assert margins
    assert rep.min_margin == min(margins)


def test_ic_table_hand_case():
    table = ic_stalk_table(
        3,
        GammaVec((1, 1)),
        GammaVec((0, 0)),
        GammaPartition.of(3, [GammaVec((1, 1))]),
    )
    assert [(e.degree, e.twist, e.multiplicity) for e in table.entries] == [
        (-7, 0, 1),
        (-5, 1, 1),
    ]
    assert parity_check(table)


def test_ic_table_open_stratum():
    alpha = GammaVec((2,))
    table = ic_stalk_table(2, alpha, alpha, GammaPartition.of(2, []))
    assert [(e.degree, e.twist, e.multiplicity) for e in table.entries] == [(-5, 0, 1)]


def test_ic_table_rank_two_full_defect():
    table = ic_stalk_table(
        2, GammaVec((2,)), GammaVec((0,)), GammaPartition.of(2, [GammaVec((2,))])
    )
    assert [(e.degree, e.twist, e.multiplicity) for e in table.entries] == [(-5, 0, 1)]


def test_ic_table_rejects_bad_stratum():
    with pytest.raises(ValueError):
        ic_stalk_table(3, GammaVec((1, 0)), GammaVec((0, 1)), GammaPartition.of(3, []))
    with pytest.raises(ValueError):
        ic_stalk_table(
            3,
            GammaVec((1, 1)),
            GammaVec((0, 0)),
            GammaPartition.of(3, [GammaVec((1, 0))]),
        )


def test_parity_detects_planted_violation():
    bad = ICStalkTable(
        n=3,
        alpha=GammaVec((1, 1)),
        beta=GammaVec((0, 0)),
        parts=GammaPartition.of(3, [GammaVec((1, 1))]),
        entries=(StalkEntry(degree=-6, twist=0, multiplicity=1),),
    )
    assert not parity_check(bad)


def test_parity_and_leading_entry_across_grid():
    for n in (2, 3):
        for alpha in helpers.vectors_with_length_at_most(n, 3):
            for rec in enumerate_strata(n, alpha):
                table = ic_stalk_table(n, alpha, rec.beta, rec.parts)
                assert parity_check(table)
                first = table.entries[0]
                assert first.twist == 0
                assert first.multiplicity == 1
                assert first.degree == -moduli_dim(n, alpha)
