from dataclasses import replace

import numpy as np
import pytest

from qmds.config import VerificationSettings
from qmds.constructions import (
    ConstructionSpec,
    DivisibilityKind,
    Family,
    VerifyLevel,
    assemble,
    build,
    check_lemma_matrix,
    divisibility_set,
    family_specs,
    multiples_by_search,
    reproduce,
    solve_parity_system,
    solve_power_system,
    solve_shifted_system,
    solve_sum_zero,
    solve_vandermonde_system,
    verify_code,
)
from qmds.errors import CertificateMismatchError, InvalidSpecError, LemmaViolation
from qmds.gf import field_for_q
from qmds.grs import hermitian_gram, power_sum_check
from qmds.linalg import ExactMatrix

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64]


def prime_ints(ctx, values):
    return [ctx.from_int(v) for v in values]


def power_rows(ctx, alpha, mus, r):
    ell = np.arange(1, r + 1)
    return [ctx.power(alpha, ell * mu).tolist() for mu in mus]


def test_divisibility_examples():
    assert divisibility_set("i", 4, 2, 1, 3) == [0, 2, 3]
    assert multiples_by_search(4, 3, 3) == [0, 2, 3]
    assert divisibility_set("i", 11, 1, 0, 3) == [0]
    assert divisibility_set("ii", 7, 4, 0, 4) == [0, 4]
    assert divisibility_set("ii", 7, 4, 0, 3) == [0]
    assert divisibility_set("shifted", 7, 4, 1, 3) == [4]


def test_divisibility_rejects_out_of_range():
    with pytest.raises(InvalidSpecError):
        divisibility_set("i", 4, 2, 1, 4)
    with pytest.raises(InvalidSpecError):
        divisibility_set("ii", 7, 4, 3, 2)
    with pytest.raises(InvalidSpecError):
        divisibility_set("shifted", 7, 4, 0, 1)
    with pytest.raises(InvalidSpecError):
        divisibility_set("i", 5, 2, 0, 1)


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_divisibility_matches_search(q):
    checked = 0
    n = q * q - 1
    for kind in DivisibilityKind:
        for s in range(1, q + 1):
            divisor = 2 * s + 1 if kind is DivisibilityKind.I else 2 * s
            if (q + 1) % divisor:
                continue
            c = (q + 1) // divisor
            m = n // divisor
            if kind is DivisibilityKind.I:
                ts = range(0, s)
            elif kind is DivisibilityKind.II:
                ts = range(0, s - 1)
            else:
                ts = range(1, s)
            for t in ts:
                upper = (s + t) * c - 2 if kind is DivisibilityKind.SHIFTED else (s + t + 1) * c - 1
                shift = q + 1 if kind is DivisibilityKind.SHIFTED else 0
                for k in range(1, upper + 1):
                    assert divisibility_set(kind, q, s, t, k) == multiples_by_search(q, m, k, shift)
                    checked += 1
    if q in (4, 7, 8, 11):
        assert checked > 0


def test_solve_sum_zero(gf9, gf16, gf25, gf4):
    assert solve_sum_zero(gf9, 2).tolist() == [1, 1, 1]
    assert solve_sum_zero(gf16, 1).tolist() == [1, 1]
    assert solve_sum_zero(gf25, 2).tolist() == prime_ints(gf25, [1, 1, 3])
    for r in range(1, 6):
        u = solve_sum_zero(gf25, r)
        assert gf25.total(u) == 0
        assert np.all(u != 0)
    with pytest.raises(InvalidSpecError):
        solve_sum_zero(gf4, 1)


def test_solve_parity_system(gf9, gf25, gf49, gf16, subfield_solutions):
    assert solve_parity_system(gf9, 2).tolist() == [1, 1, 1]
    assert solve_parity_system(gf49, 2).tolist() == prime_ints(gf49, [1, 3, 3])

    u = solve_parity_system(gf25, 3)
    signs = [1, gf25.minus_one, 1, gf25.minus_one]
    system = ExactMatrix.from_rows(gf25, [[1, 1, 1, 1], [0] + signs[:3]])
    assert tuple(u.tolist()) in subfield_solutions(system)
    two = gf25.from_int(2)
    assert gf25.add(u[0], gf25.mul(two, gf25.add(u[1], u[3]))) == 0
    assert gf25.add(u[0], gf25.mul(two, u[2])) == 0

    with pytest.raises(InvalidSpecError):
        solve_parity_system(gf16, 2)
    with pytest.raises(InvalidSpecError):
        solve_parity_system(gf9, 1)


def test_solve_vandermonde_system(gf9, gf25, gf49, subfield_solutions):
    assert solve_vandermonde_system(gf9, [1]).tolist() == [1, gf9.minus_one]
    assert solve_vandermonde_system(gf25, prime_ints(gf25, [1, 2])).tolist() == prime_ints(gf25, [1, 3, 1])

    xs = prime_ints(gf49, [1, 2, 3])
    u = solve_vandermonde_system(gf49, xs)
    rows = [[1] * 4] + [[0] + gf49.power(xs, i).tolist() for i in (1, 2)]
    assert tuple(u.tolist()) in subfield_solutions(ExactMatrix.from_rows(gf49, rows))

    with pytest.raises(InvalidSpecError):
        solve_vandermonde_system(gf25, [1, 1])
    with pytest.raises(InvalidSpecError):
        solve_vandermonde_system(gf25, [0, 1])
    with pytest.raises(InvalidSpecError):
        solve_vandermonde_system(gf25, [2])


def test_solve_power_system(gf16, gf25, subfield_solutions):
    assert solve_power_system(gf16, gf16.omega_power(3), 3, 0, 1).tolist() == [1, 1]

    # q = 4, s = 2, t = 1
    alpha = gf16.omega_power(3)
    u = solve_power_system(gf16, alpha, 2, 2, 3)
    rows = [[1] * 4] + [[0] + row for row in power_rows(gf16, alpha, [2, 3], 3)]
    assert tuple(u.tolist()) in subfield_solutions(ExactMatrix.from_rows(gf16, rows))

    # q = 5, s = 3, t = 1, r = 4
    alpha = gf25.omega_power(4)
    u = solve_power_system(gf25, alpha, 2, 3, 4)
    rows = [[1] * 5] + [[0] + row for row in power_rows(gf25, alpha, [2, 3, 4], 4)]
    assert tuple(u.tolist()) in subfield_solutions(ExactMatrix.from_rows(gf25, rows))

    with pytest.raises(InvalidSpecError):
        solve_power_system(gf25, alpha, 2, 2, 4)


@pytest.mark.parametrize("q,s,t", [(7, 4, 1), (11, 6, 1), (9, 5, 2)])
def test_solve_shifted_system(q, s, t, subfield_solutions):
    ctx = field_for_q(q)
    r = 2 * t + 1
    m = (q * q - 1) // (2 * s)
    u = solve_shifted_system(ctx, s, t)
    assert u.size == r
    assert np.all(u != 0)
    assert ctx.in_base_subfield(u).all()
    # sum_l omega^(l (mu m - q - 1)) u_l = 0 for mu = s-t+1 .. s+t-1
    rows = [ctx.power(2, np.arange(1, r + 1) * (mu * m - q - 1)).tolist() for mu in range(s - t + 1, s + t)]
    system = ExactMatrix.from_rows(ctx, rows)
    assert not ctx.total(ctx.mul(system.entries, u[None, :]), axis=1).any()
    assert tuple(u.tolist()) in subfield_solutions(system)


def lemma_system(certificate):
    spec, ctx = certificate.spec, certificate.ctx
    s, r, m = spec.s, spec.r, spec.m
    t = spec.t or 0
    ell = np.arange(1, r + 1)
    alpha = ctx.omega_power(m)
    sum_row = [1] * (r + 1)
    if spec.family is Family.T32:
        xs = ctx.power(alpha, np.arange(r))
        rows = [sum_row] + [[0] + ctx.power(xs, i).tolist() for i in range(1, r)]
    elif spec.family is Family.T43I:
        rows = [sum_row]
    elif spec.family is Family.T53I:
        rows = [sum_row]
        if certificate.routing == "parity":
            rows.append([0] + [ctx.minus_one if i % 2 else 1 for i in ell.tolist()])
    elif spec.family is Family.T43II:
        rows = [sum_row] + [[0] + row for row in power_rows(ctx, alpha, range(s - t + 1, s + t + 1), r)]
    elif spec.family is Family.T53II:
        rows = [sum_row] + [[0] + row for row in power_rows(ctx, alpha, range(s - t, s + t + 1), r)]
    else:
        rows = [ctx.power(2, ell * (mu * m - ctx.q - 1)).tolist() for mu in range(s - t + 1, s + t)]
    return ExactMatrix.from_rows(ctx, rows, cols=certificate.u.size)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_solved_multipliers_match_exhaustive_search(q, subfield_solutions):
    checked = 0
    for top in family_specs(q):
        for k in range(1, top.k_max + 1):
            certificate = assemble(top.with_k(k))
            u = certificate.u
            assert power_sum_check(certificate.code), certificate.spec.reference
            if u.size > 5:
                continue
            assert tuple(u.tolist()) in subfield_solutions(lemma_system(certificate)), certificate.spec.reference
            checked += 1
    assert checked > 0


def test_check_lemma_matrix(gf9):
    check_lemma_matrix(ExactMatrix.from_rows(gf9, [[1, 1, 1], [0, 1, 2]]), 2)
    with pytest.raises(LemmaViolation):
        check_lemma_matrix(ExactMatrix.from_rows(gf9, [[1, 1, 1], [0, 1, 1]]), 2)


def test_spec_validation():
    spec = ConstructionSpec.create("T43ii", 4, 2, k=3, t=1)
    assert (spec.r, spec.m, spec.n, spec.k_max) == (3, 3, 10, 3)
    assert spec.reference == "T43ii:q=4:s=2:r=3:t=1:k=3"
    assert ConstructionSpec.create("T43ii", 4, 2, k=3, r=3).t == 1
    assert ConstructionSpec.create("T53ii", 5, 3, k=4, t=1).r == 4
    assert ConstructionSpec.create("T63", 7, 4, k=5, t=3).n == 42

    with pytest.raises(InvalidSpecError):
        ConstructionSpec.create("T43ii", 4, 2, k=4, t=1)
    with pytest.raises(InvalidSpecError):
        ConstructionSpec.create("T43ii", 4, 2, k=3, r=4)
    with pytest.raises(InvalidSpecError):
        ConstructionSpec.create("T32", 5, 3, k=1, r=1)
    with pytest.raises(InvalidSpecError):
        ConstructionSpec.create("T32", 5, 4, k=1, r=2, t=0)
    with pytest.raises(InvalidSpecError):
        ConstructionSpec.create("T99", 5, 4, k=1, r=1)
    with pytest.raises(InvalidSpecError):
        ConstructionSpec.create("T43i", 2, 1, k=1, r=1)
    with pytest.raises(InvalidSpecError):
        ConstructionSpec.create("T53i", 7, 4, k=1, r=1)
    with pytest.raises(InvalidSpecError):
        ConstructionSpec.create("T63", 7, 4, k=1, t=0)
    with pytest.raises(InvalidSpecError):
        ConstructionSpec.create("T32", 6, 1, k=1, r=1)


@pytest.mark.parametrize(
    "family,q,s,r,t",
    [("T43i", 4, 2, 5, None), ("T43ii", 4, 2, None, 2), ("T53i", 7, 4, 8, None), ("T53ii", 7, 4, None, 3)],
)
def test_corner_lengths_point_to_t32(family, q, s, r, t):
    with pytest.raises(InvalidSpecError, match="T32"):
        ConstructionSpec.create(family, q, s, k=1, r=r, t=t)


def test_s_equal_one_rejected_for_t53():
    with pytest.raises(InvalidSpecError, match="s > 1"):
        ConstructionSpec.create("T53i", 5, 1, k=1, r=1)


def test_build_t32_small():
    certificate = build(ConstructionSpec.create("T32", 3, 2, k=1, r=1))
    code = certificate.code
    assert (code.n, code.k) == (5, 1)
    assert certificate.routing == "vandermonde"
    verdicts = certificate.verdicts
    assert verdicts.gram_zero and verdicts.power_sum and verdicts.mds and verdicts.singleton_equality
    assert verdicts.min_distance == 5
    assert verdicts.mds_mode == "exhaustive"


def test_build_t32_full_length():
    certificate = build(ConstructionSpec.create("T32", 5, 4, k=4, r=4))
    assert certificate.code.n == 25
    assert certificate.verdicts.min_distance == 22
    assert certificate.accepted


def test_build_t43ii():
    certificate = build(ConstructionSpec.create("T43ii", 4, 2, k=3, t=1))
    assert (certificate.code.n, certificate.code.k) == (10, 3)
    assert certificate.routing == "power"
    assert certificate.multiples == (0, 2, 3)
    assert certificate.verdicts.min_distance == 8


def test_build_t63():
    certificate = build(ConstructionSpec.create("T63", 7, 4, k=3, t=1))
    assert (certificate.code.n, certificate.code.k) == (18, 3)
    assert certificate.routing == "shifted"
    assert 0 not in certificate.code.a.tolist()
    assert certificate.verdicts.min_distance == 16


def test_t53i_routing():
    assert assemble(ConstructionSpec.create("T53i", 3, 2, k=2, r=3)).routing == "parity"
    assert assemble(ConstructionSpec.create("T53i", 7, 4, k=4, r=3)).routing == "parity"
    assert assemble(ConstructionSpec.create("T53i", 7, 4, k=3, r=3)).routing == "sum_zero"


def test_t32_coset_powers_lie_in_subfield():
    spec = ConstructionSpec.create("T32", 11, 5, k=8, r=4)
    certificate = assemble(spec)
    ctx = certificate.ctx
    xs = ctx.power(np.asarray(certificate.coset_reps), spec.m)
    assert ctx.in_base_subfield(xs).all()
    assert np.unique(xs).size == spec.r
    assert certificate.code.n == 97


def test_verify_levels():
    spec = ConstructionSpec.create("T43i", 4, 2, k=2, r=2)
    certificate = assemble(spec)
    assert verify_code(spec, certificate.code, VerifyLevel.PARAMS).failures() == []
    gram = verify_code(spec, certificate.code, "gram")
    assert gram.gram_zero and gram.power_sum and gram.mds is None
    full = verify_code(spec, certificate.code, "full", VerificationSettings(codeword_bound=1))
    assert full.min_distance is None
    assert full.accepted


@pytest.mark.parametrize(
    "family,q,s,r,t",
    [
        ("T32", 5, 2, 2, None),
        ("T43i", 4, 2, 2, None),
        ("T43ii", 4, 2, None, 1),
        ("T53i", 5, 3, 3, None),
        ("T53ii", 5, 3, None, 1),
        ("T63", 7, 4, None, 1),
    ],
)
def test_negative_controls(family, q, s, r, t):
    spec = ConstructionSpec.create(family, q, s, k=1, r=r, t=t)
    spec = spec.with_k(spec.k_max)
    code = assemble(spec).code
    ctx = code.ctx
    rng = np.random.default_rng(2024)
    detected = 0
    for index in rng.integers(0, code.n, size=100):
        v = code.v.copy()
        old, new = int(v[index]), int(rng.integers(1, ctx.order))
        v[index] = new
        broken = code.with_multipliers(v)
        caught = not hermitian_gram(broken).is_zero() or not power_sum_check(broken)
        # only the norm of a multiplier enters the Hermitian conditions
        assert caught == (int(ctx.norm(new)) != int(ctx.norm(old)))
        detected += caught
    assert detected >= 50


def test_reproduce_round_trip():
    certificate = build(ConstructionSpec.create("T53ii", 5, 3, k=4, t=1), level="gram")
    assert reproduce(certificate, "gram").accepted

    tampered_v = certificate.code.v.copy()
    tampered_v[3] = certificate.ctx.mul(tampered_v[3], 2)
    tampered = replace(certificate, code=certificate.code.with_multipliers(tampered_v))
    with pytest.raises(CertificateMismatchError):
        reproduce(tampered, "gram")


def test_family_specs_small_q():
    specs = list(family_specs(3, n_max=10))
    references = {spec.reference for spec in specs}
    assert "T32:q=3:s=2:r=1:k=1" in references
    assert "T53i:q=3:s=2:r=3:k=2" in references
    assert all(spec.n <= 10 and spec.k == spec.k_max for spec in specs)
    assert {spec.family for spec in specs} <= set(Family)


@pytest.mark.parametrize("family,q,s,r,t", [("T32", 7, 3, 2, None), ("T43ii", 4, 2, None, 1), ("T53ii", 5, 3, None, 1)])
def test_every_k_below_maximum_builds(family, q, s, r, t):
    spec = ConstructionSpec.create(family, q, s, k=1, r=r, t=t)
    for k in range(1, spec.k_max + 1):
        assert build(spec.with_k(k), level="gram").accepted
