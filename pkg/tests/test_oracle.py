import io
import subprocess
import sys

import numpy as np
import pytest

from cohzeta.laurent import monomial
from cohzeta.oracle import (
    BACKEND,
    CSV_COLUMNS,
    FieldSpec,
    GuardExceeded,
    ModuleSpec,
    OracleResult,
    Subspace,
    as_field,
    cotype,
    echelon_estimate,
    enumerate_submodules,
    extension_space,
    hall_count_oracle,
    hall_module,
    hall_table,
    inert_m1_quotient,
    module_type,
    moebius_oracle,
    moebius_to_top,
    order_module,
    quot_zeta_oracle_inert_m1,
    saturating_subspace_count_oracle,
    saturation_zeta_oracle,
    write_csv,
)
from cohzeta.oracle import _kernel_py
from cohzeta.partitions import Partition, rectangle, subpartitions
from cohzeta.qseries import hall_g, qbinom
from cohzeta.laurent import TSeries
from cohzeta.zeta import OrderFamily, coh_finitized, inert_m1_count, saturation_zeta


def _num(x, q):
    return x.evaluate(q=q).constant_term()


def zero_module(dim, p=2):
    return ModuleSpec(p, dim, (), ())


# -- fields and module specs ---------------------------------------------


def test_field_spec():
    f = FieldSpec(3, 2)
    assert f.q == 9
    a, b = f.modulus
    assert all((x * x + a * x + b) % 3 for x in range(3))
    assert FieldSpec(2, 2).modulus == (1, 1)
    with pytest.raises(ValueError):
        FieldSpec(4)
    with pytest.raises(ValueError):
        FieldSpec(2, 3)
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (0, 1))  # x^2 + 1 = (x + 1)^2
    with pytest.raises(ValueError):
        as_field(4)
    with pytest.raises(ValueError):
        FieldSpec(2).omega_matrix()


def test_module_spec_validation():
    with pytest.raises(ValueError):
        ModuleSpec(2, 2, (((0, 0), (1, 0)),), ("T",))  # not increasing
    with pytest.raises(ValueError):
        ModuleSpec(2, 2, (((0, 1),),), ("T",))
    with pytest.raises(ValueError):
        ModuleSpec(2, 2, (), ("T",))
    a = ((0, 1, 0), (0, 0, 0), (0, 0, 0))
    b = ((0, 0, 1), (0, 0, 0), (0, 0, 0))
    c = ((0, 0, 0), (0, 0, 1), (0, 0, 0))
    ModuleSpec(2, 3, (a, b), ("a", "b"))
    with pytest.raises(ValueError):
        ModuleSpec(2, 3, (a, c), ("a", "c"))
    with pytest.raises(KeyError):
        zero_module(2).matrix("T")


def test_module_dimensions():
    assert hall_module((3, 1), 2).dim == 4
    assert order_module("ramified", 2, 3, 2).dim == 12
    assert order_module("split", 2, 3, 3).dim == 12
    assert order_module("inert", 2, 3, 3).dim == 12
    assert extension_space(2, 3).dim == 6
    for n, K in [(1, 1), (2, 3), (3, 2)]:
        assert inert_m1_quotient(n, K, 2).dim == n * (2 * K - 1)
    with pytest.raises(ValueError):
        order_module("other", 1, 1, 2)


@pytest.mark.parametrize("p", [2, 3])
def test_inert_aux_is_field_generator(p):
    M = order_module("inert", 1, 1, p)
    w = M.matrix("b")
    a, b = FieldSpec(p, 2).modulus
    assert not ((w @ w + a * w + b * np.eye(2, dtype=np.int64)) % p).any()


# -- enumeration ------------------------------------------------------------


def test_zero_operator_plane():
    subs = list(enumerate_submodules(zero_module(2)))
    assert len(subs) == 5
    assert sorted(s.dim for s in subs) == [0, 1, 1, 1, 2]


def test_dimension_zero():
    subs = list(enumerate_submodules(zero_module(0)))
    assert len(subs) == 1 and subs[0].dim == 0


def test_jordan_block():
    M = hall_module((2,), 2)
    subs = list(enumerate_submodules(M))
    assert len(subs) == 3
    uM = Subspace(M.matrix("T").tolist(), 2, 2)
    assert uM in subs


@pytest.mark.parametrize("dim,p", [(3, 2), (4, 2), (3, 3), (2, 5)])
def test_all_subspaces_counted(dim, p):
    subs = list(enumerate_submodules(zero_module(dim, p)))
    assert len(subs) == echelon_estimate(dim, p)
    assert len(set(subs)) == len(subs)


def test_subspaces_are_canonical_and_invariant():
    M = hall_module((2, 2, 1), 3)
    T = M.matrix("T")
    subs = list(enumerate_submodules(M))
    assert len(set(subs)) == len(subs)
    for W in subs:
        assert W.is_invariant(T)
        assert Subspace(W.basis, W.p, W.ambient) == W


def test_subspace_containment():
    V = Subspace([[1, 0, 0], [0, 1, 0]], 2, 3)
    L = Subspace([[1, 1, 0]], 2, 3)
    assert V.contains(L) and not L.contains(V)
    assert not V.contains(Subspace([[0, 0, 1]], 2, 3))


def test_dimension_window():
    M = zero_module(4, 2)
    lines = list(enumerate_submodules(M, min_dim=1, max_dim=1))
    assert len(lines) == 15 and {W.dim for W in lines} == {1}


def test_guard():
    M = zero_module(6, 2)
    with pytest.raises(GuardExceeded) as info:
        list(enumerate_submodules(M, guard=50))
    err = info.value
    assert err.guard == 50 and err.examined > 50
    assert err.estimate == echelon_estimate(6, 2)
    assert str(err.estimate) in str(err)


def test_guard_from_environment(monkeypatch):
    monkeypatch.setenv("COHZETA_GUARD", "20")
    with pytest.raises(GuardExceeded):
        list(enumerate_submodules(zero_module(5, 2)))


MODULES = [
    lambda: hall_module((3, 2, 1), 2),
    lambda: hall_module((2, 2), 3),
    lambda: order_module("inert", 2, 2, 2),
    lambda: order_module("ramified", 2, 1, 3),
    lambda: inert_m1_quotient(2, 2, 2),
    lambda: zero_module(5, 2),
]


@pytest.mark.parametrize("build", MODULES)
def test_enumeration_deterministic(build):
    M = build()
    first = [W.basis for W in enumerate_submodules(M)]
    assert first == [W.basis for W in enumerate_submodules(M)]
    for split in (1, 2, 4):
        par = [W.basis for W in enumerate_submodules(M, workers=2, split_depth=split)]
        assert par == first


@pytest.mark.parametrize("build", MODULES)
def test_kernel_backends_agree(build):
    from cohzeta.oracle._backend import kernel

    M = build()
    ops = [list(map(list, g)) for g in M.ops]
    args = (ops, M.p, M.dim, M.dim - 1, 0, [], 0, M.dim, 10**6)
    assert kernel.dfs(*args) == _kernel_py.dfs(*args)
    rows = [list(r) for r in M.ops[0]] if M.ops else [[1] * M.dim]
    assert kernel.rank(rows, M.p, M.dim) == _kernel_py.rank(rows, M.p, M.dim)


def test_compiled_backend_is_built():
    assert BACKEND in ("cython", "python")
    try:
        from cohzeta.oracle import _kernel  # noqa: F401
    except ImportError:
        pytest.skip("compiled kernel not built")
    assert BACKEND == "cython"


def test_pure_python_switch():
    code = "from cohzeta.oracle import BACKEND; print(BACKEND)"
    env = {"COHZETA_PURE_PYTHON": "1", "PATH": ""}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


# -- types ----------------------------------------------------------------


def test_module_type_examples():
    M = hall_module((2,), 2)
    full = Subspace(np.eye(2, dtype=int).tolist(), 2, 2)
    uM = Subspace([[0, 1]], 2, 2)
    assert module_type(full, M, "T") == Partition((2,))
    assert module_type(uM, M, "T") == Partition((1,))
    assert cotype(uM, M, "T") == Partition((1,))
    M21 = hall_module((2, 1), 3)
    assert module_type(Subspace(np.eye(3, dtype=int).tolist(), 3, 3), M21, "T") == Partition((2, 1))
    with pytest.raises(ValueError):
        module_type(Subspace([[1, 0]], 2, 2), M, "T")


# -- oracles versus formulas ---------------------------------------------


def test_hall_count_examples():
    assert hall_count_oracle((1, 1), (1,), 2) == 3
    assert hall_count_oracle((1, 1), (1,), 3) == 4
    assert hall_count_oracle((2, 1), (2, 1), 2) == 1
    for m in (1, 2):
        for n in (1, 2):
            for r in range(n + 1):
                got = hall_count_oracle(rectangle(m, n), [1] * r, 3)
                assert got == _num(qbinom(n, r), 3)


@pytest.mark.parametrize("q", [2, 3])
def test_hall_counts_match_formula(q):
    for lam in [(2, 1), (2, 2), (3, 1, 1), (2, 2, 1)]:
        for mu in subpartitions(Partition(lam)):
            assert hall_count_oracle(lam, mu, q) == _num(hall_g(lam, mu), q)


def test_hall_table_sums_to_total():
    table = hall_table((2, 1), 2)
    assert sum(table.values()) == len(list(enumerate_submodules(hall_module((2, 1), 2))))
    assert table[(Partition(()), Partition((2, 1)))] == 1


def test_moebius_examples():
    M = hall_module((1, 1), 2)
    top = Subspace(np.eye(2, dtype=int).tolist(), 2, 2)
    assert moebius_oracle(M, top) == 1
    assert moebius_oracle(M, Subspace([], 2, 2)) == 2
    M2 = hall_module((2,), 2)
    assert moebius_oracle(M2, Subspace([], 2, 2)) == 0
    with pytest.raises(ValueError):
        moebius_oracle(M2, Subspace([[1, 0]], 2, 2))


def test_moebius_vanishing_small():
    lam = Partition((2, 1, 1))
    M = hall_module(lam, 2)
    for W, mu in moebius_to_top(M).items():
        nu = cotype(W, M, "T")
        if nu and set(nu) != {1}:
            assert mu == 0
        else:
            r = len(nu)
            assert mu == (-1) ** r * 2 ** (r * (r - 1) // 2)


def test_rectangular_complement_small():
    lam = rectangle(2, 2)
    M = hall_module(lam, 2)
    for W in enumerate_submodules(M):
        assert cotype(W, M, "T") == module_type(W, M, "T").complement(2, 2)


def test_saturation_oracle_examples():
    assert saturation_zeta_oracle(OrderFamily("inert", 1), 1, 2) == [1, 3]
    for tag in ("ramified", "split", "inert"):
        assert saturation_zeta_oracle(OrderFamily(tag, 1), 0, 2) == [1]


@pytest.mark.parametrize("tag,m", [("ramified", 1), ("split", 1), ("inert", 1), ("split", 2)])
def test_saturation_oracle_matches_formula(tag, m):
    fam = OrderFamily(tag, m)
    for q in (2, 3):
        z = saturation_zeta(fam, 1).evaluate(q=q)
        want = [z.coefficient(0, k) for k in range(z.t_degrees()[1] + 1)]
        assert saturation_zeta_oracle(fam, 1, q) == want


def test_saturating_count_examples():
    assert saturating_subspace_count_oracle(2, 1, 1) == 3
    assert saturating_subspace_count_oracle(2, 2, 1) == 15
    for n in range(3):
        assert saturating_subspace_count_oracle(3, n, 0) == 1
    assert saturating_subspace_count_oracle(2, 1, 5) == 0
    assert saturating_subspace_count_oracle(FieldSpec(3, 2), 1, 1) == 4


@pytest.mark.parametrize("q", [2, 3])
def test_saturating_counts_match_formula(q):
    for n in (1, 2):
        for r in range(2 * n + 1):
            assert saturating_subspace_count_oracle(q, n, r) == _num(inert_m1_count(n, r), q)


def test_quot_oracle_examples():
    assert quot_zeta_oracle_inert_m1(2, 1, 2) == [1, 1, 3]
    assert quot_zeta_oracle_inert_m1(3, 1, 2) == [1, 1, 4]
    assert quot_zeta_oracle_inert_m1(2, 0, 3) == [1, 0, 0, 0]


def test_quot_oracle_matches_finitized_zeta():
    for q, n, K in [(2, 1, 3), (3, 1, 2), (2, 2, 2)]:
        z = coh_finitized(n).substitute("t", monomial(1, n, 1))
        series = TSeries.from_fraction(z, K)
        assert quot_zeta_oracle_inert_m1(q, n, K) == [_num(c, q) for c in series.coeffs]


# -- CSV ------------------------------------------------------------------


def test_csv():
    rows = [OracleResult("sat-count", {"q": 2, "n": 1, "r": 1}, 3, 0.5), OracleResult("quot", {"q": 2}, [1, 1, 3])]
    buf = io.StringIO()
    text = write_csv(rows, buf)
    assert buf.getvalue() == text
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "sat-count,n=1;q=2;r=1,3,0.500000"
    assert lines[2].startswith("quot,q=2,1 1 3,")
    assert write_csv(rows, timing=False).splitlines()[1] == "sat-count,n=1;q=2;r=1,3"
