"""Finite modules presented as F_p-spaces with commuting operators.

Matrices act on row vectors: row ``j`` of an operator is the image of the
basis vector ``e_j``.  Every builder orders its basis by degree in the
uniformizer, so the ring generators are strictly increasing in index, which
is what the enumeration kernel requires.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..partitions import Partition
from .fields import FieldSpec, as_field

__all__ = [
    "ModuleSpec",
    "hall_module",
    "order_module",
    "inert_m1_quotient",
    "extension_space",
]

Matrix = tuple[tuple[int, ...], ...]


def _freeze(mat, p: int) -> Matrix:
    return tuple(tuple(int(x) % p for x in row) for row in mat)


@dataclass(frozen=True)
class ModuleSpec:
    """An F_p-space of dimension ``dim`` with commuting generator actions.

    ``aux`` holds further F_p-linear maps that are not ring generators of the
    acting ring (for instance multiplication by the generator of a larger
    ring), used only for saturation tests.
    """

    p: int
    dim: int
    ops: tuple[Matrix, ...]
    labels: tuple[str, ...]
    aux: dict[str, Matrix] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(self.ops) != len(self.labels):
            raise ValueError("one label per operator")
        object.__setattr__(self, "ops", tuple(_freeze(g, self.p) for g in self.ops))
        object.__setattr__(self, "aux", {k: _freeze(v, self.p) for k, v in self.aux.items()})
        for g in (*self.ops, *self.aux.values()):
            if len(g) != self.dim or any(len(row) != self.dim for row in g):
                raise ValueError(f"operator is not {self.dim}x{self.dim}")
        for j, g in enumerate(self.ops):
            for i, row in enumerate(g):
                if any(row[: i + 1]):
                    raise ValueError(
                        f"generator {self.labels[j]} must map e_i into span(e_(i+1), ...)"
                    )
        mats = [self.matrix(lbl) for lbl in self.labels]
        for a in range(len(mats)):
            for b in range(a + 1, len(mats)):
                if ((mats[a] @ mats[b] - mats[b] @ mats[a]) % self.p).any():
                    raise ValueError(f"{self.labels[a]} and {self.labels[b]} do not commute")

    def matrix(self, label: str) -> np.ndarray:
        if label in self.labels:
            g = self.ops[self.labels.index(label)]
        elif label in self.aux:
            g = self.aux[label]
        else:
            raise KeyError(f"no operator {label!r}")
        return np.array(g, dtype=np.int64).reshape(self.dim, self.dim)


def _shift_blocks(index: dict, images: dict, dim: int) -> list[list[int]]:
    mat = [[0] * dim for _ in range(dim)]
    for key, i in index.items():
        for target, c in images(key):
            if target in index:
                mat[i][index[target]] = c
    return mat


def hall_module(lam: Sequence[int], q: "int | FieldSpec") -> ModuleSpec:
    """``M(lam) = sum F_p[T]/(T^lam_i)`` with generator ``T``."""
    lam = Partition(lam)
    p = as_field(q).p
    keys = sorted(((k, i) for i, part in enumerate(lam) for k in range(part)))
    index = {key: n for n, key in enumerate(keys)}
    T = _shift_blocks(index, lambda key: [((key[0] + 1, key[1]), 1)], len(keys))
    return ModuleSpec(p, len(keys), (T,), ("T",))


def order_module(tag: str, m: int, n: int, q: "int | FieldSpec") -> ModuleSpec:
    """``B^n`` for the order family ``tag`` with the ``A``-generator as operator.

    The ``aux`` map ``"b"`` is a second ``A``-module generator of ``B``:
    ``B = A + b A`` in all three families, so ``B W = W + b W``.

    ramified: ``B = F_p[u]/(u^2m)``, ``A`` generated by ``u^2``, ``b = u``.
    split: ``B = (F_p[u]/(u^m))^2``, ``A`` diagonal, ``b`` the first idempotent.
    inert: ``B = F_(p^2)[u]/(u^m)``, ``A = F_p[u]/(u^m)``, ``b`` a field generator.
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    field_ = as_field(q)
    p = field_.p
    if tag == "ramified":
        # key (degree, copy)
        keys = [(k, c) for k in range(2 * m) for c in range(n)]
        index = {key: i for i, key in enumerate(keys)}
        dim = len(keys)
        gen = _shift_blocks(index, lambda key: [((key[0] + 2, key[1]), 1)], dim)
        b = _shift_blocks(index, lambda key: [((key[0] + 1, key[1]), 1)], dim)
        return ModuleSpec(p, dim, (gen,), ("u^2",), {"b": b})
    if tag == "split":
        # key (degree, factor, copy)
        keys = [(k, f, c) for k in range(m) for f in range(2) for c in range(n)]
        index = {key: i for i, key in enumerate(keys)}
        dim = len(keys)
        gen = _shift_blocks(index, lambda key: [((key[0] + 1, key[1], key[2]), 1)], dim)
        b = _shift_blocks(index, lambda key: [(key, 1)] if key[1] == 0 else [], dim)
        return ModuleSpec(p, dim, (gen,), ("u",), {"b": b})
    if tag == "inert":
        ext = FieldSpec(p, 2)
        w = ext.omega_matrix()
        # key (degree, copy, slot) with slot 0 <-> 1, slot 1 <-> w
        keys = [(k, c, s) for k in range(m) for c in range(n) for s in range(2)]
        index = {key: i for i, key in enumerate(keys)}
        dim = len(keys)
        gen = _shift_blocks(index, lambda key: [((key[0] + 1, key[1], key[2]), 1)], dim)
        b = _shift_blocks(
            index,
            lambda key: [((key[0], key[1], s), w[key[2]][s]) for s in range(2) if w[key[2]][s]],
            dim,
        )
        return ModuleSpec(p, dim, (gen,), ("u",), {"b": b})
    raise ValueError(f"unknown order family {tag!r}")


def extension_space(field_: "int | FieldSpec", n: int) -> ModuleSpec:
    """``F_(q^2)^n`` as a ``2n``-dimensional F_q-space, no operators, ``aux['w']``."""
    ext = as_field(field_, 2)
    w = ext.omega_matrix()
    dim = 2 * n
    mat = [[0] * dim for _ in range(dim)]
    for c in range(n):
        for s in range(2):
            for s2 in range(2):
                mat[2 * c + s][2 * c + s2] = w[s][s2]
    return ModuleSpec(ext.p, dim, (), (), {"w": mat})


def inert_m1_quotient(n: int, K: int, q: "int | FieldSpec") -> ModuleSpec:
    """``R^n / T^K R^n`` for ``R = F_q[[T]] + T F_(q^2)[[T]]``.

    Per copy the basis is ``1`` then ``T^d, T^d w`` for ``1 <= d < K``; ``R``
    acts through the commuting generators ``X = T`` and ``Y = T w``.
    """
    if n < 0 or K < 1:
        raise ValueError("need n >= 0 and K >= 1")
    p = as_field(q).p
    a, b = FieldSpec(p, 2).modulus
    # key (degree, copy, slot); degree 0 only has slot 0
    keys = [(0, c, 0) for c in range(n)]
    keys += [(d, c, s) for d in range(1, K) for c in range(n) for s in range(2)]
    index = {key: i for i, key in enumerate(keys)}
    dim = len(keys)

    def times_T(key):
        d, c, s = key
        return [((d + 1, c, s), 1)]

    def times_Tw(key):
        d, c, s = key
        if s == 0:
            return [((d + 1, c, 1), 1)]
        # T^d w * T w = T^(d+1) w^2 = T^(d+1) (-b - a w)
        return [((d + 1, c, 0), (-b) % p), ((d + 1, c, 1), (-a) % p)]

    X = _shift_blocks(index, times_T, dim)
    Y = _shift_blocks(index, times_Tw, dim)
    return ModuleSpec(p, dim, (X, Y), ("T", "Tw"))
