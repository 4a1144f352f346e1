"""Integer partitions as types of modules over a DVR."""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = ["Partition", "rectangle", "column", "subpartitions"]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` are the same value.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        ps = tuple(int(x) for x in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        if any(x <= 0 for x in ps):
            raise ValueError(f"partition parts must be positive: {ps}")
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {ps}")
        return super().__new__(cls, ps)

    @classmethod
    def sorted_from(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((x for x in parts if x), reverse=True))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part, 1-indexed, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for x in self if x >= j) for j in range(1, self[0] + 1))

    def conjugate_padded(self, m: int) -> tuple[int, ...]:
        """The conjugate as a length-``m`` tuple (zero padded)."""
        c = self.conjugate()
        if len(c) > m:
            raise ValueError(f"{self} has a part larger than {m}")
        return tuple(c) + (0,) * (m - len(c))

    def contains(self, other: "Partition") -> bool:
        """Young-diagram inclusion ``other <= self``."""
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))

    def fits_in(self, m: int, n: int) -> bool:
        return len(self) <= n and (not self or self[0] <= m)

    def complement(self, m: int, n: int) -> "Partition":
        """``(m^n) - self`` with ``nu_i = m - self_{n+1-i}``."""
        if not self.fits_in(m, n):
            raise ValueError(f"{self} is not contained in ({m}^{n})")
        return Partition(m - self.part(n + 1 - i) for i in range(1, n + 1))

    def concat(self, other: "Partition") -> "Partition":
        return Partition.sorted_from(tuple(self) + tuple(other))

    def duplicate(self) -> "Partition":
        return Partition(x for x in self for _ in range(2))

    def half_split(self) -> "Partition":
        return Partition.sorted_from(h for x in self for h in ((x + 1) // 2, x // 2))


def rectangle(m: int, n: int) -> Partition:
    """The partition ``(m^n)``."""
    return Partition((m,) * n if m > 0 else ())


def column(r: int) -> Partition:
    """The partition ``(1^r)``."""
    return Partition((1,) * r)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions contained in ``lam`` (including empty and ``lam``)."""
    lam = Partition(lam)

    def rec(i: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        if i == len(lam):
            yield Partition(acc)
            return
        for x in range(min(cap, lam[i]), -1, -1):
            if x == 0:
                yield Partition(acc)
                continue
            acc.append(x)
            yield from rec(i + 1, x, acc)
            acc.pop()

    yield from rec(0, lam[0] if lam else 0, [])
