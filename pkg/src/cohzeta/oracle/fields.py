"""Prime fields and their quadratic extensions, realized over F_p."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["FieldSpec", "is_prime", "default_modulus", "as_field"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _has_root(a: int, b: int, p: int) -> bool:
    return any((x * x + a * x + b) % p == 0 for x in range(p))


def default_modulus(p: int) -> tuple[int, int]:
    """``(a, b)`` of the lexicographically first irreducible ``x^2 + a x + b``."""
    for a in range(p):
        for b in range(p):
            if not _has_root(a, b, p):
                return (a, b)
    raise AssertionError("every prime field has an irreducible quadratic")


@dataclass(frozen=True)
class FieldSpec:
    """``F_p`` (``deg=1``) or ``F_p[x]/(x^2 + a x + b)`` (``deg=2``)."""

    p: int
    deg: int = 1
    modulus: tuple[int, int] | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic must be prime, got {self.p}")
        if self.deg not in (1, 2):
            raise ValueError("only degree 1 and 2 fields are supported")
        if self.deg == 1:
            if self.modulus is not None:
                raise ValueError("a prime field takes no modulus")
            return
        if self.modulus is None:
            object.__setattr__(self, "modulus", default_modulus(self.p))
        a, b = (x % self.p for x in self.modulus)
        if _has_root(a, b, self.p):
            raise ValueError(f"x^2 + {a}x + {b} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", (a, b))

    @property
    def q(self) -> int:
        return self.p**self.deg

    def omega_matrix(self) -> list[list[int]]:
        """Multiplication by the generator ``w`` on the basis ``(1, w)``, rows = images."""
        if self.deg != 2:
            raise ValueError("omega exists only for the quadratic extension")
        a, b = self.modulus
        p = self.p
        return [[0, 1], [(-b) % p, (-a) % p]]

    def __str__(self) -> str:
        if self.deg == 1:
            return f"F_{self.p}"
        a, b = self.modulus
        return f"F_{self.p}[x]/(x^2+{a}x+{b})"


def as_field(q: "int | FieldSpec", deg: int = 1) -> FieldSpec:
    """Coerce a prime ``q`` (or an existing spec) to a FieldSpec of degree ``deg``."""
    if isinstance(q, FieldSpec):
        if q.deg != deg:
            raise ValueError(f"expected a degree-{deg} field, got {q}")
        return q
    q = int(q)
    if not is_prime(q):
        raise ValueError(f"oracles run over prime fields only; q={q} is not prime")
    return FieldSpec(q, deg)
