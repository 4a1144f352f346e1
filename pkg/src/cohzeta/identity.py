"""Exact identity checks with single-term mismatch witnesses."""

from __future__ import annotations

from typing import NamedTuple, Union

from .laurent import QTFraction, QTLaurent

__all__ = ["IdentityResult", "first_difference", "check_identity"]

Value = Union[int, QTLaurent, QTFraction]


class IdentityResult(NamedTuple):
    passed: bool
    # (e_q, e_t, coefficient) of the first differing term, or None
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.passed


def first_difference(diff: QTLaurent) -> tuple[int, int, int] | None:
    if not diff:
        return None
    (a, b), c = diff.items()[0]
    return (a, b, c)


def check_identity(lhs: Value, rhs: Value) -> IdentityResult:
    """Decide ``lhs == rhs`` by cross-multiplying denominators."""
    lhs = lhs if isinstance(lhs, QTFraction) else QTFraction(lhs)
    rhs = rhs if isinstance(rhs, QTFraction) else QTFraction(rhs)
    if lhs.den == rhs.den:
        diff = lhs.num - rhs.num
    else:
        diff = lhs.num * rhs.expand_den() - rhs.num * lhs.expand_den()
    w = first_difference(diff)
    return IdentityResult(w is None, w)
