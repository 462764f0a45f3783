"""Monomial orders on exponent tuples.

An order is a hashable object with a ``key`` method mapping an exponent
tuple to a tuple of ints such that ``key(a) > key(b)`` iff the monomial
``a`` is larger.  All three orders are total, multiplicative and well
founded, which is what Buchberger's algorithm needs.
"""

from __future__ import annotations

from dataclasses import dataclass

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class MonomialOrder:
    kind: str

    def key(self, exp: Exponent) -> tuple:
        raise NotImplementedError


@dataclass(frozen=True)
class Grevlex(MonomialOrder):
    kind: str = "grevlex"

    def key(self, exp: Exponent) -> tuple:
        # Graded, ties broken by smallest *last* exponent winning.
        return (sum(exp),) + tuple(-e for e in reversed(exp))


@dataclass(frozen=True)
class Lex(MonomialOrder):
    kind: str = "lex"

    def key(self, exp: Exponent) -> tuple:
        return exp


@dataclass(frozen=True)
class BlockOrder(MonomialOrder):
    """Elimination order: ``first`` variables dominate, grevlex inside blocks.

    Any monomial involving a ``first`` variable is larger than any monomial
    free of them, so a Groebner basis for this order intersects down to the
    subring in the remaining variables.  ``nvars`` fixes the exponent length
    so the block split can be precomputed.
    """

    first: tuple[int, ...] = ()
    nvars: int = 0
    kind: str = "block"

    def __post_init__(self):
        head = self.first
        tail = tuple(i for i in range(self.nvars) if i not in set(head))
        object.__setattr__(self, "_head", head)
        object.__setattr__(self, "_tail", tail)

    def key(self, exp: Exponent) -> tuple:
        head = tuple(exp[i] for i in self._head)
        rest = tuple(exp[i] for i in self._tail)
        return (
            (sum(head),)
            + tuple(-e for e in reversed(head))
            + (sum(rest),)
            + tuple(-e for e in reversed(rest))
        )


GREVLEX = Grevlex()
LEX = Lex()


def order_from_name(name: str) -> MonomialOrder:
    if name == "grevlex":
        return GREVLEX
    if name == "lex":
        return LEX
    raise ValueError(f"unknown monomial order {name!r}")
