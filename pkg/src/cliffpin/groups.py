"""Closure and identification of the small matrix groups <-I, W, E, C>."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .errors import GroupTooLarge
from .matrix import Matrix


class GroupId(Enum):
    Z1 = "Z1"
    Z2 = "Z2"
    Z4 = "Z4"
    Z2xZ2 = "Z2xZ2"
    Z8 = "Z8"
    Z4xZ2 = "Z4xZ2"
    Z2xZ2xZ2 = "Z2xZ2xZ2"
    D4 = "D4"
    Q4 = "Q4"

    @property
    def order(self) -> int:
        return _ORDERS[self]

    @property
    def pretty(self) -> str:
        """Tensor-product spelling used in the classical tables."""
        return _PRETTY[self]


_ORDERS = {
    GroupId.Z1: 1, GroupId.Z2: 2, GroupId.Z4: 4, GroupId.Z2xZ2: 4, GroupId.Z8: 8,
    GroupId.Z4xZ2: 8, GroupId.Z2xZ2xZ2: 8, GroupId.D4: 8, GroupId.Q4: 8,
}
_PRETTY = {
    GroupId.Z1: "1", GroupId.Z2: "Z2", GroupId.Z4: "Z4", GroupId.Z2xZ2: "Z2⊗Z2", GroupId.Z8: "Z8",
    GroupId.Z4xZ2: "Z2⊗Z4", GroupId.Z2xZ2xZ2: "Z2⊗Z2⊗Z2", GroupId.D4: "D4", GroupId.Q4: "Q4",
}


@dataclass(frozen=True, eq=False)
class FiniteMatrixGroup:
    elements: tuple[Matrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    def is_abelian(self) -> bool:
        els = self.elements
        return all(a @ b == b @ a for i, a in enumerate(els) for b in els[i + 1:])

    def element_order(self, g: Matrix) -> int:
        ident = Matrix.identity(self.dim)
        k, x = 1, g
        while x != ident:
            x = x @ g
            k += 1
            if k > self.order:
                raise GroupTooLarge("element order exceeds group order")
        return k

    def order_census(self) -> Counter:
        return Counter(self.element_order(g) for g in self.elements)

    def contains(self, g: Matrix) -> bool:
        return g in set(self.elements)

    def is_closed(self) -> bool:
        s = set(self.elements)
        return all(a @ b in s for a in self.elements for b in self.elements)


def closure(generators, cap: int = 64) -> FiniteMatrixGroup:
    """Smallest set containing I and the generators that is closed under products."""
    gens = list(generators)
    if not gens:
        raise ValueError("closure needs at least one generator")
    dims = {g.dim for g in gens}
    if len(dims) != 1:
        raise ValueError(f"generators have mixed dimensions {sorted(dims)}")
    ident = Matrix.identity(gens[0].dim)
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x @ g
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        raise GroupTooLarge(f"closure exceeded {cap} elements")
        frontier = nxt
    return FiniteMatrixGroup(tuple(elements))


def classify_group(g: FiniteMatrixGroup) -> GroupId:
    """Identify a group of order 1, 2, 4 or 8 by its element-order census."""
    n = g.order
    census = g.order_census()
    if n == 1:
        return GroupId.Z1
    if n == 2:
        return GroupId.Z2
    if n == 4:
        return GroupId.Z4 if census[4] else GroupId.Z2xZ2
    if n == 8:
        if census[8]:
            return GroupId.Z8
        involutions = census[2]
        if not g.is_abelian():
            return GroupId.Q4 if involutions == 1 else GroupId.D4
        return GroupId.Z2xZ2xZ2 if involutions == 7 else GroupId.Z4xZ2
    raise ValueError(f"unsupported group order {n}")


def sign_quotient(g: FiniteMatrixGroup) -> list[tuple[Matrix, ...]]:
    """Cosets of {I, -I}; requires -I in the group."""
    ident = Matrix.identity(g.dim)
    if not g.contains(-ident):
        raise ValueError("-I is not in the group")
    seen = set()
    cosets = []
    for x in g.elements:
        if x in seen:
            continue
        pair = (x, -x)
        seen.update(pair)
        cosets.append(pair)
    return cosets


def quotient_group_id(g: FiniteMatrixGroup) -> GroupId:
    """Isomorphism type of G / {+-I} (order 4 for the automorphism groups)."""
    cosets = sign_quotient(g)
    k = len(cosets)
    if k == 1:
        return GroupId.Z1
    if k == 2:
        return GroupId.Z2
    if k != 4:
        raise ValueError(f"unsupported quotient order {k}")
    ident = Matrix.identity(g.dim)
    # coset x{+-I} has order 4 in the quotient iff x^2 != +-I
    for x, _ in cosets:
        sq = x @ x
        if sq != ident and sq != -ident:
            return GroupId.Z4
    return GroupId.Z2xZ2


def central(g: FiniteMatrixGroup, x: Matrix) -> bool:
    return all(x @ y == y @ x for y in g.elements)
