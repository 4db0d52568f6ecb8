"""Generic finite groups as closures of generator sets.

A Group stores its elements as an indexed tuple of opaque hashable payloads
(index 0 is always the identity) plus a composition function over indices.
Everything downstream — orders, cyclic closures, power graphs — works on the
integer indices, so the payload representation (permutation tuples, matrix
tuples, residue pairs) only matters inside `compose` and `render`.

Element order of a BFS closure is deterministic: identity first, then the
generators in the order given, then products in breadth-first discovery
order.  Two runs over the same generators always number elements identically.
"""

from __future__ import annotations

import math
import os
from typing import Callable, Hashable, Iterable, Sequence

DEFAULT_GROUP_CAP = 10080
TABLE_CACHE_MAX = 2048

Payload = Hashable


class CapExceededError(ValueError):
    """Raised when a closure or constructor would exceed the group-order cap."""


def resolve_cap(cap: int | None = None) -> int:
    """Effective order cap: explicit argument, else PG_GROUP_CAP, else default."""
    if cap is not None:
        return cap
    env = os.environ.get("PG_GROUP_CAP")
    if env:
        return int(env)
    return DEFAULT_GROUP_CAP


class Group:
    """A finite group over indexed payloads with composition by index."""

    def __init__(
        self,
        elements: Sequence[Payload],
        compose_payloads: Callable[[Payload, Payload], Payload],
        label: str,
        render_payload: Callable[[Payload], str] | None = None,
    ) -> None:
        self._elements: tuple[Payload, ...] = tuple(elements)
        self._index: dict[Payload, int] = {e: i for i, e in enumerate(self._elements)}
        if len(self._index) != len(self._elements):
            raise ValueError("duplicate payloads in element list")
        self._compose_payloads = compose_payloads
        self.label = label
        self._render = render_payload or repr
        self._inverses: list[int | None] = [None] * len(self._elements)
        self._orders: list[int | None] = [None] * len(self._elements)
        self._table: tuple[tuple[int, ...], ...] | None = None

    @property
    def order(self) -> int:
        return len(self._elements)

    def payload(self, i: int) -> Payload:
        return self._elements[i]

    def index_of(self, payload: Payload) -> int:
        return self._index[payload]

    def render(self, i: int) -> str:
        return self._render(self._elements[i])

    def compose(self, i: int, j: int) -> int:
        return self._index[self._compose_payloads(self._elements[i], self._elements[j])]

    def inverse(self, i: int) -> int:
        """i^(o(i)-1), i.e. the last power before the cycle returns to 0."""
        cached = self._inverses[i]
        if cached is not None:
            return cached
        if i == 0:
            inv = 0
        else:
            prev = i
            x = self.compose(i, i)
            while x != 0:
                prev = x
                x = self.compose(x, i)
            inv = prev
        self._inverses[i] = inv
        return inv

    def element_order(self, i: int) -> int:
        cached = self._orders[i]
        if cached is not None:
            return cached
        n = 1
        x = i
        while x != 0:
            x = self.compose(x, i)
            n += 1
        self._orders[i] = n
        return n

    def element_orders(self) -> list[int]:
        return [self.element_order(i) for i in range(self.order)]

    def cyclic_closure(self, i: int) -> set[int]:
        """The cyclic subgroup generated by element i, as a set of indices."""
        out = {0}
        x = i
        while x != 0:
            out.add(x)
            x = self.compose(x, i)
        return out

    def exponent(self) -> int:
        return math.lcm(*self.element_orders()) if self.order else 1

    def element_order_profile(self) -> dict[int, int]:
        """Map order -> number of elements of that order."""
        profile: dict[int, int] = {}
        for o in self.element_orders():
            profile[o] = profile.get(o, 0) + 1
        return dict(sorted(profile.items()))

    def p_element_set(self, p: int) -> set[int]:
        """All elements whose order is a power of p (identity included)."""
        return {i for i in range(self.order)
                if _is_power_of(self.element_order(i), p)}

    def is_closed_subset(self, subset: Iterable[int]) -> bool:
        """Whether the subset is closed under composition (early exit)."""
        s = set(subset)
        for a in s:
            for b in s:
                if self.compose(a, b) not in s:
                    return False
        return True

    def conjugate(self, g: int, i: int) -> int:
        """g * i * g^{-1}."""
        return self.compose(self.compose(g, i), self.inverse(g))

    def multiplication_table(self) -> tuple[tuple[int, ...], ...]:
        """Dense |G| x |G| composition table (cached; only for |G| <= 2048)."""
        if self._table is not None:
            return self._table
        if self.order > TABLE_CACHE_MAX:
            raise CapExceededError(
                f"multiplication table limited to order {TABLE_CACHE_MAX}, "
                f"group has order {self.order}")
        self._table = tuple(
            tuple(self.compose(i, j) for j in range(self.order))
            for i in range(self.order)
        )
        return self._table

    def __repr__(self) -> str:  # pragma: no cover - debugging nicety
        return f"Group({self.label}, order={self.order})"


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def close_generators(
    generators: Sequence[Payload],
    compose_payloads: Callable[[Payload, Payload], Payload],
    identity: Payload | None = None,
    *,
    cap: int | None = None,
    label: str = "G",
    render_payload: Callable[[Payload], str] | None = None,
) -> Group:
    """BFS closure of a generator set into a Group.

    The identity may be supplied; otherwise it is derived by powering the
    first generator.  Element numbering: identity = 0, then the generators in
    the order given (skipping duplicates/identity), then products g * x in
    discovery order (right-multiplication by each generator in order).
    """
    effective_cap = resolve_cap(cap)
    gens = list(generators)
    if identity is None:
        if not gens:
            raise ValueError("cannot derive identity from an empty generator set")
        x = gens[0]
        seen = {x}
        nxt = compose_payloads(x, gens[0])
        while nxt not in seen:
            seen.add(nxt)
            x = nxt
            nxt = compose_payloads(x, gens[0])
            if len(seen) > effective_cap:
                raise CapExceededError(
                    f"generator order exceeds cap {effective_cap} while deriving identity")
        # The power sequence g, g^2, ... first repeats at g^(o+1) = g, at which
        # point x holds g^o = identity.
        identity = x

    elements: list[Payload] = [identity]
    index: dict[Payload, int] = {identity: 0}
    for g in gens:
        if g not in index:
            index[g] = len(elements)
            elements.append(g)

    frontier = list(range(1, len(elements)))
    while frontier:
        new_frontier: list[int] = []
        for i in frontier:
            for g in gens:
                prod = compose_payloads(elements[i], g)
                if prod not in index:
                    if len(elements) >= effective_cap:
                        raise CapExceededError(
                            f"closure exceeds cap {effective_cap} (label {label!r})")
                    index[prod] = len(elements)
                    elements.append(prod)
                    new_frontier.append(index[prod])
        frontier = new_frontier

    return Group(elements, compose_payloads, label, render_payload)


# ---------------------------------------------------------------------------
# Permutation payload helpers.  A permutation of degree n is a tuple t of
# length n with t[i] = image of point i (0-based internally).
# ---------------------------------------------------------------------------

def identity_permutation(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def compose_permutations(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a ∘ b): apply b first, then a."""
    return tuple(a[b[i]] for i in range(len(a)))


def permutation_from_cycles(degree: int, cycles: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Build a permutation from 1-based disjoint cycles."""
    img = list(range(degree))
    for cyc in cycles:
        pts = [c - 1 for c in cyc]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if not 0 <= a < degree:
                raise ValueError(f"cycle point {a + 1} out of range for degree {degree}")
            img[a] = b
    return tuple(img)


def render_permutation(perm: tuple[int, ...]) -> str:
    """Cycle notation with 1-based points; identity renders as '()'."""
    seen = [False] * len(perm)
    parts: list[str] = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x]
        parts.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "()"
