"""Constructors for the group families and a small spec-string language.

Spec strings (case-sensitive, whitespace ignored):

    C<n>            cyclic of order n
    D<n>            dihedral with n-gon symmetries, order 2n (n >= 3)
    S<n>            symmetric on n points (n <= 7)
    A<n>            alternating on n points (n <= 7)
    Q<2^k>          generalized quaternion of order 2^k (k >= 3)
    E<p>^<k>        elementary abelian of order p^k
    SD(n,m,k)       C_n semidirect C_m with action x -> x^k  (k^m = 1 mod n)
    SL(2,q)         2x2 determinant-1 matrices over GF(q)
    PSL(2,q)        SL(2,q) modulo its center
    <spec>x<spec>   direct product (right-associative)

Element payloads: permutation tuples for S/A/D, residues for C, residue pairs
for Q/SD, coefficient vectors for E, matrices (as 2x2 tuples of field-element
indices) for SL/PSL, and nested pairs for products.  Rendering follows the
payload: cycle notation, plain integers, "[[a,b],[c,d]]", or "(l,r)" pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from .finite_field import construct_field, index_tables, primitive_element, element_index
from .group_kernel import (
    CapExceededError,
    Group,
    close_generators,
    compose_permutations,
    identity_permutation,
    permutation_from_cycles,
    render_permutation,
    resolve_cap,
)


@dataclass(frozen=True)
class AtomSpec:
    family: str
    params: tuple[int, ...]


@dataclass(frozen=True)
class ProductSpec:
    left: "GroupSpec"
    right: "GroupSpec"


GroupSpec = AtomSpec | ProductSpec


class GroupSpecError(ValueError):
    """Malformed group spec string; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a spec string into an AtomSpec / ProductSpec tree."""
    stripped = "".join(text.split())
    if not stripped:
        raise GroupSpecError("empty group spec", 0)
    spec, pos = _parse_product(stripped, 0)
    if pos != len(stripped):
        raise GroupSpecError(f"trailing characters {stripped[pos:]!r}", pos)
    return spec


def _parse_product(s: str, pos: int) -> tuple[GroupSpec, int]:
    left, pos = _parse_atom(s, pos)
    if pos < len(s) and s[pos] == "x":
        right, pos = _parse_product(s, pos + 1)
        return ProductSpec(left, right), pos
    return left, pos


def _parse_int(s: str, pos: int) -> tuple[int, int]:
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if pos == start:
        raise GroupSpecError("expected an integer", start)
    return int(s[start:pos]), pos


def _parse_atom(s: str, pos: int) -> tuple[GroupSpec, int]:
    for head, family, arity in (("PSL(2,", "PSL2", 1), ("SL(2,", "SL2", 1), ("SD(", "SD", 3)):
        if s.startswith(head, pos):
            p = pos + len(head)
            params = []
            for i in range(arity):
                val, p = _parse_int(s, p)
                params.append(val)
                if i < arity - 1:
                    if p >= len(s) or s[p] != ",":
                        raise GroupSpecError("expected ','", p)
                    p += 1
            if p >= len(s) or s[p] != ")":
                raise GroupSpecError("expected ')'", p)
            return AtomSpec(family, tuple(params)), p + 1
    ch = s[pos] if pos < len(s) else ""
    if ch in ("C", "D", "S", "A", "Q"):
        val, p = _parse_int(s, pos + 1)
        return AtomSpec(ch, (val,)), p
    if ch == "E":
        base, p = _parse_int(s, pos + 1)
        if p >= len(s) or s[p] != "^":
            raise GroupSpecError("expected '^' in elementary-abelian spec", p)
        exp, p = _parse_int(s, p + 1)
        return AtomSpec("E", (base, exp)), p
    raise GroupSpecError(f"unrecognized group family {ch!r}", pos)


def spec_label(spec: GroupSpec) -> str:
    """Canonical label; parse_group_spec(spec_label(s)) round-trips."""
    if isinstance(spec, ProductSpec):
        return f"{spec_label(spec.left)}x{spec_label(spec.right)}"
    fam, params = spec.family, spec.params
    if fam == "E":
        return f"E{params[0]}^{params[1]}"
    if fam == "SD":
        return f"SD({params[0]},{params[1]},{params[2]})"
    if fam == "SL2":
        return f"SL(2,{params[0]})"
    if fam == "PSL2":
        return f"PSL(2,{params[0]})"
    return f"{fam}{params[0]}"


# ---------------------------------------------------------------------------
# Atom constructors.
# ---------------------------------------------------------------------------

def cyclic(n: int, cap: int | None = None) -> Group:
    if n < 1:
        raise ValueError(f"cyclic group needs order >= 1, got {n}")
    _check_cap(n, cap, f"C{n}")
    elements = tuple(range(n))
    return Group(elements, lambda a, b: (a + b) % n, f"C{n}", str)


def dihedral(n: int, cap: int | None = None) -> Group:
    """Symmetries of a regular n-gon, order 2n (n >= 3): permutations of n points."""
    if n < 3:
        raise ValueError(f"dihedral needs n >= 3 polygon vertices, got {n}")
    _check_cap(2 * n, cap, f"D{n}")
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((n - i) % n for i in range(n))
    g = close_generators([rotation, reflection], compose_permutations,
                         identity_permutation(n), cap=cap, label=f"D{n}",
                         render_payload=render_permutation)
    assert g.order == 2 * n
    return g


def symmetric(n: int, cap: int | None = None) -> Group:
    if not 1 <= n <= 7:
        raise ValueError(f"symmetric group supported for 1 <= n <= 7, got {n}")
    order = _factorial(n)
    _check_cap(order, cap, f"S{n}")
    if n == 1:
        return Group((identity_permutation(1),), compose_permutations, "S1",
                     render_permutation)
    gens = [permutation_from_cycles(n, [(1, 2)]),
            permutation_from_cycles(n, [tuple(range(1, n + 1))])]
    g = close_generators(gens, compose_permutations, identity_permutation(n),
                         cap=cap, label=f"S{n}", render_payload=render_permutation)
    assert g.order == order
    return g


def alternating(n: int, cap: int | None = None) -> Group:
    if not 1 <= n <= 7:
        raise ValueError(f"alternating group supported for 1 <= n <= 7, got {n}")
    order = max(1, _factorial(n) // 2)
    _check_cap(order, cap, f"A{n}")
    if n <= 2:
        return Group((identity_permutation(max(n, 1)),), compose_permutations,
                     f"A{n}", render_permutation)
    gens = [permutation_from_cycles(n, [(1, 2, 3)])]
    if n > 3:
        if n % 2 == 1:
            gens.append(permutation_from_cycles(n, [tuple(range(1, n + 1))]))
        else:
            gens.append(permutation_from_cycles(n, [tuple(range(2, n + 1))]))
    g = close_generators(gens, compose_permutations, identity_permutation(n),
                         cap=cap, label=f"A{n}", render_payload=render_permutation)
    assert g.order == order
    return g


def generalized_quaternion(order: int, cap: int | None = None) -> Group:
    """Q_{2^k}, k >= 3: pairs (i, j) in Z_{2^(k-1)} x Z_2.

    Presentation <a, b | a^(2^(k-2)) = b^2, b a b^-1 = a^-1> realized on pairs
    (i, j) = a^i b^j with (i1,j1)*(i2,j2) = (i1 + (-1)^j1 i2 + j1 j2 2^(k-2), j1+j2).
    """
    if order < 8 or order & (order - 1):
        raise ValueError(f"generalized quaternion needs order 2^k >= 8, got {order}")
    _check_cap(order, cap, f"Q{order}")
    half = order // 2
    quarter = order // 4

    def mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
        i1, j1 = a
        i2, j2 = b
        i = i1 + (i2 if j1 == 0 else -i2) + (quarter if j1 and j2 else 0)
        return (i % half, (j1 + j2) % 2)

    elements = tuple((i, j) for i in range(half) for j in range(2))
    return Group(elements, mul, f"Q{order}", _render_pair)


def elementary_abelian(p: int, k: int, cap: int | None = None) -> Group:
    if k < 1:
        raise ValueError(f"elementary abelian needs k >= 1, got {k}")
    if not _is_prime(p):
        raise ValueError(f"elementary abelian needs prime base, got {p}")
    order = p ** k
    _check_cap(order, cap, f"E{p}^{k}")
    elements = []
    for idx in range(order):
        vec = []
        rem = idx
        for _ in range(k):
            vec.append(rem % p)
            rem //= p
        elements.append(tuple(vec))

    def add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((x + y) % p for x, y in zip(a, b))

    return Group(tuple(elements), add, f"E{p}^{k}",
                 lambda v: "(" + ",".join(map(str, v)) + ")")


def semidirect_cyclic(n: int, m: int, k: int, cap: int | None = None) -> Group:
    """C_n semidirect C_m, the C_m generator acting by x -> x^k on C_n.

    Requires gcd(k, n) = 1 and k^m = 1 (mod n) so the action is an
    automorphism of exact compatible order.  Pairs (i, j) compose by
    (i1, j1)(i2, j2) = (i1 + k^j1 * i2 mod n, j1 + j2 mod m).
    """
    if n < 1 or m < 1:
        raise ValueError("semidirect product needs n >= 1 and m >= 1")
    if gcd(k, n) != 1:
        raise ValueError(f"action multiplier {k} not invertible mod {n}")
    if n > 1 and pow(k, m, n) != 1:
        raise ValueError(f"action multiplier {k} does not satisfy k^{m} = 1 mod {n}")
    _check_cap(n * m, cap, f"SD({n},{m},{k})")
    kpow = [pow(k, j, n) for j in range(m)]

    def mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
        i1, j1 = a
        i2, j2 = b
        return ((i1 + kpow[j1] * i2) % n, (j1 + j2) % m)

    elements = tuple((i, j) for i in range(n) for j in range(m))
    return Group(elements, mul, f"SD({n},{m},{k})", _render_pair)


Matrix = tuple[tuple[int, int], tuple[int, int]]


def _matrix_ops(q: int):
    """Return (spec, matmul, neg_matrix, identity, render) over GF(q) indices."""
    p, k = _prime_power(q)
    spec = construct_field(p, k)
    add, mul, neg, _inv = index_tables(spec)

    def matmul(a: Matrix, b: Matrix) -> Matrix:
        (a00, a01), (a10, a11) = a
        (b00, b01), (b10, b11) = b
        return (
            (add[mul[a00][b00]][mul[a01][b10]], add[mul[a00][b01]][mul[a01][b11]]),
            (add[mul[a10][b00]][mul[a11][b10]], add[mul[a10][b01]][mul[a11][b11]]),
        )

    def neg_matrix(a: Matrix) -> Matrix:
        return ((neg[a[0][0]], neg[a[0][1]]), (neg[a[1][0]], neg[a[1][1]]))

    identity: Matrix = ((1, 0), (0, 1))

    def render(a: Matrix) -> str:
        return f"[[{a[0][0]},{a[0][1]}],[{a[1][0]},{a[1][1]}]]"

    return spec, matmul, neg_matrix, identity, render


def construct_sl2(q: int, cap: int | None = None) -> Group:
    """SL(2, q): closure of the elementary transvections and a torus element."""
    order = q * (q * q - 1)
    _check_cap(order, cap, f"SL(2,{q})")
    spec, matmul, _negm, identity, render = _matrix_ops(q)
    w = element_index(spec, primitive_element(spec))
    _add, _mul, _neg, inv = index_tables(spec)
    gens: list[Matrix] = [((1, 1), (0, 1)), ((1, 0), (1, 1))]
    if q > 3:
        gens.append(((w, 0), (0, inv[w])))
    g = close_generators(gens, matmul, identity, cap=cap, label=f"SL(2,{q})",
                         render_payload=render)
    if g.order != order:
        raise RuntimeError(f"SL(2,{q}) closure has order {g.order}, expected {order}")
    return g


def construct_psl2(q: int, cap: int | None = None) -> Group:
    """PSL(2, q): SL(2, q) with M identified with -M.

    Canonical coset representative: the smaller of M and -M, compared at the
    first row-major entry where they differ (by field-element index).
    """
    order = q * (q * q - 1) // gcd(2, q - 1)
    _check_cap(order, cap, f"PSL(2,{q})")
    spec, matmul, negm, identity, render = _matrix_ops(q)
    w = element_index(spec, primitive_element(spec))
    _add, _mul, _neg, inv = index_tables(spec)

    def canon(m: Matrix) -> Matrix:
        n = negm(m)
        return m if m <= n else n

    def mul(a: Matrix, b: Matrix) -> Matrix:
        return canon(matmul(a, b))

    gens = [canon(((1, 1), (0, 1))), canon(((1, 0), (1, 1)))]
    if q > 3:
        gens.append(canon(((w, 0), (0, inv[w]))))
    g = close_generators(gens, mul, identity, cap=cap, label=f"PSL(2,{q})",
                         render_payload=render)
    if g.order != order:
        raise RuntimeError(f"PSL(2,{q}) closure has order {g.order}, expected {order}")
    return g


def direct_product(g: Group, h: Group, cap: int | None = None) -> Group:
    """Componentwise product over index pairs (i, j), lexicographic order."""
    order = g.order * h.order
    _check_cap(order, cap, f"{g.label}x{h.label}")
    elements = tuple((i, j) for i in range(g.order) for j in range(h.order))

    def mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
        return (g.compose(a[0], b[0]), h.compose(a[1], b[1]))

    def render(pair: tuple[int, int]) -> str:
        return f"({g.render(pair[0])},{h.render(pair[1])})"

    return Group(elements, mul, f"{g.label}x{h.label}", render)


def build_group(spec: GroupSpec | str, cap: int | None = None) -> Group:
    """Build a group from a parsed spec or a spec string."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    if isinstance(spec, ProductSpec):
        return direct_product(build_group(spec.left, cap), build_group(spec.right, cap), cap)
    fam, params = spec.family, spec.params
    if fam == "C":
        return cyclic(params[0], cap)
    if fam == "D":
        return dihedral(params[0], cap)
    if fam == "S":
        return symmetric(params[0], cap)
    if fam == "A":
        return alternating(params[0], cap)
    if fam == "Q":
        return generalized_quaternion(params[0], cap)
    if fam == "E":
        return elementary_abelian(params[0], params[1], cap)
    if fam == "SD":
        return semidirect_cyclic(params[0], params[1], params[2], cap)
    if fam == "SL2":
        return construct_sl2(params[0], cap)
    if fam == "PSL2":
        return construct_psl2(params[0], cap)
    raise ValueError(f"unknown family {fam!r}")  # pragma: no cover


# ---------------------------------------------------------------------------
# Small local helpers.
# ---------------------------------------------------------------------------

def _render_pair(pair: tuple[int, int]) -> str:
    return f"({pair[0]},{pair[1]})"


def _check_cap(order: int, cap: int | None, label: str) -> None:
    effective = resolve_cap(cap)
    if order > effective:
        raise CapExceededError(f"{label} has order {order}, exceeding cap {effective}")


def _factorial(n: int) -> int:
    return reduce(lambda a, b: a * b, range(1, n + 1), 1)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"field size must be a prime power >= 2, got {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            rem = q
            while rem % p == 0:
                rem //= p
                k += 1
            if rem != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, k
    raise ValueError(f"{q} is not a prime power")  # pragma: no cover
