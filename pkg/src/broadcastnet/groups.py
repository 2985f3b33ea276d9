"""Finite groups with canonical tuple/int element representations.

Supported kinds::

    cyclic(n)            elements i in [0, n), addition mod n
    dihedral(n)          pairs (a, i) standing for w^a x^i, with w^2 = x^n = e
                         and w x w^-1 = x^-1
    z2pow(r)             bit tuples of length r, XOR
    product(G, H)        pairs (g, h), componentwise
    semidirect(m, n, g)  pairs (a, x), Z_m acting on Z_n by x -> g^a x

Elements are plain hashable values, so equality of elements is equality of
representations, and Python's ordering on them is the canonical rank order.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from itertools import product as _iproduct
from typing import Any, Iterator, Sequence

__all__ = [
    "GroupError",
    "GroupSpecError",
    "GroupSpec",
    "Cyclic",
    "Dihedral",
    "Z2Pow",
    "Product",
    "Semidirect",
    "GeneratorReport",
    "DEFAULT_ORDER_LIMIT",
    "parse_group_spec",
    "parse_element",
    "parse_elements",
    "format_element",
    "multiply",
    "inverse",
    "identity",
    "enumerate_elements",
    "validate_generators",
]

Element = Any

DEFAULT_ORDER_LIMIT = 10**6


class GroupError(ValueError):
    """Raised for elements that do not belong to a group, oversized groups, ..."""


class GroupSpecError(ValueError):
    """Syntax or validity error in a group-spec string."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class GroupSpec:
    """Base class of the declarative group descriptions.

    Subclasses are frozen dataclasses; ``mul``/``inv`` skip membership
    checks and are meant for inner loops. The module-level functions
    :func:`multiply` and :func:`inverse` validate their arguments.
    """

    @property
    def order(self) -> int:
        raise NotImplementedError

    def identity(self) -> Element:
        raise NotImplementedError

    def mul(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def inv(self, a: Element) -> Element:
        raise NotImplementedError

    def contains(self, a: Element) -> bool:
        raise NotImplementedError

    def iter_elements(self) -> Iterator[Element]:
        raise NotImplementedError

    def format(self, a: Element) -> str:
        raise NotImplementedError

    def from_literal(self, node: Any) -> Element:
        """Convert a parsed literal tree (str atoms, tuples) to an element."""
        raise NotImplementedError

    def power(self, a: Element, k: int) -> Element:
        result = self.identity()
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def __str__(self) -> str:
        return self.text


def _is_int(v: Any) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _atom_int(node: Any) -> int:
    if not isinstance(node, str) or not node.isdigit():
        raise GroupError(f"expected an integer literal, got {node!r}")
    return int(node)


def _pair(node: Any) -> tuple[Any, Any]:
    if not isinstance(node, tuple) or len(node) != 2:
        raise GroupError(f"expected a pair literal, got {node!r}")
    return node


@dataclass(frozen=True)
class Cyclic(GroupSpec):
    n: int

    def __post_init__(self):
        if not _is_int(self.n) or self.n < 1:
            raise GroupSpecError(f"cyclic(n) needs n >= 1, got {self.n!r}")

    @property
    def text(self) -> str:
        return f"cyclic({self.n})"

    @property
    def order(self) -> int:
        return self.n

    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def inv(self, a: int) -> int:
        return (-a) % self.n

    def contains(self, a) -> bool:
        return _is_int(a) and 0 <= a < self.n

    def iter_elements(self):
        return iter(range(self.n))

    def format(self, a: int) -> str:
        return str(a)

    def from_literal(self, node) -> int:
        return _atom_int(node)


@dataclass(frozen=True)
class Dihedral(GroupSpec):
    """Dihedral group of order 2n; (a, i) is w^a x^i."""

    n: int

    def __post_init__(self):
        if not _is_int(self.n) or self.n < 1:
            raise GroupSpecError(f"dihedral(n) needs n >= 1, got {self.n!r}")

    @property
    def text(self) -> str:
        return f"dihedral({self.n})"

    @property
    def order(self) -> int:
        return 2 * self.n

    def identity(self):
        return (0, 0)

    def mul(self, a, b):
        a1, i = a
        a2, j = b
        # x^i w = w x^-i
        return (a1 ^ a2, (j - i if a2 else i + j) % self.n)

    def inv(self, a):
        f, i = a
        return a if f else (0, (-i) % self.n)

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and a[0] in (0, 1)
            and _is_int(a[0])
            and _is_int(a[1])
            and 0 <= a[1] < self.n
        )

    def iter_elements(self):
        return ((f, i) for f in (0, 1) for i in range(self.n))

    def format(self, a) -> str:
        return f"({a[0]},{a[1]})"

    def from_literal(self, node):
        f, i = _pair(node)
        return (_atom_int(f), _atom_int(i))

    # named elements, handy for the w/x notation
    @property
    def w(self):
        return (1, 0)

    @property
    def x(self):
        return (0, 1 % self.n)

    def reflection(self, i: int):
        """The element w x^i."""
        return (1, i % self.n)


@dataclass(frozen=True)
class Z2Pow(GroupSpec):
    """Elementary abelian group Z_2^r; elements are bit tuples."""

    r: int

    def __post_init__(self):
        if not _is_int(self.r) or self.r < 1:
            raise GroupSpecError(f"z2pow(r) needs r >= 1, got {self.r!r}")

    @property
    def text(self) -> str:
        return f"z2pow({self.r})"

    @property
    def order(self) -> int:
        return 2**self.r

    def identity(self):
        return (0,) * self.r

    def mul(self, a, b):
        return tuple(x ^ y for x, y in zip(a, b))

    def inv(self, a):
        return a

    def contains(self, a) -> bool:
        return isinstance(a, tuple) and len(a) == self.r and all(b in (0, 1) and _is_int(b) for b in a)

    def iter_elements(self):
        return _iproduct((0, 1), repeat=self.r)

    def format(self, a) -> str:
        return "".join(map(str, a))

    def from_literal(self, node):
        if not isinstance(node, str) or len(node) != self.r or set(node) - {"0", "1"}:
            raise GroupError(f"expected a {self.r}-bit literal, got {node!r}")
        return tuple(int(c) for c in node)

    def basis(self) -> list[tuple[int, ...]]:
        """Standard basis vectors e_1..e_r (e_1 = 100...0)."""
        return [tuple(int(j == i) for j in range(self.r)) for i in range(self.r)]


@dataclass(frozen=True)
class Product(GroupSpec):
    left: GroupSpec
    right: GroupSpec

    @property
    def text(self) -> str:
        return f"product({self.left.text},{self.right.text})"

    @property
    def order(self) -> int:
        return self.left.order * self.right.order

    def identity(self):
        return (self.left.identity(), self.right.identity())

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def inv(self, a):
        return (self.left.inv(a[0]), self.right.inv(a[1]))

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and self.left.contains(a[0])
            and self.right.contains(a[1])
        )

    def iter_elements(self):
        return ((g, h) for g in self.left.iter_elements() for h in self.right.iter_elements())

    def format(self, a) -> str:
        return f"({self.left.format(a[0])},{self.right.format(a[1])})"

    def from_literal(self, node):
        g, h = _pair(node)
        return (self.left.from_literal(g), self.right.from_literal(h))


@dataclass(frozen=True)
class Semidirect(GroupSpec):
    """Z_m acting on Z_n by alpha_a(x) = g^a x mod n.

    Multiplication convention: (a1, x1)(a2, x2) = (a1 + a2, g^a2 x1 + x2).
    """

    m: int
    n: int
    g: int
    _powers: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("m", "n", "g"):
            v = getattr(self, name)
            if not _is_int(v) or v < 1:
                raise GroupSpecError(f"semidirect parameters must be positive integers, got {name}={v!r}")
        if math.gcd(self.g, self.n) != 1:
            raise GroupSpecError(
                f"invalid action: gcd({self.g}, {self.n}) != 1, so x -> {self.g}x is not an automorphism of Z_{self.n}"
            )
        if pow(self.g, self.m, self.n) != 1 % self.n:
            raise GroupSpecError(
                f"invalid action: {self.g}^{self.m} is not 1 mod {self.n}, so a -> alpha_a is not a homomorphism from Z_{self.m}"
            )
        object.__setattr__(self, "_powers", tuple(pow(self.g, k, self.n) for k in range(self.m)))

    @property
    def text(self) -> str:
        return f"semidirect({self.m},{self.n},{self.g})"

    @property
    def order(self) -> int:
        return self.m * self.n

    def action(self, a: int, x: int) -> int:
        return self._powers[a % self.m] * x % self.n

    def identity(self):
        return (0, 0)

    def mul(self, a, b):
        a1, x1 = a
        a2, x2 = b
        return ((a1 + a2) % self.m, (self._powers[a2] * x1 + x2) % self.n)

    def inv(self, a):
        a1, x1 = a
        ai = (-a1) % self.m
        # (a1, x1)(ai, y) = (0, g^ai x1 + y) = e
        return (ai, (-self._powers[ai] * x1) % self.n)

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and _is_int(a[0])
            and _is_int(a[1])
            and 0 <= a[0] < self.m
            and 0 <= a[1] < self.n
        )

    def iter_elements(self):
        return ((a, x) for a in range(self.m) for x in range(self.n))

    def format(self, a) -> str:
        return f"({a[0]},{a[1]})"

    def from_literal(self, node):
        a, x = _pair(node)
        return (_atom_int(a), _atom_int(x))


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise GroupSpecError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos + len(text[pos:]) - len(text[pos:].lstrip()))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


_ARITY = {"cyclic": 1, "dihedral": 1, "z2pow": 1, "semidirect": 3, "product": 2}


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def _expect(self, kind: str, value: str | None = None):
        tok = self._peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] if tok[0] != "eof" else "end of input"
            raise GroupSpecError(f"expected {want!r}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> GroupSpec:
        spec = self._spec()
        tok = self._peek()
        if tok[0] != "eof":
            raise GroupSpecError(f"trailing input {tok[1]!r}", tok[2])
        return spec

    def _spec(self) -> GroupSpec:
        kind, name, pos = self._expect("name")
        if name not in _ARITY:
            raise GroupSpecError(f"unknown group kind {name!r}", pos)
        self._expect("punct", "(")
        args: list[Any] = []
        for k in range(_ARITY[name]):
            if k:
                self._expect("punct", ",")
            if name == "product":
                args.append(self._spec())
            else:
                args.append(int(self._expect("int")[1]))
        self._expect("punct", ")")
        try:
            if name == "cyclic":
                return Cyclic(*args)
            if name == "dihedral":
                return Dihedral(*args)
            if name == "z2pow":
                return Z2Pow(*args)
            if name == "product":
                return Product(*args)
            return Semidirect(*args)
        except GroupSpecError as exc:
            raise GroupSpecError(str(exc), pos) from None


def parse_group_spec(text: str) -> GroupSpec:
    """Parse e.g. ``"semidirect(12,13,2)"`` or ``"product(cyclic(3), dihedral(5))"``."""
    return _SpecParser(text).parse()


def _parse_literal_tree(text: str) -> list[Any]:
    """Parse a comma-separated list of literals into str atoms / nested tuples."""
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def item():
        nonlocal pos
        skip()
        if pos < len(text) and text[pos] == "(":
            pos += 1
            parts = [item()]
            skip()
            while pos < len(text) and text[pos] == ",":
                pos += 1
                parts.append(item())
                skip()
            if pos >= len(text) or text[pos] != ")":
                raise GroupError(f"unbalanced parenthesis in element literal {text!r} at position {pos}")
            pos += 1
            return tuple(parts)
        start = pos
        while pos < len(text) and text[pos].isalnum():
            pos += 1
        if start == pos:
            raise GroupError(f"bad element literal {text!r} at position {pos}")
        return text[start:pos]

    out = [item()]
    skip()
    while pos < len(text):
        if text[pos] != ",":
            raise GroupError(f"bad element literal {text!r} at position {pos}")
        pos += 1
        out.append(item())
        skip()
    return out


def parse_element(group: GroupSpec, text: str) -> Element:
    items = _parse_literal_tree(text)
    if len(items) != 1:
        raise GroupError(f"expected a single element literal, got {text!r}")
    a = group.from_literal(items[0])
    if not group.contains(a):
        raise GroupError(f"generator not in group: {text.strip()} is not an element of {group.text}")
    return a


def parse_elements(group: GroupSpec, text: str) -> list[Element]:
    """Parse a comma-separated element list such as ``"(1,0),(1,1),(1,3)"``."""
    if not text.strip():
        return []
    out = []
    for node in _parse_literal_tree(text):
        try:
            a = group.from_literal(node)
        except GroupError as exc:
            raise GroupError(f"generator not in group: {exc}") from None
        if not group.contains(a):
            raise GroupError(f"generator not in group: {node!r} is not an element of {group.text}")
        out.append(a)
    return out


def format_element(group: GroupSpec, a: Element) -> str:
    return group.format(a)


# -- checked operations --------------------------------------------------------


def _check(group: GroupSpec, *elements: Element) -> None:
    for a in elements:
        if not group.contains(a):
            raise GroupError(f"{a!r} is not an element of {group.text}")


def multiply(group: GroupSpec, a: Element, b: Element) -> Element:
    _check(group, a, b)
    return group.mul(a, b)


def inverse(group: GroupSpec, a: Element) -> Element:
    _check(group, a)
    return group.inv(a)


def identity(group: GroupSpec) -> Element:
    return group.identity()


def enumerate_elements(group: GroupSpec, limit: int = DEFAULT_ORDER_LIMIT) -> list[Element]:
    """All elements in canonical rank (lexicographic) order."""
    if group.order > limit:
        raise GroupError(f"group {group.text} has order {group.order}, above the limit {limit}")
    return list(group.iter_elements())


@dataclass(frozen=True)
class GeneratorReport:
    """Outcome of :func:`validate_generators`; failures are entries, not exceptions."""

    group: GroupSpec
    non_members: tuple = ()
    duplicates: tuple = ()
    contains_identity: bool = False
    missing_inverses: tuple = ()  # (s, s^-1) pairs with s^-1 absent
    reached: int = 0

    @property
    def inverse_closed(self) -> bool:
        return not self.missing_inverses and not self.non_members

    @property
    def generates(self) -> bool:
        return not self.non_members and self.reached == self.group.order

    @property
    def valid(self) -> bool:
        return (
            self.inverse_closed
            and self.generates
            and not self.duplicates
            and not self.contains_identity
        )

    def problems(self) -> list[str]:
        g = self.group
        out = []
        for a in self.non_members:
            out.append(f"generator not in group: {a!r}")
        for a in self.duplicates:
            out.append(f"duplicate generator {g.format(a)}")
        if self.contains_identity:
            out.append("identity listed as a generator")
        for s, si in self.missing_inverses:
            out.append(f"not inverse-closed: inverse of {g.format(s)} is {g.format(si)}, which is missing")
        if not self.non_members and self.reached != g.order:
            out.append(f"generates only {self.reached} of {g.order} elements")
        return out


def validate_generators(group: GroupSpec, gens: Sequence[Element], limit: int = DEFAULT_ORDER_LIMIT) -> GeneratorReport:
    """Check inverse-closure and whether ``gens`` generate ``group``."""
    non_members = tuple(a for a in gens if not group.contains(a))
    if non_members:
        return GeneratorReport(group, non_members=non_members)
    seen: set = set()
    dups = []
    for a in gens:
        if a in seen:
            dups.append(a)
        seen.add(a)
    e = group.identity()
    missing = tuple((s, group.inv(s)) for s in gens if group.inv(s) not in seen)
    if group.order > limit:
        raise GroupError(f"group {group.text} has order {group.order}, above the limit {limit}")
    reached = {e}
    queue = deque([e])
    while queue:
        a = queue.popleft()
        for s in gens:
            b = group.mul(a, s)
            if b not in reached:
                reached.add(b)
                queue.append(b)
    return GeneratorReport(
        group,
        duplicates=tuple(dups),
        contains_identity=e in seen,
        missing_inverses=missing,
        reached=len(reached),
    )
