"""
rieszkit.expr.ast - Expression trees over named generators.

Nodes are immutable and cache their structural hash, so trees that share
subterms (the rewriter reuses ``a³`` many times) hash and compare cheaply.
Traversals memoize on node identity for the same reason.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, ClassVar, TypeVar

__all__ = (
    "Expr",
    "Gen",
    "Unit",
    "Scale",
    "Add",
    "Mul",
    "Abs",
    "Pos",
    "NegPart",
    "Meet",
    "Join",
    "CORE_KINDS",
    "ExprTable",
    "const",
    "neg",
    "sub",
    "fold",
    "iter_nodes",
    "expr_degree",
    "expr_size",
    "generators_of",
    "is_core",
)

R = TypeVar("R")


class Expr:
    """Base node. Subclasses are frozen dataclasses with cached hashes."""

    kind: ClassVar[str] = "expr"
    __slots__ = ()

    def children(self) -> tuple[Expr, ...]:
        return ()

    def _payload(self) -> tuple[Any, ...]:
        return ()

    def _init_hash(self) -> None:
        key = (self.kind, self._payload(), tuple(hash(c) for c in self.children()))
        object.__setattr__(self, "_hash", hash(key))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Expr) or hash(self) != hash(other):
            return False
        if self.kind != other.kind or self._payload() != other._payload():
            return False
        return all(a == b for a, b in zip(self.children(), other.children()))

    def __str__(self) -> str:
        from .printer import print_expr

        return print_expr(self)

    # operator sugar for building trees in code and tests
    def __add__(self, other: Expr) -> Expr:
        return Add(self, other)

    def __sub__(self, other: Expr) -> Expr:
        return sub(self, other)

    def __mul__(self, other: Expr) -> Expr:
        return Mul(self, other)

    def __neg__(self) -> Expr:
        return neg(self)

    def __rmul__(self, c: Any) -> Expr:
        return Scale(Fraction(c), self)


def _node(cls):
    cls = dataclass(frozen=True, eq=False, repr=True)(cls)
    original = cls.__init__

    def __init__(self, *args, **kwargs):
        original(self, *args, **kwargs)
        self._init_hash()

    cls.__init__ = __init__
    cls.__hash__ = Expr.__hash__
    cls.__eq__ = Expr.__eq__
    return cls


@_node
class Gen(Expr):
    name: str
    _hash: int = field(init=False, repr=False, default=0)
    kind: ClassVar[str] = "gen"

    def _payload(self):
        return (self.name,)


@_node
class Unit(Expr):
    _hash: int = field(init=False, repr=False, default=0)
    kind: ClassVar[str] = "unit"


@_node
class Scale(Expr):
    c: Fraction
    e: Expr
    _hash: int = field(init=False, repr=False, default=0)
    kind: ClassVar[str] = "scale"

    def __post_init__(self):
        if not isinstance(self.c, Fraction):
            object.__setattr__(self, "c", Fraction(self.c))

    def _payload(self):
        return (self.c,)

    def children(self):
        return (self.e,)


class _Binary(Expr):
    __slots__ = ()

    def children(self):
        return (self.left, self.right)  # type: ignore[attr-defined]


class _Unary(Expr):
    __slots__ = ()

    def children(self):
        return (self.e,)  # type: ignore[attr-defined]


@_node
class Add(_Binary):
    left: Expr
    right: Expr
    _hash: int = field(init=False, repr=False, default=0)
    kind: ClassVar[str] = "add"


@_node
class Mul(_Binary):
    left: Expr
    right: Expr
    _hash: int = field(init=False, repr=False, default=0)
    kind: ClassVar[str] = "mul"


@_node
class Meet(_Binary):
    left: Expr
    right: Expr
    _hash: int = field(init=False, repr=False, default=0)
    kind: ClassVar[str] = "meet"


@_node
class Join(_Binary):
    left: Expr
    right: Expr
    _hash: int = field(init=False, repr=False, default=0)
    kind: ClassVar[str] = "join"


@_node
class Abs(_Unary):
    e: Expr
    _hash: int = field(init=False, repr=False, default=0)
    kind: ClassVar[str] = "abs"


@_node
class Pos(_Unary):
    e: Expr
    _hash: int = field(init=False, repr=False, default=0)
    kind: ClassVar[str] = "pos"


@_node
class NegPart(_Unary):
    e: Expr
    _hash: int = field(init=False, repr=False, default=0)
    kind: ClassVar[str] = "negp"


CORE_KINDS = frozenset({"gen", "unit", "scale", "add", "mul", "abs"})


# ----------------------------------------------------------------- builders
def const(c: Fraction | int) -> Expr:
    """The constant ``c·e``; the literal 1 is the unit itself."""
    c = Fraction(c)
    return Unit() if c == 1 else Scale(c, Unit())


def neg(e: Expr) -> Expr:
    """Negation absorbed into an outer Scale: ``-(c·x) = (-c)·x``."""
    if isinstance(e, Scale):
        return Scale(-e.c, e.e)
    return Scale(Fraction(-1), e)


def sub(a: Expr, b: Expr) -> Expr:
    return Add(a, neg(b))


class ExprTable:
    """Hash-consing table: structurally equal nodes built through it are one object."""

    def __init__(self) -> None:
        self._nodes: dict[Expr, Expr] = {}

    def __call__(self, node: Expr) -> Expr:
        return self._nodes.setdefault(node, node)

    def __len__(self) -> int:
        return len(self._nodes)

    def intern(self, e: Expr) -> Expr:
        """Rebuild *e* bottom-up through the table."""

        def step(node: Expr, kids: tuple[Expr, ...]) -> Expr:
            if not kids or all(a is b for a, b in zip(kids, node.children())):
                return self(node)
            return self(_rebuild(node, kids))

        return fold(e, step)


def _rebuild(node: Expr, kids: tuple[Expr, ...]) -> Expr:
    if isinstance(node, Scale):
        return Scale(node.c, kids[0])
    return type(node)(*kids)


# --------------------------------------------------------------- traversals
def fold(e: Expr, fn: Callable[[Expr, tuple[R, ...]], R]) -> R:
    """Post-order fold memoized on node identity.

    ``fn(node, child_results)`` is called once per distinct node object.
    """
    memo: dict[int, R] = {}

    def go(node: Expr) -> R:
        key = id(node)
        if key in memo:
            return memo[key]
        result = fn(node, tuple(go(c) for c in node.children()))
        memo[key] = result
        return result

    return go(e)


def iter_nodes(e: Expr) -> Iterator[Expr]:
    """Distinct node objects of *e*, parents before children."""
    seen: set[int] = set()
    stack = [e]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        yield node
        stack.extend(reversed(node.children()))


def expr_size(e: Expr) -> int:
    """Tree size, counting shared subterms at every occurrence."""
    return fold(e, lambda _node, kids: 1 + sum(kids))


def expr_degree(e: Expr) -> int:
    """Total degree in the generators; lattice operations keep the degree of their arguments."""

    def step(node: Expr, kids: tuple[int, ...]) -> int:
        if isinstance(node, Gen):
            return 1
        if isinstance(node, Mul):
            return sum(kids)
        return max(kids, default=0)

    return fold(e, step)


def generators_of(e: Expr) -> frozenset[str]:
    return frozenset(n.name for n in iter_nodes(e) if isinstance(n, Gen))


def is_core(e: Expr) -> bool:
    return all(n.kind in CORE_KINDS for n in iter_nodes(e))
