"""Parameterised vertex sequences and the cycles concatenated from them.

A block is written the way the construction tables write it, e.g.
``"(n-i,0),(-(n-i),1)"`` or ``"((3n+5)/2+3i,1),(-((3n+5)/2+3i),1)"``, with
``inf`` for the adjoined point.  A ``SequenceSpec`` with an upper bound
repeats its block for ``i = 0 .. last``; without one it is a fixed list.
Arithmetic is exact: every coordinate and every bound must come out integral.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from arcs.core import INF, Vertex, point

_IMPLICIT_PRODUCT = re.compile(r"(\d)\s*([A-Za-z(])")


class SequenceError(ValueError):
    pass


@dataclass(frozen=True)
class SequenceSpec:
    block: str
    last: Optional[str] = None
    name: str = ""


def run(name: str, block: str, last: str) -> SequenceSpec:
    """Block repeated for ``0 <= i <= last``; an empty range is allowed."""
    return SequenceSpec(block, last, name)


def fixed(block: str, name: str = "") -> SequenceSpec:
    return SequenceSpec(block, None, name)


def _to_python(text: str) -> str:
    return _IMPLICIT_PRODUCT.sub(r"\1*\2", text)


@lru_cache(maxsize=None)
def _parse_expr(text: str) -> ast.expr:
    return ast.parse(_to_python(text), mode="eval").body


@lru_cache(maxsize=None)
def _parse_block(text: str) -> tuple:
    tree = ast.parse(f"[{_to_python(text)}]", mode="eval").body
    items = []
    for node in tree.elts:
        if isinstance(node, ast.Name) and node.id == "inf":
            items.append(None)
        elif isinstance(node, ast.Tuple) and len(node.elts) == 2:
            items.append((node.elts[0], node.elts[1]))
        else:
            raise SequenceError(f"cannot read vertex {ast.unparse(node)!r} in {text!r}")
    return tuple(items)


def _eval(node: ast.expr, env: dict[str, int]) -> Fraction:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise SequenceError(f"unbound symbol {node.id!r}")
        return Fraction(env[node.id])
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        x = _eval(node.operand, env)
        return -x if isinstance(node.op, ast.USub) else x
    if isinstance(node, ast.BinOp):
        x, y = _eval(node.left, env), _eval(node.right, env)
        if isinstance(node.op, ast.Add):
            return x + y
        if isinstance(node.op, ast.Sub):
            return x - y
        if isinstance(node.op, ast.Mult):
            return x * y
        if isinstance(node.op, ast.Div):
            return x / y
    raise SequenceError(f"unsupported expression {ast.unparse(node)!r}")


def evaluate(text: str, **env: int) -> int:
    """Evaluate an integer expression such as ``"(3n-9)/2"``; must be exact."""
    value = _eval(_parse_expr(text), env)
    if value.denominator != 1:
        raise SequenceError(f"{text!r} = {value} is not an integer for {env}")
    return int(value)


def _integral(node: ast.expr, env: dict[str, int], where: str) -> int:
    value = _eval(node, env)
    if value.denominator != 1:
        raise SequenceError(f"{where}: {ast.unparse(node)} = {value} is not an integer for {env}")
    return int(value)


def expand_block(text: str, k: int, **env: int) -> list[Vertex]:
    out: list[Vertex] = []
    for item in _parse_block(text):
        if item is None:
            out.append(INF)
        else:
            a = _integral(item[0], env, text)
            b = _integral(item[1], env, text)
            out.append(point(a, b, k))
    return out


def index_range(spec: SequenceSpec, n: int) -> range:
    """The values of ``i`` a repeated block runs over."""
    last = _eval(_parse_expr(spec.last), {"n": n})
    if last.denominator != 1:
        raise SequenceError(
            f"{spec.name or spec.block}: upper bound {spec.last} = {last} is not an integer for n={n}"
        )
    if last < -1:
        raise SequenceError(f"{spec.name or spec.block}: upper bound {spec.last} = {last} < -1 for n={n}")
    return range(int(last) + 1)


def expand_sequence(spec: SequenceSpec, k: int, n: int) -> list[Vertex]:
    if spec.last is None:
        return expand_block(spec.block, k, n=n)
    out: list[Vertex] = []
    for i in index_range(spec, n):
        out.extend(expand_block(spec.block, k, n=n, i=i))
    return out


def expand_cycle(pieces: Sequence[SequenceSpec], k: int, n: int) -> tuple[Vertex, ...]:
    """Concatenate the expanded pieces into one cyclic vertex list."""
    out: list[Vertex] = []
    for spec in pieces:
        out.extend(expand_sequence(spec, k, n))
    return tuple(out)


def parse_literal_cycle(text: str, k: int) -> tuple[Vertex, ...]:
    """A fully numeric listing such as ``"inf,(2,0),(-4,2)"``."""
    return tuple(expand_block(text, k))
