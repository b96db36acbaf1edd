"""A small expression language for length-based center functions.

Grammar (whitespace-insensitive; precedence pow > unary > mul/div > add/sub):

    expr    = term { ("+" | "-") term } ;
    term    = unary { ("*" | "/") unary } ;
    unary   = { ("+" | "-") } power ;
    power   = atom [ "^" unary ] ;
    atom    = NUMBER | dist | "perim" | call | "(" expr ")" ;
    dist    = "d" "(" index "," index ")" ;
    call    = ("sqrt" | "abs") "(" expr ")"
            | ("min" | "max") "(" expr { "," expr } ")" ;
    index   = ("n" | INT) { ("+" | "-") INT } ;
    NUMBER  = INT [ "." INT ] ;

`d(i,j)` reads the distance between vertices i and j; indices may be
literals or n-relative forms like `n-1` and are reduced mod n to 1..n at
evaluation time. `d(i,i)` is rejected while parsing when the two index
expressions are structurally identical, and at evaluation when they
collide after reduction. `perim` sums the n side lengths.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Union

from .errors import AxiomViolation, EvalError, ExprIndexError, ExprSyntaxError
from .framework import LengthCenterFunction
from .geometry import DihedralElement, DistanceMatrix, distance_matrix
from .sampling import random_polygon

# Admission tolerances: reversal-invariance gap (relative) and how far the
# fitted homogeneity slope may sit from a single natural number.
ADMIT_REL_TOL = 1e-9
ADMIT_SLOPE_TOL = 1e-6
_SCALES = (0.5, 1.0, 2.0, 4.0)


# ------------------------------------------------------------------- syntax


@dataclass(frozen=True)
class Index:
    """A vertex index: a literal, or an offset from n."""

    base: str  # "literal" | "n"
    offset: int

    def resolve(self, n: int) -> int:
        """0-based index, reduced mod n."""
        value = self.offset if self.base == "literal" else n + self.offset
        return (value - 1) % n

    def render(self) -> str:
        if self.base == "literal":
            return str(self.offset)
        if self.offset == 0:
            return "n"
        return f"n{self.offset:+d}"


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Dist:
    i: Index
    j: Index
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Unary:
    op: str  # "neg" | "sqrt" | "abs"
    arg: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str  # "+" | "-" | "*" | "/" | "^"
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Aggregate:
    op: str  # "perim" | "min" | "max"
    args: tuple["Expr", ...]


Expr = Union[Const, Dist, Unary, Binary, Aggregate]


@dataclass(frozen=True)
class ParsedCenter:
    expr: Expr
    source: str
    arity_policy: str  # "fixed-n" | "n-generic"
    min_n: int


# ---------------------------------------------------------------- tokenizer


_OPS = set("+-*/^(),")


@dataclass(frozen=True)
class _Token:
    kind: str  # "number" | "name" | "op" | "end"
    text: str
    pos: int


def _tokenize(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(source):
        ch = source[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch in _OPS:
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(source) and source[i].isdigit():
                i += 1
            if i < len(source) and source[i] == ".":
                i += 1
                if i >= len(source) or not source[i].isdigit():
                    raise ExprSyntaxError("digits must follow a decimal point", i)
                while i < len(source) and source[i].isdigit():
                    i += 1
            tokens.append(_Token("number", source[start:i], start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(source) and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(_Token("name", source[start:i], start))
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", len(source)))
    return tokens


# ------------------------------------------------------------------- parser


class _Parser:
    def __init__(self, source: str) -> None:
        self.source = source
        self.tokens = _tokenize(source)
        self.at = 0

    def peek(self) -> _Token:
        return self.tokens[self.at]

    def take(self) -> _Token:
        tok = self.tokens[self.at]
        self.at += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.take()
        if tok.kind == "end" or tok.text != text:
            raise ExprSyntaxError(f"expected {text!r}", tok.pos)
        return tok

    # expr = term { ("+"|"-") term }
    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            node = Binary(op, node, self.term())
        return node

    # term = unary { ("*"|"/") unary }
    def term(self) -> Expr:
        node = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.take().text
            node = Binary(op, node, self.unary())
        return node

    # unary = { ("+"|"-") } power
    def unary(self) -> Expr:
        signs = []
        while self.peek().kind == "op" and self.peek().text in "+-":
            signs.append(self.take().text)
        node = self.power()
        for s in reversed(signs):
            if s == "-":
                node = Unary("neg", node)
        return node

    # power = atom [ "^" unary ]
    def power(self) -> Expr:
        node = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            node = Binary("^", node, self.unary())
        return node

    def atom(self) -> Expr:
        tok = self.take()
        if tok.kind == "number":
            return Const(float(tok.text))
        if tok.kind == "op" and tok.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "name":
            if tok.text == "d":
                return self.dist(tok.pos)
            if tok.text == "perim":
                return Aggregate("perim", ())
            if tok.text in ("sqrt", "abs"):
                self.expect("(")
                node = self.expr()
                self.expect(")")
                return Unary(tok.text, node)
            if tok.text in ("min", "max"):
                self.expect("(")
                args = [self.expr()]
                while self.peek().kind == "op" and self.peek().text == ",":
                    self.take()
                    args.append(self.expr())
                self.expect(")")
                return Aggregate(tok.text, tuple(args))
            raise ExprSyntaxError(f"unknown name {tok.text!r}", tok.pos)
        raise ExprSyntaxError(
            "expected a number, d(i,j), perim, a call, or '('", tok.pos
        )

    def dist(self, pos: int) -> Expr:
        self.expect("(")
        i = self.index()
        self.expect(",")
        j = self.index()
        self.expect(")")
        if i == j:
            raise ExprIndexError("d(i,i) is not a distance", pos)
        return Dist(i, j, pos)

    # index = ("n" | INT) { ("+"|"-") INT }
    def index(self) -> Index:
        tok = self.take()
        if tok.kind == "name" and tok.text == "n":
            base, offset = "n", 0
        elif tok.kind == "number" and "." not in tok.text:
            base, offset = "literal", int(tok.text)
        else:
            raise ExprSyntaxError("index must be an integer or n±integer", tok.pos)
        while self.peek().kind == "op" and self.peek().text in "+-":
            sign = 1 if self.take().text == "+" else -1
            num = self.take()
            if num.kind != "number" or "." in num.text:
                raise ExprSyntaxError("index offset must be an integer", num.pos)
            offset += sign * int(num.text)
        if base == "literal" and offset < 1:
            raise ExprIndexError(f"literal index {offset} is below 1", tok.pos)
        return Index(base, offset)


def parse(source: str) -> ParsedCenter:
    parser = _Parser(source)
    node = parser.expr()
    end = parser.take()
    if end.kind != "end":
        raise ExprSyntaxError(f"unexpected trailing {end.text!r}", end.pos)

    literals: list[int] = []
    symbolic = False

    def walk(e: Expr) -> None:
        nonlocal symbolic
        if isinstance(e, Dist):
            for idx in (e.i, e.j):
                if idx.base == "literal":
                    literals.append(idx.offset)
                else:
                    symbolic = True
        elif isinstance(e, Unary):
            walk(e.arg)
        elif isinstance(e, Binary):
            walk(e.left)
            walk(e.right)
        elif isinstance(e, Aggregate):
            for a in e.args:
                walk(a)

    walk(node)
    min_n = max([3] + literals)
    # fixed-n: the expression names specific vertex slots and nothing ties
    # them to n; everything else evaluates uniformly at any size
    policy = "fixed-n" if literals and not symbolic else "n-generic"
    return ParsedCenter(node, source, policy, min_n)


# ------------------------------------------------------------------ printer


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4}


def _render(e: Expr) -> tuple[str, int]:
    if isinstance(e, Const):
        v = e.value
        text = str(int(v)) if v == int(v) and abs(v) < 1e15 else repr(v)
        return text, 5
    if isinstance(e, Dist):
        return f"d({e.i.render()},{e.j.render()})", 5
    if isinstance(e, Aggregate):
        if e.op == "perim":
            return "perim", 5
        inner = ",".join(_render(a)[0] for a in e.args)
        return f"{e.op}({inner})", 5
    if isinstance(e, Unary):
        if e.op in ("sqrt", "abs"):
            return f"{e.op}({_render(e.arg)[0]})", 5
        text, prec = _render(e.arg)
        if prec < 4:
            text = f"({text})"
        return f"-{text}", 3
    if isinstance(e, Binary):
        my = _PREC[e.op]
        lt, lp = _render(e.left)
        rt, rp = _render(e.right)
        if e.op == "^":
            if lp <= my:
                lt = f"({lt})"
            # right side binds naturally (right-associative)
            if rp < 3:
                rt = f"({rt})"
        else:
            if lp < my:
                lt = f"({lt})"
            if rp <= my:
                rt = f"({rt})"
        return f"{lt}{e.op}{rt}", my
    raise TypeError(f"not an expression node: {e!r}")


def to_source(e: Expr) -> str:
    """Canonical text that parses back to a structurally equal tree."""
    return _render(e)[0]


# ---------------------------------------------------------------- evaluation


def evaluate(expr_or_center: Union[Expr, ParsedCenter], D: DistanceMatrix) -> float:
    """Evaluate on a distance matrix. Division by zero, square roots of
    negatives, and fractional powers of negatives raise EvalError; index
    pairs that collide after mod-n reduction raise ExprIndexError."""
    e = expr_or_center.expr if isinstance(expr_or_center, ParsedCenter) else expr_or_center
    n = D.n

    def ev(node: Expr) -> float:
        if isinstance(node, Const):
            return node.value
        if isinstance(node, Dist):
            i = node.i.resolve(n)
            j = node.j.resolve(n)
            if i == j:
                raise ExprIndexError(
                    f"d({node.i.render()},{node.j.render()}) collides at n={n}",
                    node.pos,
                )
            return D.d[i][j]
        if isinstance(node, Unary):
            v = ev(node.arg)
            if node.op == "neg":
                return -v
            if node.op == "abs":
                return abs(v)
            if v < 0.0:
                raise EvalError(f"sqrt of negative value {v!r}")
            return math.sqrt(v)
        if isinstance(node, Binary):
            a = ev(node.left)
            b = ev(node.right)
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            if node.op == "/":
                if b == 0.0:
                    raise EvalError("division by zero")
                return a / b
            # pow
            if a == 0.0 and b < 0.0:
                raise EvalError("zero base with negative exponent")
            if a < 0.0 and b != int(b):
                raise EvalError("fractional power of a negative base")
            try:
                return a**b
            except OverflowError as exc:
                raise EvalError(f"power overflow: {a!r}^{b!r}") from exc
        if isinstance(node, Aggregate):
            if node.op == "perim":
                return sum(D.d[i][(i + 1) % n] for i in range(n))
            vals = [ev(a) for a in node.args]
            return min(vals) if node.op == "min" else max(vals)
        raise TypeError(f"not an expression node: {node!r}")

    value = ev(e)
    if not math.isfinite(value):
        raise EvalError(f"non-finite value {value!r}")
    return value


# ----------------------------------------------------------------- admission


def admit(
    pc: ParsedCenter, n: int, seed: int = 0, trials: int = 64
) -> LengthCenterFunction:
    """Verify reversal-invariance and homogeneity on sampled inputs.

    Matrices are measured from random n-gons; each is checked against its
    reversal-permuted copy, and against rescaled copies whose log-log slope
    must agree with a single natural-number degree. Raises AxiomViolation
    naming the property and carrying a witness; returns the admitted
    function otherwise.
    """
    rng = random.Random(seed)
    sigma = DihedralElement.sigma(n).permutation()
    slopes: list[float] = []
    for _ in range(trials):
        D = distance_matrix(random_polygon(rng, n))
        base = evaluate(pc, D)
        mirrored = evaluate(pc, D.permuted(sigma))
        scale = max(abs(base), abs(mirrored), 1.0)
        if abs(base - mirrored) > ADMIT_REL_TOL * scale:
            raise AxiomViolation(
                "relabel-invariance",
                f"{pc.source!r} distinguishes a matrix from its reversal "
                f"({base!r} vs {mirrored!r})",
                witness={"matrix": D, "value": base, "reversed_value": mirrored},
            )
        vals = [evaluate(pc, D.scaled(t)) for t in _SCALES]
        if any(v == 0.0 for v in vals):
            continue
        if len({v > 0.0 for v in vals}) != 1:
            raise AxiomViolation(
                "homogeneity",
                f"{pc.source!r} changes sign under rescaling",
                witness={"matrix": D, "values": tuple(vals)},
            )
        xs = [math.log(t) for t in _SCALES]
        ys = [math.log(abs(v)) for v in vals]
        mx = sum(xs) / len(xs)
        my = sum(ys) / len(ys)
        slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum(
            (x - mx) ** 2 for x in xs
        )
        dev = max(abs(y - (my + slope * (x - mx))) for x, y in zip(xs, ys))
        if dev > ADMIT_SLOPE_TOL:
            raise AxiomViolation(
                "homogeneity",
                f"{pc.source!r} does not scale as a single power "
                f"(fit deviation {dev:.3e})",
                witness={"matrix": D, "values": tuple(vals)},
            )
        slopes.append(slope)
    if slopes:
        mean = sum(slopes) / len(slopes)
        degree = round(mean)
        off = max(abs(s - degree) for s in slopes)
        if off > ADMIT_SLOPE_TOL or degree < 0:
            raise AxiomViolation(
                "homogeneity",
                f"{pc.source!r} has degree {mean:.6f}, not a natural number",
                witness={"slopes": tuple(slopes)},
            )
    return LengthCenterFunction(pc.source, lambda D: evaluate(pc, D))
