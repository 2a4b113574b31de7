"""Ideal-expression language used by the command line.

    expr  := prod ('+' prod)*
    prod  := term ('*' term)*
    term  := ideal-func '(' args ')' | monomial | '1' | '(' expr (',' expr)* ')'
    graph := 'path(n)' | 'cycle(n)' | 'complete(n)' | 'power(' graph ',' k ')'
           | 'graph{n=N; edges=[i-j, ...]}'

Ideal functions: I(graph), pow(e,k), sqpow(e,k), sympow(e,k), colon(e,e),
polarize(e), mixed(n=N,m=M;[q,r],...).  A monomial such as ``x1^2*x3`` is read
as one token and stands for the principal ideal it generates; a parenthesized
list of two or more monomials is an ideal literal.

``parse`` returns a tree of frozen dataclasses, ``to_text`` prints the
canonical form (``parse(to_text(t)) == t``) and ``evaluate`` builds the ideal.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .clutter import Graph, complete, cycle, graph_power, path
from .constructors import MixedSpec, edge_ideal, mixed_ideal, squarefree_power, symbolic_power
from .errors import InvalidInput, VnumError
from .monomial import MonomialIdeal, VarSet, colon, ideal_sum, polarize, power, product


class ParseError(InvalidInput):
    def __init__(self, text: str, pos: int, expected, found: str):
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.expected = tuple(sorted(set(expected)))
        self.found = found
        super().__init__(f"line {self.line}, column {self.column}: expected one of "
                         f"{', '.join(self.expected)} but found {found}")


class SemanticError(InvalidInput):
    pass


class EvalError(InvalidInput):
    pass


# ---- syntax tree ---------------------------------------------------------------

@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class GraphPower:
    graph: "GraphExpr"
    k: int


@dataclass(frozen=True)
class GraphLiteral:
    n: int
    edges: tuple[tuple[int, int], ...]


GraphExpr = Union[Path, Cycle, Complete, GraphPower, GraphLiteral]


@dataclass(frozen=True)
class EdgeIdeal:
    graph: GraphExpr


@dataclass(frozen=True)
class Mixed:
    n: int
    m: int
    terms: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Pow:
    expr: "IdealExpr"
    k: int


@dataclass(frozen=True)
class SqPow:
    expr: "IdealExpr"
    k: int


@dataclass(frozen=True)
class SymPow:
    expr: "IdealExpr"
    k: int


@dataclass(frozen=True)
class Sum:
    left: "IdealExpr"
    right: "IdealExpr"


@dataclass(frozen=True)
class Product:
    left: "IdealExpr"
    right: "IdealExpr"


@dataclass(frozen=True)
class Colon:
    left: "IdealExpr"
    right: "IdealExpr"


@dataclass(frozen=True)
class Literal:
    """Monomials as written: each is a tuple of (variable name, exponent) factors."""
    monomials: tuple[tuple[tuple[str, int], ...], ...]


@dataclass(frozen=True)
class Polarize:
    expr: "IdealExpr"


IdealExpr = Union[EdgeIdeal, Mixed, Pow, SqPow, SymPow, Sum, Product, Colon, Literal, Polarize]


# ---- lexer -----------------------------------------------------------------

_VAR = r"[xy]\d+(?:_\d+)?"
_FACTOR = _VAR + r"(?:\^\d+)?"
_TOKEN = re.compile(
    rf"(?P<ws>\s+)|(?P<mono>{_FACTOR}(?:\*{_FACTOR})*)(?![A-Za-z0-9_])|(?P<int>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[()\[\]{},;=+*\-])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(text, pos, ["a token"], repr(text[pos]))
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# ---- parser ----------------------------------------------------------------

IDEAL_FUNCS = ("I", "pow", "sqpow", "sympow", "colon", "polarize", "mixed")
GRAPH_FUNCS = ("path", "cycle", "complete", "power", "graph")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected):
        t = self.tok
        raise ParseError(self.text, t.pos, expected, repr(t.text) if t.kind != "end" else "end of input")

    def accept(self, text: str) -> bool:
        if self.tok.kind in ("punct", "ident") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str):
        if not self.accept(text):
            self.fail([repr(text)])

    def integer(self) -> int:
        if self.tok.kind != "int":
            self.fail(["integer"])
        value = int(self.tok.text)
        self.i += 1
        return value

    def semantic(self, pos: int, msg: str):
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        raise SemanticError(f"line {line}, column {col}: {msg}")

    def bounded(self, lo: int, what: str) -> int:
        pos = self.tok.pos
        value = self.integer()
        if value < lo:
            self.semantic(pos, f"{what} must be >= {lo}, got {value}")
        return value

    # ideals

    def parse(self) -> IdealExpr:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail(["'+'", "'*'", "end of input"])
        return node

    def expr(self) -> IdealExpr:
        node = self.prod()
        while self.accept("+"):
            node = Sum(node, self.prod())
        return node

    def prod(self) -> IdealExpr:
        node = self.term()
        while self.accept("*"):
            node = Product(node, self.term())
        return node

    def term(self) -> IdealExpr:
        t = self.tok
        if t.kind == "mono":
            self.i += 1
            return Literal((_monomial(t.text),))
        if t.kind == "int" and t.text == "1":
            self.i += 1
            return Literal(((),))
        if self.accept("("):
            items = [self.expr()]
            while self.accept(","):
                items.append(self.expr())
            self.expect(")")
            if len(items) == 1:
                return items[0]
            if not all(isinstance(x, Literal) and len(x.monomials) == 1 for x in items):
                self.semantic(t.pos, "an ideal literal lists monomials only")
            return Literal(tuple(x.monomials[0] for x in items))
        if t.kind == "ident" and t.text in IDEAL_FUNCS:
            self.i += 1
            return getattr(self, "f_" + t.text)(t)
        if t.kind == "ident" and t.text in GRAPH_FUNCS:
            self.semantic(t.pos, f"{t.text!r} builds a graph; wrap it as I(...) to get its edge ideal")
        self.fail([repr(f) for f in IDEAL_FUNCS] + ["monomial", "'1'", "'('"])

    def f_I(self, t):
        self.expect("(")
        g = self.graph()
        self.expect(")")
        return EdgeIdeal(g)

    def _expr_k(self, cls, lo: int):
        self.expect("(")
        e = self.expr()
        self.expect(",")
        k = self.bounded(lo, "exponent")
        self.expect(")")
        return cls(e, k)

    def f_pow(self, t):
        return self._expr_k(Pow, 1)

    def f_sqpow(self, t):
        return self._expr_k(SqPow, 1)

    def f_sympow(self, t):
        return self._expr_k(SymPow, 1)

    def f_colon(self, t):
        self.expect("(")
        a = self.expr()
        self.expect(",")
        b = self.expr()
        self.expect(")")
        return Colon(a, b)

    def f_polarize(self, t):
        self.expect("(")
        e = self.expr()
        self.expect(")")
        return Polarize(e)

    def f_mixed(self, t):
        self.expect("(")
        self.expect("n")
        self.expect("=")
        n = self.integer()
        self.expect(",")
        self.expect("m")
        self.expect("=")
        m = self.integer()
        self.expect(";")
        terms = [self._pair()]
        while self.accept(","):
            terms.append(self._pair())
        self.expect(")")
        try:
            MixedSpec(n, m, tuple(terms))
        except InvalidInput as exc:
            self.semantic(t.pos, str(exc))
        return Mixed(n, m, tuple(terms))

    def _pair(self) -> tuple[int, int]:
        self.expect("[")
        q = self.integer()
        self.expect(",")
        r = self.integer()
        self.expect("]")
        return (q, r)

    # graphs

    def graph(self) -> GraphExpr:
        t = self.tok
        if t.kind == "ident" and t.text in GRAPH_FUNCS:
            self.i += 1
            if t.text == "graph":
                return self._graph_literal(t)
            self.expect("(")
            if t.text == "power":
                g = self.graph()
                self.expect(",")
                k = self.bounded(1, "graph power")
                self.expect(")")
                return GraphPower(g, k)
            lo = {"path": 2, "cycle": 3, "complete": 2}[t.text]
            n = self.bounded(lo, f"{t.text} size")
            self.expect(")")
            return {"path": Path, "cycle": Cycle, "complete": Complete}[t.text](n)
        self.fail([repr(f) for f in GRAPH_FUNCS])

    def _graph_literal(self, t) -> GraphLiteral:
        self.expect("{")
        self.expect("n")
        self.expect("=")
        n = self.bounded(1, "vertex count")
        self.expect(";")
        self.expect("edges")
        self.expect("=")
        self.expect("[")
        edges = []
        if not self.accept("]"):
            while True:
                pos = self.tok.pos
                u = self.integer()
                self.expect("-")
                v = self.integer()
                if not (1 <= u <= n and 1 <= v <= n):
                    self.semantic(pos, f"edge {u}-{v} uses a vertex outside 1..{n}")
                if u == v:
                    self.semantic(pos, f"loop {u}-{v} is not allowed")
                edges.append((u, v))
                if self.accept("]"):
                    break
                self.expect(",")
        self.expect("}")
        return GraphLiteral(n, tuple(edges))


def _monomial(text: str) -> tuple[tuple[str, int], ...]:
    factors = []
    for part in text.split("*"):
        name, _, exp = part.partition("^")
        factors.append((name, int(exp) if exp else 1))
    return tuple(factors)


def parse(text: str) -> IdealExpr:
    return _Parser(text).parse()


def parse_graph(text: str) -> GraphExpr:
    p = _Parser(text)
    g = p.graph()
    if p.tok.kind != "end":
        p.fail(["end of input"])
    return g


# ---- printer ---------------------------------------------------------------

def to_text(node) -> str:
    if isinstance(node, Path):
        return f"path({node.n})"
    if isinstance(node, Cycle):
        return f"cycle({node.n})"
    if isinstance(node, Complete):
        return f"complete({node.n})"
    if isinstance(node, GraphPower):
        return f"power({to_text(node.graph)},{node.k})"
    if isinstance(node, GraphLiteral):
        body = ",".join(f"{u}-{v}" for u, v in node.edges)
        return f"graph{{n={node.n}; edges=[{body}]}}"
    if isinstance(node, EdgeIdeal):
        return f"I({to_text(node.graph)})"
    if isinstance(node, Mixed):
        return MixedSpec(node.n, node.m, node.terms).render()
    if isinstance(node, (Pow, SqPow, SymPow)):
        name = {Pow: "pow", SqPow: "sqpow", SymPow: "sympow"}[type(node)]
        return f"{name}({to_text(node.expr)},{node.k})"
    if isinstance(node, Colon):
        return f"colon({to_text(node.left)}, {to_text(node.right)})"
    if isinstance(node, Polarize):
        return f"polarize({to_text(node.expr)})"
    if isinstance(node, Literal):
        monos = ["*".join(n if e == 1 else f"{n}^{e}" for n, e in m) or "1" for m in node.monomials]
        return monos[0] if len(monos) == 1 else "(" + ", ".join(monos) + ")"
    if isinstance(node, (Sum, Product)):
        op = " + " if isinstance(node, Sum) else " * "
        return _operand(node.left, node, False) + op + _operand(node.right, node, True)
    raise TypeError(f"not an expression node: {node!r}")


def _prec(node) -> int:
    return 1 if isinstance(node, Sum) else 2 if isinstance(node, Product) else 3


def _operand(child, parent, right: bool) -> str:
    # left-associative: a right operand of equal precedence needs parentheses
    text = to_text(child)
    if _prec(child) < _prec(parent) or (right and _prec(child) == _prec(parent)):
        return f"({text})"
    return text


# ---- evaluation ------------------------------------------------------------

def build_graph(node: GraphExpr) -> Graph:
    if isinstance(node, Path):
        return path(node.n)
    if isinstance(node, Cycle):
        return cycle(node.n)
    if isinstance(node, Complete):
        return complete(node.n)
    if isinstance(node, GraphPower):
        return graph_power(build_graph(node.graph), node.k)
    if isinstance(node, GraphLiteral):
        return Graph.from_edges(node.n, [(u - 1, v - 1) for u, v in node.edges])
    raise TypeError(f"not a graph node: {node!r}")


_NAME = re.compile(r"^([xy])(\d+)(?:_(\d+))?$")


def _name_key(name: str):
    letter, i, j = _NAME.match(name).groups()
    return (letter != "x", int(i), int(j or 0))


def literal_ring(names) -> VarSet:
    """x1..x_a, y1..y_b covering every standard name; polarized names are listed as used."""
    names = set(names)
    if any("_" in n for n in names):
        return VarSet(tuple(sorted(names, key=_name_key)))
    xs = max((int(n[1:]) for n in names if n[0] == "x"), default=0)
    ys = max((int(n[1:]) for n in names if n[0] == "y"), default=0)
    if xs == 0 and ys == 0:
        xs = 1
    return VarSet(tuple(f"x{i}" for i in range(1, xs + 1)) + tuple(f"y{j}" for j in range(1, ys + 1)))


def _embed(I: MonomialIdeal, ring: VarSet) -> MonomialIdeal:
    if I.vars == ring:
        return I
    pos = [ring.index(name) for name in I.vars.names]
    gens = []
    for g in I.gens:
        e = [0] * ring.count
        for p, a in zip(pos, g):
            e[p] = a
        gens.append(tuple(e))
    return MonomialIdeal(ring, gens)


def _unify(I: MonomialIdeal, J: MonomialIdeal, where: str) -> tuple[MonomialIdeal, MonomialIdeal]:
    a, b = set(I.vars.names), set(J.vars.names)
    if a <= b:
        return _embed(I, J.vars), J
    if b <= a:
        return I, _embed(J, I.vars)
    raise EvalError(f"in {where}: operands live in unrelated variable sets")


def evaluate(node: IdealExpr) -> MonomialIdeal:
    """Build the ideal; engine errors come back as EvalError naming the failing subexpression."""
    return _eval(node)


def _eval(node) -> MonomialIdeal:
    try:
        return _eval_node(node)
    except EvalError:
        raise
    except VnumError as exc:
        raise EvalError(f"in {to_text(node)}: {exc}") from exc


def _eval_node(node) -> MonomialIdeal:
    if isinstance(node, EdgeIdeal):
        return edge_ideal(build_graph(node.graph))
    if isinstance(node, Mixed):
        return mixed_ideal(MixedSpec(node.n, node.m, node.terms))
    if isinstance(node, Pow):
        return power(_eval(node.expr), node.k)
    if isinstance(node, SqPow):
        return squarefree_power(_eval(node.expr), node.k)
    if isinstance(node, SymPow):
        return symbolic_power(_eval(node.expr), node.k)
    if isinstance(node, Polarize):
        return polarize(_eval(node.expr)).ideal
    if isinstance(node, Literal):
        ring = literal_ring(n for m in node.monomials for n, _ in m)
        gens = []
        for mono in node.monomials:
            e = [0] * ring.count
            for name, a in mono:
                e[ring.index(name)] += a
            gens.append(tuple(e))
        return MonomialIdeal(ring, gens)
    if isinstance(node, (Sum, Product, Colon)):
        I, J = _unify(_eval(node.left), _eval(node.right), to_text(node))
        op = {Sum: ideal_sum, Product: product, Colon: colon}[type(node)]
        return op(I, J)
    raise TypeError(f"not an ideal node: {node!r}")
