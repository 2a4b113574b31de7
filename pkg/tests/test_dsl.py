import pytest
from hypothesis import given
from hypothesis import strategies as st

from vnum.dsl import (
    Colon,
    Complete,
    Cycle,
    EdgeIdeal,
    EvalError,
    GraphLiteral,
    GraphPower,
    Literal,
    Mixed,
    ParseError,
    Path,
    Polarize,
    Pow,
    Product,
    SemanticError,
    SqPow,
    Sum,
    SymPow,
    evaluate,
    parse,
    parse_graph,
    to_text,
)


def gens_text(I):
    return sorted(m.render(I.vars) for m in I.monomials)


def test_parse_examples():
    assert parse("pow(I(path(8)),2)") == Pow(EdgeIdeal(Path(8)), 2)
    assert parse("sympow(I(complete(4)),3)") == SymPow(EdgeIdeal(Complete(4)), 3)
    assert parse("I(power(path(6),2))") == EdgeIdeal(GraphPower(Path(6), 2))
    assert parse("mixed(n=4,m=3;[2,2],[3,1])") == Mixed(4, 3, ((2, 2), (3, 1)))
    assert parse("sqpow(I(path(8)),2)") == SqPow(EdgeIdeal(Path(8)), 2)
    assert parse_graph("graph{n=5; edges=[1-2,2-3,3-4,4-5]}") == GraphLiteral(5, ((1, 2), (2, 3), (3, 4), (4, 5)))


def test_operators_and_literals():
    t = parse("(x1^2, x1*x2) + x3 * x4")
    assert t == Sum(Literal(((("x1", 2),), (("x1", 1), ("x2", 1)))),
                    Product(Literal(((("x3", 1),),)), Literal(((("x4", 1),),))))
    assert parse("1") == Literal(((),))
    assert parse("x1_2*x2_1") == Literal(((("x1_2", 1), ("x2_1", 1)),))


def test_evaluate_examples():
    assert gens_text(evaluate(parse("I(path(4))"))) == ["x1*x2", "x2*x3", "x3*x4"]
    assert gens_text(evaluate(parse("colon(I(path(4)), x3)"))) == ["x2", "x4"]
    assert gens_text(evaluate(parse("sqpow(I(path(4)),2)"))) == ["x1*x2*x3*x4"]
    assert gens_text(evaluate(parse("polarize((x1^2*x2, x1*x2^2))"))) == ["x1_1*x1_2*x2_1", "x1_1*x2_1*x2_2"]
    assert evaluate(parse("mixed(n=4,m=3;[2,2])")).vars.names == ("x1", "x2", "x3", "x4", "y1", "y2", "y3")


def test_evaluation_is_repeatable():
    t = parse("pow(I(cycle(5)),2) + colon(I(path(5)), x2*x3)")
    assert evaluate(t) == evaluate(t)


def test_literal_embeds_into_graph_ring():
    I = evaluate(parse("I(path(3)) + x1^2"))
    assert I.vars.names == ("x1", "x2", "x3")
    assert gens_text(I) == ["x1*x2", "x1^2", "x2*x3"]


@pytest.mark.parametrize("text,line,column", [
    ("pow(I(path(8)) 2)", 1, 16),
    ("I(path(8)) +", 1, 13),
    ("I(\n  path 8)", 2, 8),
    ("foo(3)", 1, 1),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse(text)
    err = info.value
    assert (err.line, err.column) == (line, column)
    assert err.expected
    assert f"line {line}, column {column}" in str(err)


def test_parse_error_lists_expected_tokens():
    with pytest.raises(ParseError) as info:
        parse("pow(I(path(8)) 2)")
    assert info.value.expected == ("','",)
    assert info.value.found == "'2'"


@pytest.mark.parametrize("text", [
    "I(path(1))", "I(cycle(2))", "pow(I(path(4)),0)", "I(power(path(4),0))", "path(4)",
    "I(graph{n=3; edges=[1-4]})", "I(graph{n=3; edges=[2-2]})", "mixed(n=2,m=2;[1,1],[2,2])",
    "(x1, I(path(3)))",
])
def test_semantic_errors(text):
    with pytest.raises(SemanticError):
        parse(text)


def test_eval_errors_name_the_subexpression():
    with pytest.raises(EvalError) as info:
        evaluate(parse("sympow((x1^2, x1*x2),2)"))
    assert "sympow(" in str(info.value)
    with pytest.raises(EvalError):
        evaluate(parse("x1 + y1_1"))


# ---- round trip over generated trees ---------------------------------------------

small = st.integers(1, 4)
graphs = st.recursive(
    st.one_of(st.builds(Path, st.integers(2, 9)), st.builds(Cycle, st.integers(3, 9)),
              st.builds(Complete, st.integers(2, 6)),
              st.integers(2, 5).flatmap(lambda n: st.builds(
                  GraphLiteral, st.just(n),
                  st.lists(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] != e[1]),
                           max_size=4).map(tuple)))),
    lambda g: st.builds(GraphPower, g, small), max_leaves=3)
names = st.builds(lambda c, i, j: f"{c}{i}" + (f"_{j}" if j else ""), st.sampled_from("xy"),
                  st.integers(1, 9), st.integers(0, 2))
monomials = st.lists(st.tuples(names, small), max_size=3).map(tuple)
literals = st.lists(monomials, min_size=1, max_size=3).map(lambda ms: Literal(tuple(ms)))
mixed = st.builds(lambda n, m: Mixed(n, m, ((1, m),) if n == 1 else ((1, m), (n, 1)) if m > 1 else ((n, m),)),
                  st.integers(1, 4), st.integers(1, 4))
leaves = st.one_of(literals, mixed, st.builds(EdgeIdeal, graphs))
trees = st.recursive(leaves, lambda e: st.one_of(
    st.builds(Pow, e, small), st.builds(SqPow, e, small), st.builds(SymPow, e, small),
    st.builds(Sum, e, e), st.builds(Product, e, e), st.builds(Colon, e, e), st.builds(Polarize, e)),
    max_leaves=6)


@given(trees)
def test_round_trip(tree):
    text = to_text(tree)
    assert parse(text) == tree
    assert to_text(parse(text)) == text


@given(graphs)
def test_graph_round_trip(g):
    assert parse_graph(to_text(g)) == g
