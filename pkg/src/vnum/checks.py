"""Verification harness: sweep a parameter range, compare closed forms with computed values.

Each registered check turns a parameter range into a list of instances and
each instance into one ``CheckReport``.  A report's ``formula`` is either an
integer (exact claim) or a ``[lo, hi]`` pair (inequality claim, ``None`` for
an open side).  Disagreements are data: they never raise.

Checks flagged ``known_issue`` cover statements whose published form is
already known not to hold on every instance.  Their DISAGREE reports are
expected and do not count as failures for the CLI exit code.
"""
from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product as cartesian
from random import Random
from typing import Callable, Iterable

from . import formulas as F
from .clutter import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    graph_power,
    matching_number,
    matchings,
    min_cover_stable_sets,
    even_connection_graph,
    path,
    random_tree,
)
from .constructors import (
    edge_ideal,
    forest_recursion_rhs,
    minimal_primes_squarefree,
    mixed_ideal,
    prime_power,
    squarefree_power,
    symbolic_power,
)
from .errors import InvalidInput
from .monomial import (
    Monomial,
    MonomialIdeal,
    VarSet,
    alpha,
    colon,
    intersect_all,
    maximal_ideal,
    min_degree_outside,
    power,
)
from .vnumber import associated_primes, polarization_vnumber_check, v_number

AGREE, DISAGREE, INAPPLICABLE = "AGREE", "DISAGREE", "INAPPLICABLE"
REG_NOTE = "reg(S/I) = reg(I) - 1"


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    instance: dict
    formula: object
    computed: dict
    status: str
    notes: str = ""
    known_issue: bool = False
    alternatives: dict = field(default_factory=dict, compare=False)

    @property
    def unexpected(self) -> bool:
        return self.status == DISAGREE and not self.known_issue

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "instance": self.instance,
            "formula": self.formula,
            "computed": self.computed,
            "status": self.status,
            "notes": self.notes,
        }


def judge(formula, computed: dict) -> tuple[str, str]:
    """Status of computed values against an exact value or a [lo, hi] interval."""
    if formula is None or not computed:
        return INAPPLICABLE, ""
    if isinstance(formula, (list, tuple)):
        lo, hi = formula
        low = [m for m, v in computed.items() if lo is not None and v < lo]
        high = [m for m, v in computed.items() if hi is not None and v > hi]
        if not low and not high:
            return AGREE, ""
        parts = []
        if low:
            parts.append(f"lower bound {lo} fails for {','.join(low)}")
        if high:
            parts.append(f"upper bound {hi} fails for {','.join(high)}")
        return DISAGREE, "; ".join(parts)
    bad = [m for m, v in computed.items() if v != formula]
    if not bad:
        return AGREE, ""
    return DISAGREE, "mismatch for " + ",".join(bad)


def _join(*notes: str) -> str:
    return "; ".join(n for n in notes if n)


# ---- parameter ranges ----------------------------------------------------------

_ITEM = re.compile(r"^\s*([a-z_]+)\s*=\s*(.+?)\s*$")


def parse_ranges(text: str | None) -> dict[str, list]:
    """Parse ``'n=4..12,k=1..3,family=path|cycle'`` into value lists."""
    out: dict[str, list] = {}
    if not text:
        return out
    for item in text.split(","):
        if not item.strip():
            continue
        m = _ITEM.match(item)
        if not m:
            raise InvalidInput(f"bad range item {item!r}; expected name=a..b, name=a or name=u|v")
        name, text = m.groups()
        if name in out:
            raise InvalidInput(f"parameter {name!r} given twice")
        out[name] = _parse_values(name, text)
    return out


def _parse_values(name: str, text: str) -> list:
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            a, b = int(lo), int(hi)
        except ValueError:
            raise InvalidInput(f"bad integer range {text!r} for {name}") from None
        if a > b:
            raise InvalidInput(f"empty range {text!r} for {name}")
        return list(range(a, b + 1))
    vals = []
    for tok in text.split("|"):
        tok = tok.strip()
        if not tok:
            raise InvalidInput(f"empty value in {text!r} for {name}")
        vals.append(int(tok) if re.fullmatch(r"-?\d+", tok) else tok)
    return vals


# ---- cached building blocks --------------------------------------------------------

GRAPH_FAMILIES = {"path": 2, "cycle": 3, "complete": 2, "bipartite": 2, "tree": 2}


def family_graph(family: str, n: int, seed: int = 0) -> Graph:
    if family not in GRAPH_FAMILIES:
        raise InvalidInput(f"unknown graph family {family!r}; expected one of {sorted(GRAPH_FAMILIES)}")
    if family == "path":
        return path(n)
    if family == "cycle":
        return cycle(n)
    if family == "complete":
        return complete(n)
    if family == "bipartite":
        return complete_bipartite(n // 2, n - n // 2)
    return random_tree(n, seed)


def graph_label(family: str, n: int) -> str:
    return {"path": f"L_{n}", "cycle": f"C_{n}", "complete": f"K_{n}",
            "bipartite": f"K_{n // 2},{n - n // 2}", "tree": f"T_{n}"}[family]


@lru_cache(maxsize=None)
def _edge(family: str, n: int, seed: int = 0) -> MonomialIdeal:
    return edge_ideal(family_graph(family, n, seed))


@lru_cache(maxsize=None)
def _pow(I: MonomialIdeal, k: int) -> MonomialIdeal:
    return I if k == 1 else power(I, k)


@lru_cache(maxsize=None)
def _sympow(I: MonomialIdeal, k: int) -> MonomialIdeal:
    return symbolic_power(I, k)


_GUARDS = {"max_subsets": None, "max_witness_degree": None}


def set_guards(max_subsets: int | None = None, max_witness_degree: int | None = None):
    """Desk-scale limits applied to every v-number computed by the checks."""
    new = {"max_subsets": max_subsets, "max_witness_degree": max_witness_degree}
    if new != _GUARDS:
        _GUARDS.update(new)
        vnum.cache_clear()


@lru_cache(maxsize=None)
def vnum(I: MonomialIdeal, method: str = "auto") -> int:
    return v_number(I, method, **_GUARDS)[0]


def _sizes(values: Iterable[int], minimum: int) -> list[int]:
    return [v for v in values if v >= minimum]


# ---- registry ---------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    check_id: str
    summary: str
    defaults: dict
    instances: Callable[[dict], Iterable[dict]]
    evaluate: Callable[[dict], CheckReport]
    known_issue: bool = False


REGISTRY: dict[str, Check] = {}
ALIASES = {"thm-3.4-reg": "lem-3.3+thm-3.4-reg"}


def register(check_id, summary, defaults, known_issue=False):
    def wrap(fn):
        def instances(ranges):
            return fn(None, ranges)

        def evaluate(inst):
            return fn(inst, None)

        REGISTRY[check_id] = Check(check_id, summary, defaults, instances, evaluate, known_issue)
        return fn
    return wrap


def report(check_id, instance, formula, computed, notes="", alternatives=None, status=None):
    st, why = judge(formula, computed)
    if status is not None:
        st = status
    known = REGISTRY[check_id].known_issue if check_id in REGISTRY else False
    if known and st == DISAGREE:
        notes = _join("known issue", notes)
    return CheckReport(check_id, instance, formula, computed, st, _join(why, notes), known,
                       alternatives or {})


def _bracket_notes(fn, args, computed_value) -> tuple[dict, str]:
    alts = {mode: fn(*args, mode=mode) for mode in F.BRACKETS}
    matching = [mode for mode, v in alts.items() if v == computed_value]
    text = "bracket " + " ".join(f"{m}={v}" for m, v in alts.items())
    text += "; matches " + ("+".join(matching) if matching else "neither")
    return alts, text


# -- mixed product ideals

def _mixed_params(case: int, n: int, m: int, sizes: Iterable[int]) -> Iterable[dict]:
    if case == 1:
        for q in range(1, n + 1):
            yield {"q": q}
    elif case == 2:
        for q, r in cartesian(range(1, n + 1), range(1, m + 1)):
            yield {"q": q, "r": r}
    elif case == 3:
        for q, t in cartesian(range(1, n + 1), range(1, m + 1)):
            yield {"q": q, "t": t}
    elif case == 4:
        for q, s in combinations(range(1, n + 1), 2):
            for r in range(1, m + 1):
                yield {"q": q, "r": r, "s": s}
    elif case == 5:
        for q, s in combinations(range(1, n + 1), 2):
            for t, r in combinations(range(1, m + 1), 2):
                yield {"q": q, "r": r, "s": s, "t": t}
    else:
        for size in sizes:
            for qs in combinations(range(1, n + 1), size):
                for rs in combinations(range(m, 0, -1), size):
                    yield {"terms": [[a, b] for a, b in zip(qs, rs)]}


def _mixed_instances(ranges, cases):
    for case in ranges["case"]:
        if case not in cases:
            raise InvalidInput(f"case must be in {cases}, got {case}")
        for n, m in cartesian(_sizes(ranges["n"], 1), _sizes(ranges["m"], 1)):
            for params in _mixed_params(case, n, m, ranges.get("terms", [])):
                yield {"case": case, "n": n, "m": m, **params}


def _mixed_ideal(inst) -> MonomialIdeal:
    params = {k: v for k, v in inst.items() if k not in ("case", "n", "m")}
    if "terms" in params:
        params["terms"] = tuple(tuple(t) for t in params["terms"])
    return mixed_ideal(F.mixed_spec(inst["case"], inst["n"], inst["m"], **params))


def _formula_params(inst):
    params = {k: v for k, v in inst.items() if k not in ("case", "n", "m")}
    if "terms" in params:
        params["terms"] = [tuple(t) for t in params["terms"]]
    return params


@register("thm-3.1-mixed", "v of mixed product ideals, six cases",
          {"case": [1, 2, 3, 4, 5, 6], "n": [1, 2, 3, 4], "m": [1, 2, 3, 4], "terms": [2, 3]})
def _thm_3_1(inst, ranges):
    if inst is None:
        return _mixed_instances(ranges, F.MIXED_CASES)
    I = _mixed_ideal(inst)
    formula = F.mixed_v(inst["case"], **_formula_params(inst))
    computed = {m: vnum(I, m) for m in ("stable-set", "colon", "witness")}
    return report("thm-3.1-mixed", inst, formula, computed)


@register("lem-3.3+thm-3.4-reg", "v <= reg(S/I) for mixed cases 1-5, reg from closed forms",
          {"case": [1, 2, 3, 4, 5], "n": [1, 2, 3, 4], "m": [1, 2, 3, 4]})
def _thm_3_4(inst, ranges):
    if inst is None:
        return _mixed_instances(ranges, (1, 2, 3, 4, 5))
    I = _mixed_ideal(inst)
    reg = F.mixed_reg(inst["case"], **_formula_params(inst))
    return report("lem-3.3+thm-3.4-reg", inst, [None, reg - 1], {"stable-set": vnum(I, "stable-set")},
                  _join(f"reg(I)={reg}", REG_NOTE))


# -- graph powers

def _graph_instances(ranges, extra=()):
    for family in ranges["family"]:
        minimum = GRAPH_FAMILIES.get(family)
        if minimum is None:
            raise InvalidInput(f"unknown graph family {family!r}")
        for n in _sizes(ranges["n"], minimum):
            if extra:
                for combo in cartesian(*(ranges[name] for name in extra)):
                    yield {"family": family, "n": n, **dict(zip(extra, combo))}
            else:
                yield {"family": family, "n": n}


@lru_cache(maxsize=None)
def _v_graph_power(family: str, n: int, k: int) -> int:
    return vnum(edge_ideal(graph_power(family_graph(family, n), k)), "stable-set")


@register("thm-4.1-monotone", "v(I(G^k)) is non-increasing in k and equals 1 at k = d - 1",
          {"family": ["path", "cycle"], "n": [4, 5, 6, 7, 8]})
def _thm_4_1(inst, ranges):
    if inst is None:
        return (dict(i, k=k) for i in _graph_instances(ranges) for k in range(1, i["n"]))
    family, n, k = inst["family"], inst["n"], inst["k"]
    v = _v_graph_power(family, n, k)
    if k == n - 1:
        formula = 1
    else:
        formula = [_v_graph_power(family, n, k + 1), _v_graph_power(family, n, k - 1) if k > 1 else None]
    return report("thm-4.1-monotone", inst, formula, {"stable-set": v},
                  "bounds are the neighbouring powers' computed v")


@register("thm-4.2-path-square", "v(I(L_n^2)) closed form (mod 6)", {"n": list(range(4, 21))})
def _thm_4_2(inst, ranges):
    if inst is None:
        return ({"n": n} for n in _sizes(ranges["n"], 2))
    n = inst["n"]
    I = edge_ideal(graph_power(path(n), 2))
    computed = {"stable-set": vnum(I, "stable-set"), "witness": vnum(I, "witness")}
    alts, text = _bracket_notes(F.path_square_v, (n,), computed["stable-set"])
    return report("thm-4.2-path-square", inst, F.path_square_v(n), computed, text, alts)


@register("lem-4.3-endpoints", "no minimum member of A(L_n^2) holds both endpoints",
          {"n": list(range(4, 15))})
def _lem_4_3(inst, ranges):
    if inst is None:
        return ({"n": n} for n in _sizes(ranges["n"], 2))
    n = inst["n"]
    sets = min_cover_stable_sets(graph_power(path(n), 2))
    both = sum(1 for A in sets if 0 in A and n - 1 in A)
    return report("lem-4.3-endpoints", inst, 0, {"stable-set": both},
                  f"{len(sets)} minimum sets; count shown is those holding x1 and x{n}")


@register("prop-4.4-cycle-offset", "v(I(C_n^2)) = v(I(L_{n-5}^2)) + 1", {"n": list(range(5, 15))})
def _prop_4_4(inst, ranges):
    if inst is None:
        return ({"n": n} for n in _sizes(ranges["n"], 3))
    n = inst["n"]
    v_cycle = vnum(edge_ideal(graph_power(cycle(n), 2)), "stable-set")
    if n - 5 < 2:
        return report("prop-4.4-cycle-offset", inst, None, {"stable-set": v_cycle},
                      f"L_{n - 5} has no edges, so the right side is undefined", status=INAPPLICABLE)
    v_path = vnum(edge_ideal(graph_power(path(n - 5), 2)), "stable-set")
    note = "" if n >= 7 else "below the stated range n >= 7"
    return report("prop-4.4-cycle-offset", inst, v_path + 1, {"stable-set": v_cycle}, note)


@register("cor-4.5-cycle-square", "v(I(C_n^2)) closed form (mod 6)", {"n": list(range(7, 15))})
def _cor_4_5(inst, ranges):
    if inst is None:
        return ({"n": n} for n in _sizes(ranges["n"], 3))
    n = inst["n"]
    I = edge_ideal(graph_power(cycle(n), 2))
    computed = {"stable-set": vnum(I, "stable-set"), "witness": vnum(I, "witness")}
    if n < 7:
        return report("cor-4.5-cycle-square", inst, None, computed, "formula stated for n >= 7",
                      status=INAPPLICABLE)
    alts, text = _bracket_notes(F.cycle_square_v, (n,), computed["stable-set"])
    return report("cor-4.5-cycle-square", inst, F.cycle_square_v(n), computed, text, alts)


# -- linear resolutions and powers

LINEAR_FAMILIES = ("complete", "veronese", "maxpow", "bipartite")


def _linear_ideal(family: str, n: int, d: int) -> MonomialIdeal | None:
    """Curated ideals with linear powers, or None when (family, n, d) is not one of them.

    complete: I(K_n), d = 2.  veronese: square-free Veronese I_d in n variables,
    d < n.  maxpow: (x1..xn)^d.  bipartite: I(K_{a,b}) with a + b = n, d = 2.
    """
    if family in ("complete", "bipartite"):
        return _edge(family, n) if d == 2 and n >= 2 else None
    if family == "veronese":
        return mixed_ideal(F.mixed_spec(1, n, 0, q=d)) if 1 <= d < n else None
    if family == "maxpow":
        return power(maximal_ideal(VarSet.standard(n)), d) if d >= 1 and n >= 1 else None
    raise InvalidInput(f"unknown family {family!r}; expected one of {LINEAR_FAMILIES}")


def _linear_instances(ranges, with_k=False):
    for family in ranges["family"]:
        for n, d in cartesian(ranges["n"], ranges["d"]):
            if _linear_ideal(family, n, d) is None:
                continue
            if with_k:
                for k in ranges["k"]:
                    yield {"family": family, "n": n, "d": d, "k": k}
            else:
                yield {"family": family, "n": n, "d": d}


@register("thm-5.3-linear-res", "v(I) = d - 1 for curated d-linear ideals",
          {"family": list(LINEAR_FAMILIES), "n": [2, 3, 4, 5], "d": [1, 2, 3]})
def _thm_5_3(inst, ranges):
    if inst is None:
        return _linear_instances(ranges)
    I = _linear_ideal(inst["family"], inst["n"], inst["d"])
    computed = {"colon": vnum(I, "colon"), "witness": vnum(I, "witness")}
    return report("thm-5.3-linear-res", inst, F.linear_powers_v(inst["d"], 1), computed,
                  "linear resolution assumed for the curated family, not checked")


@register("cor-5.2-socle-degree", "least degree of (I^k : m) outside I^k is kd - 1",
          {"family": ["complete", "maxpow"], "n": [3, 4, 5], "d": [1, 2, 3], "k": [1, 2, 3]})
def _cor_5_2(inst, ranges):
    if inst is None:
        return _linear_instances(ranges, with_k=True)
    I = _pow(_linear_ideal(inst["family"], inst["n"], inst["d"]), inst["k"])
    deg = min_degree_outside(colon(I, maximal_ideal(I.vars)), I)
    formula = inst["k"] * inst["d"] - 1
    if deg is None:
        return report("cor-5.2-socle-degree", inst, formula, {}, "(I^k : m) = I^k, so m is not associated",
                      status=INAPPLICABLE)
    return report("cor-5.2-socle-degree", inst, formula, {"colon": deg})


@register("thm-5.4-linear-powers", "v(I^k) = alpha(I) k - 1 for curated ideals with linear powers",
          {"family": list(LINEAR_FAMILIES), "n": [2, 3, 4], "d": [1, 2, 3], "k": [1, 2, 3]})
def _thm_5_4(inst, ranges):
    if inst is None:
        return _linear_instances(ranges, with_k=True)
    I = _linear_ideal(inst["family"], inst["n"], inst["d"])
    Ik = _pow(I, inst["k"])
    embedded = associated_primes(Ik).has_embedded
    return report("thm-5.4-linear-powers", inst, alpha(I) * inst["k"] - 1, {"witness": vnum(Ik, "witness")},
                  "I^k has embedded primes (outside the hypothesis)" if embedded else "")


@register("cor-bipartite-2k-1", "v(I^k) = 2k - 1 for complete bipartite graphs",
          {"n": [2, 3, 4, 5, 6], "k": [1, 2, 3]})
def _cor_bipartite(inst, ranges):
    if inst is None:
        return ({"n": n, "k": k} for n in _sizes(ranges["n"], 2) for k in ranges["k"])
    I = _pow(_edge("bipartite", inst["n"]), inst["k"])
    return report("cor-bipartite-2k-1", inst, 2 * inst["k"] - 1, {"witness": vnum(I, "witness")},
                  f"graph {graph_label('bipartite', inst['n'])}")


# -- ordinary and square-free powers

@lru_cache(maxsize=None)
def _v_power(family: str, n: int, k: int) -> int:
    return vnum(_pow(_edge(family, n), k), "witness")


@register("thm-5.6-sandwich", "v(I^k) + 1 <= v(I^{k+1}) <= v(I^k) + 2",
          {"family": ["path", "cycle", "complete"], "n": [4, 5, 6], "k": [1, 2]})
def _thm_5_6(inst, ranges):
    if inst is None:
        return _graph_instances(ranges, ("k",))
    family, n, k = inst["family"], inst["n"], inst["k"]
    vk = _v_power(family, n, k)
    return report("thm-5.6-sandwich", inst, [vk + 1, vk + 2], {"witness": _v_power(family, n, k + 1)},
                  f"v(I^k)={vk}")


@register("thm-5.7-asymptotic", "v(I^{k+1}) - v(I^k) settles at d",
          {"family": ["path", "cycle", "complete"], "n": [4, 5, 6], "k": [1, 2, 3, 4]})
def _thm_5_7(inst, ranges):
    if inst is None:
        ks = sorted(ranges["k"])
        window = ks[len(ks) // 2:]
        return (dict(i, window=window[0]) for i in _graph_instances(ranges, ("k",)))
    family, n, k = inst["family"], inst["n"], inst["k"]
    d = alpha(_edge(family, n))
    step = _v_power(family, n, k + 1) - _v_power(family, n, k)
    if k < inst["window"]:
        return report("thm-5.7-asymptotic", inst, d, {"witness": step},
                      "before the probed asymptotic window", status=INAPPLICABLE)
    return report("thm-5.7-asymptotic", inst, d, {"witness": step},
                  "increment v(I^{k+1}) - v(I^k); evidence only, not a proof of eventual behaviour")


@lru_cache(maxsize=None)
def _v_sqpow(family: str, n: int, k: int, seed: int = 0) -> int:
    return vnum(squarefree_power(_edge(family, n, seed), k), "stable-set")


def _path_k_instances(ranges):
    for n in _sizes(ranges["n"], 2):
        for k in ranges["k"]:
            if 1 <= k <= n // 2:
                yield {"n": n, "k": k}


@register("thm-5.9-sqfree-path", "v(I(L_n)^[k]) closed form", {"n": [4, 5, 6, 7, 8], "k": [1, 2, 3, 4]})
def _thm_5_9(inst, ranges):
    if inst is None:
        return _path_k_instances(ranges)
    n, k = inst["n"], inst["k"]
    J = squarefree_power(_edge("path", n), k)
    computed = {"stable-set": _v_sqpow("path", n, k), "witness": vnum(J, "witness")}
    alts, text = _bracket_notes(F.sqfree_power_path_v, (n, k), computed["stable-set"])
    return report("thm-5.9-sqfree-path", inst, F.sqfree_power_path_v(n, k), computed, text, alts)


@register("conj-5.10-sqfree-vs-power", "v(I(L_n)^k) = v(I(L_n)^[k]) (evidence)",
          {"n": [4, 5, 6, 7, 8], "k": [1, 2, 3]})
def _conj_5_10(inst, ranges):
    if inst is None:
        return _path_k_instances(ranges)
    n, k = inst["n"], inst["k"]
    return report("conj-5.10-sqfree-vs-power", inst, _v_sqpow("path", n, k),
                  {"witness": _v_power("path", n, k)}, "formula column is v(I^[k]); evidence only")


def _forest_instances(ranges):
    for family in ranges["family"]:
        if family not in ("path", "tree"):
            raise InvalidInput("forest checks take family=path|tree")
        seeds = ranges["seed"] if family == "tree" else [0]
        for n in _sizes(ranges["n"], 2):
            for seed in seeds:
                G = family_graph(family, n, seed)
                top = matching_number(G)
                for k in ranges["k"]:
                    if 1 <= k <= top:
                        inst = {"family": family, "n": n, "k": k}
                        if family == "tree":
                            inst["seed"] = seed
                        yield inst


@register("prop-5.11-forest", "v(I(G)^[k]) = 2k - 1 for forests",
          {"family": ["path", "tree"], "n": [4, 6, 8], "k": [1, 2, 3], "seed": [0, 1]}, known_issue=True)
def _prop_5_11(inst, ranges):
    if inst is None:
        return _forest_instances(ranges)
    v = _v_sqpow(inst["family"], inst["n"], inst["k"], inst.get("seed", 0))
    graph = family_graph(inst["family"], inst["n"], inst.get("seed", 0))
    return report("prop-5.11-forest", inst, F.forest_sqfree_v(inst["k"]), {"stable-set": v},
                  f"graph {graph.render()}")


@register("lem-2.23-forest-recursion", "I(G)^[k] = I(G_1)^[k] + x_{n-1} x_n I(G_2)^[k-1]",
          {"family": ["path", "tree"], "n": [4, 6, 8, 10], "k": [1, 2, 3], "seed": list(range(10))})
def _lem_2_23(inst, ranges):
    if inst is None:
        return _forest_instances(ranges)
    G = family_graph(inst["family"], inst["n"], inst.get("seed", 0))
    lhs = squarefree_power(edge_ideal(G), inst["k"])
    rhs = forest_recursion_rhs(G, inst["k"])
    return report("lem-2.23-forest-recursion", inst, 1, {"ideal-equality": int(lhs == rhs)},
                  f"graph {G.render()}")


# -- symbolic powers

@lru_cache(maxsize=None)
def _v_sym(family: str, n: int, k: int) -> int:
    return vnum(_sympow(_edge(family, n), k), "witness")


@register("prop-5.12-symbolic-colon", "(I^(k) : p) = meet of p_i^k (p_i != p) and p^(k-1)",
          {"family": ["complete", "path", "cycle"], "n": [3, 4, 5], "k": [1, 2, 3]})
def _prop_5_12(inst, ranges):
    if inst is None:
        return _graph_instances(ranges, ("k",))
    I = _edge(inst["family"], inst["n"])
    k = inst["k"]
    primes = minimal_primes_squarefree(I)
    lhs_base = _sympow(I, k)
    holds = []
    for p in primes:
        parts = [prime_power(q, k) for q in primes if q != p]
        if k >= 2:
            parts.append(prime_power(p, k - 1))
        rhs = intersect_all(parts) if parts else MonomialIdeal(I.vars, [(0,) * I.nvars])
        holds.append(colon(lhs_base, p.ideal()) == rhs)
    failing = [p.render() for p, ok in zip(primes, holds) if not ok]
    return report("prop-5.12-symbolic-colon", inst, len(primes), {"colon": sum(holds)},
                  ("fails at " + " ".join(failing)) if failing else "count of minimal primes where the equation holds")


@register("thm-5.13-symbolic-sandwich", "v(I^(k)) + 1 <= v(I^(k+1)) <= v(I^(k)) + m",
          {"family": ["complete", "path", "cycle"], "n": [3, 4], "k": [1, 2, 3]})
def _thm_5_13(inst, ranges):
    if inst is None:
        return _graph_instances(ranges, ("k",))
    family, n, k = inst["family"], inst["n"], inst["k"]
    m = len(minimal_primes_squarefree(_edge(family, n)))
    vk = _v_sym(family, n, k)
    return report("thm-5.13-symbolic-sandwich", inst, [vk + 1, vk + m], {"witness": _v_sym(family, n, k + 1)},
                  f"v(I^(k))={vk}; m={m} minimal primes")


@register("thm-5.14-complete-symbolic", "v(I(K_n)^(k)) closed form",
          {"n": [3, 4, 5], "k": [1, 2, 3, 4]})
def _thm_5_14(inst, ranges):
    if inst is None:
        return ({"n": n, "k": k} for n in _sizes(ranges["n"], 2) for k in ranges["k"] if k >= 1)
    n, k = inst["n"], inst["k"]
    v = _v_sym("complete", n, k)
    alts, text = _bracket_notes(F.complete_symbolic_v, (n, k), v)
    formula = F.complete_symbolic_v(n, k)
    rep = report("thm-5.14-complete-symbolic", inst, formula, {"witness": v}, text, alts)
    if k == 1 and rep.status == DISAGREE:
        # the closed form gives 2 at k = 1 while v(I(K_n)) = 1
        rep = CheckReport(rep.check_id, rep.instance, rep.formula, rep.computed, rep.status,
                          _join("known issue: k = 1 is outside the formula's working range", rep.notes),
                          True, rep.alternatives)
    return rep


# -- structural identities

def _matching_instances(ranges):
    for inst in _graph_instances(ranges, ("s",)):
        G = family_graph(inst["family"], inst["n"])
        if 1 <= inst["s"] <= matching_number(G) - 1:
            yield inst


@register("lem-2.9-even-connection", "I(H) = (I(G)^[s+1] : mu) for every s-matching mu",
          {"family": ["path", "cycle"], "n": [5, 6], "s": [1, 2]})
def _lem_2_9(inst, ranges):
    if inst is None:
        return _matching_instances(ranges)
    G = family_graph(inst["family"], inst["n"])
    s = inst["s"]
    target = squarefree_power(edge_ideal(G), s + 1)
    mus = matchings(G, s)
    good = 0
    for mu in mus:
        f = Monomial.from_support(G.n, set().union(*mu))
        good += edge_ideal(even_connection_graph(G, mu)) == colon(target, f)
    return report("lem-2.9-even-connection", inst, len(mus), {"even-connection": good},
                  "count of s-matchings whose even-connection graph reproduces the colon")


def random_monomial_ideal(seed: int, index: int, max_vars: int = 4, max_exp: int = 3) -> MonomialIdeal:
    """Seeded random proper monomial ideal with at most ``max_vars`` variables."""
    rng = Random(f"{seed}:{index}")
    n = rng.randint(1, max_vars)
    while True:
        gens = []
        for _ in range(rng.randint(1, 4)):
            e = tuple(rng.randint(0, max_exp) for _ in range(n))
            if any(e):
                gens.append(e)
        if gens:
            return MonomialIdeal(VarSet.standard(n), gens)


@register("lem-2.12-polarization", "v(I(pol)) <= v(I), with equality when no prime is embedded",
          {"seed": [0], "i": list(range(1, 21))})
def _lem_2_12(inst, ranges):
    if inst is None:
        return ({"seed": s, "i": i} for s in ranges["seed"] for i in ranges["i"])
    I = random_monomial_ideal(inst["seed"], inst["i"])
    chk = polarization_vnumber_check(I)
    formula = [None, chk.v_orig] if chk.has_embedded else chk.v_orig
    return report("lem-2.12-polarization", inst, formula, {"witness": chk.v_pol},
                  f"I = {I.render()}; " + ("embedded prime present" if chk.has_embedded else "no embedded prime"))


# ---- running ------------------------------------------------------------------

def resolve(check_id: str) -> Check:
    cid = ALIASES.get(check_id, check_id)
    if cid not in REGISTRY:
        raise InvalidInput(f"unknown check id {check_id!r}; known: {', '.join(sorted(REGISTRY))}")
    return REGISTRY[cid]


def instances_for(check_id: str, param_ranges: dict | str | None = None) -> list[dict]:
    chk = resolve(check_id)
    given = parse_ranges(param_ranges) if isinstance(param_ranges, str) or param_ranges is None else dict(param_ranges)
    unknown = set(given) - set(chk.defaults)
    if unknown:
        raise InvalidInput(f"{chk.check_id} takes parameters {sorted(chk.defaults)}, not {sorted(unknown)}")
    ranges = {**chk.defaults, **given}
    return list(chk.instances(ranges))


def _evaluate(check_id: str, inst: dict) -> CheckReport:
    return REGISTRY[check_id].evaluate(inst)


def threads_from_env() -> int:
    raw = os.environ.get("VNUM_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        raise InvalidInput(f"VNUM_THREADS must be a positive integer, got {raw!r}") from None


def run_check(check_id: str, param_ranges: dict | str | None = None, threads: int | None = None) -> list[CheckReport]:
    """Reports for every instance of the range, in instance order.

    With ``threads > 1`` instances are evaluated in worker processes; the
    output order (and content) is the same as the sequential run.
    """
    chk = resolve(check_id)
    insts = instances_for(chk.check_id, param_ranges)
    threads = threads_from_env() if threads is None else threads
    if threads <= 1 or len(insts) < 2:
        return [chk.evaluate(i) for i in insts]
    with ProcessPoolExecutor(max_workers=threads, initializer=set_guards,
                             initargs=(_GUARDS["max_subsets"], _GUARDS["max_witness_degree"])) as pool:
        return list(pool.map(_evaluate, [chk.check_id] * len(insts), insts))


def run_suite(threads: int | None = None) -> list[CheckReport]:
    out = []
    for cid in sorted(REGISTRY):
        out.extend(run_check(cid, None, threads))
    return out
