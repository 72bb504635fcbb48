"""Finite algebras, compatible relations, and the loop-condition decision.

The decision procedure realizes the free algebra on the condition's variables
inside A^(A^n): elements are dense tables A^n -> A generated from the n
projections.  The condition holds iff the subpower of pair-tables generated
by the condition graph's edges reaches a diagonal element; provenance of the
closure is replayed to extract a witness term.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Callable, Union

from .errors import BadTerm, ExponentCap, UniverseMismatch
from .identity import LoopCondition, condition_graph
from .ppdef import Relation

#: Default cap on free-algebra table entries (size ** variables).
DEFAULT_MAX_ENTRIES = 4096

#: Default cap on elements generated by a closure.
DEFAULT_MAX_ELEMENTS = 10**6


@dataclass(frozen=True)
class Operation:
    """A finitary operation as a dense table, last argument varying fastest.

    The table index of (x1, .., xm) is sum of x_i * size^(m-i).
    """

    name: str
    arity: int
    table: tuple[int, ...]


@dataclass(frozen=True)
class FiniteAlgebra:
    size: int
    operations: tuple[Operation, ...]

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("universe must be nonempty")
        names = set()
        for op in self.operations:
            if op.arity < 0:
                raise ValueError(f"operation {op.name} has negative arity")
            if len(op.table) != self.size ** op.arity:
                raise ValueError(f"operation {op.name} table has wrong length")
            if any(not 0 <= x < self.size for x in op.table):
                raise ValueError(f"operation {op.name} table leaves the universe")
            if op.name in names:
                raise ValueError(f"duplicate operation name {op.name}")
            names.add(op.name)

    def operation(self, name: str) -> Operation:
        for op in self.operations:
            if op.name == name:
                return op
        raise KeyError(name)

    def apply(self, op: Operation, args: tuple[int, ...]) -> int:
        idx = 0
        for x in args:
            idx = idx * self.size + x
        return op.table[idx]


def algebra_to_json(a: FiniteAlgebra) -> str:
    return json.dumps({
        "size": a.size,
        "operations": [{"name": op.name, "arity": op.arity, "table": list(op.table)}
                       for op in a.operations],
    }, sort_keys=True)


def algebra_from_json(text: str) -> FiniteAlgebra:
    data = json.loads(text)
    ops = tuple(Operation(str(o["name"]), int(o["arity"]), tuple(o["table"]))
                for o in data["operations"])
    return FiniteAlgebra(int(data["size"]), ops)


def mod_affine_algebra(m: int) -> FiniteAlgebra:
    """(Z_m, m(x,y,z) = x + y - z mod m); for m = 2 this is x + y + z."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    table = tuple((x + y - z) % m
                  for x in range(m) for y in range(m) for z in range(m))
    return FiniteAlgebra(m, (Operation("m", 3, table),))


def projection_algebra(size: int = 2) -> FiniteAlgebra:
    """Universe of the given size with the single binary first projection."""
    table = tuple(a for a in range(size) for _ in range(size))
    return FiniteAlgebra(size, (Operation("p1", 2, table),))


# ---------------------------------------------------------------------------
# terms

@dataclass(frozen=True)
class Var:
    """Leaf referencing an argument position of the condition's term symbol."""
    index: int


@dataclass(frozen=True)
class App:
    op: str
    args: tuple["Term", ...]


Term = Union[Var, App]


def term_to_string(t: Term) -> str:
    if isinstance(t, Var):
        return f"x{t.index + 1}"
    return f"{t.op}({','.join(term_to_string(s) for s in t.args)})"


def _validate_term(a: FiniteAlgebra, t: Term, arity: int) -> None:
    if isinstance(t, Var):
        if not 0 <= t.index < arity:
            raise BadTerm(f"leaf x{t.index + 1} outside arity {arity}")
        return
    try:
        op = a.operation(t.op)
    except KeyError:
        raise BadTerm(f"unknown operation {t.op!r}") from None
    if len(t.args) != op.arity:
        raise BadTerm(f"{t.op} expects {op.arity} arguments, got {len(t.args)}")
    for s in t.args:
        _validate_term(a, s, arity)


def evaluate_term(a: FiniteAlgebra, t: Term, args: tuple[int, ...]) -> int:
    if isinstance(t, Var):
        return args[t.index]
    op = a.operation(t.op)
    return a.apply(op, tuple(evaluate_term(a, s, args) for s in t.args))


def verify_witness(a: FiniteAlgebra, c: LoopCondition, t: Term) -> bool:
    """Check t(u1..un) = t(v1..vn) as functions of the condition's variables.

    Compares the two derived tables row by row over all size^|variables|
    assignments.  Raises BadTerm for structurally invalid terms.
    """
    _validate_term(a, t, c.arity)
    index = {name: i for i, name in enumerate(c.variables)}
    lpat = [index[u] for u in c.lhs]
    rpat = [index[v] for v in c.rhs]
    for asg in product(range(a.size), repeat=len(c.variables)):
        largs = tuple(asg[i] for i in lpat)
        rargs = tuple(asg[i] for i in rpat)
        if evaluate_term(a, t, largs) != evaluate_term(a, t, rargs):
            return False
    return True


# ---------------------------------------------------------------------------
# compatibility and subpower closure

def is_compatible(a: FiniteAlgebra, r: Relation) -> bool:
    """True iff r is closed under every operation applied coordinatewise."""
    if r.universe_size != a.size:
        raise UniverseMismatch(
            f"relation over {r.universe_size} elements, algebra over {a.size}")
    tuples = r.sorted_tuples()
    members = r.tuples
    for op in a.operations:
        for args in product(tuples, repeat=op.arity):
            out = tuple(a.apply(op, tuple(t[j] for t in args))
                        for j in range(r.arity))
            if out not in members:
                return False
    return True


class _CapHit(Exception):
    pass


class _Found(Exception):
    pass


@dataclass
class _Closure:
    items: list
    provenance: dict
    complete: bool
    found: object


def _close(seeds, ops, cap: int, stop: Callable | None = None) -> _Closure:
    """Worklist closure with provenance.

    seeds: iterable of (item, provenance); ops: list of (name, arity, fn)
    where fn maps an argument tuple of items to an item.  Enumerates each
    argument combination exactly once (at the step of its newest element).
    Stops early when `stop` accepts a generated item.
    """
    items: list = []
    index: dict = {}
    prov: dict = {}
    found = None

    def add(item, p):
        nonlocal found
        if item in index:
            return
        index[item] = len(items)
        items.append(item)
        prov[item] = p
        if stop is not None and stop(item):
            found = item
            raise _Found
        if len(items) > cap:
            raise _CapHit

    try:
        for item, p in seeds:
            add(item, p)
        for name, arity, fn in ops:
            if arity == 0:
                add(fn(()), (name, ()))
        t = 0
        while t < len(items):
            for name, arity, fn in ops:
                if arity == 0:
                    continue
                # combinations over items[0..t] containing index t, grouped by
                # the position of the first occurrence of t
                for p in range(arity):
                    pools = [range(t)] * p + [range(t, t + 1)] + \
                            [range(t + 1)] * (arity - 1 - p)
                    for combo in product(*pools):
                        args = tuple(items[i] for i in combo)
                        add(fn(args), (name, args))
            t += 1
    except _Found:
        return _Closure(items, prov, False, found)
    except _CapHit:
        return _Closure(items, prov, False, None)
    return _Closure(items, prov, True, None)


@dataclass
class SubpowerResult:
    """Closure of generators inside A^k, with provenance for term extraction.

    complete=False means the element cap was hit and `relation` only holds
    the elements generated so far.
    """

    relation: Relation
    provenance: dict[tuple[int, ...], tuple]
    complete: bool
    elements_generated: int


def generate_subpower(a: FiniteAlgebra, k: int, generators,
                      cap: int = DEFAULT_MAX_ELEMENTS) -> SubpowerResult:
    """Least subset of A^k containing the generators and closed under all
    operations coordinatewise."""
    gens = [tuple(g) for g in generators]
    for g in gens:
        if len(g) != k or any(not 0 <= x < a.size for x in g):
            raise ValueError(f"generator {g} is not a valid {k}-tuple")
    seeds = [(g, ("gen", i)) for i, g in enumerate(gens)]

    def coordinatewise(op: Operation):
        def fn(args):
            return tuple(a.apply(op, tuple(t[j] for t in args)) for j in range(k))
        return fn

    ops = [(op.name, op.arity, coordinatewise(op)) for op in a.operations]
    res = _close(seeds, ops, cap)
    return SubpowerResult(Relation(a.size, k, frozenset(res.items)),
                          res.provenance, res.complete, len(res.items))


# ---------------------------------------------------------------------------
# the decision procedure

@dataclass(frozen=True)
class Satisfied:
    term: Term


@dataclass(frozen=True)
class NotSatisfied:
    pass


@dataclass(frozen=True)
class ResourceExceeded:
    elements_generated: int


Decision = Union[Satisfied, NotSatisfied, ResourceExceeded]


def decision_to_json_dict(d: Decision) -> dict:
    if isinstance(d, Satisfied):
        return {"decision": "Satisfied", "witness": term_to_string(d.term)}
    if isinstance(d, NotSatisfied):
        return {"decision": "NotSatisfied"}
    return {"decision": "ResourceExceeded",
            "elements_generated": d.elements_generated}


def _term_from_provenance(item, provenance) -> Term:
    cache: dict = {}

    def build(x) -> Term:
        if x in cache:
            return cache[x]
        tag, payload = provenance[x]
        if tag == "pos":
            term: Term = Var(payload)
        else:
            term = App(tag, tuple(build(parent) for parent in payload))
        cache[x] = term
        return term

    return build(item)


def satisfies_condition(a: FiniteAlgebra, c: LoopCondition, *,
                        max_entries: int = DEFAULT_MAX_ENTRIES,
                        max_elements: int = DEFAULT_MAX_ELEMENTS) -> Decision:
    """Decide whether the algebra has a term satisfying the identity.

    Generates the subpower of pair-tables seeded with (proj_u, proj_v) for
    each deduplicated condition-graph edge; Satisfied iff a pair with equal
    coordinates appears.  The witness term is rebuilt from provenance and
    re-verified before being returned.  Honest resource outcomes: raises
    ExponentCap if size^|variables| exceeds max_entries, and returns
    ResourceExceeded when the element cap is hit.
    """
    n = len(c.variables)
    if a.size ** n > max_entries:
        raise ExponentCap(
            f"free-algebra tables need {a.size ** n} entries, cap is {max_entries}")
    assignments = list(product(range(a.size), repeat=n))
    projections = [tuple(asg[j] for asg in assignments) for j in range(n)]

    tables: list[tuple[int, ...]] = []
    table_id: dict[tuple[int, ...], int] = {}

    def intern(table: tuple[int, ...]) -> int:
        got = table_id.get(table)
        if got is not None:
            return got
        table_id[table] = len(tables)
        tables.append(table)
        return len(tables) - 1

    proj_ids = [intern(p) for p in projections]
    rows = range(len(assignments))
    compose_memo: dict[tuple, int] = {}
    size = a.size

    def compose(op_idx: int, op: Operation, ids: tuple[int, ...]) -> int:
        key = (op_idx, *ids)
        got = compose_memo.get(key)
        if got is not None:
            return got
        cols = [tables[i] for i in ids]
        table = op.table
        if op.arity == 0:
            out = (table[0],) * len(assignments)
        else:
            values = []
            for r in rows:
                idx = 0
                for col in cols:
                    idx = idx * size + col[r]
                values.append(table[idx])
            out = tuple(values)
        result = intern(out)
        compose_memo[key] = result
        return result

    def pairwise(op_idx: int, op: Operation):
        def fn(args):
            left = compose(op_idx, op, tuple(p[0] for p in args))
            right = compose(op_idx, op, tuple(p[1] for p in args))
            return (left, right)
        return fn

    ops = [(op.name, op.arity, pairwise(i, op))
           for i, op in enumerate(a.operations)]

    # one generator per deduplicated edge, tagged with its first position
    index = {name: i for i, name in enumerate(c.variables)}
    seeds = []
    seen_edges = set()
    for pos in range(c.arity):
        edge = (index[c.lhs[pos]], index[c.rhs[pos]])
        if edge in seen_edges:
            continue
        seen_edges.add(edge)
        seeds.append(((proj_ids[edge[0]], proj_ids[edge[1]]), ("pos", pos)))
    assert seen_edges == set(condition_graph(c).edges)

    res = _close(seeds, ops, max_elements, stop=lambda pair: pair[0] == pair[1])
    if res.found is not None:
        term = _term_from_provenance(res.found, res.provenance)
        if not verify_witness(a, c, term):
            raise AssertionError("extracted witness failed verification")
        return Satisfied(term)
    if res.complete:
        return NotSatisfied()
    return ResourceExceeded(len(res.items))


# ---------------------------------------------------------------------------
# affine fast path

def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def _solve_mod_prime(rows: list[list[int]], rhs: list[int], ncols: int,
                     p: int) -> tuple[int, ...] | None:
    """Solve rows * x = rhs over Z_p by reduced row echelon form.

    Deterministic: pivots in ascending column order, free variables set to 0.
    """
    aug = [[x % p for x in row] + [b % p] for row, b in zip(rows, rhs)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(aug)) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = pow(aug[r][col], p - 2, p)
        aug[r] = [(x * inv) % p for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
    for i in range(r, len(aug)):
        if aug[i][-1]:
            return None
    x = [0] * ncols
    for row_i, col in pivots:
        x[col] = aug[row_i][-1]
    return tuple(x)


def affine_satisfies(m: int, c: LoopCondition) -> tuple[int, ...] | None:
    """Coefficients of an affine witness over (Z_m, x + y - z), or None.

    The term clone of (Z_m, x+y-z) is exactly the maps sum(c_i x_i) with
    sum(c_i) = 1 (mod m), so the condition holds there iff some such vector
    balances each variable's left and right occurrences.  Prime moduli are
    solved by elimination, composite ones by exhaustive search.
    """
    if m < 2:
        raise ValueError("modulus must be at least 2")
    rows = []
    rhs = []
    for w in c.variables:
        row = [0] * c.arity
        for i in range(c.arity):
            if c.lhs[i] == w:
                row[i] += 1
            if c.rhs[i] == w:
                row[i] -= 1
        rows.append(row)
        rhs.append(0)
    rows.append([1] * c.arity)
    rhs.append(1)
    if _is_prime(m):
        return _solve_mod_prime(rows, rhs, c.arity, m)
    if m ** c.arity > 10**7:
        raise ValueError("composite modulus too large for exhaustive search")
    for cand in product(range(m), repeat=c.arity):
        if all(sum(a * x for a, x in zip(row, cand)) % m == b % m
               for row, b in zip(rows, rhs)):
            return cand
    return None


def affine_remark_audit() -> dict:
    """Audit the often-quoted claim that (Z_3, x+y-z) satisfies the triangle
    condition but not commutativity.

    Computes both the affine oracle and the closure decision for both
    identities over Z_3, flags a discrepancy when commutativity turns out
    satisfiable (it does: 2x + 2y = m(x,x,y)), and reports the two-element
    algebra (Z_2, x+y+z) as the separation that does work.
    """
    from .identity import COMMUTATIVITY_IDENTITY, SIGGERS_IDENTITY, parse_condition

    commutativity = parse_condition(COMMUTATIVITY_IDENTITY)
    triangle = parse_condition(SIGGERS_IDENTITY)

    def side(m: int) -> dict:
        alg = mod_affine_algebra(m)
        aff_c = affine_satisfies(m, commutativity)
        aff_t = affine_satisfies(m, triangle)
        dec_c = satisfies_condition(alg, commutativity)
        dec_t = satisfies_condition(alg, triangle)
        return {
            "algebra": f"(Z_{m}, x+y-z)",
            "commutativity_coefficients": list(aff_c) if aff_c else None,
            "commutativity_decision": decision_to_json_dict(dec_c),
            "triangle_coefficients": list(aff_t) if aff_t else None,
            "triangle_decision": decision_to_json_dict(dec_t),
            "oracles_agree": (aff_c is not None) == isinstance(dec_c, Satisfied)
            and (aff_t is not None) == isinstance(dec_t, Satisfied),
            "separates_classes": aff_t is not None and aff_c is None,
        }

    mod3 = side(3)
    mod2 = side(2)
    discrepancy = not mod3["separates_classes"]
    return {
        "claim": "(Z_3, x+y-z) satisfies the triangle condition but not commutativity",
        "mod3": mod3,
        "mod2": mod2,
        "discrepancy": discrepancy,
        "note": ("The claimed separating example fails: over Z_3 the term "
                 "m(x,x,y) = 2x+2y is commutative, so (Z_3, x+y-z) satisfies "
                 "both conditions. (Z_2, x+y+z) separates the classes: it "
                 "satisfies the triangle condition but no commutative term "
                 "exists since 2c = 1 has no solution mod 2.")
        if discrepancy else
        "The claimed separating example checks out.",
    }
