"""Exhaustive law suites, as run by ``multiplate laws``.

Each suite returns a list of :class:`LawResult`.  ``broken=True`` adds a
deliberately unlawful fixture that is claimed lawful, so the suite fails
with a printed witness.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from typing import Any, Callable, Iterable

from . import cartesian as cs
from .candidates import (
    A2,
    B3,
    BIPLATES,
    FIELD_B,
    IGNORING_LENS,
    LAWFUL_BIPLATE_NAMES,
    LAWFUL_LENS_NAMES,
    RECORDS,
    TUPLES,
    biplate_candidates,
    lens_biplate_candidates,
    lens_candidates,
)
from .effects import (
    IDENTITY,
    LIST,
    MAX,
    OPTION,
    SUM,
    ConstContext,
    Just,
    NOTHING,
    lift_w,
)
from .finite import LawChecker, Table, Verdict, all_tables
from .minilang import EAdd, EInt, EVar, MiniPlate, SBlock, V, decode_ast, encode_ast, sort_of
from .minilang import oracles
from .minilang.enumerate import universe as term_universe
from .minilang.fixtures import P0
from .minilang.passes import (
    CONSTFOLD,
    RENAME,
    children,
    collect_vars_fold,
    constfold_pass,
    count_nodes_fold,
    fold_add,
    naive_rename,
    rename_pass,
)
from .minilang.sexpr import parse_sexpr, print_sexpr
from .plate import (
    LawPlate,
    check_multiplate_laws,
    generic_plate_pool,
    map_family,
    map_family_m,
    postorder_fold,
    preorder_fold,
    pure_plate,
)
from .store import (
    PAT,
    Address,
    Store,
    StoreContext,
    check_coalgebra_laws,
    check_lens_laws,
    compose_lens,
    get,
    id_lens,
    lens,
    phone,
    set,
    store_duplicate,
    store_equal,
    store_extract,
    store_map,
)
from .vanlaarhoven import (
    biplate_to_vl,
    check_naturality,
    check_vl_laws,
    coalgebra_pool,
    iso_cartesian_store1,
    iso_cartesian_store2,
    iso_store1,
    iso_store2,
    lens_to_vl,
    vl_get,
    vl_set,
    vl_to_biplate,
)

MAX_TERM_SIZE = 5
DEFAULT_TERM_SIZE = 5


@dataclass(frozen=True)
class LawResult:
    suite: str
    law: str
    verdict: Verdict

    @property
    def ok(self) -> bool:
        return self.verdict.ok


def forall(law: str, items: Iterable[Any], pred: Callable[[Any], bool]) -> Verdict:
    checker = LawChecker()
    for x in items:
        if not checker.check(law, pred(x), x):
            break
    return checker.verdict()


def _identity(x: Any) -> Any:
    return x


A2_FUNCTIONS = tuple(all_tables(A2, A2))


def store_universe() -> list[Store]:
    """All 24 stores over B3 x A2: 8 peek tables times 3 positions."""
    return [Store(t, b) for t in all_tables(B3, A2) for b in B3]


def cartesian_universe(max_dim: int = 2, index=B3, values=A2) -> list:
    return [s for n in range(max_dim + 1) for s in cs.enumerate_stores(index, values, n)]


# -- store --------------------------------------------------------------------


def store_suite(size: int | None = None, broken: bool = False) -> list[LawResult]:
    ctx = StoreContext(B3)
    eq = ctx.eq
    eq2 = lambda x, y: ctx.eq(x, y, ctx.eq)
    eq3 = lambda x, y: ctx.eq(x, y, eq2)
    stores = store_universe()
    pairs = list(itertools.product(stores, A2_FUNCTIONS))
    triples = list(itertools.product(stores, A2_FUNCTIONS, A2_FUNCTIONS))
    dup = store_duplicate
    checks = [
        ("functor identity", forall("fmap id", stores, lambda s: eq(store_map(_identity, s), s))),
        (
            "functor composition",
            forall(
                "fmap (f . g)",
                triples,
                lambda t: eq(
                    store_map(lambda a: t[1](t[2](a)), t[0]), store_map(t[1], store_map(t[2], t[0]))
                ),
            ),
        ),
        (
            "naturality of extract",
            forall("extract . fmap f", pairs, lambda p: store_extract(store_map(p[1], p[0])) == p[1](store_extract(p[0]))),
        ),
        (
            "naturality of duplicate",
            forall(
                "duplicate . fmap f",
                pairs,
                lambda p: eq2(dup(store_map(p[1], p[0])), store_map(lambda w: store_map(p[1], w), dup(p[0]))),
            ),
        ),
        ("extract . duplicate = id", forall("coherence 1", stores, lambda s: eq(store_extract(dup(s)), s))),
        ("fmap extract . duplicate = id", forall("coherence 2", stores, lambda s: eq(store_map(store_extract, dup(s)), s))),
        (
            "fmap duplicate . duplicate = duplicate . duplicate",
            forall("coherence 3", stores, lambda s: eq3(store_map(dup, dup(s)), dup(dup(s)))),
        ),
        ("liftW f = fmap f", forall("liftW", pairs, lambda p: eq(lift_w(ctx, p[1], p[0]), store_map(p[1], p[0])))),
    ]
    return [LawResult("store", name, v) for name, v in checks]


# -- lens ---------------------------------------------------------------------

_PERMUTATIONS = [dict(zip(B3, p)) for p in itertools.permutations(B3)]


def _perm_lens(perm: dict) -> Callable[[Any], Store]:
    inverse = {v: k for k, v in perm.items()}
    return lens(lambda b: perm[b], lambda _, n: inverse[n])


def lens_suite(size: int | None = None, broken: bool = False) -> list[LawResult]:
    candidates = lens_candidates()
    out = []
    out.append(
        (
            "phone lens reproduces the address-book example",
            forall(
                "phone",
                [PAT],
                lambda a: get(phone, a) == "333-4444"
                and set(phone, a, "555-6666") == Address("555-6666", "http://pat.com/"),
            ),
        )
    )
    out.append(
        (
            "get/set laws and coalgebra laws agree on every candidate",
            forall(
                "verdict agreement",
                candidates,
                lambda c: check_lens_laws(c.optic, RECORDS, B3).ok
                == check_coalgebra_laws(c.optic, RECORDS, B3).ok,
            ),
        )
    )
    out.append(
        (
            "lawful candidates are exactly the expected ones",
            forall(
                "expected verdicts",
                candidates,
                lambda c: check_lens_laws(c.optic, RECORDS, B3).ok == (c.name in LAWFUL_LENS_NAMES),
            ),
        )
    )
    stores = store_universe()
    # the same eq compares whole stores and their positions
    store_eq = lambda s, t: store_equal(s, t, B3) if isinstance(s, Store) else s == t
    out.append(("idLens is lawful", check_coalgebra_laws(id_lens, B3, B3)))
    out.append(("duplicate is a lawful lens onto pos", check_lens_laws(store_duplicate, stores, B3, store_eq)))
    same = lambda l1, l2: lambda a: store_equal(l1(a), l2(a), B3)
    out.append(
        (
            "idLens is a unit for composeLens",
            forall(
                "unit",
                [(c, r) for c in candidates for r in RECORDS],
                lambda p: same(compose_lens(id_lens, p[0].optic), p[0].optic)(p[1])
                and same(compose_lens(p[0].optic, id_lens), p[0].optic)(p[1]),
            ),
        )
    )
    perm_lenses = [_perm_lens(p) for p in _PERMUTATIONS]
    out.append(
        (
            "composeLens is associative",
            forall(
                "associativity",
                [
                    (c, l2, l3, r)
                    for c in candidates[:: 7]
                    for l2 in perm_lenses
                    for l3 in perm_lenses
                    for r in RECORDS
                ],
                lambda q: store_equal(
                    compose_lens(compose_lens(q[2], q[1]), q[0].optic)(q[3]),
                    compose_lens(q[2], compose_lens(q[1], q[0].optic))(q[3]),
                    B3,
                ),
            ),
        )
    )
    if broken:
        out.append(("broken fixture: setter-ignoring lens", check_lens_laws(IGNORING_LENS, RECORDS, B3)))
    return [LawResult("lens", name, v) for name, v in out]


# -- cartesian ----------------------------------------------------------------


def _function_stores(rng: random.Random, extra: int = 24) -> list:
    """Stores of A2 -> A2 functions: all of dimension <= 1, a seeded sample of dimension 2."""
    pool = list(cartesian_universe(1, B3, A2_FUNCTIONS))
    vectors = list(itertools.product(B3, repeat=2))
    for _ in range(extra):
        table = Table(tuple((v, rng.choice(A2_FUNCTIONS)) for v in vectors))
        pool.append(cs.from_normal_form(cs.NormalForm(2, rng.choice(vectors), table), B3))
    return pool


def _spread(items: list, k: int, rng: random.Random) -> list:
    by_dim: dict[int, list] = {}
    for s in items:
        by_dim.setdefault(cs.dimension(s), []).append(s)
    return [s for d in sorted(by_dim) for s in rng.sample(by_dim[d], min(k, len(by_dim[d])))]


def cartesian_suite(size: int | None = None, broken: bool = False) -> list[LawResult]:
    out = cartesian_law_checks() + normal_form_checks()
    return [LawResult("cartesian", name, v) for name, v in out]


def cartesian_law_checks() -> list[tuple[str, Verdict]]:
    """Functor, comonad and applicative laws on every store of dimension <= 2."""
    rng = random.Random(20110314)
    ctx = cs.CartesianStoreContext(B3)
    eq = ctx.eq
    eq2 = lambda x, y: ctx.eq(x, y, ctx.eq)
    eq3 = lambda x, y: ctx.eq(x, y, eq2)
    values = cartesian_universe(2)
    dup = cs.cs_duplicate
    fns = _function_stores(rng)
    small_fns = _spread(fns, 3, rng)
    small_values = _spread(values, 4, rng)
    compose_fn = lambda g: lambda h: lambda x: g(h(x))
    out = [
        ("functor identity", forall("fmap id", values, lambda s: eq(cs.cs_map(_identity, s), s))),
        (
            "functor composition",
            forall(
                "fmap (f . g)",
                itertools.product(values, A2_FUNCTIONS[1:3], A2_FUNCTIONS[1:3]),
                lambda t: eq(cs.cs_map(lambda a: t[1](t[2](a)), t[0]), cs.cs_map(t[1], cs.cs_map(t[2], t[0]))),
            ),
        ),
        ("extract . duplicate = id", forall("coherence 1", values, lambda s: eq(cs.cs_extract(dup(s)), s))),
        ("fmap extract . duplicate = id", forall("coherence 2", values, lambda s: eq(cs.cs_map(cs.cs_extract, dup(s)), s))),
        (
            "fmap duplicate . duplicate = duplicate . duplicate",
            forall("coherence 3", values, lambda s: eq3(cs.cs_map(dup, dup(s)), dup(dup(s)))),
        ),
        (
            "applicative identity",
            forall("pure id <*> v", values, lambda v: eq(cs.cs_ap(cs.cs_pure(_identity), v), v)),
        ),
        (
            "applicative homomorphism",
            forall(
                "pure f <*> pure x",
                itertools.product(A2_FUNCTIONS, A2),
                lambda p: eq(cs.cs_ap(cs.cs_pure(p[0]), cs.cs_pure(p[1])), cs.cs_pure(p[0](p[1]))),
            ),
        ),
        (
            "applicative interchange",
            forall(
                "u <*> pure y",
                itertools.product(fns, A2),
                lambda p: eq(cs.cs_ap(p[0], cs.cs_pure(p[1])), cs.cs_ap(cs.cs_pure(lambda g: g(p[1])), p[0])),
            ),
        ),
        (
            "applicative composition",
            forall(
                "pure (.) <*> u <*> v <*> w",
                itertools.product(small_fns, small_fns, small_values),
                lambda t: eq(
                    cs.cs_ap(cs.cs_ap(cs.cs_ap(cs.cs_pure(compose_fn), t[0]), t[1]), t[2]),
                    cs.cs_ap(t[0], cs.cs_ap(t[1], t[2])),
                ),
            ),
        ),
        (
            "dimension is additive under <*>",
            forall(
                "dimension",
                itertools.product(fns, small_values),
                lambda p: cs.dimension(cs.cs_ap(*p)) == cs.dimension(p[0]) + cs.dimension(p[1])
                and cs.positions(cs.cs_ap(*p)) == cs.positions(p[0]) + cs.positions(p[1]),
            ),
        ),
        (
            "extract distributes over <*>",
            forall(
                "extract",
                itertools.product(fns, small_values),
                lambda p: cs.cs_extract(cs.cs_ap(*p)) == cs.cs_extract(p[0])(cs.cs_extract(p[1])),
            ),
        ),
        (
            "fmap f = pure f <*>",
            forall(
                "fmap via ap",
                itertools.product(values, A2_FUNCTIONS),
                lambda p: eq(cs.cs_map(p[1], p[0]), cs.cs_ap(cs.cs_pure(p[1]), p[0])),
            ),
        ),
    ]
    return out


def _axis_ok(row) -> bool:
    s, universe = row
    slices = cs.stores(s)
    n = cs.dimension(s)
    pos = cs.positions(s)
    if len(slices) != n:
        return False
    for k, st in enumerate(slices):
        axis = n - 1 - k  # stripping starts from the outermost battery
        if st.pos != pos[axis] or store_extract(st) != cs.cs_extract(s):
            return False
        for b in universe:
            vec = pos[:axis] + (b,) + pos[axis + 1 :]
            if st.peek(b) != cs.peek_at(s, vec):
                return False
    return True


def normal_form_checks() -> list[tuple[str, Verdict]]:
    b2 = B3[:2]
    up_to_2 = [(s, B3) for s in cartesian_universe(2)]
    dim3 = [(s, b2) for s in cs.enumerate_stores(b2, A2, 3)]
    rows = up_to_2 + dim3

    def round_trip(p) -> bool:
        s, u = p
        nf = cs.to_normal_form(s, u)
        back = cs.from_normal_form(nf, u)
        return cs.cs_equal(back, s, u) and cs.to_normal_form(back, u) == nf and nf.arity == cs.dimension(s)

    return [
        ("normal form round trip (dim <= 2 on B3, dim 3 on B2)", forall("normal form", rows, round_trip)),
        ("stores() slices the axes through the selected position", forall("stores", rows, _axis_ok)),
    ]


# -- biplate ------------------------------------------------------------------

EXPR_PROBES = (EInt(0), EVar(V("x")), EAdd(EInt(1), EInt(0)))


def children_biplate(sort: str = "expr", probes=EXPR_PROBES):
    return vl_to_biplate(children(sort), probes)


def biplate_suite(size: int | None = None, broken: bool = False) -> list[LawResult]:
    size = DEFAULT_TERM_SIZE if size is None else size
    out = []
    out.append(("idBiplate is lawful", cs.check_biplate_laws(cs.id_biplate, B3, B3)))
    out.append(
        (
            "lawful tuple Biplates pass, unlawful ones fail",
            forall(
                "expected verdicts",
                biplate_candidates(),
                lambda c: cs.check_biplate_laws(c.optic, TUPLES, B3).ok == (c.name in LAWFUL_BIPLATE_NAMES),
            ),
        )
    )
    out.append(
        (
            "singleStore . lens is lawful exactly when the lens is",
            forall(
                "injection",
                lens_biplate_candidates(),
                lambda c: cs.check_biplate_laws(c.optic, RECORDS, B3).ok == (c.name in LAWFUL_LENS_NAMES),
            ),
        )
    )
    same = lambda o1, o2, a: cs.cs_equal(o1(a), o2(a), B3)
    out.append(
        (
            "idBiplate is a unit for composeBiplate",
            forall(
                "unit",
                [(c, a) for c in biplate_candidates() for a in TUPLES],
                lambda p: same(cs.compose_biplate(cs.id_biplate, p[0].optic), p[0].optic, p[1])
                and same(cs.compose_biplate(p[0].optic, cs.id_biplate), p[0].optic, p[1]),
            ),
        )
    )
    inner = [cs.id_biplate, lambda b: cs.Unit(b)] + [cs.lens_to_biplate(_perm_lens(p)) for p in _PERMUTATIONS[:3]]
    out.append(
        (
            "composeBiplate is associative",
            forall(
                "associativity",
                [(c, o2, o3, a) for c in biplate_candidates() for o2 in inner for o3 in inner for a in TUPLES],
                lambda q: same(
                    cs.compose_biplate(cs.compose_biplate(q[2], q[1]), q[0].optic),
                    cs.compose_biplate(q[2], cs.compose_biplate(q[1], q[0].optic)),
                    q[3],
                ),
            ),
        )
    )
    exprs = term_universe(min(size, 4))["expr"]
    child = children_biplate()
    out.append(("expression children Biplate is lawful", cs.check_biplate_laws(child, exprs, EXPR_PROBES)))
    grand = cs.compose_biplate(child, child)
    out.append(
        (
            "children composed with children are the grandchildren",
            forall(
                "grandchildren",
                term_universe(size)["expr"],
                lambda e: list(cs.positions(grand(e))) == oracles.expr_grandchildren(e),
            ),
        )
    )
    if broken:
        out.append(("broken fixture: dup-on-set Biplate", cs.check_biplate_laws(BIPLATES["dup-on-set"], TUPLES, B3)))
    return [LawResult("biplate", name, v) for name, v in out]


# -- van Laarhoven -----------------------------------------------------------


def twice_vl(ctx, f):
    """Visits its single target twice; fine at ``Id``, not a lawful traversal."""
    return lambda a: ctx.lift2(lambda _, y: y, f(a), f(a))


def vl_suite(size: int | None = None, broken: bool = False) -> list[LawResult]:
    size = DEFAULT_TERM_SIZE if size is None else size
    out = []
    stores = store_universe()
    store_eq = lambda s, t: store_equal(s, t, B3)
    out.append(("isoStore2 . isoStore1 = id", forall("store round trip", stores, lambda s: store_eq(iso_store2(iso_store1(s), B3), s))))
    pool = coalgebra_pool(B3)
    out.append(
        (
            "isoStore1 . isoStore2 = id at every registered context",
            forall(
                "store forward",
                itertools.product(stores, pool),
                lambda p: p[1].ctx.eq(
                    iso_store1(iso_store2(iso_store1(p[0]), B3))(p[1].ctx, p[1].run),
                    p[1].ctx.fmap(p[0].peek, p[1].run(p[0].pos)),
                ),
            ),
        )
    )
    values = cartesian_universe(2)
    out.append(
        (
            "isoCartesianStore2 . isoCartesianStore1 = id",
            forall("cartesian round trip", values, lambda s: cs.cs_equal(iso_cartesian_store2(iso_cartesian_store1(s), B3), s, B3)),
        )
    )
    app_pool = coalgebra_pool(B3, applicative_only=True)
    out.append(
        (
            "isoCartesianStore1 . isoCartesianStore2 = id at every registered context",
            forall(
                "cartesian forward",
                itertools.product(values, app_pool),
                lambda p: p[1].ctx.eq(
                    iso_cartesian_store1(iso_cartesian_store2(iso_cartesian_store1(p[0]), B3))(p[1].ctx, p[1].run),
                    _direct_traverse(p[0], p[1].ctx, p[1].run),
                ),
            ),
        )
    )
    count = ConstContext(SUM)
    out.append(
        (
            "counting targets at Const(sum) gives the dimension",
            forall("dimension", values, lambda s: iso_cartesian_store1(s)(count, lambda b: 1) == cs.dimension(s)),
        )
    )
    lenses = lens_candidates()
    out.append(
        (
            "coalgebra laws and monoidal-transformation laws agree (lenses)",
            forall(
                "lens bridge",
                lenses,
                lambda c: check_coalgebra_laws(c.optic, RECORDS, B3).ok
                == check_vl_laws(lens_to_vl(c.optic), RECORDS, B3).ok
                == check_vl_laws(lens_to_vl(c.optic), RECORDS, B3, applicative_only=True).ok,
            ),
        )
    )
    out.append(
        (
            "coalgebra laws and monoidal-transformation laws agree (Biplates)",
            forall(
                "biplate bridge",
                biplate_candidates(),
                lambda c: cs.check_biplate_laws(c.optic, TUPLES, B3).ok
                == check_vl_laws(biplate_to_vl(c.optic), TUPLES, B3, applicative_only=True).ok,
            ),
        )
    )
    lawful = [c for c in lenses if c.name in LAWFUL_LENS_NAMES]
    out.append(
        (
            "van Laarhoven set/get agree with the store representation",
            forall(
                "set/get",
                [(c, r, b) for c in lawful for r in RECORDS for b in B3],
                lambda q: vl_set(lens_to_vl(q[0].optic), q[1], q[2]) == set(q[0].optic, q[1], q[2])
                and vl_get(lens_to_vl(q[0].optic), q[1]) == get(q[0].optic, q[1]),
            ),
        )
    )
    out.append(("phone lens read through Const", forall("vl_get phone", [PAT], lambda a: vl_get(lens_to_vl(phone), a) == "333-4444")))
    out.append(
        (
            "naturality at registered transformations",
            forall("naturality", lawful, lambda c: check_naturality(lens_to_vl(c.optic), RECORDS, B3).ok),
        )
    )
    exprs = term_universe(min(size, 4))["expr"]
    out.append(
        (
            "expression children are a lawful van Laarhoven Biplate",
            check_vl_laws(children("expr"), exprs, EXPR_PROBES, applicative_only=True),
        )
    )
    if broken:
        out.append(("broken fixture: traversal visiting its target twice", check_vl_laws(twice_vl, B3, B3, applicative_only=True)))
    return [LawResult("vl", name, v) for name, v in out]


def _direct_traverse(s, ctx, f):
    # the traversal written out from the normal form: pure peek <*> f b1 <*> ... <*> f bn
    nf = cs.to_normal_form(s, B3)
    acc = ctx.pure(_curried(nf))
    for b in nf.positions:
        acc = ctx.ap(acc, f(b))
    return acc


def _curried(nf, prefix=()):
    if len(prefix) == nf.arity:
        return nf.peek(prefix)
    return lambda b: _curried(nf, prefix + (b,))


# -- multiplate ---------------------------------------------------------------


class DroppingPlate(MiniPlate):
    """A corrupted multiplate that forgets every block's statements."""

    def multiplate(self, ctx):
        honest = MiniPlate.multiplate(self, ctx)

        def stm(s):
            if isinstance(s, SBlock):
                return ctx.pure(SBlock(()))
            return honest.stm(s)

        return replace(honest, stm=stm)


def _fail_on_y(v):
    return NOTHING if v.name == "y" else Just(v)


def minilang_plate_pool(cls=MiniPlate) -> list[LawPlate]:
    pool = generic_plate_pool(cls)
    lst = ConstContext(LIST)
    base = cls.mk_plate(lambda proj: IDENTITY.pure)
    pool += [
        LawPlate(IDENTITY, "rename-var", replace(base, var=lambda v: V("_" + v.name))),
        LawPlate(OPTION, "fail-on-y", replace(cls.mk_plate(lambda proj: OPTION.pure), var=_fail_on_y)),
        LawPlate(lst, "var-names", replace(cls.mk_plate(lambda proj: lst.pure), var=lambda v: (v.name,))),
        LawPlate(ConstContext(MAX), "int-max", replace(cls.mk_plate(lambda proj: lambda a: MAX.identity), expr=lambda e: e.value if isinstance(e, EInt) else MAX.identity)),
    ]
    return pool


def multiplate_suite(size: int | None = None, broken: bool = False) -> list[LawResult]:
    size = DEFAULT_TERM_SIZE if size is None else size
    universe = term_universe(size)
    all_terms = [t for ts in universe.values() for t in ts]
    out = []
    out.append(("multiplate laws for the mini-language plate", check_multiplate_laws(MiniPlate, universe, minilang_plate_pool())))
    out.append(
        (
            "rename pass matches the hand-written rename",
            forall("rename", all_terms + [P0], lambda t: rename_pass(t) == naive_rename(t)),
        )
    )
    out.append(
        (
            "variable-collecting fold matches direct recursion",
            forall("collect vars", all_terms + [P0], lambda t: collect_vars_fold(t) == oracles.collect_vars(t)),
        )
    )
    out.append(
        (
            "node-counting fold matches direct recursion",
            forall("count nodes", all_terms + [P0], lambda t: count_nodes_fold(t) == oracles.count_nodes(t)),
        )
    )
    out.append(("P0 has 4 variable occurrences and 13 nodes", forall("P0", [P0], lambda t: collect_vars_fold(t) == ["x"] * 4 and count_nodes_fold(t) == 13)))
    identity_family = map_family(pure_plate(MiniPlate, IDENTITY))
    out.append(("mapFamily purePlate = id", forall("mapFamily pure", all_terms, lambda t: identity_family.apply(t) == t)))
    rename_m = map_family_m(replace(pure_plate(MiniPlate, IDENTITY), var=lambda v: V("_" + v.name)), IDENTITY)
    out.append(("mapFamily = mapFamilyM at Id", forall("mapFamilyM", all_terms, lambda t: rename_m.apply(t) == RENAME.apply(t))))
    lst, total = ConstContext(LIST), ConstContext(SUM)
    node = MiniPlate.mk_plate(lambda proj: lambda a: (a,))
    ones = MiniPlate.mk_plate(lambda proj: lambda a: 1)
    pre, post = preorder_fold(node, lst), postorder_fold(node, lst)
    pre_n, post_n = preorder_fold(ones, total), postorder_fold(ones, total)
    out.append(
        (
            "preorder and postorder folds visit nodes in order",
            forall(
                "fold order",
                all_terms,
                lambda t: list(pre.apply(t)) == oracles.preorder_nodes(t) and list(post.apply(t)) == oracles.postorder_nodes(t),
            ),
        )
    )
    out.append(("preorder = postorder at a commutative monoid", forall("commutative fold", all_terms, lambda t: pre_n.apply(t) == post_n.apply(t))))
    fused = map_family(
        replace(pure_plate(MiniPlate, IDENTITY), var=lambda v: V("_" + v.name), expr=fold_add)
    )
    out.append(
        (
            "disjoint plates fuse: rename+constfold in one sweep = two sweeps",
            forall("fusion", all_terms, lambda t: fused.apply(t) == CONSTFOLD.apply(RENAME.apply(t))),
        )
    )
    out.append(("constant folding is idempotent", forall("constfold", all_terms, lambda t: constfold_pass(constfold_pass(t)) == constfold_pass(t))))
    out.append(
        (
            "s-expression codec round trips",
            forall(
                "codec",
                all_terms,
                lambda t: decode_ast(parse_sexpr(print_sexpr(encode_ast(t))), sort_of(t)) == t,
            ),
        )
    )
    if broken:
        out.append(("broken fixture: multiplate dropping SBlock children", check_multiplate_laws(DroppingPlate, universe)))
    return [LawResult("multiplate", name, v) for name, v in out]


SUITES: dict[str, Callable[..., list[LawResult]]] = {
    "store": store_suite,
    "lens": lens_suite,
    "cartesian": cartesian_suite,
    "biplate": biplate_suite,
    "vl": vl_suite,
    "multiplate": multiplate_suite,
}


def run_suites(names: Iterable[str], size: int | None = None, broken: bool = False) -> list[LawResult]:
    results: list[LawResult] = []
    for name in names:
        results += SUITES[name](size=size, broken=broken)
    return results
