from __future__ import annotations

import pytest

from multiplate.candidates import B3, FIELD_B, IGNORING_LENS, LAWFUL_LENS_NAMES, RECORDS, Rec, lens_candidates
from multiplate.finite import Table, all_tables
from multiplate.store import (
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
    modify,
    phone,
    set,
    store_duplicate,
    store_equal,
    store_extend,
    store_extract,
    store_map,
    website,
)
from multiplate.suites import store_universe


def test_phone_lens_get_and_set():
    assert get(phone, PAT) == "333-4444"
    assert set(phone, PAT, "555-6666") == Address("555-6666", "http://pat.com/")
    assert get(website, PAT) == "http://pat.com/"
    assert modify(phone, str.upper, Address("abc", "w")) == Address("ABC", "w")


def test_store_universe_has_24_stores():
    stores = store_universe()
    assert len(stores) == 24
    assert len({(s.peek, s.pos) for s in stores}) == 24


@pytest.mark.parametrize("s", store_universe(), ids=repr)
def test_comonad_coherence(s):
    eq2 = lambda x, y: store_equal(x, y, B3)
    assert store_equal(store_extract(store_duplicate(s)), s, B3)
    assert store_equal(store_map(store_extract, store_duplicate(s)), s, B3)
    lhs = store_map(store_duplicate, store_duplicate(s))
    rhs = store_duplicate(store_duplicate(s))
    assert store_equal(lhs, rhs, B3, eq2)


def test_duplicate_moves_the_selection():
    s = Store(Table((("b0", 0), ("b1", 1), ("b2", 2))), "b1")
    d = store_duplicate(s)
    assert d.pos == "b1"
    assert d.peek("b2").pos == "b2"
    assert store_extract(d.peek("b2")) == 2


def test_extend_with_extract_is_identity():
    ctx = StoreContext(B3)
    for s in store_universe():
        assert ctx.eq(store_extend(store_extract, s), s)


def test_store_equal_distinguishes_position_and_peek():
    t0, t1 = list(all_tables(B3, ("a0", "a1")))[:2]
    assert not store_equal(Store(t0, "b0"), Store(t0, "b1"), B3)
    assert not store_equal(Store(t0, "b0"), Store(t1, "b0"), B3)


def test_candidate_set_size_and_lawful_members():
    candidates = lens_candidates()
    assert len(candidates) == 112
    lawful = {c.name for c in candidates if check_lens_laws(c.optic, RECORDS, B3)}
    assert lawful == LAWFUL_LENS_NAMES
    assert len(candidates) - len(lawful) >= 3


@pytest.mark.parametrize("c", lens_candidates(), ids=repr)
def test_lens_laws_agree_with_coalgebra_laws(c):
    assert check_lens_laws(c.optic, RECORDS, B3).ok == check_coalgebra_laws(c.optic, RECORDS, B3).ok


def test_ignoring_setter_reports_first_witness():
    v = check_lens_laws(IGNORING_LENS, RECORDS, B3)
    assert not v
    assert v.law == "get-set"
    assert v.witness == (Rec("b0", False), "b1")
    cv = check_coalgebra_laws(IGNORING_LENS, RECORDS, B3)
    assert cv.law == "duplicate"


def test_set_set_violation_is_caught():
    # set-get and get-set hold but the second write does not erase the first
    toggling = lens(lambda r: r.b, lambda r, n: Rec(n, not r.c) if n != r.b else r)
    v = check_lens_laws(toggling, RECORDS, B3)
    assert v.law == "set-set"


def test_id_lens_and_composition():
    assert check_coalgebra_laws(id_lens, B3, B3)
    nested = lens(lambda a: a.phone, lambda a, p: Address(p, a.website))
    assert get(compose_lens(id_lens, nested), PAT) == "333-4444"
    first_char = lens(lambda s: s[0], lambda s, c: c + s[1:])
    both = compose_lens(first_char, phone)
    assert get(both, PAT) == "3"
    assert set(both, PAT, "9") == Address("933-4444", "http://pat.com/")
    assert check_lens_laws(both, [PAT], ["1", "2"])


def test_composite_of_lawful_lenses_is_lawful():
    lawful = [c for c in lens_candidates() if c.name in LAWFUL_LENS_NAMES]
    b_lens = lens(lambda b: b, lambda _, n: n)
    for c in lawful:
        assert check_coalgebra_laws(compose_lens(b_lens, c.optic), RECORDS, B3)


def test_duplicate_is_a_lens():
    stores = store_universe()
    eq = lambda s, t: store_equal(s, t, B3) if isinstance(s, Store) else s == t
    assert check_lens_laws(store_duplicate, stores, B3, eq)


def test_field_lens_on_records():
    assert set(FIELD_B, Rec("b0", True), "b2") == Rec("b2", True)
    assert [get(FIELD_B, r) for r in RECORDS] == [b for b in B3 for _ in (0, 1)]
