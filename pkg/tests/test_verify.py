import pytest

from ringcover import catalog as cat
from ringcover.errors import UnknownTheoremId
from ringcover.verify import REGISTRY, SUITES, Skip, Theorem, resolve, run, run_theorem

ENTRIES = cat.catalog()


def test_catalog_shape():
    names = [e.name for e in ENTRIES if e.kind == "named"]
    randoms = [e for e in ENTRIES if e.kind == "random"]
    assert len(names) >= 25 and len(set(names)) == len(names)
    assert all(e.order <= 256 for e in ENTRIES)
    assert len(randoms) == cat.DEFAULT_RANDOM and all(e.order <= 64 for e in randoms)


def test_random_rings_depend_on_seed():
    a = [e.ring.spec for e in cat.random_rings(1, 4)]
    b = [e.ring.spec.table for e in cat.random_rings(1, 4)]
    c = [e.ring.spec.table for e in cat.random_rings(2, 4)]
    assert [s.table for s in a] == b and b != c
    assert cat.lookup("Random(1,2)").spec.table == a[2].table


def test_resolve():
    assert resolve("thm-4.4") == ["thm-4.4"]
    assert set(resolve("structural")) <= set(REGISTRY)
    for ids in SUITES.values():
        assert set(ids) <= set(REGISTRY)
    with pytest.raises(UnknownTheoremId):
        resolve("thm-0.0")


@pytest.mark.parametrize("tid", sorted(REGISTRY))
def test_theorem_passes_on_catalog(tid):
    cases = run_theorem(tid, ENTRIES)
    failures = [(c.ring, c.reason) for c in cases if c.outcome == "fail"]
    assert not failures
    assert any(c.outcome == "pass" for c in cases)


def test_failures_are_reported(monkeypatch):
    def bogus(R):
        if R.order == 4:
            raise Skip("order 4")
        assert R.order != 8, "order is 8"
        return "ok"
    monkeypatch.setitem(REGISTRY, "test-bogus", Theorem("test-bogus", "order is not 8", bogus, max_order=16))
    cases = run("test-bogus", entries=cat.named_rings(32))
    outcomes = {c.outcome for c in cases}
    assert outcomes == {"pass", "fail", "skipped"}
    assert all(c.reason.startswith("order is 8") for c in cases if c.outcome == "fail")
    assert any(c.reason == "order above 16" for c in cases)


def test_run_orders_cases_by_id():
    cases = run("reduction", max_order=16, randoms=2)
    ids = [c.theorem for c in cases]
    assert ids == sorted(ids)
