
import pytest

from locint.audit import (
    audit_family,
    criterion_families,
    differential_report,
    report_bytes,
    report_digest,
)
from locint.io import fixture
from locint.ordering import construct_order


def test_fixture_families_pass_every_suite():
    for name in ("FAM-CHAIN", "FAM-INT", "FAM-FIVE", "FAM-CENTER"):
        F = fixture(name)
        res = audit_family(F, construct_order(F))
        assert all(r.ok for r in res.values()), name
    # FAM-FIVE has three pairwise incomparable members, so the first suite is exercised
    assert audit_family(fixture("FAM-FIVE"))["lemp1.1"].checked > 0


def test_audit_refuses_non_loc():
    with pytest.raises(ValueError):
        audit_family(fixture("FAM-NONLOC"))


def test_corpus_tags():
    tags = [src for src, _ in criterion_families(count=3, corpus_max=4)]
    assert tags[-3:] == ["random:seed=0:#0", "random:seed=0:#1", "random:seed=0:#2"]
    assert all(t.startswith("stone:") for t in tags[:-3])


def test_small_report_is_clean_and_stable():
    a = differential_report(seed=5, count=25, corpus_max=5)
    b = differential_report(seed=5, count=25, corpus_max=5)
    assert report_bytes(a) == report_bytes(b)
    assert report_digest(a) == report_digest(b)
    t = a["totals"]
    assert t["families"] == len(a["families"])
    assert t["both_consistent"] == t["families"]
    assert t["audit_failures"] == 0


def test_different_seeds_differ():
    a = differential_report(seed=1, count=10, corpus_max=3, audit=False)
    b = differential_report(seed=2, count=10, corpus_max=3, audit=False)
    assert report_digest(a) != report_digest(b)
    assert "lemmas" in a and not a["lemmas"]
