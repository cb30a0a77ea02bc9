import copy
import csv
import json
import os

import pytest

from grpstat import checks
from grpstat.catalog import CatalogError, build, catalog, entry_ids, get
from grpstat.checks import (
    CHECK_IDS,
    SuiteConfig,
    direct_product_instance,
    run_suite,
    verify,
)
from grpstat.group import PermGroup


def test_check_registry_is_consistent():
    assert set(CHECK_IDS) == set(checks._CHECKS)
    assert len(CHECK_IDS) == len(set(CHECK_IDS))


def test_catalog_filtering():
    assert len(entry_ids()) >= 25
    families = ("natural", "subsets", "partitions", "affine", "product",
                "diagonal", "subspace", "pairs", "quadform", "sporadic")
    for fam in families:
        assert catalog(fam), fam
    both = catalog("subspace, large_base")
    assert both == [e for e in catalog() if {"subspace", "large_base"} <= e.tags]
    assert catalog(["quadform", "slow"])
    with pytest.raises(CatalogError):
        catalog("no-such-tag")
    with pytest.raises(CatalogError):
        get("no-such-id")


def test_direct_product_encoding():
    A = build("sym3")
    B = build("aff-1-5")
    P = direct_product_instance(A, B)
    assert P.degree == 15
    assert P.meta["order"] == A.meta["order"] * B.meta["order"]
    assert len(P.labels) == 15
    dB = B.degree
    for g, gp in zip(A.generators, P.generators):
        for x in range(A.degree):
            for y in range(dB):
                assert gp(x * dB + y) == g(x) * dB + y
    for h, hp in zip(B.generators, P.generators[len(A.generators):]):
        for x in range(A.degree):
            for y in range(dB):
                assert hp(x * dB + y) == x * dB + h(y)
    G = PermGroup(P.degree, list(P.generators))
    assert G.order == P.meta["order"]


def test_pgl_heights_check():
    rows = verify("PGL_H")
    assert [r.instance_id for r in rows] == [
        "sub-3-2-1", "sub-4-2-1", "sub-3-3-1", "sub-3-4-1"]
    assert all(r.passed for r in rows)
    assert [r.lhs for r in rows] == [3.0, 4.0, 4.0, 4.0]


def test_orbit_sizes_check_tiering():
    fast = verify("ORBIT_SIZES")
    assert len(fast) == 6 and all(r.passed for r in fast)
    full = verify("ORBIT_SIZES", include_slow=True)
    assert len(full) == 8 and all(r.passed for r in full)
    assert {r.instance_id for r in full} - {r.instance_id for r in fast} == {
        "quad-2-2-plus", "quad-2-2-minus"}


def test_m24_check_is_slow_tier_and_fails():
    assert verify("M24_I") == []
    rows = verify("M24_I", include_slow=True)
    assert len(rows) == 1
    row = rows[0]
    assert row.passed is False
    assert row.lhs == 7.0 and row.rhs == 8.0
    assert row.certificates["I"]["exhaustive"] is True


def test_partition_and_pairs_row_counts():
    assert len(verify("PARTITION_I")) == 3
    assert len(verify("LEN_DP")) == 3
    rows = verify("PAIRS_H")
    assert len(rows) == 2 and all(r.passed for r in rows)


def test_unknown_ids_raise():
    with pytest.raises(ValueError):
        verify("NOPE")
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(checks=("NOPE",), out="/tmp/never.json"))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(suite="weird", out="/tmp/never.json"))


def _scrub(obj):
    if isinstance(obj, dict):
        return {k: _scrub(v) for k, v in obj.items() if k != "runtime"}
    if isinstance(obj, list):
        return [_scrub(v) for v in obj]
    return obj


def test_report_determinism_and_files(tmp_path):
    out1 = str(tmp_path / "a.json")
    out2 = str(tmp_path / "b.json")
    cfg = dict(checks=("PGL_H", "ORBIT_SIZES", "LEN_DP"), figures=False)
    r1 = run_suite(SuiteConfig(out=out1, **cfg))
    r2 = run_suite(SuiteConfig(out=out2, **cfg))
    s1, s2 = _scrub(copy.deepcopy(r1)), _scrub(copy.deepcopy(r2))
    s1["config"].pop("suite"), s2["config"].pop("suite")
    assert s1 == s2
    with open(out1) as fh:
        on_disk = json.load(fh)
    assert _scrub(on_disk) == _scrub(r1)
    assert on_disk["schema"] == 1
    assert on_disk["summary"]["rows"] == 13
    assert on_disk["summary"]["failed"] == 0
    with open(str(tmp_path / "a.csv")) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["check_id", "instance_id", "pass", "lhs", "rhs",
                       "runtime", "claim"]
    assert len(rows) == 14
    assert not os.path.exists(str(tmp_path / "a_chain.png"))


def test_empty_check_list(tmp_path):
    out = str(tmp_path / "empty.json")
    rep = run_suite(SuiteConfig(checks=(), out=out))
    assert rep["summary"] == {"checks_run": 0, "rows": 0, "passed": 0,
                              "failed": 0, "skipped": 0, "failed_rows": []}
    assert os.path.exists(out)
    assert not os.path.exists(str(tmp_path / "empty_chain.png"))
    assert not os.path.exists(str(tmp_path / "empty_bounds.png"))


def test_figures_render_per_check(tmp_path):
    out = str(tmp_path / "fig.json")
    run_suite(SuiteConfig(checks=("INEQ_CHAIN",), out=out))
    assert os.path.exists(str(tmp_path / "fig_chain.png"))
    assert not os.path.exists(str(tmp_path / "fig_bounds.png"))
    out2 = str(tmp_path / "fig2.json")
    run_suite(SuiteConfig(checks=("HEIGHT_MAIN",), out=out2))
    assert os.path.exists(str(tmp_path / "fig2_bounds.png"))
    assert not os.path.exists(str(tmp_path / "fig2_chain.png"))


def test_budget_exhaustion_skips_instead_of_lying(tmp_path):
    out = str(tmp_path / "tiny.json")
    rep = run_suite(SuiteConfig(checks=("SP_STAB",), out=out,
                                budget=5, figures=False))
    assert rep["summary"]["skipped"] == 2
    assert rep["summary"]["failed"] == 0
    for row in rep["skipped"]:
        assert row["pass"] is None
        assert row["skip_reason"].startswith("budget exhausted")
        assert row["instance_id"].startswith("quad-2-1-")
    for row in rep["results"]:
        assert row["pass"] is True
    with open(str(tmp_path / "tiny.csv")) as fh:
        rows = list(csv.reader(fh))
    assert any(r[2] == "skipped" for r in rows[1:])
    # a truncated search may still decide a claim when the certified
    # interval sits entirely on one side of the bound
    rep2 = run_suite(SuiteConfig(checks=("PARTITION_I",),
                                 out=str(tmp_path / "tiny2.json"),
                                 budget=40, figures=False))
    assert rep2["summary"]["failed"] == 0
    assert rep2["summary"]["passed"] == 3
    assert any(not row["certificates"]["I"]["exhaustive"]
               for row in rep2["results"])


def test_full_default_suite(tmp_path):
    out = str(tmp_path / "full.json")
    rep = run_suite(SuiteConfig(out=out, figures=False))
    assert rep["summary"]["failed"] == 0
    assert rep["summary"]["skipped"] == 0
    assert rep["summary"]["checks_run"] == len(CHECK_IDS)
    assert {r["check_id"] for r in rep["results"]} == set(CHECK_IDS) - {"M24_I"}


def test_all_suite_fails_only_m24(tmp_path):
    out = str(tmp_path / "all.json")
    rep = run_suite(SuiteConfig(suite="all", out=out, figures=False))
    assert rep["summary"]["failed"] == 1
    assert rep["summary"]["failed_rows"] == ["M24_I/m24"]
    assert rep["summary"]["skipped"] == 0
