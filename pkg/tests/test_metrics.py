import json
import math
import warnings
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, strategies as st

from lwhbench import metrics
from lwhbench.errors import DegenerateInput, InvalidArgument
from lwhbench.metrics import (build_report, compare_to_paper, erank, fom,
                              normalize_inverted_minmax, normalize_log_minmax)
from lwhbench.records import MeasurementRecord, Source

TABLE2 = {r.spec_id: r for r in metrics.paper_records()}
PUBLISHED = metrics.published_erank()


def rec(spec_id, cpb, ram, rom, energy):
    return MeasurementRecord(spec_id, cpb, ram, rom, energy)


@pytest.mark.parametrize("spec_id,expected", [
    ("skinny-tk2", 7.38), ("clx", 2.53), ("photon", 0.84),
])
def test_erank_anchors(spec_id, expected):
    assert erank(TABLE2[spec_id]) == pytest.approx(expected, abs=0.01)


def test_erank_hand_value():
    assert erank(rec("x", 1000, 10, 80, 100)) == pytest.approx(1e6 / 100 / 100)


def test_erank_rejects_nonpositive_and_missing():
    with pytest.raises(InvalidArgument):
        erank(rec("x", 0, 1, 1, 1))
    with pytest.raises(InvalidArgument):
        erank(MeasurementRecord("x", cpb=10))


@pytest.mark.parametrize("field", ["cpb", "ram_bytes", "rom_bytes", "energy_nj"])
def test_erank_strictly_decreasing(field):
    from dataclasses import replace
    base = TABLE2["ascon"]
    bigger = replace(base, **{field: getattr(base, field) * 1.5})
    assert erank(bigger) < erank(base)


def test_embedded_dataset_shape():
    assert len(TABLE2) == 24
    assert all(r.source is Source.PAPER_TABLE2 for r in TABLE2.values())
    assert TABLE2["blake2s"].rom_bytes == 28704
    assert PUBLISHED["blake2s"] == 0.0061


def test_dataset_env_override(tmp_path, monkeypatch):
    path = tmp_path / "t2.csv"
    path.write_text("spec_id,cpb,ram,rom,energy_nj,erank\nfoo,10,1,1,1,1\n")
    monkeypatch.setenv("LWHBENCH_TABLE2", str(path))
    assert [r.spec_id for r in metrics.paper_records()] == ["foo"]


def test_fom():
    assert fom(1, 1, 1) == 1
    assert fom(1000, 1e6, 2000) == pytest.approx(2.5e-10)
    assert fom(5, 3, 14) == pytest.approx(fom(5, 3, 7) / 4)
    with pytest.raises(InvalidArgument):
        fom(1, 0, 1)


def test_inverted_minmax_examples():
    assert normalize_inverted_minmax([204, 4065]) == [1.0, 0.0]
    assert normalize_inverted_minmax([0, 5, 10])[1] == 0.5
    cpb = [r.cpb for r in TABLE2.values()]
    scores = normalize_inverted_minmax(cpb)
    best = max(range(len(scores)), key=scores.__getitem__)
    assert list(TABLE2)[best] == "skinny-tk2"


def test_log_minmax_examples():
    assert normalize_log_minmax([1, 10, 100]) == pytest.approx([0, 0.5, 1])
    er = {k: erank(r) for k, r in TABLE2.items()}
    scores = dict(zip(er, normalize_log_minmax(list(er.values()))))
    assert scores["skinny-tk2"] == 1.0
    # the column minimum is BLAKE2s (0.0061), not Subterranean (0.0095)
    assert scores["blake2s"] == 0.0
    assert 0 < scores["subterranean"] < 0.1


def test_log_minmax_on_published_column():
    scores = dict(zip(PUBLISHED, normalize_log_minmax(list(PUBLISHED.values()))))
    assert scores["skinny-tk2"] == 1.0 and scores["blake2s"] == 0.0


def test_log_printed_variant_kept_for_audit():
    vals = [1, 10, 100]
    printed = normalize_log_minmax(vals, variant=metrics.LOG_PRINTED)
    # log(x * 1) / log(100) coincides with the ratio form only when min == 1
    assert printed == pytest.approx([0, 0.5, 1])
    shifted = normalize_log_minmax([2, 20, 200], variant=metrics.LOG_PRINTED)
    assert shifted[0] != 0.0
    with pytest.raises(InvalidArgument):
        normalize_log_minmax(vals, variant="bogus")


def test_normalization_errors_and_degenerate():
    with pytest.raises(InvalidArgument):
        normalize_log_minmax([1, 0, 2])
    with pytest.raises(InvalidArgument):
        normalize_inverted_minmax([])
    with pytest.warns(RuntimeWarning):
        assert normalize_inverted_minmax([3, 3, 3]) == [1.0, 1.0, 1.0]
    with pytest.warns(RuntimeWarning):
        assert normalize_log_minmax([7.0]) == [1.0]
    with pytest.raises(DegenerateInput):
        normalize_log_minmax([2, 2], strict=True)


positive_vectors = st.lists(st.floats(1e-6, 1e9, allow_nan=False), min_size=2, max_size=30).filter(
    lambda v: min(v) != max(v))


@given(positive_vectors)
def test_inverted_reverses_order(v):
    s = normalize_inverted_minmax(v)
    assert all(0.0 <= x <= 1.0 for x in s)
    for i in range(len(v)):
        for j in range(len(v)):
            if v[i] < v[j]:
                assert s[i] >= s[j]


@given(positive_vectors)
def test_log_preserves_order(v):
    s = normalize_log_minmax(v)
    assert all(0.0 <= x <= 1.0 for x in s)
    for i in range(len(v)):
        for j in range(len(v)):
            if v[i] < v[j]:
                assert s[i] <= s[j]


def test_report_orderings_from_reference():
    r = build_report(TABLE2.values())
    assert r.ordering[:2] == ["skinny-tk2", "clx"]
    assert r.orderings["cpb"][0] == "skinny-tk2"
    assert r.orderings["cpb"][-1] == "subterranean"
    assert sorted(r.ordering) == sorted(TABLE2)
    for row in r.rows:
        assert all(0.0 <= v <= 1.0 for v in row.normalized.values())


def test_report_two_records_single_metric():
    recs = [rec("a", 10, 1, 1, 1), rec("b", 5, 1, 1, 1)]
    r = build_report(recs, metrics=["cpb"], active_metric="cpb")
    assert r.ordering == ["b", "a"]
    assert r.row("b").normalized == {"cpb": 1.0}


def test_report_single_record_is_total():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        r = build_report([rec("a", 10, 1, 1, 1)])
    assert r.ordering == ["a"]
    assert set(r.row("a").normalized.values()) == {1.0}


def test_report_errors():
    with pytest.raises(InvalidArgument, match="duplicate"):
        build_report([rec("a", 1, 1, 1, 1), rec("a", 2, 1, 1, 1)])
    with pytest.raises(InvalidArgument):
        build_report([])
    with pytest.raises(InvalidArgument):
        build_report([rec("a", 1, 1, 1, 1)], metrics=["speed"])


def test_compare_against_reference_table():
    rows = compare_to_paper(list(TABLE2.values()))
    assert all(r.matched for r in rows)
    assert all(d == 0 for r in rows for d in r.deltas.values())
    assert all(r.erank_delta == 0 for r in rows)
    frag = MeasurementRecord("ascon", cpb=2531)
    [r] = compare_to_paper([frag])
    assert r.deltas["cpb"] == 0 and r.deltas["ram"] is None and r.erank_delta is None
    [r] = compare_to_paper([MeasurementRecord("ASCON", cpb=2531 * 1.1)])
    assert r.deltas["cpb"] == pytest.approx(0.1)
    [r] = compare_to_paper([MeasurementRecord("foo", cpb=1)])
    assert not r.matched


def test_report_renderings_are_deterministic():
    r1 = build_report(TABLE2.values(), published_erank=PUBLISHED)
    r2 = build_report(TABLE2.values(), published_erank=PUBLISHED)
    for render in (metrics.report_to_csv, metrics.report_to_json, metrics.report_to_svg):
        assert render(r1) == render(r2)


def test_report_json_structure():
    d = json.loads(metrics.report_to_json(build_report(TABLE2.values())))
    assert d["active_metric"] == "erank" and d["log_variant"] == "ratio"
    assert len(d["rows"]) == 24 and d["rows"][0]["spec_id"] == "skinny-tk2"
    assert d["orderings"]["cpb"][0] == "skinny-tk2"


def _luminance(hex_color):
    r, g, b = (int(hex_color[i:i + 2], 16) for i in (1, 3, 5))
    return 0.2126 * r + 0.7152 * g + 0.0722 * b


def test_svg_heatmap_skinny_darkest_in_erank_column():
    svg = metrics.report_to_svg(build_report(TABLE2.values()))
    root = ET.fromstring(svg)
    cells = [e for e in root.iter() if e.tag.endswith("rect") and e.get("data-metric") == "erank"]
    assert len(cells) == 24
    darkest = min(cells, key=lambda e: _luminance(e.get("fill")))
    assert darkest.get("data-spec") == "skinny-tk2"


def test_shade_endpoints():
    assert metrics.shade(0) == "#f7fbff"
    assert metrics.shade(1) == "#08306b"
    assert _luminance(metrics.shade(0.7)) < _luminance(metrics.shade(0.3))


def test_records_from_csv_aliases_and_blanks():
    text = "spec_id,cpb_median,ram_bytes,rom,energy_nj,source\nascon,12.5,,2648,,Measured\n"
    [r] = metrics.records_from_csv(text)
    assert (r.cpb, r.ram_bytes, r.rom_bytes, r.energy_nj) == (12.5, None, 2648, None)


def test_erank_matches_published_column():
    for k, r in TABLE2.items():
        assert math.isclose(erank(r), PUBLISHED[k], abs_tol=0.01) or \
            math.isclose(erank(r), PUBLISHED[k], rel_tol=0.02)
