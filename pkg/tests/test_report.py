import io

from yarts import cache, report


def test_dumps_is_sorted_and_stable():
    a = report.make_report("build", {"b": 1, "a": 2}, {"z": 1, "y": [1, 2]})
    b = report.make_report("build", {"a": 2, "b": 1}, {"y": [1, 2], "z": 1})
    assert report.dumps(a) == report.dumps(b)
    assert report.dumps(a).index('"a"') < report.dumps(a).index('"b"')


def test_summary():
    rep = report.make_report("nuclei", {}, {"nuclei": {"left": 27, "method": "spreadset"}, "lines": list(range(20))})
    out = io.StringIO()
    report.print_summary(rep, 1.0, file=out)
    lines = out.getvalue().splitlines()
    assert lines[0] == "yarts nuclei"
    assert "    left: 27" in lines
    assert "  lines: [20 items]" in lines
    assert lines[-1] == "  (1.0s)"


def test_summary_follows_redirected_stdout(capsys):
    rep = report.make_report("build", {}, {"label": "dA"})
    report.print_summary(rep, 0.5)
    assert capsys.readouterr().out.splitlines()[:2] == ["yarts build", "  label: dA"]


def test_cache(monkeypatch, tmp_path):
    monkeypatch.setenv("YARTS_CACHE_DIR", str(tmp_path))
    cache.set_enabled(True)
    key = cache.cache_key("test", b"\x00\x01", (3, 3))
    assert key.startswith("test-")
    assert cache.get_cache(key) is None
    cache.set_cache(key, {"lines": [1, 2]})
    assert cache.get_cache(key) == {"lines": [1, 2]}
    cache.set_enabled(False)
    assert cache.get_cache(key) is None
