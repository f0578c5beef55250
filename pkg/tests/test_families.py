import pytest

from lpaspec.errors import ValidationError
from lpaspec.families import FAMILIES, e_family, figure4, line, make_family, rose, single_loop
from lpaspec.graph import enumerate_cycles


def test_rose_and_loop():
    assert rose(1) == single_loop()
    r = rose(3)
    assert r.vertices == ("v",) and [e.name for e in r.edges] == ["e1", "e2", "e3"]
    with pytest.raises(ValidationError):
        rose(0)


def test_line_shape():
    g = line(4)
    assert [(e.source, e.range) for e in g.edges] == [("v1", "v2"), ("v2", "v3"), ("v3", "v4")]
    assert line(1).edges == ()


def test_figure4_shape():
    g = figure4()
    assert len(g.vertices) == 4 and len(g.edges) == 9
    assert g.sinks == ("v2",) and g.sources == ()  # v4 receives its own loops
    assert len(enumerate_cycles(g)) == 4


def test_e_family_shape():
    g = e_family(3, [2])
    names = {e.name: (e.source, e.range) for e in g.edges}
    assert names == {"e1": ("v2", "v1"), "e2": ("v3", "v2"), "f1": ("v1", "v1"), "f2": ("v2", "v2"),
                     "f3": ("v3", "v3"), "g2": ("v2", "v2")}
    with pytest.raises(ValidationError):
        e_family(3, [4])
    with pytest.raises(ValidationError):
        e_family(0)


@pytest.mark.parametrize("args, want", [
    (("rose", "2"), rose(2)),
    (("line", 3), line(3)),
    (("loop",), single_loop()),
    (("figure4",), figure4()),
    (("E", "3", "1,3"), e_family(3, [1, 3])),
    (("e", "2"), e_family(2)),
])
def test_make_family(args, want):
    assert make_family(*args) == want


@pytest.mark.parametrize("args", [("rose",), ("line", "x"), ("loop", "1"), ("E", "2", "5"), ("cube", "3")])
def test_make_family_errors(args):
    with pytest.raises(ValidationError):
        make_family(*args)


def test_family_names():
    assert FAMILIES == ("rose", "line", "loop", "figure4", "E")
