import re
import xml.etree.ElementTree as ET

import pytest

from qwhittaker.fillings import Filling, enumerate_csf, inv, quinv
from qwhittaker.render import caption, lattice_diagram, to_ascii, to_svg

SVG = "{http://www.w3.org/2000/svg}"


def test_small_crossings(small_filling):
    d = lattice_diagram(small_filling)
    assert d.crossing_count == 3
    assert d.non_crossing_count == quinv(small_filling) == 2
    assert caption(d) == "inv(F)=3"


def test_small_svg(small_filling):
    root = ET.fromstring(to_svg(lattice_diagram(small_filling)))
    paths = [e for e in root.iter(f"{SVG}path") if e.get("class") == "column-path"]
    marks = [e for e in root.iter(f"{SVG}circle") if e.get("class") == "inv-crossing"]
    texts = [e.text for e in root.iter(f"{SVG}text") if e.get("class") == "caption"]
    assert len(paths) == 4
    assert len(marks) == 3
    assert texts == ["inv(F)=3"]


def test_small_ascii(small_filling):
    art = to_ascii(lattice_diagram(small_filling))
    assert art.count("*") == 3
    assert art.rstrip().splitlines()[-1] == "inv(F)=3  crossings=3  non-crossings=2"


def test_ref_filling_counts(ref_filling):
    d = lattice_diagram(ref_filling)
    assert (d.crossing_count, d.non_crossing_count) == (5, 12)


def test_single_column_has_no_crossings():
    d = lattice_diagram(Filling(3, ((1,), (2,), (3,))))
    assert d.crossing_count == 0
    assert len(re.findall('class="column-path"', to_svg(d))) == 1


def test_empty_filling():
    d = lattice_diagram(Filling(2, ()))
    assert d.crossing_count == 0
    assert "inv(F)=0" in to_ascii(d)


def test_render_rejects_non_csf():
    with pytest.raises(ValueError):
        lattice_diagram(Filling(2, ((2,), (1,))))


@pytest.mark.parametrize("lam", [(3, 2), (2, 2, 1), (4, 1)])
def test_counts_match_statistics(lam):
    for F in enumerate_csf(lam, 3):
        d = lattice_diagram(F)
        assert d.crossing_count == inv(F)
        assert d.non_crossing_count == quinv(F)
