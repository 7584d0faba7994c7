import pytest

from strongquot.corpus import CORPUS, build_corpus, corpus_ring
from strongquot.errors import SpecParseError
from strongquot.ringspec import format_ring, is_constructor, load_ring, parse_ring_text, parse_table_text

Z2 = """\
# the two-element field
ring F2 size 2
zero 0 one 1
add:
0 1
1 0
mul:
0 0
0 1
"""


def test_parse_small_table():
    R = parse_table_text(Z2)
    assert R.size == 2 and R.label == "F2"


@pytest.mark.parametrize("name", [e.name for e in CORPUS])
def test_format_roundtrip(name):
    R = corpus_ring(name)
    back = parse_ring_text(format_ring(R))
    assert back.digest == R.digest


@pytest.mark.parametrize("text,line,fragment", [
    ("", 1, "empty"),
    ("ring X size\n", 1, "header"),
    ("ring X size 2\nzero 0\n", 2, "zero"),
    ("ring X size 2\nzero 0 one 1\nadd:\n0 1\n1\n", 5, "entries"),
    ("ring X size 2\nzero 0 one 1\nadd:\n0 1\n1 7\n", 5, "out of range"),
    ("ring X size 2\nzero 0 one 1\nadd:\n0 1\n1 0\nmul:\n0 0\n0 x\n", 8, "integer"),
    ("ring X size 2\nzero 0 one 1\nadd:\n0 1\n1 0\nmul:\n0 0\n0 1\n9\n", 9, "trailing"),
    ("ring X size 2\nzero 0 one 1\nadd:\n0 1\n1 0\n", 5, "end of input"),
    ("ring X size 2\nzero 0 one 1\nadd:\n0 0\n0 0\nmul:\n0 0\n0 1\n", 1, "do not define a ring"),
])
def test_parse_errors_carry_line(text, line, fragment):
    with pytest.raises(SpecParseError) as info:
        parse_table_text(text, "t.ring")
    assert info.value.line == line
    assert fragment in str(info.value)
    assert str(info.value).startswith(f"t.ring:{line}:")


class TestConstructors:
    def test_forms(self):
        assert load_ring("cyclic 6").size == 6
        assert load_ring("gf 4").size == 4
        assert load_ring("matrix lower 2 gf 2").size == 8
        assert load_ring("matrix full 2 gf 2").size == 16
        assert load_ring("product gf 2 ; cyclic 3").size == 6

    def test_quotient_uses_generated_two_sided_ideal(self):
        R = load_ring("cyclic 12")
        Q = load_ring("quotient cyclic 12 ideal 4")
        assert Q.size == 4 and Q.is_commutative
        assert R.size // Q.size == 3

    def test_quotient_of_noncommutative(self):
        R = load_ring("matrix lower 2 gf 2")
        nz = [x for x in R.elements if R.structure.entry(x, 2, 1) != 0 and R.structure.entry(x, 1, 1) == 0
              and R.structure.entry(x, 2, 2) == 0]
        Q = load_ring(f"quotient matrix lower 2 gf 2 ideal {nz[0]}")
        assert Q.size == 4 and Q.is_commutative

    def test_product_of_files(self, tmp_path):
        (tmp_path / "f2.ring").write_text(Z2)
        (tmp_path / "p.ring").write_text("product f2.ring f2.ring\n")
        assert load_ring(str(tmp_path / "p.ring")).size == 4

    @pytest.mark.parametrize("text", [
        "cyclic", "gf 6", "matrix diag 2 gf 2", "product gf 2", "quotient cyclic 4", "quotient cyclic 4 ideal 9",
        "cyclic 4\ncyclic 5",
    ])
    def test_bad_constructors(self, text):
        with pytest.raises(SpecParseError):
            parse_ring_text(text)

    def test_is_constructor(self):
        assert is_constructor("cyclic 4") and is_constructor("  gf 3  # field")
        assert not is_constructor(Z2)

    def test_missing_file(self):
        with pytest.raises(SpecParseError):
            load_ring("/nonexistent/ring.txt")


def test_corpus_build_reloads_with_same_digests(tmp_path):
    paths = build_corpus(tmp_path)
    assert len(paths) == len(CORPUS)
    for entry in CORPUS:
        R = load_ring(str(tmp_path / entry.filename))
        assert R.digest == corpus_ring(entry.name).digest
        assert load_ring(entry.constructor).digest == R.digest
