import pytest

from nilwitness import (
    GF,
    Q,
    AddMul,
    Matrix,
    ParseError,
    RowScript,
    Scale,
    Swap,
    matrix_to_text,
    parse_matrix,
    parse_matrix_stream,
    parse_script,
    script_to_text,
)

from helpers import GF5, qmat, random_matrix, random_script


def test_parse_basic_rational_matrix():
    text = "Q\n2 3\n1 -1/2 0\n3 4 5/6\n"
    m = parse_matrix(text)
    assert m.field == Q
    assert (m.nrows, m.ncols) == (2, 3)
    assert m.entry(1, 2) == Q.scalar(-1, 2)
    assert m.entry(2, 3) == Q.scalar(5, 6)


def test_parse_gf_matrix():
    m = parse_matrix("GF 5\n2 2\n7 -1\n0 3\n")
    assert m.field == GF(5)
    assert m.entry(1, 1) == GF(5).scalar(2)
    assert m.entry(1, 2) == GF(5).scalar(4)


def test_comments_and_blank_lines_skipped():
    text = "# a comment\n\nQ\n# dims next\n2 2\n\n1 0\n  # indented comment\n0 1\n"
    assert parse_matrix(text) == Matrix.identity(Q, 2)


def test_serialization_round_trip(rng):
    for field in (Q, GF5):
        for _ in range(40):
            m = random_matrix(rng, field, rng.randint(1, 5), rng.randint(1, 5))
            assert parse_matrix(matrix_to_text(m)) == m


def test_serialization_is_canonical():
    m = parse_matrix("Q\n1 2\n2/4 -6/4\n")
    assert matrix_to_text(m) == "Q\n1 2\n1/2 -3/2"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "R\n1 1\n0\n",
        "GF 4\n1 1\n0\n",
        "GF x\n1 1\n0\n",
        "Q\n1\n0\n",
        "Q\n0 2\n",
        "Q\n2 2\n1 0\n",
        "Q\n1 2\n1 2 3\n",
        "Q\n1 1\n1/0\n",
        "Q\n1 1\nz\n",
        "Q\n1 1\n1\nextra\n",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_stream_parses_concatenated_blocks():
    blocks = "Q\n1 1\n4\n\nGF 3\n2 1\n1\n2\n"
    parsed = parse_matrix_stream(blocks)
    assert len(parsed) == 2
    assert parsed[0] == Matrix(Q, [[4]])
    assert parsed[1] == Matrix(GF(3), [[1], [2]])
    assert parse_matrix_stream("# nothing here\n") == []


def test_script_round_trip(rng):
    for field in (Q, GF5):
        for _ in range(40):
            script = random_script(rng, field, rng.randint(2, 5), length=rng.randint(0, 8))
            assert parse_script(script_to_text(script), field) == script


def test_script_text_format():
    script = RowScript([Swap(1, 3), Scale(2, Q.scalar(-1, 2)), AddMul(3, Q.scalar(5), 1)])
    assert script_to_text(script) == "swap 1 3\nscale 2 -1/2\naddmul 3 5 1"
    assert parse_script("# note\nswap 1 3\n\nscale 2 -1/2\naddmul 3 5 1\n", Q) == script


@pytest.mark.parametrize(
    "line",
    [
        "swap 1 1",
        "swap 1",
        "swap 0 2",
        "scale 1 0",
        "scale 1 1/0",
        "scale 1 x",
        "addmul 2 1 2",
        "addmul 2 1",
        "rotate 1 2",
    ],
)
def test_script_rejects_malformed(line):
    with pytest.raises(ParseError):
        parse_script(line, Q)


def test_script_coefficients_parse_in_matrix_field():
    script = parse_script("scale 1 7", GF(5))
    assert script.ops[0] == Scale(1, GF(5).scalar(2))
    with pytest.raises(ParseError):
        parse_script("scale 1 5", GF(5))  # zero mod 5 cannot scale


def test_empty_script_round_trip():
    assert script_to_text(RowScript()) == ""
    assert parse_script("", Q) == RowScript()


def test_kernel_blocks_reparse():
    t = qmat([[1, 0, 2], [0, 1, 3], [0, 0, 0]])
    from nilwitness import null_space_basis

    basis = null_space_basis(t)
    text = "\n\n".join(matrix_to_text(v) for v in basis.vectors)
    assert parse_matrix_stream(text) == list(basis.vectors)
