import pytest

from engel_lab.core.elements import CMarker, LieElt, gen, zelt
from engel_lab.exprs import ExprError, evaluate, parse, pretty


Z = ("z",)


def test_left_normed_sugar():
    assert parse("[z,c1,c2]") == ("br", ("br", Z, ("c", 1)), ("c", 2))


def test_binary_tree():
    assert parse("[[z,c1],[z,c2]]") == (
        "br",
        ("br", Z, ("c", 1)),
        ("br", Z, ("c", 2)),
    )


def test_scalars():
    assert parse("3*z") == ("scale", 3, Z)
    assert parse("2*[z,c1]") == ("scale", 2, ("br", Z, ("c", 1)))
    assert parse("2*3*z") == ("scale", 2, ("scale", 3, Z))


def test_whitespace_and_multidigit():
    assert parse(" [ z , c12 ] ") == ("br", Z, ("c", 12))


@pytest.mark.parametrize(
    "src",
    ["z", "c3", "[z,c1]", "[z,c1,c2,c3]", "[[z,c1],[z,c2],c4]", "7*[z,2*c1]"],
)
def test_round_trip(src):
    ast = parse(src)
    assert parse(pretty(ast)) == ast


def test_pretty_resugars():
    assert pretty(parse("[[z,c1],c2]")) == "[z,c1,c2]"
    assert pretty(parse("[z,[c1,c2]]")) == "[z,[c1,c2]]"


@pytest.mark.parametrize(
    "src, col",
    [
        ("[z,,", 4),
        ("q", 1),
        ("[z]", 3),
        ("3z", 2),
        ("z z", 3),
        ("[z,c1]]", 7),
    ],
)
def test_error_positions(src, col):
    with pytest.raises(ExprError) as exc:
        parse(src)
    assert exc.value.col == col
    assert exc.value.line == 1


def test_error_line_tracking():
    with pytest.raises(ExprError) as exc:
        parse("[z,\n,")
    assert exc.value.line == 2
    assert exc.value.col == 1


def test_missing_c_index():
    with pytest.raises(ExprError):
        parse("[z,c]")


def test_zero_c_index():
    with pytest.raises(ExprError):
        parse("[z,c0]")


def test_evaluate_words():
    assert evaluate(parse("z")) == zelt()
    assert evaluate(parse("c4")) == CMarker(4)
    assert evaluate(parse("[z,c1,c2]")) == gen((1, 2))
    assert evaluate(parse("[c1,z]")) == -gen((1,))
    assert evaluate(parse("[c1,c2]")) == LieElt()
    assert evaluate(parse("3*[z,c2]")) == 3 * gen((2,))
    assert evaluate(parse("2*c5")) == CMarker(5, coeff=2)
    assert evaluate(parse("[z,2*c5]")) == 2 * gen((5,))
