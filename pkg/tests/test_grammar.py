import pytest
from hypothesis import given, settings, strategies as st

from irratio.grammar import (
    MAX_DEPTH,
    GroupSpecNode,
    Matrix,
    Perm,
    Poly,
    SpecError,
    build,
    parse_group_spec,
)
from irratio.suites import CATALOG


@pytest.mark.parametrize("spec", CATALOG)
def test_catalog_roundtrip(spec):
    node = parse_group_spec(spec)
    assert str(node) == spec
    assert parse_group_spec(str(node)) == node


@pytest.mark.parametrize("text,canon", [
    ("elemab(2,3)", "elementary_abelian(2,3)"),
    ("sz(8)", "suzuki(8)"),
    ("semidirect(elemab(5,2), cyclic(3), [[0,4],[1,4]])",
     "semidirect_product(elementary_abelian(5,2),cyclic(3),[[0,4],[1,4]])"),
    ("winter(cyclic_perm(3), 5)", "winter_extension(cyclic_perm(3),5)"),
    ("perm(4, (1 2 3 4), (1 3))", "perm_group(4,(1 2 3 4),(1 3))"),
])
def test_aliases(text, canon):
    assert str(parse_group_spec(text)) == canon


def _cycles(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j + 1)
            j = perm[j]
        out.append(tuple(c))
    return tuple(out)


perm_nodes = st.permutations(list(range(5))).map(lambda p: Perm(_cycles(p))).filter(lambda p: p.cycles)
polys = st.tuples(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), min_size=1, max_size=3)).map(
    lambda t: Poly(tuple(c % t[0] for c in t[1]) + (1,), t[0]))


def _matrix(rows, p):
    # the parser reduces entries mod p, so generate reduced ones
    return Matrix(tuple(tuple(x % p if p else x for x in r) for r in rows), p)


mats = st.tuples(st.sampled_from([None, 3, 5]), st.integers(1, 3)).flatmap(
    lambda t: st.lists(st.lists(st.integers(0, 4), min_size=t[1], max_size=t[1]), min_size=t[1], max_size=t[1]).map(
        lambda rows: _matrix(rows, t[0])))
leaves = st.one_of(
    st.integers(1, 30).map(lambda n: GroupSpecNode("cyclic", (n,))),
    st.integers(1, 6).map(lambda n: GroupSpecNode("dihedral", (2 * n,))),
    st.integers(1, 3).map(lambda n: GroupSpecNode("extraspecial", (3, n))),
    st.lists(perm_nodes, min_size=1, max_size=3).map(lambda ps: GroupSpecNode("perm_group", (5, *ps))),
)
matrix_args = st.one_of(mats, polys.map(lambda p: GroupSpecNode("companion", (p,))))


def _compound(children):
    return st.one_of(
        st.lists(children, min_size=1, max_size=3).map(lambda cs: GroupSpecNode("direct_product", tuple(cs))),
        st.tuples(children, children, st.lists(matrix_args, max_size=2)).map(
            lambda t: GroupSpecNode("semidirect_product", (t[0], t[1], *t[2]))),
        st.tuples(children, st.integers(2, 7)).map(lambda t: GroupSpecNode("winter_extension", t)),
    )


trees = st.recursive(leaves, _compound, max_leaves=8).filter(lambda n: n.depth() <= MAX_DEPTH)


@settings(max_examples=300, deadline=None)
@given(trees)
def test_generated_trees_roundtrip(node):
    text = str(node)
    again = parse_group_spec(text)
    assert again == node
    assert str(again) == text


@pytest.mark.parametrize("text,pos", [
    ("cyclic(3", 8),
    ("cyclic(3))", 9),
    ("foo(3)", 0),
    ("perm_group(3,(1 2)(2 3))", 23),
    ("matrix_group([[1,1],[0]]@GF(5))", 13),
])
def test_error_positions(text, pos):
    with pytest.raises(SpecError) as info:
        parse_group_spec(text)
    assert info.value.pos == pos


def test_arity_and_constructor_errors():
    for bad in ("cyclic(1,2)", "x(1)", "cyclic()", "direct_product(3)"):
        with pytest.raises(SpecError):
            parse_group_spec(bad)


def test_depth_limit():
    s = "cyclic(2)"
    for _ in range(MAX_DEPTH - 1):
        s = f"direct_product({s},cyclic(2))"
    assert parse_group_spec(s).depth() == MAX_DEPTH
    with pytest.raises(SpecError):
        parse_group_spec(f"direct_product({s},cyclic(2))")


def test_build_sets_canonical_spec():
    G = build("semidirect(elemab(5,2), cyclic(3), [[0,4],[1,4]])")
    assert G.spec == "semidirect_product(elementary_abelian(5,2),cyclic(3),[[0,4],[1,4]])"
    assert G.order == 75
    assert build(G.spec).order == 75


def test_matrix_group_over_extension_field():
    G = build("matgroup([[1,1],[0,1]]@GF(3), [[0,1],[2,0]]@GF(3), [[2,0],[0,1]]@GF(3))")
    assert G.order == 48
