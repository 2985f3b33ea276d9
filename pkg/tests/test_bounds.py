import pytest

from broadcastnet.bounds import bound_table, f, moore_bound, product_lower_bound

from oracles import PUBLISHED_BOUNDS, tree_growth_f


def test_f_examples():
    assert all(f(d, 0) == 1 for d in range(12))
    assert f(2, 3) == 7
    assert f(1, 4) == 5
    assert [f(2, t) for t in range(5)] == [1, 2, 4, 7, 12]


@pytest.mark.parametrize("d", range(0, 7))
def test_f_matches_tree_growth(d):
    for t in range(0, 14):
        assert f(d, t) == tree_growth_f(d, t)


def test_f_linear_for_one_call():
    assert all(f(1, t) == t + 1 for t in range(40))


def test_f_saturates_to_powers_of_two():
    for t in range(31):
        for d in range(t, t + 3):
            assert f(d, t) == 2**t


def test_moore_examples():
    assert moore_bound(3, 4) == 14
    assert moore_bound(2, 10) == 20
    assert moore_bound(10, 10) == 1024
    assert moore_bound(5, 8) == 232


def test_moore_superdiagonal():
    for d in range(2, 40):
        assert moore_bound(d, d + 1) == 2 ** (d + 1) - 2


def test_big_values_are_exact():
    assert moore_bound(200, 300) == 2 * f(199, 299)
    assert f(300, 300) == 2**300


def test_table_matches_published():
    tab = bound_table(10, 10)
    assert tab.values.shape == (9, 9)
    for d, row in PUBLISHED_BOUNDS.items():
        assert [tab[d, t] for t in range(2, 11)] == row
    assert [tab[2, t] for t in range(2, 11)] == list(range(4, 21, 2))
    assert [tab[d, d] for d in range(2, 11)] == [2**d for d in range(2, 11)]


def test_table_monotone():
    tab = bound_table(14, 16)
    v = tab.values
    for i in range(v.shape[0]):
        for j in range(v.shape[1]):
            t = tab.times[j]
            assert v[i, j] <= 2**t
            if j:
                assert v[i, j] >= v[i, j - 1]
            if i:
                assert v[i, j] >= v[i - 1, j]


def test_render():
    tab = bound_table(10, 10)
    tsv = tab.render("tsv").splitlines()
    assert len(tsv) == 10
    cells = [c for line in tsv[1:] for c in line.split("\t")[1:]]
    assert len(cells) == 81 and cells[-1] == "1024"
    pretty = tab.render("pretty").splitlines()
    # below-diagonal cells are blank in the display only
    assert pretty[2].split() == ["3", "8", "14", "24", "40", "66", "108", "176", "286"]
    assert bound_table(2, 2).render("pretty").splitlines()[1].split() == ["2", "4"]


def test_bad_ranges():
    with pytest.raises(ValueError):
        bound_table(1, 10)
    with pytest.raises(ValueError):
        moore_bound(0, 3)
    with pytest.raises(ValueError):
        f(-1, 2)


def test_product_lower_bound():
    for d in range(1, 10):
        assert product_lower_bound(2**d) == 2 ** (d + 1)
    assert product_lower_bound(14) == 28 < 30
    assert product_lower_bound(1) == 2
    with pytest.raises(ValueError):
        product_lower_bound(0)
