import pytest

from hypothesis import given, strategies as st

from retakh import path_utils
from retakh.path_utils import DyckPath, PlaneTree
from retakh.errors import BudgetExceededError, DomainError, InvalidPathError

SEVEN = list(path_utils.enumerate_words(7))


# ##### #
# PATHS #
# ##### #

def test_parse_and_render():
    path = DyckPath.from_string('UUDD')
    assert path.to_string() == 'UUDD'
    assert path.semilength == 2
    assert path.levels() == [0, 1, 2, 1, 0]
    with pytest.raises(InvalidPathError):
        DyckPath.from_string('UXD')


@pytest.mark.parametrize('word, valid', [
    ('', True),
    ('UD', True),
    ('UUDD', True),
    ('DU', False),
    ('UUD', False),
    ('UDD', False)
])
def test_validate(word, valid):
    assert path_utils.validate(DyckPath.from_string(word)) is valid


@pytest.mark.parametrize('word, restricted', [
    ('', True),
    ('UD', True),
    ('UUDD', True),
    ('UUUDDD', False),
    ('UUDUDD', True),
    ('UUUUDDDD', True),
    ('UUUUDUDDDD', True),
    ('UUUDUUDDDD', False)
])
def test_peak_restriction(word, restricted):
    assert path_utils.is_retakh(DyckPath.from_string(word)) is restricted


def test_peaks_need_valid_path():
    with pytest.raises(InvalidPathError):
        path_utils.peaks(DyckPath.from_string('DU'))


def test_figure_path_stats(figure_path):
    assert path_utils.is_retakh(figure_path)
    assert path_utils.peaks(figure_path) == [(0, 1), (5, 4), (9, 6), (16, 1), (18, 1)]

    path_stats = path_utils.stats(figure_path)
    assert path_stats.height == 6
    assert path_stats.leaf_count == 5


def test_empty_path_is_a_single_leaf():
    path_stats = path_utils.stats(DyckPath())
    assert path_stats.height == 0
    assert path_stats.peaks == []
    assert path_stats.leaf_count == 1


# ##### #
# TREES #
# ##### #

def test_figure_path_tree(figure_path):
    tree = path_utils.path_to_tree(figure_path)
    assert tree.node_count == 11
    assert len(tree.children) == 4
    assert tree.height == 6
    assert tree.leaf_count == 5
    assert path_utils.tree_to_path(tree) == figure_path


def test_parentheses():
    tree = PlaneTree.from_parentheses('(()(()))')
    assert tree.node_count == 4
    assert tree.leaf_count == 2
    assert tree.height == 2
    assert tree.to_parentheses() == '(()(()))'
    assert PlaneTree.from_parentheses('()') == PlaneTree()
    with pytest.raises(InvalidPathError):
        PlaneTree.from_parentheses('(()')


def test_deep_tree_does_not_recurse():
    path = DyckPath.from_string('U' * 5000 + 'D' * 5000)
    tree = path_utils.path_to_tree(path)
    assert tree.height == 5000
    assert path_utils.tree_to_path(tree) == path


@given(st.sampled_from(SEVEN))
def test_bijection_preserves_statistics(word):
    path = DyckPath.from_string(word)
    tree = path_utils.path_to_tree(path)
    path_stats = path_utils.stats(path)

    assert path_utils.tree_to_path(tree) == path
    assert tree.node_count == 8
    assert tree.height == path_stats.height
    assert tree.leaf_count == path_stats.leaf_count
    assert PlaneTree.from_parentheses(tree.to_parentheses()) == tree


# ########### #
# ENUMERATION #
# ########### #

def test_enumeration_order():
    assert list(path_utils.enumerate_words(3)) == ['UUDUDD', 'UUDDUD', 'UDUUDD', 'UDUDUD']
    assert list(path_utils.enumerate_words(0)) == ['']


def test_enumeration_is_lexicographic_and_restricted():
    assert SEVEN == sorted(SEVEN, key=lambda w: w.replace('U', '0').replace('D', '1'))
    assert len(set(SEVEN)) == len(SEVEN)
    assert all(path_utils.is_retakh(p) for p in path_utils.enumerate_restricted(7))


def test_counts_are_motzkin(motzkin_numbers):
    for n in range(11):
        assert path_utils.count_restricted(n) == motzkin_numbers[n]


def test_parallel_count(motzkin_numbers):
    assert path_utils.count_restricted(8, processes=2, prefix_depth=4) == motzkin_numbers[8]
    assert path_utils.count_restricted(8, processes=3, prefix_depth=20) == motzkin_numbers[8]


class FailingPool(object):
    opened = []

    def __init__(self, processes):
        self.processes = processes
        self.closed = False
        FailingPool.opened.append(self)

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.closed = True
        return False

    def map(self, func, data_ins):
        raise RuntimeError('worker failed')


def test_pool_closed_when_worker_fails(monkeypatch):
    FailingPool.opened.clear()
    monkeypatch.setattr(path_utils, 'Pool', FailingPool)
    with pytest.raises(RuntimeError):
        path_utils.count_restricted(8, processes=2)
    assert [pool.closed for pool in FailingPool.opened] == [True]


def test_budget():
    with pytest.raises(BudgetExceededError):
        path_utils.count_restricted(11, budget=10)
    with pytest.raises(BudgetExceededError):
        path_utils.height_histogram(15)
    with pytest.raises(DomainError):
        path_utils.count_restricted(-1)
    with pytest.raises(DomainError):
        path_utils.count_restricted(3, processes=0)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv('RETAKH_BUDGET', '5')
    with pytest.raises(BudgetExceededError):
        path_utils.leaf_histogram(6)
    assert path_utils.leaf_histogram(6, budget=6)


# ####### #
# ORACLES #
# ####### #

@pytest.mark.parametrize('n, expected', [
    (0, {0: 1}),
    (1, {1: 1}),
    (2, {1: 1, 2: 1}),
    (3, {1: 1, 2: 3}),
    (5, {1: 1, 2: 15, 4: 5})
])
def test_height_histogram(n, expected):
    assert path_utils.height_histogram(n) == expected


def test_height_at_most_two():
    for n in range(1, 11):
        hist = path_utils.height_histogram(n)
        assert hist[1] + hist.get(2, 0) == 2 ** (n - 1)


def test_heights_above_one_are_even():
    for n in range(11):
        assert all(h < 2 or h % 2 == 0 for h in path_utils.height_histogram(n))


def test_total_heights():
    assert path_utils.total_even_height(5) == 50
    assert path_utils.total_height(5) == 51


def test_total_leaves():
    assert [path_utils.total_leaves(n) for n in range(7)] == [1, 1, 3, 9, 25, 70, 196]
    assert path_utils.leaf_histogram(0) == {1: 1}
    assert path_utils.leaf_histogram(2) == {1: 1, 2: 1}
