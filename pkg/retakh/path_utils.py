"""
This module contains the combinatorial objects: Dyck paths with the
peak restriction (peaks on level 1 or on even levels only), plane trees,
the standard bijection between them, and the exhaustive enumeration used
as an oracle for the generating functions.
"""
import time
import functools

from enum import Enum
from typing import List, Tuple
from dataclasses import dataclass
from collections import Counter
from multiprocessing import Pool

from retakh import constants
from retakh import common_utils
from retakh.errors import BudgetExceededError, DomainError, InvalidPathError


def peak_level_allowed(level):
    """ True if a peak may sit on this level (level 1 or an even level).

    :param level: (int) level reached by the up step of the peak
    :return: (bool)
    """
    return level == 1 or level % 2 == 0


# ##### #
# PATHS #
# ##### #

class Step(str, Enum):
    UP = 'U'
    DOWN = 'D'


@dataclass(frozen=True)
class DyckPath:
    """ Sequence of up and down steps. Not necessarily valid, see validate(). """

    steps: Tuple[Step, ...] = ()

    @classmethod
    def from_string(cls, word):
        """ Parse a word over the alphabet {U, D}.

        :param word: (str) step string, '' is the empty path
        :return: (DyckPath) parsed path
        """

        try:
            return cls(tuple(Step(c) for c in word))
        except ValueError:
            raise InvalidPathError('Paths are words over U and D, got {!r}'.format(word))

    def to_string(self):
        return ''.join(s.value for s in self.steps)

    def __str__(self):
        return self.to_string()

    @property
    def semilength(self):
        return len(self.steps) // 2

    def levels(self):
        """ Levels visited, starting with level 0 before the first step.

        :return: (list) len(steps) + 1 levels
        """

        out = [0]
        for s in self.steps:
            out.append(out[-1] + (1 if s is Step.UP else -1))
        return out

    def height(self):
        return max(self.levels())


@dataclass(frozen=True)
class PathStats:
    height: int
    peaks: List[Tuple[int, int]]
    leaf_count: int


def validate(path):
    """ True iff the path never goes below level 0 and ends on level 0.

    :param path: (DyckPath) path to check
    :return: (bool)
    """

    levels = path.levels()
    return min(levels) >= 0 and levels[-1] == 0


def _require_valid(path):
    if not validate(path):
        raise InvalidPathError('Not a Dyck path: {!r}'.format(path.to_string()))


def peaks(path):
    """ Positions of the peaks: an up step immediately followed by a down step.

    :param path: (DyckPath) valid path
    :return: (list) (index of the up step, level after it) pairs
    """

    _require_valid(path)

    levels = path.levels()
    steps = path.steps
    return [
        (i, levels[i + 1])
        for i in range(len(steps) - 1)
        if steps[i] is Step.UP and steps[i + 1] is Step.DOWN
    ]


def is_retakh(path):
    """ True iff every peak lies on level 1 or on an even level.

    :param path: (DyckPath) valid path
    :return: (bool)
    """
    return all(peak_level_allowed(level) for _, level in peaks(path))


def stats(path):
    """ Height, peaks and leaf count of a path (leaf count of its tree).

    The empty path is the single node tree: height 0, no peaks, one leaf.

    :param path: (DyckPath) valid path
    :return: (PathStats)
    """

    path_peaks = peaks(path)
    leaf_count = len(path_peaks) if path.steps else 1
    return PathStats(height=path.height(), peaks=path_peaks, leaf_count=leaf_count)


# ##### #
# TREES #
# ##### #

class PlaneTree(object):
    """ Rooted tree with ordered children. Serializes as balanced parentheses. """

    __slots__ = ('children',)

    def __init__(self, children=None):
        self.children = list(children) if children else []

    @classmethod
    def from_parentheses(cls, text):
        """ Parse '(' children ')' notation, e.g. '(()())' is a root with two leaves.

        :param text: (str) balanced parentheses string
        :return: (PlaneTree)
        """

        if len(text) < 2 or text[0] != '(' or text[-1] != ')':
            raise InvalidPathError('Not a tree: {!r}'.format(text))
        inner = text[1:-1]
        if set(inner) - {'(', ')'}:
            raise InvalidPathError('Not a tree: {!r}'.format(text))
        return path_to_tree(DyckPath.from_string(inner.replace('(', 'U').replace(')', 'D')))

    def to_parentheses(self):
        word = tree_to_path(self).to_string()
        return '(' + word.replace('U', '(').replace('D', ')') + ')'

    def _nodes(self):
        stack = [(self, 0)]
        while stack:
            node, depth = stack.pop()
            yield node, depth
            stack.extend((child, depth + 1) for child in node.children)

    @property
    def node_count(self):
        return sum(1 for _ in self._nodes())

    @property
    def height(self):
        """ Height counted in edges. """
        return max(depth for _, depth in self._nodes())

    @property
    def leaf_count(self):
        return sum(1 for node, _ in self._nodes() if not node.children)

    def __eq__(self, other):
        if not isinstance(other, PlaneTree):
            return NotImplemented
        return self.to_parentheses() == other.to_parentheses()

    def __hash__(self):
        return hash(self.to_parentheses())

    def __repr__(self):
        return 'PlaneTree({!r})'.format(self.to_parentheses())


def path_to_tree(path):
    """ Standard bijection: an up step opens a new child, a down step returns.

    :param path: (DyckPath) valid path of semilength n
    :return: (PlaneTree) tree with n + 1 nodes
    """

    _require_valid(path)

    root = PlaneTree()
    stack = [root]
    for s in path.steps:
        if s is Step.UP:
            child = PlaneTree()
            stack[-1].children.append(child)
            stack.append(child)
        else:
            stack.pop()
    return root


def tree_to_path(tree):
    """ Inverse of path_to_tree: preorder walk, up into a child, down back.

    :param tree: (PlaneTree) tree with n + 1 nodes
    :return: (DyckPath) path of semilength n
    """

    steps = []
    stack = [iter(tree.children)]
    while stack:
        child = next(stack[-1], None)
        if child is None:
            stack.pop()
            if stack:
                steps.append(Step.DOWN)
        else:
            steps.append(Step.UP)
            stack.append(iter(child.children))
    return DyckPath(tuple(steps))


# ########### #
# ENUMERATION #
# ########### #

# A partial path is tracked as (ups, downs, height, peaks, last step was up)
_START = (0, 0, 0, 0, False)


def _successors(state, n):
    """ States one step further that still respect the peak restriction.

    Ordered with the up step last, so that popping from a stack explores
    up before down (lexicographic order U < D).
    """

    ups, downs, height, peak_count, last_up = state
    level = ups - downs
    out = []
    if level > 0:
        if not last_up:
            out.append((ups, downs + 1, height, peak_count, False))
        elif peak_level_allowed(level):
            out.append((ups, downs + 1, height, peak_count + 1, False))
    if ups < n:
        out.append((ups + 1, downs, max(height, level + 1), peak_count, True))
    return out


def _tally_from(n, state, tally):
    """ Add the (height, peaks) of every completion of a partial path to tally. """

    stack = [state]
    while stack:
        state = stack.pop()
        if state[1] == n:
            tally[(state[2], state[3])] += 1
            continue
        stack.extend(_successors(state, n))
    return tally


def _prefix_states(n, depth):
    """ All restricted prefixes of length min(depth, 2n), lexicographic order. """

    depth = min(depth, 2 * n)
    out = []
    stack = [_START]
    while stack:
        state = stack.pop()
        if state[0] + state[1] == depth:
            out.append(state)
            continue
        stack.extend(_successors(state, n))
    return out


def count_worker(data_in):
    """ Worker process counting the completions of its prefixes.

    :param data_in: (tuple) semilength and list of prefix states
    :return: (Counter) (height, peaks) -> number of completed paths
    """

    n = data_in[0]
    prefixes = data_in[1]
    tally = Counter()

    for state in prefixes:
        _tally_from(n, state, tally)

    return tally


def check_semilength(n, budget=None):
    if type(n) is not int or n < 0:
        raise DomainError('Semilength must be a non negative integer, got {!r}'.format(n))
    budget = common_utils.resolve_budget(budget)
    if n > budget:
        raise BudgetExceededError(
            'Semilength {} exceeds the exhaustive enumeration budget {}'.format(n, budget)
        )


def enumerate_words(n):
    """ Restricted paths of semilength n as U/D strings, lexicographic order.

    :param n: (int) semilength
    :return: (iterator) step strings
    """

    if type(n) is not int or n < 0:
        raise DomainError('Semilength must be a non negative integer, got {!r}'.format(n))

    stack = [('', 0, False)]
    while stack:
        word, level, last_up = stack.pop()
        if len(word) == 2 * n:
            yield word
            continue
        ups = (len(word) + level) // 2
        if level > 0 and (not last_up or peak_level_allowed(level)):
            stack.append((word + 'D', level - 1, False))
        if ups < n:
            stack.append((word + 'U', level + 1, True))


def enumerate_restricted(n):
    """ Every restricted path of semilength n exactly once, lexicographic order.

    :param n: (int) semilength
    :return: (iterator) DyckPath objects
    """

    for word in enumerate_words(n):
        yield DyckPath.from_string(word)


def count_restricted(n, processes=1, prefix_depth=None, budget=None):
    """ Count restricted paths by exhaustive enumeration.

    The prefixes of length prefix_depth are dealt round robin to a pool of
    worker processes; the count does not depend on the partition.

    :param n: (int) semilength
    :param processes: (int) number of worker processes, 1 runs in process
    :param prefix_depth: (int) length of the distributed prefixes
    :param budget: (int) exhaustive budget, None for the configured one
    :return: (int) number of restricted paths
    """

    check_semilength(n, budget)
    if processes < 1:
        raise DomainError('Need at least one process, got {}'.format(processes))
    if prefix_depth is None:
        prefix_depth = constants.DEFAULT_PREFIX_DEPTH

    if processes == 1:
        return sum(_joint_tally(n).values())

    start = time.time()

    # Enumerate the prefixes and create per-process sub-lists
    prefixes = _prefix_states(n, prefix_depth)
    prefix_sublists = [prefixes[i::processes] for i in range(processes)]

    # Create data for workers
    data_ins = [(n, sub_list) for sub_list in prefix_sublists]

    # Spawn workers and await completion
    with Pool(processes=processes) as p:
        tallies = p.map(count_worker, data_ins)

    total = sum(sum(t.values()) for t in tallies)
    common_utils.log('Counting semilength {} on {} processes took {:.2f} seconds'.format(
        n, processes, time.time() - start))
    return total


@functools.lru_cache(maxsize=None)
def _joint_tally_items(n):
    start = time.time()
    tally = _tally_from(n, _START, Counter())
    common_utils.log('Enumerating semilength {} took {:.2f} seconds'.format(n, time.time() - start))
    return tuple(sorted(tally.items()))


def _joint_tally(n):
    return Counter(dict(_joint_tally_items(n)))


# ####### #
# ORACLES #
# ####### #

def height_histogram(n, budget=None):
    """ Number of restricted paths of semilength n by height.

    :param n: (int) semilength, at most the budget
    :param budget: (int) exhaustive budget, None for the configured one
    :return: (dict) height -> count, sorted by height
    """

    check_semilength(n, budget)
    hist = Counter()
    for (height, _), count in _joint_tally(n).items():
        hist[height] += count
    return dict(sorted(hist.items()))


def leaf_histogram(n, budget=None):
    """ Number of restricted paths of semilength n by leaf count of their tree.

    :param n: (int) semilength, at most the budget
    :param budget: (int) exhaustive budget, None for the configured one
    :return: (dict) leaves -> count, sorted by leaves
    """

    check_semilength(n, budget)
    hist = Counter()
    for (_, peak_count), count in _joint_tally(n).items():
        hist[peak_count if n else 1] += count
    return dict(sorted(hist.items()))


def total_even_height(n, budget=None):
    """ Sum of the heights of the even height paths of semilength n. """
    return sum(h * c for h, c in height_histogram(n, budget).items() if h % 2 == 0)


def total_height(n, budget=None):
    """ Sum of the heights of all restricted paths of semilength n. """
    return sum(h * c for h, c in height_histogram(n, budget).items())


def total_leaves(n, budget=None):
    """ Sum of the leaf counts of all restricted paths of semilength n. """
    return sum(leaves * c for leaves, c in leaf_histogram(n, budget).items())
