"""Constructive maps from tree families and block fillings to pattern-avoiding parking functions."""
import logging
from functools import lru_cache
from itertools import product
from typing import List, Optional, Set, Tuple

from src.core.dyck import block_sizes, enumerate_dyck_paths
from src.core.parking import enumerate_parking_functions, from_path_and_word, reading_permutation, to_dyck
from src.core.patterns import ascent_set, avoids, direct_sum, identity, reverse_identity
from src.models.dyck_path import EAST, NORTH, DyckPath
from src.models.output_row import BijectionReport
from src.models.parking_function import ParkingFunction
from src.models.permutation import PatternSet, Permutation
from src.models.tree import NonCrossingTree, RootedOrderedTree, TreeFormatError

logger = logging.getLogger(__name__)

__all__ = [
    'BijectionError', 'TreeFormatError', 'enumerate_rooted_trees', 'tree_to_dyck', 'is_leafy',
    'enumerate_leafy_trees', 'leafy_tree_to_pf', 'enumerate_noncrossing_trees',
    'noncrossing_tree_to_pf', 'fill_312_321', 'a_triangle_members', 'catalan_triangle_step',
    'BIJECTIONS', 'run_bijection',
]

Blocks = List[Tuple[int, ...]]

# stands for a digit that is fixed later; never a real label
_PENDING = 0


class BijectionError(ValueError):
    """Input is outside the domain of a bijection."""
    pass


@lru_cache(maxsize=None)
def enumerate_rooted_trees(edges: int) -> Tuple[RootedOrderedTree, ...]:
    """All rooted ordered trees with this many edges, ordered by first-subtree size, then recursively."""
    if edges < 0:
        raise ValueError(f"Edge count must be non-negative, got {edges}")
    if edges == 0:
        return (RootedOrderedTree(),)
    trees = []
    for first_edges in range(edges):
        for first in enumerate_rooted_trees(first_edges):
            for rest in enumerate_rooted_trees(edges - 1 - first_edges):
                trees.append(RootedOrderedTree((first,) + rest.children))
    return tuple(trees)


def tree_to_dyck(tree: RootedOrderedTree) -> DyckPath:
    """f(T) = N f(T1) E f(T2), where T2 hangs from the rightmost root edge.

    Equivalently: N^deg(v) E for each vertex v in preorder, minus the final E.
    """
    if tree.is_leaf:
        return DyckPath.empty()
    steps = "".join(NORTH * node.degree + EAST for node in tree.preorder())
    return DyckPath(steps[:-1])


def is_leafy(tree: RootedOrderedTree) -> bool:
    """Every vertex is a leaf or adjacent to one.

    The root is never a leaf here, so each non-leaf vertex needs a leaf child.
    """
    if tree.is_leaf:
        return False
    return all(
        any(child.is_leaf for child in node.children)
        for node in tree.preorder()
        if not node.is_leaf
    )


def enumerate_leafy_trees(edges: int) -> List[RootedOrderedTree]:
    """Rooted ordered trees with this many edges whose internal vertices all have a leaf child."""
    if edges < 1:
        raise ValueError(f"Leafy trees need at least one edge, got {edges}")
    return [tree for tree in enumerate_rooted_trees(edges) if is_leafy(tree)]


def _leafy_blocks(tree: RootedOrderedTree) -> Blocks:
    """Recursive map on leafy trees; a single edge gives the empty parking function."""
    children = tree.children
    m = len(children)
    internal = [position for position, child in enumerate(children, 1) if not child.is_leaf]
    ell = len(internal)
    if ell == 0:
        return [(value,) for value in range(m - 1, 0, -1)]

    singles = m - ell - 1
    pieces = [_leafy_blocks(children[position - 1]) for position in internal]
    sizes = [len(piece) for piece in pieces]
    after = [sum(sizes[k + 1:]) for k in range(ell)]
    split_last = internal[0] == 1

    # underlying 12 ⊖ ... ⊖ 12 ⊖ 1 ⊖ ... ⊖ 1, ascents shifted to leave room for the subtrees
    lows = [singles + 2 * (ell - k - 1) + 1 + after[k] for k in range(ell)]
    ascents = [(low, low + 1) for low in lows]

    blocks: Blocks = []
    for k in range(ell):
        shift = 2 * (ell - k) + singles + after[k]
        blocks.extend(tuple(value + shift for value in block) for block in pieces[k])
        low, high = ascents[k]
        if split_last and k == ell - 1:
            blocks.append((low,))
        else:
            blocks.append((low, high))

    tail_values = list(range(singles, 0, -1))
    if split_last:
        tail_values.insert(0, ascents[-1][1])
    values = iter(tail_values)
    # the last m-1 root edges decide the tail: internal edge -> empty block
    for child in children[1:]:
        blocks.append((next(values),) if child.is_leaf else ())
    return blocks


def leafy_tree_to_pf(tree: RootedOrderedTree) -> ParkingFunction:
    """Map a leafy tree with n+1 >= 2 edges to a {123,132,213}-avoiding parking function of size n.

    Raises:
        BijectionError: tree is not leafy or has fewer than 2 edges
    """
    if tree.edge_count < 2:
        raise BijectionError(f"Leafy map needs at least 2 edges, got {tree.edge_count}")
    if not is_leafy(tree):
        raise BijectionError(f"Tree {tree} has a vertex that is neither a leaf nor next to one")
    return ParkingFunction(tuple(_leafy_blocks(tree)))


def enumerate_noncrossing_trees(n: int) -> List[NonCrossingTree]:
    """Every (ordered tree, placement choices) pair with n edges."""
    if n < 1:
        raise ValueError(f"Non-crossing trees need n >= 1 edges, got {n}")
    result = []
    for tree in enumerate_rooted_trees(n):
        degrees = [node.degree for node in tree.preorder()[1:] if not node.is_leaf]
        for choices in product(*(range(degree + 1) for degree in degrees)):
            result.append(NonCrossingTree(tree, choices))
    return result


def noncrossing_tree_to_pf(nct: NonCrossingTree) -> ParkingFunction:
    """Fill blocks left to right with a pending largest digit X.

    The first block is {1..j-1, X}. A later block of size j whose placement is
    i > 0 sets X = m+i and becomes {m+1..m+j} without m+i, plus a new X; with
    i = 0 it is {m+1..m+j}. Here m counts digits used so far. X ends as n.
    """
    sizes = block_sizes(tree_to_dyck(nct.tree))
    n = nct.edge_count
    choices = iter(nct.placements)
    blocks: List[List[int]] = []
    used = 0
    holder = 0
    for index, size in enumerate(sizes):
        if size == 0:
            blocks.append([])
            continue
        if index == 0:
            blocks.append(list(range(1, size)) + [_PENDING])
            used = size - 1
            continue
        choice = next(choices)
        fresh = list(range(used + 1, used + size + 1))
        if choice == 0:
            blocks.append(fresh)
        else:
            value = used + choice
            blocks[holder][blocks[holder].index(_PENDING)] = value
            fresh.remove(value)
            blocks.append(fresh + [_PENDING])
            holder = index
        used += size
    blocks[holder][blocks[holder].index(_PENDING)] = n
    return ParkingFunction.from_blocks(blocks)


def fill_312_321(path: DyckPath) -> List[ParkingFunction]:
    """All {312,321}-avoiding labelings of path, filling blocks right to left.

    A pending smallest digit X starts the last non-empty block; each earlier
    block of size j has j+1 fillings (keep X, or hand one of its digits to X).
    X ends as 1.
    """
    sizes = block_sizes(path)
    n = path.semilength
    occupied = [index for index, size in enumerate(sizes) if size]
    if not occupied:
        return []
    last = occupied[-1]
    earlier = list(reversed(occupied[:-1]))

    results = []
    for choices in product(*(range(sizes[index] + 1) for index in earlier)):
        blocks: List[List[int]] = [[] for _ in sizes]
        blocks[last] = [_PENDING] + list(range(n - sizes[last] + 2, n + 1))
        used = sizes[last] - 1
        holder = last
        for index, choice in zip(earlier, choices):
            size = sizes[index]
            fresh = list(range(n - used - size + 1, n - used + 1))
            if choice == 0:
                blocks[index] = fresh
            else:
                value = fresh[choice - 1]
                blocks[holder][blocks[holder].index(_PENDING)] = value
                fresh.remove(value)
                blocks[index] = [_PENDING] + fresh
                holder = index
            used += size
        blocks[holder][blocks[holder].index(_PENDING)] = 1
        results.append(ParkingFunction.from_blocks(blocks))
    return results


def _triangle_word(n: int, k: int) -> Permutation:
    return direct_sum(identity(k - 1), reverse_identity(n - k + 1))


def a_triangle_members(n: int, k: int) -> List[ParkingFunction]:
    """Parking functions of size n whose reading permutation is I_(k-1) ⊕ J_(n-k+1)."""
    if not 1 <= k <= n:
        raise BijectionError(f"a(n, k) needs 1 <= k <= n, got n={n}, k={k}")
    word = _triangle_word(n, k)
    return [pf for pf in enumerate_parking_functions(n) if reading_permutation(pf) == word]


def _triangle_index(pf: ParkingFunction) -> Optional[int]:
    word = reading_permutation(pf)
    k = len(ascent_set(word)) + 1
    return k if word == _triangle_word(pf.size, k) else None


def catalan_triangle_step(pf: ParkingFunction) -> ParkingFunction:
    """Move a parking function counted by a(n, k) with empty last block to one counted by a(n, k-1).

    The north step labeled k-1 and the j >= 0 east steps right before it are
    cut out and reinserted as N E^j just before the final east step.

    Raises:
        BijectionError: last block non-empty, word not I_(k-1) ⊕ J_(n-k+1), or k = 1
    """
    if pf.blocks[-1]:
        raise BijectionError(f"{pf} does not end with an empty block")
    k = _triangle_index(pf)
    if k is None:
        raise BijectionError(f"Reading permutation of {pf} is not I_(k-1) ⊕ J_(n-k+1)")
    if k < 2:
        raise BijectionError(f"{pf} is counted by a(n, 1) and has no predecessor")

    word = reading_permutation(pf)
    steps = to_dyck(pf).steps
    target = word.entries.index(k - 1) + 1
    seen = 0
    for position, step in enumerate(steps):
        if step == NORTH:
            seen += 1
            if seen == target:
                break
    start = position
    while start > 0 and steps[start - 1] == EAST:
        start -= 1
    j = position - start

    rest = steps[:start] + steps[position + 1:]
    moved = rest[:-1] + NORTH + EAST * j + rest[-1]
    new_word = Permutation(tuple(value for value in word.entries if value != k - 1) + (k - 1,))
    return from_path_and_word(DyckPath(moved), new_word)


BIJECTIONS = ("leafy", "noncrossing", "fill312321", "trianglestep")

_TARGETS = {
    "leafy": PatternSet.of("123", "132", "213"),
    "noncrossing": PatternSet.of("231", "321"),
    "fill312321": PatternSet.of("312", "321"),
}


def _avoiders(n: int, pattern_set: PatternSet) -> Set[ParkingFunction]:
    return {
        pf for pf in enumerate_parking_functions(n)
        if avoids(reading_permutation(pf), pattern_set)
    }


def _step_domain(n: int) -> List[Tuple[int, ParkingFunction]]:
    return [
        (k, pf)
        for k in range(2, n + 1)
        for pf in a_triangle_members(n, k)
        if not pf.blocks[-1]
    ]


def run_bijection(name: str, n: int, verify_image: bool = True) -> BijectionReport:
    """Apply a named map to its whole domain at size n and check it.

    Validity means every output lands in the intended family; the image check
    compares against a full enumeration and is skipped with verify_image=False.

    Raises:
        BijectionError: unknown name or n < 1
    """
    if name not in BIJECTIONS:
        raise BijectionError(f"Unknown bijection {name!r}; choose from {', '.join(BIJECTIONS)}")
    if n < 1:
        raise BijectionError(f"Bijections are checked for n >= 1, got {n}")

    if name == "trianglestep":
        domain = _step_domain(n)
        outputs = [catalan_triangle_step(pf) for _, pf in domain]
        all_valid = all(_triangle_index(out) == k - 1 for (k, _), out in zip(domain, outputs))
        target = (
            {pf for j in range(1, n) for pf in a_triangle_members(n, j)} if verify_image else None
        )
        domain_size = len(domain)
    else:
        pattern_set = _TARGETS[name]
        if name == "leafy":
            trees = enumerate_leafy_trees(n + 1)
            outputs = [leafy_tree_to_pf(tree) for tree in trees]
            domain_size = len(trees)
        elif name == "noncrossing":
            trees = enumerate_noncrossing_trees(n)
            outputs = [noncrossing_tree_to_pf(tree) for tree in trees]
            domain_size = len(trees)
        else:
            paths = enumerate_dyck_paths(n)
            outputs = [pf for path in paths for pf in fill_312_321(path)]
            domain_size = len(outputs)
        all_valid = all(
            pf.size == n and avoids(reading_permutation(pf), pattern_set) for pf in outputs
        )
        target = _avoiders(n, pattern_set) if verify_image else None

    distinct = set(outputs)
    report = BijectionReport(
        name=name,
        n=n,
        domain_size=domain_size,
        output_count=len(outputs),
        all_valid=all_valid,
        injective=len(distinct) == len(outputs),
        image_matches=None if target is None else distinct == target,
        expected_count=None if target is None else len(target),
    )
    logger.info(f"Bijection {name} at n={n}: {len(outputs)} outputs, passed={report.passed}")
    return report
