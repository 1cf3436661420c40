"""Rooted ordered tree models."""
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Tuple


class TreeFormatError(ValueError):
    """Raised when a tree string or placement list is malformed."""
    pass


@dataclass(frozen=True)
class RootedOrderedTree:
    """A node with an ordered tuple of child subtrees."""

    children: Tuple['RootedOrderedTree', ...] = field(default=())

    @cached_property
    def edge_count(self) -> int:
        return sum(child.edge_count + 1 for child in self.children)

    @property
    def degree(self) -> int:
        return len(self.children)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def preorder(self) -> List['RootedOrderedTree']:
        """Nodes in preorder, root first."""
        nodes = []
        stack = [self]
        while stack:
            node = stack.pop()
            nodes.append(node)
            stack.extend(reversed(node.children))
        return nodes

    def to_text(self) -> str:
        """Balanced parentheses; a leaf is "()" and a single edge "(())"."""
        return "(" + "".join(child.to_text() for child in self.children) + ")"

    def __str__(self) -> str:
        return self.to_text()

    @staticmethod
    def from_text(text: str) -> 'RootedOrderedTree':
        """Parse nested parentheses, e.g. "(()())"."""
        text = "".join(text.split())
        stack: List[List['RootedOrderedTree']] = []
        root = None
        for position, char in enumerate(text, 1):
            if root is not None:
                raise TreeFormatError(f"Trailing characters after position {position - 1}")
            if char == "(":
                stack.append([])
            elif char == ")":
                if not stack:
                    raise TreeFormatError(f"Unbalanced ')' at position {position}")
                node = RootedOrderedTree(tuple(stack.pop()))
                if stack:
                    stack[-1].append(node)
                else:
                    root = node
            else:
                raise TreeFormatError(f"Unexpected {char!r} at position {position}")
        if root is None:
            raise TreeFormatError(f"Incomplete tree string {text!r}")
        return root


@dataclass(frozen=True)
class NonCrossingTree:
    """Ordered tree plus one placement choice per internal non-root vertex.

    The choice for a vertex of degree d lies in 0..d and counts the child
    subtrees lying to the right of its parent edge; vertices are taken in
    preorder.
    """

    tree: RootedOrderedTree
    placements: Tuple[int, ...]

    def __post_init__(self):
        placements = tuple(self.placements)
        object.__setattr__(self, 'placements', placements)
        degrees = self.placement_degrees()
        if len(degrees) != len(placements):
            raise TreeFormatError(
                f"Expected {len(degrees)} placements, got {len(placements)}"
            )
        for position, (choice, degree) in enumerate(zip(placements, degrees), 1):
            if not 0 <= choice <= degree:
                raise TreeFormatError(
                    f"Placement {position} is {choice}, outside 0..{degree}"
                )

    def placement_degrees(self) -> List[int]:
        return [node.degree for node in self.tree.preorder()[1:] if not node.is_leaf]

    @property
    def edge_count(self) -> int:
        return self.tree.edge_count

    def to_text(self) -> str:
        return self.tree.to_text() + "[" + ",".join(str(choice) for choice in self.placements) + "]"

    def __str__(self) -> str:
        return self.to_text()

    @staticmethod
    def from_text(text: str) -> 'NonCrossingTree':
        text = "".join(text.split())
        if not text.endswith("]") or "[" not in text:
            raise TreeFormatError(f"Missing placement list in {text!r}")
        tree_text, _, placement_text = text[:-1].partition("[")
        try:
            placements = tuple(int(part) for part in placement_text.split(",") if part)
        except ValueError as e:
            raise TreeFormatError(f"Bad placement list {placement_text!r}: {e}")
        return NonCrossingTree(RootedOrderedTree.from_text(tree_text), placements)
