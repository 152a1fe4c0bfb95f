"""Immutable constituency trees parsed from PTB bracketings.

Provides the navigation every syntactic feature needs: parent and sibling
lookup, covered token spans, paths to the root, and rendered node-to-node
paths through the lowest common ancestor.
"""

from __future__ import annotations

from .errors import TreeParseError

UP = "↑"
DOWN = "↓"
NULL_LABEL = "null"


class ConstituentNode:
    """One node of a constituency tree.

    Terminals carry the token surface as their label; the POS tag is the
    label of the terminal's parent. Parents, covered token ranges and node
    ids are filled in once by parse_ptb; trees are never mutated after that,
    so they are safe to share between threads.
    """

    __slots__ = ("label", "children", "is_terminal", "parent",
                 "token_begin", "token_end", "node_id", "_child_index")

    def __init__(self, label, children=(), is_terminal=False):
        self.label = label
        self.children = list(children)
        self.is_terminal = is_terminal
        self.parent = None
        self.token_begin = -1
        self.token_end = -1
        self.node_id = -1
        self._child_index = -1

    @property
    def covered_tokens(self):
        """Half-open range of sentence token indices under this node."""
        return range(self.token_begin, self.token_end)

    @property
    def is_root(self):
        return self.parent is None

    @property
    def left_sibling(self):
        if self.parent is None or self._child_index <= 0:
            return None
        return self.parent.children[self._child_index - 1]

    @property
    def right_sibling(self):
        if self.parent is None:
            return None
        siblings = self.parent.children
        if self._child_index + 1 >= len(siblings):
            return None
        return siblings[self._child_index + 1]

    def walk(self):
        """Pre-order traversal (node before children, siblings left to right)."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def terminals(self):
        return [node for node in self.walk() if node.is_terminal]

    def to_bracketing(self):
        if self.is_terminal:
            return self.label
        inner = " ".join(child.to_bracketing() for child in self.children)
        return f"({self.label} {inner})"

    def __repr__(self):
        kind = "terminal" if self.is_terminal else "node"
        return f"<{kind} {self.label!r} [{self.token_begin},{self.token_end})>"


def _tokenize(text):
    tokens = []
    i = 0
    size = len(text)
    while i < size:
        ch = text[i]
        if ch in "()":
            tokens.append((ch, ch, i))
            i += 1
        elif ch.isspace():
            i += 1
        else:
            j = i
            while j < size and not text[j].isspace() and text[j] not in "()":
                j += 1
            tokens.append(("atom", text[i:j], i))
            i = j
    return tokens


def _parse_node(tokens, index):
    kind, value, pos = tokens[index]
    if kind == "atom":
        return ConstituentNode(value, is_terminal=True), index + 1
    if kind == ")":
        raise TreeParseError("unexpected ')'", position=pos)
    index += 1
    label = ""
    if index < len(tokens) and tokens[index][0] == "atom":
        label = tokens[index][1]
        index += 1
    children = []
    while index < len(tokens) and tokens[index][0] != ")":
        child, index = _parse_node(tokens, index)
        children.append(child)
    if index >= len(tokens):
        raise TreeParseError("unbalanced bracketing, missing ')'", position=pos)
    index += 1
    if not children:
        raise TreeParseError(f"node '{label}' has no children", position=pos)
    # Unlabeled wrappers emitted by some parsers become an explicit ROOT.
    return ConstituentNode(label or "ROOT", children), index


def _finalize(root):
    next_leaf = 0
    next_id = 0

    def visit(node, parent):
        nonlocal next_leaf, next_id
        node.parent = parent
        node.node_id = next_id
        next_id += 1
        if node.is_terminal:
            node.token_begin = next_leaf
            node.token_end = next_leaf + 1
            next_leaf += 1
            return
        for i, child in enumerate(node.children):
            child._child_index = i
            visit(child, node)
        node.token_begin = node.children[0].token_begin
        node.token_end = node.children[-1].token_end

    visit(root, None)


def parse_ptb(bracketing):
    """Parse a PTB s-expression into a finalized ConstituentNode tree.

    Raises TreeParseError (with a character position) on empty input,
    unbalanced parentheses, childless nodes or trailing content.
    """
    if bracketing is None or not bracketing.strip():
        raise TreeParseError("empty bracketing", position=0)
    tokens = _tokenize(bracketing)
    if tokens[0][0] != "(":
        raise TreeParseError("expected '('", position=tokens[0][2])
    root, next_index = _parse_node(tokens, 0)
    if next_index != len(tokens):
        raise TreeParseError("trailing content after tree",
                             position=tokens[next_index][2])
    _finalize(root)
    return root


def _validate_range(tree, token_range):
    begin, end = token_range
    if not (0 <= begin < end <= tree.token_end):
        raise ValueError(
            f"token range [{begin}, {end}) outside sentence of "
            f"{tree.token_end} tokens")
    return begin, end


def exact_cover_chain(tree, token_range):
    """Non-terminal nodes covering exactly token_range, bottom to top.

    Exact covers of one span always form a chain of unary ancestors, e.g.
    a POS node and a phrase node wrapping only it. When nothing covers the
    span exactly (a multiword span crossing constituent boundaries) the
    lowest node covering a superset of the span is returned alone.
    """
    begin, end = _validate_range(tree, token_range)
    chain = [node for node in tree.walk()
             if not node.is_terminal
             and node.token_begin == begin and node.token_end == end]
    if chain:
        chain.reverse()  # walk() yields ancestors first
        return chain
    node = tree
    while True:
        inner = next((child for child in node.children
                      if not child.is_terminal
                      and child.token_begin <= begin
                      and child.token_end >= end), None)
        if inner is None:
            return [node]
        node = inner


def self_cat(tree, token_range):
    """Highest node covering exactly token_range.

    Falls back to the lowest node covering a superset when no exact cover
    exists, which keeps the operation total for every valid range.
    """
    return exact_cover_chain(tree, token_range)[-1]


def path_to_root(node):
    """The node sequence [node, parent(node), ..., root]."""
    path = [node]
    while path[-1].parent is not None:
        path.append(path[-1].parent)
    return path


def render_path(source, target):
    """Render the path between two nodes of one tree.

    The path runs up from source to the lowest common ancestor and then
    down to target; labels are joined with arrow glyphs, e.g.
    ``S <up> SBAR <down> WHADVP``. Raises ValueError if the nodes do not
    share a tree.
    """
    if source is target:
        return source.label
    upward = path_to_root(source)
    positions = {id(node): i for i, node in enumerate(upward)}
    downward = []
    node = target
    while id(node) not in positions:
        downward.append(node)
        node = node.parent
        if node is None:
            raise ValueError("nodes belong to different trees")
    lca_index = positions[id(node)]
    rendered = f" {UP} ".join(n.label for n in upward[:lca_index + 1])
    for n in reversed(downward):
        rendered += f" {DOWN} {n.label}"
    return rendered


def node_context(node):
    """(label, parent label, left sibling label, right sibling label).

    Absent relatives are rendered as the literal text "null".
    """
    def label_of(n):
        return n.label if n is not None else NULL_LABEL

    return (node.label, label_of(node.parent),
            label_of(node.left_sibling), label_of(node.right_sibling))
