import random

import pytest

from discoparse import (exact_cover_chain, node_context, parse_ptb,
                        path_to_root, render_path, self_cat)
from discoparse.errors import TreeParseError

import fixture_corpus
from conftest import nodes_by_label
from support import random_tree_text


def test_reference_tree_structure(reference_tree):
    assert reference_tree.label == "S"
    assert [c.label for c in reference_tree.children] == ["NP", "VP"]
    sbar = nodes_by_label(reference_tree)["SBAR"][0]
    assert [c.label for c in sbar.children] == ["WHADVP", "S"]
    leaves = reference_tree.terminals()
    assert len(leaves) == 11
    assert leaves[5].label == "when"
    assert leaves[5].parent.label == "WRB"


def test_single_token_tree():
    tree = parse_ptb("(ROOT (NN dog))")
    assert tree.label == "ROOT"
    assert len(tree.children) == 1
    pos = tree.children[0]
    assert pos.label == "NN"
    assert pos.children[0].is_terminal
    assert pos.children[0].label == "dog"
    assert (tree.token_begin, tree.token_end) == (0, 1)


def test_unlabeled_wrapper_becomes_root():
    tree = parse_ptb("( (S (NN dog) (VB barks)) )")
    assert tree.label == "ROOT"
    assert tree.children[0].label == "S"
    assert tree.token_end == 2


@pytest.mark.parametrize("bad", ["", "   ", "(S (NP", "(S (NN dog)) extra)",
                                 "dog", "()", "(S ())"])
def test_parse_errors(bad):
    with pytest.raises(TreeParseError):
        parse_ptb(bad)


def test_parse_error_reports_position():
    with pytest.raises(TreeParseError) as excinfo:
        parse_ptb("(S (NN dog)")
    assert "character" in str(excinfo.value)


def test_render_parse_round_trip(random_trees):
    for tree in random_trees:
        assert parse_ptb(tree.to_bracketing()).to_bracketing() == tree.to_bracketing()
    for bracketings in fixture_corpus.DOCS.values():
        for text in bracketings:
            assert parse_ptb(text).to_bracketing() == text


def test_self_cat_whole_sentence_is_root(reference_tree):
    assert self_cat(reference_tree, (0, 11)) is reference_tree


def test_self_cat_object_span(reference_tree):
    # "index arbitrage" is exactly the object NP under the inner VP.
    np2 = nodes_by_label(reference_tree)["VP"][1].children[1]
    assert np2.label == "NP"
    assert self_cat(reference_tree, (3, 5)) is np2


def test_exact_cover_chain_is_unary(reference_tree):
    chain = exact_cover_chain(reference_tree, (5, 6))
    assert [node.label for node in chain] == ["WRB", "WHADVP"]
    assert self_cat(reference_tree, (5, 6)).label == "WHADVP"


def test_self_cat_falls_back_to_lowest_cover(reference_tree):
    # "arbitrage when" crosses constituents; the inner VP is the lowest cover.
    node = self_cat(reference_tree, (4, 6))
    assert node is nodes_by_label(reference_tree)["VP"][1]


def test_self_cat_rejects_bad_ranges(reference_tree):
    with pytest.raises(ValueError):
        self_cat(reference_tree, (3, 3))
    with pytest.raises(ValueError):
        self_cat(reference_tree, (0, 99))


def test_path_to_root_labels(reference_tree):
    wrb = nodes_by_label(reference_tree)["WRB"][0]
    assert [n.label for n in path_to_root(wrb)] == \
        ["WRB", "WHADVP", "SBAR", "VP", "VP", "S"]


def test_path_to_root_of_root(reference_tree):
    assert path_to_root(reference_tree) == [reference_tree]


def test_path_to_root_is_parent_chain(random_trees):
    for tree in random_trees[:50]:
        depths = {id(tree): 0}
        for node in tree.walk():
            for child in node.children:
                depths[id(child)] = depths[id(node)] + 1
        for node in tree.walk():
            path = path_to_root(node)
            assert path[-1] is tree
            for child, parent in zip(path, path[1:]):
                assert child.parent is parent
            assert len(path) == depths[id(node)] + 1


def test_render_path_clause_to_wh_phrase(reference_tree):
    table = nodes_by_label(reference_tree)
    s2 = table["SBAR"][0].children[1]
    whadvp = table["WHADVP"][0]
    assert render_path(s2, whadvp) == "S ↑ SBAR ↓ WHADVP"


def test_render_path_to_self(reference_tree):
    assert render_path(reference_tree, reference_tree) == "S"


def test_render_path_subject_to_connective(reference_tree):
    table = nodes_by_label(reference_tree)
    np1 = reference_tree.children[0]
    wrb = table["WRB"][0]
    assert render_path(np1, wrb) == \
        "NP ↑ S ↓ VP ↓ VP ↓ SBAR ↓ WHADVP ↓ WRB"


def test_render_path_different_trees():
    a = parse_ptb("(S (NN x))")
    b = parse_ptb("(S (NN y))")
    with pytest.raises(ValueError):
        render_path(a.children[0], b.children[0])


def test_render_path_reversal(random_trees):
    rng = random.Random(7)
    for tree in random_trees[:40]:
        nodes = [n for n in tree.walk() if not n.is_terminal]
        a, b = rng.choice(nodes), rng.choice(nodes)
        forward = render_path(a, b).split(" ")
        backward = render_path(b, a).split(" ")
        swapped = [{"↑": "↓", "↓": "↑"}.get(t, t)
                   for t in reversed(forward)]
        assert backward == swapped


def test_render_path_has_at_most_one_direction_change(random_trees):
    rng = random.Random(17)
    for tree in random_trees[:30]:
        nodes = [n for n in tree.walk() if not n.is_terminal]
        for _ in range(10):
            a, b = rng.choice(nodes), rng.choice(nodes)
            glyphs = [t for t in render_path(a, b).split(" ")
                      if t in ("↑", "↓")]
            seen_down = False
            for glyph in glyphs:
                if glyph == "↓":
                    seen_down = True
                else:
                    assert not seen_down, "upward glyph after downward glyph"


def test_node_context_subordinate_clause(reference_tree):
    s2 = nodes_by_label(reference_tree)["SBAR"][0].children[1]
    assert node_context(s2) == ("S", "SBAR", "WHADVP", "null")


def test_node_context_root(reference_tree):
    assert node_context(reference_tree) == ("S", "null", "null", "null")


def test_node_context_object_np(reference_tree):
    np2 = nodes_by_label(reference_tree)["VP"][1].children[1]
    assert node_context(np2) == ("NP", "VP", "VB", "SBAR")


def test_self_cat_is_ancestor_or_self(random_trees):
    for tree in random_trees[:50]:
        for node in tree.walk():
            found = self_cat(tree, (node.token_begin, node.token_end))
            ancestors = {id(n) for n in path_to_root(node)}
            assert id(found) in ancestors
            assert found.token_begin <= node.token_begin
            assert found.token_end >= node.token_end


def test_covered_tokens_concatenate(random_trees):
    for tree in random_trees[:50]:
        for node in tree.walk():
            if node.is_terminal:
                continue
            begin = node.token_begin
            for child in node.children:
                assert child.token_begin == begin
                begin = child.token_end
            assert begin == node.token_end


def test_random_tree_text_respects_bounds():
    rng = random.Random(99)
    for _ in range(50):
        tree = parse_ptb(random_tree_text(rng))
        for node in tree.walk():
            assert len(node.children) <= 4
            assert len(path_to_root(node)) <= 10  # 8 internal levels + POS + word
