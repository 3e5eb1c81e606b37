"""Small shared helpers for the test suite."""

from __future__ import annotations

from functools import lru_cache

import lassomatroid as lm

LETTERS = "abcdefgh"


def letters(n):
    return list(LETTERS[:n])


def cords(*pairs):
    """cords('ab', 'cd') -> frozenset of canonical cords."""
    return frozenset(lm.cord(p[0], p[1]) for p in pairs)


@lru_cache(maxsize=None)
def trees_on(n):
    """All tree shapes on the first n letters (cached across tests)."""
    return tuple(lm.enumerate_xtrees(letters(n)))


@lru_cache(maxsize=None)
def binary_trees_on(n):
    return tuple(lm.enumerate_binary_xtrees(letters(n)))


def snowflake():
    """Three cherries joined at a central vertex: cherries ad, be, cf."""
    return lm.tree_from_newick("((a,d),(b,e),(c,f));")


def double_star():
    """One interior vertex adjacent to a,b,c,d; a second adjacent to e,f."""
    return lm.tree_from_newick("((a,b,c,d),e,f);")
