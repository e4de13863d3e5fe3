"""Closed-surface group presentations, reduced words and separating
decompositions.

Generators of the genus-g presentation are named a1, b1, ..., ag, bg with
the single relator prod_i [a_i, b_i].  Words serialize as space-separated
letters, capital letters denoting inverses ("a1 b1 A1 B1").
"""
from __future__ import annotations

import re

import numpy as np

from .errors import InvalidInput


class GroupWord:
    """A freely reduced word in the presentation generators.

    letters: tuple of (name, sign) with sign in {+1, -1}.
    """

    def __init__(self, letters=()):
        self.letters = tuple(_free_reduce(letters))

    @classmethod
    def parse(cls, text):
        letters = []
        for tok in text.split():
            m = re.fullmatch(r"([abAB])(\d+)", tok)
            if not m:
                raise InvalidInput("bad word letter %r" % tok)
            name = m.group(1).lower() + m.group(2)
            letters.append((name, -1 if m.group(1).isupper() else 1))
        return cls(letters)

    def __str__(self):
        out = []
        for name, sign in self.letters:
            out.append(name.upper() if sign < 0 else name)
        return " ".join(out)

    def __mul__(self, other):
        return GroupWord(self.letters + other.letters)

    def inverse(self):
        return GroupWord([(nm, -sg) for nm, sg in reversed(self.letters)])

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, GroupWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "GroupWord(%r)" % (str(self),)


def _free_reduce(letters):
    out = []
    for name, sign in letters:
        if out and out[-1][0] == name and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((name, sign))
    return out


def commutator_word(i):
    return GroupWord([("a%d" % i, 1), ("b%d" % i, 1), ("a%d" % i, -1), ("b%d" % i, -1)])


class SurfacePresentation:
    def __init__(self, genus):
        if genus < 2:
            raise InvalidInput("genus must be >= 2, got %r" % (genus,))
        self.genus = genus
        self.generators = []
        for i in range(1, genus + 1):
            self.generators.extend(["a%d" % i, "b%d" % i])
        rel = GroupWord()
        for i in range(1, genus + 1):
            rel = rel * commutator_word(i)
        self.relator = rel


def standard_presentation(genus):
    return SurfacePresentation(genus)


def evaluate_word(rep, word):
    """Left-to-right product of generator matrices along the word.

    rep: anything with a .generators dict of name -> matrix, or a plain dict.
    2x2 inverses use the adjugate formula; products are accumulated letter by
    letter (pre-grouping subwords loses accuracy on long relators).
    """
    gens = rep.generators if hasattr(rep, "generators") else rep
    first = next(iter(gens.values()), None)
    if first is None:
        raise InvalidInput("representation has no generators")
    d = np.asarray(first).shape[0]
    out = np.eye(d)
    for name, sign in word.letters:
        if name not in gens:
            raise InvalidInput("word uses unknown generator %r" % name)
        M = np.asarray(gens[name], dtype=float)
        out = out @ (M if sign > 0 else _inv(M))
    return out


def _inv(M):
    if M.shape == (2, 2):
        det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
        return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]]) / det
    return np.linalg.inv(M)


class Decomposition:
    """Splitting of the genus-g surface along gamma = prod_{i<=genus_l} [a_i, b_i]."""

    def __init__(self, genus, genus_l):
        if not 1 <= genus_l <= genus - 1:
            raise InvalidInput("genus_l must be in [1, genus-1], got %r" % (genus_l,))
        self.genus = genus
        self.genus_l = genus_l
        self.chi_l = 1 - 2 * genus_l
        self.chi_r = (2 - 2 * genus) - self.chi_l
        gamma = GroupWord()
        for i in range(1, genus_l + 1):
            gamma = gamma * commutator_word(i)
        self.gamma = gamma
        self.left_generators = []
        self.right_generators = []
        for i in range(1, genus + 1):
            side = self.left_generators if i <= genus_l else self.right_generators
            side.extend(["a%d" % i, "b%d" % i])


def separating_decomposition(genus, genus_l):
    return Decomposition(genus, genus_l)
