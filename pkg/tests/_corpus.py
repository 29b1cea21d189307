"""Shared test corpora: the worked-game formula, exhaustive small-formula
enumeration, and an independent bit-parallel truth-table oracle."""

import itertools

from qbfgames.formula import (
    FALSE,
    TRUE,
    And,
    Assignment,
    Const,
    Literal,
    Not,
    Or,
)

# Four 3-literal clauses over 7 variables; x5 never occurs.  Every bundled
# sample game plays on this formula.
SAMPLE_TEXT = (
    "(and (or (not x0) x3 (not x1)) (or x2 x1 (not x6)) "
    "(or x4 (not x6) x0) (or (not x2) (not x4) x3))"
)
SAMPLE_VARS = 7

_NVARS = 4
_FULL = (1 << (1 << _NVARS)) - 1  # 16 assignment slots -> 16-bit tables
_VAR_MASKS = [0] * _NVARS
for _b in range(1 << _NVARS):
    for _i in range(_NVARS):
        if _b >> _i & 1:
            _VAR_MASKS[_i] |= 1 << _b


def truth_table(f):
    """16-bit table over x0..x3: bit b set iff f is true under assignment b.

    Computed with plain bit arithmetic, independently of evaluate().
    """
    if isinstance(f, Const):
        return _FULL if f.value else 0
    if isinstance(f, Literal):
        table = _VAR_MASKS[f.var]
        return (~table & _FULL) if f.negated else table
    if isinstance(f, Not):
        return ~truth_table(f.child) & _FULL
    if isinstance(f, And):
        out = _FULL
        for c in f.children:
            out &= truth_table(c)
        return out
    out = 0
    for c in f.children:
        out |= truth_table(c)
    return out


def completion_mask(a):
    """Bitmask of the full assignments extending partial assignment a."""
    mask = _FULL
    for i, v in enumerate(a.values):
        if v is None:
            continue
        mask &= _VAR_MASKS[i] if v else ~_VAR_MASKS[i] & _FULL
    return mask


def all_partial_assignments():
    """All 3^4 ternary assignments over 4 variables."""
    return [
        Assignment(values)
        for values in itertools.product((True, False, None), repeat=_NVARS)
    ]


_LEAVES = tuple(
    [Literal(v, neg) for v in range(_NVARS) for neg in (False, True)] + [TRUE, FALSE]
)


def enumerate_formulas(max_connectives=3, ternary=True):
    """All formulas over x0..x3 with up to `max_connectives` internal nodes.

    Leaves are the eight literals plus the two constants.  And/Or combine as
    binary nodes with order-insensitive dedup; with `ternary`, three-leaf
    And/Or nodes (and their negations) are appended as well to cover the
    wide-node code paths, but are not fed back into deeper combinations to
    keep the corpus a tractable size.  Levels are by exact connective count.
    """
    levels = [list(_LEAVES)]
    for depth in range(1, max_connectives + 1):
        level = [Not(f) for f in levels[depth - 1]]
        for lo in range((depth - 1) // 2 + 1):
            hi = depth - 1 - lo
            if lo == hi:
                pairs = itertools.combinations_with_replacement(levels[lo], 2)
            else:
                pairs = itertools.product(levels[lo], levels[hi])
            for a, b in pairs:
                level.append(And((a, b)))
                level.append(Or((a, b)))
        levels.append(level)
    out = []
    for level in levels:
        out.extend(level)
    if ternary and max_connectives >= 1:
        wide = []
        for triple in itertools.combinations_with_replacement(_LEAVES, 3):
            wide.append(And(triple))
            wide.append(Or(triple))
        out.extend(wide)
        if max_connectives >= 2:
            out.extend(Not(f) for f in wide)
    return out
