"""Boolean formula ASTs with partial evaluation and blatancy predicates.

Formulas are immutable trees built from five node kinds: `Const`, `Literal`,
`Not`, and the n-ary `And` / `Or`.  Variables are non-negative indices below a
declared count, and game state assigns each variable one of three values:
true, false, or unassigned (represented as ``True`` / ``False`` / ``None``).

The text format is parenthesized prefix notation:

    formula := var | "(not " formula ")" | "(and " formula+ ")"
             | "(or " formula+ ")" | "true" | "false"
    var     := "x" nonnegative-decimal-integer

Whitespace between tokens is insignificant.  A negation applied directly to a
variable parses to a negated `Literal` rather than a `Not` node, and
`to_text` renders negated literals the same way, so parse -> to_text -> parse
is a fixpoint.
"""

from __future__ import annotations

from dataclasses import dataclass


class FormulaError(Exception):
    """Base class for formula-level errors."""


class FormulaSyntaxError(FormulaError):
    """Malformed formula text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class VariableRangeError(FormulaError):
    """A variable index at or above the declared variable count."""

    def __init__(self, var: int, n: int):
        super().__init__(f"variable x{var} out of range for {n} variable(s)")
        self.var = var
        self.n = n


class UnassignedVariableError(FormulaError):
    """evaluate() hit a variable the assignment leaves open."""

    def __init__(self, var: int):
        super().__init__(f"variable x{var} is unassigned")
        self.var = var


class Formula:
    """Base class for formula nodes.  Instances are immutable and hashable."""

    __slots__ = ()

    def __repr__(self):
        return to_text(self)


@dataclass(frozen=True, slots=True, repr=False)
class Const(Formula):
    value: bool


@dataclass(frozen=True, slots=True, repr=False)
class Literal(Formula):
    var: int
    negated: bool = False


@dataclass(frozen=True, slots=True, repr=False)
class Not(Formula):
    child: Formula


@dataclass(frozen=True, slots=True, repr=False)
class And(Formula):
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise ValueError("And requires at least one child; use Const(True)")


@dataclass(frozen=True, slots=True, repr=False)
class Or(Formula):
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise ValueError("Or requires at least one child; use Const(False)")


TRUE = Const(True)
FALSE = Const(False)


def lit(var: int, negated: bool = False) -> Literal:
    return Literal(var, negated)


def not_(f: Formula) -> Formula:
    """Negation builder; folds constants and literal signs, removes double Not."""
    if isinstance(f, Const):
        return FALSE if f.value else TRUE
    if isinstance(f, Literal):
        return Literal(f.var, not f.negated)
    if isinstance(f, Not):
        return f.child
    return Not(f)


def and_(*parts: Formula) -> Formula:
    """Conjunction builder; empty product is true, single part is unwrapped."""
    if not parts:
        return TRUE
    if len(parts) == 1:
        return parts[0]
    return And(tuple(parts))


def or_(*parts: Formula) -> Formula:
    """Disjunction builder; empty sum is false, single part is unwrapped."""
    if not parts:
        return FALSE
    if len(parts) == 1:
        return parts[0]
    return Or(tuple(parts))


@dataclass(frozen=True, slots=True)
class Assignment:
    """Per-variable ternary state: a tuple holding True, False, or None.

    Values are never overwritten; `assign` returns a new Assignment and
    refuses to touch an already-assigned variable.
    """

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    @classmethod
    def empty(cls, n: int) -> "Assignment":
        if n < 0:
            raise ValueError("variable count must be non-negative")
        return cls((None,) * n)

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Assignment":
        values = [None] * n
        for var, value in pairs:
            if not 0 <= var < n:
                raise VariableRangeError(var, n)
            if values[var] is not None:
                raise ValueError(f"variable x{var} assigned twice")
            values[var] = bool(value)
        return cls(tuple(values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, var: int):
        return self.values[var]

    def assign(self, var: int, value: bool) -> "Assignment":
        if self.values[var] is not None:
            raise ValueError(f"variable x{var} is already assigned")
        values = list(self.values)
        values[var] = bool(value)
        return Assignment(tuple(values))

    @property
    def assigned_count(self) -> int:
        return sum(1 for v in self.values if v is not None)

    def unassigned(self) -> list:
        return [i for i, v in enumerate(self.values) if v is None]

    def lowest_unassigned(self):
        for i, v in enumerate(self.values):
            if v is None:
                return i
        return None

    @property
    def is_complete(self) -> bool:
        return all(v is not None for v in self.values)

    def items(self):
        """Assigned (var, value) pairs in ascending variable order."""
        return [(i, v) for i, v in enumerate(self.values) if v is not None]


def evaluate(f: Formula, a: Assignment) -> bool:
    """Standard Boolean semantics; every variable occurring in f must be assigned."""
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Literal):
        v = a.values[f.var]
        if v is None:
            raise UnassignedVariableError(f.var)
        return (not v) if f.negated else v
    if isinstance(f, Not):
        return not evaluate(f.child, a)
    if isinstance(f, And):
        return all(evaluate(c, a) for c in f.children)
    if isinstance(f, Or):
        return any(evaluate(c, a) for c in f.children)
    raise TypeError(f"not a formula node: {f!r}")


def blatantly_false(f: Formula, a: Assignment) -> bool:
    """Syntactically evident falsity relative to a partial assignment.

    Holds for: a false-assigned literal, the constant false, a Not over a
    blatantly true child, an Or whose children are all blatantly false, and
    an And with at least one blatantly false child.  Literals on unassigned
    variables are neither blatantly false nor blatantly true, so e.g.
    x0 AND (not x0) is a contradiction but not blatantly false.
    """
    if isinstance(f, Const):
        return not f.value
    if isinstance(f, Literal):
        v = a.values[f.var]
        return v is not None and v == f.negated
    if isinstance(f, Not):
        return blatantly_true(f.child, a)
    if isinstance(f, And):
        return any(blatantly_false(c, a) for c in f.children)
    if isinstance(f, Or):
        return all(blatantly_false(c, a) for c in f.children)
    raise TypeError(f"not a formula node: {f!r}")


def blatantly_true(f: Formula, a: Assignment) -> bool:
    """Dual of `blatantly_false`: syntactically evident truth."""
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Literal):
        v = a.values[f.var]
        return v is not None and v != f.negated
    if isinstance(f, Not):
        return blatantly_false(f.child, a)
    if isinstance(f, And):
        return all(blatantly_true(c, a) for c in f.children)
    if isinstance(f, Or):
        return any(blatantly_true(c, a) for c in f.children)
    raise TypeError(f"not a formula node: {f!r}")


def simplify(f: Formula, a: Assignment) -> Formula:
    """Partially evaluate f under a.

    Substitutes assigned variables by constants, then applies a fixed rule
    set: constant short-circuiting, removal of constant children, flattening
    of nested same-kind connectives, single-child unwrapping, and double
    negation removal.  No distribution or absorption.  The result mentions
    only unassigned variables, or is a constant, and agrees with f on every
    completion of the remaining variables.
    """
    if isinstance(f, Const):
        return f
    if isinstance(f, Literal):
        v = a.values[f.var]
        if v is None:
            return f
        return TRUE if v != f.negated else FALSE
    if isinstance(f, Not):
        s = simplify(f.child, a)
        if isinstance(s, Const):
            return FALSE if s.value else TRUE
        if isinstance(s, Not):
            return s.child
        return f if s is f.child else Not(s)
    if isinstance(f, And):
        parts = []
        for c in f.children:
            s = simplify(c, a)
            if isinstance(s, Const):
                if not s.value:
                    return FALSE
                continue
            if isinstance(s, And):
                parts.extend(s.children)
            else:
                parts.append(s)
        if not parts:
            return TRUE
        if len(parts) == 1:
            return parts[0]
        return And(tuple(parts))
    if isinstance(f, Or):
        parts = []
        for c in f.children:
            s = simplify(c, a)
            if isinstance(s, Const):
                if s.value:
                    return TRUE
                continue
            if isinstance(s, Or):
                parts.extend(s.children)
            else:
                parts.append(s)
        if not parts:
            return FALSE
        if len(parts) == 1:
            return parts[0]
        return Or(tuple(parts))
    raise TypeError(f"not a formula node: {f!r}")


def substitute(f: Formula, var: int, value: bool) -> Formula:
    """Assign one variable inside an already-simplified formula.

    Equivalent to re-running `simplify` with the extended assignment, but
    touches only the paths containing `var`; untouched subtrees are shared.
    """
    if isinstance(f, Const):
        return f
    if isinstance(f, Literal):
        if f.var != var:
            return f
        return TRUE if value != f.negated else FALSE
    if isinstance(f, Not):
        s = substitute(f.child, var, value)
        if s is f.child:
            return f
        if isinstance(s, Const):
            return FALSE if s.value else TRUE
        if isinstance(s, Not):
            return s.child
        return Not(s)
    if isinstance(f, And):
        parts = []
        changed = False
        for c in f.children:
            s = substitute(c, var, value)
            if s is not c:
                changed = True
                if isinstance(s, Const):
                    if not s.value:
                        return FALSE
                    continue
                if isinstance(s, And):
                    parts.extend(s.children)
                    continue
            parts.append(s)
        if not changed:
            return f
        if not parts:
            return TRUE
        if len(parts) == 1:
            return parts[0]
        return And(tuple(parts))
    if isinstance(f, Or):
        parts = []
        changed = False
        for c in f.children:
            s = substitute(c, var, value)
            if s is not c:
                changed = True
                if isinstance(s, Const):
                    if s.value:
                        return TRUE
                    continue
                if isinstance(s, Or):
                    parts.extend(s.children)
                    continue
            parts.append(s)
        if not changed:
            return f
        if not parts:
            return FALSE
        if len(parts) == 1:
            return parts[0]
        return Or(tuple(parts))
    raise TypeError(f"not a formula node: {f!r}")


def free_variables(f: Formula) -> set:
    """Indices of all variables occurring in f."""
    out = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Literal):
            out.add(node.var)
        elif isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, (And, Or)):
            stack.extend(node.children)
    return out


def node_count(f: Formula) -> int:
    """Number of AST nodes in f."""
    count = 0
    stack = [f]
    while stack:
        node = stack.pop()
        count += 1
        if isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, (And, Or)):
            stack.extend(node.children)
    return count


def to_text(f: Formula) -> str:
    """Render f in the text grammar; inverse of `parse_formula`."""
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Literal):
        return f"(not x{f.var})" if f.negated else f"x{f.var}"
    if isinstance(f, Not):
        return f"(not {to_text(f.child)})"
    if isinstance(f, And):
        return "(and " + " ".join(to_text(c) for c in f.children) + ")"
    if isinstance(f, Or):
        return "(or " + " ".join(to_text(c) for c in f.children) + ")"
    raise TypeError(f"not a formula node: {f!r}")


def _tokenize(text: str):
    tokens = []
    line = 1
    col = 0
    start = None
    word = []
    for ch in text + "\n":
        col += 1
        if ch == "\n":
            ends_word = True
        elif ch in "()":
            ends_word = True
        elif ch.isspace():
            ends_word = True
        else:
            if start is None:
                start = (line, col)
            word.append(ch)
            continue
        if word:
            tokens.append(("".join(word), start[0], start[1]))
            word = []
            start = None
        if ch in "()":
            tokens.append((ch, line, col))
        if ch == "\n":
            line += 1
            col = 0
    return tokens


def parse_formula(text: str, n: int) -> Formula:
    """Parse formula text over n declared variables.

    Raises FormulaSyntaxError with position info on malformed input and
    VariableRangeError when an index is not below n.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise FormulaSyntaxError("empty formula", 1, 1)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        if tok is None:
            last = tokens[-1]
            raise FormulaSyntaxError("unexpected end of input", last[1], last[2])
        pos += 1
        return tok

    def parse_one() -> Formula:
        tok, line, col = take()
        if tok == ")":
            raise FormulaSyntaxError("unexpected ')'", line, col)
        if tok != "(":
            return parse_atom(tok, line, col)
        head, hline, hcol = take()
        if head == "not":
            child = parse_one()
            expect_close()
            if isinstance(child, Literal):
                return Literal(child.var, not child.negated)
            return Not(child)
        if head in ("and", "or"):
            children = [parse_one()]
            while True:
                nxt = peek()
                if nxt is None:
                    raise FormulaSyntaxError("missing ')'", line, col)
                if nxt[0] == ")":
                    take()
                    break
                children.append(parse_one())
            return And(tuple(children)) if head == "and" else Or(tuple(children))
        raise FormulaSyntaxError(f"expected 'not', 'and' or 'or', got {head!r}", hline, hcol)

    def parse_atom(tok, line, col) -> Formula:
        if tok == "true":
            return TRUE
        if tok == "false":
            return FALSE
        if tok.startswith("x") and tok[1:].isdigit():
            var = int(tok[1:])
            if var >= n:
                raise VariableRangeError(var, n)
            return Literal(var, False)
        raise FormulaSyntaxError(f"unrecognized token {tok!r}", line, col)

    def expect_close():
        tok, line, col = take()
        if tok != ")":
            raise FormulaSyntaxError(f"expected ')', got {tok!r}", line, col)

    result = parse_one()
    extra = peek()
    if extra is not None:
        raise FormulaSyntaxError(f"trailing input {extra[0]!r}", extra[1], extra[2])
    return result
