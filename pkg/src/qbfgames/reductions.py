"""Source games and the constructive reductions into the formula rulesets.

Five constructions, each paired with a dual-solve check that the optimal-play
winner carries over:

  * Snort (partizan vertex painting)      -> by-player-anywhere-same
  * Proper 2-Coloring (impartial)         -> either-anywhere-same
  * CNF with alternating quantifiers      -> either-local-same
  * Positive CNF (Schaefer's game)        -> by-player-anywhere-different
  * Positive CNF with free value choice   -> either-anywhere-different

Blue maps to True/P1 in the graph games; elsewhere first mover maps to
first mover.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cnf import Cnf
from .engine import (
    BY_PLAYER_ANYWHERE_DIFFERENT,
    BY_PLAYER_ANYWHERE_SAME,
    EITHER_ANYWHERE_DIFFERENT,
    EITHER_ANYWHERE_SAME,
    EITHER_LOCAL_DIFFERENT,
    EITHER_LOCAL_SAME,
    Player,
    Position,
)
from .formula import TRUE, And, Assignment, Literal, Or
from .solver import (
    DEFAULT_NODE_BUDGET,
    AbstractGame,
    Outcome,
    solve,
    solve_abstract,
)


class Color(Enum):
    UNCOLORED = "uncolored"
    BLUE = "blue"
    RED = "red"


class InvalidGraphError(ValueError):
    """Malformed graph input."""


class InvalidSnortGraphError(InvalidGraphError):
    """A painted graph with two adjacent, opposite-colored vertices."""


class PositiveCnfError(ValueError):
    """Invalid positive CNF instance."""


class NegationError(PositiveCnfError):
    """A negated literal where only positive ones are allowed."""


@dataclass(frozen=True)
class Graph:
    """Undirected graph with optional per-vertex paint."""

    n_vertices: int
    edges: frozenset  # of (i, j) pairs with i < j
    colors: tuple  # of Color, length n_vertices

    @classmethod
    def build(cls, n_vertices: int, edges, colors=None) -> "Graph":
        if n_vertices < 0:
            raise InvalidGraphError("vertex count must be non-negative")
        normalized = set()
        for i, j in edges:
            if i == j:
                raise InvalidGraphError(f"self-loop at vertex {i}")
            if not (0 <= i < n_vertices and 0 <= j < n_vertices):
                raise InvalidGraphError(f"edge ({i}, {j}) out of range")
            normalized.add((min(i, j), max(i, j)))
        if colors is None:
            colors = (Color.UNCOLORED,) * n_vertices
        colors = tuple(colors)
        if len(colors) != n_vertices:
            raise InvalidGraphError("color list length must match vertex count")
        return cls(n_vertices, frozenset(normalized), colors)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def neighbors(self) -> list:
        adj = [[] for _ in range(self.n_vertices)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def is_uncolored(self) -> bool:
        return all(c is Color.UNCOLORED for c in self.colors)


def _check_snort_paint(graph: Graph):
    for i, j in graph.edges:
        pair = {graph.colors[i], graph.colors[j]}
        if pair == {Color.BLUE, Color.RED}:
            raise InvalidSnortGraphError(
                f"vertices {i} and {j} are adjacent with opposite colors"
            )


class SnortGame(AbstractGame):
    """Players paint uncolored vertices their own color (Blue = P1), never
    adjacent to the opposite color; a stuck player loses."""

    def __init__(self, graph: Graph, first_player: Player = Player.P1):
        _check_snort_paint(graph)
        self.graph = graph
        self.first_player = first_player
        self.adj = graph.neighbors()

    def initial_state(self):
        return (self.graph.colors, self.first_player)

    def mover(self, state) -> Player:
        return state[1]

    def legal_moves(self, state) -> list:
        colors, mover = state
        forbidden = Color.RED if mover is Player.P1 else Color.BLUE
        moves = []
        for v in range(self.graph.n_vertices):
            if colors[v] is not Color.UNCOLORED:
                continue
            if any(colors[u] is forbidden for u in self.adj[v]):
                continue
            moves.append(v)
        return moves

    def apply(self, state, move):
        colors, mover = state
        own = Color.BLUE if mover is Player.P1 else Color.RED
        painted = colors[:move] + (own,) + colors[move + 1 :]
        return (painted, mover.opponent)

    def is_terminal(self, state) -> bool:
        return not self.legal_moves(state)

    def winner(self, state) -> Player:
        return state[1].opponent


class ProperTwoColoringGame(AbstractGame):
    """Either player paints any uncolored vertex either color, never matching
    a neighbor; the last painter wins (normal play)."""

    def __init__(self, graph: Graph, first_player: Player = Player.P1):
        if not graph.is_uncolored():
            raise InvalidGraphError("proper 2-coloring starts from an uncolored graph")
        self.graph = graph
        self.first_player = first_player
        self.adj = graph.neighbors()

    def initial_state(self):
        return (self.graph.colors, self.first_player)

    def mover(self, state) -> Player:
        return state[1]

    def legal_moves(self, state) -> list:
        colors, _ = state
        moves = []
        for v in range(self.graph.n_vertices):
            if colors[v] is not Color.UNCOLORED:
                continue
            for paint in (Color.BLUE, Color.RED):
                if any(colors[u] is paint for u in self.adj[v]):
                    continue
                moves.append((v, paint))
        return moves

    def apply(self, state, move):
        colors, mover = state
        v, paint = move
        painted = colors[:v] + (paint,) + colors[v + 1 :]
        return (painted, mover.opponent)

    def is_terminal(self, state) -> bool:
        return not self.legal_moves(state)

    def winner(self, state) -> Player:
        return state[1].opponent


@dataclass(frozen=True)
class PositiveCnfInstance:
    """Negation-free CNF with clause width at most 3."""

    n: int
    clauses: tuple  # of frozenset[int]

    def __post_init__(self):
        object.__setattr__(
            self, "clauses", tuple(frozenset(clause) for clause in self.clauses)
        )
        if self.n < 0:
            raise PositiveCnfError("variable count must be non-negative")
        for clause in self.clauses:
            if not 1 <= len(clause) <= 3:
                raise PositiveCnfError(
                    f"clause width must be 1..3, got {len(clause)}"
                )
            for var in clause:
                if not 0 <= var < self.n:
                    raise PositiveCnfError(f"variable x{var} out of range")

    @classmethod
    def from_cnf(cls, cnf: Cnf) -> "PositiveCnfInstance":
        for clause in cnf.clauses:
            for var, negated in clause:
                if negated:
                    raise NegationError(f"negated literal on x{var}")
        return cls(cnf.n, tuple(frozenset(var for var, _ in clause) for clause in cnf.clauses))

    def to_cnf(self) -> Cnf:
        return Cnf(
            self.n,
            tuple(tuple((var, False) for var in sorted(clause)) for clause in self.clauses),
        )

    def to_formula(self):
        return self.to_cnf().to_formula()

    def satisfied_by(self, true_vars) -> bool:
        return all(clause & true_vars for clause in self.clauses)


class PositiveCnfGame(AbstractGame):
    """True assigns true, False assigns false, any unassigned variable;
    the formula's final value decides the winner (True = P1)."""

    def __init__(self, instance: PositiveCnfInstance, first_player: Player = Player.P1):
        self.instance = instance
        self.first_player = first_player

    def initial_state(self):
        return ((None,) * self.instance.n, self.first_player)

    def mover(self, state) -> Player:
        return state[1]

    def legal_moves(self, state) -> list:
        values, _ = state
        return [v for v in range(self.instance.n) if values[v] is None]

    def apply(self, state, move):
        values, mover = state
        value = mover is Player.P1
        return (values[:move] + (value,) + values[move + 1 :], mover.opponent)

    def is_terminal(self, state) -> bool:
        return all(v is not None for v in state[0])

    def winner(self, state) -> Player:
        true_vars = {i for i, v in enumerate(state[0]) if v}
        return Player.P1 if self.instance.satisfied_by(true_vars) else Player.P2


def snort_game(graph: Graph, first_player: Player = Player.P1) -> SnortGame:
    return SnortGame(graph, first_player)


def p2c_game(graph: Graph, first_player: Player = Player.P1) -> ProperTwoColoringGame:
    return ProperTwoColoringGame(graph, first_player)


def positive_cnf_game(
    instance: PositiveCnfInstance, first_player: Player = Player.P1
) -> PositiveCnfGame:
    return PositiveCnfGame(instance, first_player)


def snort_to_position(graph: Graph, first_player: Player = Player.P1) -> Position:
    """Encode a Snort position as by-player-anywhere-same.

    Each edge (i, j) contributes the clause pair (xi or not xj) and
    (not xi or xj); painted vertices become pre-assigned variables
    (Blue -> true, Red -> false) and Blue moves as P1/True.
    """
    _check_snort_paint(graph)
    clauses = []
    for i, j in graph.sorted_edges():
        clauses.append(Or((Literal(i), Literal(j, True))))
        clauses.append(Or((Literal(i, True), Literal(j))))
    formula = And(tuple(clauses)) if clauses else TRUE
    pairs = [
        (v, color is Color.BLUE)
        for v, color in enumerate(graph.colors)
        if color is not Color.UNCOLORED
    ]
    assignment = Assignment.from_pairs(graph.n_vertices, pairs)
    return Position.initial(
        formula, graph.n_vertices, BY_PLAYER_ANYWHERE_SAME, assignment, first_player
    )


def p2c_to_position(graph: Graph) -> Position:
    """Encode a Proper 2-Coloring graph as either-anywhere-same.

    Each edge (i, j) contributes (xi and not xj) or (not xi and xj), which
    turns blatantly false exactly when both endpoints get the same value.
    """
    if not graph.is_uncolored():
        raise InvalidGraphError("proper 2-coloring reduction takes an uncolored graph")
    gadgets = []
    for i, j in graph.sorted_edges():
        gadgets.append(
            Or(
                (
                    And((Literal(i), Literal(j, True))),
                    And((Literal(i, True), Literal(j))),
                )
            )
        )
    formula = And(tuple(gadgets)) if gadgets else TRUE
    return Position.initial(formula, graph.n_vertices, EITHER_ANYWHERE_SAME)


def qbf_cnf_to_either_local_same(cnf: Cnf) -> Position:
    """Encode a CNF alternating-quantifier game as either-local-same.

    Clauses whose largest variable index is odd get a padded copy of the
    next variable, (x_{l+1} and not x_{l+1}), so the final assignment into
    every clause lands on an even index.  The variable count is padded to
    the next odd value above the input's count, even if the last variable
    then never appears.
    """
    gamma = []
    for clause in cnf.clauses:
        top = max(var for var, _ in clause)
        literals = tuple(Literal(var, negated) for var, negated in clause)
        if top % 2 == 0:
            gamma.append(Or(literals))
        else:
            pad = And((Literal(top + 1), Literal(top + 1, True)))
            gamma.append(Or(literals + (pad,)))
    m = cnf.n + 1 if cnf.n % 2 == 0 else cnf.n + 2
    formula = And(tuple(gamma)) if gamma else TRUE
    return Position.initial(formula, m, EITHER_LOCAL_SAME)


def positive_cnf_to_bpad(
    instance: PositiveCnfInstance, first_player: Player = Player.P1
) -> Position:
    """Identity embedding of a positive instance into by-player-anywhere-different."""
    return Position.initial(
        instance.to_formula(),
        instance.n,
        BY_PLAYER_ANYWHERE_DIFFERENT,
        mover=first_player,
    )


def toy_positive_to_ead(
    instance: PositiveCnfInstance, first_player: Player = Player.P1
) -> Position:
    """Identity embedding of a positive instance into either-anywhere-different."""
    return Position.initial(
        instance.to_formula(),
        instance.n,
        EITHER_ANYWHERE_DIFFERENT,
        mover=first_player,
    )


@dataclass
class ReductionCheck:
    """Dual-solve result for one instance."""

    source_winner: Player
    reduced_winner: Player
    source_outcome: Outcome
    reduced_outcome: Outcome

    @property
    def agree(self) -> bool:
        return self.source_winner is self.reduced_winner


def check_snort(
    graph: Graph,
    first_player: Player = Player.P1,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ReductionCheck:
    source = solve_abstract(SnortGame(graph, first_player), node_budget)
    reduced = solve(snort_to_position(graph, first_player), node_budget)
    return ReductionCheck(source.winner, reduced.winner, source, reduced)


def check_p2c(graph: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> ReductionCheck:
    source = solve_abstract(ProperTwoColoringGame(graph), node_budget)
    reduced = solve(p2c_to_position(graph), node_budget)
    return ReductionCheck(source.winner, reduced.winner, source, reduced)


def check_qbf_cnf(cnf: Cnf, node_budget: int = DEFAULT_NODE_BUDGET) -> ReductionCheck:
    """Alternating-quantifier truth of the CNF vs first-player win of the
    padded either-local-same game."""
    source_position = Position.initial(cnf.to_formula(), cnf.n, EITHER_LOCAL_DIFFERENT)
    source = solve(source_position, node_budget)
    reduced = solve(qbf_cnf_to_either_local_same(cnf), node_budget)
    return ReductionCheck(source.winner, reduced.winner, source, reduced)


def check_positive_cnf(
    instance: PositiveCnfInstance,
    first_player: Player = Player.P1,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ReductionCheck:
    source = solve_abstract(PositiveCnfGame(instance, first_player), node_budget)
    reduced = solve(positive_cnf_to_bpad(instance, first_player), node_budget)
    return ReductionCheck(source.winner, reduced.winner, source, reduced)


def toy_positive_equivalence_check(
    instance: PositiveCnfInstance,
    first_player: Player = Player.P1,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ReductionCheck:
    """Solve the instance with and without the per-player value restriction.

    Lifting the restriction never helps either player on a negation-free
    formula, so the winners should always agree; source is the restricted
    (by-player-anywhere-different) game, reduced the free
    (either-anywhere-different) one.
    """
    source = solve(positive_cnf_to_bpad(instance, first_player), node_budget)
    reduced = solve(toy_positive_to_ead(instance, first_player), node_budget)
    return ReductionCheck(source.winner, reduced.winner, source, reduced)


class GraphFormatError(Exception):
    """Malformed graph file."""


def parse_graph(text: str) -> Graph:
    """Read the graph file format: "graph <n>", then "e <i> <j>" per edge
    and optional "paint <i> <blue|red>" lines."""
    n = None
    edges = []
    paint = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "graph":
            if n is not None:
                raise GraphFormatError(f"duplicate graph line (line {lineno})")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(f"bad graph line {line!r} (line {lineno})")
            n = int(parts[1])
        elif parts[0] == "e":
            if len(parts) != 3 or not parts[1].isdigit() or not parts[2].isdigit():
                raise GraphFormatError(f"bad edge line {line!r} (line {lineno})")
            edges.append((int(parts[1]), int(parts[2])))
        elif parts[0] == "paint":
            if len(parts) != 3 or not parts[1].isdigit() or parts[2] not in ("blue", "red"):
                raise GraphFormatError(f"bad paint line {line!r} (line {lineno})")
            v = int(parts[1])
            if v in paint:
                raise GraphFormatError(f"vertex {v} painted twice (line {lineno})")
            paint[v] = Color.BLUE if parts[2] == "blue" else Color.RED
        else:
            raise GraphFormatError(f"unrecognized line {line!r} (line {lineno})")
    if n is None:
        raise GraphFormatError("missing graph line")
    colors = [Color.UNCOLORED] * n
    for v, color in paint.items():
        if not 0 <= v < n:
            raise GraphFormatError(f"painted vertex {v} out of range")
        colors[v] = color
    try:
        return Graph.build(n, edges, colors)
    except InvalidGraphError as e:
        raise GraphFormatError(str(e)) from None


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n_vertices}"]
    lines.extend(f"e {i} {j}" for i, j in g.sorted_edges())
    lines.extend(
        f"paint {v} {color.value}"
        for v, color in enumerate(g.colors)
        if color is not Color.UNCOLORED
    )
    return "\n".join(lines) + "\n"
