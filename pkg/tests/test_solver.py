"""Solvers: memoized search vs the naive oracle, the forced-line simulator,
and the generic abstract-game search."""

import itertools
import random

import pytest

from qbfgames.engine import (
    ALL_CONFIGS,
    BY_PLAYER_LOCAL_DIFFERENT,
    BY_PLAYER_LOCAL_SAME,
    EITHER_ANYWHERE_DIFFERENT,
    EITHER_ANYWHERE_SAME,
    EITHER_LOCAL_DIFFERENT,
    GameTrace,
    Move,
    Player,
    Position,
    replay,
)
from qbfgames.formula import TRUE, Assignment, parse_formula
from qbfgames.generators import random_position
from qbfgames.reductions import (
    Graph,
    PositiveCnfGame,
    PositiveCnfInstance,
    ProperTwoColoringGame,
    SnortGame,
)
from qbfgames.solver import (
    BudgetExceededError,
    NaiveLimitError,
    UnsupportedConfigError,
    simulate_local_by_player,
    solve,
    solve_abstract,
    solve_naive,
)

from _corpus import SAMPLE_TEXT, SAMPLE_VARS


def sample_position(config):
    return Position.initial(parse_formula(SAMPLE_TEXT, SAMPLE_VARS), SAMPLE_VARS, config)


class TestSolve:
    def test_one_move_game(self):
        p = Position.initial(parse_formula("x0", 1), 1, EITHER_LOCAL_DIFFERENT)
        out = solve(p)
        assert out.winner is Player.P1
        assert out.variation == [Move(0, True)]

    def test_terminal_position_passthrough(self):
        p = Position.initial(
            parse_formula("x0", 1),
            1,
            EITHER_LOCAL_DIFFERENT,
            Assignment.from_pairs(1, [(0, False)]),
        )
        out = solve(p)
        assert out.winner is Player.P2
        assert out.variation == []

    def test_forced_rulesets_on_sample_formula(self):
        assert solve(sample_position(BY_PLAYER_LOCAL_SAME)).winner is Player.P2
        assert solve(sample_position(BY_PLAYER_LOCAL_DIFFERENT)).winner is Player.P2

    def test_sample_formula_agrees_with_naive_as_full_qbf(self):
        p = sample_position(EITHER_LOCAL_DIFFERENT)
        assert solve(p).winner is solve_naive(p).winner

    def test_deterministic(self):
        p = sample_position(EITHER_ANYWHERE_SAME)
        a, b = solve(p), solve(p)
        assert a.winner is b.winner
        assert a.variation == b.variation
        assert a.nodes == b.nodes

    def test_warm_memo_reproduces_outcome(self):
        p = sample_position(EITHER_ANYWHERE_DIFFERENT)
        memo = {}
        cold = solve(p, memo=memo)
        warm = solve(p, memo=memo)
        assert warm.winner is cold.winner
        assert warm.variation == cold.variation
        assert warm.nodes == 0  # everything served from the memo

    def test_budget_error(self):
        p = sample_position(EITHER_ANYWHERE_DIFFERENT)
        with pytest.raises(BudgetExceededError):
            solve(p, node_budget=5)

    def test_principal_variation_replays_to_reported_winner(self):
        rng = random.Random(21)
        for config in ALL_CONFIGS:
            for _ in range(40):
                p = random_position(rng, config, rng.randint(1, 7), rng.randint(1, 5))
                out = solve(p)
                result = replay(GameTrace(p, out.variation))
                assert result.error is None
                assert result.winner is out.winner


class TestOracleEquivalence:
    def test_random_suite_all_configs(self):
        rng = random.Random(31)
        for config in ALL_CONFIGS:
            for _ in range(150):
                p = random_position(rng, config, rng.randint(1, 8), rng.randint(1, 6))
                assert solve(p).winner is solve_naive(p).winner

    def test_naive_limit(self):
        p = Position.initial(parse_formula("x0", 13), 13, EITHER_LOCAL_DIFFERENT)
        with pytest.raises(NaiveLimitError):
            solve_naive(p)

    def test_naive_counts_more_nodes_than_memoized(self):
        p = sample_position(EITHER_ANYWHERE_DIFFERENT)
        assert solve_naive(p).nodes > solve(p).nodes


class TestSimulation:
    def test_forced_same_goal_line(self):
        out, trace = simulate_local_by_player(sample_position(BY_PLAYER_LOCAL_SAME))
        assert out.winner is Player.P2
        assert out.variation == [
            Move(0, True), Move(1, False), Move(2, True), Move(3, False)
        ]
        assert out.nodes == 4

    def test_forced_different_goal_line(self):
        out, trace = simulate_local_by_player(sample_position(BY_PLAYER_LOCAL_DIFFERENT))
        assert out.winner is Player.P2
        assert len(out.variation) == 7
        assert trace.moves == out.variation

    def test_constant_true_formula(self):
        p = Position.initial(TRUE, 2, BY_PLAYER_LOCAL_DIFFERENT)
        out, trace = simulate_local_by_player(p)
        assert out.variation == [Move(0, True), Move(1, False)]
        assert out.winner is Player.P1

    def test_wrong_config_rejected(self):
        with pytest.raises(UnsupportedConfigError):
            simulate_local_by_player(sample_position(EITHER_LOCAL_DIFFERENT))

    def test_matches_naive_and_touches_at_most_n(self):
        rng = random.Random(41)
        for config in (BY_PLAYER_LOCAL_SAME, BY_PLAYER_LOCAL_DIFFERENT):
            for _ in range(80):
                n = rng.randint(1, 8)
                p = random_position(rng, config, n, rng.randint(1, 6))
                out, _ = simulate_local_by_player(p)
                assert out.nodes <= n
                assert out.winner is solve_naive(p).winner
                assert out.winner is solve(p).winner


class TestAbstractGames:
    def test_snort_single_vertex_first_player_wins(self):
        game = SnortGame(Graph.build(1, []))
        out = solve_abstract(game)
        assert out.winner is Player.P1
        assert out.variation == [0]

    def test_p2c_on_an_edge_second_player_wins(self):
        game = ProperTwoColoringGame(Graph.build(2, [(0, 1)]))
        assert solve_abstract(game).winner is Player.P2

    def test_p2c_on_an_edge_matches_exhaustive_enumeration(self):
        # brute force over every maximal play sequence: with optimal play the
        # first player wins iff they can force an odd-length sequence
        game = ProperTwoColoringGame(Graph.build(2, [(0, 1)]))

        def value(state):
            moves = game.legal_moves(state)
            if not moves:
                return game.winner(state)
            mover = game.mover(state)
            results = [value(game.apply(state, m)) for m in moves]
            return mover if mover in results else mover.opponent

        assert value(game.initial_state()) is solve_abstract(game).winner

    def test_positive_cnf_conjunction_false_wins(self):
        inst = PositiveCnfInstance(2, (frozenset({0}), frozenset({1})))
        assert solve_abstract(PositiveCnfGame(inst)).winner is Player.P2

    def test_positive_cnf_single_clause_true_wins(self):
        inst = PositiveCnfInstance(2, (frozenset({0, 1}),))
        assert solve_abstract(PositiveCnfGame(inst)).winner is Player.P1

    def test_budget_applies(self):
        game = SnortGame(Graph.build(4, [(0, 1), (2, 3)]))
        with pytest.raises(BudgetExceededError):
            solve_abstract(game, node_budget=2)

    def test_pv_is_playable(self):
        game = SnortGame(Graph.build(3, [(0, 1), (1, 2)]))
        out = solve_abstract(game)
        state = game.initial_state()
        for move in out.variation:
            assert move in game.legal_moves(state)
            state = game.apply(state, move)
        assert game.is_terminal(state)
        assert game.winner(state) is out.winner
