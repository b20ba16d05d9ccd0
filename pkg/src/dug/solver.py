"""Constructive solver for the Hanoi game, plus a move-path validator.

The solver builds a path of at most 2^k - 1 moves between any two states of
equal length.  It is not a shortest-path solver: paths are exactly the output
of the recursive construction, and only for pairs with disjoint support is the
length guaranteed minimal (where it necessarily equals 2^k - 1).

Move text form: ``a<value>`` for an adjustment, ``i`` for an involution; a
path is whitespace-separated moves, e.g. ``a3 i a0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .hanoi import (
    INVOLUTE,
    Adjust,
    HanoiParams,
    Involute,
    InvalidState,
    Move,
    MoveError,
    State,
    apply_move,
    make_state,
)


class IllegalMoveAt(ValueError):
    """A path move failed; carries the 1-based index of the offending move."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"move {index}: {reason}")
        self.index = index
        self.reason = reason


@dataclass(frozen=True)
class MovePath:
    """A start state and a move sequence.  Legality is checked by verify_path."""

    start: State
    moves: tuple[Move, ...]

    def __len__(self) -> int:
        return len(self.moves)


def _alternating(first: int, second: int, length: int) -> State:
    return tuple(first if i % 2 == 0 else second for i in range(length))


@lru_cache(maxsize=None)
def _construct(a: State, b: State) -> tuple[Move, ...]:
    # Recursion from the 2^k - 1 upper-bound proof.  Moves carry no positions,
    # so a solution for the length-(k-1) tails replays verbatim on the full
    # states: tail adjustments stay adjustments, and a tail involution's
    # segment never extends to position 1 because every intermediate first
    # entry is a_1 or b_1, neither of which is among the swapped values.
    k = len(a)
    if a == b:
        return ()
    if k == 1:
        return (Adjust(b[0]),)
    if a[0] == b[0]:
        return _construct(a[1:], b[1:])
    # Walk a to the alternating state (a_1, b_1, a_1, ...), flip it wholesale
    # to (b_1, a_1, b_1, ...) with one involution, then walk on to b.
    mid = _alternating(a[0], b[0], k)
    flipped = _alternating(b[0], a[0], k)
    return _construct(a[1:], mid[1:]) + (INVOLUTE,) + _construct(flipped[1:], b[1:])


def solve(a, b, params: HanoiParams) -> MovePath:
    """Path from ``a`` to ``b`` with at most 2^k - 1 moves.

    Every intermediate state has first entry a_1 or b_1; consequently the path
    stays within proper states whenever ``a`` and ``b`` are proper.
    """
    start = make_state(a, params)
    goal = make_state(b, params)
    return MovePath(start=start, moves=_construct(start, goal))


def verify_path(path: MovePath, params: HanoiParams) -> State:
    """Replay a path, returning the final state.

    Raises :class:`IllegalMoveAt` naming the first illegal move (1-based), or
    an :class:`~dug.hanoi.InvalidState` error if the start itself is invalid.
    """
    state = make_state(path.start, params)
    for i, move in enumerate(path.moves, start=1):
        try:
            state = apply_move(state, move, params)
        except MoveError as exc:
            raise IllegalMoveAt(i, str(exc)) from exc
    return state


def path_states(path: MovePath, params: HanoiParams) -> list[State]:
    """All states visited by a path, start included; validates every move."""
    state = make_state(path.start, params)
    states = [state]
    for i, move in enumerate(path.moves, start=1):
        try:
            state = apply_move(state, move, params)
        except MoveError as exc:
            raise IllegalMoveAt(i, str(exc)) from exc
        states.append(state)
    return states


def format_move(move: Move) -> str:
    if isinstance(move, Adjust):
        return f"a{move.value}"
    return "i"


def parse_move(text: str) -> Move:
    if text == "i":
        return INVOLUTE
    if text.startswith("a"):
        try:
            return Adjust(int(text[1:]))
        except ValueError:
            pass
    raise ValueError(f"malformed move text {text!r}")


def format_path(moves) -> str:
    return " ".join(format_move(m) for m in moves)


def parse_path(text: str) -> tuple[Move, ...]:
    return tuple(parse_move(part) for part in text.split())
