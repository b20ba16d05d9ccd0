"""Hanoi states, moves, and the implicit state graphs behind them.

A Hanoi state of length k over the alphabet {0, ..., r} is a sequence with no
two consecutive equal entries; a *proper* state additionally has a nonzero
first entry.  Two moves act on a state:

* an *adjustment* replaces the last entry with any other value that keeps the
  state valid;
* an *involution* takes the longest tail segment on which the last two values
  alternate and swaps those two values throughout the segment.

The state graph joins each state to every state reachable by one move.  With
all states allowed the graph is r-regular for k >= 2; restricting to proper
states forbids any move that would zero the first entry.

States are plain tuples of ints.  Positions are 1-based in documentation and
error messages (position 1 is the first entry); storage is 0-based.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterator

import numpy as np

State = tuple[int, ...]

#: Default ceiling on explicit state enumeration (number of states).
DEFAULT_STATE_CAP = 1 << 26


class InvalidState(ValueError):
    """A sequence that is not a valid Hanoi state for the given parameters."""


class LengthMismatch(InvalidState):
    """Entry count differs from the required state length."""


class OutOfAlphabet(InvalidState):
    """An entry lies outside {0, ..., r}."""


class ConsecutiveEqual(InvalidState):
    """Two consecutive entries are equal."""


class ImproperLeadingZero(InvalidState):
    """A proper state may not start with 0."""


class MoveError(ValueError):
    """A move that cannot be applied to the given state."""


class TooShort(MoveError):
    """The state is too short for the requested operation."""


class IllegalAdjust(MoveError):
    """Adjustment target conflicts with the last entries (or 0 when proper, k=1)."""


class IllegalInvolute(MoveError):
    """Involution is undefined (k=1) or would zero the first entry of a proper state."""


class TooLarge(ValueError):
    """Explicit enumeration would exceed the configured state cap."""


@dataclass(frozen=True)
class HanoiParams:
    """Parameters of a Hanoi state space: alphabet bound r, length k, properness."""

    r: int
    k: int
    proper: bool = False

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    def state_count(self) -> int:
        """Number of valid states: r^k proper, (r+1) * r^(k-1) otherwise."""
        if self.proper:
            return self.r**self.k
        return (self.r + 1) * self.r ** (self.k - 1)


@dataclass(frozen=True)
class Adjust:
    """Replace the last entry with ``value``."""

    value: int


@dataclass(frozen=True)
class Involute:
    """Swap the last two values throughout the longest alternating tail segment."""


INVOLUTE = Involute()

Move = Adjust | Involute


def make_state(entries, params: HanoiParams) -> State:
    """Validate ``entries`` as a Hanoi state under ``params`` and return it as a tuple.

    Never repairs input: any violation raises an :class:`InvalidState` subclass.
    """
    state = tuple(operator.index(e) for e in entries)
    if len(state) != params.k:
        raise LengthMismatch(f"expected {params.k} entries, got {len(state)}")
    for i, e in enumerate(state):
        if not 0 <= e <= params.r:
            raise OutOfAlphabet(f"entry {e} at position {i + 1} not in 0..{params.r}")
        if i > 0 and e == state[i - 1]:
            raise ConsecutiveEqual(f"equal entries {e} at positions {i}, {i + 1}")
    if params.proper and state[0] == 0:
        raise ImproperLeadingZero("proper state must not start with 0")
    return state


def involution_segment(x: State) -> int:
    """Return the 1-based start j of the longest tail segment alternating in the last two values.

    Positions j..k all lie in {x_k, x_{k-1}}; alternation is automatic because
    consecutive entries of a valid state differ.  Always j <= k-1.
    """
    k = len(x)
    if k < 2:
        raise TooShort("involution segment needs a state of length >= 2")
    pair = (x[-1], x[-2])
    j = k - 1
    while j > 1 and x[j - 2] in pair:
        j -= 1
    return j


def apply_move(x: State, move: Move, params: HanoiParams) -> State:
    """Apply one move to a valid state, returning the new state.

    Raises :class:`IllegalAdjust` / :class:`IllegalInvolute` when the move is
    not available from ``x`` under ``params``.
    """
    k = len(x)
    if isinstance(move, Adjust):
        v = move.value
        if not 0 <= v <= params.r:
            raise IllegalAdjust(f"target {v} not in 0..{params.r}")
        if v == x[-1]:
            raise IllegalAdjust(f"target {v} equals the current last entry")
        if k > 1 and v == x[-2]:
            raise IllegalAdjust(f"target {v} equals the entry at position {k - 1}")
        if k == 1 and params.proper and v == 0:
            raise IllegalAdjust("adjustment to 0 forbidden at k=1 for proper states")
        return x[:-1] + (v,)
    if k < 2:
        raise IllegalInvolute("involution needs a state of length >= 2")
    j = involution_segment(x)
    a, b = x[-1], x[-2]
    swapped = x[: j - 1] + tuple(b if e == a else a for e in x[j - 1 :])
    if params.proper and swapped[0] == 0:
        raise IllegalInvolute("involution would set position 1 to 0 on a proper state")
    return swapped


def legal_moves(x: State, params: HanoiParams) -> list[Move]:
    """All moves applicable to ``x``: adjustments in ascending target order, then involution.

    For improper states with k >= 2 there are always exactly r moves
    (r-1 adjustments plus the involution), matching the r-regular state graph.
    """
    k = len(x)
    forbidden = {x[-1]}
    if k > 1:
        forbidden.add(x[-2])
    elif params.proper:
        forbidden.add(0)
    moves: list[Move] = [Adjust(v) for v in range(params.r + 1) if v not in forbidden]
    if k >= 2:
        try:
            apply_move(x, INVOLUTE, params)
        except IllegalInvolute:
            pass
        else:
            moves.append(INVOLUTE)
    return moves


def neighbors(x: State, params: HanoiParams) -> list[State]:
    """States one move away from ``x``.  Never contains ``x``; contains no duplicates."""
    return [apply_move(x, m, params) for m in legal_moves(x, params)]


def has_disjoint_support(a: State, b: State) -> bool:
    """True iff no value occurs in both states.  Such pairs force maximal game length."""
    if len(a) != len(b):
        raise LengthMismatch(f"states have lengths {len(a)} and {len(b)}")
    return not set(a) & set(b)


def iter_states(params: HanoiParams) -> Iterator[State]:
    """Yield all valid states in lexicographic order of their entry sequences."""
    r, k = params.r, params.k
    first = range(1, r + 1) if params.proper else range(r + 1)

    def extend(prefix: State) -> Iterator[State]:
        if len(prefix) == k:
            yield prefix
            return
        last = prefix[-1]
        for v in range(r + 1):
            if v != last:
                yield from extend(prefix + (v,))

    for f in first:
        yield from extend((f,))


def enumerate_states(params: HanoiParams, cap: int = DEFAULT_STATE_CAP) -> list[State]:
    """All valid states in lexicographic order.

    Raises :class:`TooLarge` when the state count exceeds ``cap``; the count is
    checked against the closed form before any enumeration happens.
    """
    count = params.state_count()
    if count > cap:
        raise TooLarge(f"{count} states exceed the cap of {cap}")
    return list(iter_states(params))


def format_state(x: State) -> str:
    """Text form: comma-separated decimal entries, no spaces, e.g. ``1,2,3,4``."""
    return ",".join(str(e) for e in x)


def parse_state(text: str) -> State:
    """Inverse of :func:`format_state`.  Syntactic only; validate with :func:`make_state`."""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InvalidState(f"malformed state text {text!r}") from exc


# ---------------------------------------------------------------------------
# Lexicographic index arithmetic.
#
# States are ranked by mixed-radix digits: the first entry has r (proper) or
# r+1 (improper) choices, every later entry has r choices (anything except its
# predecessor, in ascending value order).  digit_1 = x_1 - 1 (proper) or x_1;
# digit_i = x_i - [x_i > x_{i-1}] for i >= 2.  The rank in enumerate_states
# order is the big-endian value of the digit string, which is what the
# explicit-graph builder uses to turn neighbor states into vertex ids.
# ---------------------------------------------------------------------------


def state_index(x: State, params: HanoiParams) -> int:
    """Rank of a valid state in :func:`enumerate_states` order."""
    r = params.r
    idx = x[0] - 1 if params.proper else x[0]
    for i in range(1, len(x)):
        d = x[i] - (1 if x[i] > x[i - 1] else 0)
        idx = idx * r + d
    return idx


def state_matrix(params: HanoiParams, cap: int = DEFAULT_STATE_CAP) -> np.ndarray:
    """All valid states as an (n, k) int32 matrix, rows in lexicographic order."""
    n = params.state_count()
    if n > cap:
        raise TooLarge(f"{n} states exceed the cap of {cap}")
    r, k = params.r, params.k
    rank = np.arange(n, dtype=np.int64)
    out = np.empty((n, k), dtype=np.int32)
    rest = r ** (k - 1)
    first_digit = rank // rest
    out[:, 0] = first_digit + 1 if params.proper else first_digit
    rem = rank % rest
    prev = out[:, 0]
    for i in range(1, k):
        weight = r ** (k - 1 - i)
        digit = rem // weight
        rem = rem % weight
        out[:, i] = digit + (digit >= prev)
        prev = out[:, i]
    return out


def encode_states(matrix: np.ndarray, params: HanoiParams) -> np.ndarray:
    """Vectorized :func:`state_index` over the rows of an (n, k) state matrix."""
    r = params.r
    idx = (matrix[:, 0].astype(np.int64) - 1) if params.proper else matrix[:, 0].astype(np.int64)
    for i in range(1, matrix.shape[1]):
        digit = matrix[:, i] - (matrix[:, i] > matrix[:, i - 1])
        idx = idx * r + digit
    return idx
