"""Two-player dialogue game characterising grounded justification.

The proponent opens with the argument under examination.  Players then
alternate: the opponent must defeat the previous proponent move, the
proponent must strictly defeat (defeat without counter-defeat) the
previous opponent move, and the proponent may never repeat one of its own
earlier moves in the same line of play.  Whoever cannot move loses.  The
proponent has a winning strategy exactly when the argument belongs to the
grounded extension; the search below is memoized on (last proponent move,
set of proponent moves used so far).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .afsem import Framework, Handle


class Player(Enum):
    PROPONENT = "P"
    OPPONENT = "O"

    @property
    def other(self) -> "Player":
        return Player.OPPONENT if self is Player.PROPONENT else Player.PROPONENT


@dataclass(frozen=True)
class Move:
    player: Player
    argument: Handle


@dataclass(frozen=True)
class StrategyNode:
    """A proponent move plus a winning answer for every opponent reply."""

    argument: Handle
    replies: tuple[tuple[Handle, "StrategyNode"], ...]


# ======================================================================
# Interactive game state
# ======================================================================

@dataclass
class Game:
    """A single line of play, usable as an explorable state machine."""

    framework: Framework
    moves: list[Move] = field(default_factory=list)

    def start(self, argument: Handle) -> None:
        if self.moves:
            raise ValueError("game already started")
        if argument not in set(self.framework.arguments):
            raise ValueError("argument not in framework")
        self.moves.append(Move(Player.PROPONENT, argument))

    @property
    def to_move(self) -> Player:
        return Player.PROPONENT if len(self.moves) % 2 == 0 else Player.OPPONENT

    @property
    def proponent_used(self) -> frozenset[Handle]:
        return frozenset(m.argument for m in self.moves if m.player is Player.PROPONENT)

    def legal_moves(self) -> tuple[Handle, ...]:
        if not self.moves:
            return tuple(self.framework.arguments)
        order = {a: i for i, a in enumerate(self.framework.arguments)}
        last = self.moves[-1].argument
        if self.to_move is Player.OPPONENT:
            options = self.framework.defeaters_of[last]
        else:
            options = frozenset(
                a for a in self.framework.defeaters_of[last]
                if self.framework.strictly_defeats(a, last)
            ) - self.proponent_used
        return tuple(sorted(options, key=order.__getitem__))

    def play(self, argument: Handle) -> None:
        if argument not in self.legal_moves():
            raise ValueError("illegal move")
        self.moves.append(Move(self.to_move, argument))

    @property
    def is_over(self) -> bool:
        return bool(self.moves) and not self.legal_moves()

    @property
    def winner(self) -> Player | None:
        if not self.is_over:
            return None
        return self.to_move.other


# ======================================================================
# Winning-strategy search
# ======================================================================

def provably_justified(framework: Framework,
                       argument: Handle) -> tuple[bool, StrategyNode | None]:
    """Whether the proponent has a winning strategy opening with ``argument``."""
    order = {a: i for i, a in enumerate(framework.arguments)}
    memo: dict[tuple[Handle, frozenset[Handle]], StrategyNode | None] = {}

    def proponent_wins(last: Handle, used: frozenset[Handle]) -> StrategyNode | None:
        key = (last, used)
        if key in memo:
            return memo[key]
        replies: list[tuple[Handle, StrategyNode]] = []
        lost = False
        for opponent in sorted(framework.defeaters_of[last], key=order.__getitem__):
            answer: StrategyNode | None = None
            counters = [
                a for a in framework.defeaters_of[opponent]
                if framework.strictly_defeats(a, opponent) and a not in used
            ]
            for candidate in sorted(counters, key=order.__getitem__):
                answer = proponent_wins(candidate, used | {candidate})
                if answer is not None:
                    break
            if answer is None:
                lost = True
                break
            replies.append((opponent, answer))
        node = None if lost else StrategyNode(last, tuple(replies))
        memo[key] = node
        return node

    if argument not in set(framework.arguments):
        raise ValueError("argument not in framework")
    strategy = proponent_wins(argument, frozenset({argument}))
    return (strategy is not None, strategy)


# ======================================================================
# Strategy exports
# ======================================================================

def strategy_to_text(node: StrategyNode, name_of=str) -> str:
    """Indented transcript: P moves at even depth, O replies nested."""
    lines: list[str] = []

    def walk(current: StrategyNode, depth: int) -> None:
        lines.append(f"{'  ' * depth}P: {name_of(current.argument)}")
        for opponent, answer in current.replies:
            lines.append(f"{'  ' * (depth + 1)}O: {name_of(opponent)}")
            walk(answer, depth + 2)

    walk(node, 0)
    return "\n".join(lines) + "\n"


def strategy_to_dot(node: StrategyNode, name_of=str) -> str:
    """GraphViz tree of the winning strategy."""
    lines = ["digraph strategy {", "  node [shape=box];"]
    counter = 0

    def fresh() -> str:
        nonlocal counter
        counter += 1
        return f"n{counter}"

    def walk(current: StrategyNode) -> str:
        me = fresh()
        lines.append(f'  {me} [label="P: {name_of(current.argument)}"];')
        for opponent, answer in current.replies:
            reply = fresh()
            lines.append(f'  {reply} [label="O: {name_of(opponent)}" shape=ellipse];')
            lines.append(f"  {me} -> {reply};")
            child = walk(answer)
            lines.append(f"  {reply} -> {child};")
        return me

    walk(node)
    lines.append("}")
    return "\n".join(lines) + "\n"
