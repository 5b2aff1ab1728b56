"""A fixed two-party bit machine with exactly computable program-pair costs.

The machine interprets raw bit strings as programs built from 3-bit
opcodes.  It is deliberately tiny: just enough to emit channel bits,
branch on the partner's bits, write output, and echo a condition tape,
so that exhaustive search over all short programs stays affordable
while the behaviour is not trivial.

Opcode table (value of the 3 bits, MSB first):

    000  SEND0   emit '0' on the channel (discarded in single mode)
    001  SEND1   emit '1' on the channel
    010  RECV    read the next incoming bit; skip next instruction if 0
    011  OUT0    append '0' to the private output tape
    100  OUT1    append '1' to the private output tape
    101  READC   copy the next condition-tape bit to the output tape;
                 halts normally when the condition tape is exhausted
    110  JMP     move the program counter back 4 instructions (clamped
                 to instruction 0)
    111  HALT    halt normally

Any bit string is an acceptable program: a trailing group of fewer
than 3 bits, like a program counter past the end, means HALT.  Every
instruction costs one step.  In single-machine mode SEND bits go
nowhere and RECV always reads 0.  In interactive mode the two sides
exchange single bits in strict alternation (the A side owns odd
1-based transcript positions); a side that has halted or run out of
budget contributes literal '0' bits while the other side is still
running, and trailing filler after the last genuinely sent bit is
trimmed.

All complexity values returned here are relative to this fixed
machine; the package measures its own additive constants instead of
assuming any.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field

from .bitstrings import Bits, all_bitstrings, cat_length, check_bits, encode_pair
from .errors import BudgetExceeded

OP_SEND0 = 0
OP_SEND1 = 1
OP_RECV = 2
OP_OUT0 = 3
OP_OUT1 = 4
OP_READC = 5
OP_JMP = 6
OP_HALT = 7

RUNNING = "running"
HALTED = "halted"
ABORTED = "aborted"  # step budget or output cap exhausted

INFINITE = math.inf

BUDGET_ENV = "KCAGREE_BUDGET_MS"


@dataclass(frozen=True)
class VmLimits:
    """Resource caps for one machine run; all fields strictly positive."""

    max_steps: int
    max_output: int = 16
    max_transcript: int = 64

    def __post_init__(self) -> None:
        if self.max_steps <= 0 or self.max_output <= 0 or self.max_transcript <= 0:
            raise ValueError("all VmLimits fields must be strictly positive")


def step_preset(name: str):
    """Named step-budget presets as functions of the content length |pi x|.

    Each preset is floored at 8 steps so degenerate tiny inputs still
    get a usable budget.
    """
    presets = {
        "linear": lambda n: max(8, n),
        "n2": lambda n: max(8, n * n),
        "nlogn8": lambda n: max(8, 8 * n * max(1, math.ceil(math.log2(max(2, n))))),
    }
    try:
        return presets[name]
    except KeyError:
        raise ValueError(f"unknown step preset {name!r}; choose from {sorted(presets)}")


@dataclass(frozen=True)
class InteractionOutcome:
    """Result of one interactive run: transcript, outputs, and accounting."""

    transcript: Bits
    out_a: Bits
    out_b: Bits
    steps_a: int
    steps_b: int
    halted_a: bool
    halted_b: bool

    @property
    def halted(self) -> bool:
        return self.halted_a and self.halted_b


@dataclass
class Machine:
    """One side of the machine, steppable instruction by instruction."""

    code: Bits
    limits: VmLimits
    condition: Bits = ""
    ops: list[int] = field(init=False)
    pc: int = field(default=0, init=False)
    out: list[str] = field(init=False)
    cond_ptr: int = field(default=0, init=False)
    recv_ptr: int = field(default=0, init=False)
    steps: int = field(default=0, init=False)
    status: str = field(default=RUNNING, init=False)

    def __post_init__(self) -> None:
        check_bits(self.code, "program")
        self.ops = [
            int(self.code[i:i + 3], 2)
            for i in range(0, len(self.code) - 2, 3)
        ]
        self.out = []

    def output(self) -> Bits:
        return "".join(self.out)

    def _emit_out(self, bit: str) -> None:
        if len(self.out) >= self.limits.max_output:
            self.status = ABORTED
            return
        self.out.append(bit)

    def run_until_send(self, incoming: Bits) -> str | None:
        """Advance until the machine sends a bit, halts, or runs dry.

        ``incoming`` is the full history of bits sent by the partner;
        reads past its end yield '0'.  Returns the sent bit, or None if
        the machine stopped (``status`` tells how) without sending.
        """
        while self.status == RUNNING:
            if self.pc >= len(self.ops):
                self.status = HALTED
                return None
            if self.steps >= self.limits.max_steps:
                self.status = ABORTED
                return None
            op = self.ops[self.pc]
            self.steps += 1
            if op == OP_SEND0 or op == OP_SEND1:
                self.pc += 1
                return "1" if op == OP_SEND1 else "0"
            if op == OP_RECV:
                bit = incoming[self.recv_ptr] if self.recv_ptr < len(incoming) else "0"
                self.recv_ptr += 1
                self.pc += 2 if bit == "0" else 1
            elif op == OP_OUT0:
                self._emit_out("0")
                self.pc += 1
            elif op == OP_OUT1:
                self._emit_out("1")
                self.pc += 1
            elif op == OP_READC:
                if self.cond_ptr >= len(self.condition):
                    self.status = HALTED
                    return None
                self._emit_out(self.condition[self.cond_ptr])
                self.cond_ptr += 1
                self.pc += 1
            elif op == OP_JMP:
                self.pc = max(0, self.pc - 4)
            else:  # OP_HALT
                self.status = HALTED
                return None
        return None


@dataclass(frozen=True)
class RunResult:
    """Outcome of a single-machine run; ``halted`` False means timeout."""

    output: Bits
    steps: int
    halted: bool


def run_single(program: Bits, condition: Bits, limits: VmLimits) -> RunResult:
    """Run one machine with a condition tape and no partner.

    SEND bits are discarded and RECV reads a constant '0' stream, so
    single-mode behaviour is total and deterministic.  A run that
    exhausts ``max_steps`` (or the output cap) is reported with
    ``halted=False``; that is a modeled outcome, not an error.
    """
    m = Machine(code=program, limits=limits, condition=check_bits(condition, "condition"))
    while m.status == RUNNING:
        m.run_until_send("")  # sent bits vanish; loop until halt/abort
    return RunResult(output=m.output(), steps=m.steps, halted=m.status == HALTED)


def run_interactive(prog_a: Bits, prog_b: Bits, limits: VmLimits) -> InteractionOutcome:
    """Run two programs against each other in strict bit alternation.

    Turn k belongs to side A when k is even (0-based), so A owns the
    odd 1-based transcript positions.  A side that stops (halt or
    budget) fills its turns with literal '0' while the other side is
    still running; trailing filler after the last real bit is trimmed,
    which makes (halt, halt) produce the empty transcript.
    """
    a = Machine(code=prog_a, limits=limits)
    b = Machine(code=prog_b, limits=limits)
    slots: list[str] = []
    last_real = 0
    turn_a = True
    while a.status == RUNNING or b.status == RUNNING:
        if len(slots) >= limits.max_transcript:
            if a.status == RUNNING:
                a.status = ABORTED
            if b.status == RUNNING:
                b.status = ABORTED
            break
        side, other = (a, b) if turn_a else (b, a)
        if side.status == RUNNING:
            # partner bits live at the opposite parity: B fills 0-based
            # odd slots, A even slots
            sent = side.run_until_send("".join(slots[int(turn_a)::2]))
            if sent is not None:
                slots.append(sent)
                last_real = len(slots)
            else:
                # stopped without sending this turn; filler only if the
                # partner may still extend the transcript
                if other.status == RUNNING:
                    slots.append("0")
        else:
            slots.append("0")
        turn_a = not turn_a
    transcript = "".join(slots[:last_real])
    return InteractionOutcome(
        transcript=transcript,
        out_a=a.output(),
        out_b=b.output(),
        steps_a=a.steps,
        steps_b=b.steps,
        halted_a=a.status == HALTED,
        halted_b=b.status == HALTED,
    )


class _Budget:
    """Wall-clock guard for enumeration loops.

    The cap comes from the explicit argument or the KCAGREE_BUDGET_MS
    environment variable; absent both, enumeration is unbounded.
    """

    def __init__(self, budget_ms: float | None):
        if budget_ms is None:
            env = os.environ.get(BUDGET_ENV)
            budget_ms = float(env) if env else None
        self.deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
        self._count = 0

    def tick(self, context: str) -> None:
        self._count += 1
        if self.deadline is not None and self._count % 256 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceeded(f"{context}: wall-time budget exhausted")


def plain_complexity(
    x: Bits,
    condition: Bits,
    limits: VmLimits,
    max_prog_len: int,
    budget_ms: float | None = None,
) -> float:
    """Length of the shortest program producing ``x`` from ``condition``.

    Exhaustive search over all programs of length 0..max_prog_len in
    length-then-numeric order; returns INFINITE when no program within
    the bound halts with exactly ``x``.
    """
    if max_prog_len > 20:
        raise ValueError("max_prog_len > 20 exceeds the desk-scale guard")
    budget = _Budget(budget_ms)
    for length in range(max_prog_len + 1):
        for program in all_bitstrings(length):
            budget.tick("plain_complexity")
            r = run_single(program, condition, limits)
            if r.halted and r.output == x:
                return length
    return INFINITE


def interactive_complexity(
    pi: Bits,
    x: Bits,
    limits: VmLimits,
    max_pair_len: int,
    budget_ms: float | None = None,
) -> float:
    """Minimum |a|+|b| over program pairs realising (pi, x, x).

    A pair counts when the interactive run halts on both sides within
    ``limits.max_steps`` steps per side, the transcript equals ``pi``,
    and both outputs equal ``x``.  Searched in total-length order, so
    the first hit is the minimum; INFINITE when the bound is exhausted.
    """
    if max_pair_len > 18:
        raise ValueError("max_pair_len > 18 exceeds the desk-scale guard")
    budget = _Budget(budget_ms)
    for total in range(max_pair_len + 1):
        for len_a in range(total + 1):
            for prog_a in all_bitstrings(len_a):
                for prog_b in all_bitstrings(total - len_a):
                    budget.tick("interactive_complexity")
                    r = run_interactive(prog_a, prog_b, limits)
                    if (
                        r.halted
                        and r.transcript == pi
                        and r.out_a == x
                        and r.out_b == x
                    ):
                        return total
    return INFINITE


class InteractionTable:
    """Reachability table: every (transcript, output) pair realisable by
    program pairs up to a length bound, with minimal cost per step budget.

    For each outcome the table keeps a Pareto frontier of
    (pair_length, steps) points: ``value(pi, x, t)`` is then the exact
    interactive complexity at per-side step bound t, for any t up to
    the ``limits.max_steps`` used during the build.
    """

    def __init__(self, limits: VmLimits, max_pair_len: int, budget_ms: float | None = None):
        self.limits = limits
        self.max_pair_len = max_pair_len
        self.frontier: dict[tuple[Bits, Bits], list[tuple[int, int]]] = {}
        budget = _Budget(budget_ms)
        for total in range(max_pair_len + 1):
            for len_a in range(total + 1):
                for prog_a in all_bitstrings(len_a):
                    for prog_b in all_bitstrings(total - len_a):
                        budget.tick("InteractionTable")
                        r = run_interactive(prog_a, prog_b, limits)
                        if not (r.halted and r.out_a == r.out_b):
                            continue
                        key = (r.transcript, r.out_a)
                        steps = max(r.steps_a, r.steps_b)
                        self._add(key, total, steps)

    def _add(self, key, length, steps) -> None:
        points = self.frontier.setdefault(key, [])
        for (pl, ps) in points:
            if pl <= length and ps <= steps:
                return  # dominated
        points[:] = [(pl, ps) for (pl, ps) in points if not (length <= pl and steps <= ps)]
        points.append((length, steps))

    def value(self, pi: Bits, x: Bits, max_steps: int | None = None) -> float:
        """Exact CI value at step bound ``max_steps`` (default: build bound)."""
        if max_steps is None:
            max_steps = self.limits.max_steps
        if max_steps > self.limits.max_steps:
            raise ValueError("queried step bound exceeds the build bound")
        best = INFINITE
        for (length, steps) in self.frontier.get((pi, x), ()):
            if steps <= max_steps and length < best:
                best = length
        return best

    def outcomes(self):
        return self.frontier.keys()


class PlainTable:
    """Reachability table for single-machine runs under one condition tape."""

    def __init__(
        self,
        condition: Bits,
        limits: VmLimits,
        max_prog_len: int,
        budget_ms: float | None = None,
    ):
        self.condition = condition
        self.limits = limits
        self.max_prog_len = max_prog_len
        self.frontier: dict[Bits, list[tuple[int, int]]] = {}
        budget = _Budget(budget_ms)
        for length in range(max_prog_len + 1):
            for program in all_bitstrings(length):
                budget.tick("PlainTable")
                r = run_single(program, condition, limits)
                if not r.halted:
                    continue
                points = self.frontier.setdefault(r.output, [])
                dominated = False
                for (pl, ps) in points:
                    if pl <= length and ps <= r.steps:
                        dominated = True
                        break
                if dominated:
                    continue
                points[:] = [
                    (pl, ps) for (pl, ps) in points
                    if not (length <= pl and r.steps <= ps)
                ]
                points.append((length, r.steps))

    def value(self, x: Bits, max_steps: int | None = None) -> float:
        if max_steps is None:
            max_steps = self.limits.max_steps
        if max_steps > self.limits.max_steps:
            raise ValueError("queried step bound exceeds the build bound")
        best = INFINITE
        for (length, steps) in self.frontier.get(x, ()):
            if steps <= max_steps and length < best:
                best = length
        return best


def pair_plain_complexity(
    pi: Bits,
    x: Bits,
    limits: VmLimits,
    max_prog_len: int,
    budget_ms: float | None = None,
) -> float:
    """Plain complexity of the encoded pair, C(pi, x) = C(encode(pi, x))."""
    return plain_complexity(
        encode_pair(pi, x).encoded, "", limits, max_prog_len, budget_ms,
    )


def split_description_bits(pair_len: float) -> int:
    """Cost charged for describing where a program pair splits.

    A pair of total length L has L+1 possible split points; a
    prefix-free description of the chosen one is budgeted at
    2*ceil(log2(L+2)) bits.  INFINITE stays INFINITE.
    """
    if pair_len is INFINITE or pair_len == INFINITE:
        return 0
    return 2 * math.ceil(math.log2(pair_len + 2))


def content_step_bound(preset_name: str, pi: Bits, x: Bits) -> int:
    """Step budget from a named preset evaluated at |pi x|."""
    return step_preset(preset_name)(cat_length(pi, x))
