"""N-input, n-digit adder and subtractor circuits in the Fourier basis.

Layout convention: one ancilla register of t qudits, then N input
registers of n qudits each, all MSB first.  The ancilla plus the first
input register form the Fourier span (qudits 0..t+n-1); inputs 1..N-1
are added into (or subtracted from) it via controlled-phase fans, then
stay untouched in the computational basis.  t is sized so the N-way sum
never overflows the span.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .circuit import Circuit, GateKind, GateOp, build_iqft, build_qft, concat
from .core import RegisterLayout, from_integer


class Mode(Enum):
    ADD = "add"
    SUB = "sub"

    @property
    def sign(self) -> int:
        return 1 if self is Mode.ADD else -1


def required_ancillas(num_inputs: int, base: int) -> int:
    """Smallest t with base**t >= num_inputs, exactly.

    t extra carry qudits guarantee the sum of num_inputs values below
    base**n fits in t+n digits.  Computed by integer search, never via
    floating-point logarithms.
    """
    if num_inputs < 1:
        raise ValueError(f"num_inputs must be >= 1, got {num_inputs}")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    t = 0
    power = 1
    while power < num_inputs:
        t += 1
        power *= base
    return t


def adder_layout(base: int, digits_per_input: int, num_inputs: int) -> RegisterLayout:
    """Ancilla register "anc" (possibly width 0) then inputs "a0".."a{N-1}"."""
    t = required_ancillas(num_inputs, base)
    registers = [("anc", t)]
    registers += [(f"a{i}", digits_per_input) for i in range(num_inputs)]
    return RegisterLayout(base, tuple(registers))


@dataclass(frozen=True)
class AdderSpec:
    """Problem statement for one adder/subtractor instance."""

    base: int
    digits_per_input: int
    num_inputs: int
    mode: Mode
    inputs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "inputs", tuple(int(x) for x in self.inputs))
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if self.digits_per_input < 1:
            raise ValueError(
                f"digits_per_input must be >= 1, got {self.digits_per_input}"
            )
        if self.num_inputs < 1:
            raise ValueError(f"num_inputs must be >= 1, got {self.num_inputs}")
        if not isinstance(self.mode, Mode):
            raise ValueError(f"mode must be a Mode, got {self.mode!r}")
        if len(self.inputs) != self.num_inputs:
            raise ValueError(
                f"expected {self.num_inputs} inputs, got {len(self.inputs)}"
            )
        limit = self.base**self.digits_per_input
        for i, value in enumerate(self.inputs):
            if not 0 <= value < limit:
                raise ValueError(
                    f"input {i} is {value}, must be in [0, {limit}) for "
                    f"{self.digits_per_input} base-{self.base} digits"
                )

    @property
    def ancillas(self) -> int:
        return required_ancillas(self.num_inputs, self.base)

    @property
    def result_width(self) -> int:
        """Width of the measured output register: ancillas + one input."""
        return self.ancillas + self.digits_per_input

    @property
    def layout(self) -> RegisterLayout:
        return adder_layout(self.base, self.digits_per_input, self.num_inputs)


def build_adder_component(
    layout: RegisterLayout, source_register: int, sign: int
) -> Circuit:
    """Phase fan adding one source register into the Fourier span.

    The span (registers 0 and 1, global qudits 0..q_F-1) is assumed to
    hold a Fourier-encoded value.  The source digit of weight d**j
    controls a phase sign*2*pi*d**(j-l) on span position l (1-based from
    the MSB) for l = j+1..q_F; shallower positions would only pick up
    whole multiples of 2*pi.  Gate count: sum over j of (q_F - j).
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if not 0 <= source_register < len(layout.registers):
        raise IndexError(f"no register {source_register} in layout")
    if source_register in (0, 1):
        raise ValueError(
            "source register overlaps the Fourier span (registers 0 and 1)"
        )
    q_f = layout.register_start(2)
    source = layout.register_range(source_register)
    if len(source) == 0:
        raise ValueError(f"source register {source_register} is empty")
    d = layout.base
    width = len(source)
    ops = []
    for offset, control in enumerate(source):
        j = width - 1 - offset
        for l in range(j + 1, q_f + 1):
            theta = sign * 2.0 * math.pi * d ** (j - l)
            ops.append(GateOp(GateKind.CPHASE, (control, l - 1), theta=theta))
    return Circuit(d, layout, tuple(ops))


def _encoding_ops(layout: RegisterLayout, spec: AdderSpec) -> list[GateOp]:
    ops = []
    for i, value in enumerate(spec.inputs):
        digits = from_integer(value, spec.base, spec.digits_per_input)
        start = layout.register_start(i + 1)
        for offset, dig in enumerate(digits.digits):
            if dig != 0:
                ops.append(GateOp(GateKind.SHIFT, (start + offset,), k=dig))
    return ops


def build_full_adder(spec: AdderSpec) -> Circuit:
    """Encoding shifts, QFT on the span, one component per extra input, IQFT.

    Measuring the span (qudits 0..t+n-1) afterwards yields the sum of
    all inputs in ADD mode, or inputs[0] minus the rest modulo d**(t+n)
    in SUB mode.  Registers 1..N-1 pass through unchanged.
    """
    layout = spec.layout
    span = list(range(spec.result_width))
    fragments = [
        Circuit(spec.base, layout, tuple(_encoding_ops(layout, spec))).with_label(
            "encode"
        ),
        build_qft(layout, span).with_label("qft"),
    ]
    for i in range(1, spec.num_inputs):
        fragments.append(
            build_adder_component(layout, i + 1, spec.mode.sign).with_label(
                f"component a{i}"
            )
        )
    fragments.append(build_iqft(layout, span).with_label("iqft"))
    return concat(fragments)


def classical_oracle(spec: AdderSpec) -> int:
    """Reference result by plain integer arithmetic, reduced mod d**(t+n)."""
    modulus = spec.base**spec.result_width
    if spec.mode is Mode.ADD:
        total = sum(spec.inputs)
    else:
        total = spec.inputs[0] - sum(spec.inputs[1:])
    return total % modulus
