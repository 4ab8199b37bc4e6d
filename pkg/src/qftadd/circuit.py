"""Instruction-level circuit IR and the qudit QFT / inverse-QFT builders.

A circuit is a flat, immutable op list against a fixed register layout.
``build_qft`` emits the textbook ladder (one Hadamard per position, then
controlled phases from every deeper qudit, then a final swap reversal) so
that the fragment's unitary literally equals the ``d**q``-point DFT matrix.
``build_iqft`` is its exact reverse with conjugated gates.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .core import RegisterLayout


class GateKind(Enum):
    HADAMARD = "HADAMARD"
    CPHASE = "CPHASE"
    SWAP = "SWAP"
    SHIFT = "SHIFT"


_ARITY = {
    GateKind.HADAMARD: 1,
    GateKind.CPHASE: 2,
    GateKind.SWAP: 2,
    GateKind.SHIFT: 1,
}


@dataclass(frozen=True)
class GateOp:
    """One gate instance: kind, parameters, and global qudit indices.

    Two-qudit ops list (control, target); the CPHASE matrix is symmetric
    in the two roles, the ordering is kept for circuit readability.  The
    ``dagger`` flag marks the conjugate-transposed Hadamard used by the
    inverse QFT (for base 2 it is a no-op since H is self-inverse).
    """

    kind: GateKind
    qudits: tuple[int, ...]
    theta: float | None = None
    k: int | None = None
    dagger: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "qudits", tuple(int(x) for x in self.qudits))
        arity = _ARITY[self.kind]
        if len(self.qudits) != arity:
            raise ValueError(
                f"{self.kind.value} acts on {arity} qudit(s), got {self.qudits}"
            )
        if len(set(self.qudits)) != len(self.qudits):
            raise ValueError(f"qudits must be distinct, got {self.qudits}")
        if any(qi < 0 for qi in self.qudits):
            raise ValueError(f"qudit indices must be non-negative, got {self.qudits}")
        if (self.theta is not None) != (self.kind is GateKind.CPHASE):
            raise ValueError("theta is required for CPHASE and forbidden otherwise")
        if (self.k is not None) != (self.kind is GateKind.SHIFT):
            raise ValueError("k is required for SHIFT and forbidden otherwise")
        if self.dagger and self.kind is not GateKind.HADAMARD:
            raise ValueError("dagger applies to HADAMARD only")
        if self.k is not None and self.k < 0:
            raise ValueError(f"shift amount must be non-negative, got {self.k}")


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over a layout, with optional labelled spans."""

    base: int
    layout: RegisterLayout
    ops: tuple[GateOp, ...]
    labels: tuple[tuple[str, int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "ops", tuple(self.ops))
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.base != self.layout.base:
            raise ValueError(
                f"circuit base {self.base} != layout base {self.layout.base}"
            )
        q = self.layout.total_qudits
        for op in self.ops:
            for qi in op.qudits:
                if qi >= q:
                    raise ValueError(
                        f"op {op.kind.value} references qudit {qi}, "
                        f"layout has only {q}"
                    )

    @property
    def num_ops(self) -> int:
        return len(self.ops)

    def tally(self) -> dict[GateKind, int]:
        """Per-kind gate counts, recomputed from the op list."""
        counts = Counter(op.kind for op in self.ops)
        return {kind: counts.get(kind, 0) for kind in GateKind}

    def with_label(self, name: str) -> "Circuit":
        """The same ops under a single label spanning the whole fragment."""
        return Circuit(self.base, self.layout, self.ops, ((name, 0, len(self.ops)),))


def _check_contiguous(targets: Sequence[int]) -> list[int]:
    targets = [int(t) for t in targets]
    if not targets:
        raise ValueError("target range must be non-empty")
    lo = targets[0]
    if targets != list(range(lo, lo + len(targets))):
        raise ValueError(f"targets must be a contiguous ascending range, got {targets}")
    return targets


def build_qft(layout: RegisterLayout, targets: Sequence[int]) -> Circuit:
    """QFT fragment on a contiguous qudit range.

    For each position (MSB first) one Hadamard, then a controlled phase
    2*pi/d**s from the qudit at distance s-1 below; the trailing swaps
    reverse the range so the fragment equals the DFT matrix on it.

    Tally for a width-w range: w Hadamard, w*(w-1)/2 CPHASE, floor(w/2) SWAP.
    """
    targets = _check_contiguous(targets)
    d = layout.base
    lo, width = targets[0], len(targets)
    ops: list[GateOp] = []
    for pos in range(width):
        ops.append(GateOp(GateKind.HADAMARD, (lo + pos,)))
        for s in range(2, width - pos + 1):
            theta = 2.0 * math.pi / d**s
            ops.append(
                GateOp(GateKind.CPHASE, (lo + pos + s - 1, lo + pos), theta=theta)
            )
    for i in range(width // 2):
        ops.append(GateOp(GateKind.SWAP, (lo + i, lo + width - 1 - i)))
    return Circuit(d, layout, tuple(ops))


def build_iqft(layout: RegisterLayout, targets: Sequence[int]) -> Circuit:
    """Inverse QFT: the reversed QFT op list with every gate conjugated.

    CPHASE angles are negated and Hadamards carry the dagger flag; SWAPs
    are self-inverse.  Composing with :func:`build_qft` gives the identity.
    """
    qft = build_qft(layout, targets)
    ops = []
    for op in reversed(qft.ops):
        if op.kind is GateKind.CPHASE:
            ops.append(GateOp(GateKind.CPHASE, op.qudits, theta=-op.theta))
        elif op.kind is GateKind.HADAMARD:
            ops.append(GateOp(GateKind.HADAMARD, op.qudits, dagger=True))
        else:
            ops.append(op)
    return Circuit(layout.base, layout, tuple(ops))


def concat(circuits: Iterable[Circuit]) -> Circuit:
    """Join fragments over one layout; op lists append, labels shift."""
    circuits = list(circuits)
    if not circuits:
        raise ValueError("need at least one circuit to concatenate")
    first = circuits[0]
    ops: list[GateOp] = []
    labels: list[tuple[str, int, int]] = []
    for circ in circuits:
        if circ.base != first.base or circ.layout != first.layout:
            raise ValueError("cannot concatenate circuits with different layouts")
        offset = len(ops)
        ops.extend(circ.ops)
        labels.extend((name, lo + offset, hi + offset) for name, lo, hi in circ.labels)
    return Circuit(first.base, first.layout, tuple(ops), tuple(labels))


def circuit_to_json(circuit: Circuit) -> str:
    """Serialize as {base, registers, ops}; angles are IEEE doubles."""
    ops = []
    for op in circuit.ops:
        entry: dict = {"kind": op.kind.value, "qudits": list(op.qudits)}
        if op.theta is not None:
            entry["theta"] = op.theta
        if op.k is not None:
            entry["k"] = op.k
        if op.dagger:
            entry["dagger"] = True
        ops.append(entry)
    payload = {
        "base": circuit.base,
        "registers": [
            {"name": name, "size": size} for name, size in circuit.layout.registers
        ],
        "ops": ops,
    }
    return json.dumps(payload, indent=2) + "\n"


def circuit_to_qasm(circuit: Circuit) -> str:
    """OpenQASM-2-style text for base-2 circuits only."""
    if circuit.base != 2:
        raise ValueError(f"QASM export supports base 2 only, got base {circuit.base}")
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";']
    names = {}
    for i, (name, size) in enumerate(circuit.layout.registers):
        if size == 0:
            continue
        lines.append(f"qreg {name}[{size}];")
        start = circuit.layout.register_start(i)
        for off in range(size):
            names[start + off] = f"{name}[{off}]"
    for op in circuit.ops:
        args = ",".join(names[qi] for qi in op.qudits)
        if op.kind is GateKind.HADAMARD:
            lines.append(f"h {args};")
        elif op.kind is GateKind.CPHASE:
            lines.append(f"cp({op.theta:.17g}) {args};")
        elif op.kind is GateKind.SWAP:
            lines.append(f"swap {args};")
        elif op.kind is GateKind.SHIFT:
            lines.append(f"x {args};" if op.k % 2 == 1 else f"id {args};")
    return "\n".join(lines) + "\n"


def circuit_to_text(circuit: Circuit) -> str:
    """Human-readable op listing with labelled sections."""
    lines = [f"base {circuit.base}"]
    for name, size in circuit.layout.registers:
        lines.append(f"register {name}[{size}]")
    starts = {lo: name for name, lo, hi in circuit.labels}
    for i, op in enumerate(circuit.ops):
        if i in starts:
            lines.append(f"# {starts[i]}")
        parts = [op.kind.value.lower()]
        if op.dagger:
            parts[0] += "+"
        if op.theta is not None:
            parts.append(f"theta={op.theta:.17g}")
        if op.k is not None:
            parts.append(f"k={op.k}")
        parts.append(" ".join(f"q{qi}" for qi in op.qudits))
        lines.append("  " + " ".join(parts))
    return "\n".join(lines) + "\n"
