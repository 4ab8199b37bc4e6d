"""Unitary gate matrices for d-level systems and their application to states.

The generalized Hadamard is the d-point discrete Fourier matrix with
positive-exponent convention; the controlled phase gate is diagonal with
entry ``exp(i*theta*j*m)`` for control level j and target level m.  Gates
are applied by reshaping the amplitude buffer into a rank-q tensor and
contracting the gate over the target axes, never by forming the full
``d**q x d**q`` operator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import StateVector

UNITARITY_ATOL = 1e-12


@dataclass(frozen=True)
class GateMatrix:
    """A dense unitary on one or two qudits of dimension ``base``.

    For arity 2, row/column indices are ``j * base + m`` with j the level
    of the first (control) qudit and m the level of the second (target).
    """

    base: int
    arity: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if self.arity not in (1, 2):
            raise ValueError(f"arity must be 1 or 2, got {self.arity}")
        entries = np.asarray(self.entries, dtype=np.complex128)
        dim = self.base**self.arity
        if entries.shape != (dim, dim):
            raise ValueError(
                f"expected a {dim}x{dim} matrix, got shape {entries.shape}"
            )
        defect = np.max(np.abs(entries.conj().T @ entries - np.eye(dim)))
        if defect > UNITARITY_ATOL:
            raise ValueError(f"matrix is not unitary (defect {defect:.3e})")
        object.__setattr__(self, "entries", entries)

    def dagger(self) -> "GateMatrix":
        return GateMatrix(self.base, self.arity, self.entries.conj().T)


def hadamard_matrix(d: int) -> GateMatrix:
    """d-level Hadamard: entry (m, j) = exp(2*pi*i*j*m/d) / sqrt(d)."""
    if d < 2:
        raise ValueError(f"base must be >= 2, got {d}")
    levels = np.arange(d)
    entries = np.exp(2j * np.pi * np.outer(levels, levels) / d) / np.sqrt(d)
    return GateMatrix(d, 1, entries)


def cphase_matrix(d: int, theta: float) -> GateMatrix:
    """Two-qudit controlled phase: diagonal exp(i*theta*j*m) over (j, m)."""
    if d < 2:
        raise ValueError(f"base must be >= 2, got {d}")
    levels = np.arange(d)
    phases = np.exp(1j * theta * np.outer(levels, levels)).reshape(-1)
    return GateMatrix(d, 2, np.diag(phases))


def shift_matrix(d: int, k: int) -> GateMatrix:
    """Cyclic level shift |m> -> |(m + k) mod d>; k=1 at d=2 is Pauli-X."""
    if d < 2:
        raise ValueError(f"base must be >= 2, got {d}")
    if not 0 <= k < d:
        raise ValueError(f"shift amount {k} out of range [0, {d})")
    entries = np.zeros((d, d), dtype=np.complex128)
    entries[(np.arange(d) + k) % d, np.arange(d)] = 1.0
    return GateMatrix(d, 1, entries)


def _check_targets(state: StateVector, targets: tuple[int, ...]) -> None:
    if len(set(targets)) != len(targets):
        raise ValueError(f"target qudits must be distinct, got {targets}")
    for t in targets:
        if not 0 <= t < state.num_qudits:
            raise IndexError(
                f"qudit index {t} out of range for {state.num_qudits} qudit(s)"
            )


def apply_gate(state: StateVector, gate: GateMatrix, targets: tuple[int, ...] | list[int]) -> StateVector:
    """Apply ``gate`` to the listed qudits of ``state``, in place.

    ``targets`` pairs with the gate's index convention: for a two-qudit
    gate the first listed qudit supplies the more significant (control)
    level.  Non-target qudits are untouched.
    """
    targets = tuple(targets)
    if gate.base != state.base:
        raise ValueError(f"gate base {gate.base} != state base {state.base}")
    if len(targets) != gate.arity:
        raise ValueError(
            f"gate acts on {gate.arity} qudit(s), got {len(targets)} target(s)"
        )
    _check_targets(state, targets)

    d, q = state.base, state.num_qudits
    psi = state.amplitudes.reshape((d,) * q)
    moved = np.moveaxis(psi, targets, range(gate.arity))
    rest_shape = moved.shape[gate.arity:]
    block = moved.reshape(d**gate.arity, -1)
    block = gate.entries @ block
    moved = block.reshape((d,) * gate.arity + rest_shape)
    psi = np.moveaxis(moved, range(gate.arity), targets)
    state.amplitudes = np.ascontiguousarray(psi).reshape(-1)
    return state


def swap_gate_apply(state: StateVector, i: int, j: int) -> StateVector:
    """Exchange digit positions i and j, permuting amplitudes in place."""
    if i == j:
        raise ValueError(f"swap needs two distinct qudits, got {i} twice")
    _check_targets(state, (i, j))
    d, q = state.base, state.num_qudits
    psi = state.amplitudes.reshape((d,) * q)
    state.amplitudes = np.ascontiguousarray(np.swapaxes(psi, i, j)).reshape(-1)
    return state
