"""Exact F2 linear algebra for Pauli bit-vectors and Clifford bit-matrices.

Vectors are length 2n with the X components in rows 0..n-1 and the Z
components in rows n..2n-1.  Qubit labels are 1-based at the API boundary
and 0-based internally.  Global phases are discarded throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

GATE_KINDS = ("CNOT", "H", "S", "X", "Y", "Z", "I")


class F2Error(ValueError):
    pass


@dataclass(frozen=True)
class PauliVec:
    """A Pauli operator as a bit-vector over F2 (phase dropped)."""

    n: int
    bits: tuple

    def __post_init__(self):
        if len(self.bits) != 2 * self.n:
            raise F2Error(f"expected {2 * self.n} bits, got {len(self.bits)}")

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * (2 * n))

    @classmethod
    def from_ops(cls, n, xs=(), zs=()):
        """Build from 1-based qubit indices carrying X / Z components."""
        bits = [0] * (2 * n)
        for q in xs:
            bits[q - 1] ^= 1
        for q in zs:
            bits[n + q - 1] ^= 1
        return cls(n, tuple(bits))

    @classmethod
    def single(cls, n, qubit, pauli):
        xs = [qubit] if pauli in ("X", "Y") else []
        zs = [qubit] if pauli in ("Z", "Y") else []
        if pauli not in ("X", "Y", "Z"):
            raise F2Error(f"unknown Pauli {pauli!r}")
        return cls.from_ops(n, xs, zs)

    def x_bit(self, qubit):
        return self.bits[qubit - 1]

    def z_bit(self, qubit):
        return self.bits[self.n + qubit - 1]

    @property
    def support(self):
        """1-based qubits where the operator acts nontrivially."""
        return frozenset(
            q for q in range(1, self.n + 1) if self.bits[q - 1] or self.bits[self.n + q - 1]
        )

    @property
    def weight(self):
        return len(self.support)

    def __xor__(self, other):
        if self.n != other.n:
            raise F2Error("qubit count mismatch")
        return PauliVec(self.n, tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def as_array(self):
        return np.array(self.bits, dtype=np.uint8)


@dataclass(frozen=True)
class BitMatrix:
    """2n x 2n matrix over F2 acting on Pauli bit-vectors."""

    n: int
    entries: np.ndarray = field(compare=False)

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=np.uint8) & 1
        if m.shape != (2 * self.n, 2 * self.n):
            raise F2Error(f"expected shape {(2 * self.n,) * 2}, got {m.shape}")
        object.__setattr__(self, "entries", m)
        m.setflags(write=False)

    @classmethod
    def identity(cls, n):
        return cls(n, np.eye(2 * n, dtype=np.uint8))

    def __matmul__(self, other):
        if isinstance(other, BitMatrix):
            if self.n != other.n:
                raise F2Error("dimension mismatch")
            prod = (self.entries.astype(np.int64) @ other.entries.astype(np.int64)) & 1
            return BitMatrix(self.n, prod.astype(np.uint8))
        raise TypeError(type(other))

    def __xor__(self, other):
        if self.n != other.n:
            raise F2Error("dimension mismatch")
        return BitMatrix(self.n, self.entries ^ other.entries)

    def __eq__(self, other):
        return isinstance(other, BitMatrix) and self.n == other.n and bool(
            np.array_equal(self.entries, other.entries)
        )

    def delta(self):
        """M xor I; supported only on the rows/columns of the gate support."""
        return self ^ BitMatrix.identity(self.n)

    def is_symplectic(self):
        n = self.n
        lam = np.zeros((2 * n, 2 * n), dtype=np.int64)
        lam[:n, n:] = np.eye(n)
        lam[n:, :n] = np.eye(n)
        m = self.entries.astype(np.int64)
        return bool(np.array_equal((m.T @ lam @ m) & 1, lam))


@dataclass(frozen=True)
class GateSpec:
    """A fundamental gate: bit-matrix plus bookkeeping for the encoding."""

    id: int
    name: str
    support: frozenset  # 1-based qubit indices
    matrix: BitMatrix

    @property
    def delta(self):
        return self.matrix.delta()


def bit_matrix_of_gate(name, qubits, n):
    """Bit-matrix for one gate; `qubits` are 1-based and must be distinct."""
    if len(set(qubits)) != len(qubits):
        raise F2Error(f"duplicate qubit indices {qubits}")
    for q in qubits:
        if not 1 <= q <= n:
            raise F2Error(f"qubit {q} out of range [1, {n}]")
    m = np.eye(2 * n, dtype=np.uint8)
    if name == "CNOT":
        if len(qubits) != 2:
            raise F2Error("CNOT needs control and target")
        c, t = qubits[0] - 1, qubits[1] - 1
        m[t, c] ^= 1  # X on control spreads to target
        m[n + c, n + t] ^= 1  # Z on target spreads to control
    elif name == "H":
        (q,) = qubits
        q -= 1
        m[q, q] = m[n + q, n + q] = 0
        m[q, n + q] = m[n + q, q] = 1
    elif name == "S":
        (q,) = qubits
        q -= 1
        m[n + q, q] ^= 1  # X -> Y (= XZ up to phase)
    elif name in ("X", "Y", "Z", "I"):
        pass  # Paulis act trivially modulo global phase
    else:
        raise F2Error(f"unknown gate kind {name!r}")
    return BitMatrix(n, m)


def make_gate(gate_id, name, qubits, n):
    return GateSpec(gate_id, name, frozenset(qubits), bit_matrix_of_gate(name, qubits, n))


def propagate(e, c):
    """e' = C e over F2."""
    if e.n != c.n:
        raise F2Error("dimension mismatch")
    out = (c.entries.astype(np.int64) @ e.as_array().astype(np.int64)) & 1
    return PauliVec(e.n, tuple(int(b) for b in out))


def timestep_matrix(gates, n):
    """I xor (xor of gate deltas) for simultaneous gates on disjoint supports."""
    seen = set()
    for g in gates:
        if seen & g.support:
            raise F2Error(f"overlapping supports in one timestep: {sorted(seen & g.support)}")
        seen |= g.support
    acc = np.eye(2 * n, dtype=np.uint8)
    for g in gates:
        acc ^= g.delta.entries
    return BitMatrix(n, acc)


def product_sum_compose(timesteps, n):
    """Compose per-timestep product-sum matrices in time order.

    Equals the naive product of all gate matrices when each timestep's
    supports are pairwise disjoint.
    """
    acc = BitMatrix.identity(n)
    for gates in timesteps:
        acc = timestep_matrix(gates, n) @ acc
    return acc


def naive_compose(timesteps, n):
    acc = BitMatrix.identity(n)
    for gates in timesteps:
        for g in gates:
            acc = g.matrix @ acc
    return acc


def reduced_block(m, pauli):
    """Upper-left (X) or lower-right (Z) n x n quadrant."""
    n = m.n
    if pauli == "X":
        return np.array(m.entries[:n, :n])
    if pauli == "Z":
        return np.array(m.entries[n:, n:])
    raise F2Error(f"pauli must be 'X' or 'Z', got {pauli!r}")
