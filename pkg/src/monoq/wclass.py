"""Generalized W-class states: single-excitation superpositions.

A W-class state on N qubits is a |10...0> + sum_i b_i |0...1_i...0> with
|a|^2 + sum |b_i|^2 = 1.  Its two-qubit marginals have equal concurrence and
concurrence of assistance 2|a||b_i|, and the one-vs-rest concurrence after
discarding the first i partner qubits stays analytic, which is what makes the
ordering hypotheses of the weighted bounds checkable beyond three qubits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MAX_QUBITS, StateVector, default_labels
from .errors import (
    InvalidSubsystemError,
    NormalizationError,
    SizeError,
    UnsupportedStateClassError,
)

WCLASS_SUPPORT_ATOL = 1e-10


@dataclass(frozen=True)
class WClassState:
    """Amplitude data (a, b_1..b_{N-1}) of a generalized W-class state."""

    a: complex
    b: tuple[complex, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        b = tuple(complex(x) for x in self.b)
        n = 1 + len(b)
        if n < 3:
            raise SizeError(f"W-class states need at least 3 parties, got {n}")
        if n > MAX_QUBITS:
            raise SizeError(f"at most {MAX_QUBITS} parties supported, got {n}")
        labels = tuple(self.labels) or default_labels(n)
        if len(labels) != n or len(set(labels)) != n:
            raise InvalidSubsystemError(f"expected {n} distinct labels, got {labels!r}")
        norm2 = abs(self.a) ** 2 + sum(abs(x) ** 2 for x in b)
        if abs(norm2 - 1.0) > 1e-12:
            raise NormalizationError(f"|a|^2 + sum |b_i|^2 = {norm2!r} differs from 1")
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "labels", labels)

    @property
    def n_parties(self) -> int:
        return 1 + len(self.b)

    def to_state_vector(self) -> StateVector:
        """Expand onto the computational basis (exactly single-excitation support)."""
        n = self.n_parties
        amps = np.zeros(2**n, dtype=complex)
        amps[1 << (n - 1)] = self.a
        for i, coeff in enumerate(self.b, start=1):
            amps[1 << (n - 1 - i)] = coeff
        return StateVector(amps, self.labels)

    def pair_concurrence(self, i: int) -> float:
        """C = C^a = 2|a||b_i| of the marginal on the focus and partner i (1-based)."""
        if not 1 <= i <= len(self.b):
            raise InvalidSubsystemError(f"partner index {i} outside 1..{len(self.b)}")
        return 2.0 * abs(self.a) * abs(self.b[i - 1])

    def tail_concurrence(self, i: int) -> float:
        """One-vs-rest concurrence after discarding the first i partners.

        ``i = 0`` is the full pure cut; the value is 2|a| sqrt(sum_{j>i} |b_j|^2).
        """
        if not 0 <= i <= len(self.b) - 1:
            raise InvalidSubsystemError(f"tail index {i} outside 0..{len(self.b) - 1}")
        rest = sum(abs(x) ** 2 for x in self.b[i:])
        return 2.0 * abs(self.a) * float(np.sqrt(rest))

    def permuted(self, partner_labels) -> "WClassState":
        """Reorder the partner qubits; the focus qubit stays first."""
        partner_labels = tuple(partner_labels)
        current = self.labels[1:]
        if sorted(partner_labels) != sorted(current):
            raise InvalidSubsystemError(
                f"{partner_labels!r} is not a permutation of {current!r}"
            )
        b = tuple(self.b[current.index(lab)] for lab in partner_labels)
        return WClassState(self.a, b, (self.labels[0],) + partner_labels)


def build_wclass(a, b_list, labels=()) -> tuple[WClassState, StateVector]:
    """Construct a W-class state and its state-vector expansion."""
    w = WClassState(complex(a), tuple(complex(x) for x in b_list), tuple(labels))
    return w, w.to_state_vector()


def wclass_from_state(psi: StateVector, atol: float = WCLASS_SUPPORT_ATOL) -> WClassState:
    """Recognize a state vector with single-excitation support.

    Raises UnsupportedStateClassError when any amplitude outside the one-hot
    basis states exceeds ``atol``.
    """
    n = psi.n_qubits
    amps = psi.amplitudes
    onehot = [1 << (n - 1 - i) for i in range(n)]
    mask = np.ones(amps.size, dtype=bool)
    mask[onehot] = False
    worst = float(np.max(np.abs(amps[mask]))) if np.any(mask) else 0.0
    if worst > atol:
        raise UnsupportedStateClassError(
            f"state has weight {worst:.3e} outside the single-excitation subspace"
        )
    coeffs = amps[onehot]
    norm = float(np.linalg.norm(coeffs))
    coeffs = coeffs / norm
    return WClassState(coeffs[0], tuple(coeffs[1:]), psi.labels)


def random_wclass(n_parties: int, seed: int, sort_descending: bool = True) -> WClassState:
    """Seeded random W-class state from normalized complex Gaussian amplitudes.

    With ``sort_descending`` the partner amplitudes are ordered by decreasing
    modulus, the labeling under which the ordering hypotheses are most likely
    to hold.
    """
    if n_parties < 3:
        raise SizeError(f"need at least 3 parties, got {n_parties}")
    rng = np.random.default_rng(seed)
    z = rng.normal(size=n_parties) + 1j * rng.normal(size=n_parties)
    z = z / np.linalg.norm(z)
    b = z[1:]
    if sort_descending:
        b = b[np.argsort(-np.abs(b), kind="stable")]
    return WClassState(z[0], tuple(b))
