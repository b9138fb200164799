"""Dense complex linear algebra for small multi-qubit systems.

States use the convention that the first label ("A") is the leftmost tensor
factor: bit i of a basis index, counted from the most significant bit,
addresses qubit i.  All structures are immutable values; random generation is
seeded explicitly and never touches global RNG state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    HermiticityError,
    InvalidSubsystemError,
    IoError,
    NormalizationError,
    PositivityError,
    SizeError,
)

MAX_QUBITS = 10

NORM_ATOL = 1e-12
HERMITICITY_ATOL = 1e-12
TRACE_ATOL = 1e-12
EIGENVALUE_FLOOR = -1e-10


def default_labels(n_qubits: int) -> tuple[str, ...]:
    """Qubit names A, B1, ..., B{n-1} in tensor order."""
    return ("A",) + tuple(f"B{i}" for i in range(1, n_qubits))


@dataclass(frozen=True)
class StateVector:
    """Pure n-qubit state: 2**n complex amplitudes with unit norm."""

    amplitudes: np.ndarray
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        n = int(np.log2(amps.size))
        if 2**n != amps.size:
            raise SizeError(f"amplitude count {amps.size} is not a power of 2")
        if n < 1 or n > MAX_QUBITS:
            raise SizeError(f"need between 1 and {MAX_QUBITS} qubits, got {n}")
        labels = tuple(self.labels) or default_labels(n)
        if len(labels) != n or len(set(labels)) != n:
            raise InvalidSubsystemError(f"expected {n} distinct labels, got {labels!r}")
        norm2 = float(np.sum(np.abs(amps) ** 2))
        if abs(norm2 - 1.0) > NORM_ATOL:
            raise NormalizationError(f"squared norm {norm2!r} differs from 1 beyond {NORM_ATOL}")
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "labels", labels)

    @property
    def n_qubits(self) -> int:
        return len(self.labels)

    def permuted(self, new_labels) -> "StateVector":
        """Reorder tensor factors so the state carries ``new_labels`` in order."""
        new_labels = tuple(new_labels)
        if sorted(new_labels) != sorted(self.labels):
            raise InvalidSubsystemError(f"{new_labels!r} is not a permutation of {self.labels!r}")
        perm = [self.labels.index(lab) for lab in new_labels]
        n = self.n_qubits
        amps = self.amplitudes.reshape([2] * n).transpose(perm).reshape(-1)
        return StateVector(amps.copy(), new_labels)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, trace-one, positive-semidefinite operator on named qubits."""

    entries: np.ndarray
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        mat = np.asarray(self.entries, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise SizeError(f"expected a square matrix, got shape {mat.shape}")
        dim = mat.shape[0]
        n = int(np.log2(dim))
        if 2**n != dim:
            raise SizeError(f"dimension {dim} is not a power of 2")
        labels = tuple(self.labels) or default_labels(n)
        if len(labels) != n or len(set(labels)) != n:
            raise InvalidSubsystemError(f"expected {n} distinct labels, got {labels!r}")
        if np.max(np.abs(mat - mat.conj().T)) > HERMITICITY_ATOL:
            raise HermiticityError("matrix is not Hermitian within 1e-12")
        tr = complex(np.trace(mat))
        if abs(tr - 1.0) > TRACE_ATOL:
            raise NormalizationError(f"trace {tr!r} differs from 1 beyond {TRACE_ATOL}")
        lo = float(np.min(np.linalg.eigvalsh(mat)))
        if lo < EIGENVALUE_FLOOR:
            raise PositivityError(f"minimum eigenvalue {lo!r} below {EIGENVALUE_FLOOR}")
        object.__setattr__(self, "entries", mat)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def n_qubits(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class Spectrum:
    """Descending eigenvalues of a density matrix, clipped into [0, 1]."""

    eigenvalues: np.ndarray = field(default_factory=lambda: np.array([1.0]))

    def __post_init__(self):
        vals = np.asarray(self.eigenvalues, dtype=float).reshape(-1)
        vals = np.sort(vals)[::-1]
        object.__setattr__(self, "eigenvalues", vals)

    def __iter__(self):
        return iter(self.eigenvalues)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def pure_to_density(psi: StateVector) -> DensityMatrix:
    """Projector |psi><psi| as a DensityMatrix with the same labels."""
    amps = psi.amplitudes
    return DensityMatrix(np.outer(amps, amps.conj()), psi.labels)


def partial_trace(rho: DensityMatrix, keep) -> DensityMatrix:
    """Reduced state on the ``keep`` subset of labels (original label order).

    Tracing preserves the trace and Hermiticity; tracing out {B, C} equals
    tracing out C and then B.
    """
    keep = set(keep) if not isinstance(keep, str) else {keep}
    if not keep:
        raise InvalidSubsystemError("keep set must be nonempty")
    unknown = keep - set(rho.labels)
    if unknown:
        raise InvalidSubsystemError(f"labels {sorted(unknown)} not present in {rho.labels!r}")
    n = rho.n_qubits
    kept_labels = tuple(lab for lab in rho.labels if lab in keep)
    if len(kept_labels) == n:
        return rho
    dims = [2] * n
    tensor = rho.entries.reshape(dims + dims)
    traced_axes = [i for i, lab in enumerate(rho.labels) if lab not in keep]
    remaining = n
    for axis in sorted(traced_axes, reverse=True):
        tensor = np.trace(tensor, axis1=axis, axis2=axis + remaining)
        remaining -= 1
    d = 2**remaining
    return DensityMatrix(tensor.reshape(d, d), kept_labels)


def hermitian_spectrum(rho: DensityMatrix | np.ndarray) -> Spectrum:
    """Descending eigenvalues with sub-1e-10 negative noise clipped to zero."""
    mat = rho.entries if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if np.max(np.abs(mat - mat.conj().T)) > HERMITICITY_ATOL:
        raise HermiticityError("matrix is not Hermitian within 1e-12")
    vals = np.linalg.eigvalsh(mat)
    if np.min(vals) < EIGENVALUE_FLOOR:
        raise PositivityError(f"eigenvalue {np.min(vals)!r} below {EIGENVALUE_FLOOR}")
    return Spectrum(np.clip(vals, 0.0, None))


def haar_random_state(n_qubits: int, seed: int) -> StateVector:
    """Haar-random pure state via normalized independent complex Gaussians.

    Deterministic for a fixed seed.
    """
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise SizeError(f"n_qubits must lie in [1, {MAX_QUBITS}], got {n_qubits}")
    rng = np.random.default_rng(seed)
    v = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
    return StateVector(v / np.linalg.norm(v))


def haar_random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary from the QR decomposition of a Ginibre matrix."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_mixed_state(n_qubits: int, rank: int, seed: int) -> DensityMatrix:
    """Induced-measure mixed state: trace an ancilla out of a Haar pure state."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise SizeError(f"n_qubits must lie in [1, {MAX_QUBITS}], got {n_qubits}")
    if rank < 1:
        raise SizeError(f"rank must be positive, got {rank}")
    rng = np.random.default_rng(seed)
    dim = 2**n_qubits
    v = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    v = v / np.linalg.norm(v)
    mat = v @ v.conj().T
    mat = 0.5 * (mat + mat.conj().T)
    return DensityMatrix(mat / np.trace(mat).real, default_labels(n_qubits))


# ---------------------------------------------------------------------------
# state files
# ---------------------------------------------------------------------------

JSON_NORM_ATOL = 1e-9


def state_from_dict(data: dict) -> StateVector:
    """Build a StateVector from the JSON wire format.

    Expected keys: ``n_qubits``, ``labels`` and ``amplitudes`` as
    ``[[re, im], ...]`` in tensor order.  Wrong-length arrays and norms
    outside 1 +/- 1e-9 are rejected.
    """
    try:
        n = int(data["n_qubits"])
        labels = tuple(str(x) for x in data["labels"])
        pairs = np.asarray(data["amplitudes"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise IoError(f"malformed state record: {exc}") from exc
    if pairs.ndim != 2 or pairs.shape[1] != 2 or pairs.shape[0] != 2**n:
        raise IoError(f"expected {2**n} [re, im] amplitude pairs, got shape {pairs.shape}")
    if len(labels) != n:
        raise IoError(f"expected {n} labels, got {len(labels)}")
    amps = pairs[:, 0] + 1j * pairs[:, 1]
    norm = float(np.linalg.norm(amps))
    if abs(norm - 1.0) > JSON_NORM_ATOL:
        raise IoError(f"state norm {norm!r} outside 1 +/- {JSON_NORM_ATOL}")
    return StateVector(amps / norm, labels)


def state_to_dict(psi: StateVector) -> dict:
    amps = psi.amplitudes
    return {
        "n_qubits": psi.n_qubits,
        "labels": list(psi.labels),
        "amplitudes": [[float(a.real), float(a.imag)] for a in amps],
    }


def load_state(path) -> StateVector:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise IoError(f"cannot read state file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise IoError(f"state file {path} is not valid JSON: {exc}") from exc
    return state_from_dict(data)


def save_state(psi: StateVector, path) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(state_to_dict(psi), fh, indent=1)
            fh.write("\n")
    except OSError as exc:
        raise IoError(f"cannot write state file {path}: {exc}") from exc
