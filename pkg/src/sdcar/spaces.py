"""Self-dual spaces, conjugations, basis projections, symbols and
Bogoliubov transformations.

Conventions
-----------
The inner product is antilinear in the first argument, ``<x, y> = x^dag y``.
The conjugation is stored as a matrix ``C`` acting by ``x -> C conj(x)``;
every antilinear condition is expressed as a closed matrix identity, e.g.
the conjugated operator ``G A G`` has matrix ``C conj(A) C^dag``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.linalg import expm
from scipy.special import expit

from .errors import DimensionMismatch, InvariantViolation, ZeroModeError

STRUCT_TOL = 1e-10        # structural invariants
GAMMA_SQUARE_TOL = 1e-12  # entrywise tolerance on C conj(C) = 1
GAP_FLOOR = 1e-8          # spectral gap floor for ground projections


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex, copy=True)
    a.setflags(write=False)
    return a


def _square_matrix(m, dim: int | None = None) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if dim is not None and m.shape[0] != dim:
        raise DimensionMismatch(f"expected a {dim}x{dim} matrix, got {m.shape}")
    return m


@dataclass(frozen=True)
class SelfDualSpace:
    """Even-dimensional complex space with an antiunitary conjugation.

    Attributes
    ----------
    gamma : np.ndarray
        Unitary matrix ``C`` encoding the conjugation ``x -> C conj(x)``.
        Involutivity requires ``C conj(C) = 1``.
    """

    gamma: np.ndarray

    def __post_init__(self):
        g = _square_matrix(self.gamma)
        if g.shape[0] % 2 or g.shape[0] == 0:
            raise DimensionMismatch("self-dual space dimension must be even and positive")
        object.__setattr__(self, "gamma", _freeze(g))

    @property
    def dim(self) -> int:
        return self.gamma.shape[0]

    @property
    def n_modes(self) -> int:
        return self.dim // 2

    def basis_vector(self, i: int) -> np.ndarray:
        """Coordinate basis vector, 1-based index."""
        if not 1 <= i <= self.dim:
            raise IndexError(f"basis index {i} out of range 1..{self.dim}")
        v = np.zeros(self.dim, dtype=complex)
        v[i - 1] = 1.0
        return v

    def conjugate(self, v: np.ndarray) -> np.ndarray:
        """Apply the conjugation to a vector."""
        v = np.asarray(v, dtype=complex)
        if v.shape != (self.dim,):
            raise DimensionMismatch(f"vector of length {v.shape} on a dim-{self.dim} space")
        return self.gamma @ np.conj(v)

    def conjugate_operator(self, a: np.ndarray) -> np.ndarray:
        """Matrix of ``G A G`` for an operator matrix ``a``."""
        a = _square_matrix(a, self.dim)
        return self.gamma @ np.conj(a) @ self.gamma.conj().T


def standard_space(n: int) -> SelfDualSpace:
    """Standard 2n-dimensional space with block-swap conjugation."""
    n = int(n)
    if n < 1:
        raise ValueError("mode count n must be >= 1")
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return SelfDualSpace(np.block([[zero, eye], [eye, zero]]))


@dataclass(frozen=True)
class BasisProjection:
    """Orthogonal projection whose conjugate is its complement."""

    space: SelfDualSpace
    matrix: np.ndarray

    def __post_init__(self):
        m = _square_matrix(self.matrix, self.space.dim)
        object.__setattr__(self, "matrix", _freeze(m))

    @property
    def complement(self) -> np.ndarray:
        return np.eye(self.space.dim) - self.matrix


@dataclass(frozen=True)
class Symbol:
    """Two-point operator of a quasi-free state: 0 <= S <= 1, S + G S G = 1."""

    space: SelfDualSpace
    matrix: np.ndarray

    def __post_init__(self):
        m = _square_matrix(self.matrix, self.space.dim)
        object.__setattr__(self, "matrix", _freeze(m))


@dataclass(frozen=True)
class BogoliubovTransform:
    """Unitary commuting with the conjugation; induces a CAR automorphism."""

    space: SelfDualSpace
    matrix: np.ndarray

    def __post_init__(self):
        m = _square_matrix(self.matrix, self.space.dim)
        object.__setattr__(self, "matrix", _freeze(m))


@dataclass(frozen=True)
class Violation:
    invariant: str
    residual: float
    tolerance: float


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def names(self) -> set[str]:
        return {v.invariant for v in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return f"{self.subject}: all invariants hold"
        lines = [f"{self.subject}: {len(self.violations)} invariant(s) violated"]
        lines += [
            f"  {v.invariant}: residual {v.residual:.3e} > {v.tolerance:.1e}"
            for v in self.violations
        ]
        return "\n".join(lines)


def _norm(a) -> float:
    return float(np.linalg.norm(a))


def _validate_space(space: SelfDualSpace) -> list[Violation]:
    c = space.gamma
    eye = np.eye(space.dim)
    out = []
    r = _norm(c.conj().T @ c - eye)
    if r > STRUCT_TOL:
        out.append(Violation("gamma_unitary", r, STRUCT_TOL))
    r = float(np.max(np.abs(c @ np.conj(c) - eye)))
    if r > GAMMA_SQUARE_TOL:
        out.append(Violation("gamma_involution", r, GAMMA_SQUARE_TOL))
    return out


def _validate_projection(p: BasisProjection) -> list[Violation]:
    m, space = p.matrix, p.space
    eye = np.eye(space.dim)
    out = []
    r = _norm(m - m.conj().T)
    if r > STRUCT_TOL:
        out.append(Violation("hermitian", r, STRUCT_TOL))
    r = _norm(m @ m - m)
    if r > STRUCT_TOL:
        out.append(Violation("idempotent", r, STRUCT_TOL))
    r = _norm(space.conjugate_operator(m) - (eye - m))
    if r > STRUCT_TOL:
        out.append(Violation("gamma_dual", r, STRUCT_TOL))
    r = float(abs(np.trace(m) - space.n_modes))
    if r > STRUCT_TOL:
        out.append(Violation("trace_half_dim", r, STRUCT_TOL))
    return out


def _validate_symbol(s: Symbol) -> list[Violation]:
    m, space = s.matrix, s.space
    out = []
    r = _norm(m - m.conj().T)
    if r > STRUCT_TOL:
        out.append(Violation("hermitian", r, STRUCT_TOL))
    ev = np.linalg.eigvalsh((m + m.conj().T) / 2)
    r = float(max(0.0, -ev.min(), ev.max() - 1.0))
    if r > STRUCT_TOL:
        out.append(Violation("spectrum_unit_interval", r, STRUCT_TOL))
    r = _norm(m + space.conjugate_operator(m) - np.eye(space.dim))
    if r > STRUCT_TOL:
        out.append(Violation("gamma_complement", r, STRUCT_TOL))
    return out


def _validate_bogoliubov(u: BogoliubovTransform) -> list[Violation]:
    m, space = u.matrix, u.space
    out = []
    r = _norm(m.conj().T @ m - np.eye(space.dim))
    if r > STRUCT_TOL:
        out.append(Violation("unitary", r, STRUCT_TOL))
    r = _norm(m @ space.gamma - space.gamma @ np.conj(m))
    if r > STRUCT_TOL:
        out.append(Violation("gamma_commute", r, STRUCT_TOL))
    return out


def validate(obj) -> ValidationReport:
    """Check all invariants of a space/projection/symbol/transform.

    Returns an empty report iff every invariant holds within its stated
    tolerance; each violation names the invariant and its residual norm.
    Dimension mismatches raise :class:`DimensionMismatch` at construction
    time and are therefore never part of a report.
    """
    if isinstance(obj, SelfDualSpace):
        return ValidationReport("SelfDualSpace", tuple(_validate_space(obj)))
    if isinstance(obj, BasisProjection):
        return ValidationReport("BasisProjection", tuple(_validate_projection(obj)))
    if isinstance(obj, Symbol):
        return ValidationReport("Symbol", tuple(_validate_symbol(obj)))
    if isinstance(obj, BogoliubovTransform):
        return ValidationReport("BogoliubovTransform", tuple(_validate_bogoliubov(obj)))
    raise TypeError(f"cannot validate objects of type {type(obj).__name__}")


def ensure_valid(obj):
    """Raise :class:`InvariantViolation` unless ``validate(obj)`` is clean."""
    report = validate(obj)
    if not report.ok:
        raise InvariantViolation(str(report), report=report)
    return obj


def projection_from_hamiltonian(k_matrix, space: SelfDualSpace, *,
                                gap_floor: float = GAP_FLOOR) -> BasisProjection:
    """Ground-state projection of a self-dual one-particle Hamiltonian.

    ``k_matrix`` must be Hermitian with ``C conj(K) C^dag = -K``; the result
    is the spectral projection onto its negative eigenvalues.  Eigenvalues
    inside ``(-gap_floor, gap_floor)`` make the projection ill-defined and
    raise :class:`ZeroModeError`.
    """
    k = _square_matrix(k_matrix, space.dim)
    r = _norm(k - k.conj().T)
    if r > STRUCT_TOL:
        raise InvariantViolation(f"Hamiltonian not Hermitian (residual {r:.3e})")
    r = _norm(space.conjugate_operator(k) + k)
    if r > STRUCT_TOL:
        raise InvariantViolation(f"Hamiltonian not self-dual (residual {r:.3e})")
    ev, vec = np.linalg.eigh((k + k.conj().T) / 2)
    if np.min(np.abs(ev)) < gap_floor:
        raise ZeroModeError(
            f"eigenvalue {ev[np.argmin(np.abs(ev))]:.3e} inside the gap floor {gap_floor:.1e}"
        )
    neg = vec[:, ev < 0]
    return ensure_valid(BasisProjection(space, neg @ neg.conj().T))


def _standard_adapted_vectors(p: BasisProjection) -> np.ndarray:
    """Mode vectors of a projection that is diagonal in standard pairs.

    Requires the matrix to be an exact 0/1 diagonal with exactly one of the
    positions (j, n+j) occupied for every mode j; returns the occupied
    coordinate vector per mode.
    """
    space, m = p.space, p.matrix
    n = space.n_modes
    if _norm(m - np.diag(np.diag(m))) > 1e-12:
        raise ValueError("projection is not standard-adapted; pass mode_vectors explicitly")
    d = np.real(np.diag(m))
    cols = []
    for j in range(n):
        a, b = d[j], d[n + j]
        if abs(a - 1) < 1e-12 and abs(b) < 1e-12:
            cols.append(np.eye(space.dim, dtype=complex)[:, j])
        elif abs(a) < 1e-12 and abs(b - 1) < 1e-12:
            cols.append(np.eye(space.dim, dtype=complex)[:, n + j])
        else:
            raise ValueError("projection is not standard-adapted; pass mode_vectors explicitly")
    return np.column_stack(cols)


def flip_modes(p: BasisProjection, modes: Iterable[int],
               mode_vectors: np.ndarray | None = None) -> BasisProjection:
    """Exchange selected rank-one mode pieces against their conjugates.

    ``modes`` are 1-based mode indices.  With ``mode_vectors`` (columns
    spanning the range of ``p``, one per mode) any projection can be
    flipped; otherwise ``p`` must be diagonal in the standard pair basis.
    The flipped projection satisfies ``dim(p ^ result_perp) = len(modes)``.
    """
    n = p.space.n_modes
    modes = sorted(set(int(j) for j in modes))
    for j in modes:
        if not 1 <= j <= n:
            raise IndexError(f"mode index {j} out of range 1..{n}")
    if mode_vectors is None:
        mode_vectors = _standard_adapted_vectors(p)
    else:
        mode_vectors = np.asarray(mode_vectors, dtype=complex)
        if mode_vectors.shape != (p.space.dim, n):
            raise DimensionMismatch("mode_vectors must be a dim x n_modes matrix")
    m = np.array(p.matrix, copy=True)
    for j in modes:
        f = mode_vectors[:, j - 1]
        g = p.space.conjugate(f)
        m += np.outer(g, np.conj(g)) - np.outer(f, np.conj(f))
    return BasisProjection(p.space, m)


def transport_symbol(u: BogoliubovTransform, s: Symbol) -> Symbol:
    """Symbol of the state composed with the automorphism of ``u``."""
    if u.space is not s.space and u.space.dim != s.space.dim:
        raise DimensionMismatch("transform and symbol live on different spaces")
    ensure_valid(u)
    return ensure_valid(Symbol(s.space, u.matrix.conj().T @ s.matrix @ u.matrix))


def random_selfdual_hamiltonian(space: SelfDualSpace, rng: np.random.Generator,
                                scale: float = 1.0) -> np.ndarray:
    """Gaussian Hermitian draw antisymmetrized under K -> -(G K G)."""
    d = space.dim
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    k = (a + a.conj().T) / 2
    k = (k - space.conjugate_operator(k)) / 2
    return scale * k


def random_projection(space: SelfDualSpace, rng: np.random.Generator, *,
                      gap_floor: float = GAP_FLOOR, max_tries: int = 16) -> BasisProjection:
    """Seeded random basis projection (ground projection of a random
    self-dual Hamiltonian; redraws on the measure-zero degenerate case)."""
    for _ in range(max_tries):
        k = random_selfdual_hamiltonian(space, rng)
        try:
            return projection_from_hamiltonian(k, space, gap_floor=gap_floor)
        except ZeroModeError:
            continue
    raise ZeroModeError("could not draw a gapped self-dual Hamiltonian")


def random_symbol(space: SelfDualSpace, rng: np.random.Generator) -> Symbol:
    """Seeded random symbol: Fermi function of a random self-dual Hamiltonian.

    expit(K) lands in (0, 1) and expit(-K) = 1 - expit(K) gives the
    conjugation constraint for free.
    """
    k = random_selfdual_hamiltonian(space, rng)
    ev, vec = np.linalg.eigh(k)
    s = (vec * expit(ev)) @ vec.conj().T
    return ensure_valid(Symbol(space, s))


def random_bogoliubov(space: SelfDualSpace, rng: np.random.Generator) -> BogoliubovTransform:
    """exp(iK) for a random self-dual K commutes with the conjugation."""
    k = random_selfdual_hamiltonian(space, rng)
    return ensure_valid(BogoliubovTransform(space, expm(1j * k)))


def random_vector(space: SelfDualSpace, rng: np.random.Generator,
                  normalize: bool = True) -> np.ndarray:
    v = rng.standard_normal(space.dim) + 1j * rng.standard_normal(space.dim)
    return v / np.linalg.norm(v) if normalize else v


def random_word(space: SelfDualSpace, rng: np.random.Generator, length: int,
                normalize: bool = True) -> list[np.ndarray]:
    return [random_vector(space, rng, normalize) for _ in range(length)]
