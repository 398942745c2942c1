"""Quasi-free states and their moments on monomial words of generators.

A quasi-free state is determined by its symbol S: odd monomials vanish and
even monomials are Pfaffians of pair expectations.  A monomial word is a
sequence of vectors, each standing for one generator B(phi); adjoints are
encoded by the vector itself since B(phi)* = B(G phi).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch
from .pfaffian import pfaffian
from .spaces import BasisProjection, SelfDualSpace, Symbol, ensure_valid

#: A word of generators: one vector per factor; empty means the unit.
MonomialWord = Sequence[np.ndarray]


@dataclass(frozen=True)
class QuasiFreeState:
    symbol: Symbol

    @property
    def space(self) -> SelfDualSpace:
        return self.symbol.space


def tracial_state(space: SelfDualSpace) -> QuasiFreeState:
    """The quasi-free state with symbol one half of the identity."""
    return QuasiFreeState(Symbol(space, np.eye(space.dim) / 2))


def state_from_projection(p: BasisProjection) -> QuasiFreeState:
    """Pure (Fock) quasi-free state whose symbol is the basis projection."""
    ensure_valid(p)
    return QuasiFreeState(Symbol(p.space, p.matrix))


def _as_vector(space: SelfDualSpace, v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    if v.shape != (space.dim,):
        raise DimensionMismatch(f"vector of shape {v.shape} on a dim-{space.dim} space")
    return v


def as_word(space: SelfDualSpace, factors: MonomialWord) -> tuple[np.ndarray, ...]:
    return tuple(_as_vector(space, f) for f in factors)


def coordinate_word(space: SelfDualSpace, indices: Sequence[int]) -> list[np.ndarray]:
    """Word of coordinate basis vectors from 1-based indices."""
    return [space.basis_vector(i) for i in indices]


def two_point(state: QuasiFreeState, phi1, phi2) -> complex:
    """omega(B(phi1) B(phi2)*) = <phi1, S phi2>."""
    space = state.space
    return complex(np.vdot(_as_vector(space, phi1), state.symbol.matrix @ _as_vector(space, phi2)))


def pair_expectation(state: QuasiFreeState, phi1, phi2) -> complex:
    """omega(B(phi1) B(phi2)), reduced to the symbol via B(phi) = B(G phi)*."""
    return two_point(state, phi1, state.space.conjugate(_as_vector(state.space, phi2)))


def moment_matrix(state: QuasiFreeState, word: MonomialWord) -> np.ndarray:
    """Skew pair matrix of an even word: upper triangle omega(B_k B_l)."""
    factors = as_word(state.space, word)
    k = len(factors)
    m = np.zeros((k, k), dtype=complex)
    for a in range(k):
        for b in range(a + 1, k):
            m[a, b] = pair_expectation(state, factors[a], factors[b])
            m[b, a] = -m[a, b]
    return m


def moment(state: QuasiFreeState, word: MonomialWord) -> complex:
    """Expectation of a monomial word of generators.

    Empty word -> 1, odd length -> 0, even length -> Pfaffian of the pair
    matrix of two-point expectations.
    """
    factors = as_word(state.space, word)
    if not factors:
        return 1.0 + 0j
    if len(factors) % 2:
        return 0j
    return pfaffian(moment_matrix(state, factors), skew_tol=np.inf)
