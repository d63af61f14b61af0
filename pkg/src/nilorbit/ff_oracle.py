"""Independent verification over prime fields: build the nilpotent element
and its invariant bilinear form on an explicit Jordan basis, then count
isotropic flags satisfying the nilradical conditions.  Within budget the
count must equal the descriptor E-polynomial at the field size.

The Jordan basis is x(i,j) for part j of size d_j, 1 <= i <= d_j, with
e x(i,j) = x(i-1,j).  The form pairs x(i,j) against x(d_j+1-i, beta(j)),
where beta pairs equal parts of the family's paired parity and fixes parts
of the self-paired parity; entries along a block alternate in sign, which
is exactly what e-invariance forces.

The unit in front of each self-paired block is chosen so the form is split:
units inside one value group alternate (hyperbolic pairs), and the leftover
unit of each odd-multiplicity group walks down the chain of such groups
picking up a factor (-1)^((v_prev - v_next)/2 + 1) per hop, starting at +1
for the largest value.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

import numpy as np

from ._linalg import annihilator, contains, nullspace, rank
from .levi import LeviType
from .partitions import Family, Partition, is_valid
from .spaltenstein import GrassStep

DEFAULT_BUDGET = 1_000_000
_BUDGET_ENV = "NILORBIT_ORACLE_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    """Explicit argument, else the NILORBIT_ORACLE_BUDGET variable, else the
    default node cap."""
    if budget is not None:
        return budget
    env = os.environ.get(_BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_BUDGET


class BudgetExceeded(Exception):
    """Raised internally when the node cap is hit; converted to a skip."""


def _is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(eq=False)
class JordanRealization:
    """A nilpotent matrix in Jordan form together with a split invariant
    form over F_p, plus the lowering operator of its standard triple."""

    family: Family
    partition: Partition
    modulus: int
    convention: str
    basis: tuple[tuple[int, int], ...]
    beta: tuple[int, ...]
    e: np.ndarray
    f: np.ndarray
    gram: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.basis)


def _self_paired(v: int, family: Family) -> bool:
    return (v % 2 == 0) == (family is Family.C)


def _block_units(p: Partition, family: Family, convention: str) -> list[int]:
    """Unit in front of each self-paired Jordan block (0 for paired parts,
    which carry the fixed cross-block pairing instead)."""
    units = [0] * len(p.parts)
    first_pair = -1 if convention == "alternate" else 1
    leftovers: list[tuple[int, int]] = []
    for v in sorted(set(p.parts), reverse=True):
        if not _self_paired(v, family):
            continue
        js = [j for j, x in enumerate(p.parts) if x == v]
        for t, j in enumerate(js):
            units[j] = first_pair if t % 2 == 0 else -first_pair
        if len(js) % 2 == 1:
            units[js[-1]] = 1
            leftovers.append((v, js[-1]))
    delta = 1
    for t in range(1, len(leftovers)):
        prev_v, _ = leftovers[t - 1]
        v, j = leftovers[t]
        delta *= (-1) ** ((prev_v - v) // 2 + 1)
        units[j] = delta
    return units


def _signed_det(mat: np.ndarray) -> int:
    """Exact determinant of a matrix with one nonzero entry per row/column."""
    n = mat.shape[0]
    cols = [int(np.nonzero(mat[i])[0][0]) for i in range(n)]
    value = 1
    for i in range(n):
        value *= int(mat[i, cols[i]])
    seen = [False] * n
    sign = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = cols[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign * value


def realize(
    p: Partition, family: Family, modulus: int, convention: str = "default"
) -> JordanRealization:
    """Nilpotent element of Jordan type ``p`` with a split invariant form
    over F_modulus.  Only odd prime moduli are accepted; the two sign
    conventions give isometric forms and must yield identical counts.
    """
    if not is_valid(p, family):
        raise ValueError(f"{p} is not valid for family {family.value}")
    if not _is_odd_prime(modulus):
        raise ValueError(f"modulus must be an odd prime, got {modulus}")
    if convention not in ("default", "alternate"):
        raise ValueError(f"unknown sign convention {convention!r}")
    parts = p.parts
    n = p.n
    basis = tuple((i, j) for j, d in enumerate(parts) for i in range(1, d + 1))
    index = {bj: a for a, bj in enumerate(basis)}

    e = np.zeros((n, n), dtype=np.int64)
    f = np.zeros((n, n), dtype=np.int64)
    for j, d in enumerate(parts):
        for i in range(2, d + 1):
            e[index[(i - 1, j)], index[(i, j)]] = 1
        for i in range(1, d):
            f[index[(i + 1, j)], index[(i, j)]] = (i * (d - i)) % modulus

    beta = list(range(len(parts)))
    for v in sorted(set(parts), reverse=True):
        if _self_paired(v, family):
            continue
        js = [j for j, x in enumerate(parts) if x == v]
        assert len(js) % 2 == 0, f"paired-parity value {v} with odd multiplicity in {p}"
        for a, b in zip(js[0::2], js[1::2]):
            beta[a], beta[b] = b, a

    eps = family.epsilon
    pair_unit = -1 if convention == "alternate" else 1
    units = _block_units(p, family, convention)
    gram = np.zeros((n, n), dtype=np.int64)
    for j, d in enumerate(parts):
        if beta[j] == j:
            for i in range(1, d + 1):
                gram[index[(i, j)], index[(d + 1 - i, j)]] = units[j] * (-1) ** (i - 1)
        elif beta[j] > j:
            b = beta[j]
            for i in range(1, d + 1):
                s = pair_unit * (-1) ** (i - 1)
                gram[index[(i, j)], index[(d + 1 - i, b)]] = s
                gram[index[(d + 1 - i, b)], index[(i, j)]] = eps * s
    gram %= modulus

    real = JordanRealization(
        family, p, modulus, convention, basis, tuple(beta), e, f, gram
    )
    _validate(real)
    return real


def _validate(real: JordanRealization) -> None:
    p, e, g, f = real.modulus, real.e, real.gram, real.f
    n = real.dim
    assert not np.any((g.T - real.family.epsilon * g) % p), "form symmetry broken"
    assert rank(g, p) == n, "form is degenerate"
    assert not np.any((e.T @ g + g @ e) % p), "form is not e-invariant"
    h = (e @ f - f @ e) % p
    assert not np.any((h @ e - e @ h - 2 * e) % p), "triple relation [h,e]=2e broken"
    assert not np.any((h @ f - f @ h + 2 * f) % p), "triple relation [h,f]=-2f broken"
    power = np.eye(n, dtype=np.int64)
    for k in itertools.count():
        expected = sum(max(d - k, 0) for d in real.partition.parts)
        assert rank(power, p) == expected, f"rank of e^{k} is not {expected}"
        if expected == 0:
            break
        power = (power @ e) % p
    if real.family is Family.D:
        det = _signed_det(real.gram) % p
        target = ((-1) ** (n // 2)) % p
        ratio = (det * pow(target, p - 2, p)) % p
        assert pow(ratio, (p - 1) // 2, p) == 1, "even orthogonal form is not split"


@dataclass(frozen=True)
class FlagCount:
    """Result of one fiber count: either an exact count or an explicit skip."""

    count: int | None
    modulus: int
    levi: LeviType
    nodes: int
    skipped: str | None = None


def _complement(E: np.ndarray, W: np.ndarray, p: int) -> np.ndarray:
    """Rows of W extending a basis of E to one of E + W (here E <= W)."""
    acc = E % p
    r = rank(acc, p) if acc.shape[0] else 0
    out = []
    for w in W % p:
        cand = np.vstack([acc, w[None, :]])
        if rank(cand, p) > r:
            out.append(w)
            acc = cand
            r += 1
    if not out:
        return np.zeros((0, W.shape[1]), dtype=np.int64)
    return np.array(out, dtype=np.int64)


def _subspaces_between(E, W, target, p, counter, cap):
    """Yield every subspace F with E <= F <= W and dim F = target, as a row
    matrix extending E.  Enumerates reduced echelon coefficient matrices in
    coordinates of a complement of E inside W, so each subspace appears
    exactly once; each candidate costs one budget node.
    """
    base = E.shape[0]
    extra = target - base
    if extra < 0:
        return
    comp = _complement(E, W, p)
    c = comp.shape[0]
    if extra > c:
        return
    if extra == 0:
        counter[0] += 1
        if counter[0] > cap:
            raise BudgetExceeded
        yield E.copy()
        return
    for pivots in itertools.combinations(range(c), extra):
        free_slots = [
            (row, col)
            for row, pc in enumerate(pivots)
            for col in range(pc + 1, c)
            if col not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free_slots)):
            counter[0] += 1
            if counter[0] > cap:
                raise BudgetExceeded
            coeff = np.zeros((extra, c), dtype=np.int64)
            for row, pc in enumerate(pivots):
                coeff[row, pc] = 1
            for (row, col), val in zip(free_slots, values):
                coeff[row, col] = val
            yield np.vstack([E, (coeff @ comp) % p])


def fiber_point_count(
    real: JordanRealization, levi: LeviType, budget: int | None = None
) -> FlagCount:
    """Count isotropic chains E_1 < ... < E_k with dim E_i = p_1 + ... + p_i,
    e(E_1) = 0, e(E_i) <= E_{i-1}, and e(E_k^perp) <= E_k.

    The enumeration recurses through E_i inside E_{i-1}^perp intersected
    with e^{-1}(E_{i-1}), checking isotropy on each candidate; exceeding the
    node budget returns an explicit skip, never a wrong count.
    """
    if levi.family is not real.family or levi.n != real.dim:
        raise ValueError(f"{levi} does not match a realization of size {real.dim}")
    cap = resolve_budget(budget)
    p, e, g = real.modulus, real.e, real.gram
    n = real.dim
    dims = list(itertools.accumulate(levi.ps))
    counter = [0]

    def closes(E: np.ndarray) -> bool:
        perp = nullspace((E @ g) % p, p) if E.shape[0] else np.eye(n, dtype=np.int64)
        return contains(E, (perp @ e.T) % p, p)

    def recurse(E: np.ndarray, t: int) -> int:
        if t == len(dims):
            return 1 if closes(E) else 0
        if E.shape[0] == 0:
            window = nullspace(e, p)
        else:
            window = nullspace(
                np.vstack([(E @ g) % p, (annihilator(E, p) @ e) % p]), p
            )
        total = 0
        for F in _subspaces_between(E, window, dims[t], p, counter, cap):
            if F.shape[0] and np.any((F @ g @ F.T) % p):
                continue
            total += recurse(F, t + 1)
        return total

    empty = np.zeros((0, n), dtype=np.int64)
    try:
        value = recurse(empty, 0)
    except BudgetExceeded:
        return FlagCount(None, p, levi, counter[0], skipped="budget")
    return FlagCount(value, p, levi, counter[0])


def grassmannian_count(step: GrassStep, modulus: int) -> int:
    """Point count of a maximal orthogonal / Lagrangian Grassmannian over
    F_modulus: the step E-polynomial evaluated there."""
    if not _is_odd_prime(modulus):
        raise ValueError(f"modulus must be an odd prime, got {modulus}")
    return step.e_polynomial()(modulus)
