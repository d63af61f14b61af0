"""Fibration descriptors for the reduced fibers of generalized Springer maps:
the tower of maximal orthogonal Grassmannian steps, the Lagrangian factors,
and the dimension / component count / E-polynomial read off them.

A descriptor is attached to a triple (orbit ``p``, minimal Richardson orbit
``R`` over it, polarization ``L`` of ``R``).  The split index of ``L`` cuts
the zero-padded part sequence of ``p`` into a head and a tail; the values of
``p`` wholly inside the relevant segment are *distinguished* and their
multiplicities drive the two factor families.
"""
from __future__ import annotations

from dataclasses import dataclass

from .levi import LeviType, polarizations, richardson_orbit_of
from .minimal import minimal_richardson_orbits
from .partitions import Family, Partition


@dataclass(frozen=True)
class EPolynomial:
    """Integer polynomial in q with ascending coefficients."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs):
        cs = list(int(c) for c in coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def one(cls) -> "EPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "EPolynomial") -> "EPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return EPolynomial(out)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_div(self, k: int) -> "EPolynomial":
        """Divide by a positive integer; raises if any coefficient resists."""
        if k <= 0:
            raise ValueError(f"divisor must be positive, got {k}")
        if any(c % k for c in self.coeffs):
            raise ValueError(f"{self} is not divisible by {k}")
        return EPolynomial(tuple(c // k for c in self.coeffs))

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                q = "q" if i == 1 else f"q^{i}"
                terms.append(q if c == 1 else f"{c}{q}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class GrassStep:
    """One Grassmannian factor: isotropic ``m``-planes in an ``n``-space.

    ``OG`` steps are maximal orthogonal (n = 2m or 2m+1); ``IG`` steps are
    Lagrangian (n = 2m).
    """

    kind: str
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.kind not in ("OG", "IG"):
            raise ValueError(f"unknown step kind {self.kind!r}")
        if self.m < 0 or self.n < 0:
            raise ValueError("step parameters must be non-negative")
        if self.kind == "OG" and self.n not in (2 * self.m, 2 * self.m + 1):
            raise ValueError(f"OG step must be maximal, got OG({self.m},{self.n})")
        if self.kind == "IG" and self.n != 2 * self.m:
            raise ValueError(f"IG step must be Lagrangian, got IG({self.m},{self.n})")

    @property
    def dimension(self) -> int:
        if self.kind == "OG" and self.n == 2 * self.m:
            return self.m * (self.m - 1) // 2
        return self.m * (self.m + 1) // 2

    @property
    def is_split_even(self) -> bool:
        """An OG(m, 2m) step with m >= 1: two connected components."""
        return self.kind == "OG" and self.n == 2 * self.m and self.m >= 1

    def e_polynomial(self) -> EPolynomial:
        poly = EPolynomial.one()
        if self.kind == "IG" or self.n == 2 * self.m + 1:
            for j in range(1, self.m + 1):
                poly = poly * EPolynomial((1,) + (0,) * (j - 1) + (1,))
        else:
            for j in range(1, self.m):
                poly = poly * EPolynomial((1,) + (0,) * (j - 1) + (1,))
            if self.m >= 1:
                poly = poly * EPolynomial((2,))
        return poly

    def __str__(self) -> str:
        return f"{self.kind}({self.m},{self.n})"


def split_index(levi: LeviType) -> int:
    """The l with 2l+1 (odd orthogonal) or 2l (otherwise) leading odd
    entries in the Levi's raw induced shape; equals (q-1)/2 resp. q/2."""
    if levi.family is Family.B:
        return (levi.q - 1) // 2
    return levi.q // 2


def distinguished_values(
    p: Partition, family: Family, l: int
) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Distinguished odd and even values of ``p`` for head length 2l+1
    (family B) or 2l (C and D), as (value, multiplicity) lists in decreasing
    value order.

    A value is distinguished only when every occurrence sits wholly in its
    segment: odd values must lie entirely in the tail, even values entirely
    in the head.  Values straddling the boundary are discarded.
    """
    head_len = 2 * l + 1 if family is Family.B else 2 * l
    odd: list[tuple[int, int]] = []
    even: list[tuple[int, int]] = []
    for v in sorted(set(p.parts), reverse=True):
        first = p.parts.index(v) + 1
        mult = p.parts.count(v)
        if v % 2 == 1 and first > head_len:
            odd.append((v, mult))
        if v % 2 == 0 and first + mult - 1 <= head_len:
            even.append((v, mult))
    ig_side = odd if family is Family.C else even
    for v, mult in ig_side:
        if mult % 2 != 0:
            raise AssertionError(
                f"Lagrangian-side value {v} of {p} has odd multiplicity {mult}"
            )
    return odd, even


def og_tower(ns: list[int]) -> list[GrassStep]:
    """Tower of maximal orthogonal steps from a multiplicity sequence.

    With prefix sums S_j, step j is OG(floor(S_j/2) - floor(S_{j-1}/2),
    S_j - 2*floor(S_{j-1}/2)); steps with m = 0 are kept and contribute a
    point.  Maximality holds for every parity combination and is asserted.
    """
    steps: list[GrassStep] = []
    prev = 0
    for n in ns:
        if n <= 0:
            raise ValueError(f"multiplicities must be positive, got {n}")
        cur = prev + n
        steps.append(GrassStep("OG", cur // 2 - prev // 2, cur - 2 * (prev // 2)))
        prev = cur
    return steps


def ig_factors(ns: list[int]) -> list[GrassStep]:
    """Independent Lagrangian factors IG(n/2, n), one per multiplicity."""
    for n in ns:
        if n % 2 != 0:
            raise ValueError(f"Lagrangian factors need even multiplicities, got {n}")
    return [GrassStep("IG", n // 2, n) for n in ns]


@dataclass(frozen=True)
class FibrationDescriptor:
    """Shape of one reduced fiber: an orthogonal tower, Lagrangian factors,
    and the (orbit, minimal Richardson, Levi, split index) context."""

    og_tower: tuple[GrassStep, ...]
    ig_factors: tuple[GrassStep, ...]
    orbit: Partition
    family: Family
    min_richardson: Partition
    levi: LeviType
    split: int

    @property
    def dimension(self) -> int:
        return sum(s.dimension for s in self.og_tower) + sum(
            s.dimension for s in self.ig_factors
        )

    def as_dict(self) -> dict:
        return {
            "og_tower": [{"m": s.m, "N": s.n} for s in self.og_tower],
            "ig_factors": [{"m": s.m, "N": s.n} for s in self.ig_factors],
            "dim": self.dimension,
            "components": component_count(self),
            "e_poly": list(e_polynomial(self).coeffs),
        }


def descriptor(
    p: Partition, family: Family, r: Partition, levi: LeviType
) -> FibrationDescriptor:
    """Fibration descriptor of the fiber over ``p`` of the map attached to
    ``levi``, a polarization of the minimal Richardson orbit ``r``.

    Raises ``ValueError`` unless r is a minimal Richardson orbit over ``p``
    and ``levi`` polarizes r.
    """
    if r not in minimal_richardson_orbits(p, family):
        raise ValueError(f"{r} is not a minimal Richardson orbit over {p}")
    if levi.family is not family or richardson_orbit_of(levi) != r:
        raise ValueError(f"{levi} is not a polarization of {r}")
    l = split_index(levi)
    odd, even = distinguished_values(p, family, l)
    og_vals, ig_vals = (even, odd) if family is Family.C else (odd, even)
    # Tower order is family-dependent: for B and D the flag conditions run
    # over suffix ranges of the tail values, so the tower peels off the
    # smallest value first; for C the head values enter largest-first.
    og_mults = [m for _, m in og_vals]
    if family is not Family.C:
        og_mults.reverse()
    return FibrationDescriptor(
        og_tower=tuple(og_tower(og_mults)),
        ig_factors=tuple(ig_factors([m for _, m in ig_vals])),
        orbit=p,
        family=family,
        min_richardson=r,
        levi=levi,
        split=l,
    )


def e_polynomial(d: FibrationDescriptor) -> EPolynomial:
    """Product of the step E-polynomials; degree equals the fiber dimension."""
    poly = EPolynomial.one()
    for step in d.og_tower:
        if step.kind != "OG":
            raise ValueError("tower steps must be orthogonal")
        poly = poly * step.e_polynomial()
    for step in d.ig_factors:
        poly = poly * step.e_polynomial()
    assert poly.degree == d.dimension, f"degree {poly.degree} != dimension {d.dimension}"
    return poly


def component_count(d: FibrationDescriptor) -> int:
    """2 to the number of even-split orthogonal steps; Lagrangian factors
    are connected and never contribute."""
    return 2 ** sum(1 for s in d.og_tower if s.is_split_even)
