"""The semidirect product ``G x|_phi Z`` and its finite quotients ``G x|_phi Z/k``.

The infinite group is handled element-wise; nothing is tabulated. The law is

    (g, m) . (h, n) = (phi^n(g) h, m + n)
    (g, m)^-1      = (phi^-m(g^-1), -m)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import ExponentDoesNotAnnihilate
from .finite_group import FiniteGroup, GroupAutomorphism, aut_order, check_group, invert, power


class SemiZElement(NamedTuple):
    g: int
    m: int


@dataclass(frozen=True)
class SemiZGroup:
    base: FiniteGroup
    phi: GroupAutomorphism
    phi_inverse: GroupAutomorphism = field(default=None)

    def __post_init__(self):
        if self.phi_inverse is None:
            object.__setattr__(self, "phi_inverse", invert(self.phi))
        if any(self.phi_inverse.map[self.phi.map[g]] != g for g in self.base.elements):
            raise ValueError("phi_inverse is not inverse to phi")

    @property
    def identity(self) -> SemiZElement:
        return SemiZElement(0, 0)

    def phi_power(self, n: int, g: int) -> int:
        step = self.phi.map if n >= 0 else self.phi_inverse.map
        for _ in range(abs(n)):
            g = step[g]
        return g

    def element(self, g: int, m: int) -> SemiZElement:
        if not 0 <= g < self.base.order:
            raise ValueError(f"group element {g} out of range")
        return SemiZElement(g, int(m))


def semi_mul(H: SemiZGroup, a: SemiZElement, b: SemiZElement) -> SemiZElement:
    g = H.base.table[H.phi_power(b.m, a.g)][b.g]
    return SemiZElement(g, a.m + b.m)


def semi_inv(H: SemiZGroup, a: SemiZElement) -> SemiZElement:
    return SemiZElement(H.phi_power(-a.m, H.base.inverse[a.g]), -a.m)


def semi_conjugate(H: SemiZGroup, x: SemiZElement, y: SemiZElement) -> SemiZElement:
    """``y^-1 x y``, the product ``x * y`` in Conj(H)."""
    return semi_mul(H, semi_mul(H, semi_inv(H, y), x), y)


@dataclass(frozen=True)
class SemiCyclicGroup:
    base: FiniteGroup
    phi: GroupAutomorphism
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("modulus must be positive")
        if power(self.phi, self.k).map != tuple(self.base.elements):
            raise ExponentDoesNotAnnihilate(self.k)

    def index(self, g: int, m: int) -> int:
        """Table index of ``(g, m mod k)``."""
        return (m % self.k) * self.base.order + g

    def decode(self, i: int) -> tuple[int, int]:
        m, g = divmod(i, self.base.order)
        return g, m

    def as_group(self) -> FiniteGroup:
        G, k, n = self.base, self.k, self.base.order
        # phi^j for j in 0..k-1
        powers = [tuple(G.elements)]
        for _ in range(k - 1):
            powers.append(tuple(self.phi.map[x] for x in powers[-1]))
        rows = []
        for i in range(n * k):
            g, m = self.decode(i)
            row = []
            for j in range(n * k):
                h, mm = self.decode(j)
                row.append(self.index(G.table[powers[mm][g]][h], m + mm))
            rows.append(row)
        # (0, 0) encodes to 0, so normalisation never relabels
        return check_group(rows)


def build_finite_witness(G: FiniteGroup, phi: GroupAutomorphism, k: int | None = None) -> FiniteGroup:
    """Tabulate ``G x|_phi Z/k``; element ``(g, m)`` has index ``m*|G| + g``.

    ``k`` defaults to the order of ``phi``.
    """
    k = aut_order(phi) if k is None else k
    return SemiCyclicGroup(G, phi, k).as_group()
