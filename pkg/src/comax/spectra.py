"""Laplacian spectra of comaximal graphs via the divisor-class quotient.

The nonzero non-units of Z_n split into divisor classes A_d (one per proper
divisor d, size phi(n/d)); classes are pairwise completely adjacent or
completely non-adjacent according to coprimality of their divisors, so the
partition is equitable and the induced subgraph G2 is a blow-up of the
divisor coprimality graph H by null graphs.

Its Laplacian spectrum therefore splits into
  * the class degree N_d with multiplicity (size of A_d) - 1, per class, and
  * the spectrum of a w x w quotient matrix B.
B has B[i][i] = N_{d_i} and B[i][j] = -phi(n/d_j) for coprime d_i, d_j; it is
the diagonal similarity D^-1 M D (D = diag(sqrt of class sizes)) of the
symmetric quotient M, so its spectrum is real while all arithmetic stays in
the integers.

The full graph is the join of a clique on the units with (G2 plus the
isolated zero vertex), which contributes eigenvalue n with multiplicity
phi(n), one 0, and shifts everything from G2 up by phi(n).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .polynomial import (
    IntPoly,
    char_poly_matrix,
    extract_integer_roots,
    real_roots_numeric,
)
from .ring_divisors import Modulus, euler_phi, is_prime


def coprimality_graph(m: Modulus) -> dict[int, tuple[int, ...]]:
    """The divisor coprimality graph H on the proper divisors of n.

    Maps each proper divisor to the sorted tuple of proper divisors coprime
    to it; d-e is an edge iff gcd(d, e) = 1.
    """
    ds = m.proper_divisors
    return {
        d: tuple(e for e in ds if e != d and math.gcd(d, e) == 1) for d in ds
    }


@dataclass(frozen=True)
class QuotientMatrix:
    """Integer quotient matrix B of G2 over the divisor-class partition.

    ``sizes[i]`` is the class size phi(n/d_i); the diagonal entry is the
    class degree N_{d_i} (every vertex of A_{d_i} has exactly N_{d_i}
    neighbors in G2), and B[i][j] = -sizes[j] when gcd(d_i, d_j) = 1.
    """

    divisors: tuple[int, ...]
    sizes: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def w(self) -> int:
        return len(self.divisors)

    def class_degree(self, d: int) -> int:
        return self.entries[self.divisors.index(d)][self.divisors.index(d)]


def g2_quotient(m: Modulus) -> QuotientMatrix:
    """Build the quotient matrix B for G2 (empty for prime n)."""
    ds = m.proper_divisors
    sizes = tuple(m.class_size(d) for d in ds)
    rows = []
    for i, di in enumerate(ds):
        row = [0] * len(ds)
        diag = 0
        for j, dj in enumerate(ds):
            if i != j and math.gcd(di, dj) == 1:
                row[j] = -sizes[j]
                diag += sizes[j]
        row[i] = diag
        rows.append(tuple(row))
    return QuotientMatrix(divisors=tuple(ds), sizes=sizes, entries=tuple(rows))


def char_poly(q: QuotientMatrix) -> IntPoly:
    """Exact characteristic polynomial det(xI - B) of a quotient matrix."""
    return char_poly_matrix(q.entries)


@dataclass(frozen=True)
class SpectrumMultiset:
    """Exact Laplacian spectrum: integer eigenvalues plus a residual polynomial.

    ``integer_part`` holds (eigenvalue, multiplicity) pairs sorted by
    descending eigenvalue.  ``residual`` is a monic integer polynomial with
    no integer roots whose real roots (with multiplicity) are the remaining
    eigenvalues; it is the constant 1 exactly when the spectrum is integral.
    """

    integer_part: tuple[tuple[int, int], ...]
    residual: IntPoly

    @classmethod
    def from_counter(
        cls, counts: Counter, residual: IntPoly | None = None
    ) -> "SpectrumMultiset":
        pairs = tuple(
            (v, c) for v, c in sorted(counts.items(), reverse=True) if c > 0
        )
        return cls(pairs, residual if residual is not None else IntPoly.one())

    @property
    def size(self) -> int:
        """Total eigenvalue count (multiplicities plus residual degree)."""
        return sum(c for _, c in self.integer_part) + self.residual.degree

    @property
    def is_integral(self) -> bool:
        return self.residual.degree == 0

    def as_counter(self) -> Counter:
        return Counter(dict(self.integer_part))

    def multiplicity_of(self, value: int) -> int:
        for v, c in self.integer_part:
            if v == value:
                return c
        return 0

    def residual_roots(self) -> list[float]:
        return real_roots_numeric(self.residual)

    def values_ascending(self) -> list[float]:
        """All eigenvalues expanded with multiplicity, ascending floats."""
        out: list[float] = []
        for v, c in self.integer_part:
            out.extend([float(v)] * c)
        out.extend(self.residual_roots())
        out.sort()
        return out

    def second_smallest(self) -> int | float:
        """Second-smallest eigenvalue counting multiplicity (exact if integer)."""
        entries: list[tuple[float, int, int | float]] = []
        for v, c in self.integer_part:
            entries.append((float(v), c, v))
        for r in self.residual_roots():
            entries.append((r, 1, r))
        entries.sort(key=lambda e: e[0])
        if not entries:
            raise ValueError("empty spectrum")
        if entries[0][1] >= 2:
            return entries[0][2]
        if len(entries) < 2:
            raise ValueError("spectrum has fewer than two eigenvalues")
        return entries[1][2]

    def largest_below_radius(self) -> int | float:
        """Largest eigenvalue strictly below the spectral radius.

        The radius of a comaximal graph is n with multiplicity phi(n) >= 2,
        so the multiset second-largest would trivially equal n; the quantity
        of interest is the top of the shifted G2 spectrum.
        """
        values: list[int | float] = [v for v, _ in self.integer_part]
        values.extend(self.residual_roots())
        if len(values) < 2:
            raise ValueError("spectrum has no eigenvalue below the radius")
        top = max(values, key=float)
        below = [v for v in values if float(v) < float(top)]
        if not below:
            raise ValueError("all eigenvalues equal the radius")
        return max(below, key=float)


def g2_spectrum(m: Modulus) -> SpectrumMultiset:
    """Exact Laplacian spectrum of G2 (empty multiset for prime n).

    Per divisor class: the class degree with multiplicity (class size - 1);
    the quotient matrix contributes the rest.  Integer roots of the quotient
    characteristic polynomial are extracted exactly; whatever remains is the
    residual.  Total size is n - phi(n) - 1.
    """
    q = g2_quotient(m)
    counts: Counter = Counter()
    for i in range(q.w):
        mult = q.sizes[i] - 1
        if mult > 0:
            counts[q.entries[i][i]] += mult
    if q.w == 0:
        return SpectrumMultiset.from_counter(counts)
    poly = char_poly(q)
    # quotient eigenvalues are Laplacian eigenvalues of G2, hence in
    # [0, n - phi(n) - 1]
    roots, residual = extract_integer_roots(poly, root_bound=m.n - m.phi - 1)
    for r, mult in roots:
        if r < 0:
            raise ArithmeticError(
                f"negative Laplacian eigenvalue {r} for n={m.n}: inconsistent state"
            )
        counts[r] += mult
    return SpectrumMultiset.from_counter(counts, residual)


def full_spectrum(m: Modulus) -> SpectrumMultiset:
    """Exact Laplacian spectrum of the comaximal graph of Z_n.

    {0: 1} and {n: phi(n)} from the join with the unit clique, plus the G2
    spectrum shifted up by phi(n).  Total multiplicity is n.
    """
    g2 = g2_spectrum(m)
    counts = Counter({0: 1, m.n: m.phi})
    for v, c in g2.integer_part:
        counts[v + m.phi] += c
    residual = (
        g2.residual
        if g2.residual.degree == 0
        else g2.residual.shift_argument(m.phi)
    )
    return SpectrumMultiset.from_counter(counts, residual)


def closed_form_prime(p: int) -> SpectrumMultiset:
    """Spectrum for prime n = p: the graph is the complete graph K_p."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"{p} is not a prime >= 3")
    return SpectrumMultiset.from_counter(Counter({p: p - 1, 0: 1}))


def closed_form_prime_power(p: int, m: int) -> SpectrumMultiset:
    """Spectrum for n = p^m, m >= 2: clique joined onto a null graph."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 2:
        raise ValueError(f"exponent must be >= 2, got {m}")
    n = p**m
    phi = euler_phi(n)
    return SpectrumMultiset.from_counter(
        Counter({n: phi, phi: n - phi - 1, 0: 1})
    )


def closed_form_two_primes(p: int, q: int, alpha: int, beta: int) -> SpectrumMultiset:
    """Spectrum for n = p^alpha * q^beta with primes p < q and alpha, beta >= 1.

    With t = p^(alpha-1) * q^(beta-1) - 1, G2 is the join of two null graphs
    (the p-pure and q-pure classes, sizes (t+1)(q-1) and (t+1)(p-1)) plus t
    isolated vertices.  Entries whose multiplicity vanishes (only
    (t+1)(p-1)-1 when p=2, alpha=beta=1) are dropped.
    """
    if not (is_prime(p) and is_prime(q)):
        raise ValueError("p and q must be prime")
    if p >= q:
        raise ValueError(f"need p < q, got p={p}, q={q}")
    if alpha < 1 or beta < 1:
        raise ValueError("exponents must be >= 1")
    n = p**alpha * q**beta
    phi = euler_phi(n)
    t = p ** (alpha - 1) * q ** (beta - 1) - 1
    counts = Counter()
    counts[n] += phi
    counts[(t + 1) * (p - 1) + phi] += (t + 1) * (q - 1) - 1
    counts[(t + 1) * (q - 1) + phi] += (t + 1) * (p - 1) - 1
    counts[phi] += t + 1
    counts[(t + 1) * (p + q - 2) + phi] += 1
    counts[0] += 1
    return SpectrumMultiset.from_counter(counts)


def g2_char_poly(m: Modulus) -> IntPoly:
    """Exact characteristic polynomial of the Laplacian of G2.

    Product of the per-class linear factors (x - N_d)^(size-1) with the
    quotient characteristic polynomial; degree n - phi(n) - 1.
    """
    q = g2_quotient(m)
    out = IntPoly.one()
    for i in range(q.w):
        mult = q.sizes[i] - 1
        if mult > 0:
            out = out * IntPoly.linear_power(q.entries[i][i], mult)
    return out * char_poly(q)


def full_char_poly(m: Modulus) -> IntPoly:
    """Exact characteristic polynomial of the full Laplacian: the join formula
    x * (x - n)^phi(n) * mu(G2, x - phi(n)), assembled without touching the
    dense matrix."""
    out = IntPoly((0, 1)) * IntPoly.linear_power(m.n, m.phi)
    return out * g2_char_poly(m).shift_argument(m.phi)


def is_laplacian_integral(m: Modulus) -> bool:
    """Whether every Laplacian eigenvalue of the comaximal graph is an integer."""
    return full_spectrum(m).is_integral


def spectrum_json_dict(m: Modulus, spectrum: SpectrumMultiset | None = None) -> dict:
    """Spectrum rendered as the stable JSON schema."""
    s = full_spectrum(m) if spectrum is None else spectrum
    return {
        "n": m.n,
        "phi": m.phi,
        "integer_eigenvalues": [[v, c] for v, c in s.integer_part],
        "residual_poly": list(s.residual.coeffs) if not s.is_integral else None,
        "laplacian_integral": s.is_integral,
    }
