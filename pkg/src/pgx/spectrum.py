"""Element-order spectra and the exact statistics derived from them.

The order spectrum of a finite group records how many elements have each
order. It determines the element-order sum, the totient sum over element
orders, and all three power-graph edge counts:

    directed arcs    = order_sum - size
    mutual pairs     = (phi_sum - size) / 2
    undirected edges = order_sum - (phi_sum + size) / 2

Everything in this module is arbitrary-precision Python integer arithmetic;
the divisions above must be exact and raise InvariantError otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Mapping

from .errors import InputError, InvariantError

if TYPE_CHECKING:  # pragma: no cover
    from .groups import GroupTable


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as ascending (prime, exponent) pairs."""
    if n < 1:
        raise InputError(f"cannot factor {n}: need a positive integer")
    out: list[tuple[int, int]] = []
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            out.append((f, e))
        f += 1 if f == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def totient(m: int) -> int:
    """Euler's totient of m, from the trial-division factorization."""
    if m < 1:
        raise InputError(f"totient undefined for {m}")
    res = m
    for p, _ in factor(m):
        res = res // p * (p - 1)
    return res


def divisors(m: int) -> list[int]:
    """All positive divisors of m, ascending."""
    ds = [1]
    for p, e in factor(m):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


class OrderSpectrum:
    """Multiset of element orders: immutable mapping order -> element count.

    The total count is the group order. Construction enforces the cheap
    structural invariants (exactly one identity, every order divides the
    total); `check()` additionally asserts the totient-divisibility of each
    count, which holds in any finite group.
    """

    __slots__ = ("_counts", "_total")

    def __init__(self, counts: Mapping[int, int]):
        cleaned: dict[int, int] = {}
        for d in sorted(counts):
            c = counts[d]
            if c == 0:
                continue
            if d < 1 or c < 0:
                raise InvariantError(f"bad spectrum entry order={d} count={c}")
            cleaned[int(d)] = int(c)
        if cleaned.get(1) != 1:
            raise InvariantError("spectrum must contain exactly one element of order 1")
        total = sum(cleaned.values())
        for d in cleaned:
            if total % d:
                raise InvariantError(f"order {d} does not divide group size {total}")
        self._counts = cleaned
        self._total = total

    @property
    def total(self) -> int:
        """Number of elements, i.e. the group order."""
        return self._total

    def items(self) -> list[tuple[int, int]]:
        return list(self._counts.items())

    def get(self, d: int, default: int = 0) -> int:
        return self._counts.get(d, default)

    def __getitem__(self, d: int) -> int:
        return self._counts[d]

    def __contains__(self, d: int) -> bool:
        return d in self._counts

    def __iter__(self) -> Iterator[int]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderSpectrum):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(tuple(self._counts.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{d}: {c}" for d, c in self._counts.items())
        return f"OrderSpectrum({{{inner}}})"

    def to_pairs(self) -> list[list[int]]:
        """JSON-friendly [[order, count], ...] in ascending order."""
        return [[d, c] for d, c in self._counts.items()]

    def check(self) -> None:
        """Assert the full group-theoretic invariants of a spectrum."""
        for d, c in self._counts.items():
            t = totient(d)
            if c % t:
                raise InvariantError(
                    f"count {c} for order {d} is not a multiple of totient({d})={t}"
                )


def order_spectrum(g: "GroupTable") -> OrderSpectrum:
    """Tally the order of every element of g by successive multiplication."""
    counts: dict[int, int] = {}
    for o in g.element_orders():
        counts[o] = counts.get(o, 0) + 1
    s = OrderSpectrum(counts)
    if s.total != g.size:
        raise InvariantError("order tally lost elements")  # unreachable for valid tables
    return s


def spectrum_cyclic(m: int) -> OrderSpectrum:
    """Order spectrum of the cyclic group of order m: totient(d) elements per divisor d."""
    if m < 1:
        raise InputError(f"cyclic group order must be positive, got {m}")
    return OrderSpectrum({d: totient(d) for d in divisors(m)})


def spectrum_product(s: OrderSpectrum, t: OrderSpectrum) -> OrderSpectrum:
    """Spectrum of a direct product, by lcm convolution of the factor spectra.

    Valid for arbitrary factors, coprime or not: the order of (x, y) is
    lcm(o(x), o(y)).
    """
    out: dict[int, int] = {}
    for a, ca in s.items():
        for b, cb in t.items():
            d = math.lcm(a, b)
            out[d] = out.get(d, 0) + ca * cb
    return OrderSpectrum(out)


def order_sum(s: OrderSpectrum) -> int:
    """Sum of element orders."""
    return sum(d * c for d, c in s.items())


def phi_sum(s: OrderSpectrum) -> int:
    """Sum of totient(o(g)) over all elements g."""
    return sum(totient(d) * c for d, c in s.items())


def directed_arcs(s: OrderSpectrum) -> int:
    """Arc count of the directed power graph: order_sum - size."""
    return order_sum(s) - s.total


def mutual_edges(s: OrderSpectrum) -> int:
    """Number of unordered pairs {g, h}, g != h, with arcs both ways.

    Equals (phi_sum - size)/2; the division must be exact.
    """
    num = phi_sum(s) - s.total
    if num < 0 or num % 2:
        raise InvariantError(f"mutual-pair count 2*m = {num} is not a nonnegative even number")
    return num // 2


def undirected_edges(s: OrderSpectrum) -> int:
    """Edge count of the undirected power graph: order_sum - (phi_sum + size)/2."""
    half = phi_sum(s) + s.total
    if half % 2:
        raise InvariantError(f"phi_sum + size = {half} is odd; edge count would not be integral")
    e = order_sum(s) - half // 2
    if e < 0:
        raise InvariantError(f"negative edge count {e}")
    return e


def phi_cyclic_prime_power(p: int, m: int) -> int:
    """phi_sum of the cyclic group of order p^m, in closed form.

    Computes (p^(2m) * (p-1) + 2) / (p+1); the division is exact for every
    prime p and m >= 0, and is checked.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if m < 0:
        raise InputError(f"exponent must be nonnegative, got {m}")
    num = p ** (2 * m) * (p - 1) + 2
    q, r = divmod(num, p + 1)
    if r:
        raise InvariantError(f"closed form not an integer at p={p}, m={m}")
    return q


@dataclass(frozen=True)
class GroupStats:
    """The six exact statistics of one group, cross-checked on construction."""

    name: str
    size: int
    sigma: int
    phi_sum: int
    directed_arcs: int
    mutual_edges: int
    undirected_edges: int

    CSV_COLUMNS = ("name", "size", "sigma", "phi_sum", "directed_arcs",
                   "mutual_edges", "undirected_edges")

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InvariantError("empty group")
        if self.directed_arcs != self.sigma - self.size:
            raise InvariantError(f"{self.name}: directed_arcs != sigma - size")
        if 2 * self.mutual_edges != self.phi_sum - self.size:
            raise InvariantError(f"{self.name}: 2*mutual_edges != phi_sum - size")
        if 2 * self.undirected_edges != 2 * self.sigma - self.phi_sum - self.size:
            raise InvariantError(f"{self.name}: edge identity violated")

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "size": self.size,
            "sigma": self.sigma,
            "phi_sum": self.phi_sum,
            "directed_arcs": self.directed_arcs,
            "mutual_edges": self.mutual_edges,
            "undirected_edges": self.undirected_edges,
        }

    def to_csv_row(self) -> list[str]:
        return [str(getattr(self, col)) for col in self.CSV_COLUMNS]


def stats_from_spectrum(name: str, s: OrderSpectrum) -> GroupStats:
    """Assemble GroupStats from a spectrum via the exact identities."""
    return GroupStats(
        name=name,
        size=s.total,
        sigma=order_sum(s),
        phi_sum=phi_sum(s),
        directed_arcs=directed_arcs(s),
        mutual_edges=mutual_edges(s),
        undirected_edges=undirected_edges(s),
    )


def group_stats(g: "GroupTable") -> GroupStats:
    """Stats of a concrete group, from its tallied order spectrum."""
    return stats_from_spectrum(g.name, order_spectrum(g))
