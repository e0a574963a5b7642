"""Exact evaluators for the Wiener bounds on maximal k-degenerate graphs.

All arithmetic is on Python integers; nothing passes through floats.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def lower_bound(n: int, k: int) -> int:
    """n^2 - (k+1) n + C(k+1, 2): attained exactly by the diameter <= 2 members."""
    _require(k >= 1 and n >= k, f"lower_bound needs n >= k >= 1, got n={n}, k={k}")
    return n * n - (k + 1) * n + comb(k + 1, 2)


def max_diameter_index(n: int, k: int) -> int:
    """D = floor((n-2)/k); P_n^k has diameter D + 1."""
    return (n - 2) // k


def upper_bound_sum(n: int, k: int) -> int:
    """W(P_n^k) as sum_{j=0..D} C(n - jk, 2)."""
    _require(k >= 1 and n >= 2, f"upper_bound_sum needs n >= 2, k >= 1, got n={n}, k={k}")
    return sum(comb(n - j * k, 2) for j in range(max_diameter_index(n, k) + 1))


def closed_form_numerator(n: int, k: int) -> int:
    """12k * W(P_n^k) via the cubic in n with residue i = (n-2) mod k."""
    i = (n - 2) % k
    return (
        2 * n**3
        + 3 * (k - 1) * n**2
        + k * (k - 3) * n
        - 2 * i**3
        + 3 * i**2 * (k - 3)
        - i * (k * k - 9 * k + 12)
        - 2 * k * k
        + 6 * k
        - 4
    )


def upper_bound_closed(n: int, k: int) -> int:
    _require(k >= 1 and n >= 2, f"upper_bound_closed needs n >= 2, k >= 1, got n={n}, k={k}")
    num = closed_form_numerator(n, k)
    q, r = divmod(num, 12 * k)
    if r:
        raise ArithmeticError(f"closed form not integral at n={n}, k={k}: {num}/{12 * k}")
    return q


def floor_formula(n: int, k: int) -> int:
    """floor((2n^3 + 3(k-1)n^2 + k(k-3)n) / 12k); only valid for k <= 5."""
    _require(n >= 2, f"floor_formula needs n >= 2, got {n}")
    _require(1 <= k <= 5, f"floor_formula only holds for 1 <= k <= 5, got {k}")
    return (2 * n**3 + 3 * (k - 1) * n**2 + k * (k - 3) * n) // (12 * k)


def status_bound(n: int, k: int) -> int:
    """Largest possible status of a vertex in a k-connected graph of order n.

    (D + 1)(n - 1 - kD/2) with D = floor((n-2)/k); evaluated doubled so the
    half-integer never appears.
    """
    _require(k >= 1 and n >= 2, f"status_bound needs n >= 2, k >= 1, got n={n}, k={k}")
    d = max_diameter_index(n, k)
    doubled = (d + 1) * (2 * (n - 1) - k * d)
    if doubled % 2:
        raise ArithmeticError(f"status bound not integral at n={n}, k={k}")
    return doubled // 2


def sequence(k: int, m: int) -> list[int]:
    """W(P_n^k) for n = 1..m, with the n = 1 term taken as 0."""
    _require(k >= 1 and m >= 1, "sequence needs k >= 1 and m >= 1")
    return [0] + [upper_bound_sum(n, k) for n in range(2, m + 1)]


@dataclass(frozen=True)
class BoundsReport:
    n: int
    k: int
    D: int
    residue: int
    lower: int
    upper_sum: int
    upper_closed: int
    status_bound: int
    coincide: bool

    def to_dict(self) -> dict:
        return asdict(self)


def bounds_report(n: int, k: int) -> BoundsReport:
    _require(k >= 1 and n >= max(k, 2), f"bounds_report needs n >= max(k, 2), k >= 1, got n={n}, k={k}")
    lo = lower_bound(n, k)
    up = upper_bound_sum(n, k)
    return BoundsReport(
        n=n,
        k=k,
        D=max_diameter_index(n, k),
        residue=(n - 2) % k,
        lower=lo,
        upper_sum=up,
        upper_closed=upper_bound_closed(n, k),
        status_bound=status_bound(n, k),
        coincide=lo == up,
    )
