"""Quantum switch of N identical thermalizing channels over chosen causal orders.

Two independent routes to the control-target output state:

* ``switch_closed_form`` builds the analytic result for the cyclic-order
  construction: Gibbs state T on every diagonal control block and T rho T on
  every off-diagonal block.
* ``switch_bruteforce`` sums the full Kraus decomposition of the switch over
  all (d**2)**N channel-index tuples for an arbitrary set of causal orders.
  It never looks at the closed form, which makes it the oracle that the
  closed form is tested against.

Branch statistics after the control measurement (one cooling branch
proportional to T + (N-1)T^3, N-1 identical heating branches proportional to
T - T^3) are provided for qubit and degenerate-qudit working systems.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations as _permutations

import numpy as np

from .channels import thermalizing_kraus
from .qmat import ALGEBRA_TOL
from .thermal import ThermalSpec, gibbs_state, hamiltonian, mean_energy

# Hard ceiling on the number of Kraus-index tuples the brute force will sum.
BRUTEFORCE_BUDGET = 10**6

_CHUNK = 1 << 14


@dataclass(frozen=True)
class OrderSet:
    """A set of causal orders, each a permutation of the channels 1..N.

    ``orders[k]`` is the sequence of channel labels applied on control branch
    k, first entry outermost (applied last).
    """

    orders: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        orders = tuple(tuple(int(x) for x in o) for o in self.orders)
        if not orders:
            raise ValueError("need at least one causal order")
        n = len(orders[0])
        for o in orders:
            if sorted(o) != list(range(1, n + 1)):
                raise ValueError(f"{o} is not a permutation of 1..{n}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def cyclic(cls, n: int) -> "OrderSet":
        """The N rotations of (1, 2, ..., N); branch k starts at channel k+1."""
        if n < 2:
            raise ValueError("need at least two channels")
        base = list(range(1, n + 1))
        return cls(orders=tuple(tuple(base[k:] + base[:k]) for k in range(n)))

    @property
    def n_channels(self) -> int:
        return len(self.orders[0])

    @property
    def n_orders(self) -> int:
        return len(self.orders)

    def is_latin_square(self) -> bool:
        """True when every channel occupies every sequence position once."""
        if self.n_orders != self.n_channels:
            return False
        cols = zip(*self.orders)
        return all(sorted(c) == list(range(1, self.n_channels + 1)) for c in cols)

    def to_json(self) -> str:
        return json.dumps([list(o) for o in self.orders])

    @classmethod
    def from_json(cls, text: str) -> "OrderSet":
        return cls(orders=tuple(tuple(o) for o in json.loads(text)))


@dataclass(frozen=True)
class SwitchOutput:
    """Joint control x target state produced by the switch."""

    joint: np.ndarray
    control_dim: int
    target_dim: int

    def block(self, i: int, j: int) -> np.ndarray:
        """Target-space block <i| . |j> of the control index."""
        d = self.target_dim
        return self.joint[i * d : (i + 1) * d, j * d : (j + 1) * d]

    def to_json(self) -> str:
        m = self.joint
        return json.dumps(
            {
                "control_dim": self.control_dim,
                "target_dim": self.target_dim,
                "re": m.real.reshape(-1).tolist(),
                "im": m.imag.reshape(-1).tolist(),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SwitchOutput":
        data = json.loads(text)
        n, d = int(data["control_dim"]), int(data["target_dim"])
        m = (np.asarray(data["re"]) + 1j * np.asarray(data["im"])).reshape(n * d, n * d)
        return cls(joint=m, control_dim=n, target_dim=d)


def switch_closed_form(n: int, rho: np.ndarray, thermal_state: np.ndarray) -> SwitchOutput:
    """Analytic cyclic-order switch output for a uniform control state.

    joint = (1/N) [ I_N (x) T  +  sum_{i != j} |i><j| (x) T rho T ].
    """
    rho = np.asarray(rho, dtype=complex)
    t = np.asarray(thermal_state, dtype=complex)
    if rho.shape != t.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {t.shape}")
    if n < 2:
        raise ValueError("need at least two channels")
    off = t @ rho @ t
    ones = np.ones((n, n), dtype=complex)
    joint = (np.kron(np.eye(n, dtype=complex), t) + np.kron(ones - np.eye(n), off)) / n
    return SwitchOutput(joint=joint, control_dim=n, target_dim=t.shape[0])


def switch_bruteforce(orderset: OrderSet, rho: np.ndarray, spec: ThermalSpec) -> SwitchOutput:
    """Direct Kraus summation of the switch, independent of any closed form.

    Every control branch k applies the thermalizing channel's Kraus operators
    in the order ``orderset.orders[k]``; the output is the sum over all
    (d**2)**N index tuples of W (rho_c (x) rho) W^dag with a uniform control.
    Refuses (with the size report in the message) when the tuple count
    exceeds BRUTEFORCE_BUDGET.
    """
    rho = np.asarray(rho, dtype=complex)
    d = spec.dim
    if rho.shape != (d, d):
        raise ValueError(f"working state shape {rho.shape} does not match dim {d}")
    n = orderset.n_channels
    m = orderset.n_orders
    n_ops = d * d
    n_tuples = n_ops**n
    if n_tuples > BRUTEFORCE_BUDGET:
        raise ValueError(
            f"enumeration of {n_tuples} Kraus tuples exceeds budget {BRUTEFORCE_BUDGET}"
        )

    kraus = np.stack(thermalizing_kraus(spec).operators)  # (d^2, d, d)
    blocks = np.zeros((m, m, d, d), dtype=complex)
    for start in range(0, n_tuples, _CHUNK):
        stop = min(start + _CHUNK, n_tuples)
        flat = np.arange(start, stop)
        # tuple digit j = channel j+1's Kraus index, base d^2, most significant first
        digits = (flat[:, None] // n_ops ** np.arange(n - 1, -1, -1)[None, :]) % n_ops
        prods = []
        for order in orderset.orders:
            p = kraus[digits[:, order[0] - 1]]
            for label in order[1:]:
                p = p @ kraus[digits[:, label - 1]]
            prods.append(p)
        for i in range(m):
            left = prods[i] @ rho
            for j in range(m):
                blocks[i, j] += np.einsum("tab,tcb->ac", left, prods[j].conj())
    joint = np.zeros((m * d, m * d), dtype=complex)
    for i in range(m):
        for j in range(m):
            joint[i * d : (i + 1) * d, j * d : (j + 1) * d] = blocks[i, j] / m
    return SwitchOutput(joint=joint, control_dim=m, target_dim=d)


def noncyclic_order_set(n: int) -> OrderSet:
    """An explicit Latin-square order set other than the standard rotations.

    For n = 4 the rows are the powers of the 4-cycle 1->2->4->3->1 acting on
    the channel labels of (1,2,3,4); unlike position rotations, this family
    produces uniform off-diagonal blocks T^5 (not T rho T) at the thermal
    operating point. For n = 3 every Latin square is some rotation family, so
    the returned set (rotations of a transposed base sequence) still yields
    T^3, as does the cyclic preset.
    """
    if n == 3:
        return OrderSet(orders=((1, 3, 2), (2, 1, 3), (3, 2, 1)))
    if n == 4:
        return OrderSet(orders=((1, 2, 3, 4), (2, 4, 1, 3), (3, 1, 4, 2), (4, 3, 2, 1)))
    raise ValueError("explicit non-cyclic sets are provided for n in {3, 4} only")


@dataclass(frozen=True)
class BranchStats:
    """Post-measurement branch probabilities and working-system states."""

    n: int
    p_c: float
    p_h: float
    rho_c: np.ndarray
    rho_h: np.ndarray

    @property
    def p_heating_total(self) -> float:
        return (self.n - 1) * self.p_h


def branch_stats(n: int, spec: ThermalSpec) -> BranchStats:
    """Branch statistics at the operating point (working state = Gibbs state).

    Cooling branch state ~ T + (N-1) T^3 with probability tr(...)/N, each of
    the N-1 heating branches ~ T - T^3 with probability tr(T - T^3)/N. The
    normalized heating state does not depend on N.
    """
    if n < 2:
        raise ValueError("need at least two channels")
    t = gibbs_state(spec)
    t3 = t @ t @ t
    cool = t + (n - 1) * t3
    heat = t - t3
    p_c = float(np.trace(cool).real) / n
    p_h = float(np.trace(heat).real) / n
    rho_h = heat / np.trace(heat).real if p_h > 0 else gibbs_state(spec)
    return BranchStats(
        n=n,
        p_c=p_c,
        p_h=p_h,
        rho_c=cool / np.trace(cool).real,
        rho_h=rho_h,
    )


def qudit_branch_stats(n: int, dim: int, r: float) -> BranchStats:
    """Branch statistics for the degenerate D-level working system.

    For small r the total heating probability behaves as
    3 (N-1) (D-1) r / N, so extra working-system dimensions boost the
    low-temperature heat transfer.
    """
    return branch_stats(n, ThermalSpec.degenerate(dim, r))


def weighted_energy(n: int, dim: int, r: float) -> tuple[float, float]:
    """Average heat moved per run: (heating, cooling) weighted energy changes.

    The heating value is p_H * (E[heating branch] - E[Gibbs]); the cooling
    value is its negative, since the branch average conserves energy.
    """
    spec = ThermalSpec.degenerate(dim, r)
    stats = branch_stats(n, spec)
    h = hamiltonian(spec)
    e_thermal = mean_energy(gibbs_state(spec), h)
    de_h = stats.p_heating_total * (mean_energy(stats.rho_h, h) - e_thermal)
    return de_h, -de_h


def offdiagonal_blocks_equal(out: SwitchOutput, tol: float = ALGEBRA_TOL) -> bool:
    """True when all off-diagonal control blocks agree entrywise."""
    ref = None
    for i in range(out.control_dim):
        for j in range(out.control_dim):
            if i == j:
                continue
            b = out.block(i, j)
            if ref is None:
                ref = b
            elif np.max(np.abs(b - ref)) > tol:
                return False
    return True


def all_order_sets(n: int) -> list[OrderSet]:
    """All Latin-square order sets on n channels (dev-scale helper, n <= 4)."""
    if n > 4:
        raise ValueError("full Latin-square enumeration is desk-scale only (n <= 4)")
    perms = list(_permutations(range(1, n + 1)))
    squares: list[OrderSet] = []

    def extend(rows: list[tuple[int, ...]]):
        if len(rows) == n:
            squares.append(OrderSet(orders=tuple(rows)))
            return
        for p in perms:
            if all(all(p[i] != row[i] for i in range(n)) for row in rows):
                extend(rows + [p])

    extend([])
    return squares
