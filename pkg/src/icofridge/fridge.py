"""Refrigeration-cycle thermodynamics for the three cooling schemes.

Schemes
-------
``ico``
    Switch of N thermalizing channels in superposed cyclic orders; one
    working medium; heating branch ~ T - T^3.
``cswap``
    Controlled SWAP with accessible reservoir qubits; same branch
    probabilities as ``ico`` but N+1 working mediums, which exactly triples
    the weighted energy change and the optimal coefficient of performance.
``traj``
    Coherent choice among N channels. The cycle bookkeeping follows the
    closed forms used throughout the quantitative analysis of this scheme,
    with interference term A rho A^dag; the heating branch is then maximally
    mixed at every temperature, so a large enough hot reservoir lets the
    cold one approach absolute zero from any start. (The Stinespring
    dilation of the canonical implementation gives the weaker interference
    A rho A^dag / 2 -- see the trajectories module -- but the published
    temperature-limit and efficiency curves follow the convention used
    here.)

Reservoirs are mean field: a bath is its particle count and current ratio.
Per cycle the reservoir energies move by the probability-weighted heat flows
of the two branches, which conserves total energy identically and drives the
cold ratio to the closed-form fixed point; the sampled branch label, register
entropy and erasure work are recorded on the trace. Energies are in units of
the level gap; work uses a unit-inverse-temperature erasure reservoir.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np

SCHEMES = ("ico", "cswap", "traj")

# Stop when the heating-branch medium matches the hot bath this closely in
# excited population; heat flow per cycle is numerically negligible below it.
STOP_POPULATION_TOL = 1e-6

# Stop when the cold ratio has iterated this close to absolute zero: the
# branch probabilities (hence all flows) vanish with r, so the run has frozen.
COLD_EXHAUSTED_TOL = 1e-7


def _point(scheme: str, n: int, dim: int, r: float):
    """Scalar branch data at ratio ``r``: (p_c, p_h_each, e_bath, e_cool_sum,
    e_heat_sum, n_mediums). Energy sums run over all working mediums."""
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    if not 0.0 < r <= 1.0:
        raise ValueError(f"ratio {r} outside (0, 1]")
    if n < 2:
        raise ValueError("need at least two channels")
    if scheme in ("cswap", "traj") and dim != 2:
        raise ValueError(f"scheme {scheme!r} is defined for qubit working systems")
    x = (dim - 1) * r
    z = 1.0 + x
    a = x / z
    if scheme == "traj":
        tr2 = (1.0 + r * r) / (z * z)
        e2 = r * r / (z * z)
        tr_h = 1.0 - tr2
        p_h = tr_h / n
        p_c = 1.0 - (n - 1) * p_h
        e_heat = (a - e2) / tr_h if tr_h > 0 else a
        e_cool = (a + (n - 1) * e2) / (1.0 + (n - 1) * tr2)
        return p_c, p_h, a, e_cool, e_heat, 1

    z3 = z * z * z
    tr3 = (1.0 + (dim - 1) * r**3) / z3
    e3 = (dim - 1) * r**3 / z3
    tr_h = 1.0 - tr3
    p_h = tr_h / n
    p_c = 1.0 - (n - 1) * p_h
    pop_h = (a - e3) / tr_h if tr_h > 0 else a
    pop_c = (a + (n - 1) * e3) / (1.0 + (n - 1) * tr3)
    if scheme == "ico":
        return p_c, p_h, a, pop_c, pop_h, 1

    # cswap: target plus N reservoir qubits are all working mediums
    alpha = ((n - 1) * (n - 2) * (1 + r**3) + n * z3) / (n * n * z3)
    beta = 2 * (n - 1) / (n * n)
    pop_res = (alpha * a + beta * e3) / p_c
    e_cool_sum = pop_c + n * pop_res
    p_heating = (n - 1) * p_h
    if p_heating > 0:
        e_heat_sum = ((n + 1) * a - p_c * e_cool_sum) / p_heating
    else:
        e_heat_sum = (n + 1) * a
    return p_c, p_h, a, e_cool_sum, e_heat_sum, n + 1


def branch_probabilities(n: int, r: float, scheme: str = "ico", dim: int = 2) -> tuple[float, float]:
    """(cooling probability, per-branch heating probability) for a scheme."""
    p_c, p_h, *_ = _point(scheme, n, dim, r)
    return p_c, p_h


def register_entropy(n: int, r: float, scheme: str = "ico", dim: int = 2) -> float:
    """Shannon entropy (nats) of the fine-grained measurement record.

    One cooling outcome and N-1 individually recorded heating outcomes:
    S = -p_c ln p_c - (N-1) p_h ln p_h.
    """
    p_c, p_h, *_ = _point(scheme, n, dim, r)
    return -_xlogx(p_c) - (n - 1) * _xlogx(p_h)


def work_cost(entropy: float, beta_r: float) -> float:
    """Erasure work for a register of given entropy against a bath at beta_r."""
    if entropy < 0:
        raise ValueError("entropy must be nonnegative")
    return entropy / beta_r


def weighted_energy_scheme(n: int, dim: int, r: float, scheme: str) -> float:
    """Average heat moved per cycle, summed over all working mediums."""
    p_c, p_h, a, _, e_heat, n_med = _point(scheme, n, dim, r)
    return (n - 1) * p_h * (e_heat - n_med * a)


def cop(n: int, dim: int, r: float, r_hot: float, beta_r: float, scheme: str = "ico") -> float:
    """Coefficient of performance at cold ratio ``r`` and hot ratio ``r_hot``.

    Average heat drawn from the cold reservoirs (cooling-branch extraction
    minus the heat the mediums carry back from the hot bath on heating
    branches) divided by the register erasure work. Zero exactly when the
    hot bath matches the heating-branch mediums; maximal at r_hot = r.
    """
    p_c, p_h, a, _, e_heat, n_med = _point(scheme, n, dim, r)
    p_heating = (n - 1) * p_h
    a_hot = (dim - 1) * r_hot / (1.0 + (dim - 1) * r_hot)
    numerator = p_heating * (e_heat - n_med * a) - p_heating * n_med * (a_hot - a)
    return numerator / work_cost(register_entropy(n, r, scheme, dim), beta_r)


def cop_normalized(n: int, dim: int, r: float, scheme: str = "ico") -> float:
    """Optimal-case COP divided by (gap * beta_R): weighted energy over entropy."""
    return weighted_energy_scheme(n, dim, r, scheme) / register_entropy(n, r, scheme, dim)


def stop_ratio(n: int, dim: int, r: float, scheme: str = "ico") -> float:
    """Hot-bath ratio at which the fridge stops: mean heating-medium state.

    At this r_hot the heating branch no longer dumps heat into the hot bath
    and the COP is exactly zero.
    """
    _, _, _, _, e_heat, n_med = _point(scheme, n, dim, r)
    pop = e_heat / n_med
    x = pop / (1.0 - pop)
    return x / (dim - 1)


def lowest_r(scheme: str, r_start: float, k: float) -> float:
    """Closed-form lowest cold-reservoir ratio reachable from ``r_start``.

    ``k`` is the hot-to-cold particle ratio. Negative raw values clamp to 0
    (the cold side can approach absolute zero); the result never exceeds the
    starting ratio.
    """
    if not 0.0 < r_start <= 1.0:
        raise ValueError(f"starting ratio {r_start} outside (0, 1]")
    if k <= 0:
        raise ValueError("reservoir size ratio k must be positive")
    r = r_start
    if scheme == "ico":
        raw = (k - (2 * k + 3) * r) / (k * r - 3 - 2 * k)
    elif scheme == "traj":
        raw = (k - (k + 2) * r) / (k * r - 2 - k)
    else:
        raise ValueError(f"no closed-form temperature limit for scheme {scheme!r}")
    return min(max(raw, 0.0), r_start) + 0.0  # normalize -0.0


@dataclass(frozen=True)
class ReservoirEnsemble:
    """Mean-field reservoirs: particle counts and current ratios."""

    n_cold: float
    n_hot: float
    r_cold: float
    r_hot: float

    def __post_init__(self):
        if self.n_cold <= 0 or self.n_hot <= 0:
            raise ValueError("particle counts must be positive")
        for r in (self.r_cold, self.r_hot):
            if not 0.0 < r <= 1.0:
                raise ValueError(f"ratio {r} outside (0, 1]")

    @classmethod
    def from_ratio(cls, k: float, r_start: float, n_cold: float = 40.0) -> "ReservoirEnsemble":
        """Both baths drawn from one superbath at ``r_start``, sizes in ratio k."""
        return cls(n_cold=n_cold, n_hot=k * n_cold, r_cold=r_start, r_hot=r_start)

    @property
    def k(self) -> float:
        return self.n_hot / self.n_cold


@dataclass
class CycleTrace:
    """Per-cycle record of a refrigeration run."""

    scheme: str
    n: int
    dim: int
    seed: int
    n_cold: float = 0.0
    n_hot: float = 0.0
    r_start_cold: float = 1.0
    r_start_hot: float = 1.0
    max_cycles: int = 0
    cycles: list[int] = field(default_factory=list)
    branches: list[str] = field(default_factory=list)
    r_cold: list[float] = field(default_factory=list)
    r_hot: list[float] = field(default_factory=list)
    heat_cold: list[float] = field(default_factory=list)
    heat_hot: list[float] = field(default_factory=list)
    work: list[float] = field(default_factory=list)
    entropy: list[float] = field(default_factory=list)
    stop_reason: str = "budget"

    @property
    def final_r_cold(self) -> float:
        return self.r_cold[-1]

    @property
    def final_r_hot(self) -> float:
        return self.r_hot[-1]

    def audit_defect(self) -> float:
        """Largest per-cycle first-law violation (cold loss vs hot gain)."""
        if not self.cycles:
            return 0.0
        return max(abs(hc - hh) for hc, hh in zip(self.heat_cold, self.heat_hot))

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(
            f"# config: command=cycle scheme={self.scheme} n={self.n} d={self.dim} "
            f"seed={self.seed} n_cold={self.n_cold:.12g} n_hot={self.n_hot:.12g} "
            f"r_start={self.r_start_cold:.12g} r_hot_start={self.r_start_hot:.12g} "
            f"max_cycles={self.max_cycles} stop={self.stop_reason}\n"
        )
        buf.write("cycle,branch,r_cold,r_hot,heat_cold,heat_hot,work,entropy\n")
        for row in zip(
            self.cycles,
            self.branches,
            self.r_cold,
            self.r_hot,
            self.heat_cold,
            self.heat_hot,
            self.work,
            self.entropy,
        ):
            buf.write(
                f"{row[0]},{row[1]},{row[2]:.12g},{row[3]:.12g},{row[4]:.12g},"
                f"{row[5]:.12g},{row[6]:.12g},{row[7]:.12g}\n"
            )
        return buf.getvalue()


def run_cycles(
    scheme: str,
    ensemble: ReservoirEnsemble,
    n: int,
    dim: int = 2,
    seed: int = 0,
    max_cycles: int = 200_000,
) -> CycleTrace:
    """Drive the fridge until the heating branch matches the hot bath.

    Each cycle rebuilds the branch statistics at the current cold ratio,
    samples a branch label for the record, and applies the mean-field heat
    flows: cooling-branch extraction from the cold pool, and the heating
    mediums' round trip through the hot bath. Cold-side loss equals hot-side
    gain every cycle. Stops when the heating-branch mediums match the hot
    bath within STOP_POPULATION_TOL in excited population, else on budget.
    """
    rng = np.random.default_rng(seed)
    nc, nh = ensemble.n_cold, ensemble.n_hot
    a_c = _bath_energy(dim, ensemble.r_cold)
    a_h = _bath_energy(dim, ensemble.r_hot)
    trace = CycleTrace(
        scheme=scheme,
        n=n,
        dim=dim,
        seed=seed,
        n_cold=nc,
        n_hot=nh,
        r_start_cold=ensemble.r_cold,
        r_start_hot=ensemble.r_hot,
        max_cycles=max_cycles,
    )
    work_total = 0.0
    for cycle in range(1, max_cycles + 1):
        # branch statistics degenerate at absolute zero; freeze just above it
        r_c = max(_bath_ratio(dim, a_c), 1e-12)
        p_c, p_h, a, e_cool, e_heat, n_med = _point(scheme, n, dim, r_c)
        p_heating = (n - 1) * p_h
        mean_heat_pop = e_heat / n_med

        branch = "cooling" if rng.random() < p_c else "heating"
        s = -_xlogx(p_c) - (n - 1) * _xlogx(p_h)
        work_total += s  # erasure work per cycle at beta_R = 1

        # heating-branch round trip: mediums equilibrate with the hot bath
        a_h_eq = (nh * a_h + e_heat) / (nh + n_med)
        d_cold = p_c * (e_cool - n_med * a_c) + p_heating * n_med * (a_h_eq - a_c)
        d_hot = p_heating * nh * (a_h_eq - a_h)
        a_c += d_cold / nc
        a_h += d_hot / nh

        trace.cycles.append(cycle)
        trace.branches.append(branch)
        trace.r_cold.append(_bath_ratio(dim, a_c))
        trace.r_hot.append(_bath_ratio(dim, a_h))
        trace.heat_cold.append(-d_cold)
        trace.heat_hot.append(d_hot)
        trace.work.append(work_total)
        trace.entropy.append(s)

        if abs(mean_heat_pop - a_h) < STOP_POPULATION_TOL:
            trace.stop_reason = "converged"
            break
        if trace.r_cold[-1] < COLD_EXHAUSTED_TOL:
            trace.stop_reason = "cold-exhausted"
            break
    return trace


def _bath_energy(dim: int, r: float) -> float:
    x = (dim - 1) * r
    return x / (1.0 + x)


def _bath_ratio(dim: int, a: float) -> float:
    a = min(max(a, 0.0), 1.0 - 1e-15)
    x = a / (1.0 - a)
    return min(x / (dim - 1), 1.0)


def _xlogx(p: float) -> float:
    return p * math.log(p) if p > 0.0 else 0.0
