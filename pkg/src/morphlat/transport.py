"""Exact discrete min-cost transport between integer-mass value sets.

The solver is successive shortest paths with node potentials (Dijkstra on the
bipartite residual network, vectorized over each side). Masses are kept as
integers throughout, so feasibility checks are exact; only arc costs are
floating point. Every solve is certified by a complementary-slackness check
before the objective is returned.
"""

from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment


class CertificationError(RuntimeError):
    """The computed flow failed its own optimality certificate."""


def min_cost_transport(
    supplies, demands, cost, tolerance: float = 1e-9
) -> tuple[np.ndarray, float]:
    """Solve min sum(flow * cost) over nonnegative integer flows with the
    given row sums (supplies) and column sums (demands).

    Returns (flow, objective). Raises CertificationError if the final flow
    and potentials violate complementary slackness at the tolerance.
    """
    a = np.asarray(supplies, dtype=np.int64)
    b = np.asarray(demands, dtype=np.int64)
    c = np.asarray(cost, dtype=float)
    if a.ndim != 1 or b.ndim != 1 or c.shape != (a.size, b.size):
        raise ValueError("cost must be (len(supplies), len(demands))")
    if (a <= 0).any() or (b <= 0).any():
        raise ValueError("masses must be positive integers")
    if a.sum() != b.sum():
        raise ValueError(f"unbalanced instance: {a.sum()} supply vs {b.sum()} demand")
    if not np.all(np.isfinite(c)) or (c < 0).any():
        raise ValueError("costs must be finite and non-negative")

    ks, kt = c.shape
    flow = np.zeros((ks, kt), dtype=np.int64)
    rem_a = a.copy()
    rem_b = b.copy()
    pot_s = np.zeros(ks)
    pot_t = np.zeros(kt)

    remaining = int(a.sum())
    while remaining > 0:
        dist_s, dist_t, par_s, par_t, target = _dijkstra(
            c, flow, rem_a, rem_b, pot_s, pot_t
        )
        reached = dist_t[target]
        pot_s += np.minimum(dist_s, reached)
        pot_t += np.minimum(dist_t, reached)

        # Trace target -> origin, alternating forward and backward arcs.
        raise_arcs, lower_arcs = [], []
        j = target
        while True:
            i = int(par_t[j])
            raise_arcs.append((i, j))
            j = int(par_s[i])
            if j < 0:
                break
            lower_arcs.append((i, j))
        origin = i

        delta = min(rem_a[origin], rem_b[target])
        for i, j in lower_arcs:
            delta = min(delta, flow[i, j])
        for i, j in raise_arcs:
            flow[i, j] += delta
        for i, j in lower_arcs:
            flow[i, j] -= delta
        rem_a[origin] -= delta
        rem_b[target] -= delta
        remaining -= delta

    _certify(a, b, c, flow, pot_s, pot_t, tolerance)
    return flow, float((flow * c).sum())


def _dijkstra(c, flow, rem_a, rem_b, pot_s, pot_t):
    """Shortest reduced-cost path from any source with remaining supply to
    the nearest sink with remaining demand."""
    ks, kt = c.shape
    dist_s = np.where(rem_a > 0, 0.0, np.inf)
    dist_t = np.full(kt, np.inf)
    done_s = np.zeros(ks, dtype=bool)
    done_t = np.zeros(kt, dtype=bool)
    par_s = np.full(ks, -1, dtype=np.int64)
    par_t = np.full(kt, -1, dtype=np.int64)

    while True:
        open_s = np.where(done_s, np.inf, dist_s)
        open_t = np.where(done_t, np.inf, dist_t)
        i = int(np.argmin(open_s))
        j = int(np.argmin(open_t))
        if min(open_s[i], open_t[j]) == np.inf:
            raise CertificationError("residual network exhausted before demand met")
        if open_t[j] <= open_s[i]:
            if rem_b[j] > 0:
                return dist_s, dist_t, par_s, par_t, j
            done_t[j] = True
            # Backward arcs j -> i exist where flow is positive.
            has_flow = flow[:, j] > 0
            if has_flow.any():
                reduced = np.maximum(-c[:, j] + pot_t[j] - pot_s, 0.0)
                cand = dist_t[j] + reduced
                better = has_flow & (cand < dist_s)
                dist_s = np.where(better, cand, dist_s)
                par_s = np.where(better, j, par_s)
        else:
            done_s[i] = True
            reduced = np.maximum(c[i, :] + pot_s[i] - pot_t, 0.0)
            cand = dist_s[i] + reduced
            better = cand < dist_t
            dist_t = np.where(better, cand, dist_t)
            par_t = np.where(better, i, par_t)


def _certify(a, b, c, flow, pot_s, pot_t, tol):
    if (flow < 0).any():
        raise CertificationError("negative flow")
    if not np.array_equal(flow.sum(axis=1), a) or not np.array_equal(
        flow.sum(axis=0), b
    ):
        raise CertificationError("flow does not meet supplies/demands")
    reduced = c + pot_s[:, np.newaxis] - pot_t[np.newaxis, :]
    if reduced.min() < -tol:
        raise CertificationError(
            f"dual infeasible: min reduced cost {reduced.min():.3e}"
        )
    occupied = reduced[flow > 0]
    if occupied.size and occupied.max() > tol:
        raise CertificationError(
            f"complementary slackness violated: {occupied.max():.3e}"
        )


def assignment_cost(cost) -> float:
    """Exact minimum over perfect matchings of a square cost matrix."""
    c = np.asarray(cost, dtype=float)
    rows, cols = linear_sum_assignment(c)
    return float(c[rows, cols].sum())
