"""Five lines of P^4 on a quadric versus the Richmond-Segre-Brown dependency.

Normalised instances put the first point of line ``L_i`` at the coordinate
point ``P_i = e_{i-1}``; only the second points ``Q_1..Q_5`` vary.

* ``F`` is the determinant of the 10x10 system in the cross-term
  coefficients ``c_ab`` (a < b): five rows put ``Q_i`` on the quadric, five
  rows ask the tangent hyperplane at ``P_i`` to contain ``Q_i``.
* ``R_i`` is where ``L_i`` meets the hyperplane through ``L_{i-1}`` and
  ``L_{i+1}`` (indices mod 5), computed from signed 4x4 minors and
  ``(h.Q) P - (h.P) Q``; ``G`` is the determinant of these raw rows.

With exactly these representatives ``F == G`` identically.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (ContainmentError, DegeneracyError, DimensionError, GenerationError,
                     HypothesisError, RankError)
from .exact import Mat, det
from .multipoly import DEFAULT_TERM_CEILING, MPoly, PolyMat, poly_det
from .projective import (PLine, PPoint, apply, frame_map, hyperplane_coeffs, line_hyperplane_meet,
                         meet_coords, span_hyperplane, span_rank)
from .quadric3 import QuadricConstraint, exists_quadric
from .results import IdentityProof, Verdict, fmt
from .rng import SeededRng, derive_seed

NVARS = 25
DEGREE = 15
PIT_LOW = -(1 << 19)
PIT_HIGH = (1 << 19) - 1  # 2^20 values
PAIRS = list(combinations(range(5), 2))
MAX_RETRIES = 200


def _unit(i: int) -> tuple[int, ...]:
    return tuple(int(k == i) for k in range(5))


@dataclass(frozen=True)
class RsbInstance:
    Q: tuple[PPoint, ...]

    def __init__(self, Q: Sequence):
        pts = tuple(q if isinstance(q, PPoint) else PPoint(q) for q in Q)
        if len(pts) != 5 or any(q.dim != 4 for q in pts):
            raise DimensionError("five points Q_i of P^4 required")
        object.__setattr__(self, "Q", pts)

    def lines(self) -> tuple[PLine, ...]:
        return tuple(PLine(_unit(i), q) for i, q in enumerate(self.Q))

    def disjoint(self) -> bool:
        ls = self.lines()
        return all(not ls[i].meets(ls[j]) for i, j in PAIRS)

    def scaled(self, i: int, lam) -> list[tuple[Fraction, ...]]:
        """Raw Q vectors with Q_i multiplied by ``lam`` (for homogeneity checks)."""
        return [tuple(Fraction(lam) * x for x in q.vec) if k == i else q.vec for k, q in enumerate(self.Q)]


def _qvecs(inst) -> list[Sequence]:
    if isinstance(inst, RsbInstance):
        return [q.vec for q in inst.Q]
    vecs = [tuple(q) for q in inst]
    if len(vecs) != 5 or any(len(v) != 5 for v in vecs):
        raise DimensionError("five points Q_i of P^4 required")
    return vecs


def f_rows(Q: Sequence[Sequence]) -> list[list]:
    """Ring-generic 10x10 rows over the monomials z_a z_b, a < b, lexicographic."""
    rows = [[q[a] * q[b] for a, b in PAIRS] for q in Q]
    for i, q in enumerate(Q):
        # gradient of sum c_ab z_a z_b at e_i is (c_ib)_b
        rows.append([q[b] if a == i else q[a] if b == i else 0 for a, b in PAIRS])
    return rows


def rsb_F_matrix(inst) -> Mat:
    return Mat.from_rows(f_rows(_qvecs(inst)))


def rsb_F(inst) -> Fraction:
    return det(rsb_F_matrix(inst))


def r_coords(Q: Sequence[Sequence], one=1, zero=0) -> list[list]:
    """Raw R_1..R_5 (cubic in the Q coordinates); ring-generic."""
    P = [[one if k == i else zero for k in range(5)] for i in range(5)]
    out = []
    for i in range(5):
        lo, hi = (i - 1) % 5, (i + 1) % 5
        h = hyperplane_coeffs([P[lo], Q[lo], P[hi], Q[hi]])
        out.append(meet_coords(P[i], Q[i], h))
    return out


def rsb_points(inst) -> tuple[tuple[PPoint, ...], list[tuple[Fraction, ...]]]:
    """Canonical R_i and the raw coordinate vectors used by G."""
    Q = _qvecs(inst)
    P = [tuple(Fraction(x) for x in _unit(i)) for i in range(5)]
    raw = r_coords(Q, Fraction(1), Fraction(0))
    pts = []
    for i, r in enumerate(raw):
        lo, hi = (i - 1) % 5, (i + 1) % 5
        if span_rank([P[lo], Q[lo], P[hi], Q[hi]]) < 4:
            raise RankError(f"L{lo + 1} and L{hi + 1} do not span a hyperplane (R{i + 1} undefined)")
        if not any(r):
            raise ContainmentError(f"L{i + 1} lies in the span of L{lo + 1} and L{hi + 1}")
        pts.append(PPoint(r))
    return tuple(pts), [tuple(Fraction(x) for x in r) for r in raw]


def rsb_G(inst) -> Fraction:
    _, raw = rsb_points(inst)
    return det(Mat.from_rows(raw))


def symbolic_Q() -> list[list[MPoly]]:
    """Q_1..Q_5 with variables ordered point-major: q_{1,0..4}, ..., q_{5,0..4}."""
    xs = MPoly.variables(NVARS)
    return [xs[5 * i:5 * i + 5] for i in range(5)]


def symbolic_F(term_ceiling: int = DEFAULT_TERM_CEILING) -> MPoly:
    return poly_det(PolyMat(f_rows(symbolic_Q()), NVARS), term_ceiling)


def symbolic_G(term_ceiling: int = DEFAULT_TERM_CEILING) -> MPoly:
    one, zero = MPoly.const(NVARS, 1), MPoly.zero(NVARS)
    return poly_det(PolyMat(r_coords(symbolic_Q(), one, zero), NVARS), term_ceiling)


def pit_point(seed: int, trial: int) -> list[list[int]]:
    rng = SeededRng(derive_seed(seed, trial))
    return [rng.vector(5, PIT_LOW, PIT_HIGH) for _ in range(5)]


def rsb_identity(mode: str = "pit", trials: int = 200, seed: int = 1,
                 term_ceiling: int = DEFAULT_TERM_CEILING) -> IdentityProof:
    t0 = time.perf_counter()
    blocks = [range(5 * i, 5 * i + 5) for i in range(5)]
    if mode == "symbolic":
        F = symbolic_F(term_ceiling)
        G = symbolic_G(term_ceiling)
        diff = F - G
        stats = {
            "nvars": NVARS,
            "degree": F.total_degree(),
            "degree_G": G.total_degree(),
            "block_degrees": [F.degree_in(b) for b in blocks],
            "terms_F": len(F),
            "terms_G": len(G),
            "seconds": round(time.perf_counter() - t0, 3),
        }
        return IdentityProof(F, G, diff, diff.is_zero(), "symbolic", stats)
    if mode != "pit":
        raise ValueError(f"unknown mode {mode!r}")
    if trials < 1:
        raise ValueError("pit mode needs at least one trial")
    mismatches = []
    zero_trials = 0
    for t in range(trials):
        Q = pit_point(seed, t)
        f = det(Mat.from_rows(f_rows(Q)))
        g = det(Mat.from_rows(r_coords(Q)))
        if f != g:
            mismatches.append(t)
        if f == 0:
            zero_trials += 1
    per_trial = Fraction(DEGREE, PIT_HIGH - PIT_LOW + 1)
    stats = {
        "nvars": NVARS,
        "degree_bound": DEGREE,
        "trials": trials,
        "seed": seed,
        "range": [PIT_LOW, PIT_HIGH],
        "mismatched_trials": mismatches,
        "zero_trials": zero_trials,
        "failure_bound": f"({per_trial})^{trials}",
        "failure_bound_log10": round(trials * math.log10(per_trial), 3),
        "seconds": round(time.perf_counter() - t0, 3),
    }
    return IdentityProof(None, None, None, not mismatches, "pit", stats, per_trial ** trials)


# -- sampling -----------------------------------------------------------------

def quadric_value(x: Sequence) -> Fraction:
    """x0 x1 + x2 x3 + x4^2."""
    return Fraction(x[0] * x[1] + x[2] * x[3] + x[4] * x[4])


def polar(x: Sequence, y: Sequence) -> Fraction:
    """Symmetric bilinear form with polar(x, x) = 2 quadric_value(x)."""
    return Fraction(x[0] * y[1] + x[1] * y[0] + x[2] * y[3] + x[3] * y[2] + 2 * x[4] * y[4])


def reflect(w: Sequence, x: Sequence) -> tuple[Fraction, ...]:
    """Orthogonal reflection in the hyperplane polar-orthogonal to an anisotropic w."""
    qw = quadric_value(w)
    if qw == 0:
        raise DegeneracyError("cannot reflect in an isotropic vector")
    c = polar(x, w) / qw
    return tuple(Fraction(xi) - c * wi for xi, wi in zip(x, w))


BASE_LINE = ((1, 0, 0, 0, 0), (0, 0, 1, 0, 0))  # span(e0, e2) lies on the quadric


def _random_isotropic_line(rng: SeededRng, reflections: int = 4, box: int = 3) -> PLine:
    a, b = BASE_LINE
    for _ in range(reflections):
        while True:
            w = rng.vector(5, -box, box)
            if quadric_value(w) != 0:
                break
        a, b = reflect(w, a), reflect(w, b)
    return PLine(a, b)


def rsb_sample_on_quadric(seed: int) -> tuple[PLine, ...]:
    """Five lines on x0 x1 + x2 x3 + x4^2 = 0, generic enough for :func:`rsb_check`."""
    for attempt in range(MAX_RETRIES):
        rng = SeededRng(derive_seed(seed, attempt))
        lines = tuple(_random_isotropic_line(rng) for _ in range(5))
        try:
            normalize_lines(lines)
            _direct_points(lines)
        except (DegeneracyError, DimensionError):
            continue
        return lines
    raise GenerationError(f"no generic five-line configuration for seed {seed}")


def random_lines(seed: int, box: int = 9) -> tuple[PLine, ...]:
    """Five lines with random integer endpoints; retried until :func:`rsb_check` hypotheses hold."""
    for attempt in range(MAX_RETRIES):
        rng = SeededRng(derive_seed(seed, attempt))
        try:
            lines = tuple(PLine(rng.vector(5, -box, box), rng.vector(5, -box, box)) for _ in range(5))
            normalize_lines(lines)
            _direct_points(lines)
        except (DegeneracyError, DimensionError):
            continue
        return lines
    raise GenerationError(f"no generic random configuration for seed {seed}")


# -- checking general input ---------------------------------------------------

def normalize_lines(lines: Sequence[PLine]) -> tuple[Mat, RsbInstance]:
    """Send the first point of each line to a coordinate point.

    The frame's unit point is P_1 + ... + P_5 on the canonical
    representatives; the remaining diagonal freedom rescales F and G by
    nonzero factors and never changes whether they vanish.
    """
    lines = tuple(lines)
    if len(lines) != 5 or any(l.dim != 4 for l in lines):
        raise DimensionError("five lines of P^4 required")
    for i, j in PAIRS:
        if lines[i].meets(lines[j]):
            raise HypothesisError(f"lines L{i + 1} and L{j + 1} meet")
    P = [l.a for l in lines]
    unit = [sum(x) for x in zip(*(p.vec for p in P))]
    try:
        m = frame_map(P + [unit])
    except (RankError, DegeneracyError) as exc:
        raise HypothesisError(f"base points P_i are not in general position: {exc}") from None
    return m, RsbInstance([apply(m, l.b) for l in lines])


def _direct_points(lines: Sequence[PLine]) -> tuple[PPoint, ...]:
    out = []
    for i in range(5):
        lo, hi = lines[(i - 1) % 5], lines[(i + 1) % 5]
        try:
            h = span_hyperplane([lo.a, lo.b, hi.a, hi.b])
            out.append(line_hyperplane_meet(lines[i], h))
        except (RankError, ContainmentError) as exc:
            raise HypothesisError(f"R{i + 1} undefined: {exc}") from None
    return tuple(out)


def rsb_check(lines: Sequence) -> Verdict:
    """Quadric-existence and RSB-type verdicts for five lines, with exact witnesses.

    Besides F and G on the normalised instance, the R_i are recomputed on the
    original lines and the quadric system is solved directly in P^4.
    """
    t0 = time.perf_counter()
    lines = tuple(l if isinstance(l, PLine) else PLine(*l) for l in lines)
    _, inst = normalize_lines(lines)
    try:
        G = rsb_G(inst)
    except (RankError, ContainmentError) as exc:
        raise HypothesisError(str(exc)) from None
    F = rsb_F(inst)
    direct = _direct_points(lines)
    r_rank = span_rank(list(direct))
    exists, _ = exists_quadric([QuadricConstraint.line(l) for l in lines], dim=4)
    quadric = F == 0
    rsb_type = G == 0
    agree = quadric == rsb_type == exists == (r_rank < 5)
    return Verdict(
        command="rsb check",
        member=quadric and rsb_type,
        witnesses={
            "F": fmt(F),
            "G": fmt(G),
            "R": [[str(x) for x in r.coords] for r in direct],
            "R_rank": r_rank,
            "normalized_Q": [[str(x) for x in q.coords] for q in inst.Q],
        },
        timing_ms=(time.perf_counter() - t0) * 1e3,
        extra={
            "quadric_exists": quadric,
            "rsb_type": rsb_type,
            "quadric_exists_direct": exists,
            "witnesses_agree": agree,
        },
    )
