"""Named verification suites bundling the library's invariants.

Each suite runs a block of exact checks with a fixed seed and returns a
``SuiteReport``; a failure record always carries a minimal reproducer.  The
bulk lattice-point checks are vectorized with numpy over integer arithmetic,
which stays exact for the small bounded coordinates involved.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import cones, straightening
from .chain_order import ChainOrderPartition, interpolating_hrep
from .order_core import CapacityError, Poset
from .plucker_lattices import pbw_lattice, pbw_to_ssyt, semistandard_lattice, ssyt_to_pbw

EHRHART_MAX_ELEMENTS = 8
EHRHART_MAX_T = 3
RANDOM_POSETS = 50
PARTITION_SAMPLES = 20
CONE_SAMPLES = 1000


@dataclass
class SuiteReport:
    suite: str
    n: int
    seed: int
    checks: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    elapsed_s: float = 0.0

    def record(self, ok, reproducer):
        self.checks += 1
        if not ok:
            self.failures.append(reproducer)

    @property
    def ok(self):
        return not self.failures

    def to_json_obj(self, with_timing=True):
        out = {
            "suite": self.suite,
            "n": self.n,
            "seed": self.seed,
            "checks": self.checks,
            "failures": [repr(f) for f in self.failures],
            "notes": {k: repr(v) for k, v in sorted(self.notes.items())},
        }
        if with_timing:
            out["elapsed_s"] = round(self.elapsed_s, 3)
        return out


def _timed(fn):
    def wrapper(n=None, seed=0):
        start = time.time()
        report = fn(n, seed)
        report.elapsed_s = time.time() - start
        return report
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# -- straightening suites ----------------------------------------------------

def _straightening_suite(name, kind, n, seed, trials=20):
    lat = semistandard_lattice(n) if kind == "M" else pbw_lattice(n)
    report = SuiteReport(name, n, seed)
    bound = Fraction(0)
    observed_m = {}
    for a, b in lat.incomparable_pairs():
        rel = straightening.straighten_pair(lat, a, b)
        rows = straightening.straightening_terms(lat, rel, a, b)
        observed_m[len(rows) - 1] = observed_m.get(len(rows) - 1, 0) + 1
        head = lat.odot(a, b) if kind == "N" else lat.meet(a, b)
        top, meet = lat.join(a, b), lat.meet(a, b)
        lo0, hi0, c0 = rows[0]
        report.record((lo0, hi0) == (head, top) and c0 == 1,
                      ("leading term", a, b, rows[0]))
        for lo, hi, _ in rows[1:]:
            if kind == "M":
                ok = lat.leq(lo, meet) and lo != meet and lat.leq(top, hi) and hi != top
            else:
                ok = lat.leq(lo, meet) and lat.leq(top, hi) and hi != top
            report.record(ok, ("tail dominance", a, b, (lo, hi)))
        verdict = straightening.ideal_membership(rel, n, trials=trials, seed=seed)
        bound += verdict.failure_bound
        report.record(verdict.member, ("membership", a, b))
    report.notes["aggregate_failure_bound"] = bound
    report.notes["aggregate_failure_bound_log2"] = _log2_str(bound)
    report.notes["observed_tail_counts"] = dict(sorted(observed_m.items()))
    return report


def _log2_str(bound):
    if bound == 0:
        return "-inf"
    return f"{(bound.numerator.bit_length() - bound.denominator.bit_length()):d}"


@_timed
def suite_strlaws(n, seed):
    """Straightening-law shape and membership over the semistandard order."""
    return _straightening_suite("strlaws", "M", n or 5, seed)


@_timed
def suite_pbwstrlaws(n, seed):
    """Straightening-law shape and membership over the PBW order."""
    return _straightening_suite("pbwstrlaws", "N", n or 5, seed)


# -- lattice isomorphism -------------------------------------------------------

@_timed
def suite_tau(n, seed):
    """Exhaustive bijectivity and order preservation of the relabelling map."""
    n = n or 7
    report = SuiteReport("tau", n, seed)
    mlat, nlat = semistandard_lattice(n), pbw_lattice(n)
    image = {a: ssyt_to_pbw(mlat, a) for a in mlat.elements}
    report.record(sorted(image.values()) == sorted(nlat.elements), ("bijectivity", n))
    for a in mlat.elements:
        report.record(pbw_to_ssyt(nlat, image[a]) == a, ("inverse", a))
    for a in mlat.elements:
        for b in mlat.elements:
            if mlat.leq(a, b) != nlat.leq(image[a], image[b]):
                report.record(False, ("order", a, b))
    report.checks += len(mlat.elements) ** 2
    return report


# -- transfer / Ehrhart machinery ----------------------------------------------

def random_poset(rng, max_size=EHRHART_MAX_ELEMENTS):
    size = rng.randint(1, max_size)
    names = [f"p{i}" for i in range(size)]
    covers = []
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < 0.35:
                covers.append((names[i], names[j]))
    return Poset.from_covers(names, covers)


def ehrhart_posets(n, seed):
    """Bounded-size posets: the irreducible grids up to the cutoff plus seeded random ones."""
    out = []
    for m in range(2, 6):
        grid = semistandard_lattice(m).ji_poset
        if len(grid) <= n:
            out.append(("grid", m, grid))
    rng = random.Random(seed)
    for i in range(RANDOM_POSETS):
        out.append(("random", i, random_poset(rng, n)))
    return out


def partitions_of(poset, seed):
    size = len(poset)
    if size <= 5:
        return [ChainOrderPartition.from_masks(poset, mask) for mask in range(1 << size)]
    rng = random.Random(seed)
    masks = {0, (1 << size) - 1}
    while len(masks) < PARTITION_SAMPLES:
        masks.add(rng.getrandbits(size))
    return [ChainOrderPartition.from_masks(poset, mask) for mask in sorted(masks)]


def _hrep_arrays(poset, part):
    hrep = interpolating_hrep(poset, part)
    A = np.array([row for row, _ in hrep.rows], dtype=np.int64)
    b = np.array([bound for _, bound in hrep.rows], dtype=np.int64)
    return A, b


def integer_points(poset, part, t):
    """Brute-force integer points of the t-dilation, as an array of rows."""
    size = len(poset)
    A, b = _hrep_arrays(poset, part)
    grid = np.indices((t + 1,) * size).reshape(size, -1).T.astype(np.int64)
    keep = (grid @ A.T <= t * b).all(axis=1)
    return grid[keep]


def _lt_matrix(poset):
    size = len(poset)
    lt = np.zeros((size, size), dtype=np.int64)
    for i in range(size):
        for j in range(size):
            if i != j and poset.up[i] >> j & 1:
                lt[i][j] = 1
    return lt


def zeta_matrix(part, X):
    """Vectorized transfer map on a points-by-elements integer array."""
    poset = part.poset
    size = len(poset)
    out = X.copy()
    for i in range(size):
        strict_up = [j for j in range(size) if j != i and poset.up[i] >> j & 1]
        if part.chain_mask >> i & 1 and strict_up:
            out[:, i] = X[:, i] - X[:, strict_up].max(axis=1)
    return out


def zeta_prime_matrix(part, X):
    poset = part.poset
    size = len(poset)
    best = np.zeros_like(X)
    for i in reversed(range(size)):
        if part.order_mask >> i & 1:
            best[:, i] = X[:, i]
        else:
            strict_up = [j for j in range(size) if j != i and poset.up[i] >> j & 1]
            tail = best[:, strict_up].max(axis=1) if strict_up else np.zeros(len(X), dtype=X.dtype)
            best[:, i] = X[:, i] + np.maximum(tail, 0)
    out = X.copy()
    for i in range(size):
        if not part.order_mask >> i & 1:
            out[:, i] = best[:, i]
    return out


def k_matrix(part, J):
    """Row-wise K-set indicators of a boolean ideal-membership array."""
    poset = part.poset
    size = len(poset)
    lt = _lt_matrix(poset)
    above_in_j = J @ lt.T  # entry (x, p): number of q > p with q in J_x
    maximal = (J > 0) & (above_in_j == 0)
    order_row = np.array([1 if part.order_mask >> i & 1 else 0 for i in range(size)], dtype=bool)
    return np.where(order_row, J > 0, maximal).astype(np.int64)


def _ehrhart_combo(report, poset, part, order_part, t, check_decomposition):
    points = integer_points(poset, part, t)
    reference = integer_points(poset, order_part, t)
    report.record(len(points) == len(reference),
                  ("point count", poset.elements, part.to_json_obj(), t,
                   len(points), len(reference)))
    if len(poset) == 0 or t == 0:
        return
    # transfer round trips
    Y = zeta_prime_matrix(part, points)
    back = zeta_matrix(part, Y)
    report.record(bool((back == points).all()), ("zeta o zeta_prime", part.to_json_obj(), t))
    Z = zeta_matrix(part, reference)
    forward = zeta_prime_matrix(part, Z)
    report.record(bool((forward == reference).all()),
                  ("zeta_prime o zeta", part.to_json_obj(), t))
    # zeta maps the order dilation into the chain-order dilation and back
    A, b = _hrep_arrays(poset, part)
    report.record(bool((Z @ A.T <= t * b).all()), ("zeta image", part.to_json_obj(), t))
    Ao, bo = _hrep_arrays(poset, order_part)
    report.record(bool((Y @ Ao.T <= t * bo).all()), ("zeta_prime image", part.to_json_obj(), t))
    if not check_decomposition:
        return
    lt = _lt_matrix(poset)
    total = np.zeros_like(points)
    for i in range(1, t + 1):
        J = (Y >= i).astype(np.int64)
        # (J @ lt.T)[x, q] counts elements of J_x strictly above q
        not_down_closed = ((J == 0) & ((J @ lt.T) > 0)).any()
        report.record(not bool(not_down_closed),
                      ("level sets are ideals", part.to_json_obj(), t, i))
        piece = k_matrix(part, J)
        report.record(bool((piece @ A.T <= b).all()), ("piece membership", part.to_json_obj(), t, i))
        total += piece
    report.record(bool((total == points).all()), ("decomposition sum", part.to_json_obj(), t))


def _ehrhart_like(name, n, seed, check_decomposition):
    n = n or EHRHART_MAX_ELEMENTS
    if n > EHRHART_MAX_ELEMENTS:
        raise CapacityError(
            f"suite {name} enumerates boxes of side t+1; poset size capped at {EHRHART_MAX_ELEMENTS}")
    report = SuiteReport(name, n, seed)
    for label, idx, poset in ehrhart_posets(n, seed):
        order_part = ChainOrderPartition.order_polytope(poset)
        for part in partitions_of(poset, seed + idx):
            for t in range(EHRHART_MAX_T + 1):
                _ehrhart_combo(report, poset, part, order_part, t, check_decomposition)
    return report


@_timed
def suite_ehrhart(n, seed):
    """Partition-independent point counts and mutually inverse transfer maps."""
    return _ehrhart_like("ehrhart", n, seed, check_decomposition=False)


@_timed
def suite_minkowski(n, seed):
    """Every dilation point decomposes into polytope lattice points, via level sets."""
    return _ehrhart_like("minkowski", n, seed, check_decomposition=True)


# -- cone suites ----------------------------------------------------------------

def sample_cone_points(hrep, center, count, seed, scale=16, spread=12):
    """Seeded integer points inside the cone: scaled center plus boxed noise.

    Rejection-samples against the exact H-representation; the rejection count
    is reported alongside the samples.
    """
    rng = random.Random(seed)
    keys = sorted(center, key=cones._key_name)
    points = []
    rejected = 0
    attempts = 0
    while len(points) < count:
        attempts += 1
        assert attempts < 100 * count, "rejection sampling is not converging"
        w = {k: scale * center[k] + rng.randint(-spread, spread) for k in keys}
        if cones.contains(hrep, w):
            points.append(w)
        else:
            rejected += 1
    return points, rejected


def _cone_suite(name, n, seed, target, redundant_target, relation_kind):
    n = n or 5
    report = SuiteReport(name, n, seed)
    if target in ("HIBI", "SSYT"):
        lat = semistandard_lattice(n)
    else:
        lat = pbw_lattice(n)
    kwargs = {"n": n} if target in ("SSYT", "PBW") else {"lattice": lat}
    minimal = cones.cone_hrep(target, **kwargs)
    redundant = cones.cone_hrep(redundant_target, **kwargs)
    if target in ("HIBI", "SSYT"):
        center = cones.interior_witness(lat)
    else:
        center = cones.generalized_interior_witness(lat)
    report.record(cones.contains(minimal, center), ("interior witness", target, n))
    points, rejected = sample_cone_points(minimal, center, CONE_SAMPLES, seed)
    report.notes["rejected_samples"] = rejected
    relations = None
    if relation_kind:
        relations = [(a, b, straightening.straighten_pair(lat, a, b))
                     for a, b in lat.incomparable_pairs()]
    binomials = [(a, b, straightening.hibi_generator(
        lat, a, b, None if target == "HIBI" else lat.partition))
        for a, b in lat.incomparable_pairs()] if target in ("HIBI", "GENHIBI") else None
    for idx, w in enumerate(points):
        if not cones.contains(redundant, w):
            bad = [iq.provenance for iq in redundant.inequalities if not iq.holds(w)]
            report.record(False, ("redundant description", idx, bad[:3]))
        else:
            report.record(True, None)
        if relations is not None:
            for a, b, rel in relations:
                inf = cones.initial_form(rel, w)
                lead = straightening.monomial(
                    (lat.weight_key(a), lat.weight_key(b)))
                report.record(set(inf) == {lead}, ("initial form", idx, a, b, sorted(inf)))
        if binomials is not None:
            for a, b, gen in binomials:
                key = lat.weight_key
                inf = cones.initial_form(
                    {straightening.monomial(tuple(map(key, m))): c for m, c in gen.items()}, w)
                lead = straightening.monomial((key(a), key(b)))
                report.record(set(inf) == {lead}, ("initial binomial", idx, a, b))
    for fid in minimal.facet_ids():
        witness = cones.facet_witness(minimal, fid)
        own = minimal.inequality(fid)
        ok = not own.holds(witness) and all(
            iq.holds_nonstrict(witness)
            for j, iq in enumerate(minimal.inequalities) if j != fid)
        report.record(ok, ("facet witness", target, n, own.provenance))
    return report


@_timed
def suite_hibi_cone(n, seed):
    """Hibi cone: sampled soundness against the redundant description plus witnesses."""
    return _cone_suite("hibi-cone", n, seed, "HIBI", "HIBI_REDUNDANT", None)


@_timed
def suite_genhibi_cone(n, seed):
    """Generalized Hibi cone over the PBW lattice with its diagonal partition."""
    return _cone_suite("genhibi-cone", n, seed, "GENHIBI", "GENHIBI_REDUNDANT", None)


@_timed
def suite_ssyt_cone(n, seed):
    """Semistandard maximal cone: soundness, initial forms and facet witnesses."""
    return _cone_suite("ssyt-cone", n, seed, "SSYT", "SSYT_REDUNDANT", "M")


@_timed
def suite_pbw_cone(n, seed):
    """PBW maximal cone: soundness, initial forms and facet witnesses."""
    return _cone_suite("pbw-cone", n, seed, "PBW", "PBW_REDUNDANT", "N")


@_timed
def suite_convex(n, seed):
    """Facet pullbacks: every facet either contains the toric subcone or meets a facet of it."""
    n = n or 6
    report = SuiteReport("convex", n, seed)
    for target in ("SSYT", "PBW"):
        hrep = cones.cone_hrep(target, n=n)
        for fid in hrep.facet_ids():
            iq = hrep.inequalities[fid]
            try:
                res = cones.classify_facet_vs_subcone(target, fid, n)
            except AssertionError as exc:
                report.record(False, ("pullback", target, iq.provenance, str(exc)))
                continue
            if iq.provenance[0] == "diamond":
                report.record(res.kind == "contains_subcone",
                              ("diamond facet", target, iq.provenance, res))
            else:
                report.record(res.kind == "meets_in_facet" and res.sign == 1,
                              ("special facet", target, iq.provenance, res))
    # instance checks of the parametrized toric points
    m = min(n, 5)
    rng = random.Random(seed)
    skipped = 0
    for trial in range(5):
        z = {(s, t): (t - s) ** 2 * 4 + (rng.randint(0, 1) if s < t else 0)
             for s in range(1, m + 1) for t in range(s, m + 1)}
        c = {k: rng.randint(-5, 5) for k in range(1, m)}
        xi = cones.XiPoint.build(m, z, c)
        if not cones.in_K(m, xi):
            skipped += 1
            continue
        report.record(cones.contains(cones.cone_hrep("TORIC_GT", n=m), cones.sigma_map(m, xi)),
                      ("sigma image", trial))
        report.record(cones.contains(cones.cone_hrep("TORIC_FFLV", n=m), cones.rho_map(m, xi)),
                      ("rho image", trial))
    if skipped:
        report.notes["skipped_toric_trials"] = f"{skipped} sampled points fell outside the parameter cone"
    return report


@_timed
def suite_counts(n, seed):
    """Enumerated facet counts against the closed formulas for 3..n."""
    n = n or 9
    report = SuiteReport("counts", n, seed)
    for m in range(3, n + 1):
        try:
            fc = cones.facet_count(m)
        except AssertionError as exc:
            report.record(False, ("facet count", m, str(exc)))
            continue
        report.record(fc.pbw_total == fc.ssyt_total == fc.diamond + fc.special,
                      ("facet count split", m, fc))
    return report


@_timed
def suite_asl(n, seed):
    """Standard monomials span and are independent in every small multidegree."""
    n = n or 4
    report = SuiteReport("asl", n, seed)
    lams = _multidegrees(n, 3)
    for kind in ("M", "N"):
        lat = semistandard_lattice(n) if kind == "M" else pbw_lattice(n)
        for lam in lams:
            report.record(straightening.standard_basis_check(lat, lam),
                          ("standard basis", kind, lam))
    return report


def _multidegrees(n, max_total):
    out = []

    def rec(prefix, remaining):
        if len(prefix) == n - 1:
            if sum(prefix) >= 1:
                out.append(tuple(prefix))
            return
        for v in range(remaining + 1):
            rec(prefix + [v], remaining - v)

    rec([], max_total)
    return sorted(out)


SUITES = {
    "strlaws": suite_strlaws,
    "pbwstrlaws": suite_pbwstrlaws,
    "tau": suite_tau,
    "ehrhart": suite_ehrhart,
    "minkowski": suite_minkowski,
    "hibi-cone": suite_hibi_cone,
    "genhibi-cone": suite_genhibi_cone,
    "ssyt-cone": suite_ssyt_cone,
    "pbw-cone": suite_pbw_cone,
    "convex": suite_convex,
    "counts": suite_counts,
    "asl": suite_asl,
}


def run_suite(name, n=None, seed=0):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}")
    return SUITES[name](n=n, seed=seed)
