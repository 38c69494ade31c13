"""H-representations of the maximal Groebner cones and their witnesses.

Targets cover the Hibi cone of any distributive lattice, its generalized
(chain-order) variant, the semistandard and PBW-semistandard maximal cones
with redundant companions, and the two toric subcone descriptions assembled
from straightening data.  All arithmetic is exact; weight vectors are plain
dicts keyed by canonical column tuples (or lattice element ids for generic
lattices).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .plucker_lattices import (
    PluckerLattice,
    pbw_arrange,
    pbw_lattice,
    semistandard_lattice,
)
from .straightening import straighten_pair, straightening_terms

STRICT = "<"
NONSTRICT = "<="
EQUALITY = "="

MINIMAL_TARGETS = ("HIBI", "GENHIBI", "SSYT", "PBW")
REDUNDANT_TARGETS = ("HIBI_REDUNDANT", "GENHIBI_REDUNDANT", "SSYT_REDUNDANT", "PBW_REDUNDANT")
TORIC_TARGETS = ("TORIC_GT", "TORIC_FFLV")
ALL_TARGETS = MINIMAL_TARGETS + REDUNDANT_TARGETS + TORIC_TARGETS


@dataclass(frozen=True)
class LinearInequality:
    """Sparse linear form with a relation against zero ('<', '<=' or '=')."""

    form: tuple            # ((key, coeff), ...) sorted
    relation: str
    provenance: tuple      # e.g. ('diamond', a, b) or ('expansion', a, b, i)

    def value(self, weights):
        return sum(c * weights[k] for k, c in self.form)

    def holds(self, weights):
        v = self.value(weights)
        if self.relation == STRICT:
            return v < 0
        if self.relation == NONSTRICT:
            return v <= 0
        return v == 0

    def holds_nonstrict(self, weights):
        v = self.value(weights)
        return v == 0 if self.relation == EQUALITY else v <= 0


@dataclass(frozen=True)
class ConeHRep:
    """Deterministically ordered inequality list with provenance, plus build context."""

    target: str
    label: str
    inequalities: tuple
    lattice: object = field(compare=False, default=None)
    partition: object = field(compare=False, default=None)

    def __len__(self):
        return len(self.inequalities)

    def facet_ids(self):
        return list(range(len(self.inequalities)))

    def inequality(self, facet_id):
        if isinstance(facet_id, int):
            return self.inequalities[facet_id]
        for ineq in self.inequalities:
            if ineq.provenance == tuple(facet_id):
                return ineq
        raise KeyError(f"no inequality with provenance {facet_id!r}")

    def to_json_obj(self):
        rows = []
        for ineq in self.inequalities:
            rows.append({
                "terms": {_key_name(k): str(Fraction(c)) for k, c in ineq.form},
                "rel": ineq.relation,
            })
        return {
            "target": self.target,
            "label": self.label,
            "inequalities": rows,
            "provenance": [[_key_name(x) for x in ineq.provenance]
                           for ineq in self.inequalities],
        }


def _key_name(key):
    if isinstance(key, tuple):
        return ",".join(map(str, key))
    return str(key)


def _form(*pairs):
    acc = {}
    for key, coeff in pairs:
        acc[key] = acc.get(key, 0) + coeff
        if acc[key] == 0:
            del acc[key]
    return tuple(sorted(acc.items()))


def _pair_form(a, b, lo, hi, key=None):
    key = key or (lambda x: x)
    return _form((key(a), 1), (key(b), 1), (key(lo), -1), (key(hi), -1))


def contains(hrep, weights):
    """Exact membership of a weight vector in the (relatively open) cone."""
    return all(ineq.holds(weights) for ineq in hrep.inequalities)


def contains_closure(hrep, weights):
    return all(ineq.holds_nonstrict(weights) for ineq in hrep.inequalities)


# -- H-representation builders ----------------------------------------------

def cone_hrep(target, *, n=None, lattice=None, partition=None):
    """Build the named cone description.

    ``SSYT``/``PBW``/``*_REDUNDANT``/``TORIC_*`` need ``n``; ``HIBI`` and
    ``GENHIBI`` need ``lattice`` (plus ``partition`` unless the lattice
    carries one).
    """
    if target not in ALL_TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {ALL_TARGETS}")
    if target in ("HIBI", "HIBI_REDUNDANT", "GENHIBI", "GENHIBI_REDUNDANT"):
        if lattice is None:
            raise ValueError(f"target {target} needs a lattice")
        key = getattr(lattice, "weight_key", lambda x: x)
        part = None
        if target.startswith("GENHIBI"):
            part = partition if partition is not None else getattr(lattice, "partition", None)
            if part is None:
                raise ValueError("GENHIBI needs a partition over the join-irreducibles")
            lower = lambda a, b: _odot(lattice, part, a, b)
        else:
            lower = lattice.meet
        pairs = (lattice.diamond_pairs() if target in ("HIBI", "GENHIBI")
                 else _incomparable_pairs(lattice))
        ineqs = tuple(
            LinearInequality(
                _pair_form(a, b, lower(a, b), lattice.join(a, b), key),
                STRICT, ("diamond" if target in ("HIBI", "GENHIBI") else "incomparable", a, b))
            for a, b in pairs)
        return ConeHRep(target, f"{target}({_lattice_label(lattice)})", ineqs, lattice, part)
    if n is None:
        raise ValueError(f"target {target} needs n")
    if target in ("SSYT", "PBW"):
        return _minimal_plucker_hrep(target, n)
    if target in ("SSYT_REDUNDANT", "PBW_REDUNDANT"):
        return _expansion_hrep(target, n, equalities=False)
    return _expansion_hrep(target, n, equalities=True)


def _lattice_label(lattice):
    if isinstance(lattice, PluckerLattice):
        return f"{lattice.kind}({lattice.n})"
    return f"lattice[{len(lattice.elements)}]"


def _odot(lattice, part, a, b):
    from .chain_order import odot_elements
    return odot_elements(lattice, part, a, b)


def _incomparable_pairs(lattice):
    if hasattr(lattice, "incomparable_pairs"):
        return lattice.incomparable_pairs()
    els = lattice.elements
    return [(a, b) for i, a in enumerate(els) for b in els[i + 1:]
            if not (lattice.leq(a, b) or lattice.leq(b, a))]


@lru_cache(maxsize=None)
def _minimal_plucker_hrep(target, n):
    lat = semistandard_lattice(n) if target == "SSYT" else pbw_lattice(n)
    key = lat.weight_key
    ineqs = []
    for a, b in lat.diamond_pairs():
        cls = lat.classify_pair(a, b)
        lower = cls.meet if target == "SSYT" else cls.below
        ineqs.append(LinearInequality(
            _pair_form(a, b, lower, cls.join, key), STRICT, ("diamond", a, b)))
        if cls.verdict == "diamond_special":
            if target == "SSYT":
                lo, hi = cls.below, cls.above
            else:
                lo, hi = cls.companion, cls.above
            ineqs.append(LinearInequality(
                _pair_form(a, b, lo, hi, key), STRICT, ("special", a, b)))
    return ConeHRep(target, f"{target}({n})", tuple(ineqs), lat)


@lru_cache(maxsize=None)
def _expansion_hrep(target, n, equalities):
    kind = "M" if target in ("SSYT_REDUNDANT", "TORIC_GT") else "N"
    lat = semistandard_lattice(n) if kind == "M" else pbw_lattice(n)
    key = lat.weight_key
    ineqs = []
    for a, b in lat.incomparable_pairs():
        rel = straighten_pair(lat, a, b)
        rows = straightening_terms(lat, rel, a, b)
        first_rel = EQUALITY if equalities else STRICT
        for i, (lo, hi, _) in enumerate(rows):
            relation = first_rel if i == 0 else STRICT
            ineqs.append(LinearInequality(
                _pair_form(a, b, lo, hi, key), relation, ("expansion", a, b, i)))
    return ConeHRep(target, f"{target}({n})", tuple(ineqs), lat)


# -- witnesses ---------------------------------------------------------------

def interior_witness(lattice):
    """Squared-grade weights: interior for Hibi-type and semistandard cones.

    Not an interior point of the generalized (chain-order) cones in general;
    use ``generalized_interior_witness`` there.
    """
    key = getattr(lattice, "weight_key", lambda x: x)
    return {key(a): lattice.grade(a) ** 2 for a in lattice.elements}


def generalized_interior_witness(lattice, base=3):
    """Exponential weights base**grade: interior for every target built here.

    The join sits one level up and any replacement of the meet only moves
    down, so base >= 3 clears every inequality with room to spare.
    """
    key = getattr(lattice, "weight_key", lambda x: x)
    return {key(a): base ** lattice.grade(a) for a in lattice.elements}


def facet_witness(hrep, facet_id):
    """A weight vector tight or reversed exactly at the chosen facet.

    The witness fails the strict inequality of the facet while satisfying all
    other inequalities of the minimal description nonstrictly, certifying
    irredundancy.
    """
    ineq = hrep.inequality(facet_id)
    lat = hrep.lattice
    kind, a, b = ineq.provenance
    if hrep.target in ("HIBI", "SSYT") and kind == "diamond":
        return _square_witness(lat, a, b)
    if hrep.target in ("GENHIBI", "PBW") and kind == "diamond":
        if hrep.target == "GENHIBI":
            below = _odot(lat, hrep.partition, a, b)
        else:
            below = lat.classify_pair(a, b).below
        return _power_witness(lat, a, b, below)
    if hrep.target == "SSYT" and kind == "special":
        return _ladder_witness(lat, a, b)
    if hrep.target == "PBW" and kind == "special":
        mlat = semistandard_lattice(lat.n)
        hat = _ladder_witness(mlat, *_preimage_pair(mlat, lat, a, b))
        return {lat.weight_key(c): hat[_preimage(mlat, lat, c)] for c in lat.elements}
    raise KeyError(f"target {hrep.target} has no witness rule for facet kind {kind!r}")


def _preimage(mlat, nlat, c):
    from .plucker_lattices import pbw_to_ssyt
    return pbw_to_ssyt(nlat, c)


def _preimage_pair(mlat, nlat, a, b):
    return _preimage(mlat, nlat, a), _preimage(mlat, nlat, b)


def _square_witness(lattice, a, b):
    """Convex-function witness: one on the pair, squared distance elsewhere."""
    key = getattr(lattice, "weight_key", lambda x: x)
    m = lattice.grade(a)
    out = {}
    for c in lattice.elements:
        out[key(c)] = 1 if c in (a, b) else (lattice.grade(c) - m) ** 2
    return out


def _power_witness(lattice, a, b, below):
    """Power witness A**(grade - m) above the pair, 3**(m - grade) below."""
    key = getattr(lattice, "weight_key", lambda x: x)
    m = lattice.grade(a)
    amp = 3 ** (m - lattice.grade(below))
    out = {}
    for c in lattice.elements:
        g = lattice.grade(c)
        if c in (a, b):
            out[key(c)] = amp
        elif g >= m:
            out[key(c)] = amp ** (g - m)
        else:
            out[key(c)] = 3 ** (m - g)
    return out


def _ladder_witness(mlat, a, b):
    """Six-level assignment around a special pair of the semistandard lattice."""
    cls = mlat.classify_pair(a, b)
    assert cls.verdict == "diamond_special"
    a, b = cls.pair
    join, below, above = cls.join, cls.below, cls.above
    m = mlat.grade(a)
    out = {}
    for c in mlat.elements:
        g = mlat.grade(c)
        if g == m + 2:
            val = 0 if c == above else 2
        elif g == m + 1:
            if c == join:
                val = 1
            elif mlat.leq(c, above):
                val = 0
            else:
                val = 1
        elif g == m:
            if mlat.leq(c, join):
                val = 1
            elif mlat.leq(c, above):
                val = 0
            else:
                val = 1
        elif g == m - 1:
            val = 1
        elif g == m - 2:
            val = 1 if c == below else 2
        else:
            val = 2 ** abs(g - m)
        out[mlat.weight_key(c)] = val
    return out


# -- facet counts -------------------------------------------------------------

@dataclass(frozen=True)
class FacetCounts:
    n: int
    ssyt_total: int
    diamond: int
    special: int
    pbw_total: int


def facet_count(n):
    """Enumerated facet counts, cross-checked against the closed formulas."""
    if n < 3:
        return FacetCounts(n, 0, 0, 0, 0)
    mlat = semistandard_lattice(n)
    m_diamond = mlat.diamond_pairs()
    m_special = [p for p in m_diamond
                 if mlat.classify_pair(*p).verdict == "diamond_special"]
    nlat = pbw_lattice(n)
    n_diamond = nlat.diamond_pairs()
    n_special = [p for p in n_diamond
                 if nlat.classify_pair(*p).verdict == "diamond_special"]
    counts = FacetCounts(
        n,
        ssyt_total=len(m_diamond) + len(m_special),
        diamond=len(m_diamond),
        special=len(m_special),
        pbw_total=len(n_diamond) + len(n_special),
    )
    assert counts.diamond == _closed_form(n, n * n - n - 2)
    assert counts.ssyt_total == _closed_form(n, n * n + n - 4)
    assert counts.pbw_total == counts.ssyt_total
    return counts


def _closed_form(n, quad):
    value = Fraction(quad) * Fraction(2) ** (n - 5)
    assert value.denominator == 1
    return int(value)


# -- weight-space maps ---------------------------------------------------------

@dataclass(frozen=True)
class XiPoint:
    """Coordinates z_(s,t), 1 <= s <= t <= n, plus per-length shifts c_1..c_(n-1)."""

    n: int
    z: tuple    # ((s, t) -> value) as sorted items
    c: tuple    # (k -> value) as sorted items

    @classmethod
    def build(cls, n, z, c=None):
        zd = dict(z)
        for s in range(1, n + 1):
            for t in range(s, n + 1):
                zd.setdefault((s, t), 0)
        if set(zd) != {(s, t) for s in range(1, n + 1) for t in range(s, n + 1)}:
            raise ValueError("z must be keyed by pairs (s, t) with 1 <= s <= t <= n")
        cd = dict(c or {})
        for k in range(1, n):
            cd.setdefault(k, 0)
        return cls(n, tuple(sorted(zd.items())), tuple(sorted(cd.items())))

    def z_dict(self):
        return dict(self.z)

    def c_dict(self):
        return dict(self.c)

    def to_json_obj(self):
        return {
            "n": self.n,
            "z": {f"{s},{t}": str(Fraction(v)) for (s, t), v in self.z},
            "c": {str(k): str(Fraction(v)) for k, v in self.c},
        }


def sigma_map(n, xi):
    """Weights on columns: sum of z over (row, entry) cells plus the length shift."""
    z, c = xi.z_dict(), xi.c_dict()
    lat = semistandard_lattice(n)
    return {col: sum(z[(r + 1, v)] for r, v in enumerate(col)) + c[len(col)]
            for col in lat.elements}


def rho_map(n, xi):
    """Weights on PBW columns: minus the cell sum plus the length shift."""
    z, c = xi.z_dict(), xi.c_dict()
    lat = pbw_lattice(n)
    out = {}
    for alpha in lat.elements:
        out[lat.weight_key(alpha)] = (
            -sum(z[(j + 1, v)] for j, v in enumerate(alpha)) + c[len(alpha)])
    return out


def in_K(n, xi):
    """Zero diagonal and strictly submodular off-diagonal differences."""
    z = xi.z_dict()
    if any(z[(s, s)] != 0 for s in range(1, n + 1)):
        return False
    return all(z[(s, t)] + z[(s + 1, t + 1)] < z[(s, t + 1)] + z[(s + 1, t)]
               for s in range(1, n - 1) for t in range(s + 1, n))


def k_facet_form(n, s, t):
    """The submodularity facet binomial of the parameter cone, diagonal reduced out."""
    assert 1 <= s < t <= n - 1
    form = {}
    for cell, coeff in (((s, t), 1), ((s + 1, t + 1), 1), ((s, t + 1), -1), ((s + 1, t), -1)):
        if cell[0] != cell[1]:
            form[cell] = form.get(cell, 0) + coeff
    return tuple(sorted(form.items()))


@dataclass(frozen=True)
class ConvexClassification:
    kind: str               # 'contains_subcone' | 'meets_in_facet'
    k_facet: tuple = None   # (s, t) when meets_in_facet
    sign: int = 0


def classify_facet_vs_subcone(target, facet_id, n):
    """Pull a facet form back through sigma (or rho) and compare with the parameter cone.

    Vanishing modulo the zero-diagonal subspace means the facet hyperplane
    contains the whole toric subcone; otherwise the pullback must match
    exactly one submodularity facet binomial, which is returned.
    """
    if target not in ("SSYT", "PBW"):
        raise ValueError("classification applies to the SSYT and PBW targets")
    hrep = cone_hrep(target, n=n)
    ineq = hrep.inequality(facet_id)
    lat = hrep.lattice
    zcoeff = {}
    ccoeff = {}
    for key, coeff in ineq.form:
        alpha = key if target == "SSYT" else pbw_arrange(key)
        sign = 1 if target == "SSYT" else -1
        for j, v in enumerate(alpha):
            cell = (j + 1, v)
            zcoeff[cell] = zcoeff.get(cell, 0) + sign * coeff
        ccoeff[len(alpha)] = ccoeff.get(len(alpha), 0) + coeff
    assert all(v == 0 for v in ccoeff.values()), "length shifts must cancel on facet forms"
    reduced = tuple(sorted((cell, v) for cell, v in zcoeff.items()
                           if v and cell[0] != cell[1]))
    if not reduced:
        return ConvexClassification("contains_subcone")
    matches = []
    for s in range(1, n - 1):
        for t in range(s + 1, n):
            f = k_facet_form(n, s, t)
            if reduced == f:
                matches.append(((s, t), 1))
            elif reduced == tuple(sorted((c, -v) for c, v in f)):
                matches.append(((s, t), -1))
    assert len(matches) == 1, \
        f"facet pullback must match exactly one submodularity binomial, got {matches}"
    (s, t), sign = matches[0]
    return ConvexClassification("meets_in_facet", (s, t), sign)


# -- initial forms -------------------------------------------------------------

def initial_form(poly, weights):
    """Terms of least weight, grading each variable by its weight coordinate."""
    if not poly:
        return {}
    values = {}
    for mono, coeff in poly.items():
        try:
            values[mono] = sum(weights[c] for c in mono)
        except KeyError as exc:
            raise KeyError(f"weight vector missing key {exc}") from None
    least = min(values.values())
    return {m: c for m, c in poly.items() if values[m] == least}


def weights_from_json_obj(obj, keys):
    out = {}
    by_name = {key if isinstance(key, str) else ",".join(map(str, key)): key for key in keys}
    for name, key in by_name.items():
        if name not in obj:
            raise KeyError(f"weights file is missing {name!r}")
        out[key] = Fraction(obj[name])
    return out


def weights_to_json_obj(weights):
    return {_key_name(k): str(Fraction(v)) for k, v in sorted(
        weights.items(), key=lambda kv: _key_name(kv[0]))}
