"""Chain-order polytopes of a partitioned poset.

For a partition P = U_o | U_c the polytope Pi(U_o, U_c) interpolates between
the order polytope (U_c empty) and the chain polytope (U_o empty).  This
module builds its inequality description, the piecewise-linear transfer maps
between the order polytope and Pi, the induced K-sets and ideal product, and
the lattice points of dilations together with their Minkowski decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .order_core import (
    CapacityError,
    IDEAL_CAPACITY,
    OrderIdeal,
    PosetError,
    _bits,
    enumerate_order_ideals,
)


@dataclass(frozen=True)
class ChainOrderPartition:
    """Partition of a poset into "order" and "chain" elements."""

    poset: object
    order_mask: int
    chain_mask: int

    @classmethod
    def from_sets(cls, poset, order_ids, chain_ids):
        om = poset.mask_of(order_ids)
        cm = poset.mask_of(chain_ids)
        full = (1 << len(poset)) - 1
        if om & cm or om | cm != full:
            raise PosetError("order/chain parts must partition the poset")
        return cls(poset, om, cm)

    @classmethod
    def order_polytope(cls, poset):
        return cls(poset, (1 << len(poset)) - 1, 0)

    @classmethod
    def chain_polytope(cls, poset):
        return cls(poset, 0, (1 << len(poset)) - 1)

    @classmethod
    def from_masks(cls, poset, order_mask):
        full = (1 << len(poset)) - 1
        return cls(poset, order_mask, full & ~order_mask)

    def order_ids(self):
        return self.poset.ids_of(self.order_mask)

    def chain_ids(self):
        return self.poset.ids_of(self.chain_mask)

    def to_json_obj(self):
        return {"order": list(self.order_ids()), "chain": list(self.chain_ids())}


@dataclass(frozen=True)
class PolytopeHRep:
    """Inequalities sum(coeffs * x) <= bound, with bound scaling linearly in t."""

    poset: object
    rows: tuple          # ((coeff vector, bound), ...)
    labels: tuple        # parallel provenance labels

    def contains(self, coords, t=1):
        vec = _as_vector(self.poset, coords)
        return all(sum(c * x for c, x in zip(row, vec)) <= bound * t
                   for row, bound in self.rows)

    def to_json_obj(self):
        out = []
        for (row, bound), label in zip(self.rows, self.labels):
            terms = {str(e): c for e, c in zip(self.poset.elements, row) if c}
            out.append({"terms": terms, "bound": bound, "kind": label[0]})
        return out


def _as_vector(poset, coords):
    if isinstance(coords, dict):
        if set(coords) != set(poset.elements):
            raise PosetError("point keys must be exactly the poset elements")
        return tuple(coords[e] for e in poset.elements)
    vec = tuple(coords)
    if len(vec) != len(poset):
        raise PosetError("point length mismatch")
    return vec


def _as_point(poset, vec):
    return {e: v for e, v in zip(poset.elements, vec)}


def _admissible_chains(part):
    """All chains p_1 < ... < p_k with every non-last element in U_c, as masks."""
    poset = part.poset
    n = len(poset)
    chains = []

    def extend(mask, last):
        chains.append(mask)
        if part.chain_mask >> last & 1:
            for j in _bits(poset.up[last] & ~(1 << last)):
                extend(mask | (1 << j), j)

    for i in range(n):
        extend(1 << i, i)
    return chains


def interpolating_hrep(poset, part):
    """Minimal-by-construction inequality system of Pi(U_o, U_c).

    Emits x_p >= 0 for every p, sum over C of x <= 1 for maximal admissible
    chains C with no order element below, and sum over C of x <= x_q for
    maximal admissible chains dominated by a maximal order element q.
    """
    if part.poset is not poset:
        raise PosetError("partition does not belong to this poset")
    n = len(poset)
    rows = []
    labels = []
    for i in range(n):
        row = [0] * n
        row[i] = -1
        rows.append((tuple(row), 0))
        labels.append(("nonneg", poset.elements[i]))

    chains = _admissible_chains(part)
    chain_set = set(chains)

    def insertable(mask, low_bound):
        """Chain elements insertable into the chain (strictly above ``low_bound`` if given)."""
        members = list(_bits(mask))
        topmask = poset.maximal_of(mask)
        for cand in _bits(part.chain_mask & ~mask):
            if low_bound is not None and not poset.lt(low_bound, poset.elements[cand]):
                continue
            if topmask & poset.up[cand] & ~(1 << cand):
                rel_ok = all(
                    poset.up[cand] >> m & 1 or poset.up[m] >> cand & 1 for m in members
                )
                if rel_ok:
                    return True
        return False

    def extendable_above(mask):
        top = next(iter(_bits(poset.maximal_of(mask))))
        return bool(part.chain_mask >> top & 1 and poset.up[top] & ~(1 << top))

    for mask in sorted(chains):
        bottom = next(iter(_bits(mask & ~sum_strict_up(poset, mask))))
        below_orders = [q for q in _bits(part.order_mask)
                        if poset.lt(poset.elements[q], poset.elements[bottom])]
        if extendable_above(mask):
            continue
        # headless chain: requires no order element below and no insertion anywhere below/inside
        if not below_orders and not insertable(mask, None):
            row = [0] * n
            for i in _bits(mask):
                row[i] = 1
            rows.append((tuple(row), 1))
            labels.append(("chain", poset.ids_of(mask)))
        # headed chains: head must be maximal among order elements below the body
        for q in below_orders:
            if any(poset.lt(poset.elements[q], poset.elements[q2]) for q2 in below_orders):
                continue
            if insertable(mask, poset.elements[q]):
                continue
            row = [0] * n
            for i in _bits(mask):
                row[i] = 1
            row[q] -= 1
            rows.append((tuple(row), 0))
            labels.append(("headed", poset.elements[q], poset.ids_of(mask)))
    assert len(set(rows)) == len(rows), "duplicate inequalities"
    return PolytopeHRep(poset, tuple(rows), tuple(labels))


def sum_strict_up(poset, mask):
    out = 0
    for i in _bits(mask):
        out |= poset.up[i] & ~(1 << i)
    return out


def zeta(part, point):
    """Transfer map from the order polytope side: min-of-differences on chain elements."""
    poset = part.poset
    vec = _as_vector(poset, point)
    out = list(vec)
    for i in range(len(poset)):
        strict_up = poset.up[i] & ~(1 << i)
        if part.chain_mask >> i & 1 and strict_up:
            out[i] = min(vec[i] - vec[j] for j in _bits(strict_up))
    return _as_point(poset, out)


def zeta_prime(part, point):
    """Inverse transfer: best admissible chain sum starting at each chain element."""
    poset = part.poset
    vec = _as_vector(poset, point)
    n = len(poset)
    best = [None] * n
    for i in reversed(range(n)):  # canonical order is a linear extension
        if part.order_mask >> i & 1:
            best[i] = vec[i]
        else:
            tail = 0
            for j in _bits(poset.up[i] & ~(1 << i)):
                tail = max(tail, best[j])
            best[i] = vec[i] + tail
    out = [vec[i] if part.order_mask >> i & 1 else best[i] for i in range(n)]
    return _as_point(poset, out)


def k_set(part, ideal):
    """Support of zeta applied to the indicator vector of an order ideal."""
    poset = part.poset
    if ideal.poset is not poset:
        raise PosetError("ideal does not live on the partition's poset")
    if not poset.is_down_closed(ideal.bits):
        raise PosetError("subset is not an order ideal")
    mask = (ideal.bits & part.order_mask) | (poset.maximal_of(ideal.bits) & part.chain_mask)
    return poset.ids_of(mask)


def _k_mask(part, bits):
    poset = part.poset
    return (bits & part.order_mask) | (poset.maximal_of(bits) & part.chain_mask)


def odot_ideals(part, ideal1, ideal2):
    """Ideal product: the ideal J' with 1_K(J1) + 1_K(J2) = 1_K(J1 | J2) + 1_K(J')."""
    poset = part.poset
    for ideal in (ideal1, ideal2):
        if not poset.is_down_closed(ideal.bits):
            raise PosetError("input is not an order ideal")
    k1 = _k_mask(part, ideal1.bits)
    k2 = _k_mask(part, ideal2.bits)
    ku = _k_mask(part, ideal1.bits | ideal2.bits)
    assert ku & ~(k1 | k2) == 0 and (k1 & k2) & ~ku == 0, \
        "K-set sandwich violated; indicator difference is not 0/1"
    d_mask = (k1 & k2) | ((k1 | k2) & ~ku)
    result = OrderIdeal(poset, poset.down_closure(d_mask))
    assert _k_mask(part, result.bits) == d_mask, "K of the minimal ideal must recover D"
    return result


def odot_elements(lattice, part, a, b):
    """The ideal product transported to lattice elements through the Birkhoff map."""
    j = odot_ideals(part, lattice.iota(a), lattice.iota(b))
    return lattice.from_ideal(j)


def _decreasing_chains(ideal_bits, t):
    if t == 0:
        yield ()
        return
    subs = {m: [m2 for m2 in ideal_bits if m2 & ~m == 0] for m in ideal_bits}

    def rec(prefix, last, depth):
        if depth == t:
            yield tuple(prefix)
            return
        for m in subs[last] if last is not None else ideal_bits:
            prefix.append(m)
            yield from rec(prefix, m, depth + 1)
            prefix.pop()

    yield from rec([], None, 0)


def dilation_points(part, t):
    """Integer points of the t-dilation, one per weakly decreasing ideal chain."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    poset = part.poset
    if len(poset) > IDEAL_CAPACITY:
        raise CapacityError(f"poset has {len(poset)} > {IDEAL_CAPACITY} elements")
    hrep = interpolating_hrep(poset, part)
    bits = [ideal.bits for ideal in enumerate_order_ideals(poset)]
    n = len(poset)
    kvec = {m: tuple(1 if _k_mask(part, m) >> i & 1 else 0 for i in range(n)) for m in bits}
    seen = set()
    count = 0
    for chain in _decreasing_chains(bits, t):
        count += 1
        point = tuple(sum(col) for col in zip(*(kvec[m] for m in chain))) if chain else (0,) * n
        assert hrep.contains(point, t), "chain point escapes the dilated polytope"
        seen.add(point)
    assert len(seen) == count, "distinct ideal chains must give distinct points"
    return [_as_point(poset, p) for p in sorted(seen)]


def minkowski_decompose(part, point, t):
    """Split an integer point of the t-dilation into t integer points of the polytope."""
    if t < 1:
        raise ValueError("t must be at least 1")
    poset = part.poset
    vec = _as_vector(poset, point)
    if any(Fraction(v).denominator != 1 for v in vec):
        raise ValueError("point is not integral")
    vec = tuple(int(v) for v in vec)
    hrep = interpolating_hrep(poset, part)
    if not hrep.contains(vec, t):
        raise ValueError("point does not lie in the t-dilation")
    level = _as_vector(poset, zeta_prime(part, _as_point(poset, vec)))
    n = len(poset)
    parts = []
    total = [0] * n
    for i in range(1, t + 1):
        mask = 0
        for j in range(n):
            if level[j] >= i:
                mask |= 1 << j
        assert poset.is_down_closed(mask), "level set of the transfer image must be an ideal"
        kmask = _k_mask(part, mask)
        piece = tuple(1 if kmask >> j & 1 else 0 for j in range(n))
        assert hrep.contains(piece, 1)
        parts.append(_as_point(poset, piece))
        total = [x + y for x, y in zip(total, piece)]
    assert tuple(total) == vec, "decomposition must sum to the input point"
    return parts


def point_to_json_obj(point):
    return {str(k): str(Fraction(v)) for k, v in sorted(point.items(), key=lambda kv: str(kv[0]))}


def point_from_json_obj(obj, poset):
    coords = {}
    for el in poset.elements:
        key = str(el)
        if key not in obj:
            raise PosetError(f"point is missing coordinate {key!r}")
        coords[el] = Fraction(obj[key])
    return coords
