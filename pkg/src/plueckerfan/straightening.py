"""Exact straightening machinery for Pluecker relations.

Polynomials are sparse maps from canonical monomials to nonzero rationals.
A monomial is a sorted tuple of canonical columns (strictly increasing index
tuples); sign normalization absorbs column reorderings into coefficients.
The module provides the classical exchange and shuffle relation generators,
worklist straightening against either lattice order, Hibi and generalized
Hibi binomials with their monomial-map exponents, and two independent
ideal-membership oracles built on minor evaluation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .plucker_lattices import ComparablePairError, pbw_arrange

ORACLE_PRIME = (1 << 62) - 57  # 62-bit prime
SYMBOLIC_DEGREE_LIMIT = 3
SYMBOLIC_N_LIMIT = 6
RANK_N_LIMIT = 5


class ShapeError(ValueError):
    pass


# -- canonical columns and monomials --------------------------------------

def canonicalize(indices, n=None):
    """Sort an index tuple, tracking the permutation sign; repeats give zero (None)."""
    indices = tuple(indices)
    if n is not None and any(not 1 <= i <= n for i in indices):
        raise ValueError(f"index out of range in {indices}")
    if len(set(indices)) != len(indices):
        return None
    sign = 1
    arr = list(indices)
    for i in range(len(arr)):  # insertion sort; tuples are short
        j = i
        while j > 0 and arr[j - 1] > arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(arr)


def monomial(columns):
    """Canonical monomial: columns sorted by (length descending, entries)."""
    return tuple(sorted(columns, key=lambda c: (-len(c), c)))


def deg_vector(mono, n):
    """Count of factors of each length 1..n-1."""
    out = [0] * (n - 1)
    for col in mono:
        out[len(col) - 1] += 1
    return tuple(out)


def wt_vector(mono, n):
    """Multiplicity of each index 1..n across all factors."""
    out = [0] * n
    for col in mono:
        for i in col:
            out[i - 1] += 1
    return tuple(out)


def poly_add_term(poly, mono, coeff):
    c = poly.get(mono, 0) + coeff
    if c:
        poly[mono] = c
    else:
        poly.pop(mono, None)


def poly_scale(poly, factor):
    return {m: c * factor for m, c in poly.items()}


def assert_bihomogeneous(poly, n):
    degs = {deg_vector(m, n) for m in poly}
    wts = {wt_vector(m, n) for m in poly}
    assert len(degs) <= 1 and len(wts) <= 1, "relation is not deg/wt homogeneous"


def relation_json_obj(poly):
    terms = []
    for mono in sorted(poly):
        terms.append({"coeff": str(Fraction(poly[mono])), "factors": [list(c) for c in mono]})
    return {"terms": terms}


# -- classical relation generators ----------------------------------------

def exchange_relation(col_a, col_b, r, n=None):
    """X_A X_B minus the sum exchanging B_r into every slot of A.

    Requires len(A) >= len(B) and 1 <= r <= len(B); all terms canonicalized.
    """
    k, l = len(col_a), len(col_b)
    if k < l:
        raise ShapeError("first column must be at least as long")
    if not 1 <= r <= l:
        raise ShapeError(f"exchange position {r} out of range")
    if n is not None:
        canonicalize(col_a, n), canonicalize(col_b, n)
    poly = {}
    poly_add_term(poly, monomial((col_a, col_b)), Fraction(1))
    br = col_b[r - 1]
    for s in range(k):
        new_a = col_a[:s] + (br,) + col_a[s + 1:]
        new_b = col_b[:r - 1] + (col_a[s],) + col_b[r:]
        ca, cb = canonicalize(new_a), canonicalize(new_b)
        if ca is None or cb is None:
            continue
        poly_add_term(poly, monomial((ca[1], cb[1])), Fraction(-ca[0] * cb[0]))
    if n is not None:
        assert_bihomogeneous(poly, n)
    return poly


def shuffle_relation(col_a, col_b, r, n=None):
    """Alternating shuffle of {B_1..B_r} with {A_r..A_k}, cosets merged.

    Normalized so the coefficient of X_A X_B is one; degenerate inputs whose
    shuffles all annihilate give the zero polynomial.
    """
    k, l = len(col_a), len(col_b)
    if k < l:
        raise ShapeError("first column must be at least as long")
    if not 1 <= r <= l:
        raise ShapeError(f"shuffle position {r} out of range")
    symbols = col_b[:r] + col_a[r - 1:]
    poly = {}
    base = monomial((col_a, col_b))
    for perm in permutations(range(k + 1)):
        sign = _perm_sign(perm)
        arranged = [symbols[p] for p in perm]
        new_b = tuple(arranged[:r]) + col_b[r:]
        new_a = col_a[:r - 1] + tuple(arranged[r:])
        ca, cb = canonicalize(new_a), canonicalize(new_b)
        if ca is None or cb is None:
            continue
        poly_add_term(poly, monomial((ca[1], cb[1])), Fraction(sign * ca[0] * cb[0]))
    lead = poly.get(base)
    if lead:
        poly = poly_scale(poly, Fraction(1, lead))
    if n is not None:
        assert_bihomogeneous(poly, n)
    return poly


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def append_columns(poly, extra, n=None):
    """Adjoin extra indices to the short factor of every term of a (k, l) relation."""
    if not poly:
        return {}
    lens = {tuple(sorted(map(len, m), reverse=True)) for m in poly}
    if len(lens) != 1:
        raise ShapeError("relation is not length-homogeneous")
    (k, l), = lens
    if k <= l:
        raise ShapeError("relation must have strictly unequal factor lengths")
    if len(extra) != k - l:
        raise ShapeError(f"need exactly {k - l} extra indices")
    out = {}
    for mono, coeff in poly.items():
        long_col, short_col = mono if len(mono[0]) == k else (mono[1], mono[0])
        grown = canonicalize(short_col + tuple(extra))
        if grown is None:
            continue
        poly_add_term(out, monomial((long_col, grown[1])), coeff * grown[0])
    if n is not None:
        assert_bihomogeneous(out, n)
    return out


# -- straightening -------------------------------------------------------

def _column_sign(lat, element):
    if lat.kind == "M":
        return 1, element
    s, col = canonicalize(element)
    return s, col


def _is_standard(lat, first, second):
    a = lat.element_of_key(first)
    b = lat.element_of_key(second)
    return lat.comparable(a, b)


def _pivot_m(first, second):
    for r in range(len(second)):
        if first[r] > second[r]:
            return r + 1
    return None


def _pivot_n(first, second):
    alpha = pbw_arrange(first)
    beta = pbw_arrange(second)
    k, l = len(alpha), len(beta)
    for r in range(l):
        if beta[r] > max(alpha[r:]):
            return alpha, beta, r + 1
    return None


def _slot_shuffle(arr_first, arr_second, r):
    """Shuffle relation keyed by produced slot pairs, normalized to 1 on the pivot slot.

    ``arr_first``/``arr_second`` are the arranged tuples the shuffle acts on
    (plain columns for the semistandard order, PBW arrangements otherwise);
    keys are pairs of canonical columns in production order.
    """
    k = len(arr_first)
    symbols = arr_second[:r] + arr_first[r - 1:]
    raw = {}
    for perm in permutations(range(k + 1)):
        sign = _perm_sign(perm)
        arranged = [symbols[p] for p in perm]
        new_b = tuple(arranged[:r]) + arr_second[r:]
        new_a = arr_first[:r - 1] + tuple(arranged[r:])
        ca, cb = canonicalize(new_a), canonicalize(new_b)
        if ca is None or cb is None:
            continue
        key = (ca[1], cb[1])
        c = raw.get(key, 0) + sign * ca[0] * cb[0]
        if c:
            raw[key] = c
        else:
            raw.pop(key, None)
    base = (canonicalize(arr_first)[1], canonicalize(arr_second)[1])
    lead = raw.get(base)
    assert lead, "pivot monomial must survive the shuffle"
    return {key: Fraction(c, lead) for key, c in raw.items()}


def straighten_pair(lat, a, b):
    """The unique relation expressing X_a X_b in standard monomials of the lattice order.

    Maintains a worklist of slot-ordered non-standard quadratic monomials and
    cancels each against a normalized shuffle relation at its least violated
    position; the produced first slots move strictly monotonically through
    the finite lattice, so the loop terminates.
    """
    lat.check_element(a), lat.check_element(b)
    if lat.comparable(a, b):
        raise ComparablePairError(f"{a!r} and {b!r} are comparable; nothing to straighten")
    sa, ca = _column_sign(lat, a)
    sb, cb = _column_sign(lat, b)
    first, second = (ca, cb) if (-len(ca), ca) <= (-len(cb), cb) else (cb, ca)
    work = {(first, second): Fraction(sa * sb)}
    standard_part = {}
    guard = 0
    while work:
        guard += 1
        assert guard < 200000, "straightening did not terminate"
        (fst, snd), coeff = min(work.items())
        del work[(fst, snd)]
        if _is_standard(lat, fst, snd):
            poly_add_term(standard_part, monomial((fst, snd)), coeff)
            continue
        if lat.kind == "M":
            r = _pivot_m(fst, snd)
            assert r is not None, "non-standard pair must have a violated position"
            rel = _slot_shuffle(fst, snd, r)
        else:
            piv = _pivot_n(fst, snd)
            assert piv is not None, "non-standard pair must have a violated position"
            alpha, beta, r = piv
            rel = _slot_shuffle(alpha, beta, r)
        for key, c2 in rel.items():
            if key == (fst, snd):
                continue
            poly_add_term(work, key, -coeff * c2)
    # work + standard_part stayed congruent to X_a X_b throughout
    result = {monomial((ca, cb)): Fraction(sa * sb)}
    for mono, coeff in standard_part.items():
        poly_add_term(result, mono, -coeff)
    assert result.get(monomial((ca, cb))) == sa * sb
    assert_bihomogeneous(result, lat.n)
    return result


def straightening_terms(lat, rel, a, b):
    """Decompose a straightening relation into labelled (lower, upper, coeff) rows.

    Rows are the standard monomials with their sign-corrected coefficients
    c_i, ordered with the (meet-or-product, join) row first when present.
    """
    sa, ca = _column_sign(lat, a)
    sb, cb = _column_sign(lat, b)
    lead = monomial((ca, cb))
    rows = []
    for mono, coeff in rel.items():
        if mono == lead:
            continue
        f1, f2 = mono
        e1 = f1 if lat.kind == "M" else pbw_arrange(f1)
        e2 = f2 if lat.kind == "M" else pbw_arrange(f2)
        s1 = 1 if lat.kind == "M" else canonicalize(e1)[0]
        s2 = 1 if lat.kind == "M" else canonicalize(e2)[0]
        lo, hi = (e1, e2) if lat.leq(e1, e2) else (e2, e1)
        rows.append((lo, hi, -coeff * s1 * s2))
    head = lat.odot(a, b) if lat.kind == "N" else lat.meet(a, b)
    top = lat.join(a, b)
    rows.sort(key=lambda row: (0 if (row[0], row[1]) == (head, top) else 1,
                               lat.grade(row[0]), row[0], row[1]))
    return rows


# -- Hibi and generalized Hibi binomials -----------------------------------

def hibi_generator(lattice, a, b, part=None):
    """Binomial X_a X_b - X_join X_meet, or the generalized X_a X_b - X_join X_(a.b).

    Returned over abstract lattice variables: monomials are sorted pairs of
    lattice element ids.
    """
    if lattice.leq(a, b) or lattice.leq(b, a):
        raise ComparablePairError(f"{a!r} and {b!r} are comparable")
    if part is None:
        lower = lattice.meet(a, b)
    else:
        from .chain_order import odot_elements
        lower = odot_elements(lattice, part, a, b)
        theta_a = theta_exponent(lattice, part, (a,))
        theta_b = theta_exponent(lattice, part, (b,))
        theta_lo = theta_exponent(lattice, part, (lower,))
        theta_hi = theta_exponent(lattice, part, (lattice.join(a, b),))
        assert _merge_exponents(theta_a, theta_b) == _merge_exponents(theta_lo, theta_hi), \
            "binomial must lie in the kernel of the monomial map"
    poly = {}
    poly_add_term(poly, tuple(sorted((a, b))), Fraction(1))
    poly_add_term(poly, tuple(sorted((lower, lattice.join(a, b)))), Fraction(-1))
    return poly


def _merge_exponents(e1, e2):
    out = dict(e1)
    for k, v in e2.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


def hibi_grevlex_initial(lattice, poly):
    """Least monomial under graded reverse lex built from the (grade, id) linearization.

    ``poly`` is keyed by tuples of lattice element ids.  Ties between equal
    degrees break at the largest differing variable rank.
    """
    order = sorted(lattice.elements, key=lambda e: (lattice.grade(e), e))
    rank = {a: i for i, a in enumerate(order)}

    def key(mono):
        ranks = sorted(rank[a] for a in mono)
        return (len(ranks), tuple(reversed(ranks)))

    return min(poly, key=key)


def theta_exponent(lattice, part, mono):
    """Exponent vector of the monomial map X_a -> t * prod z_p over the K-set of a."""
    out = {}
    for a in mono:
        out["t"] = out.get("t", 0) + 1
        ideal = lattice.iota(a)
        from .chain_order import k_set
        for p in k_set(part, ideal):
            key = ("z", p)
            out[key] = out.get(key, 0) + 1
    return {k: v for k, v in out.items() if v}


def psi_exponent(alpha, n):
    """Exponent vector of the PBW monomial map X_alpha -> z_k * prod z_(j, alpha_j > k)."""
    k = len(alpha)
    out = {("zdiag", k): 1}
    for j, v in enumerate(alpha, start=1):
        if v > k:
            key = ("zcell", (j, v))
            out[key] = out.get(key, 0) + 1
    return out


def theta_to_psi(exponent):
    """Rewrite a theta exponent over cells into psi variables.

    Diagonal cells (k, k) become z_k / z_(k-1) and the deg marker t becomes z_1.
    """
    out = {}

    def bump(key, v):
        out[key] = out.get(key, 0) + v
        if out[key] == 0:
            del out[key]

    for key, v in exponent.items():
        if key == "t":
            bump(("zdiag", 1), v)
        else:
            _, (r, s) = key
            if r == s:
                bump(("zdiag", r), v)
                bump(("zdiag", r - 1), -v)
            else:
                bump(("zcell", (r, s)), v)
    return out


# -- evaluation oracles ----------------------------------------------------

@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    method: str                    # 'symbolic' | 'probabilistic'
    failure_bound: object = None   # Fraction, probabilistic only


def minor_mod_p(matrix, cols, p=ORACLE_PRIME):
    """Determinant of rows 1..k and the given columns, mod p."""
    k = len(cols)
    sub = [[matrix[i][c - 1] % p for c in cols] for i in range(k)]
    det = 1
    for i in range(k):
        pivot = None
        for r in range(i, k):
            if sub[r][i]:
                pivot = r
                break
        if pivot is None:
            return 0
        if pivot != i:
            sub[i], sub[pivot] = sub[pivot], sub[i]
            det = -det
        det = det * sub[i][i] % p
        inv = pow(sub[i][i], p - 2, p)
        for r in range(i + 1, k):
            factor = sub[r][i] * inv % p
            if factor:
                sub[r] = [(x - factor * y) % p for x, y in zip(sub[r], sub[i])]
    return det % p


def plucker_eval(poly, matrix, p=ORACLE_PRIME):
    """Evaluate a relation at a square matrix over GF(p) via top-justified minors."""
    total = 0
    for mono, coeff in poly.items():
        c = Fraction(coeff)
        if c.denominator % p == 0:
            raise ZeroDivisionError("coefficient denominator divisible by the field characteristic")
        val = c.numerator * pow(c.denominator, p - 2, p)
        for col in mono:
            val = val * minor_mod_p(matrix, col, p)
        total = (total + val) % p
    return total % p


def random_matrix(n, rng, p=ORACLE_PRIME):
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n)]


def _symbolic_minor(cols):
    """Leibniz expansion of the top-justified minor into (cells tuple) -> sign."""
    k = len(cols)
    out = {}
    for perm in permutations(range(k)):
        cells = tuple(sorted((r + 1, cols[perm[r]]) for r in range(k)))
        out[cells] = out.get(cells, 0) + _perm_sign(perm)
    return {c: s for c, s in out.items() if s}


def symbolic_pi_expand(poly, n):
    """Exact expansion of the minor evaluation map as a polynomial in matrix entries."""
    out = {}
    for mono, coeff in poly.items():
        parts = [{(): 1}]
        for col in mono:
            nxt = {}
            minor = _symbolic_minor(col)
            for cells1, c1 in parts[-1].items():
                for cells2, c2 in minor.items():
                    key = tuple(sorted(cells1 + cells2))
                    nxt[key] = nxt.get(key, 0) + c1 * c2
            parts.append({k: v for k, v in nxt.items() if v})
        for cells, c in parts[-1].items():
            val = out.get(cells, 0) + Fraction(coeff) * c
            if val:
                out[cells] = val
            else:
                out.pop(cells, None)
    return out


def ideal_membership(poly, n, mode="probabilistic", trials=20, seed=0):
    """Test membership in the Pluecker ideal by minor evaluation.

    Symbolic mode expands products of minors exactly (guarded by size) and
    tests identical vanishing; probabilistic mode evaluates at seeded random
    matrices over a 62-bit prime and reports the Schwartz-Zippel bound.
    """
    if not poly:
        return MembershipVerdict(True, mode, Fraction(0) if mode == "probabilistic" else None)
    components = {}
    for mono, coeff in poly.items():
        components.setdefault(deg_vector(mono, n), {})[mono] = coeff
    if len(components) > 1:
        verdicts = [ideal_membership(c, n, mode, trials, seed) for c in components.values()]
        bound = sum((v.failure_bound or Fraction(0) for v in verdicts), Fraction(0))
        return MembershipVerdict(all(v.member for v in verdicts), mode,
                                 bound if mode == "probabilistic" else None)
    total_degree = sum(deg_vector(next(iter(poly)), n)[k] * (k + 1) for k in range(n - 1))
    if mode == "symbolic":
        if sum(deg_vector(next(iter(poly)), n)) > SYMBOLIC_DEGREE_LIMIT or n > SYMBOLIC_N_LIMIT:
            raise CapacityExceeded("symbolic oracle limited to cubics with n <= 6")
        return MembershipVerdict(not symbolic_pi_expand(poly, n), "symbolic")
    rng = random.Random(seed)
    member = True
    for _ in range(trials):
        if plucker_eval(poly, random_matrix(n, rng)) != 0:
            member = False
            break
    bound = Fraction(total_degree, ORACLE_PRIME) ** trials
    return MembershipVerdict(member, "probabilistic", bound)


class CapacityExceeded(Exception):
    pass


def apply_index_permutation(poly, perm):
    """Relabel all column indices through a permutation of 1..n and re-canonicalize."""
    image = sorted(perm.values()) if isinstance(perm, dict) else sorted(perm)
    assert image == list(range(1, len(image) + 1)), "not a permutation of 1..n"
    lookup = perm if isinstance(perm, dict) else {i + 1: v for i, v in enumerate(perm)}
    out = {}
    for mono, coeff in poly.items():
        sign = 1
        cols = []
        for col in mono:
            c = canonicalize(tuple(lookup[i] for i in col))
            sign *= c[0]
            cols.append(c[1])
        poly_add_term(out, monomial(cols), coeff * sign)
    return out


# -- rank / solve over the oracle prime ------------------------------------

def _row_reduce(rows, p=ORACLE_PRIME):
    """In-place row echelon; returns pivot column list."""
    pivots = []
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return pivots


def rank_mod_p(rows, p=ORACLE_PRIME):
    return len(_row_reduce([list(r) for r in rows], p))


def monomials_of_degree(lat, lam):
    """All degree-lam monomials: lam[k-1] factors of length k, unordered with repetition."""
    n = lat.n
    per_length = []
    for k in range(1, n):
        count = lam[k - 1]
        if count == 0:
            continue
        cols = [tuple(c) for c in combinations(range(1, n + 1), k)]
        per_length.append(list(combinations_with_replacement_sorted(cols, count)))
    out = [()]
    for group in per_length:
        out = [m + g for m in out for g in group]
    return [monomial(m) for m in out]


def combinations_with_replacement_sorted(items, count):
    from itertools import combinations_with_replacement
    return [tuple(c) for c in combinations_with_replacement(items, count)]


def is_standard_monomial(lat, mono):
    elems = [lat.element_of_key(c) for c in mono]
    return all(lat.comparable(x, y) for x, y in combinations(elems, 2))


def standard_basis_check(lat, lam, seeds=(0, 1, 2)):
    """Compare the standard-monomial count against the evaluation rank of all monomials."""
    if sum(lam) > SYMBOLIC_DEGREE_LIMIT or lat.n > RANK_N_LIMIT:
        raise CapacityExceeded("rank oracle limited to total degree <= 3, n <= 5")
    monos = monomials_of_degree(lat, lam)
    if not monos:
        return True
    n_standard = sum(1 for m in monos if is_standard_monomial(lat, m))
    ranks = set()
    for seed in seeds:
        rng = random.Random(seed)
        rows = []
        for _ in range(len(monos) + 10):
            Z = random_matrix(lat.n, rng)
            cache = {}
            row = []
            for m in monos:
                val = 1
                for col in m:
                    if col not in cache:
                        cache[col] = minor_mod_p(Z, col)
                    val = val * cache[col] % ORACLE_PRIME
                row.append(val)
            rows.append(row)
        ranks.add(rank_mod_p(rows))
    return len(ranks) == 1 and ranks.pop() == n_standard


def standard_expansion_mod_p(lat, a, b, seed=0):
    """Solve for X_a X_b as a combination of same-bidegree standard monomials over GF(p).

    Returns the unique coefficient map (canonical monomial -> field element);
    raises if the evaluation system is inconsistent or underdetermined.
    """
    p = ORACLE_PRIME
    sa, ca = _column_sign(lat, a)
    sb, cb = _column_sign(lat, b)
    target = monomial((ca, cb))
    candidates = _bidegree_monomials(lat.n, target)
    standard = [m for m in candidates if m != target and is_standard_monomial(lat, m)]
    rng = random.Random(seed)
    rows = []
    rhs = []
    for _ in range(len(standard) + 8):
        Z = random_matrix(lat.n, rng)
        cache = {}

        def ev(mono):
            val = 1
            for col in mono:
                if col not in cache:
                    cache[col] = minor_mod_p(Z, col)
                val = val * cache[col] % p
            return val

        rows.append([ev(m) for m in standard])
        rhs.append(ev(target))
    aug = [row + [r] for row, r in zip(rows, rhs)]
    pivots = _row_reduce(aug, p)
    assert len(aug[0]) - 1 not in pivots, "evaluation system is inconsistent"
    assert len(pivots) == len(standard), "standard monomials must be independent"
    solution = {}
    for i, col in enumerate(pivots):
        if aug[i][-1]:
            solution[standard[col]] = aug[i][-1]
    # orient like a straightening relation normalized in lattice labels
    out = {target: (sa * sb) % p}
    for mono, c in solution.items():
        out[mono] = -c * sa * sb % p
    return out


def _bidegree_monomials(n, target):
    """All quadratic canonical monomials sharing the target's deg and wt vectors."""
    k, l = len(target[0]), len(target[1])
    entries = sorted(target[0] + target[1])
    out = set()
    for first in combinations(range(k + l), k):
        first_set = [entries[i] for i in first]
        second_set = [entries[i] for i in range(k + l) if i not in first]
        if len(set(first_set)) == k and len(set(second_set)) == l:
            out.add(monomial((tuple(sorted(first_set)), tuple(sorted(second_set)))))
    return sorted(out)
