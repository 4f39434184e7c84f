"""Dominance order, extremal exponents, tropical maps, PBW exponents and
denominator vectors.

Laurent expansions handed to these functions are expressed in the torus of
the seed they are analysed against (the seed's own cluster), not in the
ambient initial torus.  :func:`reexpand` moves an expansion across one
mutation edge.
"""

from __future__ import annotations

from typing import Sequence

from .qring import QInt
from .qtorus import Exp, QuantumTorus, TorusElement
from .seed import QuantumSeed


class NoUniqueExtremum(ValueError):
    pass


# ---------------------------------------------------------------------------
# dominance order

def dominance_witness(seed: QuantumSeed, b: Sequence[int], bp: Sequence[int]) -> tuple[int, ...] | None:
    """The ``v >= 0`` with ``b - bp = Btilde v`` if it exists, else None.

    Compatibility forces ``v = -1/2 Lambda' (b - bp) = 1/2 L' (b - bp)``.
    """
    diff = [x - y for x, y in zip(b, bp)]
    v = []
    for k in seed.exchangeable:
        twice = sum(x * d for x, d in zip(seed.L[k - 1], diff) if d)
        if twice % 2 or twice < 0:
            return None
        v.append(twice // 2)
    for i, row in enumerate(seed.Btilde):
        if sum(r * x for r, x in zip(row, v)) != diff[i]:
            return None
    return tuple(v)


def dominance_leq(seed: QuantumSeed, b: Sequence[int], bp: Sequence[int]) -> bool:
    """True iff ``b`` dominates ``bp`` in the seed's order (``b - bp in Btilde Z_{>=0}^Kex``)."""
    return dominance_witness(seed, b, bp) is not None


def dominates(seed: QuantumSeed, b, bp) -> bool:
    return dominance_leq(seed, b, bp)


def exp_max(seed: QuantumSeed, f: TorusElement) -> Exp:
    """The support exponent dominating every other one."""
    return _extremum(seed, f, top=True)


def exp_min(seed: QuantumSeed, f: TorusElement) -> Exp:
    """The support exponent dominated by every other one."""
    return _extremum(seed, f, top=False)


def _extremum(seed: QuantumSeed, f: TorusElement, top: bool) -> Exp:
    if not f:
        raise ValueError("zero element has no extremal exponent")
    supp = f.support()
    found = []
    for a in supp:
        if all(b == a or (dominance_leq(seed, a, b) if top else dominance_leq(seed, b, a)) for b in supp):
            found.append(a)
    if len(found) != 1:
        kind = "maximal" if top else "minimal"
        raise NoUniqueExtremum(f"no unique dominance-{kind} exponent among {len(supp)} terms")
    return found[0]


# ---------------------------------------------------------------------------
# tropical transformations

def _tropical(seed: QuantumSeed, k: int, g: Sequence[int], right: bool) -> Exp:
    if k not in seed.exchangeable:
        raise ValueError(f"index {k} is not exchangeable")
    g = tuple(int(x) for x in g)
    gk = g[k - 1]
    out = []
    for i in seed.indices:
        if i == k:
            out.append(-gk)
            continue
        b_ki = seed.b(k, i)
        b_ik = seed.b(i, k)
        use_ki = (gk >= 0) == right
        out.append(g[i - 1] + max(b_ki if use_ki else b_ik, 0) * gk)
    return tuple(out)


def tropical_R(seed: QuantumSeed, k: int, g: Sequence[int]) -> Exp:
    """phi^R from ``seed`` to ``mu_k(seed)``."""
    return _tropical(seed, k, g, right=True)


def tropical_L(seed: QuantumSeed, k: int, g: Sequence[int]) -> Exp:
    """phi^L from ``seed`` to ``mu_k(seed)``."""
    return _tropical(seed, k, g, right=False)


# ---------------------------------------------------------------------------
# moving expansions between neighbouring seeds

def laurent_monomial(seed: QuantumSeed, a: Sequence[int]) -> TorusElement:
    """``X^a`` of ``seed`` in its ambient torus; negative exponents are allowed
    only at indices whose variable is a unit monomial there."""
    T = seed.torus
    out = TorusElement.one(T.rank)
    active = [i for i in seed.indices if a[i - 1]]
    for i in active:
        out = T.mul(out, T.power(seed.expansions[i - 1], a[i - 1]))
    e = 0
    for p, i in enumerate(active):
        for j in active[:p]:
            e += a[i - 1] * a[j - 1] * seed.L[i - 1][j - 1]
    return out.shift(e)


def edge_reexpander(seed: QuantumSeed, k: int):
    """Return a function rewriting elements of the torus of ``seed`` in the
    torus of ``mu_k(seed)``.

    After clearing the ``x_k``-denominator with ``X^{m e_k}``, every monomial is
    substituted by its expansion in the new cluster, and ``x_k^m`` is divided
    back out on the left.
    """
    # cluster of `seed`, expanded in the torus of mu_k(seed)
    back = seed.as_initial().mutate(k).as_initial().mutate(k)
    T0 = QuantumTorus(seed.L)
    n = seed.size

    def apply(f: TorusElement) -> TorusElement:
        m = max([0] + [-a[k - 1] for a in f.support()])
        ek = tuple(m if i == k - 1 else 0 for i in range(n))
        total = TorusElement()
        for a, c in f.items():
            shifted = tuple(x + y for x, y in zip(a, ek))
            total = total + laurent_monomial(back, shifted).scale(c.shift(T0.pairing(ek, a)))
        if m == 0:
            return total
        return back.torus.divide_left(total, laurent_monomial(back, ek))

    return apply


def reexpand(seed: QuantumSeed, k: int, f: TorusElement) -> TorusElement:
    """Rewrite ``f`` (in the torus of ``seed``) in the torus of ``mu_k(seed)``."""
    return edge_reexpander(seed, k)(f)


def own_cluster(seed: QuantumSeed) -> list[TorusElement]:
    return list(seed.as_initial().expansions)


# ---------------------------------------------------------------------------
# PBW exponents

def _kplus_table(word: Sequence[int]) -> list[int]:
    word = tuple(word)
    l = len(word)
    nxt = [l + 1] * l
    last: dict[int, int] = {}
    for k in range(l, 0, -1):
        nxt[k - 1] = last.get(word[k - 1], l + 1)
        last[word[k - 1]] = k
    return nxt


def pbw_gvector(word: Sequence[int], c: Sequence[int]) -> Exp:
    """``(c_1 - c_{1+}, ..., c_l - c_{l+})`` with ``c_{l+1} = 0``."""
    c = tuple(int(x) for x in c)
    if any(x < 0 for x in c):
        raise ValueError("PBW exponents must be nonnegative")
    nxt = _kplus_table(word)
    ext = c + (0,)
    return tuple(ext[k] - ext[nxt[k] - 1] for k in range(len(c)))


def pbw_from_gvector(word: Sequence[int], a: Sequence[int]) -> tuple[Exp, Exp]:
    """Invert :func:`pbw_gvector` up to a frozen shift.

    Returns ``(c, shift)`` with ``pbw_gvector(c) = a'``, ``a' = a - shift``;
    ``a'`` agrees with ``a`` on exchangeable positions and its frozen entries
    are the least values ``>= a_f`` making every chain sum ``c_k`` nonnegative.
    ``shift`` is listed over the frozen positions in increasing order.
    """
    word = tuple(word)
    a = tuple(int(x) for x in a)
    l = len(word)
    nxt = _kplus_table(word)
    frozen = [k for k in range(1, l + 1) if nxt[k - 1] == l + 1]
    ap = list(a)
    for f in frozen:
        # chain of positions k, k_+, ... ending at f: the occurrences of letter i_f
        chain = [k for k in range(1, l + 1) if word[k - 1] == word[f - 1]]
        need = 0
        tail = 0
        for k in reversed(chain[:-1]):
            tail += a[k - 1]
            need = max(need, -tail)
        ap[f - 1] = max(a[f - 1], need)
    c = [0] * l
    for k in range(l, 0, -1):
        c[k - 1] = ap[k - 1] + (c[nxt[k - 1] - 1] if nxt[k - 1] <= l else 0)
    shift = tuple(a[f - 1] - ap[f - 1] for f in frozen)
    return tuple(c), shift


def embed_frozen(word: Sequence[int], shift: Sequence[int]) -> Exp:
    l = len(word)
    nxt = _kplus_table(word)
    frozen = [k for k in range(1, l + 1) if nxt[k - 1] == l + 1]
    out = [0] * l
    for f, s in zip(frozen, shift):
        out[f - 1] = s
    return tuple(out)


# ---------------------------------------------------------------------------
# denominators and bar invariance

def denominator_vector(seed: QuantumSeed, f: TorusElement) -> Exp:
    """``d_k = -min_s b(s)_k`` for exchangeable ``k``, zero on frozen indices."""
    if not f:
        raise ValueError("zero element has no denominator vector")
    supp = f.support()
    ex = set(seed.exchangeable)
    return tuple(-min(a[i - 1] for a in supp) if i in ex else 0 for i in seed.indices)


def bar_invariance_check(f: TorusElement, normalization: int = 0) -> bool:
    """True iff every coefficient of ``v^normalization * f`` is bar-invariant.

    Cluster variables of a quantum seed are already weight-normalized, so the
    default shift is zero.
    """
    g = f.shift(normalization) if normalization else f
    return all(c.bar() == c for _, c in g.items())


def leading_coefficient(seed: QuantumSeed, f: TorusElement) -> QInt:
    return f.coeff(exp_max(seed, f))
