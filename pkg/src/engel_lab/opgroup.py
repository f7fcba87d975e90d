"""Matrix realization of the group generated by 1+ad(z) and the 1+ad(c_k).

Restricting the support to {1..n} and passing to the quotient by the
component J leaves finitely many nonzero degree slices:

* single-block words with at most three indices (z itself included), and
* slices of type |S| - 2m in {-1, 0, 1}, taken modulo J.

:class:`Truncation` stacks the quotient bases of those slices into one
coordinate space.  Both derivations raise the pair (block count, support)
strictly, so on the truncation every ``ad`` is nilpotent, ``1 + ad`` is
invertible by a finite geometric series, and the generated matrix group is
unipotent.

Conventions: ``ad(u)`` is the matrix of ``v -> [v, u]``, vectors are rows,
``v @ M`` applies ``M``, and matrix products compose in reading order.
Group words therefore evaluate to plain matrix products, and the group
commutator [A, B] is the product A^-1 B^-1 A B.
"""

from __future__ import annotations

import itertools
import random
import time
from functools import reduce
from typing import Callable, Iterator

import numpy as np

from . import linalg
from .core.elements import (
    CMarker,
    LieElt,
    MixedValue,
    ad_c_word,
    ad_z_word,
    mixed_bracket,
    zelt,
)
from .core.words import Word, multidegree
from .ideal.spans import get_context

Degree = tuple[int, tuple[int, ...]]

#: ``("z",)`` | ``("c", k)`` | ``("br", left, right)``
Tree = tuple

DEFAULT_SEED = 24301


class ResourceCapError(RuntimeError):
    """The requested representation exceeds the configured size limits."""


class Truncation:
    """Quotient coordinates and generator matrices for supports in {1..n}."""

    def __init__(self, n: int, p: int = 5):
        if n < 1:
            raise ValueError("need at least one c-generator")
        self.n = n
        self.p = p
        self.ctx = get_context(p)

        degrees: list[Degree] = []
        for size in range(0, min(3, n) + 1):
            degrees.extend((1, s) for s in _supports(n, size))
        m = 2
        while 2 * m - 1 <= n:
            for size in range(2 * m - 1, min(2 * m + 1, n) + 1):
                degrees.extend((m, s) for s in _supports(n, size))
            m += 1
        degrees.sort(key=lambda d: (d[0], len(d[1]), d[1]))

        self.degrees: list[Degree] = []
        self.offset: dict[Degree, int] = {}
        self.basis: list[Word] = []
        for d in degrees:
            span = self.ctx.explicit(*d)
            if span.quotient_dim == 0:
                continue
            if len(self.basis) + span.quotient_dim > linalg.MAX_DIM:
                raise ResourceCapError(
                    f"truncation at n={n} needs more than {linalg.MAX_DIM} "
                    "basis vectors (raise ENGEL_LAB_MAX_DIM to override)"
                )
            self.offset[d] = len(self.basis)
            self.degrees.append(d)
            self.basis.extend(span.quotient_words())
        self.dim = len(self.basis)

        self.identity = np.eye(self.dim, dtype=np.int64)
        self.ad_z = self._op_matrix(ad_z_word)
        self.ad_c = {
            k: self._op_matrix(lambda w, k=k: ad_c_word(w, k))
            for k in range(1, n + 1)
        }
        self.x = (self.identity + self.ad_z) % p
        self.x_inv = (self.identity - self.ad_z) % p
        self.a = {k: (self.identity + M) % p for k, M in self.ad_c.items()}
        self.a_inv = {k: (self.identity - M) % p for k, M in self.ad_c.items()}

    # -- coordinates --------------------------------------------------------

    def embed(self, e: LieElt) -> np.ndarray:
        """Quotient coordinates of ``e``; dead degrees drop out silently.

        A degree is dead exactly when its whole slice lies in J: type
        outside [-1, 1] forces every word into the a-priori camp (single
        blocks of four or more indices at m = 1, violator words at m >= 2),
        and the surviving windows are enumerated by the constructor.
        """
        v = np.zeros(self.dim, dtype=np.int64)
        parts: dict[Degree, dict[Word, int]] = {}
        for w, c in e.terms.items():
            parts.setdefault(multidegree(w), {})[w] = c
        for deg, part in parts.items():
            off = self.offset.get(deg)
            if off is None:
                continue
            span = self.ctx.explicit(*deg)
            coords = span.quotient_coords(part)
            v[off : off + len(coords)] = coords
        return v

    def element(self, v: np.ndarray) -> LieElt:
        """A representative of the coordinate row ``v``."""
        return LieElt(
            {w: int(c) for w, c in zip(self.basis, v % self.p) if c}
        )

    def _op_matrix(self, op: Callable[[Word], dict[Word, int]]) -> np.ndarray:
        M = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i, w in enumerate(self.basis):
            img = op(w)
            if img:
                M[i] = self.embed(LieElt(img))
        return M

    # -- operators ----------------------------------------------------------

    def ad_matrix(self, u: MixedValue) -> np.ndarray:
        """Matrix of ``v -> [v, u]``; a c-marker means the derivation ad_c."""
        if isinstance(u, CMarker):
            return (u.coeff * self.ad_c[u.index]) % self.p
        M = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i, w in enumerate(self.basis):
            img = LieElt({w: 1}).bracket(u)
            if img:
                M[i] = self.embed(img)
        return M

    def one_plus_ad(self, u: MixedValue) -> np.ndarray:
        return (self.identity + self.ad_matrix(u)) % self.p

    def chain(self, *mats: np.ndarray) -> np.ndarray:
        return reduce(lambda a, b: linalg.matmul(a, b, self.p), mats)

    def unipotent_inverse(self, M: np.ndarray) -> np.ndarray:
        """Inverse of I + N, N nilpotent, by the finite geometric series."""
        N = (M - self.identity) % self.p
        out = self.identity.copy()
        power = N
        sign = -1
        for _ in range(len(self.degrees) + 1):
            if not power.any():
                return out
            out = (out + sign * power) % self.p
            power = linalg.matmul(power, N, self.p)
            sign = -sign
        raise ValueError("matrix is not unipotent on this truncation")

    def comm(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Group commutator A^-1 B^-1 A B."""
        return self.chain(
            self.unipotent_inverse(A), self.unipotent_inverse(B), A, B
        )

    def group_value(self, tree: Tree) -> tuple[np.ndarray, np.ndarray]:
        """Matrix of the group word read off ``tree``, with its inverse.

        Commutator nodes propagate the inverse for free:
        ([A,B])^-1 = [B,A], so no series inversion is needed inside trees.
        """
        kind = tree[0]
        if kind == "z":
            return self.x, self.x_inv
        if kind == "c":
            return self.a[tree[1]], self.a_inv[tree[1]]
        A, Ai = self.group_value(tree[1])
        B, Bi = self.group_value(tree[2])
        return self.chain(Ai, Bi, A, B), self.chain(Bi, Ai, B, A)


_truncations: dict[tuple[int, int], Truncation] = {}


def build_truncation(n: int, p: int = 5) -> Truncation:
    key = (n, p)
    if key not in _truncations:
        _truncations[key] = Truncation(n, p)
    return _truncations[key]


def _supports(n: int, size: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations(range(1, n + 1), size)


# ---------------------------------------------------------------------------
# commutator trees, shared by the matrix side and the Lie side


def leaf_z() -> Tree:
    return ("z",)


def leaf_c(k: int) -> Tree:
    return ("c", k)


def br(left: Tree, right: Tree) -> Tree:
    return ("br", left, right)


def left_normed(*trees: Tree) -> Tree:
    return reduce(br, trees)


def lie_value(tree: Tree) -> MixedValue:
    """The Lie element spelled by ``tree`` (a marker for a lone c-leaf)."""
    kind = tree[0]
    if kind == "z":
        return zelt()
    if kind == "c":
        return CMarker(tree[1])
    return mixed_bracket(lie_value(tree[1]), lie_value(tree[2]))


def tree_letters(tree: Tree) -> list[Tree]:
    if tree[0] == "br":
        return tree_letters(tree[1]) + tree_letters(tree[2])
    return [tree]


def random_tree(rng: random.Random, weight: int, n: int, z_bias: float = 0.45) -> Tree:
    if weight == 1:
        if rng.random() < z_bias:
            return leaf_z()
        return leaf_c(rng.randint(1, n))
    cut = rng.randint(1, weight - 1)
    return br(
        random_tree(rng, cut, n, z_bias),
        random_tree(rng, weight - cut, n, z_bias),
    )


def matrix_power(T: Truncation, M: np.ndarray, e: int) -> np.ndarray:
    out = T.identity
    for _ in range(e):
        out = linalg.matmul(out, M, T.p)
    return out


# ---------------------------------------------------------------------------
# named checks


def _report(
    check: str,
    T: Truncation,
    *,
    m: int | None = None,
    samples: int = 0,
    seed: int | None = None,
    passed: bool,
    started: float,
    **extra,
) -> dict:
    out = {
        "check": check,
        "p": T.p,
        "n": T.n,
        "m": m,
        "dim": T.dim,
        "samples": samples,
        "seed": seed,
        "pass": bool(passed),
        "elapsedMs": int((time.perf_counter() - started) * 1000),
    }
    out.update(extra)
    return out


def _value_key(u: MixedValue):
    if isinstance(u, CMarker):
        return ("marker", u.index, u.coeff)
    return tuple(sorted(u.terms.items()))


def check_lemma51(
    n: int = 7,
    p: int = 5,
    samples: int = 100,
    max_weight: int = 6,
    seed: int = DEFAULT_SEED,
) -> dict:
    """ad(z)^2 = 0, and ad(z) ad(w) ad(z) = 0 for simple products w.

    The products are enumerated exhaustively through weight three over the
    letters z, c_1..c_3 (plus every weight-two pair over all letters), then
    topped up with seeded random trees up to ``max_weight``.  Distinct trees
    with the same value are checked once.
    """
    started = time.perf_counter()
    T = build_truncation(n, p)
    ok = not linalg.matmul(T.ad_z, T.ad_z, p).any()

    letters = [leaf_z()] + [leaf_c(k) for k in range(1, n + 1)]
    short = letters[: min(n, 3) + 1]
    trees = list(letters)
    trees += [br(a, b) for a in letters for b in letters]
    trees += [left_normed(a, b, c) for a in short for b in short for c in short]
    trees.append(left_normed(*short))  # [z, c_1, c_2, c_3]
    rng = random.Random(seed)
    for _ in range(samples):
        trees.append(random_tree(rng, rng.randint(2, max_weight), n))

    seen: set = set()
    for t in trees:
        u = lie_value(t)
        key = _value_key(u)
        if key in seen:
            continue
        seen.add(key)
        mid = T.ad_matrix(u)
        if mid.any() and T.chain(T.ad_z, mid, T.ad_z).any():
            ok = False
    return _report(
        "lemma5.1", T, samples=samples, seed=seed, passed=ok, started=started
    )


def check_lemma52(
    n: int = 7,
    p: int = 5,
    samples: int = 100,
    max_weight: int = 6,
    seed: int = DEFAULT_SEED,
) -> dict:
    """Every sampled commutator word w satisfies w = 1 + ad(w_Lie).

    Letters and all weight-two commutators are checked exhaustively; the
    sampled part draws random trees up to ``max_weight``.
    """
    started = time.perf_counter()
    T = build_truncation(n, p)
    letters = [leaf_z()] + [leaf_c(k) for k in range(1, n + 1)]
    trees = list(letters)
    trees += [br(a, b) for a in letters for b in letters]
    rng = random.Random(seed)
    for _ in range(samples):
        trees.append(random_tree(rng, rng.randint(2, max_weight), n))

    ok = True
    for t in trees:
        M, _ = T.group_value(t)
        expected = (T.identity + T.ad_matrix(lie_value(t))) % p
        if not (M == expected).all():
            ok = False
    return _report(
        "lemma5.2", T, samples=samples, seed=seed, passed=ok, started=started
    )


def _is_identity(T: Truncation, M: np.ndarray) -> bool:
    return not ((M - T.identity) % T.p).any()


def check_prop53(
    n: int = 7,
    p: int = 5,
    samples: int = 100,
    seed: int = DEFAULT_SEED,
) -> dict:
    """Four behaviours of the generated group, sampled.

    1. commutators in which some c_k occurs twice collapse to the identity;
    2. [u, v] = 1 whenever u and v each carry at least two z-leaves;
    3. every generator has order p;
    4. commutators of type >= 2 or <= -2 (distinct c's) are the identity.
    """
    started = time.perf_counter()
    T = build_truncation(n, p)
    rng = random.Random(seed)
    per = max(1, -(-samples // 3))  # three sampled items; (3) is deterministic
    ok = True
    used = 0

    # (1) repeated c-leaf; a narrow alphabet makes repeats the common case
    named = br(
        br(leaf_z(), leaf_c(1)),
        left_normed(leaf_z(), leaf_c(1), leaf_c(2)),
    )
    repeated = [named]
    while len(repeated) < per:
        t = random_tree(rng, rng.randint(2, 6), min(n, 3))
        cs = [l[1] for l in tree_letters(t) if l[0] == "c"]
        if len(cs) > len(set(cs)):
            repeated.append(t)
    for t in repeated:
        used += 1
        if not _is_identity(T, T.group_value(t)[0]):
            ok = False

    # (2) both factors z-heavy
    def z_heavy() -> Tree:
        while True:
            t = random_tree(rng, rng.randint(3, 6), n, z_bias=0.7)
            if sum(1 for l in tree_letters(t) if l[0] == "z") >= 2:
                return t

    for _ in range(per):
        used += 1
        if not _is_identity(T, T.group_value(br(z_heavy(), z_heavy()))[0]):
            ok = False

    # (3) generator orders
    for M in [T.x, *T.a.values()]:
        if not _is_identity(T, matrix_power(T, M, p)):
            ok = False

    # (4) type outside [-1, 1], all c-leaves distinct
    wide = 0
    while wide < per:
        t = random_tree(rng, rng.randint(2, 7), n, z_bias=0.35)
        cs = [l[1] for l in tree_letters(t) if l[0] == "c"]
        zs = sum(1 for l in tree_letters(t) if l[0] == "z")
        if len(cs) != len(set(cs)):
            continue
        if -1 <= len(cs) - 2 * zs <= 1:
            continue
        wide += 1
        used += 1
        if not _is_identity(T, T.group_value(t)[0]):
            ok = False

    return _report(
        "prop5.3", T, samples=used, seed=seed, passed=ok, started=started
    )


def check_orders(n: int = 7, p: int = 5) -> dict:
    """(1+ad(z))^p and every (1+ad(c_k))^p equal the identity."""
    started = time.perf_counter()
    T = build_truncation(n, p)
    ok = all(
        _is_identity(T, matrix_power(T, M, p)) for M in [T.x, *T.a.values()]
    )
    return _report("orders", T, passed=ok, started=started)


def _engel_triple(T: Truncation, g: np.ndarray, g_inv: np.ndarray) -> bool:
    """[g, x, x, x] = identity."""
    c = T.chain(g_inv, T.x_inv, g, T.x)
    for _ in range(2):
        c = T.chain(T.unipotent_inverse(c), T.x_inv, c, T.x)
    return _is_identity(T, c)


def _a_product(T: Truncation, r: int) -> tuple[np.ndarray, np.ndarray]:
    g = T.chain(*(T.a[k] for k in range(1, r + 1))) if r else T.identity
    gi = (
        T.chain(*(T.a_inv[k] for k in range(r, 0, -1))) if r else T.identity
    )
    return g, gi


def check_engel(
    n: int = 7,
    p: int = 5,
    samples: int = 200,
    max_len: int = 20,
    seed: int = DEFAULT_SEED,
    r: int | None = None,
) -> dict:
    """z acts as a left 3-Engel element: [g, x, x, x] = 1.

    With ``r`` given, g is the single product (1+ad(c_1))..(1+ad(c_r));
    otherwise g runs over seeded random words of length up to ``max_len``
    in the generators and their inverses.
    """
    started = time.perf_counter()
    T = build_truncation(n, p)
    if r is not None:
        if not 0 < r <= n:
            raise ValueError(f"need 1 <= r <= n, got r={r}")
        ok = _engel_triple(T, *_a_product(T, r))
        return _report(
            "engel", T, passed=ok, started=started, r=r
        )
    rng = random.Random(seed)
    pool = [(T.x, T.x_inv)] + [(T.a[k], T.a_inv[k]) for k in range(1, n + 1)]
    ok = True
    for _ in range(samples):
        g, gi = T.identity, T.identity
        for _ in range(rng.randint(1, max_len)):
            A, Ai = rng.choice(pool)
            if rng.random() < 0.5:
                A, Ai = Ai, A
            g = linalg.matmul(g, A, p)
            gi = linalg.matmul(Ai, gi, p)
        if not _engel_triple(T, g, gi):
            ok = False
    return _report(
        "engel", T, samples=samples, seed=seed, passed=ok, started=started
    )


def check_prop22(r: int, n: int | None = None, p: int = 5) -> dict:
    """[a_1 a_2 .. a_r, x, x, x] = identity for the c-generator product."""
    started = time.perf_counter()
    if n is None:
        n = r + 3
    if not 0 < r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    T = build_truncation(n, p)
    ok = _engel_triple(T, *_a_product(T, r))
    return _report("prop2.2", T, passed=ok, started=started, r=r)


def witness_tree(m: int) -> Tree:
    """Left-normed commutator of [x,a1,a2,a3], [x,a4,a5], .., [x,a_2m,a_2m+1]."""
    factors = [left_normed(leaf_z(), leaf_c(1), leaf_c(2), leaf_c(3))]
    for j in range(2, m + 1):
        factors.append(
            left_normed(leaf_z(), leaf_c(2 * j), leaf_c(2 * j + 1))
        )
    return left_normed(*factors)


def check_thm54(m: int, p: int = 5) -> dict:
    """The depth-m witness is a nontrivial element 1 + ad(w) with [w, z] not in J.

    Nontriviality of every such witness is what rules out a nilpotency
    class bound; the final bracket with z is the step that feeds the next
    depth, so its survival outside J is checked as well.
    """
    started = time.perf_counter()
    if m < 1:
        raise ValueError("depth m must be positive")
    if m > 3:
        raise ResourceCapError(
            "witness matrices are materialized for m <= 3 only (n = 2m+1)"
        )
    n = 2 * m + 1
    T = build_truncation(n, p)
    tree = witness_tree(m)
    w = lie_value(tree)
    G, _ = T.group_value(tree)
    ok = not _is_identity(T, G)
    if (G != (T.identity + T.ad_matrix(w)) % p).any():
        ok = False
    if T.ctx.contains(w):  # witness itself must survive J
        ok = False
    if T.ctx.contains(w.ad_z()):  # and so must its bracket with z
        ok = False
    return _report("thm5.4", T, m=m, passed=ok, started=started)
