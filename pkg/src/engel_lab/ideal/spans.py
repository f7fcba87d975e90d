"""Two routes to the component J inside each degree slice, over F_p.

``IdealContext`` caches, per degree (m, support):

* the slice itself (column order for matrices);
* the *explicit* span: unit vectors on every word classified X_MINUS_Z,
  plus the relator-family rows projected to the survivor coordinates;
* the *closure* span: the ideal generated by the literal violators --
  words of type outside [-1, 1] (z itself excepted), words with a first
  head of size >= 3, and words with a size-3 tail block -- swept up the
  degree lattice through the derivations ad_c and ad_z.

The closure route never consults the shape table or the families, so
agreement of the two RREFs degree by degree is a genuine two-route check.

Storage note: X_MINUS_Z words are pivots with unit rows in both routes, so
the explicit span keeps only the RREF over survivor coordinates; the full
RREF is assembled on demand by scattering those rows among the units.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .. import linalg
from ..core.elements import LieElt, ad_c_word, ad_z_word
from ..core.words import Word, enumerate_basis, multidegree
from .classify import Shape, classify
from .families import relator_instances

Degree = tuple[int, tuple[int, ...]]


class SliceData:
    __slots__ = ("degree", "words", "col", "z_words", "z_col", "xz_cols")

    def __init__(self, degree: Degree):
        m, s = degree
        self.degree = degree
        self.words = enumerate_basis(m, s)
        self.col = {w: j for j, w in enumerate(self.words)}
        self.z_words = [w for w in self.words if classify(w) is not Shape.X_MINUS_Z]
        self.z_col = {w: j for j, w in enumerate(self.z_words)}
        self.xz_cols = [j for j, w in enumerate(self.words) if w not in self.z_col]

    def vector(self, terms: dict[Word, int], p: int) -> np.ndarray:
        v = np.zeros(len(self.words), dtype=np.int64)
        for w, c in terms.items():
            v[self.col[w]] = c % p
        return v

    def z_vector(self, terms: dict[Word, int], p: int) -> np.ndarray:
        """Project onto survivor coordinates (X_MINUS_Z words dropped)."""
        v = np.zeros(len(self.z_words), dtype=np.int64)
        for w, c in terms.items():
            j = self.z_col.get(w)
            if j is not None:
                v[j] = c % p
        return v


class ExplicitSpan:
    """Units on X_MINUS_Z plus an RREF over the survivor coordinates."""

    __slots__ = ("slice", "R", "pivots", "p")

    def __init__(self, sl: SliceData, R: np.ndarray, pivots: list[int], p: int):
        self.slice = sl
        self.R = R
        self.pivots = pivots
        self.p = p

    @property
    def quotient_dim(self) -> int:
        return len(self.slice.z_words) - len(self.pivots)

    def quotient_words(self) -> list[Word]:
        piv = set(self.pivots)
        return [w for j, w in enumerate(self.slice.z_words) if j not in piv]

    def z_residue(self, zvec: np.ndarray) -> np.ndarray:
        return linalg.reduce_rows(zvec.reshape(1, -1), self.R, self.pivots, self.p)[0]

    def contains(self, terms: dict[Word, int]) -> bool:
        return not self.z_residue(self.slice.z_vector(terms, self.p)).any()

    def quotient_coords(self, terms: dict[Word, int]) -> np.ndarray:
        res = self.z_residue(self.slice.z_vector(terms, self.p))
        piv = set(self.pivots)
        free = [j for j in range(len(self.slice.z_words)) if j not in piv]
        return res[free]

    def full_rref(self) -> tuple[np.ndarray, list[int]]:
        """Assemble the canonical RREF over all slice coordinates."""
        sl = self.slice
        n = len(sl.words)
        zpos = [sl.col[w] for w in sl.z_words]
        rows: list[tuple[int, np.ndarray]] = []
        for j in sl.xz_cols:
            u = np.zeros(n, dtype=np.int64)
            u[j] = 1
            rows.append((j, u))
        for i, jz in enumerate(self.pivots):
            u = np.zeros(n, dtype=np.int64)
            u[zpos] = self.R[i]
            rows.append((zpos[jz], u))
        rows.sort(key=lambda t: t[0])
        if not rows:
            return np.zeros((0, n), dtype=np.int64), []
        return np.array([r for _, r in rows]), [j for j, _ in rows]


class IdealContext:
    """Caches slices, explicit spans and closure spans for one prime."""

    def __init__(self, p: int):
        self.p = p
        self._slices: dict[Degree, SliceData] = {}
        self._explicit: dict[Degree, ExplicitSpan] = {}
        self._closure: dict[Degree, tuple[np.ndarray, list[int]]] = {}

    # -- slices -------------------------------------------------------------

    def slice(self, m: int, support: Iterable[int]) -> SliceData:
        d = (m, tuple(sorted(support)))
        if d not in self._slices:
            if m >= 2:
                # crude size guard before materialising a big slice
                k = len(d[1])
                assert 2 ** (k + m) < linalg.MAX_DIM * 64, d
            self._slices[d] = SliceData(d)
        return self._slices[d]

    # -- explicit route -----------------------------------------------------

    def explicit(self, m: int, support: Iterable[int]) -> ExplicitSpan:
        d = (m, tuple(sorted(support)))
        if d in self._explicit:
            return self._explicit[d]
        sl = self.slice(*d)
        rows = [sl.z_vector(r, self.p) for _, r in relator_instances(*d)]
        if rows:
            R, piv = linalg.rref(np.array(rows), self.p)
        else:
            R = np.zeros((0, len(sl.z_words)), dtype=np.int64)
            piv = []
        span = ExplicitSpan(sl, R, piv, self.p)
        self._explicit[d] = span
        return span

    # -- closure route ------------------------------------------------------

    def closure(self, m: int, support: Iterable[int]) -> tuple[np.ndarray, list[int]]:
        d = (m, tuple(sorted(support)))
        if d in self._closure:
            return self._closure[d]
        sl = self.slice(*d)
        n = len(sl.words)
        t = len(d[1]) - 2 * m
        if d == (1, ()):
            out = (np.zeros((0, 1), dtype=np.int64), [])  # z generates, never absorbed
        elif t <= -2 or t >= 2:
            out = linalg.identity_rref(n)  # every word is a literal violator
        else:
            out = linalg.rref_accumulate(self._closure_batches(d, sl), self.p, n)
        self._closure[d] = out
        return out

    def _closure_batches(self, d: Degree, sl: SliceData):
        m, s = d
        j0 = [
            j
            for j, w in enumerate(sl.words)
            if len(w) >= 2
            and (len(w[0]) >= 3 or any(len(b) == 3 for b in w[2:]))
        ]
        if j0:
            units = np.zeros((len(j0), len(sl.words)), dtype=np.int64)
            units[np.arange(len(j0)), j0] = 1
            yield units
        for kpos in range(len(s)):
            k = s[kpos]
            sub = s[:kpos] + s[kpos + 1 :]
            src = self.closure(m, sub)
            if len(src[1]) == 0:
                continue
            M = self._op_matrix(self.slice(m, sub), sl, lambda w: ad_c_word(w, k))
            yield linalg.matmul(src[0], M, self.p)
        if m >= 2:
            src = self.closure(m - 1, s)
            if len(src[1]):
                M = self._op_matrix(self.slice(m - 1, s), sl, ad_z_word)
                yield linalg.matmul(src[0], M, self.p)

    def _op_matrix(self, src: SliceData, dst: SliceData, op) -> np.ndarray:
        M = np.zeros((len(src.words), len(dst.words)), dtype=np.int64)
        for i, w in enumerate(src.words):
            for w2, c in op(w).items():
                M[i, dst.col[w2]] = c % self.p
        return M

    # -- membership and quotients ------------------------------------------

    def residue(self, e: LieElt) -> LieElt:
        """Survivor-coordinate residue of ``e`` against the explicit spans."""
        out: dict[Word, int] = {}
        for deg in sorted(e.degrees()):
            span = self.explicit(*deg)
            part = {w: c for w, c in e.terms.items() if multidegree(w) == deg}
            res = span.z_residue(span.slice.z_vector(part, self.p))
            for j in np.nonzero(res)[0]:
                out[span.slice.z_words[j]] = int(res[j])
        return LieElt(out)

    def contains(self, e: LieElt) -> bool:
        return not self.residue(e)


_contexts: dict[int, IdealContext] = {}


def get_context(p: int) -> IdealContext:
    if p not in _contexts:
        _contexts[p] = IdealContext(p)
    return _contexts[p]
