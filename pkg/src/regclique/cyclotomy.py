"""Cyclotomic classes and cyclotomic numbers of GF(q).

For a fixed primitive element rho and n | q-1, the class of index i collects
the nonzero elements whose discrete log is congruent to i mod n, and the
cyclotomic number c(a, b) counts elements x of class a with x + 1 of class b.
Everything here is computed straight from these definitions; the computations
double as the oracle against which the package's identity checks are run.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BadCongruence, IndexOutOfRange, WrongN
from .fields import Field, PrimitiveData, dlog


@dataclass(frozen=True)
class CyclotomicContext:
    """A field with primitive data and a class count n dividing q-1.

    r is the half-class-size parameter with q = 2nr + 1 (each class then has
    2r elements); it is only set when 2n divides q-1, and operations that
    need it check this explicitly.
    """

    field: Field
    pd: PrimitiveData
    n: int
    r: int | None


def make_context(field: Field, pd: PrimitiveData, n: int) -> CyclotomicContext:
    if n < 1 or (field.q - 1) % n != 0:
        raise BadCongruence(f"n = {n} does not divide q - 1 = {field.q - 1}")
    r = (field.q - 1) // (2 * n) if (field.q - 1) % (2 * n) == 0 else None
    return CyclotomicContext(field=field, pd=pd, n=n, r=r)


def class_index(ctx: CyclotomicContext, x: int) -> int:
    """Index i in {0, ..., n-1} of the class containing x."""
    return dlog(ctx.pd, x) % ctx.n


def cyclotomic_class(ctx: CyclotomicContext, i: int) -> frozenset:
    """All (q-1)/n elements whose discrete log is congruent to i mod n."""
    if not 0 <= i < ctx.n:
        raise IndexOutOfRange(f"class index {i} not in [0, {ctx.n})")
    return frozenset(int(x) for x in ctx.pd.exp[i::ctx.n])


def _plus_one(ctx: CyclotomicContext, codes: np.ndarray) -> np.ndarray:
    # adding the field element 1 only touches coefficient 0 of the code
    f = ctx.field
    if f.a == 1:
        return (codes + 1) % f.p
    c0 = codes % f.p
    return codes - c0 + (c0 + 1) % f.p


def cyclotomic_number(ctx: CyclotomicContext, a: int, b: int) -> int:
    """|(C(a) + 1) & C(b)|, by iterating C(a) and classifying each shift."""
    if not (0 <= a < ctx.n and 0 <= b < ctx.n):
        raise IndexOutOfRange(f"pair ({a}, {b}) not in [0, {ctx.n})^2")
    shifted = _plus_one(ctx, ctx.pd.exp[a :: ctx.n])
    shifted = shifted[shifted != 0]
    return int(np.count_nonzero(ctx.pd.log[shifted] % ctx.n == b))


def cyclotomic_table(ctx: CyclotomicContext) -> np.ndarray:
    """Full n x n table of cyclotomic numbers, one pass over the nonzero elements."""
    n = ctx.n
    js = np.arange(ctx.field.q - 1, dtype=np.int64)
    shifted = _plus_one(ctx, ctx.pd.exp)
    keep = shifted != 0
    a = js[keep] % n
    b = ctx.pd.log[shifted[keep]] % n
    return np.bincount(a * n + b, minlength=n * n).reshape(n, n)


def c3_parity_even(ctx: CyclotomicContext) -> bool:
    """True iff the third cyclotomic number c(1, 2) is even.

    Decided without counting: c(1, 2) is even exactly when the element 2
    lies in class 0.
    """
    if ctx.n != 3:
        raise WrongN(f"parity criterion needs n = 3, got n = {ctx.n}")
    if ctx.field.q % 6 != 1:
        raise BadCongruence(f"q = {ctx.field.q} is not 1 mod 6")
    two = ctx.field.add(1, 1)
    return class_index(ctx, two) == 0
