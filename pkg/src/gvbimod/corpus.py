"""Deterministic test corpora: the standard objects of a local algebra
(simple, regular/projective, dual-regular/injective), seeded enlargements,
and a bank of short exact sequences for flatness probing."""

from __future__ import annotations

import random

from .algebras import Algebra, radical
from .bimodules import (
    Bimodule,
    conjugate,
    direct_sum,
    dual_bimodule,
    dual_map,
    quotient_bimodule,
    regular_bimodule,
    simple_module_of_local,
    sub_bimodule,
)
from .linalg import Matrix
from .tensor import ShortExactSequence


def standard_corpus(a: Algebra):
    """Named standard objects: the simple module S, the projective P
    (regular bimodule) and the injective I = P*.  Over the examples in
    scope these are exactly the indecomposables of interest."""
    p = regular_bimodule(a)
    return [("S", simple_module_of_local(a)), ("P", p), ("I", dual_bimodule(p))]


def corpus_objects(a: Algebra):
    return [m for _, m in standard_corpus(a)]


def extended_corpus(a: Algebra, seed: int = 0, extra: int = 2):
    """Standard corpus plus seeded decomposables: direct sums transported
    along random invertible changes of basis, exercising generic
    coordinates."""
    rng = random.Random(seed)
    out = corpus_objects(a)
    base = out[:]
    f = a.field
    for _ in range(extra):
        i = rng.randrange(len(base))
        j = rng.randrange(len(base))
        m = direct_sum([base[i], base[j]])
        for _ in range(20):
            g = Matrix(f, m.dim, m.dim,
                       [f.sample(rng, 3) for _ in range(m.dim * m.dim)])
            if g.inverse() is not None:
                m = conjugate(m, g)
                break
        out.append(m)
    return out


def ses_bank(a: Algebra):
    """Short exact sequences for exactness probing: the radical sequence of
    the projective cover, its dual, and a split sequence."""
    p = regular_bimodule(a)
    s = simple_module_of_local(a)
    rad = radical(a)
    # radical is left/right stable in the regular bimodule, as a subspace of A
    sub, inc = sub_bimodule(p, rad)
    quo, proj = quotient_bimodule(p, rad)
    radical_seq = ShortExactSequence(inc, proj).validate()
    dual_seq = ShortExactSequence(dual_map(proj), dual_map(inc)).validate()
    sp = direct_sum([s, p])
    f = a.field
    split_inc = Matrix.zeros(f, sp.dim, s.dim)
    for i in range(s.dim):
        split_inc.entries[i * s.dim + i] = f.one
    split_proj = Matrix.zeros(f, p.dim, sp.dim)
    for i in range(p.dim):
        split_proj.entries[i * sp.dim + s.dim + i] = f.one
    from .bimodules import BimoduleMap
    split_seq = ShortExactSequence(BimoduleMap(s, sp, split_inc),
                                   BimoduleMap(sp, p, split_proj)).validate()
    return [radical_seq, dual_seq, split_seq]
