"""Deterministic seeded sampling of bounded rationals and algebra elements.

All verification randomness flows through Sampler so that every witness can
be replayed from (seed, trial index).
"""

from __future__ import annotations

import random

from .scalars import rat
from .matrices import Mat, inverse


class Sampler:
    def __init__(self, seed, num_bound=20, den_bound=10):
        self.rnd = random.Random(seed)
        self.num_bound = num_bound
        self.den_bound = den_bound

    def rational(self):
        num = self.rnd.randint(-self.num_bound, self.num_bound)
        den = 1 if self.rnd.random() < 0.5 else self.rnd.randint(
            1, self.den_bound)
        return rat(num, den)

    def nonzero_rational(self):
        while True:
            v = self.rational()
            if v:
                return v

    def small_rational(self):
        return rat(self.rnd.randint(-3, 3), self.rnd.randint(1, 3))

    def algebra_element(self, ctx):
        return ctx.from_coordinates([self.rational()
                                     for _ in range(ctx.dim)])

    def distinct_square_free(self, count):
        """count nonzero values with a_i != +-a_j for i != j."""
        vals = []
        squares = set()
        while len(vals) < count:
            v = self.nonzero_rational()
            if v * v not in squares:
                squares.add(v * v)
                vals.append(v)
        return vals

    def group_element(self, ctx):
        """Rational point of the isometry group of ctx (so) or an invertible
        matrix (gl), via the Cayley transform."""
        from .matrices import det
        ident = Mat.identity(ctx.n)
        while True:
            a = ctx.from_coordinates([self.small_rational()
                                      for _ in range(ctx.dim)])
            if det(ident + a) and det(ident - a):
                return (ident - a) * inverse(ident + a)

    def subgroup_element(self, ctx):
        """Rational point of K inside the group of ctx, lifted from one
        level down the chain."""
        return ctx.group_up(self.group_element(ctx.child))

    def span_element(self, basis, nonzero=False):
        n = basis[0].n
        while True:
            acc = Mat.zeros(n)
            for b in basis:
                c = self.rational()
                if c:
                    acc = acc + c * b
            if acc.is_zero() and nonzero:
                continue
            return acc
