"""Shared helpers for the test suite."""

import random

from cartcodes import Grid, MultiPoly


def random_poly(field, n, max_deg, rng: random.Random, max_terms=6, caps=None, nonzero=False):
    """Random sparse polynomial of total degree <= max_deg.

    caps, when given, bounds the exponent in variable i by caps[i] - 1
    (normal-form shape).  With nonzero the result is never the zero
    polynomial.
    """
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exps = []
            remaining = max_deg
            for i in range(n):
                hi = remaining if caps is None else min(remaining, caps[i] - 1)
                a = rng.randint(0, hi) if hi > 0 else 0
                exps.append(a)
                remaining -= a
            coeff = rng.randrange(field.q)
            key = tuple(exps)
            terms[key] = field.add(terms.get(key, 0), coeff)
        poly = MultiPoly(field, n, terms)
        if not nonzero or not poly.is_zero():
            return poly


def random_grid(field, cards, rng: random.Random) -> Grid:
    """Grid whose coordinate sets are random subsets of the stated sizes."""
    sets = [sorted(rng.sample(range(field.q), c)) for c in cards]
    return Grid(field, sets)


def span_words(field, rows):
    """All field combinations of the given rows, as tuples (small cases only)."""
    words = {tuple(0 for _ in rows[0])}
    for row in rows:
        nxt = set()
        for w in words:
            for c in range(field.q):
                nxt.add(tuple(field.add(x, field.mul(c, y)) for x, y in zip(w, row)))
        words = nxt
    return words
