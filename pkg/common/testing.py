"""
Test helpers shared by the test suites
"""
import random
from fractions import Fraction


def seeded_random(seed: int = 20230117) -> random.Random:
    return random.Random(seed)


def random_k_entries(rng: random.Random, p: int, spread: int = 3):
    """
    Return entries (a, b, c, d) of a random element of GL2(Z_p) with
    small rational entries whose denominators are prime to p.
    """
    while True:
        entries = []
        for _ in range(4):
            den = rng.choice([d for d in range(1, p + 4) if d % p != 0])
            num = rng.randint(-spread * p, spread * p)
            entries.append(Fraction(num, den))
        a, b, c, d = entries
        det = a * d - b * c
        if det != 0 and det.numerator % p != 0:
            return a, b, c, d
