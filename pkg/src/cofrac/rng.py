"""SplitMix64, the seeded generator behind every randomized routine.

Python's own ``random`` module is avoided on purpose: its stream is tied
to the interpreter, while SplitMix64 is a dozen lines in any language and
gives bit-identical graphs everywhere.

A Bernoulli trial with rational probability ``p`` draws ``u = next() >> 11``
(a uniform 53-bit integer) and succeeds iff ``u < p * 2**53``, compared
exactly as ``u * p.denominator < p.numerator * 2**53``.
"""

from fractions import Fraction

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def next_u53(self):
        return self.next_u64() >> 11

    def bernoulli(self, p):
        p = Fraction(p)
        return self.next_u53() * p.denominator < p.numerator << 53

    def below(self, bound):
        """Uniform integer in ``[0, bound)`` by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def shuffle(self, items):
        """In-place Fisher-Yates, walking from the end."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def sample(self, population, k):
        pool = list(population)
        if not 0 <= k <= len(pool):
            raise ValueError("sample size out of range")
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
