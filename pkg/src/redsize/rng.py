"""SplitMix64, a tiny portable generator used for every random choice here.

Reference constants (Steele, Lea, Flood 2014; Vigna's public-domain C code)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all arithmetic mod 2**64. The seed is used as the initial state (reduced mod
2**64). A uniform index in ``range(m)`` is drawn as ``(next() * m) >> 64``.
Per-trial seeds of an ensemble are the successive outputs of a SplitMix64
seeded with the master seed. Any implementation following these three rules
reproduces the walks bit for bit.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform integer in ``range(m)`` by multiply-shift."""
        if m <= 0:
            raise ValueError("m must be positive")
        return (self.next() * m) >> 64

    def choice(self, items):
        return items[self.below(len(items))]


def derive_seeds(master: int, count: int) -> list[int]:
    gen = SplitMix64(master)
    return [gen.next() for _ in range(count)]
