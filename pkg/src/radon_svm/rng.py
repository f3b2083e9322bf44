"""Per-trial random streams.

Every trial gets its own Philox-4x64 counter-based generator keyed by
``(seed, trial_index, stream)`` through ``numpy.random.SeedSequence``, so a
trial's draws do not depend on which other trials ran, in what order, or on
how many workers. Gaussians come from the Box-Muller transform applied to the
generator's uniform doubles.
"""

from __future__ import annotations

import zlib

import numpy as np

_MASK64 = (1 << 64) - 1


def trial_generator(seed: int, trial_index: int, stream: str = "census") -> np.random.Generator:
    key = [int(seed) & _MASK64, int(trial_index) & _MASK64, zlib.crc32(stream.encode())]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(key)))


def box_muller(gen: np.random.Generator, size: int) -> np.ndarray:
    """``size`` independent standard normals."""
    k = (size + 1) // 2
    u1 = 1.0 - gen.random(k)  # (0, 1], keeps the log finite
    u2 = gen.random(k)
    r = np.sqrt(-2.0 * np.log(u1))
    z = np.empty(2 * k)
    z[0::2] = r * np.cos(2.0 * np.pi * u2)
    z[1::2] = r * np.sin(2.0 * np.pi * u2)
    return z[:size]


def gaussian(gen: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    return box_muller(gen, int(np.prod(shape))).reshape(shape)


def uniform_ball(gen: np.random.Generator, m: int, n: int) -> np.ndarray:
    """``m`` points uniform in the closed unit ball of R^n."""
    g = gaussian(gen, (m, n))
    norms = np.linalg.norm(g, axis=1, keepdims=True)
    norms[norms == 0] = 1.0
    radius = gen.random((m, 1)) ** (1.0 / n)
    return g / norms * radius
