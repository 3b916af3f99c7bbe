# SPDX-License-Identifier: Apache-2.0

"""Writes a passive 16-port S-parameter fixture (8 transmit, 8 receive ports).

The transfer block is the elementwise square of a known free-space channel
between two coaxial 8-element rings, so sqrt() recovers that channel.
"""

import sys

import numpy as np

C = 3e8
FREQ = 5.8e9


def main(path):
    lam = C / FREQ
    k = 2 * np.pi / lam
    n = 8
    radius = 2 * lam / np.pi
    dist = 20 * lam
    ang = 2 * np.pi * np.arange(n) / n
    tx = np.stack([radius * np.cos(ang), radius * np.sin(ang), np.zeros(n)], axis=1)
    rx = np.stack([radius * np.cos(ang), radius * np.sin(ang), np.full(n, dist)], axis=1)
    p = np.linalg.norm(rx[:, None, :] - tx[None, :, :], axis=2)
    h = lam / (4 * np.pi * p) * np.exp(1j * k * p) * 20.0
    s = np.zeros((2 * n, 2 * n), dtype=complex)
    rng = np.random.default_rng(20240611)
    refl = 0.05 * (rng.standard_normal(2 * n) + 1j * rng.standard_normal(2 * n))
    s[np.arange(2 * n), np.arange(2 * n)] = refl
    s[n:, :n] = h * h
    s[:n, n:] = (h * h).T
    with open(path, "w", encoding="ascii") as out:
        out.write("# synthetic passive fixture: 8 tx + 8 rx ports, coaxial rings 20 lambda apart\n")
        out.write(f"ports={2 * n}, freq_hz={FREQ!r}, format=ri\n")
        for row in s:
            out.write(",".join(f"{float(v.real)!r},{float(v.imag)!r}" for v in row) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
