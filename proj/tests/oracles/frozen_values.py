# SPDX-License-Identifier: Apache-2.0
#
# Copyright 2026 The mmwave-indoor Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent oracles for the frozen expected values used by the unit tests.

Run with: python3 tests/oracles/frozen_values.py
Each value printed here is copied verbatim into the corresponding C++ test.
"""
import math

import numpy as np
from scipy import integrate


def hex_count(side, delta):
    # Brute-force enumeration of the triangular lattice centred on the venue.
    c = side / 2.0
    row = delta * math.sqrt(3) / 2
    eps = 1e-9
    n = 0
    pts = []
    jmax = int(side / row) + 2
    imax = int(side / delta) + 2
    for j in range(-jmax, jmax + 1):
        y = c + j * row
        off = delta / 2 if j % 2 else 0.0
        for i in range(-imax, imax + 1):
            x = c + off + i * delta
            if -eps <= x <= side + eps and -eps <= y <= side + eps:
                pts.append((x, y))
    return pts


def main_lobe(bw, s):
    c = math.cos(bw / 2)
    return (2 - s * (1 + c)) / (1 - c)


def main_lobe_by_solid_angle(bw, s):
    # Numeric solid-angle normalisation: integrate the two-level pattern over
    # the sphere and solve the unit-average condition for the main-lobe level.
    cap, _ = integrate.quad(lambda t: 2 * math.pi * math.sin(t), 0, bw / 2)
    sph = 4 * math.pi
    return (1 - s * (sph - cap) / sph) / (cap / sph)


def fr_pdf(r, s):
    return 2 * math.pi * r / s**2 - 8 * r**2 / s**3 + 2 * r**3 / s**4


def p1_r_domain(d, w, ha, hb, s):
    upper = min(s, d * hb / ha)
    if upper <= 0:
        return 0.0
    f = lambda r: (2 * math.atan(w / (2 * r)) / (2 * math.pi)) * fr_pdf(r, s)
    v, _ = integrate.quad(f, 0, upper, epsabs=0, epsrel=1e-12, limit=500)
    return v


def p1_monte_carlo(d, w, ha, hb, s, n, seed):
    rng = np.random.default_rng(seed)
    hits = 0
    chunk = 10**6
    done = 0
    while done < n:
        m = min(chunk, n - done)
        ue = rng.uniform(0, s, size=(m, 2))
        body = rng.uniform(0, s, size=(m, 2))
        theta = rng.uniform(0, 2 * math.pi, size=m)
        r = np.hypot(*(ue - body).T)
        phi = 2 * np.arctan(w / (2 * r))
        hits += int(np.count_nonzero((d > r * ha / hb) & (theta < phi)))
        done += m
    p = hits / n
    return p, math.sqrt(p * (1 - p) / n)


if __name__ == "__main__":
    for delta in (400, 200, 20):
        pts = hex_count(400, delta)
        print(f"hex side=400 delta={delta}: N={len(pts)} "
              f"ideal={400**2 / (math.sqrt(3) / 2 * delta**2):.3f}")
    for deg in (180, 90, 28, 45):
        bw = math.radians(deg)
        print(f"m({deg} deg, 0.1) = {main_lobe(bw, 0.1):.15g} "
              f"(solid-angle oracle {main_lobe_by_solid_angle(bw, 0.1):.15g})")
    print("r_m^A(10, 28deg) =", repr(10 * math.tan(math.radians(14))))
    print("d_U(10, 45deg) =", repr(10 / math.tan(math.radians(22.5))))
    print("r_m^U(10, 45deg) =", repr(10 * math.tan(math.radians(22.5))))
    print("shadow(0.3, 0.4) =", repr(2 * math.atan(0.4 / 0.6)))
    print("p_self far (r0=0.3) =", repr(math.atan(2 / 3) / math.pi))
    print("truncated mass =", repr(math.pi - 8 / 3 + 0.5))
    print("noise dBm (2GHz, 9dB) =", repr(-174 + 10 * math.log10(2e9) + 9),
          "mW =", repr(10 ** ((-174 + 10 * math.log10(2e9) + 9) / 10)))
    print("path gain r=10 hand LOS =", repr(10 ** (-6.34) * 10 ** (-1.72)))
    for d in (5, 10, 20, 50, 100, 200):
        print(f"p1 r-domain d={d}: {p1_r_domain(d, 0.4, 10, 0.4, 400)!r}")
    p, se = p1_monte_carlo(50, 0.4, 10, 0.4, 400, 10**7, 20261015)
    print(f"p1 Monte Carlo d=50 (1e7 samples): {p!r} +- {se!r}")
    # Single-link budget: UE under the lone AP, B = H = 1, hand LOS.
    m_ap = main_lobe(math.radians(28), 0.1)
    m_ue = main_lobe(math.radians(45), 0.1)
    prx = 100 * m_ap * m_ue * 10 ** (-6.34) * 10 ** (-1.72)
    noise = 10 ** ((-174 + 10 * math.log10(2e9) + 9) / 10)
    print("single-link P_r mW =", repr(prx), "SNR =", repr(prx / noise))
    print("ASE single link delta=400 =",
          repr(math.log2(1 + prx / noise) / (math.sqrt(3) / 2 * 400**2)))
