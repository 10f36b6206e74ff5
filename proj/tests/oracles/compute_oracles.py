"""Independent reference values for the C++ test suites.

Uses scipy's Bessel function and QUADPACK integrators, plus dense Riemann
sums, so that none of the frozen numbers share a code path with the library.
Run with `python3 tests/oracles/compute_oracles.py`; the printed values are
copied into the C++ tests.
"""
import math

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq
from scipy.special import j1

C0 = 299792458.0
MU0 = 1.25663706212e-6  # CODATA 2018
ETA0 = 376.730313668


def j1_series(x, terms=60):
    s, t = 0.0, x / 2.0
    for k in range(terms):
        s += t
        t *= -(x * x / 4.0) / ((k + 1) * (k + 2))
    return s


def cquad(f, a, b, limit=400):
    re = quad(lambda x: f(x).real, a, b, limit=limit, epsabs=1e-14, epsrel=1e-12)[0]
    im = quad(lambda x: f(x).imag, a, b, limit=limit, epsabs=1e-14, epsrel=1e-12)[0]
    return complex(re, im)


def monopole_terms(theta, H, a, lam, model="sin"):
    k = 2 * math.pi / lam
    if model == "sin":
        cur = lambda z: math.sin(k * (H - z))
    else:
        cur = lambda z: 1.0 - z / H
    e1 = 1j * k / (4 * math.pi) * math.sin(theta) * cquad(
        lambda z: cur(z) * np.exp(-1j * k * z * math.cos(theta)), 0.0, H)
    e2 = k * math.cos(theta) / 2 * cquad(
        lambda r: np.exp(-1j * k * r) * j1(k * r * math.sin(theta)), 0.05 * lam, a)
    return e1, e2


NORM_GRID = np.radians(np.arange(0, 90.0 + 1e-9, 0.25))


def ground_constant():
    t = [monopole_terms(th, 0.25, 2.0, 1.0) for th in NORM_GRID]
    return -max(abs(x[0]) for x in t) / max(abs(x[1]) for x in t)


J0 = ground_constant()


def monopole_cut(thetas, H, a, lam, model="sin"):
    ref = [sum_terms(th, H, a, lam, model) for th in NORM_GRID]
    i = int(np.argmax(np.abs(ref)))
    peak = ref[i]
    out = []
    for th in thetas:
        v = sum_terms(abs(th), H, a, lam, model) / peak
        out.append(-v if th < 0 else v)
    return np.array(out), math.degrees(NORM_GRID[i])


def sum_terms(th, H, a, lam, model="sin"):
    e1, e2 = monopole_terms(th, H, a, lam, model)
    return e1 + J0 * e2


def metrics(grid_deg, vals):
    mag = np.abs(vals)
    i = int(np.argmax(mag))
    tilt = grid_deg[i]
    if 0 < i < len(mag) - 1:
        y0, y1, y2 = mag[i - 1], mag[i], mag[i + 1]
        den = y0 - 2 * y1 + y2
        if den != 0:
            tilt += 0.5 * (y0 - y2) / den * (grid_deg[1] - grid_deg[0])
    lvl = 10 ** (-3 / 20) * mag[i]
    l = i
    while l > 0 and mag[l] >= lvl:
        l -= 1
    r = i
    while r < len(mag) - 1 and mag[r] >= lvl:
        r += 1
    def cross(p, q):
        return grid_deg[p] + (lvl - mag[p]) / (mag[q] - mag[p]) * (grid_deg[q] - grid_deg[p])
    bw = cross(r, r - 1) - cross(l, l + 1)
    return tilt, bw


def sidelobe_db(vals):
    """Highest local maximum outside the main lobe, grid ends included."""
    mag = np.abs(vals)
    i = int(np.argmax(mag))
    lo = i
    while lo > 0 and mag[lo - 1] <= mag[lo]:
        lo -= 1
    hi = i
    while hi < len(mag) - 1 and mag[hi + 1] <= mag[hi]:
        hi += 1
    peaks = []
    for j in range(len(mag)):
        if lo <= j <= hi:
            continue
        left = mag[j - 1] if j > 0 else -1.0
        right = mag[j + 1] if j < len(mag) - 1 else -1.0
        if (0 < j < len(mag) - 1 and mag[j] >= left and mag[j] >= right) or \
           (j in (0, len(mag) - 1) and mag[j] > max(left, right)):
            peaks.append(mag[j])
    return 20 * math.log10(max(peaks) / mag[i]) if peaks else -math.inf


def main():
    print("J1(1) =", repr(j1(1.0)), " series:", repr(j1_series(1.0)))
    z = brentq(j1_series, 3.5, 4.0, xtol=1e-15)
    print("first J1 zero (bisection on series) =", repr(z))
    print("ground-current constant J0 =", repr(J0))
    for x in (0.5, 5.0, 10.0, 16.9, 17.1, 20.0, 50.0, 123.4):
        print("  J1(%g) =" % x, repr(float(j1(x))))

    # Complex exponential integral.
    print("int_0^1 e^{j10x} =", (math.sin(10) + 1j * (1 - math.cos(10))) / 10)

    # Monopole peak at H = lam/4, a = 2 lam, via dense Riemann sum.
    lam = 1.0
    k = 2 * math.pi
    def riemann_terms(th, H, a, n=20000):
        z = (np.arange(n) + 0.5) * H / n
        e1 = 1j * k / (4 * math.pi) * math.sin(th) * np.sum(
            np.sin(k * (H - z)) * np.exp(-1j * k * z * math.cos(th))) * H / n
        r = 0.05 + (np.arange(n) + 0.5) * (a - 0.05) / n
        e2 = k * math.cos(th) / 2 * np.sum(
            np.exp(-1j * k * r) * j1(k * r * math.sin(th))) * (a - 0.05) / n
        return e1 + J0 * e2
    mags = [abs(riemann_terms(th, 0.25, 2.0)) for th in NORM_GRID]
    print("monopole argmax (H=lam/4, a=2lam, Riemann) deg =", math.degrees(NORM_GRID[int(np.argmax(mags))]))

    # Default-geometry pattern at 32.4 GHz, s2/s1 = 0.3, 0.01 deg grid.
    f = 32.4e9
    lam = C0 / f
    grid_deg = np.round(np.arange(-90, 90 + 1e-9, 0.01), 10)
    # The pattern is smooth; evaluate the monopole on a 0.05 deg grid and
    # interpolate the complex values onto the 0.01 deg grid.
    coarse = np.round(np.arange(-90, 90 + 1e-9, 0.05), 10)
    m, pk = monopole_cut(np.radians(coarse), 1.2e-3, 5e-3, lam)
    mi = np.interp(grid_deg, coarse, m.real) + 1j * np.interp(grid_deg, coarse, m.imag)
    slot = np.sin(math.pi / 2 * np.cos(np.radians(grid_deg)))
    tot = slot + 0.3 * mi
    tilt, bw = metrics(grid_deg, tot)
    print("default monopole peak deg =", pk)
    print("default s2=0.3 tilt_deg =", tilt, " beamwidth_deg =", bw)
    mag = np.abs(tot) / np.max(np.abs(tot))
    print("  |E|(-90 deg) normalized =", mag[0], " dB =", 20 * math.log10(mag[0]))
    print("  sll_db =", repr(sidelobe_db(tot)))

    # Two-lobe fixture: cos^2 main lobe at 0 deg plus a 0.316 lobe at 60 deg.
    fx = np.round(np.arange(-90, 90 + 1e-9, 0.5), 10)
    lobe = lambda c, w: np.exp(-((fx - c) / w) ** 2)
    fixture = lobe(0.0, 12.0) + 10 ** (-10 / 20) * lobe(60.0, 6.0)
    print("two-lobe fixture sll_db =", repr(sidelobe_db(fixture)))

    # Microstrip quantities for the default feed line.
    w, h, er = 0.24e-3, 0.1e-3, 4.4
    u = w / h
    eeff = (er + 1) / 2 + (er - 1) / 2 / math.sqrt(1 + 10 / u)
    print("eps_eff (Schneider) =", repr(eeff))
    lm = 1.98e-3
    print("f(raw 4.4) GHz =", C0 / (2 * lm * math.sqrt(4.4)) / 1e9)
    print("f(eff) GHz =", C0 / (2 * lm * math.sqrt(eeff)) / 1e9)

    f = 30e9
    k0 = 2 * math.pi * f / C0
    q = (eeff - 1) / (er - 1)
    ad = k0 * er * q * 0.02 / (2 * math.sqrt(eeff)) * 20 / math.log(10)
    print("alpha_d FR4 30 GHz dB/m =", repr(ad))

    if u >= 1:
        z0 = ETA0 / (math.sqrt(eeff) * (u + 1.393 + 0.667 * math.log(u + 1.444)))
    else:
        z0 = ETA0 / (2 * math.pi) / math.sqrt(eeff) * math.log(8 / u + u / 4)
    rs = math.sqrt(2 * math.pi * f * MU0 / (2 * 5.8e7))
    ac0 = rs / (z0 * w) * 20 / math.log(10)
    delta = 1 / math.sqrt(math.pi * f * MU0 * 5.8e7)
    K = 1 + 2 / math.pi * math.atan(1.4 * (1e-6 / delta) ** 2)
    print("Z0 =", z0, " alpha_c smooth dB/m =", repr(ac0), " K(1um) =", K, " alpha_c rough =", repr(ac0 * K))

    for tand, name in [(0.1, "FR4 tan0.1"), (0.0027, "RO4003")]:
        epsr = 4.4 if name.startswith("FR4") else 3.55
        a = math.pi * 50e9 * math.sqrt(epsr) * tand / C0 * 1.2e-3 * 20 / math.log(10)
        print("plane wave", name, "50 GHz 1.2 mm dB =", repr(a))


if __name__ == "__main__":
    main()
