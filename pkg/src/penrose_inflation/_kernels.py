"""Candidate-box scan kernels.

Each kernel walks the integer box ``lo[i] <= x_i <= hi[i]`` (i = 1..4) with
``x5 = level - x1 - x2 - x3 - x4`` and writes one code per candidate, in
C order over ``(x1, x2, x3, x4)``:

    0  rejected (x5 out of range, outside the float radius, or some constraint < 0)
    1  every constraint > 0
    2  every constraint >= 0 and at least one == 0

Constraint ``k`` reads ``T_k - M_k * F_{j_k}(x) > 0`` where all quantities
are integer pairs ``(p, q)`` standing for ``p + q*sqrt5`` and

    F_j(x) = sum_m (D * a_m(x) - w_m) * tab[j, m]

with ``a(x) = (x5, x3, x1, x4, x2)`` the power-basis coefficients of the
internal embedding.  Signs are decided exactly on integers; the float radius
test only ever widens the candidate set.

Backend: numba when importable, unless ``PENROSE_INFLATION_BACKEND=numpy``.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

ENV_FLAG = "PENROSE_INFLATION_BACKEND"

# int64 headroom for p*p and 5*q*q
INT64_SAFE = 1_300_000_000


def default_backend() -> str:
    choice = os.environ.get(ENV_FLAG, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice not in ("", "numba"):
        raise ValueError(f"{ENV_FLAG} must be 'numba' or 'numpy', got {choice!r}")
    return "numba" if HAVE_NUMBA else "numpy"


def _sign_np(p, q):
    p_nn, q_nn = p >= 0, q >= 0
    p_np, q_np = p <= 0, q <= 0
    pp, qq = p * p, 5 * (q * q)
    ppos = (p > 0).astype(bool)
    out = np.where((pp > qq).astype(bool), np.where(ppos, 1, -1), np.where(ppos, -1, 1))
    out = np.where(p_np & q_np, -1, out)
    out = np.where(p_nn & q_nn, np.where((p != 0) | (q != 0), 1, 0), out)
    return np.asarray(out).astype(np.int8)


def scan_numpy(level, lo, hi, x5lo, x5hi, D, w, tabp, tabq, cj, cmp_, cmq, ctp, ctq, dcos, dsin, r2max, big=False):
    """Pure-numpy scan; ``big=True`` switches to exact Python ints (object dtype)."""
    dt = object if big else np.int64
    n2, n3, n4 = (int(hi[i] - lo[i] + 1) for i in (1, 2, 3))
    x2 = np.arange(lo[1], hi[1] + 1, dtype=np.int64).astype(dt)[:, None, None]
    x3 = np.arange(lo[2], hi[2] + 1, dtype=np.int64).astype(dt)[None, :, None]
    x4 = np.arange(lo[3], hi[3] + 1, dtype=np.int64).astype(dt)[None, None, :]
    shape = (n2, n3, n4)
    slab = n2 * n3 * n4
    total = slab * int(hi[0] - lo[0] + 1)
    out = np.zeros(total, dtype=np.int8)
    if total == 0:
        return out
    base23 = x2 + x3
    for i1, x1 in enumerate(range(int(lo[0]), int(hi[0]) + 1)):
        x5 = np.broadcast_to(level - x1 - base23 - x4, shape)
        ok = ((x5 >= x5lo) & (x5 <= x5hi)).astype(bool)
        xs = (x1, x2, x3, x4, x5)
        dr = sum(float(dcos[k]) * np.asarray(xs[k], dtype=np.float64) for k in range(5))
        di = sum(float(dsin[k]) * np.asarray(xs[k], dtype=np.float64) for k in range(5))
        ok &= np.broadcast_to(dr * dr + di * di <= r2max, shape)
        a = (x5, x3, x1, x4, x2)
        b = [np.broadcast_to(D * a[m] - w[m], shape) for m in range(5)]
        allpos = ok.copy()
        anyzero = np.zeros(shape, dtype=bool)
        fcache = {}
        for k in range(len(cj)):
            j = int(cj[k])
            if j not in fcache:
                fp = sum(b[m] * int(tabp[j, m]) for m in range(5))
                fq = sum(b[m] * int(tabq[j, m]) for m in range(5))
                fcache[j] = (fp, fq)
            fp, fq = fcache[j]
            mp, mq = int(cmp_[k]), int(cmq[k])
            vp = int(ctp[k]) - (mp * fp + 5 * mq * fq)
            vq = int(ctq[k]) - (mp * fq + mq * fp)
            s = _sign_np(vp, vq)
            ok &= s >= 0
            allpos &= s > 0
            anyzero |= s == 0
        code = np.where(ok, np.where(allpos, 1, np.where(anyzero, 2, 0)), 0).astype(np.int8)
        out[i1 * slab:(i1 + 1) * slab] = code.ravel()
    return out


def _scan_loop(level, lo, hi, x5lo, x5hi, D, w, tabp, tabq, cj, cmp_, cmq, ctp, ctq, dcos, dsin, r2max):
    n1 = hi[0] - lo[0] + 1
    n2 = hi[1] - lo[1] + 1
    n3 = hi[2] - lo[2] + 1
    n4 = hi[3] - lo[3] + 1
    out = np.zeros(max(n1 * n2 * n3 * n4, 0), dtype=np.int8)
    K = cj.shape[0]
    b = np.empty(5, dtype=np.int64)
    fp = np.empty(5, dtype=np.int64)
    fq = np.empty(5, dtype=np.int64)
    idx = 0
    for x1 in range(lo[0], hi[0] + 1):
        for x2 in range(lo[1], hi[1] + 1):
            for x3 in range(lo[2], hi[2] + 1):
                for x4 in range(lo[3], hi[3] + 1):
                    x5 = level - x1 - x2 - x3 - x4
                    code = 0
                    if x5lo <= x5 <= x5hi:
                        dr = dcos[0] * x1 + dcos[1] * x2 + dcos[2] * x3 + dcos[3] * x4 + dcos[4] * x5
                        di = dsin[0] * x1 + dsin[1] * x2 + dsin[2] * x3 + dsin[3] * x4 + dsin[4] * x5
                        if dr * dr + di * di <= r2max:
                            b[0] = D * x5 - w[0]
                            b[1] = D * x3 - w[1]
                            b[2] = D * x1 - w[2]
                            b[3] = D * x4 - w[3]
                            b[4] = D * x2 - w[4]
                            for j in range(5):
                                sp = 0
                                sq = 0
                                for m in range(5):
                                    sp += b[m] * tabp[j, m]
                                    sq += b[m] * tabq[j, m]
                                fp[j] = sp
                                fq[j] = sq
                            code = 1
                            for k in range(K):
                                j = cj[k]
                                vp = ctp[k] - (cmp_[k] * fp[j] + 5 * cmq[k] * fq[j])
                                vq = ctq[k] - (cmp_[k] * fq[j] + cmq[k] * fp[j])
                                if vp >= 0 and vq >= 0:
                                    s = 1 if (vp != 0 or vq != 0) else 0
                                elif vp <= 0 and vq <= 0:
                                    s = -1
                                elif vp > 0:
                                    s = 1 if vp * vp > 5 * vq * vq else -1
                                else:
                                    s = 1 if 5 * vq * vq > vp * vp else -1
                                if s < 0:
                                    code = 0
                                    break
                                if s == 0:
                                    code = 2
                    out[idx] = code
                    idx += 1
    return out


if HAVE_NUMBA:
    scan_numba = numba.njit(cache=True, nogil=True)(_scan_loop)
else:  # pragma: no cover
    scan_numba = None


def run_scan(backend, level, lo, hi, x5lo, x5hi, D, w, tabp, tabq, constraints, dcos, dsin, r2max, magnitude):
    """Dispatch to a backend; ``magnitude`` bounds every integer the kernel forms."""
    cj = np.array([c[0] for c in constraints], dtype=np.int64)
    cmp_ = np.array([c[1] for c in constraints], dtype=object)
    cmq = np.array([c[2] for c in constraints], dtype=object)
    ctp = np.array([c[3] for c in constraints], dtype=object)
    ctq = np.array([c[4] for c in constraints], dtype=object)
    big = magnitude >= INT64_SAFE
    lo = np.asarray(lo, dtype=np.int64)
    hi = np.asarray(hi, dtype=np.int64)
    if big:
        return scan_numpy(level, lo, hi, x5lo, x5hi, D, list(w), tabp, tabq, cj, cmp_, cmq, ctp, ctq,
                          dcos, dsin, r2max, big=True)
    arrs = [a.astype(np.int64) for a in (cmp_, cmq, ctp, ctq)]
    w64 = np.asarray(w, dtype=np.int64)
    if backend == "numba":
        return scan_numba(np.int64(level), lo, hi, np.int64(x5lo), np.int64(x5hi), np.int64(D), w64,
                          tabp, tabq, cj, *arrs, dcos, dsin, float(r2max))
    if backend == "numpy":
        return scan_numpy(level, lo, hi, x5lo, x5hi, int(D), [int(v) for v in w64], tabp, tabq, cj, *arrs,
                          dcos, dsin, r2max)
    raise ValueError(f"unknown backend {backend!r}")


DCOS = np.array([math.cos(2 * math.pi * k / 5) for k in range(1, 6)])
DSIN = np.array([math.sin(2 * math.pi * k / 5) for k in range(1, 6)])
