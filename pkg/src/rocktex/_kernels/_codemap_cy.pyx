# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled binary code-map kernel.

Bit-for-bit mirror of ``_codemap_np.code_map``: identical per-neighbor
sampling arithmetic (plain lookup on integral offsets, the incremental
bilinear expression otherwise), compiled with -ffp-contract=off so no
fused multiply-add sneaks in.  Each pixel is visited once and its bits
accumulate in a register, with a branch-free inner loop when every
offset is integral — the classic 8-neighbor unit ring.
"""

from libc.math cimport floor

import numpy as np


def code_map(double[:, ::1] neighbor, double[:, ::1] center,
             double[::1] off_y, double[::1] off_x, Py_ssize_t margin):
    """See ``rocktex._kernels._codemap_np.code_map``."""
    cdef Py_ssize_t h = neighbor.shape[0]
    cdef Py_ssize_t w = neighbor.shape[1]
    cdef Py_ssize_t ih = h - 2 * margin
    cdef Py_ssize_t iw = w - 2 * margin
    cdef Py_ssize_t n_off = off_y.shape[0]

    out = np.zeros((ih, iw), dtype=np.int32)
    cdef int[:, ::1] codes = out

    ys_arr = np.empty(n_off, dtype=np.intp)
    xs_arr = np.empty(n_off, dtype=np.intp)
    fys_arr = np.empty(n_off, dtype=np.float64)
    fxs_arr = np.empty(n_off, dtype=np.float64)
    bits_arr = np.empty(n_off, dtype=np.int32)
    flags_arr = np.empty(n_off, dtype=np.uint8)
    cdef Py_ssize_t[::1] ys = ys_arr
    cdef Py_ssize_t[::1] xs = xs_arr
    cdef double[::1] fys = fys_arr
    cdef double[::1] fxs = fxs_arr
    cdef int[::1] bits = bits_arr
    cdef unsigned char[::1] integrals = flags_arr

    cdef Py_ssize_t i, y, x, iy, ix, cy
    cdef double dy, dx, fy, fx, cen, val, v00, v01, v10, v11
    cdef int code
    cdef bint all_integral = True

    for i in range(n_off):
        dy = off_y[i]
        dx = off_x[i]
        iy = <Py_ssize_t>floor(dy)
        ix = <Py_ssize_t>floor(dx)
        ys[i] = margin + iy
        xs[i] = margin + ix
        fys[i] = dy - iy
        fxs[i] = dx - ix
        bits[i] = <int>(1 << i)
        integrals[i] = (dy == <double>iy) and (dx == <double>ix)
        if not integrals[i]:
            all_integral = False

    # threshold results are folded in arithmetically (compare -> 0/1 ->
    # shift) rather than branched on: neighbor-vs-center outcomes are
    # close to coin flips on textured input, so a conditional here would
    # stall on mispredictions
    if all_integral:
        for y in range(ih):
            cy = margin + y
            for x in range(iw):
                cen = center[cy, margin + x]
                code = 0
                for i in range(n_off):
                    code |= bits[i] * <int>(neighbor[ys[i] + y, xs[i] + x] >= cen)
                codes[y, x] = code
    else:
        for y in range(ih):
            cy = margin + y
            for x in range(iw):
                cen = center[cy, margin + x]
                code = 0
                for i in range(n_off):
                    if integrals[i]:
                        val = neighbor[ys[i] + y, xs[i] + x]
                    else:
                        fy = fys[i]
                        fx = fxs[i]
                        v00 = neighbor[ys[i] + y, xs[i] + x]
                        v01 = neighbor[ys[i] + y, xs[i] + x + 1]
                        v10 = neighbor[ys[i] + y + 1, xs[i] + x]
                        v11 = neighbor[ys[i] + y + 1, xs[i] + x + 1]
                        val = v00 + fx * (v01 - v00) + fy * (v10 - v00) \
                            + fx * fy * (v00 - v01 - v10 + v11)
                    code |= bits[i] * <int>(val >= cen)
                codes[y, x] = code
    return out
