"""Pure-numpy binary code-map kernel.

This is the fallback for the compiled extension in ``_codemap_cy``.  The
two implementations must stay bit-identical: the interpolation expression
below is mirrored verbatim in the .pyx file, and the extension is compiled
with floating-point contraction disabled so neither side fuses the
multiply-adds.
"""

import numpy as np


def code_map(neighbor, center, off_y, off_x, margin):
    """Threshold-coded neighborhood map.

    For every interior pixel, sample ``len(off_y)`` neighbors from
    ``neighbor`` at the given (dy, dx) offsets — bilinearly when an offset
    is fractional — compare each against the same pixel of ``center``
    (greater-or-equal counts as 1), and pack the bits least-significant
    first into an int32 code.  Returns a (H - 2*margin, W - 2*margin) map.
    """
    h, w = neighbor.shape
    ih = h - 2 * margin
    iw = w - 2 * margin
    cen = center[margin:margin + ih, margin:margin + iw]
    codes = np.zeros((ih, iw), dtype=np.int32)
    for i in range(len(off_y)):
        dy = float(off_y[i])
        dx = float(off_x[i])
        iy = int(np.floor(dy))
        ix = int(np.floor(dx))
        y0 = margin + iy
        x0 = margin + ix
        if dy == iy and dx == ix:
            vals = neighbor[y0:y0 + ih, x0:x0 + iw]
        else:
            fy = dy - iy
            fx = dx - ix
            v00 = neighbor[y0:y0 + ih, x0:x0 + iw]
            v01 = neighbor[y0:y0 + ih, x0 + 1:x0 + 1 + iw]
            v10 = neighbor[y0 + 1:y0 + 1 + ih, x0:x0 + iw]
            v11 = neighbor[y0 + 1:y0 + 1 + ih, x0 + 1:x0 + 1 + iw]
            vals = v00 + fx * (v01 - v00) + fy * (v10 - v00) \
                + fx * fy * (v00 - v01 - v10 + v11)
        codes |= (vals >= cen).astype(np.int32) << i
    return codes
