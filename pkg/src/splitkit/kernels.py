"""Integer kernels on the dart representation of a diagram.

A diagram with n crossings has 4n darts; dart ``4*c + s`` is slot ``s`` of
crossing ``c`` (slots counter-clockwise, slot 0 = incoming under-strand).
``pair[x]`` is the dart at the other end of the edge through x, ``over_in[c]``
is 1 or 3 (the slot where the over-strand enters).

Each kernel exists twice: a plain python/numpy version and a numba-compiled
one.  ``canonical_code`` dispatches on ``SPLITKIT_PURE_PYTHON``.
"""
import numpy as np

from ._jit import HAVE_NUMBA, njit


def _canonical_code_py(pair, over_in, color, use_colors):
    n = over_in.shape[0]
    nd = 4 * n
    width = 7 if use_colors else 5
    best = np.empty(width * n, dtype=np.int64)
    have_best = False
    code = np.empty(width * n, dtype=np.int64)
    edge_label = np.empty(nd, dtype=np.int64)
    cross_label = np.empty(n, dtype=np.int64)
    cross_order = np.empty(n, dtype=np.int64)

    min_color = 0
    if use_colors:
        min_color = color[0]
        for x in range(nd):
            if color[x] < min_color:
                min_color = color[x]

    for x0 in range(nd):
        s0 = x0 % 4
        c0 = x0 // 4
        if not (s0 == 2 or s0 == (over_in[c0] + 2) % 4):
            continue
        if use_colors and color[x0] != min_color:
            continue
        for i in range(nd):
            edge_label[i] = -1
        for i in range(n):
            cross_label[i] = -1
        nl = 0
        nc = 0
        start = x0
        while True:
            cur = start
            while True:
                c = cur // 4
                if cross_label[c] < 0:
                    cross_label[c] = nc
                    cross_order[nc] = c
                    nc += 1
                inn = pair[cur]
                edge_label[cur] = nl
                edge_label[inn] = nl
                nl += 1
                ci = inn // 4
                if cross_label[ci] < 0:
                    cross_label[ci] = nc
                    cross_order[nc] = ci
                    nc += 1
                nxt = ci * 4 + (inn % 4 + 2) % 4
                if nxt == start:
                    break
                cur = nxt
            if nl == 2 * n:
                break
            start = -1
            for k in range(nc):
                c = cross_order[k]
                for s in range(4):
                    y = 4 * c + s
                    if edge_label[y] < 0 and (s == 2 or s == (over_in[c] + 2) % 4):
                        start = y
                        break
                if start >= 0:
                    break
            if start < 0:
                # disconnected input; caller must split into pieces first
                return best[:0]
        for k in range(n):
            c = cross_order[k]
            base = width * k
            for s in range(4):
                code[base + s] = edge_label[4 * c + s]
            code[base + 4] = over_in[c]
            if use_colors:
                code[base + 5] = color[4 * c]
                code[base + 6] = color[4 * c + 1]
        if not have_best:
            best[:] = code
            have_best = True
        else:
            for i in range(width * n):
                if code[i] != best[i]:
                    if code[i] < best[i]:
                        best[:] = code
                    break
    return best


canonical_code_py = _canonical_code_py
canonical_code_jit = njit(cache=True)(_canonical_code_py) if HAVE_NUMBA else None


def canonical_code(pair, over_in, color, use_colors=True):
    fn = canonical_code_jit if HAVE_NUMBA else canonical_code_py
    return fn(pair, over_in, color, use_colors)


def _piece_labels_py(pair, n):
    """Connected-component label for each crossing (union-find over edges)."""
    parent = np.arange(n, dtype=np.int64)
    for x in range(4 * n):
        a = x // 4
        b = pair[x] // 4
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            if a < b:
                parent[b] = a
            else:
                parent[a] = b
    out = np.empty(n, dtype=np.int64)
    for c in range(n):
        a = c
        while parent[a] != a:
            a = parent[a]
        out[c] = a
    return out


piece_labels_py = _piece_labels_py
piece_labels_jit = njit(cache=True)(_piece_labels_py) if HAVE_NUMBA else None


def piece_labels(pair, n):
    fn = piece_labels_jit if HAVE_NUMBA else piece_labels_py
    return fn(pair, n)
