"""Pure-Python versions of the enumeration kernels.

Same signatures and results as the compiled ``_kernels`` extension; used when
the extension is not built or ``CHROMOD_PURE_PYTHON`` is set.
"""

from itertools import permutations


def coloring_counts(h, ncolors):
    """Proper colorings of the indifference graph of ``h`` with ``ncolors``
    colors, tallied by color-multiplicity partition and ascent count.

    Returns ``{partition: [count with 0 ascents, count with 1 ascent, ...]}``;
    each list has length (number of edges) + 1.
    """
    h = tuple(h)
    n = len(h)
    # lower neighbours of vertex v (0-based) form the interval [lo[v], v)
    lo = []
    for v in range(n):
        u = 0
        while u < v and h[u] < v + 1:
            u += 1
        lo.append(u)
    nedges = sum(h) - n * (n + 1) // 2
    color = [0] * n
    mult = [0] * ncolors
    raw = {}

    def rec(v, asc):
        if v == n:
            key = tuple(mult)
            row = raw.get(key)
            if row is None:
                row = raw[key] = [0] * (nedges + 1)
            row[asc] += 1
            return
        start = lo[v]
        for c in range(ncolors):
            a = asc
            for u in range(start, v):
                cu = color[u]
                if cu == c:
                    break
                if cu < c:
                    a += 1
            else:
                color[v] = c
                mult[c] += 1
                rec(v + 1, a)
                mult[c] -= 1

    if n:
        rec(0, 0)
    else:
        raw[tuple(mult)] = [1]
    out = {}
    for key, row in raw.items():
        lam = tuple(sorted((m for m in key if m), reverse=True))
        acc = out.get(lam)
        if acc is None:
            out[lam] = list(row)
        else:
            for k, v in enumerate(row):
                acc[k] += v
    return out


def rook_counts(m, lam):
    """Tally of all m! rook placements on the m x m board by (number of
    rooks inside the Young diagram of ``lam``, lambda-weight).

    Rows are numbered 1..m from bottom to top; cell (row i, column j) lies in
    the diagram iff j <= lam[m - i] (1-based lam).  Returns counts[j][w].
    """
    lam = tuple(lam) + (0,) * m
    # inlam[r][c] with 0-based row r (bottom = 0) and column c
    inlam = [[c < lam[m - 1 - r] for c in range(m)] for r in range(m)]
    maxw = m * m
    counts = [[0] * (maxw + 1) for _ in range(m + 1)]
    inv = [0] * m
    for perm in permutations(range(m)):
        for c, r in enumerate(perm):
            inv[r] = c
        jin = 0
        w = 0
        for c in range(m):
            r = perm[c]
            rin = inlam[r][c]
            if rin:
                jin += 1
            for i in range(m):
                # no rook on the cell and none to its left: the row's rook is to the right
                if inv[i] > c:
                    if inlam[i][c]:
                        if rin and r < i:
                            w += 1
                    elif rin or r < i:
                        w += 1
        counts[jin][w] += 1
    return counts
