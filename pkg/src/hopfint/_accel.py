"""Hot kernels: modular Howell form and exhaustive semigroup enumeration.

Each kernel has a numba implementation and a pure-numpy fallback.  The
backend is picked once from the ``HOPFINT_BACKEND`` environment variable
(``numba`` by default, ``numpy`` to force the fallback); every public
function also takes an explicit ``backend=`` override.  Both backends
return identical arrays.

The numba path works on ``int64`` and is only used for moduli below
2**31 so that products of two residues cannot overflow.  Larger moduli,
and Hermite normal form over Z (``m == 0``), run the numpy path on
``object`` arrays of Python ints.
"""

import functools
import itertools
import os

import numpy as np

try:
    import numba
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

BACKEND = os.environ.get("HOPFINT_BACKEND", "numba").strip().lower()
if BACKEND not in ("numba", "numpy"):
    raise ValueError(f"HOPFINT_BACKEND must be 'numba' or 'numpy', not {BACKEND!r}")
if numba is None:
    BACKEND = "numpy"

INT64_SAFE_MODULUS = 2**31


def _resolve(backend):
    backend = BACKEND if backend is None else backend
    if backend == "numba" and numba is None:
        return "numpy"
    return backend


# ---------------------------------------------------------------------------
# numpy fallback


def _py_xgcd(a, b):
    s, next_s, t, next_t, g, next_g = 1, 0, 0, 1, a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        s, t, g = -s, -t, -g
    return g, s, t


def _py_gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _py_normalizing_unit(a, m):
    """Unit ``u`` of Z/m with ``u*a == gcd(a, m) (mod m)``."""
    g = _py_gcd(a, m)
    k, mp = a // g, m // g
    u = _py_xgcd(k, mp)[1] % mp
    while _py_gcd(u, m) != 1:
        u += mp
    return u


def _howell_numpy(A, m):
    """Howell form of the row span of ``A`` over Z/m; Hermite form over Z if m == 0."""
    nr, nc = A.shape
    dtype = object if (m == 0 or m >= INT64_SAFE_MODULUS or A.dtype == object) else np.int64
    total = nr + nc
    W = np.zeros((total, nc), dtype=dtype)
    if nr:
        W[:nr] = A % m if m else A

    def red(x):
        return x % m if m else x

    r = 0
    pivcols = []
    for c in range(nc):
        nz = np.nonzero(W[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            W[[r, piv]] = W[[piv, r]]
        for i in range(r + 1, total):
            b = int(W[i, c])
            if b == 0:
                continue
            a = int(W[r, c])
            if b % a == 0:
                W[i, c:] = red(W[i, c:] - (b // a) * W[r, c:])
            else:
                g, s, t = _py_xgcd(a, b)
                x, y = W[r, c:].copy(), W[i, c:].copy()
                W[r, c:] = red(s * x + t * y)
                W[i, c:] = red(-(b // g) * x + (a // g) * y)
        a = int(W[r, c])
        if m:
            W[r, c:] = red(_py_normalizing_unit(a, m) * W[r, c:])
            mult = m // int(W[r, c])
            if mult != m:
                zero_rows = np.nonzero(~W[r + 1:].any(axis=1))[0]
                k = r + 1 + int(zero_rows[0])
                W[k, c:] = red(mult * W[r, c:])
        elif a < 0:
            W[r, c:] = -W[r, c:]
        pivcols.append(c)
        r += 1
    for i, c in enumerate(pivcols):
        p = int(W[i, c])
        for j in range(i):
            q = int(W[j, c]) // p
            if q:
                W[j, c:] = red(W[j, c:] - q * W[i, c:])
    return W[:r].copy()


def _all_rows(n):
    return np.array(list(itertools.product(range(n), repeat=n)), dtype=np.int64).reshape(-1, n)


def _partial_ok(T, k):
    """Mask of tables whose first ``k`` rows satisfy every checkable triple."""
    B, _, n = T.shape
    ok = np.ones(B, dtype=bool)
    b = np.arange(B)[:, None]
    z = np.arange(n)[None, :]
    for x in range(k):
        for y in range(k):
            xy = T[:, x, y]
            defined = xy < k
            lhs = T[b, np.where(defined, xy, 0)[:, None], z]
            rhs = T[b, x, T[:, y, :]]
            ok &= ~defined | (lhs == rhs).all(axis=1)
    return ok


def _enumerate_numpy(n, chunk=512):
    if n == 0:
        return np.zeros((0, 0, 0), dtype=np.int64)
    rows = _all_rows(n)
    R = rows.shape[0]
    partial = np.zeros((1, 0, n), dtype=np.int64)
    for k in range(1, n + 1):
        kept = []
        for start in range(0, partial.shape[0], chunk):
            block = partial[start:start + chunk]
            P = block.shape[0]
            cand = np.empty((P * R, k, n), dtype=np.int64)
            cand[:, : k - 1, :] = np.repeat(block, R, axis=0)
            cand[:, k - 1, :] = np.tile(rows, (P, 1))
            kept.append(cand[_partial_ok(cand, k)])
        partial = np.concatenate(kept, axis=0) if kept else partial[:0]
    flat = partial.reshape(partial.shape[0], -1)
    order = np.lexsort(flat.T[::-1])
    return partial[order]


# ---------------------------------------------------------------------------
# numba kernels

if numba is not None:

    @njit(cache=True)
    def _nb_xgcd(a, b):
        s, next_s, t, next_t, g, next_g = 1, 0, 0, 1, a, b
        while next_g != 0:
            q = g // next_g
            s, next_s = next_s, s - q * next_s
            t, next_t = next_t, t - q * next_t
            g, next_g = next_g, g - q * next_g
        if g < 0:
            s, t, g = -s, -t, -g
        return g, s, t

    @njit(cache=True)
    def _nb_gcd(a, b):
        while b != 0:
            a, b = b, a % b
        return abs(a)

    @njit(cache=True)
    def _howell_numba(A, m):
        nr, nc = A.shape
        total = nr + nc
        W = np.zeros((total, nc), dtype=np.int64)
        for i in range(nr):
            for j in range(nc):
                W[i, j] = A[i, j] % m
        pivcols = np.empty(nc, dtype=np.int64)
        r = 0
        for c in range(nc):
            piv = -1
            for i in range(r, total):
                if W[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(nc):
                    tmp = W[r, j]
                    W[r, j] = W[piv, j]
                    W[piv, j] = tmp
            for i in range(r + 1, total):
                b = W[i, c]
                if b == 0:
                    continue
                a = W[r, c]
                if b % a == 0:
                    q = b // a
                    for j in range(c, nc):
                        W[i, j] = (W[i, j] - q * W[r, j]) % m
                else:
                    g, s, t = _nb_xgcd(a, b)
                    u = -(b // g)
                    v = a // g
                    for j in range(c, nc):
                        x = W[r, j]
                        y = W[i, j]
                        W[r, j] = (s * x + t * y) % m
                        W[i, j] = (u * x + v * y) % m
            a = W[r, c]
            g = _nb_gcd(a, m)
            k = a // g
            mp = m // g
            unit = _nb_xgcd(k, mp)[1] % mp
            while _nb_gcd(unit, m) != 1:
                unit += mp
            for j in range(c, nc):
                W[r, j] = (W[r, j] * unit) % m
            mult = m // W[r, c]
            if mult != m:
                slot = -1
                for i in range(r + 1, total):
                    empty = True
                    for j in range(nc):
                        if W[i, j] != 0:
                            empty = False
                            break
                    if empty:
                        slot = i
                        break
                for j in range(c, nc):
                    W[slot, j] = (mult * W[r, j]) % m
            pivcols[r] = c
            r += 1
        for i in range(r):
            c = pivcols[i]
            p = W[i, c]
            for j in range(i):
                q = W[j, c] // p
                if q != 0:
                    for jj in range(c, nc):
                        W[j, jj] = (W[j, jj] - q * W[i, jj]) % m
        return W[:r].copy()

    @njit(cache=True)
    def _nb_consistent(T, n):
        for x in range(n):
            for y in range(n):
                xy = T[x, y]
                if xy < 0:
                    continue
                for z in range(n):
                    yz = T[y, z]
                    if yz < 0:
                        continue
                    left = T[xy, z]
                    right = T[x, yz]
                    if left >= 0 and right >= 0 and left != right:
                        return False
        return True

    @njit(cache=True)
    def _enumerate_numba(n):
        cap = 1024
        out = np.empty((cap, n, n), dtype=np.int64)
        count = 0
        if n == 0:
            return out[:0]
        T = -np.ones((n, n), dtype=np.int64)
        last = n * n - 1
        pos = 0
        while pos >= 0:
            i = pos // n
            j = pos % n
            v = T[i, j] + 1
            placed = False
            while v < n:
                T[i, j] = v
                if _nb_consistent(T, n):
                    placed = True
                    break
                v += 1
            if not placed:
                T[i, j] = -1
                pos -= 1
                continue
            if pos == last:
                if count == cap:
                    bigger = np.empty((2 * cap, n, n), dtype=np.int64)
                    bigger[:cap] = out
                    out = bigger
                    cap *= 2
                out[count] = T
                count += 1
                continue
            pos += 1
        return out[:count].copy()


# ---------------------------------------------------------------------------
# public entry points


def howell_mod(A, m, backend=None):
    """Howell form (canonical row-span basis) of an integer matrix over Z/m.

    ``m == 0`` gives the Hermite normal form over Z.  Returns a 2-D array
    with zero rows removed; pivots are divisors of ``m`` and entries above
    each pivot are reduced into ``[0, pivot)``.
    """
    A = np.asarray(A)
    if A.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    use_numba = (
        _resolve(backend) == "numba" and 0 < m < INT64_SAFE_MODULUS and A.dtype != object
    )
    if use_numba:
        return _howell_numba(A.astype(np.int64), np.int64(m))
    if 0 < m < INT64_SAFE_MODULUS and A.dtype != object:
        A = A.astype(np.int64)
    return _howell_numpy(A, m)


def enumerate_semigroup_tables(n, backend=None):
    """Every associative Cayley table on ``{0..n-1}``, lexicographically ordered.

    Returns a read-only ``(count, n, n)`` int64 array, cached per backend.
    """
    return _enumerate_cached(n, _resolve(backend))


@functools.lru_cache(maxsize=None)
def _enumerate_cached(n, backend):
    out = _enumerate_numba(n) if backend == "numba" else _enumerate_numpy(n)
    out.setflags(write=False)
    return out
