# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _kernels_py: same four entry points, C inner loops.

Weights are fixed-width int64 coordinate vectors stored in flat arenas with
an open-addressing hash table for membership.  The wrapper in
liespectra.kernels routes oversized inputs to the pure backend, so the
int64 arithmetic here never overflows in practice.
"""

from libc.stdlib cimport calloc, free, malloc, realloc
from libc.string cimport memcpy

ctypedef long long i64


cdef struct Table:
    i64 *keys
    i64 *vals
    unsigned char *used
    Py_ssize_t cap
    Py_ssize_t size
    int n


cdef int table_init(Table *t, int n, Py_ssize_t cap) except -1:
    cdef Py_ssize_t c = 16
    while c < cap:
        c <<= 1
    t.cap = c
    t.size = 0
    t.n = n
    t.keys = <i64 *> malloc(c * n * sizeof(i64))
    t.vals = <i64 *> malloc(c * sizeof(i64))
    t.used = <unsigned char *> calloc(c, 1)
    if t.keys == NULL or t.vals == NULL or t.used == NULL:
        raise MemoryError()
    return 0


cdef void table_free(Table *t) noexcept:
    free(t.keys)
    free(t.vals)
    free(t.used)


cdef inline Py_ssize_t _hash(const i64 *key, int n, Py_ssize_t mask) noexcept:
    cdef unsigned long long h = 1469598103934665603ULL
    cdef int i
    for i in range(n):
        h ^= <unsigned long long> key[i]
        h *= 1099511628211ULL
    return <Py_ssize_t> (h & <unsigned long long> mask)


cdef inline bint _eq(const i64 *a, const i64 *b, int n) noexcept:
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return 0
    return 1


cdef i64 table_get(Table *t, const i64 *key) noexcept:
    """Value for key, or -1 when absent (values are nonnegative)."""
    cdef Py_ssize_t mask = t.cap - 1
    cdef Py_ssize_t slot = _hash(key, t.n, mask)
    while t.used[slot]:
        if _eq(&t.keys[slot * t.n], key, t.n):
            return t.vals[slot]
        slot = (slot + 1) & mask
    return -1


cdef int table_grow(Table *t) except -1:
    cdef Table fresh
    table_init(&fresh, t.n, t.cap * 2)
    cdef Py_ssize_t i, mask = fresh.cap - 1, slot
    for i in range(t.cap):
        if t.used[i]:
            slot = _hash(&t.keys[i * t.n], t.n, mask)
            while fresh.used[slot]:
                slot = (slot + 1) & mask
            memcpy(&fresh.keys[slot * fresh.n], &t.keys[i * t.n], t.n * sizeof(i64))
            fresh.vals[slot] = t.vals[i]
            fresh.used[slot] = 1
    fresh.size = t.size
    table_free(t)
    t[0] = fresh
    return 0


cdef int table_put_new(Table *t, const i64 *key, i64 val) except -1:
    """Insert key (assumed absent) with value."""
    if t.size * 3 >= t.cap * 2:
        table_grow(t)
    cdef Py_ssize_t mask = t.cap - 1
    cdef Py_ssize_t slot = _hash(key, t.n, mask)
    while t.used[slot]:
        slot = (slot + 1) & mask
    memcpy(&t.keys[slot * t.n], key, t.n * sizeof(i64))
    t.vals[slot] = val
    t.used[slot] = 1
    t.size += 1
    return 0


cdef struct Arena:
    i64 *data
    Py_ssize_t count
    Py_ssize_t cap
    int n


cdef int arena_init(Arena *a, int n) except -1:
    a.n = n
    a.count = 0
    a.cap = 256
    a.data = <i64 *> malloc(a.cap * n * sizeof(i64))
    if a.data == NULL:
        raise MemoryError()
    return 0


cdef Py_ssize_t arena_push(Arena *a, const i64 *coords) except -1:
    cdef i64 *nd
    if a.count == a.cap:
        a.cap *= 2
        nd = <i64 *> realloc(a.data, a.cap * a.n * sizeof(i64))
        if nd == NULL:
            raise MemoryError()
        a.data = nd
    memcpy(&a.data[a.count * a.n], coords, a.n * sizeof(i64))
    a.count += 1
    return a.count - 1


cdef i64 *_flat(seq, int rows, int cols) except NULL:
    cdef i64 *buf = <i64 *> malloc(rows * cols * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef int i, j
    for i in range(rows):
        row = seq[i]
        for j in range(cols):
            buf[i * cols + j] = row[j]
    return buf


cdef inline void _reflect_dominant(i64 *c, const i64 *alpha, int n) noexcept:
    """In-place dominant representative via simple reflections."""
    cdef int i, j
    cdef i64 ci
    while True:
        for i in range(n):
            if c[i] < 0:
                ci = c[i]
                for j in range(n):
                    c[j] -= ci * alpha[i * n + j]
                break
        else:
            return


cdef _tuple_of(const i64 *coords, int n):
    cdef int j
    return tuple([coords[j] for j in range(n)])


cdef _bfs_dominant(Arena *arena, Table *seen, const i64 *alphaf, const i64 *posf,
                   int n, int nroots, lam):
    """Fill arena with all dominant weights reachable from lam by repeated
    positive-root subtraction (staying dominant)."""
    cdef i64 *start = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *cand = <i64 *> malloc(n * sizeof(i64))
    if start == NULL or cand == NULL:
        raise MemoryError()
    cdef int i, r
    cdef bint ok
    cdef Py_ssize_t head = 0, idx
    try:
        for i in range(n):
            start[i] = lam[i]
        idx = arena_push(arena, start)
        table_put_new(seen, start, idx)
        while head < arena.count:
            for r in range(nroots):
                ok = 1
                for i in range(n):
                    cand[i] = arena.data[head * n + i] - posf[r * n + i]
                    if cand[i] < 0:
                        ok = 0
                if ok and table_get(seen, cand) < 0:
                    idx = arena_push(arena, cand)
                    table_put_new(seen, cand, idx)
            head += 1
    finally:
        free(start)
        free(cand)


cdef i64 _deficit(const i64 *lam, const i64 *mu, const i64 *adjf, i64 det, int n) noexcept:
    cdef i64 total = 0
    cdef int i, j
    for j in range(n):
        for i in range(n):
            total += (lam[i] - mu[i]) * adjf[i * n + j]
    return total / det


def dominant_subdominants(int n, alpha, posroots, adj, det, lam):
    """See _kernels_py.dominant_subdominants."""
    cdef int nroots = len(posroots)
    cdef i64 *alphaf = _flat(alpha, n, n)
    cdef i64 *posf = _flat(posroots, nroots, n)
    cdef i64 *adjf = _flat(adj, n, n)
    cdef i64 cdet = det
    cdef Arena arena
    cdef Table seen
    arena_init(&arena, n)
    table_init(&seen, n, 1024)
    cdef i64 *lamc = <i64 *> malloc(n * sizeof(i64))
    cdef Py_ssize_t i
    cdef int j
    try:
        for j in range(n):
            lamc[j] = lam[j]
        _bfs_dominant(&arena, &seen, alphaf, posf, n, nroots, lam)
        out = []
        for i in range(arena.count):
            out.append(
                (_deficit(lamc, &arena.data[i * n], adjf, cdet, n),
                 _tuple_of(&arena.data[i * n], n))
            )
        out.sort()
        return [t for _, t in out]
    finally:
        free(lamc)
        free(alphaf)
        free(posf)
        free(adjf)
        table_free(&seen)
        free(arena.data)


def weyl_orbit(int n, alpha, start):
    """See _kernels_py.weyl_orbit."""
    cdef i64 *alphaf = _flat(alpha, n, n)
    cdef Arena arena
    cdef Table seen
    arena_init(&arena, n)
    table_init(&seen, n, 1024)
    cdef i64 *cur = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *ref = <i64 *> malloc(n * sizeof(i64))
    cdef Py_ssize_t head = 0, idx, i
    cdef int j, k
    cdef i64 ci
    try:
        for j in range(n):
            cur[j] = start[j]
        idx = arena_push(&arena, cur)
        table_put_new(&seen, cur, idx)
        while head < arena.count:
            for j in range(n):
                ci = arena.data[head * n + j]
                if ci == 0:
                    continue
                for k in range(n):
                    ref[k] = arena.data[head * n + k] - ci * alphaf[j * n + k]
                if table_get(&seen, ref) < 0:
                    idx = arena_push(&arena, ref)
                    table_put_new(&seen, ref, idx)
            head += 1
        out = [_tuple_of(&arena.data[i * n], n) for i in range(arena.count)]
        out.sort()
        return out
    finally:
        free(cur)
        free(ref)
        free(alphaf)
        table_free(&seen)
        free(arena.data)


def orbit_expand(int n, alpha, reps, mults):
    """See _kernels_py.orbit_expand."""
    out = {}
    for rep, m in zip(reps, mults):
        for w in weyl_orbit(n, alpha, rep):
            out[w] = m
    return out


cdef i64 _quad(const i64 *c, const i64 *sf, int n) noexcept:
    cdef i64 total = 0
    cdef int i, j
    for i in range(n):
        if c[i] != 0:
            for j in range(n):
                total += c[i] * c[j] * sf[i * n + j]
    return total


def freudenthal(int n, alpha, posroots, pairings, dhalf, adj, det, sform, den, lam):
    """See _kernels_py.freudenthal."""
    doms = dominant_subdominants(n, alpha, posroots, adj, det, lam)
    cdef Py_ssize_t count = len(doms)
    cdef int nroots = len(posroots)
    cdef i64 *alphaf = _flat(alpha, n, n)
    cdef i64 *posf = _flat(posroots, nroots, n)
    cdef i64 *pairf = _flat(pairings, nroots, n)
    cdef i64 *sf = _flat(sform, n, n)
    cdef i64 *domf = _flat(doms, <int> count, n)
    cdef i64 *dh = <i64 *> malloc(nroots * sizeof(i64))
    cdef i64 *mults = <i64 *> malloc(count * sizeof(i64))
    cdef i64 *nu = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *rep = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *rho = <i64 *> malloc(n * sizeof(i64))
    cdef Table index
    table_init(&index, n, count * 2 + 16)
    cdef Py_ssize_t idx, j2
    cdef int r, j
    cdef i64 acc, pair, qlam, denom, num, cden = den
    try:
        if dh == NULL or mults == NULL or nu == NULL or rep == NULL or rho == NULL:
            raise MemoryError()
        for r in range(nroots):
            dh[r] = dhalf[r]
        for idx in range(count):
            table_put_new(&index, &domf[idx * n], idx)
        for j in range(n):
            rho[j] = domf[j] + 1  # doms[0] == lam
        qlam = _quad(rho, sf, n)
        mults[0] = 1
        for idx in range(1, count):
            acc = 0
            for r in range(nroots):
                for j in range(n):
                    nu[j] = domf[idx * n + j]
                while True:
                    pair = 0
                    for j in range(n):
                        nu[j] += posf[r * n + j]
                        pair += nu[j] * pairf[r * n + j]
                    for j in range(n):
                        rep[j] = nu[j]
                    _reflect_dominant(rep, alphaf, n)
                    j2 = table_get(&index, rep)
                    if j2 < 0:
                        break
                    acc += mults[j2] * dh[r] * pair
            for j in range(n):
                rho[j] = domf[idx * n + j] + 1
            denom = qlam - _quad(rho, sf, n)
            num = 2 * cden * acc
            if denom <= 0 or num % denom != 0:
                raise AssertionError("Freudenthal recursion produced a non-integer")
            mults[idx] = num / denom
        return doms, [mults[idx] for idx in range(count)]
    finally:
        free(alphaf)
        free(posf)
        free(pairf)
        free(sf)
        free(domf)
        free(dh)
        free(mults)
        free(nu)
        free(rep)
        free(rho)
        table_free(&index)
