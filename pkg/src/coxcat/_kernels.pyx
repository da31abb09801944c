# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled clique tally over bitmask adjacency (up to 128 vertices).

Mirrors coxcat._kernels_py.clique_tally; the dispatcher in coxcat.kernels
checks the size limits before calling in here.
"""

from libc.stdlib cimport calloc, free

cdef extern from *:
    """
    #if defined(_MSC_VER)
    #include <intrin.h>
    static int coxcat_ctzll(unsigned long long x) {
        unsigned long i;
        _BitScanForward64(&i, x);
        return (int)i;
    }
    #else
    static int coxcat_ctzll(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    #endif
    """
    int coxcat_ctzll(unsigned long long x)


cdef struct Ctx:
    unsigned long long *adj0   # low word of adj, indexed by vertex
    unsigned long long *adj1   # high word of adj, indexed by vertex
    unsigned long long sp0
    unsigned long long sp1
    int *edge
    long long *cnt
    int n_em
    int max_size
    int max_j                  # high-water marks so the final scan stays
    int max_l                  # proportional to realized keys, not the cap


cdef int _rec(Ctx *ctx, unsigned long long c0, unsigned long long c1,
              int j, int l, int em) except -1:
    cdef int v, g
    cdef unsigned long long bit
    if j + l > ctx.max_size:
        raise ValueError("clique larger than the stated bound")
    ctx.cnt[(j * (ctx.max_size + 1) + l) * ctx.n_em + em] += 1
    if j > ctx.max_j:
        ctx.max_j = j
    if l > ctx.max_l:
        ctx.max_l = l
    while c0:
        v = coxcat_ctzll(c0)
        bit = (<unsigned long long>1) << v
        c0 ^= bit
        if (ctx.sp0 >> v) & 1:
            _rec(ctx, c0 & ctx.adj0[v], c1 & ctx.adj1[v], j, l + 1,
                 em | ctx.edge[v])
        else:
            _rec(ctx, c0 & ctx.adj0[v], c1 & ctx.adj1[v], j + 1, l,
                 em | ctx.edge[v])
    while c1:
        v = coxcat_ctzll(c1)
        g = 64 + v
        bit = (<unsigned long long>1) << v
        c1 ^= bit
        if (ctx.sp1 >> v) & 1:
            _rec(ctx, 0, c1 & ctx.adj1[g], j, l + 1, em | ctx.edge[g])
        else:
            _rec(ctx, 0, c1 & ctx.adj1[g], j + 1, l, em | ctx.edge[g])
    return 0


def clique_tally(adj, special_mask, edge_masks, max_size):
    """Compiled counterpart of coxcat._kernels_py.clique_tally."""
    cdef int n = len(adj)
    cdef unsigned long long M = <unsigned long long>0xFFFFFFFFFFFFFFFF
    cdef int n_em = 1
    cdef int i, em, jj, ll, ee
    cdef long long c
    cdef unsigned long long full0, full1
    cdef Ctx ctx
    cdef long long size

    if n > 128:
        raise ValueError("compiled kernel supports at most 128 vertices")
    for i in range(n):
        while edge_masks[i] >= n_em:
            n_em <<= 1
    if n_em > (1 << 20):
        raise ValueError("edge mask too wide for the compiled kernel")

    ctx.n_em = n_em
    ctx.max_size = max_size
    ctx.max_j = 0
    ctx.max_l = 0
    ctx.adj0 = <unsigned long long *>calloc(n if n else 1, sizeof(unsigned long long))
    ctx.adj1 = <unsigned long long *>calloc(n if n else 1, sizeof(unsigned long long))
    ctx.edge = <int *>calloc(n if n else 1, sizeof(int))
    size = (<long long>(max_size + 1)) * (max_size + 1) * n_em
    ctx.cnt = <long long *>calloc(size, sizeof(long long))
    if not ctx.adj0 or not ctx.adj1 or not ctx.edge or not ctx.cnt:
        free(ctx.adj0); free(ctx.adj1); free(ctx.edge); free(ctx.cnt)
        raise MemoryError()

    for i in range(n):
        ctx.adj0[i] = <unsigned long long>(adj[i] & M)
        ctx.adj1[i] = <unsigned long long>((adj[i] >> 64) & M)
        ctx.edge[i] = edge_masks[i]
    ctx.sp0 = <unsigned long long>(special_mask & M)
    ctx.sp1 = <unsigned long long>((special_mask >> 64) & M)

    if n >= 64:
        full0 = M
        full1 = M if n == 128 else (((<unsigned long long>1) << (n - 64)) - 1)
    else:
        full0 = ((<unsigned long long>1) << n) - 1
        full1 = 0

    try:
        _rec(&ctx, full0, full1, 0, 0, 0)
        counts = {}
        for jj in range(ctx.max_j + 1):
            for ll in range(ctx.max_l + 1):
                for ee in range(n_em):
                    c = ctx.cnt[(jj * (max_size + 1) + ll) * n_em + ee]
                    if c:
                        counts[(jj, ll, ee)] = c
        return counts
    finally:
        free(ctx.adj0)
        free(ctx.adj1)
        free(ctx.edge)
        free(ctx.cnt)
