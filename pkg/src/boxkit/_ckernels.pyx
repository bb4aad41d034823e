# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the loops in ``_pykernels``.

Same algorithms, same visiting order, same outputs.  Enumeration works on
graphs with at most 16 vertices and 64 edges; cover search on any number of
64-bit words.  Both inner searches run without the GIL.
"""

from libc.stdint cimport uint64_t, uint32_t, int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset
from libcpp.vector cimport vector
from libcpp.unordered_set cimport unordered_set

from boxkit._pykernels import SearchBudgetExceeded

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil
    int ctz32 "__builtin_ctz"(unsigned int) nogil

cdef enum:
    MAXV = 16

MAX_VERTICES = MAXV
MAX_EDGES = 64


cdef struct EnumState:
    int n
    uint32_t full
    uint32_t adj[MAXV]
    int eidx[MAXV][MAXV]
    int prefix[MAXV]
    int plen


cdef inline uint64_t edges_to(EnumState* st, int v, uint32_t targets) noexcept nogil:
    cdef uint64_t m = 0
    while targets:
        m |= (<uint64_t>1) << st.eidx[v][ctz32(targets)]
        targets &= targets - 1
    return m


cdef inline uint64_t pack_prefix(EnumState* st) noexcept nogil:
    cdef uint64_t p = 0
    cdef int i
    for i in range(st.plen):
        p |= (<uint64_t>st.prefix[i]) << (4 * i)
    return p


cdef void enum_dfs(EnumState* st, uint32_t used, uint32_t frontier, uint64_t edges,
                   unordered_set[uint64_t]* seen, vector[uint64_t]* out_masks,
                   vector[uint64_t]* out_prefix, vector[int]* out_len) noexcept nogil:
    cdef int depth = st.plen
    cdef uint32_t r = st.full & ~used
    cdef uint32_t low, nf
    cdef int v
    cdef bint branched = False
    while r:
        low = r & (~r + 1)
        v = ctz32(low)
        r ^= low
        if st.adj[v] & frontier == frontier:
            edges |= edges_to(st, v, frontier)
            used |= low
            st.prefix[st.plen] = v
            st.plen += 1
    r = st.full & ~used
    while r:
        low = r & (~r + 1)
        v = ctz32(low)
        r ^= low
        nf = st.adj[v] & frontier
        if nf:
            branched = True
            st.prefix[st.plen] = v
            st.plen += 1
            enum_dfs(st, used | low, nf, edges | edges_to(st, v, nf),
                     seen, out_masks, out_prefix, out_len)
            st.plen -= 1
    if not branched and seen.count(edges) == 0:
        seen.insert(edges)
        out_masks.push_back(edges)
        out_prefix.push_back(pack_prefix(st))
        out_len.push_back(st.plen)
    st.plen = depth


def prefix_terminals(int n, adj, eidx, first):
    """See ``_pykernels.prefix_terminals``."""
    if n > MAXV:
        raise ValueError(f"compiled enumeration supports at most {MAXV} vertices")
    cdef EnumState st
    cdef int u, v, i
    cdef uint32_t f
    memset(&st, 0, sizeof(EnumState))
    st.n = n
    st.full = ((<uint64_t>1) << n) - 1
    for u in range(n):
        st.adj[u] = adj[u]
        for v in range(n):
            i = eidx[u][v]
            if i >= 64:
                raise ValueError("compiled enumeration supports at most 64 edges")
            st.eidx[u][v] = i
    cdef unordered_set[uint64_t] seen
    cdef vector[uint64_t] masks
    cdef vector[uint64_t] prefixes
    cdef vector[int] lens
    cdef vector[int] firsts = [int(x) for x in first]
    with nogil:
        for i in range(<int>firsts.size()):
            v = firsts[i]
            st.plen = 1
            st.prefix[0] = v
            f = st.adj[v]
            if f:
                enum_dfs(&st, (<uint32_t>1) << v, f, edges_to(&st, v, f),
                         &seen, &masks, &prefixes, &lens)
            elif seen.count(0) == 0:
                seen.insert(0)
                masks.push_back(0)
                prefixes.push_back(pack_prefix(&st))
                lens.push_back(1)
    out = []
    cdef uint64_t p
    for i in range(<int>masks.size()):
        p = prefixes[i]
        out.append((int(masks[i]), tuple([(p >> (4 * j)) & 15 for j in range(lens[i])])))
    if n == 0:
        out = [(0, ())]
    return out


cdef struct CoverState:
    int W
    int k
    int ncand
    int maxsize
    uint64_t* cands
    int* elem_ptr
    int* elem_list
    char* top_ok
    uint64_t* stack
    int* chosen
    int64_t nodes
    int64_t budget
    int found_depth


cdef int cover_rec(CoverState* cs, int depth) noexcept nogil:
    cdef uint64_t* unc = cs.stack + depth * cs.W
    cdef uint64_t* nxt
    cdef uint64_t* c
    cdef int w, cnt = 0, e = -1, j, i, res
    cs.nodes += 1
    if cs.budget >= 0 and cs.nodes > cs.budget:
        return -1
    for w in range(cs.W):
        if unc[w]:
            cnt += popcount64(unc[w])
            if e < 0:
                e = w * 64 + ctz64(unc[w])
    if cnt == 0:
        cs.found_depth = depth
        return 1
    if depth == cs.k or (cs.k - depth) * cs.maxsize < cnt:
        return 0
    nxt = unc + cs.W
    for j in range(cs.elem_ptr[e], cs.elem_ptr[e + 1]):
        i = cs.elem_list[j]
        if depth == 0 and cs.top_ok != NULL and not cs.top_ok[i]:
            continue
        c = cs.cands + i * cs.W
        for w in range(cs.W):
            nxt[w] = unc[w] & ~c[w]
        cs.chosen[depth] = i
        res = cover_rec(cs, depth + 1)
        if res != 0:
            return res
    return 0


cdef void int_to_words(object x, uint64_t* out, int W):
    cdef int w
    mask = (1 << 64) - 1
    for w in range(W):
        out[w] = <uint64_t>(x & mask)
        x >>= 64


cdef class CoverProblem:
    """See ``_pykernels.CoverProblem``; searches release the GIL."""

    cdef int W
    cdef int ncand
    cdef int maxsize
    cdef uint64_t* cands
    cdef int* elem_ptr
    cdef int* elem_list
    cdef object universe

    def __cinit__(self, universe, cands):
        self.cands = NULL
        self.elem_ptr = NULL
        self.elem_list = NULL
        cands = [c & universe for c in cands]
        self.universe = universe
        cdef int nbits = max(universe.bit_length(), 1)
        cdef int W = (nbits + 63) // 64
        cdef int ncand = len(cands)
        cdef int i, e
        self.W = W
        self.ncand = ncand
        self.maxsize = max([c.bit_count() for c in cands], default=0)
        counts = [0] * (W * 64 + 1)
        member = []
        for i in range(ncand):
            c = cands[i]
            idx = []
            while c:
                low = c & -c
                e = low.bit_length() - 1
                idx.append(e)
                counts[e + 1] += 1
                c ^= low
            member.append(idx)
        for e in range(W * 64):
            counts[e + 1] += counts[e]
        self.cands = <uint64_t*>malloc(max(ncand, 1) * W * sizeof(uint64_t))
        self.elem_ptr = <int*>malloc((W * 64 + 1) * sizeof(int))
        self.elem_list = <int*>malloc(max(counts[W * 64], 1) * sizeof(int))
        if self.cands == NULL or self.elem_ptr == NULL or self.elem_list == NULL:
            raise MemoryError()
        fill = list(counts)
        for e in range(W * 64 + 1):
            self.elem_ptr[e] = counts[e]
        for i in range(ncand):
            int_to_words(cands[i], self.cands + i * W, W)
            for e in member[i]:
                self.elem_list[fill[e]] = i
                fill[e] += 1

    def __dealloc__(self):
        free(self.cands)
        free(self.elem_ptr)
        free(self.elem_list)

    def search(self, int k, top=None, budget=None):
        cdef CoverState cs
        cdef int i, res
        memset(&cs, 0, sizeof(CoverState))
        cs.W = self.W
        cs.k = k
        cs.ncand = self.ncand
        cs.maxsize = self.maxsize
        cs.budget = -1 if budget is None else budget
        cs.cands = self.cands
        cs.elem_ptr = self.elem_ptr
        cs.elem_list = self.elem_list
        cs.stack = <uint64_t*>malloc((k + 2) * self.W * sizeof(uint64_t))
        cs.chosen = <int*>malloc((k + 1) * sizeof(int))
        cs.top_ok = NULL
        try:
            if top is not None:
                cs.top_ok = <char*>malloc(max(self.ncand, 1))
                memset(cs.top_ok, 0, max(self.ncand, 1))
                for i in top:
                    cs.top_ok[i] = 1
            int_to_words(self.universe, cs.stack, self.W)
            with nogil:
                res = cover_rec(&cs, 0)
            if res < 0:
                raise SearchBudgetExceeded(cs.nodes)
            if res == 1:
                return [cs.chosen[i] for i in range(cs.found_depth)], int(cs.nodes)
            return None, int(cs.nodes)
        finally:
            free(cs.stack)
            free(cs.chosen)
            if cs.top_ok != NULL:
                free(cs.top_ok)


def cover_search(universe, cands, int k, top=None, budget=None):
    """See ``_pykernels.cover_search``."""
    return CoverProblem(universe, cands).search(k, top, budget)


def first_branch_options(universe, cands):
    if not universe:
        return []
    e = (universe & -universe).bit_length() - 1
    return [i for i, c in enumerate(cands) if c >> e & 1]
