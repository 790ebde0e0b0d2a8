# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled tableau kernel.

Same search as ``_kernel_py`` (same branching order, same blocking, same
budget accounting) with labels held in C word arrays.
"""
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport uint64_t
from cpython.bytes cimport PyBytes_FromStringAndSize

DEF K_TOP = 0
DEF K_BOTTOM = 1
DEF K_ATOM = 2
DEF K_NEG = 3
DEF K_AND = 4
DEF K_OR = 5
DEF K_EXISTS = 6
DEF K_FORALL = 7

DEF R_LIMIT = -1
DEF NO_BLOCK = 1 << 30


cdef inline bint has(const uint64_t* lab, int c) nogil:
    return (lab[c >> 6] >> (c & 63)) & 1


cdef inline void put(uint64_t* lab, int c) nogil:
    lab[c >> 6] |= (<uint64_t>1) << (c & 63)


cdef class _Search:
    cdef int n, W, n_roles, n_exists
    cdef int* kind
    cdef int* arg
    cdef int* filler
    cdef int* comp
    cdef int* child_off
    cdef int* child_idx
    cdef int* exists_ids
    cdef int* forall_off
    cdef int* forall_idx
    cdef int todo_cap
    cdef uint64_t* ubits
    cdef long budget
    cdef long ticks
    cdef set unsat
    cdef set sat
    cdef int low
    cdef uint64_t** anc
    cdef int n_anc
    cdef int cap_anc

    def __cinit__(self, kind, arg, filler, children, comp, int n_roles, universal, long budget):
        cdef int i, j, k, total
        self.n = len(kind)
        self.W = (self.n + 63) // 64 if self.n > 0 else 1
        self.n_roles = n_roles
        self.budget = budget
        self.ticks = 0
        self.unsat = set()
        self.sat = set()
        self.low = NO_BLOCK
        self.kind = <int*>malloc(max(self.n, 1) * sizeof(int))
        self.arg = <int*>malloc(max(self.n, 1) * sizeof(int))
        self.filler = <int*>malloc(max(self.n, 1) * sizeof(int))
        self.comp = <int*>malloc(max(self.n, 1) * sizeof(int))
        self.child_off = <int*>malloc((self.n + 1) * sizeof(int))
        total = 0
        for i in range(self.n):
            self.kind[i] = kind[i]
            self.arg[i] = arg[i]
            self.filler[i] = filler[i]
            self.comp[i] = comp[i]
            self.child_off[i] = total
            total += len(children[i])
        self.child_off[self.n] = total
        self.child_idx = <int*>malloc(max(total, 1) * sizeof(int))
        for i in range(self.n):
            j = self.child_off[i]
            for c in children[i]:
                self.child_idx[j] = c
                j += 1
        # seeds, AND children, and one forced disjunct per OR
        self.todo_cap = 2 * self.n + total + 2

        self.n_exists = 0
        for i in range(self.n):
            if self.kind[i] == K_EXISTS:
                self.n_exists += 1
        self.exists_ids = <int*>malloc(max(self.n_exists, 1) * sizeof(int))
        j = 0
        for i in range(self.n):
            if self.kind[i] == K_EXISTS:
                self.exists_ids[j] = i
                j += 1

        self.forall_off = <int*>malloc((n_roles + 1) * sizeof(int))
        memset(self.forall_off, 0, (n_roles + 1) * sizeof(int))
        for i in range(self.n):
            if self.kind[i] == K_FORALL:
                self.forall_off[self.arg[i] + 1] += 1
        for k in range(n_roles):
            self.forall_off[k + 1] += self.forall_off[k]
        self.forall_idx = <int*>malloc(max(self.forall_off[n_roles], 1) * sizeof(int))
        fill = [0] * n_roles
        for i in range(self.n):
            if self.kind[i] == K_FORALL:
                k = self.arg[i]
                self.forall_idx[self.forall_off[k] + fill[k]] = i
                fill[k] += 1

        self.ubits = <uint64_t*>malloc(self.W * sizeof(uint64_t))
        memset(self.ubits, 0, self.W * sizeof(uint64_t))
        for u in universal:
            put(self.ubits, u)

        self.cap_anc = 64
        self.n_anc = 0
        self.anc = <uint64_t**>malloc(self.cap_anc * sizeof(uint64_t*))

    def __dealloc__(self):
        free(self.kind)
        free(self.arg)
        free(self.filler)
        free(self.comp)
        free(self.child_off)
        free(self.child_idx)
        free(self.exists_ids)
        free(self.forall_off)
        free(self.forall_idx)
        free(self.ubits)
        free(self.anc)

    cdef int tick(self):
        self.ticks += 1
        if self.ticks > self.budget:
            return 0
        return 1

    cdef int push_anc(self, uint64_t* lab):
        cdef uint64_t** grown
        if self.n_anc == self.cap_anc:
            grown = <uint64_t**>malloc(2 * self.cap_anc * sizeof(uint64_t*))
            memcpy(grown, self.anc, self.cap_anc * sizeof(uint64_t*))
            free(self.anc)
            self.anc = grown
            self.cap_anc *= 2
        self.anc[self.n_anc] = lab
        self.n_anc += 1
        return 0

    cdef int node(self, const uint64_t* init):
        """1 sat, 0 unsat, -1 budget exhausted."""
        cdef int i, r, nseeds = 0, depth, outer, used
        cdef int* seeds
        cdef uint64_t* zero
        if not self.tick():
            return R_LIMIT
        key = PyBytes_FromStringAndSize(<const char*>init, self.W * sizeof(uint64_t))
        if key in self.unsat:
            return 0
        if key in self.sat:
            return 1
        depth = self.n_anc
        outer = self.low
        self.low = NO_BLOCK
        seeds = <int*>malloc(max(self.n, 1) * sizeof(int))
        for i in range(self.n):
            if has(init, i):
                seeds[nseeds] = i
                nseeds += 1
        zero = <uint64_t*>malloc(self.W * sizeof(uint64_t))
        memset(zero, 0, self.W * sizeof(uint64_t))
        r = self.expand(zero, NULL, 0, seeds, nseeds)
        free(zero)
        free(seeds)
        used = self.low
        self.low = min(outer, used)
        if r == 0:
            self.unsat.add(key)
        elif r == 1 and used >= depth:
            self.sat.add(key)
        return r

    cdef bint hopeless(self, int d, const uint64_t* lab):
        cdef int k = self.kind[d]
        cdef int c
        if k == K_BOTTOM:
            return True
        if k == K_ATOM or k == K_NEG:
            c = self.comp[d]
            return c >= 0 and has(lab, c)
        return False

    cdef int expand(self, const uint64_t* lab_in, const int* ors_in, int nors_in,
                    const int* seeds, int nseeds):
        cdef int W = self.W
        cdef uint64_t* lab = <uint64_t*>malloc(W * sizeof(uint64_t))
        cdef int* ors = <int*>malloc(max(self.n, 1) * sizeof(int))
        cdef int* todo = <int*>malloc(self.todo_cap * sizeof(int))
        cdef int* open_ = <int*>malloc(max(self.n, 1) * sizeof(int))
        cdef int nors = nors_in, ntodo = 0, nopen = 0, result = -2
        cdef int c, cc, k, j, o, d, a, b, r
        cdef bint resolved
        memcpy(lab, lab_in, W * sizeof(uint64_t))
        if nors_in > 0:
            memcpy(ors, ors_in, nors_in * sizeof(int))
        for j in range(nseeds):
            todo[ntodo] = seeds[j]
            ntodo += 1

        while result == -2:
            while ntodo > 0:
                ntodo -= 1
                c = todo[ntodo]
                if has(lab, c):
                    continue
                k = self.kind[c]
                if k == K_BOTTOM:
                    result = 0
                    break
                if k == K_ATOM or k == K_NEG:
                    cc = self.comp[c]
                    if cc >= 0 and has(lab, cc):
                        result = 0
                        break
                put(lab, c)
                if k == K_AND:
                    a = self.child_off[c]
                    b = self.child_off[c + 1]
                    for j in range(a, b):
                        todo[ntodo] = self.child_idx[j]
                        ntodo += 1
                elif k == K_OR:
                    ors[nors] = c
                    nors += 1
            if result != -2:
                break

            nopen = -1
            for j in range(nors):
                o = ors[j]
                a = self.child_off[o]
                b = self.child_off[o + 1]
                resolved = False
                for d in range(a, b):
                    if has(lab, self.child_idx[d]):
                        resolved = True
                        break
                if resolved:
                    continue
                nopen = 0
                for d in range(a, b):
                    if not self.hopeless(self.child_idx[d], lab):
                        open_[nopen] = self.child_idx[d]
                        nopen += 1
                break

            if nopen == -1:
                result = self.successors(lab)
            elif nopen == 0:
                result = 0
            elif nopen == 1:
                todo[ntodo] = open_[0]
                ntodo += 1
            else:
                result = 0
                for j in range(nopen):
                    if not self.tick():
                        result = R_LIMIT
                        break
                    d = open_[j]
                    r = self.expand(lab, ors, nors, &d, 1)
                    if r != 0:
                        result = r
                        break

        free(lab)
        free(ors)
        free(todo)
        free(open_)
        return result

    cdef int successors(self, uint64_t* lab):
        cdef int W = self.W
        cdef uint64_t* s = <uint64_t*>malloc(W * sizeof(uint64_t))
        cdef int i, e, f, j, w, r, cur, result = 1
        cdef bint pushed = False, blocked
        for i in range(self.n_exists):
            e = self.exists_ids[i]
            if not has(lab, e):
                continue
            memcpy(s, self.ubits, W * sizeof(uint64_t))
            put(s, self.filler[e])
            for j in range(self.forall_off[self.arg[e]], self.forall_off[self.arg[e] + 1]):
                f = self.forall_idx[j]
                if has(lab, f):
                    put(s, self.filler[f])
            # depth of the current node; ancestors sit below it in the stack
            cur = self.n_anc - (1 if pushed else 0)
            blocked = True
            for w in range(W):
                if s[w] & ~lab[w]:
                    blocked = False
                    break
            j = cur
            if not blocked:
                for j in range(cur - 1, -1, -1):
                    blocked = True
                    for w in range(W):
                        if s[w] & ~self.anc[j][w]:
                            blocked = False
                            break
                    if blocked:
                        break
            if blocked:
                if j < self.low:
                    self.low = j
                continue
            if not pushed:
                self.push_anc(lab)
                pushed = True
            r = self.node(s)
            if r != 1:
                result = r
                break
        if pushed:
            self.n_anc -= 1
        free(s)
        return result


def satisfiable(kind, arg, filler, children, comp, int n_roles, roots, universal, long budget):
    """Decide whether ``roots`` can hold together at one element.

    Returns 1 (satisfiable), 0 (unsatisfiable) or -1 (budget exhausted).
    """
    cdef _Search search = _Search(kind, arg, filler, children, comp, n_roles, universal, budget)
    cdef uint64_t* init = <uint64_t*>malloc(search.W * sizeof(uint64_t))
    cdef int r
    memcpy(init, search.ubits, search.W * sizeof(uint64_t))
    for x in roots:
        put(init, x)
    r = search.node(init)
    free(init)
    return r
