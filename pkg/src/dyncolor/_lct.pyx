# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled link-cut tree kernel.  Same interface as ``_lct_py.LinkCut``."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.string cimport memset


cdef class LinkCut:
    cdef readonly int n
    cdef int* _l
    cdef int* _r
    cdef int* _p
    cdef int* _sz
    cdef unsigned char* _rev
    cdef int* _stack

    def __cinit__(self, int n):
        cdef int i
        cdef size_t cells = <size_t>(n + 1)
        self.n = n
        self._l = <int*>PyMem_Malloc(cells * sizeof(int))
        self._r = <int*>PyMem_Malloc(cells * sizeof(int))
        self._p = <int*>PyMem_Malloc(cells * sizeof(int))
        self._sz = <int*>PyMem_Malloc(cells * sizeof(int))
        self._stack = <int*>PyMem_Malloc(cells * sizeof(int))
        self._rev = <unsigned char*>PyMem_Malloc(cells)
        if (not self._l or not self._r or not self._p or not self._sz
                or not self._stack or not self._rev):
            raise MemoryError()
        memset(self._l, 0, cells * sizeof(int))
        memset(self._r, 0, cells * sizeof(int))
        memset(self._p, 0, cells * sizeof(int))
        memset(self._rev, 0, cells)
        for i in range(1, n + 1):
            self._sz[i] = 1
        self._sz[0] = 0

    def __dealloc__(self):
        PyMem_Free(self._l)
        PyMem_Free(self._r)
        PyMem_Free(self._p)
        PyMem_Free(self._sz)
        PyMem_Free(self._stack)
        PyMem_Free(self._rev)

    cdef inline bint _is_root(self, int x) nogil:
        cdef int p = self._p[x]
        return p == 0 or (self._l[p] != x and self._r[p] != x)

    cdef inline void _push(self, int x) nogil:
        cdef int l, r
        if self._rev[x]:
            l = self._l[x]
            r = self._r[x]
            self._l[x] = r
            self._r[x] = l
            if l:
                self._rev[l] ^= 1
            if r:
                self._rev[r] ^= 1
            self._rev[x] = 0

    cdef inline void _pull(self, int x) nogil:
        self._sz[x] = 1 + self._sz[self._l[x]] + self._sz[self._r[x]]

    cdef void _rotate(self, int x) nogil:
        cdef int p = self._p[x]
        cdef int g = self._p[p]
        cdef int b
        if not self._is_root(p):
            if self._l[g] == p:
                self._l[g] = x
            else:
                self._r[g] = x
        self._p[x] = g
        if self._l[p] == x:
            b = self._r[x]
            self._l[p] = b
            if b:
                self._p[b] = p
            self._r[x] = p
        else:
            b = self._l[x]
            self._r[p] = b
            if b:
                self._p[b] = p
            self._l[x] = p
        self._p[p] = x
        self._pull(p)
        self._pull(x)

    cdef void _splay(self, int x) nogil:
        cdef int top = 0
        cdef int y = x
        cdef int p, g
        self._stack[top] = y
        while not self._is_root(y):
            y = self._p[y]
            top += 1
            self._stack[top] = y
        while top >= 0:
            self._push(self._stack[top])
            top -= 1
        while not self._is_root(x):
            p = self._p[x]
            if not self._is_root(p):
                g = self._p[p]
                if (self._l[g] == p) == (self._l[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    cdef void _access(self, int x) nogil:
        cdef int last = 0
        cdef int y = x
        while y:
            self._splay(y)
            self._r[y] = last
            self._pull(y)
            last = y
            y = self._p[y]
        self._splay(x)

    cdef int _find_root(self, int x) nogil:
        self._access(x)
        self._push(x)
        while self._l[x]:
            x = self._l[x]
            self._push(x)
        self._splay(x)
        return x

    cdef inline void _check(self, int u) except *:
        if u < 0 or u >= self.n:
            raise IndexError(u)

    cpdef int find_root(self, int u) except -1:
        self._check(u)
        return self._find_root(u + 1) - 1

    cpdef bint connected(self, int u, int v) except *:
        self._check(u)
        self._check(v)
        return u == v or self._find_root(u + 1) == self._find_root(v + 1)

    cpdef int depth(self, int u) except -1:
        cdef int x = u + 1
        self._check(u)
        self._access(x)
        return self._sz[self._l[x]]

    def parities(self):
        """``depth(u) & 1`` for every vertex."""
        cdef bytearray out = bytearray(self.n)
        cdef unsigned char* buf = out
        cdef int i, x
        for i in range(self.n):
            x = i + 1
            self._access(x)
            buf[i] = self._sz[self._l[x]] & 1
        return bytes(out)

    cpdef void evert(self, int u) except *:
        cdef int x = u + 1
        self._check(u)
        self._access(x)
        self._rev[x] ^= 1

    cpdef void link(self, int u, int v) except *:
        self._check(v)
        self.evert(u)
        self._p[u + 1] = v + 1

    cpdef int cut(self, int u, int v) except -1:
        cdef int child
        cdef int x, left
        child = u if self.depth(u) > self.depth(v) else v
        x = child + 1
        self._access(x)
        left = self._l[x]
        self._p[left] = 0
        self._l[x] = 0
        self._pull(x)
        return child
