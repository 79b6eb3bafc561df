# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled digit-vector kernels.

Behavioural mirror of ``carrymul._kernels_py`` (same functions, same digit
lists in and out, same counter conventions); see that module for the
representation and the accounting rules.  Digits fit in an unsigned char
(bases stop at 36), so every kernel copies its operands into C buffers once
and loops without touching Python objects.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset


cdef inline Py_ssize_t _c_strip(unsigned char* x, Py_ssize_t n) noexcept nogil:
    while n and x[n - 1] == 0:
        n -= 1
    return n


cdef inline int _c_cmp(unsigned char* x, Py_ssize_t lx,
                       unsigned char* y, Py_ssize_t ly) noexcept nogil:
    cdef Py_ssize_t i
    if lx != ly:
        return -1 if lx < ly else 1
    for i in range(lx - 1, -1, -1):
        if x[i] != y[i]:
            return -1 if x[i] < y[i] else 1
    return 0


cdef inline Py_ssize_t _c_add(unsigned char* x, Py_ssize_t lx,
                              unsigned char* y, Py_ssize_t ly,
                              unsigned char* out, int base) noexcept nogil:
    # out must not alias x or y; needs room for max(lx, ly) + 1 digits
    cdef unsigned char* hi = x
    cdef unsigned char* lo = y
    cdef Py_ssize_t lhi = lx, llo = ly, i
    cdef int carry = 0, t
    if lhi < llo:
        hi = y
        lo = x
        lhi = ly
        llo = lx
    for i in range(llo):
        t = hi[i] + lo[i] + carry
        if t >= base:
            out[i] = <unsigned char>(t - base)
            carry = 1
        else:
            out[i] = <unsigned char>t
            carry = 0
    for i in range(llo, lhi):
        t = hi[i] + carry
        if t >= base:
            out[i] = <unsigned char>(t - base)
            carry = 1
        else:
            out[i] = <unsigned char>t
            carry = 0
    if carry:
        out[lhi] = 1
        return lhi + 1
    return lhi


cdef inline Py_ssize_t _c_mul_digit(unsigned char* x, Py_ssize_t lx, int d,
                                    unsigned char* out, int base) noexcept nogil:
    # needs room for lx + 1 digits; canonical x and d >= 1 give canonical out
    cdef Py_ssize_t i
    cdef int carry = 0, t
    if d == 0:
        return 0
    for i in range(lx):
        t = x[i] * d + carry
        out[i] = <unsigned char>(t % base)
        carry = t / base
    if carry:
        out[lx] = <unsigned char>carry
        return lx + 1
    return lx


cdef inline Py_ssize_t _c_halve(unsigned char* m, Py_ssize_t lm, int base,
                                int* bit) noexcept nogil:
    cdef Py_ssize_t i
    cdef int r = 0, cur
    for i in range(lm - 1, -1, -1):
        cur = r * base + m[i]
        m[i] = <unsigned char>(cur >> 1)
        r = cur & 1
    bit[0] = r
    return _c_strip(m, lm)


cdef Py_ssize_t _from_list(list src, unsigned char* dst) except -1:
    cdef Py_ssize_t i, n = len(src)
    for i in range(n):
        dst[i] = <unsigned char><int>src[i]
    return n


cdef list _to_list(unsigned char* src, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = src[i]
    return out


def normalize(digits):
    cdef Py_ssize_t n = len(digits)
    while n and digits[n - 1] == 0:
        n -= 1
    return digits[:n]


def compare(a, b):
    cdef Py_ssize_t la = len(a), lb = len(b), i
    cdef int x, y
    if la != lb:
        return -1 if la < lb else 1
    for i in range(la - 1, -1, -1):
        x = <int>a[i]
        y = <int>b[i]
        if x != y:
            return -1 if x < y else 1
    return 0


def add(list a, list b, int base):
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t hi = la if la > lb else lb
    cdef unsigned char* buf = <unsigned char*>malloc(la + lb + hi + 1)
    if buf == NULL:
        raise MemoryError()
    cdef unsigned char* xa = buf
    cdef unsigned char* xb = buf + la
    cdef unsigned char* out = buf + la + lb
    cdef Py_ssize_t lout
    cdef Py_ssize_t adds
    try:
        _from_list(a, xa)
        _from_list(b, xb)
        lout = _c_add(xa, la, xb, lb, out, base)
        adds = hi + (1 if lout > hi else 0)
        return _to_list(out, lout), adds
    finally:
        free(buf)


def mul_by_digit(list a, int d, int base):
    cdef Py_ssize_t la = len(a)
    cdef unsigned char* buf = <unsigned char*>malloc(2 * la + 1)
    if buf == NULL:
        raise MemoryError()
    cdef unsigned char* xa = buf
    cdef unsigned char* out = buf + la
    cdef Py_ssize_t lout
    try:
        _from_list(a, xa)
        lout = _c_mul_digit(xa, la, d, out, base)
        return _to_list(out, lout), la, la
    finally:
        free(buf)


def divmod_base(n):
    if not n:
        return [], 0
    return n[1:], n[0]


def shift(n, k):
    if not n:
        return []
    return [0] * k + list(n)


def incremental(list a, list b, int base):
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef list steps = []
    if lb == 0:
        return steps, [], 0, 0

    # partition one block: a | product | sum | carry | emitted | result
    cdef Py_ssize_t cap = la + 2
    cdef unsigned char* buf = <unsigned char*>malloc(la + 3 * cap + lb + (la + lb + 2))
    if buf == NULL:
        raise MemoryError()
    cdef unsigned char* xa = buf
    cdef unsigned char* tbuf = buf + la
    cdef unsigned char* sbuf = tbuf + cap
    cdef unsigned char* cbuf = sbuf + cap
    cdef unsigned char* rbuf = cbuf + cap
    cdef unsigned char* obuf = rbuf + lb

    cdef Py_ssize_t mults = 0, adds = 0
    cdef Py_ssize_t k, lt, ls, lc = 0, hi, lout, i
    cdef int d, r
    try:
        _from_list(a, xa)
        for k in range(lb):
            d = <int>b[k]
            lt = _c_mul_digit(xa, la, d, tbuf, base)
            mults += la
            adds += la
            if k:
                hi = lt if lt > lc else lc
                ls = _c_add(tbuf, lt, cbuf, lc, sbuf, base)
                adds += hi + (1 if ls > hi else 0)
            else:
                memcpy(sbuf, tbuf, lt)
                ls = lt
            if ls > 0:
                r = sbuf[0]
                lc = ls - 1
                memcpy(cbuf, sbuf + 1, lc)
            else:
                r = 0
                lc = 0
            rbuf[k] = <unsigned char>r
            steps.append((_to_list(sbuf, ls), r, _to_list(cbuf, lc)))
        # result = carry * base**lb + emitted digits
        memcpy(obuf, rbuf, lb)
        memcpy(obuf + lb, cbuf, lc)
        lout = _c_strip(obuf, lb + lc)
        return steps, _to_list(obuf, lout), mults, adds
    finally:
        free(buf)


def schoolbook(list a, list b, int base):
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef list rows = []
    if lb == 0:
        return rows, [], 0, 0

    cdef Py_ssize_t cap = la + lb + 2
    cdef unsigned char* buf = <unsigned char*>malloc(la + (la + 1) + 3 * cap)
    if buf == NULL:
        raise MemoryError()
    cdef unsigned char* xa = buf
    cdef unsigned char* tbuf = buf + la
    cdef unsigned char* rowbuf = tbuf + (la + 1)
    cdef unsigned char* acc = rowbuf + cap
    cdef unsigned char* tmp = acc + cap
    cdef unsigned char* swap

    cdef Py_ssize_t mults = 0, adds = 0
    cdef Py_ssize_t j, lt, lrow, lacc = 0, hi, lnew
    try:
        _from_list(a, xa)
        for j in range(lb):
            lt = _c_mul_digit(xa, la, <int>b[j], tbuf, base)
            mults += la
            adds += la
            if lt == 0:
                lrow = 0
            else:
                memset(rowbuf, 0, j)
                memcpy(rowbuf + j, tbuf, lt)
                lrow = j + lt
            rows.append(_to_list(rowbuf, lrow))
            if j == 0:
                memcpy(acc, rowbuf, lrow)
                lacc = lrow
            else:
                hi = lacc if lacc > lrow else lrow
                lnew = _c_add(acc, lacc, rowbuf, lrow, tmp, base)
                adds += hi + (1 if lnew > hi else 0)
                swap = acc
                acc = tmp
                tmp = swap
                lacc = lnew
        return rows, _to_list(acc, lacc), mults, adds
    finally:
        free(buf)


def check_invariant(list a, list b, list steps, int base):
    cdef list flags = []
    cdef Py_ssize_t la = len(a), lb = len(b), nsteps = len(steps)
    if nsteps == 0:
        return flags

    # carry vectors come from the caller; size the lhs buffer for the longest
    cdef Py_ssize_t maxc = 0, lc
    cdef Py_ssize_t k
    for k in range(nsteps):
        lc = len(<list>(<tuple>steps[k])[2])
        if lc > maxc:
            maxc = lc

    cdef Py_ssize_t cap = la + lb + 2
    cdef Py_ssize_t lhs_cap = nsteps + maxc + 1
    cdef unsigned char* buf = <unsigned char*>malloc(
        la + (la + 1) + 3 * cap + nsteps + lhs_cap
    )
    if buf == NULL:
        raise MemoryError()
    cdef unsigned char* xa = buf
    cdef unsigned char* tbuf = buf + la
    cdef unsigned char* rowbuf = tbuf + (la + 1)
    cdef unsigned char* rhs = rowbuf + cap
    cdef unsigned char* tmp = rhs + cap
    cdef unsigned char* rpref = tmp + cap
    cdef unsigned char* lhs = rpref + nsteps
    cdef unsigned char* swap

    cdef Py_ssize_t lt, lrow, lrhs = 0, llhs, lnew
    cdef int r
    cdef tuple step
    cdef list cvec
    try:
        _from_list(a, xa)
        for k in range(nsteps):
            step = <tuple>steps[k]
            if k >= lb:
                flags.append(False)
                continue
            r = <int>step[1]
            if r < 0 or r >= base:
                raise ValueError(f"step {k} digit {r} out of range for base {base}")
            cvec = <list>step[2]
            lt = _c_mul_digit(xa, la, <int>b[k], tbuf, base)
            if lt == 0:
                lrow = 0
            else:
                memset(rowbuf, 0, k)
                memcpy(rowbuf + k, tbuf, lt)
                lrow = k + lt
            lnew = _c_add(rhs, lrhs, rowbuf, lrow, tmp, base)
            swap = rhs
            rhs = tmp
            tmp = swap
            lrhs = lnew
            rpref[k] = <unsigned char>r
            memcpy(lhs, rpref, k + 1)
            lc = _from_list(cvec, lhs + k + 1)
            llhs = _c_strip(lhs, k + 1 + lc)
            flags.append(_c_cmp(lhs, llhs, rhs, lrhs) == 0)
        return flags
    finally:
        free(buf)


def oracle_mul(list a, list b, int base):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if lb == 0 or la == 0:
        return []

    cdef Py_ssize_t cap = la + lb + 2
    cdef unsigned char* buf = <unsigned char*>malloc(lb + 4 * cap)
    if buf == NULL:
        raise MemoryError()
    cdef unsigned char* m = buf
    cdef unsigned char* acc = buf + lb
    cdef unsigned char* acc2 = acc + cap
    cdef unsigned char* addend = acc2 + cap
    cdef unsigned char* addend2 = addend + cap
    cdef unsigned char* swap

    cdef Py_ssize_t lm, lacc = 0, ladd
    cdef int bit
    try:
        lm = _from_list(b, m)
        ladd = _from_list(a, addend)
        while lm:
            lm = _c_halve(m, lm, base, &bit)
            if bit:
                lacc = _c_add(acc, lacc, addend, ladd, acc2, base)
                swap = acc
                acc = acc2
                acc2 = swap
            if lm:
                ladd = _c_add(addend, ladd, addend, ladd, addend2, base)
                swap = addend
                addend = addend2
                addend2 = swap
        return _to_list(acc, lacc)
    finally:
        free(buf)
