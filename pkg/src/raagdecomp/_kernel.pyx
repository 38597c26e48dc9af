# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled letter-sequence kernels.

Same contracts and byte encoding as `_pykernel`; see there for the algorithm
notes. Adjacency masks live in 64-bit words, so this backend handles at most
63 generators; the dispatcher in `kernels` falls back to the pure module
beyond that.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memmove

from .errors import BudgetExceededError


cdef int _load_masks(tuple masks, unsigned long long* cmask) except -1:
    cdef Py_ssize_t i, ng = len(masks)
    if ng > 63:
        raise ValueError("compiled kernel supports at most 63 generators")
    for i in range(ng):
        cmask[i] = masks[i]
    return 0


def canonicalize(object data, tuple masks):
    """Shortlex-least geodesic spelling; mirrors `_pykernel.canonicalize`."""
    cdef bytes bs = bytes(data)
    cdef Py_ssize_t n = len(bs)
    if n == 0:
        return b""
    cdef unsigned long long[64] cmask
    cdef unsigned long long[64] block
    cdef Py_ssize_t ng = len(masks)
    _load_masks(masks, cmask)
    cdef unsigned long long full = (<unsigned long long>1 << ng) - 1
    cdef Py_ssize_t i
    for i in range(ng):
        block[i] = full & ~cmask[i]

    cdef const unsigned char* src = <const unsigned char*>PyBytes_AS_STRING(bs)
    cdef unsigned char* buf = <unsigned char*>malloc(n)
    cdef unsigned char* out = <unsigned char*>malloc(n)
    if buf == NULL or out == NULL:
        free(buf)
        free(out)
        raise MemoryError()

    cdef Py_ssize_t top = 0, j, cancel, p, best_pos, out_len
    cdef int x, y, gx, gy, g, best
    cdef unsigned long long mx, bad
    try:
        # stack reduction: scan down past commuting letters, cancel the
        # first reachable inverse; same generator or non-neighbour blocks
        for i in range(n):
            x = src[i]
            gx = x >> 1
            mx = cmask[gx]
            j = top - 1
            cancel = -1
            while j >= 0:
                y = buf[j]
                gy = y >> 1
                if gy == gx:
                    if y == (x ^ 1):
                        cancel = j
                    break
                if not (mx >> gy) & 1:
                    break
                j -= 1
            if cancel >= 0:
                memmove(buf + cancel, buf + cancel + 1, top - cancel - 1)
                top -= 1
            else:
                buf[top] = x
                top += 1

        # linearization: emit the least front-movable letter until done
        out_len = 0
        while top > 0:
            bad = 0
            best = 256
            best_pos = -1
            for p in range(top):
                x = buf[p]
                g = x >> 1
                if not (bad >> g) & 1 and x < best:
                    best = x
                    best_pos = p
                bad |= block[g]
                if bad == full:
                    break
            out[out_len] = <unsigned char>best
            out_len += 1
            memmove(buf + best_pos, buf + best_pos + 1, top - best_pos - 1)
            top -= 1
        return PyBytes_FromStringAndSize(<const char*>out, out_len)
    finally:
        free(buf)
        free(out)


cdef bytes _cancelled(const unsigned char* sp, Py_ssize_t n, Py_ssize_t i):
    cdef bytes t = PyBytes_FromStringAndSize(NULL, n - 2)
    cdef unsigned char* tp = <unsigned char*>PyBytes_AS_STRING(t)
    memcpy(tp, sp, i)
    memcpy(tp + i, sp + i + 2, n - i - 2)
    return t


cdef bytes _swapped(const unsigned char* sp, Py_ssize_t n, Py_ssize_t i):
    cdef bytes t = PyBytes_FromStringAndSize(<const char*>sp, n)
    cdef unsigned char* tp = <unsigned char*>PyBytes_AS_STRING(t)
    tp[i] = sp[i + 1]
    tp[i + 1] = sp[i]
    return t


def closure_canonical(object data, tuple masks, Py_ssize_t max_states):
    """Least word in the full move-closure; mirrors the pure version."""
    cdef unsigned long long[64] cmask
    _load_masks(masks, cmask)
    cdef bytes start = bytes(data)
    cdef set seen = {start}
    cdef list queue = [start]
    cdef bytes best = start, s, t
    cdef Py_ssize_t qi = 0, n, i
    cdef const unsigned char* sp
    cdef int a, b, ga, gb, kind
    while qi < len(queue):
        s = <bytes>queue[qi]
        qi += 1
        n = len(s)
        sp = <const unsigned char*>PyBytes_AS_STRING(s)
        for i in range(n - 1):
            a = sp[i]
            b = sp[i + 1]
            for kind in range(2):
                if kind == 0:
                    if a != (b ^ 1):
                        continue
                    t = _cancelled(sp, n, i)
                else:
                    ga = a >> 1
                    gb = b >> 1
                    if ga == gb or not (cmask[ga] >> gb) & 1:
                        continue
                    t = _swapped(sp, n, i)
                if t in seen:
                    continue
                if len(seen) >= max_states:
                    raise BudgetExceededError(
                        "closure exceeded %d states" % max_states,
                        dimension="max_states")
                seen.add(t)
                queue.append(t)
                if len(t) < len(best) or (len(t) == len(best) and t < best):
                    best = t
        # sp points into s, which the queue keeps alive for the whole scan
    return best


def closure_equal(object w1, object w2, tuple masks, Py_ssize_t max_states):
    """True iff the move-closures of `w1` and `w2` intersect."""
    cdef unsigned long long[64] cmask
    _load_masks(masks, cmask)
    cdef bytes wa = bytes(w1), wb = bytes(w2)
    if wa == wb:
        return True
    cdef dict side = {wa: 0, wb: 1}
    cdef list qs0 = [wa], qs1 = [wb]
    cdef Py_ssize_t h0 = 0, h1 = 0, n, i
    cdef list q
    cdef bytes s, t
    cdef const unsigned char* sp
    cdef int a, b, ga, gb, kind, k
    cdef object o
    while h0 < len(qs0) or h1 < len(qs1):
        for k in range(2):
            if k == 0:
                if h0 >= len(qs0):
                    continue
                q = qs0
                s = <bytes>qs0[h0]
                h0 += 1
            else:
                if h1 >= len(qs1):
                    continue
                q = qs1
                s = <bytes>qs1[h1]
                h1 += 1
            n = len(s)
            sp = <const unsigned char*>PyBytes_AS_STRING(s)
            for i in range(n - 1):
                a = sp[i]
                b = sp[i + 1]
                for kind in range(2):
                    if kind == 0:
                        if a != (b ^ 1):
                            continue
                        t = _cancelled(sp, n, i)
                    else:
                        ga = a >> 1
                        gb = b >> 1
                        if ga == gb or not (cmask[ga] >> gb) & 1:
                            continue
                        t = _swapped(sp, n, i)
                    o = side.get(t)
                    if o is None:
                        if len(side) >= max_states:
                            raise BudgetExceededError(
                                "closure exceeded %d states" % max_states,
                                dimension="max_states")
                        side[t] = k
                        q.append(t)
                    elif <int>o != k:
                        return True
    return False
