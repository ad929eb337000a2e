# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inversion kernels. Same contract as ``_pykernels``."""

cdef enum:
    MAXN = 64

cdef int _count(int nrows, int *parts, int *word, int n) noexcept nogil:
    cdef int rows[MAXN][MAXN]
    cdef int fill[MAXN]
    cdef int col_e[MAXN]
    cdef int col_r[MAXN]
    cdef int col_n[MAXN]
    cdef int r, c, k, x, y, m, count = 0
    cdef int lo_r, hi_r, lo_n, hi_n
    for r in range(nrows):
        fill[r] = 0
    for k in range(n):
        r = word[k]
        rows[r][fill[r]] = k + 1
        fill[r] += 1
    for c in range(parts[0]):
        m = 0
        for r in range(nrows):
            if parts[r] <= c:
                break
            col_e[m] = rows[r][c]
            col_r[m] = r
            col_n[m] = rows[r][c + 1] if c + 1 < parts[r] else 0
            m += 1
        for x in range(m):
            for y in range(x + 1, m):
                if col_e[x] > col_e[y]:
                    lo_r = col_r[y]; hi_r = col_r[x]; lo_n = col_n[y]; hi_n = col_n[x]
                else:
                    lo_r = col_r[x]; hi_r = col_r[y]; lo_n = col_n[x]; hi_n = col_n[y]
                if lo_n == 0 or hi_n == 0:
                    if lo_r > hi_r:
                        count += 1
                elif lo_n > hi_n:
                    count += 1
    return count


cdef int _load(parts, int *cparts) except -1:
    cdef int r
    if len(parts) > MAXN or sum(parts) > MAXN:
        raise ValueError(f"compiled kernel supports n <= {MAXN}")
    for r in range(len(parts)):
        cparts[r] = parts[r]
    return len(parts)


def word_inversions(parts, word):
    cdef int cparts[MAXN]
    cdef int cword[MAXN]
    cdef int nrows = _load(tuple(parts), cparts)
    cdef int k, n = len(word)
    if n == 0:
        return 0
    for k in range(n):
        cword[k] = word[k]
    return _count(nrows, cparts, cword, n)


def inversion_histogram(parts, int dim):
    cdef int cparts[MAXN]
    cdef int word[MAXN]
    cdef int nrows = _load(tuple(parts), cparts)
    cdef int n = 0, r, i, k, m, tmp
    cdef long long[:] hist
    import array
    buf = array.array("q", [0] * (dim + 1))
    hist = buf
    for r in range(nrows):
        for i in range(cparts[r]):
            word[n] = r
            n += 1
    if n == 0:
        return [1]
    with nogil:
        while True:
            hist[_count(nrows, cparts, word, n)] += 1
            k = n - 2
            while k >= 0 and word[k] >= word[k + 1]:
                k -= 1
            if k < 0:
                break
            m = n - 1
            while word[m] <= word[k]:
                m -= 1
            tmp = word[k]; word[k] = word[m]; word[m] = tmp
            i = k + 1
            m = n - 1
            while i < m:
                tmp = word[i]; word[i] = word[m]; word[m] = tmp
                i += 1
                m -= 1
    return [int(v) for v in buf]
