# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled float fast-path kernels.

Small-matrix Hermitian eigenvalues via complex Householder reduction to a
real symmetric tridiagonal followed by implicit QL, plus the batched sign
counting and the coordinate-descent inner loop of the search module.
Matches the numpy fallback (_kernels_py) up to floating-point noise; every
decision downstream is re-verified exactly, so this layer trades only time,
never soundness.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, hypot, sqrt, INFINITY

cnp.import_array()

BACKEND = "compiled"

DEF MAXN = 32
DEF MAXD = 1024
cdef double EPS = 2.220446049250313e-16


cdef inline double _cabs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


cdef int _tridiag(double complex* a, int n, double* d, double* e) nogil:
    """Householder reduction of a Hermitian matrix (row-major, destroyed)
    to tridiagonal form; d gets the diagonal, e the subdiagonal magnitudes."""
    cdef int k, i, j, m
    cdef double sigma, rest, normx, absx0, vnorm2, tau, kreal
    cdef double complex x0, alpha, phase, acc, vp
    cdef double complex v[MAXN]
    cdef double complex p[MAXN]
    for k in range(n - 2):
        m = n - k - 1
        d[k] = (a[k * n + k]).real
        x0 = a[(k + 1) * n + k]
        sigma = 0.0
        for i in range(k + 1, n):
            sigma += _cabs2(a[i * n + k])
        if sigma == 0.0:
            e[k] = 0.0
            continue
        rest = sigma - _cabs2(x0)
        if rest == 0.0:
            # column already tridiagonal; magnitude is enough because a
            # diagonal phase similarity makes any Hermitian tridiagonal real
            e[k] = sqrt(sigma)
            continue
        normx = sqrt(sigma)
        absx0 = sqrt(_cabs2(x0))
        if absx0 == 0.0:
            phase = 1.0
        else:
            phase = x0 / absx0
        alpha = -phase * normx
        for i in range(m):
            v[i] = a[(k + 1 + i) * n + k]
        v[0] = v[0] - alpha
        vnorm2 = 0.0
        for i in range(m):
            vnorm2 += _cabs2(v[i])
        if vnorm2 == 0.0:
            e[k] = normx
            continue
        tau = 2.0 / vnorm2
        for i in range(m):
            acc = 0
            for j in range(m):
                acc = acc + a[(k + 1 + i) * n + (k + 1 + j)] * v[j]
            p[i] = tau * acc
        vp = 0
        for i in range(m):
            vp = vp + v[i].conjugate() * p[i]
        kreal = 0.5 * tau * vp.real
        for i in range(m):
            p[i] = p[i] - kreal * v[i]
        for i in range(m):
            for j in range(m):
                a[(k + 1 + i) * n + (k + 1 + j)] = (
                    a[(k + 1 + i) * n + (k + 1 + j)]
                    - v[i] * p[j].conjugate()
                    - p[i] * v[j].conjugate()
                )
        e[k] = normx
    if n >= 2:
        d[n - 2] = (a[(n - 2) * n + (n - 2)]).real
        e[n - 2] = sqrt(_cabs2(a[(n - 1) * n + (n - 2)]))
    d[n - 1] = (a[(n - 1) * n + (n - 1)]).real
    e[n - 1] = 0.0
    return 0


cdef int _tql(double* d, double* e, int n) nogil:
    """Implicit QL with Wilkinson shift on a symmetric tridiagonal;
    eigenvalues land unsorted in d.  Returns -1 on non-convergence."""
    cdef int l, m, i, it, underflow
    cdef double g, r, s, c, p, f, b, dd
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = fabs(d[m]) + fabs(d[m + 1])
                if fabs(e[m]) <= EPS * dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > 60:
                return -1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            if g >= 0:
                g = d[m] - d[l] + e[l] / (g + r)
            else:
                g = d[m] - d[l] + e[l] / (g - r)
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = 0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = 1
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if not underflow:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return 0


cdef void _sort_ascending(double* d, int n) nogil:
    cdef int i, j
    cdef double key
    for i in range(1, n):
        key = d[i]
        j = i - 1
        while j >= 0 and d[j] > key:
            d[j + 1] = d[j]
            j -= 1
        d[j + 1] = key


cdef int _eig_core(double complex* a, int n, double* ev) nogil:
    """Eigenvalues of a Hermitian matrix scribbled into a; ascending in ev."""
    cdef double d[MAXN]
    cdef double e[MAXN]
    cdef int rc
    if n == 1:
        ev[0] = (a[0]).real
        return 0
    rc = _tridiag(a, n, d, e)
    if rc != 0:
        return rc
    rc = _tql(d, e, n)
    if rc != 0:
        return rc
    _sort_ascending(d, n)
    for rc in range(n):
        ev[rc] = d[rc]
    return 0


cdef inline double _objective(double* ev, int n) nogil:
    cdef double scale = 0.0
    cdef int i
    for i in range(n):
        if fabs(ev[i]) > scale:
            scale = fabs(ev[i])
    if scale == 0.0:
        return -INFINITY
    if n == 1:
        return 1.0
    if ev[1] > -ev[n - 2]:
        return ev[1] / scale
    return -ev[n - 2] / scale


cdef void _counts(double* ev, int n, double tol, long* npl, long* nmi, long* nun) nogil:
    cdef double scale = 0.0, thr
    cdef int i
    cdef long a = 0, b = 0
    for i in range(n):
        if fabs(ev[i]) > scale:
            scale = fabs(ev[i])
    thr = tol * scale
    for i in range(n):
        if ev[i] > thr:
            a += 1
        elif ev[i] < -thr:
            b += 1
    npl[0] = a
    nmi[0] = b
    nun[0] = n - a - b


def eig_ascending(a):
    """Ascending eigenvalues of one Hermitian matrix (complex128)."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] buf = np.array(
        a, dtype=np.complex128, order="C", copy=True
    )
    cdef int n = buf.shape[0]
    if buf.shape[1] != n:
        raise ValueError("matrix must be square")
    if n > MAXN:
        raise ValueError(f"compiled kernel supports n <= {MAXN}")
    out = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1, mode="c"] ev = out
    if _eig_core(<double complex*> buf.data, n, <double*> ev.data) != 0:
        raise RuntimeError("eigenvalue iteration failed to converge")
    return out


def sign_counts(a, double tol):
    """(n_plus, n_minus, n_uncertain) with |lambda| <= tol*max|lambda|
    counted as uncertain."""
    ev = eig_ascending(a)
    cdef cnp.ndarray[cnp.float64_t, ndim=1, mode="c"] evb = ev
    cdef long npl, nmi, nun
    _counts(<double*> evb.data, evb.shape[0], tol, &npl, &nmi, &nun)
    return int(npl), int(nmi), int(nun)


def batch_stats(basis, coeffs, double tol):
    """Per-sample sign counts and objective for elements sum_i c_i B_i."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=3, mode="c"] bas = np.ascontiguousarray(
        basis, dtype=np.complex128
    )
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] cs = np.ascontiguousarray(
        coeffs, dtype=np.float64
    )
    cdef int d = bas.shape[0]
    cdef int q = bas.shape[1]
    cdef Py_ssize_t n = cs.shape[0]
    if bas.shape[2] != q:
        raise ValueError("basis matrices must be square")
    if cs.shape[1] != d:
        raise ValueError("coefficient width must match basis size")
    if q > MAXN:
        raise ValueError(f"compiled kernel supports q <= {MAXN}")
    npl_arr = np.empty(n, dtype=np.int64)
    nmi_arr = np.empty(n, dtype=np.int64)
    nun_arr = np.empty(n, dtype=np.int64)
    f_arr = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1, mode="c"] npl = npl_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1, mode="c"] nmi = nmi_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1, mode="c"] nun = nun_arr
    cdef cnp.ndarray[cnp.float64_t, ndim=1, mode="c"] fv = f_arr
    cdef double complex* bp = <double complex*> bas.data
    cdef double* cp = <double*> cs.data
    cdef double complex x[MAXN * MAXN]
    cdef double ev[MAXN]
    cdef Py_ssize_t s
    cdef int i, k, qq = q * q
    cdef double ci
    cdef long a, b, u
    with nogil:
        for s in range(n):
            for i in range(qq):
                x[i] = 0
            for k in range(d):
                ci = cp[s * d + k]
                if ci != 0.0:
                    for i in range(qq):
                        x[i] = x[i] + ci * bp[k * qq + i]
            if _eig_core(x, q, ev) != 0:
                npl[s] = 0
                nmi[s] = 0
                nun[s] = q
                fv[s] = -INFINITY
                continue
            _counts(ev, q, tol, &a, &b, &u)
            npl[s] = a
            nmi[s] = b
            nun[s] = u
            fv[s] = _objective(ev, q)
    return npl_arr, nmi_arr, nun_arr, f_arr


def coordinate_descent(basis, c0, int sweeps, double margin):
    """Greedy coordinate ascent of the objective on the unit coefficient
    sphere, with a halving step schedule; same contract as the fallback."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=3, mode="c"] bas = np.ascontiguousarray(
        basis, dtype=np.complex128
    )
    cdef cnp.ndarray[cnp.float64_t, ndim=1, mode="c"] c_arr = np.array(
        c0, dtype=np.float64, copy=True
    )
    cdef int d = bas.shape[0]
    cdef int q = bas.shape[1]
    if q > MAXN:
        raise ValueError(f"compiled kernel supports q <= {MAXN}")
    if d > MAXD:
        raise ValueError(f"compiled kernel supports dim <= {MAXD}")
    if c_arr.shape[0] != d:
        raise ValueError("coefficient length must match basis size")
    cdef double complex* bp = <double complex*> bas.data
    cdef double* c = <double*> c_arr.data
    cdef double cand[MAXD]
    cdef double complex x[MAXN * MAXN]
    cdef double ev[MAXN]
    cdef double f, fc, norm, step
    cdef long evals = 0
    cdef int i, k, sw, sgn_i, improved, qq = q * q
    cdef double sgn

    norm = 0.0
    for i in range(d):
        norm += c[i] * c[i]
    norm = sqrt(norm)
    if norm == 0.0:
        return c_arr, -INFINITY, 0, False
    for i in range(d):
        c[i] /= norm

    with nogil:
        f = _eval_obj(bp, c, d, q, qq, x, ev)
        evals = 1
        step = 0.5
        for sw in range(sweeps):
            if f >= margin:
                break
            improved = 0
            for k in range(d):
                for sgn_i in range(2):
                    sgn = 1.0 if sgn_i == 0 else -1.0
                    norm = 0.0
                    for i in range(d):
                        cand[i] = c[i]
                    cand[k] += sgn * step
                    for i in range(d):
                        norm += cand[i] * cand[i]
                    norm = sqrt(norm)
                    for i in range(d):
                        cand[i] /= norm
                    fc = _eval_obj(bp, cand, d, q, qq, x, ev)
                    evals += 1
                    if fc > f:
                        f = fc
                        for i in range(d):
                            c[i] = cand[i]
                        improved = 1
            if not improved:
                step *= 0.5
                if step < 1e-7:
                    break
    return c_arr, float(f), int(evals), bool(f >= margin)


cdef double _eval_obj(
    double complex* bp, double* c, int d, int q, int qq,
    double complex* x, double* ev,
) nogil:
    cdef int i, k
    cdef double ci
    for i in range(qq):
        x[i] = 0
    for k in range(d):
        ci = c[k]
        if ci != 0.0:
            for i in range(qq):
                x[i] = x[i] + ci * bp[k * qq + i]
    if _eig_core(x, q, ev) != 0:
        return -INFINITY
    return _objective(ev, q)
