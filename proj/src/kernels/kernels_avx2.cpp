// AVX2 variants of the geometry/quadrature kernels. Compiled with
// -mavx2 -mfma -ffp-contract=off; only the reductions in dot/horner_many
// use FMA (they are tolerance-tested against scalar, not bit-exact).

#if defined(FOCK_HAVE_AVX2)

#include "fock/kernels.hpp"

#include <immintrin.h>
#include <limits>

namespace fock::kernels::avx2 {

namespace {

inline double hsum(__m256d v)
{
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline double hmin(__m256d v)
{
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_min_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_min_sd(lo, sh));
}

} // namespace

double count_in_disk(const double* xs, const double* ys, const double* w,
                     std::size_t n, double cx, double cy, double r)
{
    const double r2 = r * r;
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vcy = _mm256_set1_pd(cy);
    const __m256d vr2 = _mm256_set1_pd(r2);
    __m256d acc = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vcx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vcy);
        // mul+add (not FMA) so d2 matches the scalar kernel bit for bit
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        const __m256d mask = _mm256_cmp_pd(d2, vr2, _CMP_LT_OQ);
        acc = _mm256_add_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(w + i)));
    }
    double total = hsum(acc);
    for (; i < n; ++i) {
        const double dx = xs[i] - cx;
        const double dy = ys[i] - cy;
        if (dx * dx + dy * dy < r2) total += w[i];
    }
    return total;
}

double min_pairwise_dist_sq(const double* xs, const double* ys, std::size_t n)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const __m256d xi = _mm256_set1_pd(xs[i]);
        const __m256d yi = _mm256_set1_pd(ys[i]);
        __m256d vbest = _mm256_set1_pd(best);
        std::size_t j = i + 1;
        for (; j + 4 <= n; j += 4) {
            const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + j), xi);
            const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + j), yi);
            const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
            vbest = _mm256_min_pd(vbest, d2);
        }
        best = hmin(vbest);
        for (; j < n; ++j) {
            const double dx = xs[j] - xs[i];
            const double dy = ys[j] - ys[i];
            const double d2 = dx * dx + dy * dy;
            if (d2 < best) best = d2;
        }
    }
    return best;
}

double dot(const double* a, const double* b, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double total = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) total += a[i] * b[i];
    return total;
}

void horner_many(const double* cre, const double* cim, std::size_t nc,
                 const double* zre, const double* zim, std::size_t n,
                 double* out_re, double* out_im)
{
    if (nc == 0) {
        for (std::size_t i = 0; i < n; ++i) { out_re[i] = 0.0; out_im[i] = 0.0; }
        return;
    }
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d zr = _mm256_loadu_pd(zre + i);
        const __m256d zi = _mm256_loadu_pd(zim + i);
        __m256d ar = _mm256_set1_pd(cre[nc - 1]);
        __m256d ai = _mm256_set1_pd(cim[nc - 1]);
        for (std::size_t k = nc - 1; k-- > 0;) {
            // (ar + i ai) * (zr + i zi) + c[k]
            const __m256d tr = _mm256_fmadd_pd(ar, zr,
                               _mm256_fnmadd_pd(ai, zi, _mm256_set1_pd(cre[k])));
            const __m256d ti = _mm256_fmadd_pd(ar, zi,
                               _mm256_fmadd_pd(ai, zr, _mm256_set1_pd(cim[k])));
            ar = tr;
            ai = ti;
        }
        _mm256_storeu_pd(out_re + i, ar);
        _mm256_storeu_pd(out_im + i, ai);
    }
    if (i < n)
        scalar::horner_many(cre, cim, nc, zre + i, zim + i, n - i, out_re + i, out_im + i);
}

} // namespace fock::kernels::avx2

#endif // FOCK_HAVE_AVX2
