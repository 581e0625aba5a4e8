// Scalar reference kernels. Compiled with -ffp-contract=off so results are
// reproducible against the vectorized variants (see kernels_avx2.cpp).

#include "fock/kernels.hpp"

#include <limits>

namespace fock::kernels::scalar {

double count_in_disk(const double* xs, const double* ys, const double* w,
                     std::size_t n, double cx, double cy, double r)
{
    const double r2 = r * r;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - cx;
        const double dy = ys[i] - cy;
        const double d2 = dx * dx + dy * dy;
        if (d2 < r2) acc += w[i];
    }
    return acc;
}

double min_pairwise_dist_sq(const double* xs, const double* ys, std::size_t n)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double xi = xs[i], yi = ys[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = xs[j] - xi;
            const double dy = ys[j] - yi;
            const double d2 = dx * dx + dy * dy;
            if (d2 < best) best = d2;
        }
    }
    return best;
}

double dot(const double* a, const double* b, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void horner_many(const double* cre, const double* cim, std::size_t nc,
                 const double* zre, const double* zim, std::size_t n,
                 double* out_re, double* out_im)
{
    if (nc == 0) {
        for (std::size_t i = 0; i < n; ++i) { out_re[i] = 0.0; out_im[i] = 0.0; }
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        double ar = cre[nc - 1], ai = cim[nc - 1];
        const double zr = zre[i], zi = zim[i];
        for (std::size_t k = nc - 1; k-- > 0;) {
            const double tr = ar * zr - ai * zi + cre[k];
            const double ti = ar * zi + ai * zr + cim[k];
            ar = tr;
            ai = ti;
        }
        out_re[i] = ar;
        out_im[i] = ai;
    }
}

} // namespace fock::kernels::scalar
