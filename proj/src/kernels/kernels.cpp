// Runtime backend selection for the data-parallel kernels.

#include "fock/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace fock::kernels {

bool avx2_available()
{
#if defined(FOCK_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Backend pick_backend()
{
    if (const char* env = std::getenv("FOCK_KERNEL_BACKEND")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) return Backend::avx2;
    }
    return avx2_available() ? Backend::avx2 : Backend::scalar;
}

const Backend g_backend = pick_backend();

} // namespace

Backend active_backend() { return g_backend; }

const char* backend_name(Backend b)
{
    return b == Backend::avx2 ? "avx2" : "scalar";
}

double count_in_disk(const double* xs, const double* ys, const double* w,
                     std::size_t n, double cx, double cy, double r)
{
#if defined(FOCK_HAVE_AVX2)
    if (g_backend == Backend::avx2) return avx2::count_in_disk(xs, ys, w, n, cx, cy, r);
#endif
    return scalar::count_in_disk(xs, ys, w, n, cx, cy, r);
}

double min_pairwise_dist_sq(const double* xs, const double* ys, std::size_t n)
{
#if defined(FOCK_HAVE_AVX2)
    if (g_backend == Backend::avx2) return avx2::min_pairwise_dist_sq(xs, ys, n);
#endif
    return scalar::min_pairwise_dist_sq(xs, ys, n);
}

double dot(const double* a, const double* b, std::size_t n)
{
#if defined(FOCK_HAVE_AVX2)
    if (g_backend == Backend::avx2) return avx2::dot(a, b, n);
#endif
    return scalar::dot(a, b, n);
}

void horner_many(const double* cre, const double* cim, std::size_t nc,
                 const double* zre, const double* zim, std::size_t n,
                 double* out_re, double* out_im)
{
#if defined(FOCK_HAVE_AVX2)
    if (g_backend == Backend::avx2) {
        avx2::horner_many(cre, cim, nc, zre, zim, n, out_re, out_im);
        return;
    }
#endif
    scalar::horner_many(cre, cim, nc, zre, zim, n, out_re, out_im);
}

} // namespace fock::kernels
