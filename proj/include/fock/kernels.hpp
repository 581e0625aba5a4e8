#pragma once

#include <cstddef>

// Data-parallel inner loops used by the geometry scans and quadrature sums.
// Each kernel has a scalar reference implementation and, on x86-64 with AVX2,
// a vectorized variant. The active variant is picked once at runtime from CPU
// capabilities; set FOCK_KERNEL_BACKEND=scalar (or =avx2) to override.
//
// All distance arithmetic is compiled without FP contraction, so the
// comparisons in count_in_disk and min_pairwise_dist_sq are identical across
// backends; min_pairwise_dist_sq is bit-exact, and count_in_disk is exact
// whenever the weights are integer-valued (the multiplicity use case).
// dot and horner_many reassociate the accumulation and agree to roundoff only.

namespace fock::kernels {

enum class Backend { scalar, avx2 };

/// Backend selected at startup (or via FOCK_KERNEL_BACKEND).
Backend active_backend();
const char* backend_name(Backend b);

/// True if this build contains the AVX2 variants and the CPU supports them.
bool avx2_available();

/// Sum of w[i] over points with (x[i]-cx)^2 + (y[i]-cy)^2 < r^2 (open disk).
double count_in_disk(const double* xs, const double* ys, const double* w,
                     std::size_t n, double cx, double cy, double r);

/// Minimum squared distance over all pairs; n >= 2.
double min_pairwise_dist_sq(const double* xs, const double* ys, std::size_t n);

/// Plain dot product.
double dot(const double* a, const double* b, std::size_t n);

/// Evaluate the complex polynomial c[0] + c[1] z + ... + c[nc-1] z^{nc-1}
/// at n points given as split re/im arrays.
void horner_many(const double* cre, const double* cim, std::size_t nc,
                 const double* zre, const double* zim, std::size_t n,
                 double* out_re, double* out_im);

// Reference implementations, always available (used by the equivalence tests).
namespace scalar {
double count_in_disk(const double* xs, const double* ys, const double* w,
                     std::size_t n, double cx, double cy, double r);
double min_pairwise_dist_sq(const double* xs, const double* ys, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
void horner_many(const double* cre, const double* cim, std::size_t nc,
                 const double* zre, const double* zim, std::size_t n,
                 double* out_re, double* out_im);
} // namespace scalar

#if defined(FOCK_HAVE_AVX2)
namespace avx2 {
double count_in_disk(const double* xs, const double* ys, const double* w,
                     std::size_t n, double cx, double cy, double r);
double min_pairwise_dist_sq(const double* xs, const double* ys, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
void horner_many(const double* cre, const double* cim, std::size_t nc,
                 const double* zre, const double* zim, std::size_t n,
                 double* out_re, double* out_im);
} // namespace avx2
#endif

} // namespace fock::kernels
