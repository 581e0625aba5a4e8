#pragma once

#include <complex>
#include <span>
#include <vector>

// Partial and complete exponential Bell polynomials, evaluated numerically on
// complex derivative jets. Used by every iterated weighted-derivative formula
// in the library: the n-th derivative of e^{g} equals e^{g} times the complete
// Bell polynomial of the jet (g', g'', ..., g^{(n)}).

namespace fock {

using cplx = std::complex<double>;

/// A derivative jet (x_1, ..., x_n), read as g'(z), ..., g^{(n)}(z).
using Jet = std::vector<cplx>;

/// Partial Bell polynomial B_{n,k} on a jet of length >= n-k+1 (for n >= 1).
/// B_{0,0} = 1 and B_{n,0} = 0 for n >= 1. Throws fock::validation_error for
/// k > n, n > 20 (exact 64-bit coefficients end there), or a short jet.
cplx partial_bell(int n, int k, std::span<const cplx> jet);

/// Complete Bell polynomial B_n = sum_{k=1..n} B_{n,k}; B_0 = 1.
/// Requires jet length >= n.
cplx complete_bell(int n, std::span<const cplx> jet);

/// d^n/dz^n e^{g} / e^{g} for a function with derivative jet `jet` at the
/// point: identical to complete_bell, named for the use site.
inline cplx exp_derivative_factor(int n, std::span<const cplx> jet)
{
    return complete_bell(n, jet);
}

/// Exact binomial coefficient as double (n <= 62).
double binomial(int n, int k);

/// Exact factorial as double (n <= 170).
double factorial(int n);

} // namespace fock
