#pragma once

#include <complex>
#include <span>
#include <vector>

// Test functions of the form p(z) * e^{a + b z} with p a polynomial. This
// family is closed under holomorphic differentiation and under the weighted
// shifts of weighted_ops.hpp, and evaluates finitely everywhere.

namespace fock {

using cplx = std::complex<double>;

class EntireFunction {
public:
    /// The zero function.
    EntireFunction() = default;

    /// p(z) = coeffs[0] + coeffs[1] z + ...; exponential factor e^{a + b z}.
    EntireFunction(std::vector<cplx> coeffs, cplx a = 0.0, cplx b = 0.0);

    static EntireFunction polynomial(std::vector<cplx> coeffs);
    static EntireFunction monomial(int k, cplx scale = 1.0);
    static EntireFunction exp_affine(cplx a, cplx b);
    static EntireFunction constant(cplx c);

    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx exp_a() const { return a_; }
    cplx exp_b() const { return b_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    cplx eval(cplx z) const;

    /// Exact derivative: (p' + b p) e^{a + b z}.
    EntireFunction derivative() const;
    EntireFunction derivative(int k) const;

    /// (f(z), f'(z), ..., f^{(n)}(z)).
    std::vector<cplx> jet(cplx z, int n) const;

    /// Evaluate p at many points through the vector kernels; the exponential
    /// factor is applied per point.
    void eval_many(std::span<const double> xs, std::span<const double> ys,
                   std::vector<cplx>& out) const;

    EntireFunction operator*(cplx s) const;
    /// Sum; both operands must carry the same exponential factor.
    EntireFunction operator+(const EntireFunction& rhs) const;

private:
    std::vector<cplx> coeffs_; // empty means identically zero
    cplx a_{0.0}, b_{0.0};

    void trim();
};

} // namespace fock
