#include "fock/entire.hpp"
#include "fock/errors.hpp"
#include "fock/kernels.hpp"

#include <cmath>

namespace fock {

EntireFunction::EntireFunction(std::vector<cplx> coeffs, cplx a, cplx b)
    : coeffs_(std::move(coeffs)), a_(a), b_(b)
{
    trim();
}

void EntireFunction::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
}

EntireFunction EntireFunction::polynomial(std::vector<cplx> coeffs)
{
    return EntireFunction(std::move(coeffs));
}

EntireFunction EntireFunction::monomial(int k, cplx scale)
{
    if (k < 0) throw validation_error("monomial: negative degree");
    std::vector<cplx> c(static_cast<std::size_t>(k) + 1, 0.0);
    c.back() = scale;
    return EntireFunction(std::move(c));
}

EntireFunction EntireFunction::exp_affine(cplx a, cplx b)
{
    return EntireFunction({1.0}, a, b);
}

EntireFunction EntireFunction::constant(cplx c)
{
    return EntireFunction({c});
}

cplx EntireFunction::eval(cplx z) const
{
    if (coeffs_.empty()) return 0.0;
    cplx p = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) p = p * z + coeffs_[k];
    return p * std::exp(a_ + b_ * z);
}

EntireFunction EntireFunction::derivative() const
{
    if (coeffs_.empty()) return {};
    std::vector<cplx> d(coeffs_.size(), 0.0); // p' + b p, degree <= deg(p)
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    for (std::size_t k = 0; k < coeffs_.size(); ++k) d[k] += b_ * coeffs_[k];
    return EntireFunction(std::move(d), a_, b_);
}

EntireFunction EntireFunction::derivative(int k) const
{
    if (k < 0) throw validation_error("derivative: negative order");
    EntireFunction f = *this;
    for (int i = 0; i < k; ++i) f = f.derivative();
    return f;
}

std::vector<cplx> EntireFunction::jet(cplx z, int n) const
{
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    EntireFunction f = *this;
    out.push_back(f.eval(z));
    for (int k = 1; k <= n; ++k) {
        f = f.derivative();
        out.push_back(f.eval(z));
    }
    return out;
}

void EntireFunction::eval_many(std::span<const double> xs, std::span<const double> ys,
                               std::vector<cplx>& out) const
{
    const std::size_t n = xs.size();
    out.assign(n, cplx(0.0));
    if (coeffs_.empty() || n == 0) return;

    std::vector<double> cre(coeffs_.size()), cim(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        cre[k] = coeffs_[k].real();
        cim[k] = coeffs_[k].imag();
    }
    std::vector<double> pre(n), pim(n);
    kernels::horner_many(cre.data(), cim.data(), coeffs_.size(),
                         xs.data(), ys.data(), n, pre.data(), pim.data());
    for (std::size_t i = 0; i < n; ++i) {
        const cplx z(xs[i], ys[i]);
        out[i] = cplx(pre[i], pim[i]) * std::exp(a_ + b_ * z);
    }
}

EntireFunction EntireFunction::operator*(cplx s) const
{
    if (s == cplx(0.0)) return {};
    std::vector<cplx> c = coeffs_;
    for (auto& x : c) x *= s;
    return EntireFunction(std::move(c), a_, b_);
}

EntireFunction EntireFunction::operator+(const EntireFunction& rhs) const
{
    if (coeffs_.empty()) return rhs;
    if (rhs.coeffs_.empty()) return *this;
    if (a_ != rhs.a_ || b_ != rhs.b_)
        throw validation_error("EntireFunction: sum requires equal exponential factors");
    std::vector<cplx> c(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] += rhs.coeffs_[k];
    return EntireFunction(std::move(c), a_, b_);
}

} // namespace fock
