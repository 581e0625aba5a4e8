#include "fock/bell.hpp"
#include "fock/errors.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

namespace fock {

namespace {

// One monomial of B_{n,k}: coeff * prod_i (x_i)^{mult[i]} (mult is 0-based
// over x_1..x_{n-k+1}).
struct PartitionTerm {
    std::int64_t coeff;
    std::vector<int> mult;
};

std::int64_t ifact(int n)
{
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Enumerate all (m_1, ..., m_{n-k+1}) with sum m_i = k and sum i*m_i = n.
// The multinomial coefficient n! / (prod m_i! (i!)^{m_i}) is an exact integer
// and fits in 64 bits for n <= 20.
void enumerate(int n, int k, int part, int rem_count, int rem_weight,
               std::vector<int>& mult, std::vector<PartitionTerm>& out)
{
    const int nparts = n - k + 1;
    if (part > nparts) {
        if (rem_count == 0 && rem_weight == 0) {
            std::int64_t denom = 1;
            for (int i = 1; i <= nparts; ++i) {
                denom *= ifact(mult[i - 1]);
                for (int c = 0; c < mult[i - 1]; ++c) denom *= ifact(i);
            }
            out.push_back({ifact(n) / denom, mult});
        }
        return;
    }
    const int max_m = std::min(rem_count, rem_weight / part);
    for (int m = 0; m <= max_m; ++m) {
        mult[part - 1] = m;
        enumerate(n, k, part + 1, rem_count - m, rem_weight - m * part, mult, out);
    }
    mult[part - 1] = 0;
}

const std::vector<PartitionTerm>& partition_terms(int n, int k)
{
    static std::map<std::pair<int, int>, std::vector<PartitionTerm>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;

    std::vector<PartitionTerm> terms;
    std::vector<int> mult(static_cast<std::size_t>(n - k + 1), 0);
    enumerate(n, k, 1, k, n, mult, terms);
    return cache.emplace(std::make_pair(n, k), std::move(terms)).first->second;
}

} // namespace

cplx partial_bell(int n, int k, std::span<const cplx> jet)
{
    if (n < 0 || k < 0) throw validation_error("partial_bell: negative index");
    if (k > n) throw validation_error("partial_bell: k > n");
    if (n > 20) throw validation_error("partial_bell: n > 20 not supported");
    if (n == 0) return 1.0;
    if (k == 0) return 0.0;
    if (static_cast<int>(jet.size()) < n - k + 1)
        throw validation_error("partial_bell: jet shorter than n-k+1");

    cplx sum = 0.0;
    for (const auto& term : partition_terms(n, k)) {
        cplx prod = static_cast<double>(term.coeff);
        for (std::size_t i = 0; i < term.mult.size(); ++i)
            for (int c = 0; c < term.mult[i]; ++c) prod *= jet[i];
        sum += prod;
    }
    return sum;
}

cplx complete_bell(int n, std::span<const cplx> jet)
{
    if (n < 0) throw validation_error("complete_bell: negative order");
    if (n == 0) return 1.0;
    if (static_cast<int>(jet.size()) < n)
        throw validation_error("complete_bell: jet shorter than n");

    cplx sum = 0.0;
    for (int k = 1; k <= n; ++k) sum += partial_bell(n, k, jet);
    return sum;
}

double binomial(int n, int k)
{
    if (k < 0 || k > n) return 0.0;
    if (n > 62) throw validation_error("binomial: n > 62");
    static const auto table = [] {
        std::vector<std::vector<std::int64_t>> t(63);
        for (int i = 0; i <= 62; ++i) {
            t[i].resize(i + 1);
            t[i][0] = t[i][i] = 1;
            for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
        return t;
    }();
    return static_cast<double>(table[n][k]);
}

double factorial(int n)
{
    if (n < 0 || n > 170) throw validation_error("factorial: out of range");
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace fock
