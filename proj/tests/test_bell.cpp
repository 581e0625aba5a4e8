#include "fock/bell.hpp"
#include "fock/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using fock::cplx;
using fock::complete_bell;
using fock::exp_derivative_factor;
using fock::partial_bell;

namespace {
std::vector<cplx> jet(std::initializer_list<cplx> xs) { return {xs}; }
}

TEST_CASE("partial Bell base cases")
{
    CHECK(partial_bell(0, 0, {}) == cplx(1.0));
    CHECK(partial_bell(3, 0, jet({1, 1, 1})) == cplx(0.0));
    CHECK(partial_bell(1, 1, jet({cplx(2, 1)})) == cplx(2, 1));
    // n=3, k=2: partitions of 3 into 2 parts -> 3 * x1 * x2
    const cplx x1(0.5, -1.0), x2(2.0, 0.25);
    CHECK(std::abs(partial_bell(3, 2, jet({x1, x2})) - 3.0 * x1 * x2) < 1e-14);
}

TEST_CASE("partial Bell rejects bad indices")
{
    CHECK_THROWS_AS((void)partial_bell(2, 3, jet({1, 1})), fock::validation_error);
    CHECK_THROWS_AS((void)partial_bell(4, 2, jet({1})), fock::validation_error);
}

TEST_CASE("complete Bell base cases")
{
    CHECK(complete_bell(0, {}) == cplx(1.0));
    const cplx x1(1.5, 0.5), x2(-0.25, 2.0);
    // B_2 = x1^2 + x2
    CHECK(std::abs(complete_bell(2, jet({x1, x2})) - (x1 * x1 + x2)) < 1e-14);
    // no constant term: all-zero jet vanishes for n >= 1
    CHECK(complete_bell(4, jet({0, 0, 0, 0})) == cplx(0.0));
}

TEST_CASE("exp derivative factor specializations")
{
    const cplx a(0.3, -0.7), b(1.2, 0.4);
    CHECK(exp_derivative_factor(1, jet({a})) == a);
    CHECK(std::abs(exp_derivative_factor(2, jet({a, b})) - (a * a + b)) < 1e-14);
    // affine exponent: third derivative of e^{r} is r'^3 e^{r}
    CHECK(std::abs(exp_derivative_factor(3, jet({a, 0, 0})) - a * a * a) < 1e-14);
}

TEST_CASE("partial Bell matches the brute-force partition oracle for n <= 6")
{
    std::mt19937_64 rng(42);
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto x = oracle::random_jet(rng, std::max(n - k + 1, 1), 2.0);
            const cplx got = partial_bell(n, k, x);
            const cplx want = oracle::partial_bell_bruteforce(n, k, x);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("binomial identity for complete Bell polynomials")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        for (int n = 0; n <= 8; ++n) {
            const auto x = oracle::random_jet(rng, n);
            const auto y = oracle::random_jet(rng, n);
            std::vector<cplx> sum(x.size());
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = x[i] + y[i];

            cplx rhs = 0.0;
            for (int i = 0; i <= n; ++i)
                rhs += fock::binomial(n, i) * complete_bell(n - i, x) * complete_bell(i, y);
            const cplx lhs = complete_bell(n, sum);
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("partial Bell homogeneity of degree k")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const int k = 1 + static_cast<int>(rng() % n);
        const auto x = oracle::random_jet(rng, n - k + 1);
        const cplx t(0.75, 0.5);
        std::vector<cplx> tx(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) tx[i] = t * x[i];

        cplx tk = 1.0;
        for (int i = 0; i < k; ++i) tk *= t;
        const cplx lhs = partial_bell(n, k, tx);
        const cplx rhs = tk * partial_bell(n, k, x);
        CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(rhs)));
    }
}
