#include "fock/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace k = fock::kernels;

namespace {

struct Cloud {
    std::vector<double> xs, ys, ws;
};

Cloud random_cloud(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::uniform_int_distribution<int> m(1, 4);
    Cloud c;
    c.xs.resize(n);
    c.ys.resize(n);
    c.ws.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.xs[i] = u(rng);
        c.ys[i] = u(rng);
        c.ws[i] = m(rng); // integer weights: counting is exact in any order
    }
    return c;
}

} // namespace

TEST_CASE("scalar count_in_disk agrees with a direct loop")
{
    std::mt19937_64 rng(1);
    const auto c = random_cloud(rng, 257);
    const double cx = 0.5, cy = -1.0, r = 6.0;
    double want = 0.0;
    for (std::size_t i = 0; i < c.xs.size(); ++i) {
        const double dx = c.xs[i] - cx, dy = c.ys[i] - cy;
        if (std::sqrt(dx * dx + dy * dy) < r) want += c.ws[i];
    }
    CHECK(k::scalar::count_in_disk(c.xs.data(), c.ys.data(), c.ws.data(), c.xs.size(),
                                   cx, cy, r) == want);
}

TEST_CASE("scalar horner matches std::complex evaluation")
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> cre{0.5, -1.0, 2.0, 0.0, 0.25}, cim{1.0, 0.5, 0.0, -2.0, 0.125};
    std::vector<double> zr(33), zi(33), outr(33), outi(33);
    for (std::size_t i = 0; i < zr.size(); ++i) {
        zr[i] = u(rng);
        zi[i] = u(rng);
    }
    k::scalar::horner_many(cre.data(), cim.data(), cre.size(), zr.data(), zi.data(),
                           zr.size(), outr.data(), outi.data());
    for (std::size_t i = 0; i < zr.size(); ++i) {
        std::complex<double> z(zr[i], zi[i]), want = 0.0;
        for (std::size_t c = cre.size(); c-- > 0;)
            want = want * z + std::complex<double>(cre[c], cim[c]);
        CHECK(std::abs(std::complex<double>(outr[i], outi[i]) - want) < 1e-13);
    }
}

#if defined(FOCK_HAVE_AVX2)

TEST_CASE("avx2 kernels match scalar" * doctest::skip(!k::avx2_available()))
{
    std::mt19937_64 rng(3);

    SUBCASE("count_in_disk is exact for integer weights")
    {
        for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 64u, 1001u}) {
            const auto c = random_cloud(rng, n);
            for (int probe = 0; probe < 8; ++probe) {
                std::uniform_real_distribution<double> u(-8.0, 8.0);
                const double cx = u(rng), cy = u(rng), r = 1.0 + std::abs(u(rng));
                const double a = k::scalar::count_in_disk(c.xs.data(), c.ys.data(),
                                                          c.ws.data(), n, cx, cy, r);
                const double b = k::avx2::count_in_disk(c.xs.data(), c.ys.data(),
                                                        c.ws.data(), n, cx, cy, r);
                CHECK(a == b);
            }
        }
    }

    SUBCASE("min_pairwise_dist_sq is bit-exact")
    {
        for (std::size_t n : {2u, 3u, 5u, 17u, 400u}) {
            const auto c = random_cloud(rng, n);
            const double a = k::scalar::min_pairwise_dist_sq(c.xs.data(), c.ys.data(), n);
            const double b = k::avx2::min_pairwise_dist_sq(c.xs.data(), c.ys.data(), n);
            CHECK(a == b);
        }
    }

    SUBCASE("dot agrees to roundoff")
    {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (std::size_t n : {1u, 7u, 8u, 9u, 1000u}) {
            std::vector<double> a(n), b(n);
            for (std::size_t i = 0; i < n; ++i) {
                a[i] = u(rng);
                b[i] = u(rng);
            }
            const double s = k::scalar::dot(a.data(), b.data(), n);
            const double v = k::avx2::dot(a.data(), b.data(), n);
            CHECK(std::abs(s - v) <= 1e-12 * std::max(1.0, std::abs(s)));
        }
    }

    SUBCASE("horner_many agrees to roundoff")
    {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<double> cre(9), cim(9);
        for (std::size_t i = 0; i < cre.size(); ++i) {
            cre[i] = u(rng);
            cim[i] = u(rng);
        }
        for (std::size_t n : {1u, 4u, 5u, 130u}) {
            std::vector<double> zr(n), zi(n), sr(n), si(n), vr(n), vi(n);
            for (std::size_t i = 0; i < n; ++i) {
                zr[i] = u(rng);
                zi[i] = u(rng);
            }
            k::scalar::horner_many(cre.data(), cim.data(), cre.size(), zr.data(), zi.data(),
                                   n, sr.data(), si.data());
            k::avx2::horner_many(cre.data(), cim.data(), cre.size(), zr.data(), zi.data(),
                                 n, vr.data(), vi.data());
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(std::abs(sr[i] - vr[i]) <= 1e-12 * std::max(1.0, std::abs(sr[i])));
                CHECK(std::abs(si[i] - vi[i]) <= 1e-12 * std::max(1.0, std::abs(si[i])));
            }
        }
    }
}

#endif // FOCK_HAVE_AVX2

TEST_CASE("dispatch reports a valid backend")
{
    const auto b = k::active_backend();
    CHECK((b == k::Backend::scalar || b == k::Backend::avx2));
    if (b == k::Backend::avx2) CHECK(k::avx2_available());
}
