#include <doctest.h>

#include <random>
#include <vector>

#include "monogen/simd/kernels.hpp"

using namespace monogen::simd;

namespace {

const std::vector<std::uint32_t> kPrimes{2, 3, 5, 7, 251, 65537, 1000003, 2147483629u, 2147483647u};

std::vector<std::uint32_t> random_residues(std::mt19937_64& rng, std::size_t len, std::uint32_t p) {
    std::vector<std::uint32_t> v(len);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
    // Boundary values show up in every vector.
    if (len > 0) v[0] = p - 1;
    if (len > 1) v[len - 1] = 0;
    return v;
}

std::uint32_t ref_axpy(std::uint32_t d, std::uint32_t s, std::uint32_t c, std::uint32_t p) {
    return static_cast<std::uint32_t>((d + static_cast<std::uint64_t>(c) * s) % p);
}

}  // namespace

TEST_CASE("scalar kernels match 64-bit reference arithmetic") {
    std::mt19937_64 rng(1);
    for (auto p : kPrimes)
        for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 100u}) {
            auto a = random_residues(rng, len, p);
            auto b = random_residues(rng, len, p);
            const std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
            auto sum = a, diff = a, ax = a, sc = a;
            scalar::add_mod(sum, b, p);
            scalar::sub_mod(diff, b, p);
            scalar::axpy_mod(ax, b, c, p);
            scalar::scale_mod(sc, c, p);
            for (std::size_t i = 0; i < len; ++i) {
                CHECK(sum[i] == (static_cast<std::uint64_t>(a[i]) + b[i]) % p);
                CHECK(diff[i] == (static_cast<std::uint64_t>(a[i]) + p - b[i]) % p);
                CHECK(ax[i] == ref_axpy(a[i], b[i], c, p));
                CHECK(sc[i] == static_cast<std::uint64_t>(c) * a[i] % p);
            }
        }
}

#if defined(MONOGEN_HAVE_AVX2)
TEST_CASE("AVX2 kernels are bit-identical to the scalar reference") {
    if (!backend_available(Backend::Avx2)) {
        MESSAGE("AVX2 not available on this CPU; skipped");
        return;
    }
    std::mt19937_64 rng(2);
    std::vector<std::uint32_t> primes = kPrimes;
    for (int i = 0; i < 20; ++i) primes.push_back(static_cast<std::uint32_t>(2 * (rng() % (1u << 29)) + 1) | 1u);
    for (auto p : primes)
        for (std::size_t len = 0; len <= 40; ++len) {
            for (std::uint32_t c : {0u, 1u, p - 1, static_cast<std::uint32_t>(rng() % p)}) {
                const auto a = random_residues(rng, len, p);
                const auto b = random_residues(rng, len, p);
                auto s1 = a, s2 = a;
                scalar::add_mod(s1, b, p);
                avx2::add_mod(s2, b, p);
                CHECK(s1 == s2);
                s1 = a, s2 = a;
                scalar::sub_mod(s1, b, p);
                avx2::sub_mod(s2, b, p);
                CHECK(s1 == s2);
                s1 = a, s2 = a;
                scalar::axpy_mod(s1, b, c, p);
                avx2::axpy_mod(s2, b, c, p);
                CHECK(s1 == s2);
                s1 = a, s2 = a;
                scalar::scale_mod(s1, c, p);
                avx2::scale_mod(s2, c, p);
                CHECK(s1 == s2);
            }
        }
}
#endif

TEST_CASE("dispatcher reports a usable backend") {
    const Backend b = active_backend();
    CHECK(backend_available(b));
    CHECK(backend_available(Backend::Scalar));
    CHECK(!backend_name(b).empty());
    std::vector<std::uint32_t> a{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<std::uint32_t> b2(a.size(), 10);
    axpy_mod(a, b2, 3, 11);
    CHECK(a == std::vector<std::uint32_t>{9, 10, 0, 1, 2, 3, 4, 5, 6, 7});
}
