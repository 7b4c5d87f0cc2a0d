#include "monogen/simd/kernels.hpp"

#if defined(MONOGEN_HAVE_AVX2)

#include <immintrin.h>

#include <cassert>

// Products c * src[i] are reduced with 32-bit Montgomery arithmetic: the
// multiplier is pre-scaled by 2^32 mod p so REDC(c' * s) = c * s mod p and no
// lane ever leaves Montgomery form. Requires an odd modulus; p = 2 falls back
// to the scalar kernels.

namespace monogen::simd::avx2 {
namespace {

constexpr std::size_t kLanes = 8;

std::uint32_t neg_inverse_mod_2_32(std::uint32_t p) {
    std::uint32_t inv = p;  // correct to 3 bits for odd p
    for (int i = 0; i < 5; ++i) inv *= 2u - p * inv;
    return 0u - inv;
}

inline __m256i load(const std::uint32_t* ptr) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ptr));
}

inline void store(std::uint32_t* ptr, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(ptr), v);
}

// x in [0, 2p) -> x mod p
inline __m256i reduce_once(__m256i x, __m256i p) {
    return _mm256_min_epu32(x, _mm256_sub_epi32(x, p));
}

// Montgomery reduction of the four 64-bit products in t; result in the low
// 32 bits of each 64-bit lane, in [0, 2p).
inline __m256i redc(__m256i t, __m256i pinv, __m256i p) {
    __m256i m = _mm256_mul_epu32(t, pinv);
    __m256i mp = _mm256_mul_epu32(m, p);
    return _mm256_srli_epi64(_mm256_add_epi64(t, mp), 32);
}

inline __m256i mont_mul(__m256i s, __m256i c, __m256i pinv, __m256i p) {
    __m256i even = redc(_mm256_mul_epu32(s, c), pinv, p);
    __m256i odd = redc(_mm256_mul_epu32(_mm256_srli_epi64(s, 32), c), pinv, p);
    __m256i merged = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0b10101010);
    return reduce_once(merged, p);
}

std::uint32_t to_montgomery(std::uint32_t c, std::uint32_t p) {
    return static_cast<std::uint32_t>((std::uint64_t(c) << 32) % p);
}

}  // namespace

void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p) {
    assert(src.size() >= dst.size());
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + kLanes <= dst.size(); i += kLanes) {
        __m256i x = _mm256_add_epi32(load(&dst[i]), load(&src[i]));
        store(&dst[i], reduce_once(x, vp));
    }
    scalar::add_mod(dst.subspan(i), src.subspan(i), p);
}

void sub_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p) {
    assert(src.size() >= dst.size());
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + kLanes <= dst.size(); i += kLanes) {
        __m256i diff = _mm256_sub_epi32(load(&dst[i]), load(&src[i]));
        store(&dst[i], _mm256_min_epu32(diff, _mm256_add_epi32(diff, vp)));
    }
    scalar::sub_mod(dst.subspan(i), src.subspan(i), p);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
    assert(src.size() >= dst.size());
    if (c == 0) return;
    if ((p & 1u) == 0) {
        scalar::axpy_mod(dst, src, c, p);
        return;
    }
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vpinv = _mm256_set1_epi32(static_cast<int>(neg_inverse_mod_2_32(p)));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(to_montgomery(c, p)));
    std::size_t i = 0;
    for (; i + kLanes <= dst.size(); i += kLanes) {
        __m256i prod = mont_mul(load(&src[i]), vc, vpinv, vp);
        store(&dst[i], reduce_once(_mm256_add_epi32(load(&dst[i]), prod), vp));
    }
    scalar::axpy_mod(dst.subspan(i), src.subspan(i), c, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
    if ((p & 1u) == 0) {
        scalar::scale_mod(dst, c, p);
        return;
    }
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vpinv = _mm256_set1_epi32(static_cast<int>(neg_inverse_mod_2_32(p)));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(to_montgomery(c, p)));
    std::size_t i = 0;
    for (; i + kLanes <= dst.size(); i += kLanes) {
        store(&dst[i], mont_mul(load(&dst[i]), vc, vpinv, vp));
    }
    scalar::scale_mod(dst.subspan(i), c, p);
}

}  // namespace monogen::simd::avx2

#endif
