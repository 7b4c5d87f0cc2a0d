#include "monogen/simd/kernels.hpp"

#include <cassert>

namespace monogen::simd::scalar {

void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p) {
    assert(src.size() >= dst.size());
    for (std::size_t i = 0; i < dst.size(); ++i) {
        std::uint32_t x = dst[i] + src[i];
        dst[i] = x >= p ? x - p : x;
    }
}

void sub_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p) {
    assert(src.size() >= dst.size());
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = dst[i] >= src[i] ? dst[i] - src[i] : dst[i] + p - src[i];
    }
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
    assert(src.size() >= dst.size());
    if (c == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i) {
        std::uint64_t t = std::uint64_t(c) * src[i] + dst[i];
        dst[i] = static_cast<std::uint32_t>(t % p);
    }
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
    for (auto& v : dst) v = static_cast<std::uint32_t>(std::uint64_t(c) * v % p);
}

}  // namespace monogen::simd::scalar
