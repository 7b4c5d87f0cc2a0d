#pragma once
// Residue-vector kernels for arithmetic modulo a word-sized prime.
//
// Every routine works on vectors of residues in [0, p) with p < 2^31 and
// writes fully reduced residues back. The scalar and AVX2 variants compute
// bit-identical results; the dispatcher picks one at first use.

#include <cstdint>
#include <span>
#include <string_view>

namespace monogen::simd {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);

// True when the variant is compiled in and the running CPU supports it.
bool backend_available(Backend b);

// Backend used by the dispatching entry points below. Chosen once: the best
// available variant, unless MONOGEN_SIMD=scalar is set in the environment.
Backend active_backend();

// dst[i] = (dst[i] + src[i]) mod p
void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
// dst[i] = (dst[i] - src[i]) mod p
void sub_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
// dst[i] = (dst[i] + c * src[i]) mod p
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
// dst[i] = (c * dst[i]) mod p
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);

namespace scalar {
void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
void sub_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

#if defined(MONOGEN_HAVE_AVX2)
// Callers must check backend_available(Backend::Avx2) first.
namespace avx2 {
void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
void sub_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
}  // namespace avx2
#endif

}  // namespace monogen::simd
