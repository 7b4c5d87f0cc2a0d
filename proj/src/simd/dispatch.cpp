#include "monogen/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace monogen::simd {
namespace {

struct KernelTable {
    Backend backend;
    void (*add)(std::span<std::uint32_t>, std::span<const std::uint32_t>, std::uint32_t);
    void (*sub)(std::span<std::uint32_t>, std::span<const std::uint32_t>, std::uint32_t);
    void (*axpy)(std::span<std::uint32_t>, std::span<const std::uint32_t>, std::uint32_t,
                 std::uint32_t);
    void (*scale)(std::span<std::uint32_t>, std::uint32_t, std::uint32_t);
};

KernelTable select_table() {
    const char* env = std::getenv("MONOGEN_SIMD");
    bool force_scalar = env != nullptr && std::strcmp(env, "scalar") == 0;
#if defined(MONOGEN_HAVE_AVX2)
    if (!force_scalar && backend_available(Backend::Avx2)) {
        return {Backend::Avx2, avx2::add_mod, avx2::sub_mod, avx2::axpy_mod, avx2::scale_mod};
    }
#endif
    (void)force_scalar;
    return {Backend::Scalar, scalar::add_mod, scalar::sub_mod, scalar::axpy_mod,
            scalar::scale_mod};
}

const KernelTable& table() {
    static const KernelTable t = select_table();
    return t;
}

}  // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2:
#if defined(MONOGEN_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return table().backend; }

void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p) {
    table().add(dst, src, p);
}

void sub_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p) {
    table().sub(dst, src, p);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
    table().axpy(dst, src, c, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
    table().scale(dst, c, p);
}

}  // namespace monogen::simd
