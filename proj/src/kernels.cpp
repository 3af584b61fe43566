#include "ssc/kernels.hpp"

#include <cstdlib>

namespace ssc::kernels {

U128 clmul64_scalar(std::uint64_t a, std::uint64_t b) {
    U128 r;
    while (b) {
        unsigned i = static_cast<unsigned>(__builtin_ctzll(b));
        b &= b - 1;
        r.lo ^= a << i;
        if (i) r.hi ^= a >> (64 - i);
    }
    return r;
}

void xor_shifted_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, unsigned shift) {
    if (n == 0) return;
    if (shift == 0) {
        for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t w = src[i];
        dst[i] ^= (w << shift) | carry;
        carry = w >> (64 - shift);
    }
    dst[n] ^= carry;
}

namespace {

struct SpreadTable {
    std::uint16_t t[256];
    SpreadTable() {
        for (unsigned b = 0; b < 256; ++b) {
            std::uint16_t v = 0;
            for (unsigned i = 0; i < 8; ++i)
                if (b & (1u << i)) v |= std::uint16_t(1) << (2 * i);
            t[b] = v;
        }
    }
};
const SpreadTable spread_table;

inline std::uint64_t spread32(std::uint32_t w) {
    return std::uint64_t(spread_table.t[w & 0xff]) |
           (std::uint64_t(spread_table.t[(w >> 8) & 0xff]) << 16) |
           (std::uint64_t(spread_table.t[(w >> 16) & 0xff]) << 32) |
           (std::uint64_t(spread_table.t[(w >> 24) & 0xff]) << 48);
}

} // namespace

void spread_bits_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t w = src[i];
        dst[2 * i] = spread32(static_cast<std::uint32_t>(w));
        dst[2 * i + 1] = spread32(static_cast<std::uint32_t>(w >> 32));
    }
}

namespace {

Caps detect_cpu() {
    Caps c;
#if defined(SSC_X86_TARGET)
    c.clmul = __builtin_cpu_supports("pclmul");
    c.avx2 = __builtin_cpu_supports("avx2");
#endif
    return c;
}

Caps effective_caps() {
    Caps c = detect_cpu();
    const char* force = std::getenv("SSCODES_FORCE_SCALAR");
    if (force && force[0] == '1') c = Caps{};
    return c;
}

} // namespace

const Caps& cpu_caps() {
    static const Caps c = detect_cpu();
    return c;
}

const Caps& caps() {
    static const Caps c = effective_caps();
    return c;
}

namespace {

using ClmulFn = U128 (*)(std::uint64_t, std::uint64_t);
using XorShiftFn = void (*)(std::uint64_t*, const std::uint64_t*, std::size_t, unsigned);
using SpreadFn = void (*)(std::uint64_t*, const std::uint64_t*, std::size_t);

struct Dispatch {
    ClmulFn clmul;
    XorShiftFn xors;
    SpreadFn spread;
    Dispatch() {
        clmul = clmul64_scalar;
        xors = xor_shifted_scalar;
        spread = spread_bits_scalar;
#if defined(SSC_X86_TARGET)
        if (caps().clmul) clmul = clmul64_pclmul;
        if (caps().avx2) {
            xors = xor_shifted_avx2;
            spread = spread_bits_avx2;
        }
#endif
    }
};

const Dispatch& dispatch() {
    static const Dispatch d;
    return d;
}

} // namespace

U128 clmul64(std::uint64_t a, std::uint64_t b) { return dispatch().clmul(a, b); }

void xor_shifted(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, unsigned shift) {
    dispatch().xors(dst, src, n, shift);
}

void spread_bits(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    dispatch().spread(dst, src, n);
}

} // namespace ssc::kernels
