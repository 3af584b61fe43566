#include "ssc/kernels.hpp"

#if defined(SSC_X86_TARGET)

#include <immintrin.h>

namespace ssc::kernels {

void xor_shifted_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, unsigned shift) {
    if (n == 0) return;
    if (shift == 0) {
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
            __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
        }
        for (; i < n; ++i) dst[i] ^= src[i];
        return;
    }
    // dst[i] ^= (src[i] << shift) | (src[i-1] >> (64-shift))
    dst[0] ^= src[0] << shift;
    std::size_t i = 1;
    const __m256i vl = _mm256_set1_epi64x(shift);
    const __m256i vr = _mm256_set1_epi64x(64 - static_cast<int>(shift));
    for (; i + 4 <= n; i += 4) {
        __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 1));
        __m256i v = _mm256_or_si256(_mm256_sllv_epi64(cur, vl), _mm256_srlv_epi64(prev, vr));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, v));
    }
    for (; i < n; ++i) dst[i] ^= (src[i] << shift) | (src[i - 1] >> (64 - shift));
    dst[n] ^= src[n - 1] >> (64 - shift);
}

void spread_bits_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    // nibble -> spread byte via PSHUFB, 16 input bytes -> 32 output bytes
    const __m128i table = _mm_setr_epi8(
        0x00, 0x01, 0x04, 0x05, 0x10, 0x11, 0x14, 0x15,
        0x40, 0x41, 0x44, 0x45, 0x50, 0x51, 0x54, 0x55);
    const __m128i lo_mask = _mm_set1_epi8(0x0f);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
        __m128i lo = _mm_shuffle_epi8(table, _mm_and_si128(v, lo_mask));
        __m128i hi = _mm_shuffle_epi8(table, _mm_and_si128(_mm_srli_epi16(v, 4), lo_mask));
        __m128i out0 = _mm_unpacklo_epi8(lo, hi);
        __m128i out1 = _mm_unpackhi_epi8(lo, hi);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + 2 * i), out0);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + 2 * i + 2), out1);
    }
    if (i < n) spread_bits_scalar(dst + 2 * i, src + i, n - i);
}

} // namespace ssc::kernels

#endif
