#pragma once

#include <cstddef>
#include <cstdint>

// Bit-level kernels behind the GF(2) arithmetic: carry-less multiply,
// shifted XOR, and square-by-bit-spread. Each has a scalar reference
// implementation and an x86 variant (PCLMUL / AVX2) selected once at
// startup from CPUID; SSCODES_FORCE_SCALAR=1 pins the scalar path.
// The variants are equivalence-tested against each other bit for bit.

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__) || defined(_M_IX86)
#define SSC_X86_TARGET 1
#endif

namespace ssc::kernels {

struct U128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

struct Caps {
    bool clmul = false;
    bool avx2 = false;
};

/// Capabilities actually in use (after the env override).
const Caps& caps();
/// Raw CPU detection, before the env override.
const Caps& cpu_caps();

/// Carry-less 64x64 -> 128 bit multiply.
U128 clmul64(std::uint64_t a, std::uint64_t b);

/// dst ^= src << shift, where src spans n words and shift < 64.
/// Writes n words, plus one carry word dst[n] when shift > 0.
void xor_shifted(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, unsigned shift);

/// Square a GF(2) polynomial by interleaving zero bits:
/// dst[2i], dst[2i+1] = spread(src[i]). dst must hold 2n words.
void spread_bits(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

// Reference kernels (always available).
U128 clmul64_scalar(std::uint64_t a, std::uint64_t b);
void xor_shifted_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, unsigned shift);
void spread_bits_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

#if defined(SSC_X86_TARGET)
U128 clmul64_pclmul(std::uint64_t a, std::uint64_t b);
void xor_shifted_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, unsigned shift);
void spread_bits_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
#endif

} // namespace ssc::kernels
