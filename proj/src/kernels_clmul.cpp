#include "ssc/kernels.hpp"

#if defined(SSC_X86_TARGET)

#include <wmmintrin.h>

namespace ssc::kernels {

U128 clmul64_pclmul(std::uint64_t a, std::uint64_t b) {
    __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
    __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
    __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
    U128 r;
    r.lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
    r.hi = static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_srli_si128(p, 8)));
    return r;
}

} // namespace ssc::kernels

#endif
