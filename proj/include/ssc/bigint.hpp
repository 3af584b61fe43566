#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ssc {

/// Unsigned arbitrary-precision integer, base 2^32 limbs, little-endian.
/// Only the operations the counting formulas need: add, subtract (no
/// underflow), multiply, compare, decimal conversion.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    static BigUint from_decimal(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    int cmp(const BigUint& o) const;

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o); // throws on underflow
    BigUint& mul_u64(std::uint64_t m);
    BigUint operator*(const BigUint& o) const;

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.cmp(b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.cmp(b) <= 0; }

    /// Value as u64; throws std::overflow_error if it does not fit.
    std::uint64_t to_u64() const;
    bool fits_u64() const { return limbs_.size() <= 2; }

    std::string to_decimal() const;

private:
    std::vector<std::uint32_t> limbs_;
    void trim();
};

} // namespace ssc
