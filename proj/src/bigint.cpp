#include "ssc/bigint.hpp"

#include <stdexcept>

namespace ssc {

BigUint::BigUint(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigUint::cmp(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (cmp(o) < 0) throw std::underflow_error("BigUint: negative result");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(limbs_[i]) -
                         (i < o.limbs_.size() ? o.limbs_[i] : 0) - borrow;
        borrow = d < 0;
        if (d < 0) d += (std::int64_t(1) << 32);
        limbs_[i] = static_cast<std::uint32_t>(d);
    }
    trim();
    return *this;
}

BigUint& BigUint::mul_u64(std::uint64_t m) {
    if (m == 0 || is_zero()) { limbs_.clear(); return *this; }
    const std::uint64_t lo = m & 0xffffffffULL, hi = m >> 32;
    std::vector<std::uint32_t> out(limbs_.size() + 3, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t v = limbs_[i];
        std::uint64_t p0 = v * lo, p1 = v * hi;
        std::uint64_t carry = 0, s;
        s = std::uint64_t(out[i]) + (p0 & 0xffffffffULL);
        out[i] = static_cast<std::uint32_t>(s); carry = s >> 32;
        s = std::uint64_t(out[i + 1]) + (p0 >> 32) + (p1 & 0xffffffffULL) + carry;
        out[i + 1] = static_cast<std::uint32_t>(s); carry = s >> 32;
        s = std::uint64_t(out[i + 2]) + (p1 >> 32) + carry;
        out[i + 2] = static_cast<std::uint32_t>(s); carry = s >> 32;
        s = std::uint64_t(out[i + 3]) + carry;
        out[i + 3] = static_cast<std::uint32_t>(s);
    }
    limbs_ = std::move(out);
    trim();
    return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
    BigUint r;
    if (is_zero() || o.is_zero()) return r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t s = std::uint64_t(limbs_[i]) * o.limbs_[j] +
                              r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t s = std::uint64_t(r.limbs_[k]) + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

std::uint64_t BigUint::to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigUint: does not fit in u64");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = std::uint64_t(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    return std::string(out.rbegin(), out.rend());
}

BigUint BigUint::from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigUint: empty decimal string");
    BigUint r;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("BigUint: bad decimal digit");
        r.mul_u64(10);
        r += BigUint(static_cast<std::uint64_t>(ch - '0'));
    }
    return r;
}

} // namespace ssc
