#include "ssc/gf2poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "ssc/intmath.hpp"
#include "ssc/kernels.hpp"

namespace ssc {

void Gf2Poly::recompute_deg() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
    if (w_.empty()) { deg_ = -1; return; }
    deg_ = static_cast<int>(64 * (w_.size() - 1) + 63 - __builtin_clzll(w_.back()));
}

void Gf2Poly::set_bit(unsigned i) {
    if (w_.size() <= i / 64) w_.resize(i / 64 + 1, 0);
    w_[i / 64] |= std::uint64_t(1) << (i % 64);
}

Gf2Poly Gf2Poly::monomial(unsigned d) {
    Gf2Poly r;
    r.set_bit(d);
    r.deg_ = static_cast<int>(d);
    return r;
}

Gf2Poly Gf2Poly::trinomial(unsigned n, unsigned a) {
    if (a >= n) throw std::invalid_argument("Gf2Poly::trinomial: need a < n");
    Gf2Poly r;
    r.set_bit(n);
    r.set_bit(a);
    r.set_bit(0);
    r.deg_ = static_cast<int>(n);
    return r;
}

Gf2Poly Gf2Poly::from_coeff_mask(std::uint64_t bits) {
    Gf2Poly r;
    if (bits) r.w_.push_back(bits);
    r.recompute_deg();
    return r;
}

bool Gf2Poly::bit(unsigned i) const {
    if (i / 64 >= w_.size()) return false;
    return (w_[i / 64] >> (i % 64)) & 1;
}

bool Gf2Poly::operator==(const Gf2Poly& o) const { return deg_ == o.deg_ && w_ == o.w_; }

void Gf2Poly::xor_assign(const Gf2Poly& o) {
    if (w_.size() < o.w_.size()) w_.resize(o.w_.size(), 0);
    kernels::xor_shifted(w_.data(), o.w_.data(), o.w_.size(), 0);
    recompute_deg();
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    Gf2Poly r;
    if (is_zero() || o.is_zero()) return r;
    r.w_.assign(w_.size() + o.w_.size(), 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] == 0) continue;
        for (std::size_t j = 0; j < o.w_.size(); ++j) {
            if (o.w_[j] == 0) continue;
            kernels::U128 p = kernels::clmul64(w_[i], o.w_[j]);
            r.w_[i + j] ^= p.lo;
            r.w_[i + j + 1] ^= p.hi;
        }
    }
    r.recompute_deg();
    return r;
}

Gf2Poly Gf2Poly::sqr() const {
    Gf2Poly r;
    if (is_zero()) return r;
    r.w_.assign(2 * w_.size(), 0);
    kernels::spread_bits(r.w_.data(), w_.data(), w_.size());
    r.recompute_deg();
    return r;
}

void Gf2Poly::mod_assign(const Gf2Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("Gf2Poly::mod_assign: zero modulus");
    const int n = f.deg();
    while (deg_ >= n) {
        unsigned s = static_cast<unsigned>(deg_ - n);
        // this ^= f << s
        if (w_.size() < f.w_.size() + s / 64 + 1) w_.resize(f.w_.size() + s / 64 + 1, 0);
        kernels::xor_shifted(w_.data() + s / 64, f.w_.data(), f.w_.size(), s % 64);
        recompute_deg();
    }
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        a.mod_assign(b);
        std::swap(a, b);
    }
    return a;
}

Gf2Reducer::Gf2Reducer(const Gf2Poly& f) : f_(f) {
    if (f.deg() < 1) throw std::invalid_argument("Gf2Reducer: modulus degree must be >= 1");
    unsigned terms = 0, mid = 0;
    for (const auto w : f.words()) terms += static_cast<unsigned>(__builtin_popcountll(w));
    if (terms == 3 && f.bit(0)) {
        for (unsigned i = 1; i < static_cast<unsigned>(f.deg()); ++i) {
            if (f.bit(i)) { mid = i; break; }
        }
        if (mid) {
            trinomial_ = true;
            n_ = static_cast<unsigned>(f.deg());
            a_ = mid;
        }
    }
}

void Gf2Reducer::reduce(Gf2Poly& r) const {
    if (!trinomial_) {
        r.mod_assign(f_);
        return;
    }
    // x^n == x^a + 1 (mod f): fold the high part down in blocks
    while (r.deg_ >= static_cast<int>(n_)) {
        const std::size_t lo_words = n_ / 64 + 1;
        std::size_t hw = r.w_.size();
        // extract the part with exponents >= n into `high`, aligned to bit 0
        std::vector<std::uint64_t> high(hw - n_ / 64, 0);
        unsigned off = n_ % 64;
        for (std::size_t i = n_ / 64; i < hw; ++i) {
            std::uint64_t w = r.w_[i] >> off;
            if (off && i + 1 < hw) w |= r.w_[i + 1] << (64 - off);
            high[i - n_ / 64] = w;
        }
        while (!high.empty() && high.back() == 0) high.pop_back();
        if (high.empty()) break;
        // clear exponents >= n in r
        r.w_[n_ / 64] &= off ? ((std::uint64_t(1) << off) - 1) : 0;
        for (std::size_t i = n_ / 64 + 1; i < hw; ++i) r.w_[i] = 0;
        // r ^= high + high << a
        std::size_t need = std::max(lo_words, high.size() + a_ / 64 + 1) + 1;
        if (r.w_.size() < need) r.w_.resize(need, 0);
        kernels::xor_shifted(r.w_.data(), high.data(), high.size(), 0);
        kernels::xor_shifted(r.w_.data() + a_ / 64, high.data(), high.size(), a_ % 64);
        r.recompute_deg();
    }
}

bool gf2_is_irreducible(const Gf2Poly& f) {
    if (f.deg() < 1) throw std::invalid_argument("gf2_is_irreducible: need degree >= 1");
    if (f.deg() == 1) return true;
    const unsigned n = static_cast<unsigned>(f.deg());
    Gf2Reducer red(f);

    std::vector<unsigned> checkpoints;
    for (auto [p, e] : factor_u64(n)) {
        (void)e;
        checkpoints.push_back(n / static_cast<unsigned>(p));
    }
    std::sort(checkpoints.begin(), checkpoints.end());

    Gf2Poly h = Gf2Poly::x();
    std::size_t next_cp = 0;
    for (unsigned j = 1; j <= n; ++j) {
        h = h.sqr();
        red.reduce(h);
        while (next_cp < checkpoints.size() && checkpoints[next_cp] == j) {
            Gf2Poly g = h;
            g.xor_assign(Gf2Poly::x());
            if (Gf2Poly::gcd(g, f).deg() != 0) return false;
            ++next_cp;
        }
    }
    Gf2Poly final = h;
    final.xor_assign(Gf2Poly::x());
    return final.is_zero();
}

} // namespace ssc
