#pragma once

#include <cstdint>
#include <vector>

namespace ssc {

/// Dense polynomial over GF(2), bit-packed 64 bits per word. Built for the
/// large-degree irreducibility tests; multiplication goes through the
/// carry-less kernel and reduction through the shifted-XOR kernel, with a
/// short path for trinomial moduli x^n + x^a + 1.
class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly x() { return monomial(1); }
    static Gf2Poly monomial(unsigned d);
    static Gf2Poly trinomial(unsigned n, unsigned a); // x^n + x^a + 1, n > a >= 0
    static Gf2Poly from_coeff_mask(std::uint64_t bits);

    int deg() const { return deg_; }
    bool is_zero() const { return deg_ < 0; }
    bool bit(unsigned i) const;
    bool operator==(const Gf2Poly& o) const;

    void xor_assign(const Gf2Poly& o);
    Gf2Poly operator*(const Gf2Poly& o) const;
    Gf2Poly sqr() const;

    /// Remainder modulo f (general dense divisor).
    void mod_assign(const Gf2Poly& f);

    static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::vector<std::uint64_t> w_;
    int deg_ = -1;
    void recompute_deg();
    void set_bit(unsigned i);
    friend class Gf2Reducer;
};

/// Reduction context for a fixed modulus; picks the trinomial short path
/// when the modulus has exactly three terms.
class Gf2Reducer {
public:
    explicit Gf2Reducer(const Gf2Poly& f);
    void reduce(Gf2Poly& r) const;

private:
    const Gf2Poly& f_;
    bool trinomial_ = false;
    unsigned n_ = 0, a_ = 0;
};

/// Rabin irreducibility test over F_2.
bool gf2_is_irreducible(const Gf2Poly& f);

} // namespace ssc
