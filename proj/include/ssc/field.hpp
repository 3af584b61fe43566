#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ssc {

/// Field element handle. Digits of the value in base p, little-endian, are
/// the coordinates in the power basis of the field's defining polynomial.
/// For p = 2 the value is literally the coefficient bitmask.
using Elem = std::uint64_t;

/// F_p[x]/(modulus): a single extension of a prime field.
///
/// The modulus is a monic polynomial over F_p given as a little-endian
/// coefficient vector (constructor validates shape, not irreducibility;
/// tower building tests irreducibility before constructing extensions).
/// Immutable after construction; all operations are pure.
class Field {
public:
    Field(std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t p() const { return p_; }
    unsigned deg() const { return deg_; }
    std::uint64_t size() const { return size_; }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::uint64_t c) const { return c % p_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Scalar reference multiply (no carry-less-multiply kernel); the
    /// dispatched mul() is equivalence-tested against this.
    Elem mul_reference(Elem a, Elem b) const;
    Elem inv(Elem a) const; // throws on zero
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// Multiplicative order; throws on zero.
    std::uint64_t order(Elem a) const;

    /// Prime factorization of size()-1, cached.
    const std::vector<std::pair<std::uint64_t, int>>& group_factors() const { return grp_factors_; }

    std::vector<std::uint64_t> digits(Elem a) const;
    Elem from_digits(const std::vector<std::uint64_t>& d) const;

    /// "d0,d1,...,d_{deg-1}" little-endian base-p digits.
    std::string elem_string(Elem a) const;
    Elem parse_elem(const std::string& s) const;

    bool same_field(const Field& o) const { return p_ == o.p_ && mod_ == o.mod_; }

private:
    std::uint64_t p_;
    unsigned deg_;
    std::uint64_t size_;
    std::vector<std::uint64_t> mod_;
    std::vector<std::pair<std::uint64_t, int>> grp_factors_;

    // GF(2) fast context
    std::uint64_t mod_mask_ = 0;   // full modulus bitmask incl. leading bit
    std::uint64_t barrett_mu_ = 0; // x^{2d} div modulus
    bool use_clmul_ = false;

    Elem mul_gf2_scalar(Elem a, Elem b) const;
    Elem mul_gf2_barrett(Elem a, Elem b) const;
    Elem mul_generic(Elem a, Elem b) const;
};

/// Smallest element (numeric encoding order) of full multiplicative order.
Elem find_primitive(const Field& F);

/// Dense univariate polynomial over a Field. Coefficients little-endian,
/// normalized so the leading coefficient is nonzero (zero poly = empty).
class Poly {
public:
    Poly() : F_(nullptr) {}
    explicit Poly(const Field& F) : F_(&F) {}
    Poly(const Field& F, std::vector<Elem> coeffs);

    static Poly x(const Field& F);
    static Poly one(const Field& F);
    static Poly monomial(const Field& F, unsigned d, Elem c = 1);

    const Field& field() const { return *F_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem s) const;
    Poly monic() const;

    /// Quotient and remainder; divisor need not be monic.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    Poly mod(const Poly& f) const { return divmod(*this, f).second; }

    Elem eval(Elem a) const;
    Poly derivative() const;

    /// this^e mod f.
    Poly powmod(std::uint64_t e, const Poly& f) const;

private:
    const Field* F_;
    std::vector<Elem> c_;
    void normalize();
};

Poly gcd_monic(Poly a, Poly b);

/// Square-free decomposition: pairwise-coprime monic square-free parts with
/// multiplicities, product of part^mult = monic(f).
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

/// Distinct-degree split of a monic square-free polynomial: (d, product of
/// all irreducible factors of degree d), d ascending.
std::vector<std::pair<unsigned, Poly>> distinct_degree_factorization(const Poly& f);

/// Irreducible factor degrees with multiplicity; validates by multiplying
/// the recovered parts back together. Requires deg >= 1.
std::map<unsigned, unsigned> factor_degrees(const Poly& f);

/// lcm of irreducible factor degrees.
unsigned splitting_field_degree(const Poly& f);

bool is_irreducible(const Poly& f);

/// All roots of f in its coefficient field, ascending. Cantor-Zassenhaus
/// splitting with a fixed-seed generator (the root set is canonical).
std::vector<Elem> find_roots(const Poly& f);

} // namespace ssc
