#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ssc/field.hpp"

namespace ssc {

/// The tower F_p <= F_q <= F_{q^n}, q = p^m, with a fixed embedding of the
/// middle field into the top field and a primitive element of the top field.
///
/// Construction is deterministic: omitted moduli default to the smallest
/// monic irreducible polynomial of the right degree (coefficient vectors
/// compared by their base-p integer encoding), the embedding root is the
/// smallest of its conjugates, and gamma is the smallest primitive element.
/// Instances are immutable and safe to share across threads.
class FieldTower {
public:
    static std::shared_ptr<const FieldTower> build(
        std::uint64_t p, unsigned m, unsigned n,
        std::optional<std::vector<std::uint64_t>> mid_modulus = std::nullopt,
        std::optional<std::vector<std::uint64_t>> top_modulus = std::nullopt);

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    unsigned n() const { return n_; }
    std::uint64_t q() const { return q_; }

    const Field& base() const { return base_; }
    const Field& mid() const { return mid_; }
    const Field& top() const { return top_; }

    Elem gamma() const { return gamma_; }

    /// Canonical embedding F_q -> F_{q^n}.
    Elem embed_mid(Elem a) const;

    /// a^{q^i}; i is reduced mod n.
    Elem frobenius(Elem a, std::uint64_t i) const;

    /// a^{q^d} == a; requires d | n.
    bool subfield_member(Elem a, unsigned d) const;

    /// Multiplicative order of a nonzero top-field element.
    std::uint64_t element_order(Elem a) const;

    /// F_q-coordinates of a top element w.r.t. the basis {1, x, ..., x^{n-1}}
    /// (x = the class of the defining variable). out must hold n entries,
    /// each a middle-field element.
    void fq_coords(Elem a, Elem* out) const;
    Elem from_fq_coords(const Elem* c) const;

    /// gamma^{(q^n-1)/(q^d-1)}: a generator of the subfield F_{q^d}^*.
    Elem subfield_generator(unsigned d) const;
    /// All q^d elements of the canonical subfield copy F_{q^d}, ascending.
    std::vector<Elem> subfield_elements(unsigned d) const;

    /// "p=..;m=..;n=..;mid=..;top=.." with base-p little-endian coefficients.
    std::string spec_string() const;
    static std::shared_ptr<const FieldTower> parse(const std::string& spec);

    std::string elem_string(Elem a) const { return top_.elem_string(a); }
    Elem parse_elem(const std::string& s) const { return top_.parse_elem(s); }

    bool same_as(const FieldTower& o) const;

    /// Smallest monic irreducible polynomial of the given degree over F_p
    /// (base-p integer encoding order of the coefficient vector).
    static std::vector<std::uint64_t> default_modulus(std::uint64_t p, unsigned deg);

private:
    FieldTower(std::uint64_t p, unsigned m, unsigned n,
               std::vector<std::uint64_t> mid_mod, std::vector<std::uint64_t> top_mod);

    std::uint64_t p_;
    unsigned m_, n_;
    std::uint64_t q_;
    Field base_, mid_, top_;
    std::vector<Elem> mid_root_pows_; // iota(y^i), i < m
    Elem gamma_;

    // m > 1: change of basis between the power basis over F_p and the
    // product basis {iota(y)^i x^j}; rows/cols over F_p.
    std::vector<std::vector<std::uint64_t>> coord_inv_;

    static bool modulus_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& mod);
};

/// Field isomorphism between two representations of the same finite field,
/// made canonical by sending x to the smallest root of src's modulus in dst.
class FieldIso {
public:
    FieldIso(const Field& src, const Field& dst);
    Elem operator()(Elem a) const;

private:
    const Field* src_;
    const Field* dst_;
    std::vector<Elem> root_pows_;
};

} // namespace ssc
