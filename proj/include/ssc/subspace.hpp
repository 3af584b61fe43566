#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ssc/tower.hpp"

namespace ssc {

/// k-dimensional F_q-subspace of the top field, held as a canonical basis:
/// reduced row echelon form over F_q w.r.t. the coordinate basis
/// {1, x, ..., x^{n-1}}, rows ordered by pivot column. Equal subspaces have
/// equal row vectors, so equality is plain comparison. Immutable.
class Subspace {
public:
    static Subspace zero(const FieldTower& tw);
    static Subspace from_generators(const FieldTower& tw, std::span<const Elem> gens);

    const FieldTower& tower() const { return *tw_; }
    unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
    const std::vector<Elem>& rows() const { return rows_; }

    bool operator==(const Subspace& o) const { return rows_ == o.rows_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(Elem a) const;

    Subspace cyclic_shift(Elem alpha) const;   // throws on alpha == 0
    Subspace frobenius_shift(std::uint64_t i) const;

    /// All q^k elements (subset sums over F_q); intended for desk scale.
    std::vector<Elem> all_elements() const;

    /// "k=<k>;rows=<elem>|...|<elem>", canonical rows only.
    std::string to_string() const;
    static Subspace parse(const FieldTower& tw, const std::string& s);

    /// Order by the serialized digit strings (first differing little-endian
    /// digit decides). Total order on subspaces of equal tower.
    static bool serial_less(const Subspace& a, const Subspace& b);

private:
    Subspace(const FieldTower& tw, std::vector<Elem> rows) : tw_(&tw), rows_(std::move(rows)) {}
    const FieldTower* tw_;
    std::vector<Elem> rows_;
};

unsigned intersect_dim(const Subspace& u, const Subspace& v);
unsigned distance(const Subspace& u, const Subspace& v);

/// Visit every subspace of G_q(n, k) inside the tower, enumerated through
/// reduced-echelon coordinate matrices over F_q. Deterministic order.
void enumerate_grassmannian(const FieldTower& tw, unsigned k,
                            const std::function<void(const Subspace&)>& fn);

/// Same over the canonical subfield F_{q^d}: every (kk)-dimensional
/// F_{q^d}-subspace of the top field, surfaced as a k = kk*d dimensional
/// F_q-subspace. Requires d | n.
void enumerate_subfield_grassmannian(const FieldTower& tw, unsigned d, unsigned kk,
                                     const std::function<void(const Subspace&)>& fn);

/// serial_less on bare elements (little-endian digit order).
bool elem_serial_less(const FieldTower& tw, Elem a, Elem b);

namespace gf2row {
// Raw GF(2) row kernels for the p=2, m=1 hot paths: rows are bitmasks.
int rank(std::uint64_t* rows, int cnt);
void rref(std::uint64_t* rows, int& cnt);
} // namespace gf2row

} // namespace ssc
