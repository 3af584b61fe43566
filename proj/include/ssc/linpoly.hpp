#pragma once

#include <string>
#include <vector>

#include "ssc/field.hpp"
#include "ssc/subspace.hpp"
#include "ssc/tower.hpp"

namespace ssc {

/// Linearized polynomial sum_j c[j] x^{q^j}; c[j] lives in the top field,
/// index = q-degree. Normalized: highest coefficient nonzero (zero poly =
/// empty vector). Values are immutable once built.
struct LinearizedPoly {
    std::vector<Elem> c;

    LinearizedPoly() = default;
    explicit LinearizedPoly(std::vector<Elem> coeffs);

    bool is_zero() const { return c.empty(); }
    int q_degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    Elem coeff(unsigned j) const { return j < c.size() ? c[j] : 0; }

    bool operator==(const LinearizedPoly& o) const { return c == o.c; }
};

/// The unique monic subspace polynomial with root set V, built by extending
/// one basis vector at a time: P_{W+<v>} = P_W^q - P_W(v)^{q-1} P_W.
/// Validated by evaluation on the basis; throws if the stored basis turns
/// out dependent.
LinearizedPoly subspace_poly(const Subspace& V);

Elem lp_eval(const FieldTower& tw, const LinearizedPoly& P, Elem a);

/// Root space of P in the top field, via the F_p null space of the
/// evaluation map. P must be nonzero.
Subspace kernel(const FieldTower& tw, const LinearizedPoly& P);

/// k - i for the largest i < k with c_i != 0. Requires a monic polynomial
/// of q-degree >= 1 with nonzero coefficient of x.
unsigned gap(const LinearizedPoly& P);

/// True iff the kernel dimension equals the q-degree (equivalently P
/// divides x^{q^n} - x); the c_0 != 0 necessary condition is the fast path.
bool is_subspace_poly(const FieldTower& tw, const LinearizedPoly& P);

/// Coefficients of the subspace polynomial of alpha*V: c_j -> alpha^{q^k - q^j} c_j.
LinearizedPoly shift_poly(const FieldTower& tw, const LinearizedPoly& P, Elem alpha);

/// Coefficients of the subspace polynomial of F^s(V): c_j -> c_j^{q^s}.
LinearizedPoly frobenius_poly(const FieldTower& tw, const LinearizedPoly& P, std::uint64_t s);

/// Divide by the leading coefficient.
LinearizedPoly normalize_monic(const FieldTower& tw, const LinearizedPoly& P);

/// dim(U cap V) = log_q deg gcd(P_U, P_V) as ordinary polynomials.
/// Both inputs must pass is_subspace_poly.
unsigned intersection_dim_poly(const FieldTower& tw, const LinearizedPoly& pu,
                               const LinearizedPoly& pv);

/// max(s, t + k2 - k1) where s, t index the second-highest nonzero
/// coefficients of P_U (q-degree k2) and P_V (q-degree k1 <= k2).
unsigned intersection_bound(const LinearizedPoly& pu, const LinearizedPoly& pv);

/// Expand to an ordinary polynomial of degree q^K over the top field.
Poly to_ordinary(const FieldTower& tw, const LinearizedPoly& P);

/// "k=<K>;c=<elem0>|<elem1>|...|<elemK>"
std::string lp_to_string(const FieldTower& tw, const LinearizedPoly& P);
LinearizedPoly lp_parse(const FieldTower& tw, const std::string& s);

} // namespace ssc
