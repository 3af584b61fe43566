#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssc/bigint.hpp"
#include "ssc/orbit.hpp"
#include "ssc/subspace.hpp"
#include "ssc/tower.hpp"

namespace ssc {

struct OrbitRec {
    Subspace rep;
    unsigned t;
    std::uint64_t size;
};

/// A cyclic subspace code as a set of shift orbits plus the construction's
/// claimed parameters. claimed_min_distance = -1 means undefined (codes with
/// fewer than two codewords).
struct CyclicCode {
    std::shared_ptr<const FieldTower> tower;
    unsigned k = 0;
    std::string construction;
    std::vector<std::pair<std::string, std::string>> params;
    BigUint claimed_size;
    int claimed_min_distance = -1;
    std::vector<OrbitRec> orbits;

    BigUint orbit_size_sum() const;
};

struct CensusResult {
    std::uint64_t q = 0;
    unsigned n = 0, k = 0;
    /// (d, number of orbits with stabilizer degree d) for every d | gcd(n,k),
    /// ascending d. The count at d equals M_{q^d}(n/d, k/d).
    std::vector<std::pair<unsigned, std::uint64_t>> orbit_counts;
    BigUint total;
    bool identity_ok = false;
};

inline constexpr std::uint64_t kDefaultEnumCap = 2000000;
inline constexpr unsigned kDefaultNMax = 30;

/// Gaussian binomial coefficient [n choose k]_q, exact.
BigUint gaussian(unsigned n, unsigned k, std::uint64_t q);

/// Full-orbit code from T(x) = x^{q^k} + x^q + x; n = splitting field degree
/// of T over F_q, size (q^n-1)/(q-1), claimed distance 2k-2.
CyclicCode trinomial_code(std::uint64_t q, unsigned k);

/// Same subspace polynomial, with n = t(q^k - 1) chosen explicitly; refused
/// when x^{q^k-1} + x^{q-1} + 1 is reducible over F_q.
CyclicCode irreducible_trinomial_code(std::uint64_t q, unsigned k, unsigned t);

/// Is x^{q^k-1} + x^{q-1} + 1 irreducible over F_q?
bool trinomial_family_irreducible(std::uint64_t q, unsigned k);

/// n prime: the union of the n Frobenius shifts of the kernel of
/// x^{q^k} + gamma^q x^q + gamma x, gamma primitive in F_{q^n}; N is the
/// splitting field degree (a multiple of n), refused when N > nmax.
CyclicCode multi_orbit_code(std::uint64_t q, unsigned n, unsigned k,
                            unsigned nmax = kDefaultNMax);

/// C_d: all k-dimensional F_q-subspaces that are F_{q^d}-subspaces,
/// materialized as orbits. Size [n/d choose k/d]_{q^d}, distance 2d.
CyclicCode subfield_code(std::uint64_t q, unsigned n, unsigned k, unsigned d,
                         std::uint64_t enum_cap = kDefaultEnumCap);

/// Subspace polynomial support lies on q-degrees divisible by d.
bool cd_membership(const Subspace& v, unsigned d);

/// Union of C_{d_i}; exact size by inclusion-exclusion over divisor subsets,
/// claimed distance 2 min(d_i).
CyclicCode union_subfield_code(std::uint64_t q, unsigned n, unsigned k,
                               std::vector<unsigned> divisors,
                               std::uint64_t enum_cap = kDefaultEnumCap);

/// Embed a cyclic code over its middle field F_{q^d} = F_{p^{m}} into the
/// Grassmannian over F_q = F_{p^{m/d}}: same size, distances scaled by d.
CyclicCode embed_code(const CyclicCode& c, unsigned d);

/// If V is in C_d, the greedy list of coset leaders beta_i with
/// V = direct sum of beta_i F_{q^d}; otherwise nullopt.
std::optional<std::vector<Elem>> direct_sum_decompose(const Subspace& v, unsigned d);

/// Exhaustive orbit census of G_q(n, k): groups the whole Grassmannian into
/// orbits, tallies stabilizer degrees, and checks the size identity.
CensusResult orbit_census(std::uint64_t q, unsigned n, unsigned k,
                          std::uint64_t cap = kDefaultEnumCap);

} // namespace ssc
