#include "ssc/construct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ssc/gf2poly.hpp"
#include "ssc/intmath.hpp"
#include "ssc/linpoly.hpp"

namespace ssc {

namespace {

constexpr std::uint64_t kMaxExpandedDegree = 1u << 14;

std::string u64s(std::uint64_t v) { return std::to_string(v); }

// x^{q^k} + a1 x^q + a0 x as an ordinary polynomial over F
Poly trinomial_ordinary(const Field& F, std::uint64_t q, unsigned k, Elem a1, Elem a0) {
    std::uint64_t qk = ipow_checked(q, k);
    if (qk > kMaxExpandedDegree)
        throw std::invalid_argument("construction: q^k = " + u64s(qk) + " too large to factor");
    std::vector<Elem> c(qk + 1, 0);
    c[1] = a0;
    c[q] = F.add(c[q], a1); // q collides with 1 only when q = 1, impossible
    c[qk] = F.add(c[qk], 1);
    return Poly(F, std::move(c));
}

LinearizedPoly trinomial_linearized(unsigned k, Elem a1, Elem a0) {
    std::vector<Elem> c(k + 1, 0);
    c[0] = a0;
    c[1] = a1;
    c[k] = 1;
    return LinearizedPoly(std::move(c));
}

bool trinomial_shape_irreducible(std::uint64_t p, unsigned m, std::uint64_t q, unsigned k) {
    // x^{q^k - 1} + x^{q-1} + 1 over F_q
    std::uint64_t deg = ipow_checked(q, k) - 1;
    if (p == 2 && m == 1) {
        Gf2Poly f = Gf2Poly::trinomial(static_cast<unsigned>(deg),
                                       static_cast<unsigned>(q - 1));
        return gf2_is_irreducible(f);
    }
    if (deg > kMaxExpandedDegree)
        throw std::invalid_argument("construction: trinomial degree too large");
    Field Fq(p, FieldTower::default_modulus(p, m));
    std::vector<Elem> c(deg + 1, 0);
    c[0] = 1;
    c[q - 1] = Fq.add(c[q - 1], 1);
    c[deg] = Fq.add(c[deg], 1);
    return is_irreducible(Poly(Fq, std::move(c)));
}

void set_params(CyclicCode& c, std::initializer_list<std::pair<std::string, std::string>> ps) {
    for (auto& p : ps) c.params.push_back(p);
}

// group a closed set of subspaces into orbits keyed by their serial-least
// member; every orbit member must come from the given set
std::vector<OrbitRec> group_into_orbits(const std::vector<Subspace>& members) {
    std::set<std::vector<Elem>> index;
    for (const auto& s : members) index.insert(s.rows());
    std::set<std::vector<Elem>> seen;
    std::vector<OrbitRec> out;
    for (const auto& s : members) {
        if (seen.count(s.rows())) continue;
        Orbit o = make_orbit(s);
        const Subspace* least = nullptr;
        Subspace least_store = s;
        std::uint64_t visited = 0;
        for_each_member(o, [&](const Subspace& mem) {
            if (!index.count(mem.rows()))
                throw std::logic_error("group_into_orbits: set not shift-closed");
            seen.insert(mem.rows());
            ++visited;
            if (!least || Subspace::serial_less(mem, least_store)) {
                least_store = mem;
                least = &least_store;
            }
        });
        if (visited != o.size) throw std::logic_error("group_into_orbits: orbit size mismatch");
        out.push_back(OrbitRec{least_store, o.stab_degree, o.size});
    }
    return out;
}

std::vector<OrbitRec> subfield_orbits(const FieldTower& tw, unsigned d, unsigned k) {
    std::vector<Subspace> members;
    enumerate_subfield_grassmannian(tw, d, k / d, [&](const Subspace& s) {
        if (s.dim() != k) throw std::logic_error("subfield_orbits: bad image dimension");
        members.push_back(s);
    });
    return group_into_orbits(members);
}

} // namespace

BigUint CyclicCode::orbit_size_sum() const {
    BigUint s;
    for (const auto& o : orbits) s += BigUint(o.size);
    return s;
}

BigUint gaussian(unsigned n, unsigned k, std::uint64_t q) {
    if (k > n) throw std::invalid_argument("gaussian: k > n");
    if (q < 2) throw std::invalid_argument("gaussian: q must be >= 2");
    // Pascal recurrence G(i,j) = G(i-1,j-1) + q^j G(i-1,j); no division
    std::vector<BigUint> qpow{BigUint(1)};
    for (unsigned j = 1; j <= k; ++j) {
        BigUint t = qpow.back();
        t.mul_u64(q);
        qpow.push_back(t);
    }
    std::vector<BigUint> row{BigUint(1)};
    for (unsigned i = 1; i <= n; ++i) {
        unsigned top = std::min(i, k);
        std::vector<BigUint> next(top + 1);
        next[0] = BigUint(1);
        for (unsigned j = 1; j <= top; ++j) {
            BigUint t = (j < row.size()) ? qpow[j] * row[j] : BigUint(0);
            next[j] = row[j - 1] + t;
        }
        row = std::move(next);
    }
    return row.size() > k ? row[k] : BigUint(0);
}

bool trinomial_family_irreducible(std::uint64_t q, unsigned k) {
    if (k < 2) throw std::invalid_argument("trinomial_family_irreducible: k must be >= 2");
    auto [p, m] = prime_power(q);
    return trinomial_shape_irreducible(p, m, q, k);
}

CyclicCode trinomial_code(std::uint64_t q, unsigned k) {
    if (k < 2) throw std::invalid_argument("trinomial_code: k must be >= 2");
    auto [p, m] = prime_power(q);
    Field Fq(p, FieldTower::default_modulus(p, m));
    Poly T = trinomial_ordinary(Fq, q, k, 1, 1);
    unsigned n = splitting_field_degree(T);
    auto tw = FieldTower::build(p, m, n);
    LinearizedPoly P = trinomial_linearized(k, 1, 1);
    Subspace V = kernel(*tw, P);
    if (V.dim() != k) throw std::logic_error("trinomial_code: kernel dimension != k");
    Orbit o = make_orbit(V);
    if (o.stab_degree != 1) throw std::logic_error("trinomial_code: orbit not full length");

    CyclicCode c;
    c.tower = tw;
    c.k = k;
    c.construction = "trinomial";
    set_params(c, {{"q", u64s(q)}, {"k", u64s(k)}});
    c.claimed_size = BigUint((tw->top().size() - 1) / (q - 1));
    c.claimed_min_distance = static_cast<int>(2 * k - 2);
    c.orbits.push_back(OrbitRec{V, o.stab_degree, o.size});
    return c;
}

CyclicCode irreducible_trinomial_code(std::uint64_t q, unsigned k, unsigned t) {
    if (k < 2) throw std::invalid_argument("irreducible_trinomial_code: k must be >= 2");
    if (t < 1) throw std::invalid_argument("irreducible_trinomial_code: t must be >= 1");
    auto [p, m] = prime_power(q);
    if (!trinomial_shape_irreducible(p, m, q, k)) {
        std::uint64_t deg = ipow_checked(q, k) - 1;
        throw std::invalid_argument("irreducible_trinomial_code: x^" + u64s(deg) + "+x^" +
                                    u64s(q - 1) + "+1 is reducible over F_" + u64s(q) +
                                    "; construction refused");
    }
    std::uint64_t n64 = static_cast<std::uint64_t>(t) * (ipow_checked(q, k) - 1);
    if (n64 > 62) // element encoding bound; build() would also refuse
        throw std::invalid_argument("irreducible_trinomial_code: n = " + u64s(n64) +
                                    " exceeds the supported top-field size");
    unsigned n = static_cast<unsigned>(n64);
    auto tw = FieldTower::build(p, m, n);
    LinearizedPoly P = trinomial_linearized(k, 1, 1);
    Subspace V = kernel(*tw, P);
    if (V.dim() != k) throw std::logic_error("irreducible_trinomial_code: kernel dimension != k");
    Orbit o = make_orbit(V);
    if (o.stab_degree != 1) throw std::logic_error("irreducible_trinomial_code: orbit not full");

    CyclicCode c;
    c.tower = tw;
    c.k = k;
    c.construction = "irreducible";
    set_params(c, {{"q", u64s(q)}, {"k", u64s(k)}, {"t", u64s(t)}});
    c.claimed_size = BigUint((tw->top().size() - 1) / (q - 1));
    c.claimed_min_distance = static_cast<int>(2 * k - 2);
    c.orbits.push_back(OrbitRec{V, o.stab_degree, o.size});
    return c;
}

CyclicCode multi_orbit_code(std::uint64_t q, unsigned n, unsigned k, unsigned nmax) {
    if (!is_prime_u64(n)) throw std::invalid_argument("multi_orbit_code: n must be prime");
    if (k < 2) throw std::invalid_argument("multi_orbit_code: k must be >= 2");
    auto [p, m] = prime_power(q);
    auto small = FieldTower::build(p, m, n);
    Elem gamma = small->gamma();
    Elem a0 = gamma;
    Elem a1 = small->top().pow(gamma, q);
    Poly P_ord = trinomial_ordinary(small->top(), q, k, a1, a0);
    unsigned L = splitting_field_degree(P_ord);
    std::uint64_t N64 = static_cast<std::uint64_t>(n) * L;
    if (N64 > nmax)
        throw std::runtime_error("multi_orbit_code: splitting field degree N = " + u64s(N64) +
                                 " exceeds the cap " + u64s(nmax));
    unsigned N = static_cast<unsigned>(N64);
    auto big = FieldTower::build(p, m, N);
    FieldIso h(small->top(), big->top());
    LinearizedPoly P = trinomial_linearized(k, h(a1), h(a0));
    Subspace V = kernel(*big, P);
    if (V.dim() != k) throw std::logic_error("multi_orbit_code: kernel dimension != k");

    CyclicCode c;
    c.tower = big;
    c.k = k;
    c.construction = "multiorbit";
    set_params(c, {{"q", u64s(q)}, {"n", u64s(n)}, {"k", u64s(k)}, {"N", u64s(N)}});
    BigUint per((big->top().size() - 1) / (q - 1));
    BigUint total;
    for (unsigned i = 0; i < n; ++i) {
        Subspace rep = V.frobenius_shift(i);
        Orbit o = make_orbit(rep);
        if (o.stab_degree != 1) throw std::logic_error("multi_orbit_code: orbit not full length");
        c.orbits.push_back(OrbitRec{rep, o.stab_degree, o.size});
        total += per;
    }
    c.claimed_size = total;
    c.claimed_min_distance = static_cast<int>(2 * k - 2);
    return c;
}

CyclicCode subfield_code(std::uint64_t q, unsigned n, unsigned k, unsigned d,
                         std::uint64_t enum_cap) {
    if (d < 1 || gcd_u64(n, k) % d != 0)
        throw std::invalid_argument("subfield_code: d must divide gcd(n, k)");
    auto [p, m] = prime_power(q);
    BigUint size = gaussian(n / d, k / d, ipow_checked(q, d));
    if (BigUint(enum_cap) < size)
        throw std::invalid_argument("subfield_code: C_d has " + size.to_decimal() +
                                    " members, beyond the enumeration cap");
    auto tw = FieldTower::build(p, m, n);

    CyclicCode c;
    c.tower = tw;
    c.k = k;
    c.construction = "subfield";
    set_params(c, {{"q", u64s(q)}, {"n", u64s(n)}, {"k", u64s(k)}, {"d", u64s(d)}});
    c.orbits = subfield_orbits(*tw, d, k);
    c.claimed_size = size;
    c.claimed_min_distance = static_cast<int>(2 * d);
    if (c.orbit_size_sum() != size)
        throw std::logic_error("subfield_code: enumerated size disagrees with the formula");
    return c;
}

bool cd_membership(const Subspace& v, unsigned d) {
    const FieldTower& tw = v.tower();
    if (d < 1 || gcd_u64(tw.n(), v.dim()) % d != 0)
        throw std::invalid_argument("cd_membership: d must divide gcd(n, dim V)");
    LinearizedPoly P = subspace_poly(v);
    for (unsigned j = 0; j < P.c.size(); ++j) {
        if (P.c[j] != 0 && j % d != 0) return false;
    }
    return true;
}

CyclicCode union_subfield_code(std::uint64_t q, unsigned n, unsigned k,
                               std::vector<unsigned> divisors, std::uint64_t enum_cap) {
    if (divisors.empty()) throw std::invalid_argument("union_subfield_code: no divisors");
    std::sort(divisors.begin(), divisors.end());
    divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
    const std::uint64_t g = gcd_u64(n, k);
    for (unsigned d : divisors) {
        if (d < 1 || g % d != 0)
            throw std::invalid_argument("union_subfield_code: divisor " + u64s(d) +
                                        " does not divide gcd(n, k)");
    }
    auto [p, m] = prime_power(q);

    // inclusion-exclusion over divisor subsets; intersection of the C_{d_i}
    // is C_{lcm}, empty when the lcm does not divide gcd(n, k)
    BigUint plus, minus;
    const std::size_t t = divisors.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << t); ++mask) {
        std::uint64_t l = 1;
        for (std::size_t i = 0; i < t; ++i)
            if (mask & (std::size_t(1) << i)) l = lcm_u64(l, divisors[i]);
        if (g % l != 0) continue;
        BigUint term = gaussian(n / static_cast<unsigned>(l), k / static_cast<unsigned>(l),
                                ipow_checked(q, static_cast<unsigned>(l)));
        if (__builtin_popcountll(mask) % 2 == 1) plus += term;
        else minus += term;
    }
    BigUint size = plus - minus;
    if (BigUint(enum_cap) < size)
        throw std::invalid_argument("union_subfield_code: union has " + size.to_decimal() +
                                    " members, beyond the enumeration cap");

    auto tw = FieldTower::build(p, m, n);
    std::map<std::vector<Elem>, OrbitRec> merged;
    for (unsigned d : divisors) {
        for (auto& rec : subfield_orbits(*tw, d, k)) {
            merged.emplace(rec.rep.rows(), rec); // keyed by serial-least member
        }
    }

    CyclicCode c;
    c.tower = tw;
    c.k = k;
    c.construction = "union";
    std::ostringstream ds;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (i) ds << ',';
        ds << divisors[i];
    }
    set_params(c, {{"q", u64s(q)}, {"n", u64s(n)}, {"k", u64s(k)}, {"divisors", ds.str()}});
    for (auto& [key, rec] : merged) c.orbits.push_back(rec);
    c.claimed_size = size;
    c.claimed_min_distance = static_cast<int>(2 * divisors.front());
    if (c.orbit_size_sum() != size)
        throw std::logic_error("union_subfield_code: enumerated size disagrees with the formula");
    return c;
}

CyclicCode embed_code(const CyclicCode& in, unsigned d) {
    const FieldTower& S = *in.tower;
    if (d < 1 || S.m() % d != 0)
        throw std::invalid_argument("embed_code: d must divide the middle extension degree");
    const std::uint64_t p = S.p();
    const unsigned m_out = S.m() / d;
    const unsigned n_out = S.n() * d;
    auto T = FieldTower::build(p, m_out, n_out);
    FieldIso h(S.top(), T->top());

    Elem eta = S.embed_mid(find_primitive(S.mid()));
    std::vector<Elem> etapow(d);
    etapow[0] = 1;
    for (unsigned t = 1; t < d; ++t) etapow[t] = S.top().mul(etapow[t - 1], eta);

    CyclicCode c;
    c.tower = T;
    c.k = in.k * d;
    c.construction = "embed";
    c.params = in.params;
    c.params.push_back({"embedded_from", in.construction});
    c.params.push_back({"embed_d", u64s(d)});
    c.claimed_size = in.claimed_size;
    c.claimed_min_distance =
        in.claimed_min_distance < 0 ? -1 : static_cast<int>(d) * in.claimed_min_distance;

    for (const auto& rec : in.orbits) {
        std::vector<Elem> gens;
        gens.reserve(std::size_t(rec.rep.dim()) * d);
        for (Elem row : rec.rep.rows())
            for (unsigned t = 0; t < d; ++t) gens.push_back(h(S.top().mul(etapow[t], row)));
        Subspace img = Subspace::from_generators(*T, gens);
        if (img.dim() != c.k) throw std::logic_error("embed_code: image dimension mismatch");
        unsigned t_out = rec.t * d;
        std::uint64_t expect =
            (T->top().size() - 1) / (ipow_checked(T->q(), t_out) - 1);
        if (expect != rec.size) throw std::logic_error("embed_code: orbit size mismatch");
        c.orbits.push_back(OrbitRec{img, t_out, rec.size});
    }
    return c;
}

std::optional<std::vector<Elem>> direct_sum_decompose(const Subspace& v, unsigned d) {
    const FieldTower& tw = v.tower();
    const unsigned k = v.dim();
    if (d < 1 || gcd_u64(tw.n(), k) % d != 0)
        throw std::invalid_argument("direct_sum_decompose: d must divide gcd(n, dim V)");
    if (k == 0) return std::vector<Elem>{};
    if (ipow_checked(tw.q(), k) > (std::uint64_t(1) << 20))
        throw std::invalid_argument("direct_sum_decompose: subspace too large to materialize");

    std::vector<Elem> delta_pow(d);
    delta_pow[0] = 1;
    Elem delta = tw.subfield_generator(d);
    for (unsigned t = 1; t < d; ++t) delta_pow[t] = tw.top().mul(delta_pow[t - 1], delta);

    std::vector<Elem> elems = v.all_elements();
    std::sort(elems.begin(), elems.end(),
              [&](Elem a, Elem b) { return elem_serial_less(tw, a, b); });

    std::vector<Elem> leaders;
    std::vector<Elem> sum_gens;
    std::unordered_set<Elem> covered{0};
    unsigned sum_dim = 0;
    for (Elem e : elems) {
        if (e == 0 || covered.count(e)) continue;
        // candidate summand e * F_{q^d}
        std::vector<Elem> w(d);
        for (unsigned t = 0; t < d; ++t) {
            w[t] = tw.top().mul(e, delta_pow[t]);
            if (!v.contains(w[t])) return std::nullopt; // V is not F_{q^d}-closed
        }
        std::vector<Elem> joint(sum_gens);
        joint.insert(joint.end(), w.begin(), w.end());
        Subspace s = Subspace::from_generators(tw, joint);
        if (s.dim() != sum_dim + d) return std::nullopt; // summand not disjoint
        leaders.push_back(e);
        sum_gens = std::move(joint);
        sum_dim += d;
        for (Elem x : s.all_elements()) covered.insert(x);
        if (sum_dim == k) break;
    }
    if (sum_dim != k) return std::nullopt;
    if (!(Subspace::from_generators(tw, sum_gens) == v)) return std::nullopt;
    return leaders;
}

CensusResult orbit_census(std::uint64_t q, unsigned n, unsigned k, std::uint64_t cap) {
    auto [p, m] = prime_power(q);
    BigUint total = gaussian(n, k, q);
    if (BigUint(cap) < total)
        throw std::invalid_argument("orbit_census: G has " + total.to_decimal() +
                                    " subspaces, beyond the enumeration cap");
    auto tw = FieldTower::build(p, m, n);

    std::set<std::vector<Elem>> seen;
    std::map<unsigned, std::uint64_t> counts;
    for (std::uint64_t dv : divisors_u64(gcd_u64(n, k))) counts[static_cast<unsigned>(dv)] = 0;
    std::uint64_t enumerated = 0;

    enumerate_grassmannian(*tw, k, [&](const Subspace& V) {
        ++enumerated;
        if (seen.count(V.rows())) return;
        Orbit o = make_orbit(V);
        std::uint64_t inserted = 0;
        for_each_member(o, [&](const Subspace& mem) {
            if (seen.insert(mem.rows()).second) ++inserted;
        });
        if (inserted != o.size)
            throw std::logic_error("orbit_census: duplicate members inside an orbit");
        ++counts[o.stab_degree];
    });

    if (BigUint(enumerated) != total)
        throw std::logic_error("orbit_census: enumeration does not match the Gaussian count");

    CensusResult r;
    r.q = q;
    r.n = n;
    r.k = k;
    r.total = total;
    BigUint lhs;
    const std::uint64_t qn1 = tw->top().size() - 1;
    for (auto [d, cnt] : counts) {
        r.orbit_counts.push_back({d, cnt});
        BigUint t(cnt);
        t.mul_u64(qn1 / (ipow_checked(q, d) - 1));
        lhs += t;
    }
    r.identity_ok = (lhs == total);
    return r;
}

} // namespace ssc
