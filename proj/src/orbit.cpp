#include "ssc/orbit.hpp"

#include <mutex>
#include <stdexcept>

#include "ssc/intmath.hpp"
#include "ssc/parallel.hpp"

namespace ssc {

unsigned stabilizer_degree(const Subspace& v) {
    if (v.dim() == 0) throw std::invalid_argument("stabilizer_degree: zero subspace");
    const FieldTower& tw = v.tower();
    const std::uint64_t qn1 = tw.top().size() - 1;
    auto divs = divisors_u64(gcd_u64(tw.n(), v.dim()));
    for (std::size_t i = divs.size(); i-- > 0;) {
        unsigned d = static_cast<unsigned>(divs[i]);
        std::uint64_t qd1 = ipow_checked(tw.q(), d) - 1;
        Elem shift = tw.top().pow(tw.gamma(), qn1 / qd1);
        if (v.cyclic_shift(shift) == v) return d;
    }
    throw std::logic_error("stabilizer_degree: d = 1 must fix"); // unreachable
}

Orbit make_orbit(const Subspace& v) {
    const FieldTower& tw = v.tower();
    unsigned t = stabilizer_degree(v);
    std::uint64_t size = (tw.top().size() - 1) / (ipow_checked(tw.q(), t) - 1);
    return Orbit{v, t, size};
}

void for_each_member(const Orbit& o, const std::function<void(const Subspace&)>& fn) {
    const FieldTower& tw = o.rep.tower();
    Subspace cur = o.rep;
    for (std::uint64_t j = 0; j < o.size; ++j) {
        fn(cur);
        if (j + 1 < o.size) cur = cur.cyclic_shift(tw.gamma());
    }
}

std::vector<Subspace> materialize_orbit(const Orbit& o, std::uint64_t cap) {
    if (o.size > cap) throw std::invalid_argument("materialize_orbit: orbit exceeds cap");
    std::vector<Subspace> out;
    out.reserve(o.size);
    for_each_member(o, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

Subspace canonical_orbit_key(const Orbit& o) {
    const FieldTower& tw = o.rep.tower();
    std::mutex mu;
    std::optional<Subspace> best;
    parallel_chunks(o.size, [&](unsigned, std::uint64_t b, std::uint64_t e) {
        Elem alpha = tw.top().pow(tw.gamma(), b);
        Subspace cur = b == 0 ? o.rep : o.rep.cyclic_shift(alpha);
        std::optional<Subspace> local;
        for (std::uint64_t j = b; j < e; ++j) {
            if (!local || Subspace::serial_less(cur, *local)) local = cur;
            if (j + 1 < e) cur = cur.cyclic_shift(tw.gamma());
        }
        if (local) {
            std::lock_guard<std::mutex> lk(mu);
            if (!best || Subspace::serial_less(*local, *best)) best = *local;
        }
    });
    return *best;
}

std::uint64_t distinct_shift_bound(const FieldTower& tw, const LinearizedPoly& p) {
    if (p.q_degree() < 1 || !p.is_monic())
        throw std::invalid_argument("distinct_shift_bound: need a monic subspace polynomial");
    const unsigned k = static_cast<unsigned>(p.q_degree());
    const std::uint64_t qn1 = tw.top().size() - 1;
    std::uint64_t best = 1;
    for (unsigned s = 1; s < k; ++s) {
        if (p.coeff(s) == 0) continue;
        unsigned t = static_cast<unsigned>(gcd_u64(s, tw.n()));
        std::uint64_t cand = qn1 / (ipow_checked(tw.q(), t) - 1);
        if (cand > best) best = cand;
    }
    return best;
}

std::optional<Elem> find_shift_mapping(const Subspace& from, const Subspace& to) {
    const FieldTower& tw = from.tower();
    Elem a = 1;
    for (std::uint64_t j = 0; j + 1 < tw.top().size(); ++j) {
        if (from.cyclic_shift(a) == to) return a;
        a = tw.top().mul(a, tw.gamma());
    }
    return std::nullopt;
}

bool sim_t(const FieldTower& tw, Elem alpha, Elem beta, unsigned t) {
    if (alpha == 0 || beta == 0) throw std::invalid_argument("sim_t: inputs must be nonzero");
    return tw.subfield_member(tw.top().div(alpha, beta), t);
}

std::optional<Elem> frobenius_cyclic_witness(const FieldTower& tw, const LinearizedPoly& p,
                                             std::uint64_t i) {
    const unsigned k = static_cast<unsigned>(p.q_degree());
    if (k < 2) throw std::invalid_argument("frobenius_cyclic_witness: q-degree must be >= 2");
    if (!p.is_monic()) throw std::invalid_argument("frobenius_cyclic_witness: must be monic");
    for (unsigned j = 2; j < k; ++j) {
        if (p.coeff(j) != 0)
            throw std::invalid_argument("frobenius_cyclic_witness: not a trinomial x^{q^k}+a1 x^q+a0 x");
    }
    Elem a1 = p.coeff(1), a0 = p.coeff(0);
    if (a1 == 0) throw std::invalid_argument("frobenius_cyclic_witness: a1 must be nonzero");
    if (a0 == 0) throw std::invalid_argument("frobenius_cyclic_witness: a0 must be nonzero");
    const std::uint64_t q = tw.q();
    const std::uint64_t qk = ipow_checked(q, k);
    const std::uint64_t e0 = (qk - q) / (q - 1);
    const std::uint64_t e1 = (qk - 1) / (q - 1);
    const Field& top = tw.top();
    i %= tw.n();
    const std::uint64_t qi1 = ipow_checked(q, static_cast<unsigned>(i)) - 1;
    Elem z = top.div(top.pow(a0, e0), top.pow(a1, e1));
    if (top.pow(z, qi1) != 1) return std::nullopt;
    return top.pow(top.div(a0, a1), qi1 / (q - 1));
}

} // namespace ssc
