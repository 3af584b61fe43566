#include "ssc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <set>
#include <tuple>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ssc/intmath.hpp"
#include "ssc/linpoly.hpp"
#include "ssc/parallel.hpp"

namespace ssc {

unsigned worker_count() {
    if (const char* e = std::getenv("SSCODES_WORKERS")) {
        long v = std::strtol(e, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

namespace {

bool fast_path(const FieldTower& tw) { return tw.p() == 2 && tw.m() == 1; }

struct SplitMix {
    std::uint64_t s;
    explicit SplitMix(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

struct Best {
    unsigned value = ~0u;
    std::uint64_t a = 0, b = 0, c = 0, d = 0; // witness coordinates, lexicographic tiebreak
    void offer(unsigned v, std::uint64_t w, std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        if (v < value || (v == value && std::tie(w, x, y, z) < std::tie(a, b, c, d))) {
            value = v;
            a = w; b = x; c = y; d = z;
        }
    }
    void merge(const Best& o) {
        if (o.value != ~0u) offer(o.value, o.a, o.b, o.c, o.d);
    }
};

// d(U,V) = dimU + dimV - 2 dim(U cap V); dim(U cap V) = dimU + dimV - rank[U;V]
inline unsigned pair_distance_from_rank(unsigned du, unsigned dv, unsigned rank) {
    return 2 * rank - du - dv;
}

std::vector<Subspace> materialize_codewords(const CyclicCode& c) {
    std::vector<Subspace> all;
    for (const auto& o : c.orbits) {
        Orbit ob{o.rep, o.t, o.size};
        for_each_member(ob, [&](const Subspace& s) { all.push_back(s); });
    }
    std::sort(all.begin(), all.end(),
              [](const Subspace& x, const Subspace& y) { return x.rows() < y.rows(); });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

DistanceResult exhaustive_distance(const CyclicCode& c) {
    DistanceResult r;
    r.method = "exhaustive";
    std::vector<Subspace> all = materialize_codewords(c);
    r.enumerated = all.size();
    if (all.size() < 2) {
        r.defined = false;
        r.exact = true;
        return r;
    }
    const FieldTower& tw = *c.tower;
    const std::uint64_t M = all.size();
    Best best;
    std::mutex mu;

    if (fast_path(tw)) {
        const unsigned k = c.k;
        std::vector<std::uint64_t> flat(M * k);
        for (std::uint64_t i = 0; i < M; ++i)
            for (unsigned t = 0; t < k; ++t) flat[i * k + t] = all[i].rows()[t];
        parallel_chunks(M, [&](unsigned, std::uint64_t bgn, std::uint64_t end) {
            Best local;
            std::uint64_t buf[128];
            for (std::uint64_t i = bgn; i < end; ++i) {
                for (std::uint64_t j = i + 1; j < M; ++j) {
                    unsigned cnt = 0;
                    for (unsigned t = 0; t < k; ++t) buf[cnt++] = flat[i * k + t];
                    for (unsigned t = 0; t < k; ++t) buf[cnt++] = flat[j * k + t];
                    unsigned rank = static_cast<unsigned>(gf2row::rank(buf, static_cast<int>(cnt)));
                    local.offer(pair_distance_from_rank(k, k, rank), i, j, 0, 0);
                }
            }
            std::lock_guard<std::mutex> lk(mu);
            best.merge(local);
        });
    } else {
        parallel_chunks(M, [&](unsigned, std::uint64_t bgn, std::uint64_t end) {
            Best local;
            for (std::uint64_t i = bgn; i < end; ++i)
                for (std::uint64_t j = i + 1; j < M; ++j)
                    local.offer(distance(all[i], all[j]), i, j, 0, 0);
            std::lock_guard<std::mutex> lk(mu);
            best.merge(local);
        });
    }
    r.defined = true;
    r.exact = true;
    r.value = best.value;
    r.witness_a = all[best.a].to_string();
    r.witness_b = all[best.b].to_string();
    return r;
}

DistanceResult orbit_reduced_distance(const CyclicCode& c) {
    DistanceResult r;
    r.method = "orbit-reduced";
    const FieldTower& tw = *c.tower;
    const Field& top = tw.top();
    const Elem gamma = tw.gamma();
    std::uint64_t total = 0;
    for (const auto& o : c.orbits) total += o.size;
    r.enumerated = total;
    if (total < 2) {
        r.defined = false;
        r.exact = true;
        return r;
    }
    Best best;
    std::mutex mu;
    const unsigned norb = static_cast<unsigned>(c.orbits.size());
    for (unsigned oi = 0; oi < norb; ++oi) {
        for (unsigned oj = oi; oj < norb; ++oj) {
            const auto& A = c.orbits[oi];
            const auto& B = c.orbits[oj];
            const std::uint64_t s_begin = (oi == oj) ? 1 : 0;
            if (B.size <= s_begin) continue;
            if (fast_path(tw)) {
                const unsigned ka = A.rep.dim(), kb = B.rep.dim();
                std::vector<std::uint64_t> arows(A.rep.rows());
                std::vector<std::uint64_t> brows(B.rep.rows());
                parallel_chunks(B.size - s_begin, [&](unsigned, std::uint64_t bgn, std::uint64_t end) {
                    Best local;
                    Elem alpha = top.pow(gamma, s_begin + bgn);
                    std::vector<std::uint64_t> cur(kb);
                    for (unsigned t = 0; t < kb; ++t) cur[t] = top.mul(brows[t], alpha);
                    std::uint64_t buf[128];
                    for (std::uint64_t s = bgn; s < end; ++s) {
                        unsigned cnt = 0;
                        for (unsigned t = 0; t < ka; ++t) buf[cnt++] = arows[t];
                        for (unsigned t = 0; t < kb; ++t) buf[cnt++] = cur[t];
                        unsigned rank =
                            static_cast<unsigned>(gf2row::rank(buf, static_cast<int>(cnt)));
                        local.offer(pair_distance_from_rank(ka, kb, rank), oi, oj, s_begin + s, 0);
                        if (s + 1 < end)
                            for (unsigned t = 0; t < kb; ++t) cur[t] = top.mul(cur[t], gamma);
                    }
                    std::lock_guard<std::mutex> lk(mu);
                    best.merge(local);
                });
            } else {
                Best local;
                Elem alpha = top.pow(gamma, s_begin);
                for (std::uint64_t s = s_begin; s < B.size; ++s) {
                    Subspace shifted = B.rep.cyclic_shift(alpha);
                    local.offer(distance(A.rep, shifted), oi, oj, s, 0);
                    alpha = top.mul(alpha, gamma);
                }
                std::lock_guard<std::mutex> lk(mu);
                best.merge(local);
            }
        }
    }
    r.defined = true;
    r.exact = true;
    r.value = best.value;
    const auto& A = c.orbits[best.a];
    const auto& B = c.orbits[best.b];
    r.witness_a = A.rep.to_string();
    r.witness_b = B.rep.cyclic_shift(top.pow(gamma, best.c)).to_string();
    return r;
}

DistanceResult sampled_distance(const CyclicCode& c, std::uint64_t samples) {
    DistanceResult r;
    r.method = "sampled";
    r.exact = false;
    const FieldTower& tw = *c.tower;
    const Field& top = tw.top();
    SplitMix rng(0x414e44524549ULL);
    Best best;
    const unsigned norb = static_cast<unsigned>(c.orbits.size());
    std::uint64_t total = 0;
    for (const auto& o : c.orbits) total += o.size;
    r.enumerated = 0;
    if (total < 2) {
        r.defined = false;
        return r;
    }
    for (std::uint64_t it = 0; it < samples; ++it) {
        unsigned oi = static_cast<unsigned>(rng.next() % norb);
        unsigned oj = static_cast<unsigned>(rng.next() % norb);
        std::uint64_t si = rng.next() % c.orbits[oi].size;
        std::uint64_t sj = rng.next() % c.orbits[oj].size;
        if (oi == oj && si == sj) continue;
        Subspace a = c.orbits[oi].rep.cyclic_shift(top.pow(tw.gamma(), si));
        Subspace b = c.orbits[oj].rep.cyclic_shift(top.pow(tw.gamma(), sj));
        if (a == b) continue;
        best.offer(distance(a, b), oi, oj, si, sj);
    }
    if (best.value == ~0u) {
        r.defined = false;
        return r;
    }
    r.defined = true;
    r.value = best.value;
    r.witness_a = c.orbits[best.a].rep.cyclic_shift(top.pow(tw.gamma(), best.c)).to_string();
    r.witness_b = c.orbits[best.b].rep.cyclic_shift(top.pow(tw.gamma(), best.d)).to_string();
    return r;
}

} // namespace

DistanceResult min_distance(const CyclicCode& c, DistanceMode mode, const VerifyOptions& opt) {
    if (c.orbits.empty()) throw std::invalid_argument("min_distance: empty code");
    for (const auto& o : c.orbits) {
        if (o.rep.dim() != c.k)
            throw std::invalid_argument("min_distance: mixed dimensions in code");
    }
    if (mode == DistanceMode::Auto) {
        BigUint sum = c.orbit_size_sum();
        if (!sum.fits_u64()) return sampled_distance(c, opt.sample_pairs);
        std::uint64_t m = sum.to_u64();
        unsigned __int128 pairs = static_cast<unsigned __int128>(m) * (m - 1) / 2;
        if (pairs <= opt.pair_budget) return exhaustive_distance(c);
        if (m <= opt.shift_budget) return orbit_reduced_distance(c);
        return sampled_distance(c, opt.sample_pairs);
    }
    if (mode == DistanceMode::Exhaustive) {
        BigUint sum = c.orbit_size_sum();
        if (!sum.fits_u64() || sum.to_u64() > (std::uint64_t(1) << 22))
            throw std::invalid_argument("min_distance: code too large to materialize exhaustively");
        return exhaustive_distance(c);
    }
    if (mode == DistanceMode::OrbitReduced) return orbit_reduced_distance(c);
    return sampled_distance(c, opt.sample_pairs);
}

namespace {

void add_check(VerificationReport& r, std::string name, bool pass, std::string detail) {
    r.checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

} // namespace

VerificationReport verify_code(const CyclicCode& c, const VerifyOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.construction = c.construction;
    r.field = c.tower->spec_string();
    r.k = c.k;
    r.orbit_count = static_cast<unsigned>(c.orbits.size());
    const FieldTower& tw = *c.tower;
    const Field& top = tw.top();
    const std::uint64_t qn1 = top.size() - 1;

    // (d) stabilizer degree and size of every orbit record
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < c.orbits.size(); ++i) {
            const auto& o = c.orbits[i];
            unsigned t = stabilizer_degree(o.rep);
            std::uint64_t size = qn1 / (ipow_checked(tw.q(), t) - 1);
            if (t != o.t || size != o.size) {
                ok = false;
                detail = "orbit " + std::to_string(i) + ": recorded (t=" + std::to_string(o.t) +
                         ", size=" + std::to_string(o.size) + ") recomputed (t=" +
                         std::to_string(t) + ", size=" + std::to_string(size) + ")";
                break;
            }
        }
        add_check(r, "stabilizer_records", ok, detail);
    }

    // (a) size: per-orbit member dedup at desk scale, pairwise orbit
    // disjointness by canonical least member, sum against the claim
    {
        bool member_ok = true;
        std::uint64_t member_checked = 0;
        for (const auto& o : c.orbits) {
            if (o.size > opt.materialize_cap) continue;
            std::set<std::vector<Elem>> distinct;
            Orbit ob{o.rep, o.t, o.size};
            for_each_member(ob, [&](const Subspace& s) { distinct.insert(s.rows()); });
            if (distinct.size() != o.size) member_ok = false;
            ++member_checked;
        }
        add_check(r, "orbit_members_distinct", member_ok,
                  std::to_string(member_checked) + "/" + std::to_string(c.orbits.size()) +
                      " orbits enumerated");

        bool disjoint_ok = true;
        std::uint64_t total = 0;
        bool total_fits = c.orbit_size_sum().fits_u64();
        if (total_fits) total = c.orbit_size_sum().to_u64();
        std::string detail;
        if (total_fits && total <= opt.shift_budget && c.orbits.size() > 1) {
            std::set<std::vector<Elem>> keys;
            for (const auto& o : c.orbits) {
                Orbit ob{o.rep, o.t, o.size};
                Subspace key = canonical_orbit_key(ob);
                if (!keys.insert(key.rows()).second) disjoint_ok = false;
            }
            detail = "canonical least members pairwise distinct";
        } else if (c.orbits.size() > 1) {
            detail = "disjointness not scanned (over budget)";
        } else {
            detail = "single orbit";
        }
        add_check(r, "orbits_disjoint", disjoint_ok, detail);

        r.verified_size = c.orbit_size_sum();
        bool sum_ok = r.verified_size == c.claimed_size;
        r.size_ok = sum_ok && member_ok && disjoint_ok;
        add_check(r, "size_claim", sum_ok,
                  "sum of orbit sizes " + r.verified_size.to_decimal() + " vs claimed " +
                      c.claimed_size.to_decimal());
    }

    // (b) minimum distance
    {
        r.dist = min_distance(c, opt.mode, opt);
        r.method = r.dist.method;
        if (c.claimed_min_distance < 0 || !r.dist.defined) {
            r.distance_ok = true;
            add_check(r, "distance_claim", true, "no pairs; claim vacuous");
        } else {
            r.distance_ok = r.dist.value >= static_cast<unsigned>(c.claimed_min_distance);
            std::string d = r.dist.method + " min distance " + std::to_string(r.dist.value) +
                            " vs claimed " + std::to_string(c.claimed_min_distance);
            if (!r.dist.exact) d += " (upper bound only)";
            add_check(r, "distance_claim", r.distance_ok, d);
        }
    }

    // (c) cyclic closure: gamma^size fixes each representative, and sampled
    // shifts stay inside the orbit when it is materialized
    {
        bool ok = true;
        SplitMix rng(0x636c6f73757265ULL);
        for (const auto& o : c.orbits) {
            Elem fix = top.pow(tw.gamma(), o.size);
            if (!(o.rep.cyclic_shift(fix) == o.rep)) { ok = false; break; }
            if (o.size <= opt.materialize_cap) {
                std::set<std::vector<Elem>> members;
                Orbit ob{o.rep, o.t, o.size};
                for_each_member(ob, [&](const Subspace& s) { members.insert(s.rows()); });
                for (int t = 0; t < 4; ++t) {
                    Elem alpha = top.pow(tw.gamma(), rng.next() % qn1);
                    if (!members.count(o.rep.cyclic_shift(alpha).rows())) { ok = false; break; }
                }
            } else {
                for (int t = 0; t < 4; ++t) {
                    Elem alpha = top.pow(tw.gamma(), rng.next() % qn1);
                    if (o.rep.cyclic_shift(alpha).dim() != o.rep.dim()) { ok = false; break; }
                }
            }
            if (!ok) break;
        }
        add_check(r, "cyclic_closure", ok, "gamma^size fixes rep; sampled shifts in orbit");
    }

    // (e) subfield structure for C_d style codes
    {
        std::vector<unsigned> ds;
        for (const auto& [key, val] : c.params) {
            if (c.construction == "subfield" && key == "d")
                ds.push_back(static_cast<unsigned>(std::stoul(val)));
            if (c.construction == "union" && key == "divisors") {
                std::istringstream is(val);
                std::string tok;
                while (std::getline(is, tok, ',')) ds.push_back(static_cast<unsigned>(std::stoul(tok)));
            }
        }
        if (!ds.empty()) {
            bool ok = true;
            for (const auto& o : c.orbits) {
                auto member_passes = [&](const Subspace& s) {
                    for (unsigned d : ds)
                        if (cd_membership(s, d)) return true;
                    return false;
                };
                if (!member_passes(o.rep)) { ok = false; break; }
                if (o.size <= opt.materialize_cap && o.size <= 4096) {
                    Orbit ob{o.rep, o.t, o.size};
                    bool all_ok = true;
                    for_each_member(ob, [&](const Subspace& s) {
                        if (!member_passes(s)) all_ok = false;
                    });
                    if (!all_ok) { ok = false; break; }
                }
            }
            add_check(r, "subfield_membership", ok, "polynomial support on multiples of d");
        }
    }

    r.all_pass = true;
    for (const auto& ch : r.checks) r.all_pass = r.all_pass && ch.pass;
    auto t1 = std::chrono::steady_clock::now();
    r.duration_ms =
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    return r;
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["code"] = r.construction;
    j["field"] = r.field;
    j["k"] = r.k;
    j["size_ok"] = r.size_ok;
    j["distance_ok"] = r.distance_ok;
    if (r.dist.defined) j["distance_value"] = r.dist.value;
    else j["distance_value"] = nullptr;
    j["distance_exact"] = r.dist.exact;
    j["method"] = r.method;
    j["orbits"] = r.orbit_count;
    j["verified_size"] = r.verified_size.to_decimal();
    j["duration_ms"] = r.duration_ms;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["all_pass"] = r.all_pass;
    if (r.dist.defined) {
        j["witness_a"] = r.dist.witness_a;
        j["witness_b"] = r.dist.witness_b;
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "code: " << r.construction << "  field: " << r.field << "  k=" << r.k << "\n";
    os << "verified size: " << r.verified_size.to_decimal()
       << (r.size_ok ? "  [ok]" : "  [MISMATCH]") << "\n";
    os << "min distance: ";
    if (r.dist.defined) {
        os << r.dist.value << " (" << r.method << (r.dist.exact ? ", exact" : ", upper bound")
           << ")";
    } else {
        os << "inf (fewer than two codewords)";
    }
    os << (r.distance_ok ? "  [ok]" : "  [VIOLATION]") << "\n";
    for (const auto& c : r.checks)
        os << (c.pass ? "  pass  " : "  FAIL  ") << c.name
           << (c.detail.empty() ? "" : "  - " + c.detail) << "\n";
    os << (r.all_pass ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "  (" << r.duration_ms
       << " ms)\n";
    return os.str();
}

} // namespace ssc
