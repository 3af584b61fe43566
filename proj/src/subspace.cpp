#include "ssc/subspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ssc/intmath.hpp"

namespace ssc {

namespace gf2row {

int rank(std::uint64_t* rows, int cnt) {
    std::uint64_t basis[64] = {0};
    int r = 0;
    for (int i = 0; i < cnt; ++i) {
        std::uint64_t v = rows[i];
        while (v) {
            int b = 63 - __builtin_clzll(v);
            if (!basis[b]) {
                basis[b] = v;
                ++r;
                break;
            }
            v ^= basis[b];
        }
    }
    return r;
}

void rref(std::uint64_t* rows, int& cnt) {
    int r = 0;
    for (int i = 0; i < cnt; ++i) {
        std::uint64_t v = rows[i];
        for (int j = 0; j < r; ++j) {
            std::uint64_t piv = rows[j] & (~rows[j] + 1);
            if (v & piv) v ^= rows[j];
        }
        if (!v) continue;
        std::uint64_t piv = v & (~v + 1);
        for (int j = 0; j < r; ++j)
            if (rows[j] & piv) rows[j] ^= v;
        rows[r++] = v;
    }
    std::sort(rows, rows + r, [](std::uint64_t a, std::uint64_t b) {
        return (a & (~a + 1)) < (b & (~b + 1));
    });
    cnt = r;
}

} // namespace gf2row

namespace {

bool fast_path(const FieldTower& tw) { return tw.p() == 2 && tw.m() == 1; }

// Generic RREF over F_q on coordinate vectors (length n, middle-field
// entries). Returns rows sorted by pivot column; mutually reduced.
struct FqRref {
    const Field& Fq;
    unsigned n;
    std::vector<std::vector<Elem>> rows; // established, RREF
    std::vector<unsigned> pivots;

    FqRref(const Field& f, unsigned cols) : Fq(f), n(cols) {}

    void insert(std::vector<Elem> v) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            Elem c = v[pivots[j]];
            if (c == 0) continue;
            for (unsigned t = 0; t < n; ++t) v[t] = Fq.sub(v[t], Fq.mul(c, rows[j][t]));
        }
        unsigned piv = n;
        for (unsigned t = 0; t < n; ++t)
            if (v[t] != 0) { piv = t; break; }
        if (piv == n) return;
        Elem ic = Fq.inv(v[piv]);
        for (unsigned t = 0; t < n; ++t) v[t] = Fq.mul(v[t], ic);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            Elem c = rows[j][piv];
            if (c == 0) continue;
            for (unsigned t = 0; t < n; ++t) rows[j][t] = Fq.sub(rows[j][t], Fq.mul(c, v[t]));
        }
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < piv) ++pos;
        rows.insert(rows.begin() + pos, std::move(v));
        pivots.insert(pivots.begin() + pos, piv);
    }
};

} // namespace

Subspace Subspace::zero(const FieldTower& tw) { return Subspace(tw, {}); }

Subspace Subspace::from_generators(const FieldTower& tw, std::span<const Elem> gens) {
    if (fast_path(tw)) {
        std::vector<std::uint64_t> work(gens.begin(), gens.end());
        int cnt = static_cast<int>(work.size());
        gf2row::rref(work.data(), cnt);
        work.resize(cnt);
        return Subspace(tw, std::move(work));
    }
    FqRref r(tw.mid(), tw.n());
    std::vector<Elem> coords(tw.n());
    for (Elem g : gens) {
        tw.fq_coords(g, coords.data());
        r.insert(coords);
    }
    std::vector<Elem> rows;
    rows.reserve(r.rows.size());
    for (const auto& v : r.rows) rows.push_back(tw.from_fq_coords(v.data()));
    return Subspace(tw, std::move(rows));
}

bool Subspace::contains(Elem a) const {
    if (fast_path(*tw_)) {
        std::uint64_t v = a;
        for (std::uint64_t row : rows_) {
            std::uint64_t piv = row & (~row + 1);
            if (v & piv) v ^= row;
        }
        return v == 0;
    }
    const Field& Fq = tw_->mid();
    const unsigned n = tw_->n();
    std::vector<Elem> v(n), rc(n);
    tw_->fq_coords(a, v.data());
    for (Elem row : rows_) {
        tw_->fq_coords(row, rc.data());
        unsigned piv = n;
        for (unsigned t = 0; t < n; ++t)
            if (rc[t] != 0) { piv = t; break; }
        if (piv == n) continue;
        Elem c = v[piv];
        if (c == 0) continue;
        for (unsigned t = 0; t < n; ++t) v[t] = Fq.sub(v[t], Fq.mul(c, rc[t]));
    }
    for (unsigned t = 0; t < n; ++t)
        if (v[t] != 0) return false;
    return true;
}

Subspace Subspace::cyclic_shift(Elem alpha) const {
    if (alpha == 0) throw std::invalid_argument("cyclic_shift: alpha must be nonzero");
    std::vector<Elem> gens(rows_);
    for (auto& g : gens) g = tw_->top().mul(g, alpha);
    return from_generators(*tw_, gens);
}

Subspace Subspace::frobenius_shift(std::uint64_t i) const {
    std::vector<Elem> gens(rows_);
    for (auto& g : gens) g = tw_->frobenius(g, i);
    return from_generators(*tw_, gens);
}

std::vector<Elem> Subspace::all_elements() const {
    std::vector<Elem> res{0};
    const std::uint64_t q = tw_->q();
    for (Elem row : rows_) {
        std::vector<Elem> next;
        next.reserve(res.size() * q);
        for (Elem s = 0; s < q; ++s) {
            Elem sr = tw_->top().mul(tw_->embed_mid(s), row);
            for (Elem e : res) next.push_back(tw_->top().add(e, sr));
        }
        res = std::move(next);
    }
    return res;
}

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << "k=" << dim() << ";rows=";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << '|';
        os << tw_->elem_string(rows_[i]);
    }
    return os.str();
}

Subspace Subspace::parse(const FieldTower& tw, const std::string& s) {
    auto kpos = s.find("k=");
    auto rpos = s.find(";rows=");
    if (kpos != 0 || rpos == std::string::npos)
        throw std::invalid_argument("Subspace::parse: bad format");
    unsigned k = static_cast<unsigned>(std::stoul(s.substr(2, rpos - 2)));
    std::string body = s.substr(rpos + 6);
    std::vector<Elem> gens;
    if (!body.empty()) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, '|')) gens.push_back(tw.parse_elem(tok));
    }
    Subspace r = from_generators(tw, gens);
    if (r.dim() != k) throw std::invalid_argument("Subspace::parse: rows not independent");
    return r;
}

bool elem_serial_less(const FieldTower& tw, Elem a, Elem b) {
    if (a == b) return false;
    if (tw.p() == 2) {
        std::uint64_t d = a ^ b;
        std::uint64_t low = d & (~d + 1);
        return (a & low) == 0;
    }
    const std::uint64_t p = tw.p();
    while (a || b) {
        std::uint64_t da = a % p, db = b % p;
        if (da != db) return da < db;
        a /= p;
        b /= p;
    }
    return false;
}

bool Subspace::serial_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (unsigned i = 0; i < a.dim(); ++i) {
        if (a.rows_[i] != b.rows_[i])
            return elem_serial_less(*a.tw_, a.rows_[i], b.rows_[i]);
    }
    return false;
}

unsigned intersect_dim(const Subspace& u, const Subspace& v) {
    if (!u.tower().same_as(v.tower()))
        throw std::invalid_argument("intersect_dim: tower mismatch");
    const FieldTower& tw = u.tower();
    unsigned joint;
    if (fast_path(tw)) {
        std::uint64_t buf[128];
        int cnt = 0;
        for (Elem r : u.rows()) buf[cnt++] = r;
        for (Elem r : v.rows()) buf[cnt++] = r;
        joint = static_cast<unsigned>(gf2row::rank(buf, cnt));
    } else {
        FqRref r(tw.mid(), tw.n());
        std::vector<Elem> coords(tw.n());
        for (Elem g : u.rows()) {
            tw.fq_coords(g, coords.data());
            r.insert(coords);
        }
        for (Elem g : v.rows()) {
            tw.fq_coords(g, coords.data());
            r.insert(coords);
        }
        joint = static_cast<unsigned>(r.rows.size());
    }
    return u.dim() + v.dim() - joint;
}

unsigned distance(const Subspace& u, const Subspace& v) {
    return u.dim() + v.dim() - 2 * intersect_dim(u, v);
}

namespace {

// next k-combination of {0..n-1} in lexicographic order; false when done
bool next_combination(std::vector<unsigned>& c, unsigned n) {
    const unsigned k = static_cast<unsigned>(c.size());
    for (unsigned i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (unsigned j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

void enumerate_grassmannian(const FieldTower& tw, unsigned k,
                            const std::function<void(const Subspace&)>& fn) {
    const unsigned n = tw.n();
    if (k > n) throw std::invalid_argument("enumerate_grassmannian: k > n");
    if (k == 0) {
        fn(Subspace::zero(tw));
        return;
    }
    const std::uint64_t q = tw.q();
    std::vector<unsigned> piv(k);
    for (unsigned i = 0; i < k; ++i) piv[i] = i;
    do {
        std::vector<bool> is_piv(n, false);
        for (unsigned c : piv) is_piv[c] = true;
        std::vector<std::pair<unsigned, unsigned>> free_pos;
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) free_pos.push_back({i, j});

        std::vector<Elem> vals(free_pos.size(), 0);
        std::vector<std::vector<Elem>> mat(k, std::vector<Elem>(n, 0));
        for (unsigned i = 0; i < k; ++i) mat[i][piv[i]] = 1;
        for (;;) {
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                mat[free_pos[t].first][free_pos[t].second] = vals[t];
            std::vector<Elem> gens(k);
            for (unsigned i = 0; i < k; ++i) gens[i] = tw.from_fq_coords(mat[i].data());
            fn(Subspace::from_generators(tw, gens));
            std::size_t t = 0;
            while (t < vals.size() && ++vals[t] == q) vals[t++] = 0;
            if (t == vals.size()) break;
        }
    } while (next_combination(piv, n));
}

void enumerate_subfield_grassmannian(const FieldTower& tw, unsigned d, unsigned kk,
                                     const std::function<void(const Subspace&)>& fn) {
    if (d == 0 || tw.n() % d != 0)
        throw std::invalid_argument("enumerate_subfield_grassmannian: d must divide n");
    const unsigned nn = tw.n() / d;
    if (kk > nn) throw std::invalid_argument("enumerate_subfield_grassmannian: k/d > n/d");
    const std::vector<Elem> sub = tw.subfield_elements(d);
    const Elem delta = tw.subfield_generator(d);
    const Field& top = tw.top();

    std::vector<Elem> xpow(nn);
    for (unsigned j = 0; j < nn; ++j) xpow[j] = ipow_checked(tw.p(), j);
    std::vector<Elem> dpow(d);
    dpow[0] = 1;
    for (unsigned t = 1; t < d; ++t) dpow[t] = top.mul(dpow[t - 1], delta);

    if (kk == 0) {
        fn(Subspace::zero(tw));
        return;
    }
    std::vector<unsigned> piv(kk);
    for (unsigned i = 0; i < kk; ++i) piv[i] = i;
    do {
        std::vector<bool> is_piv(nn, false);
        for (unsigned c : piv) is_piv[c] = true;
        std::vector<std::pair<unsigned, unsigned>> free_pos;
        for (unsigned i = 0; i < kk; ++i)
            for (unsigned j = piv[i] + 1; j < nn; ++j)
                if (!is_piv[j]) free_pos.push_back({i, j});

        std::vector<std::size_t> vals(free_pos.size(), 0);
        std::vector<std::vector<Elem>> mat(kk, std::vector<Elem>(nn, 0));
        for (unsigned i = 0; i < kk; ++i) mat[i][piv[i]] = 1;
        for (;;) {
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                mat[free_pos[t].first][free_pos[t].second] = sub[vals[t]];
            std::vector<Elem> gens;
            gens.reserve(std::size_t(kk) * d);
            for (unsigned i = 0; i < kk; ++i) {
                Elem row = 0;
                for (unsigned j = 0; j < nn; ++j)
                    if (mat[i][j]) row = top.add(row, top.mul(mat[i][j], xpow[j]));
                for (unsigned t = 0; t < d; ++t) gens.push_back(top.mul(dpow[t], row));
            }
            Subspace s = Subspace::from_generators(tw, gens);
            fn(s);
            std::size_t t = 0;
            while (t < vals.size() && ++vals[t] == sub.size()) vals[t++] = 0;
            if (t == vals.size()) break;
        }
    } while (next_combination(piv, nn));
}

} // namespace ssc
