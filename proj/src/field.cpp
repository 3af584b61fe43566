#include "ssc/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "ssc/intmath.hpp"
#include "ssc/kernels.hpp"

namespace ssc {

namespace {

// x^{2d} div f over GF(2), f given as a (d+1)-bit mask
std::uint64_t gf2_barrett_mu(std::uint64_t f, unsigned d) {
    unsigned __int128 r = static_cast<unsigned __int128>(1) << (2 * d);
    std::uint64_t q = 0;
    for (int b = static_cast<int>(d); b >= 0; --b) {
        if ((r >> (b + d)) & 1) {
            q |= std::uint64_t(1) << b;
            r ^= static_cast<unsigned __int128>(f) << b;
        }
    }
    return q;
}

} // namespace

Field::Field(std::uint64_t p, std::vector<std::uint64_t> modulus) : p_(p), mod_(std::move(modulus)) {
    if (!is_prime_u64(p_)) throw std::invalid_argument("Field: characteristic must be prime");
    if (mod_.size() < 2) throw std::invalid_argument("Field: modulus must have degree >= 1");
    deg_ = static_cast<unsigned>(mod_.size() - 1);
    for (auto& c : mod_) {
        if (c >= p_) throw std::invalid_argument("Field: modulus coefficient out of range");
    }
    if (mod_.back() != 1) throw std::invalid_argument("Field: modulus must be monic");
    size_ = ipow_checked(p_, deg_);
    if (size_ > (std::uint64_t(1) << 62))
        throw std::overflow_error("Field: p^deg exceeds the 62-bit element encoding");
    grp_factors_ = factor_u64(size_ - 1);
    if (p_ == 2) {
        for (unsigned i = 0; i <= deg_; ++i)
            if (mod_[i]) mod_mask_ |= std::uint64_t(1) << i;
        barrett_mu_ = gf2_barrett_mu(mod_mask_, deg_);
        use_clmul_ = kernels::caps().clmul;
    }
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    Elem r = 0, mul = 1;
    while (a || b) {
        std::uint64_t s = (a % p_ + b % p_) % p_;
        r += s * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    Elem r = 0, mul = 1;
    while (a) {
        std::uint64_t d = a % p_;
        r += (d ? p_ - d : 0) * mul;
        a /= p_;
        mul *= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return p_ == 2 ? a ^ b : add(a, neg(b)); }

Elem Field::mul_gf2_scalar(Elem a, Elem b) const {
    Elem r = 0;
    const std::uint64_t top = std::uint64_t(1) << (deg_ - 1);
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        bool hi = a & top;
        a <<= 1;
        if (hi) a ^= mod_mask_;
    }
    return r;
}

Elem Field::mul_gf2_barrett(Elem a, Elem b) const {
    using kernels::U128;
    U128 c = kernels::clmul64(a, b);
    const unsigned d = deg_;
    // Barrett: qhat = ((c >> d) * mu) >> d, r = c - qhat*f
    std::uint64_t chi = (d < 64) ? ((c.lo >> d) | (d ? (c.hi << (64 - d)) : 0)) : c.hi;
    U128 t = kernels::clmul64(chi, barrett_mu_);
    std::uint64_t qhat = (t.lo >> d) | (d ? (t.hi << (64 - d)) : 0);
    U128 s = kernels::clmul64(qhat, mod_mask_);
    std::uint64_t lo = c.lo ^ s.lo;
    std::uint64_t hi = c.hi ^ s.hi;
    // fix-up in case the quotient estimate was short
    while (hi || (lo >> d)) {
        int degr = hi ? 64 + (63 - __builtin_clzll(hi)) : (63 - __builtin_clzll(lo));
        int sh = degr - static_cast<int>(d);
        if (sh < 64) lo ^= mod_mask_ << sh;
        if (sh > 0) hi ^= mod_mask_ >> (64 - sh);
        if (sh >= 64) hi ^= mod_mask_ << (sh - 64);
    }
    return lo;
}

Elem Field::mul_generic(Elem a, Elem b) const {
    std::array<std::uint64_t, 128> buf{};
    std::array<std::uint64_t, 64> da{}, db{};
    unsigned na = 0, nb = 0;
    while (a) { da[na++] = a % p_; a /= p_; }
    while (b) { db[nb++] = b % p_; b /= p_; }
    if (na == 0 || nb == 0) return 0;
    for (unsigned i = 0; i < na; ++i)
        for (unsigned j = 0; j < nb; ++j) buf[i + j] += da[i] * db[j];
    for (unsigned i = na + nb - 1; i-- > deg_;) {
        std::uint64_t c = buf[i] % p_;
        if (c == 0) continue;
        // subtract c * modulus * x^{i-deg}
        for (unsigned j = 0; j <= deg_; ++j) {
            std::uint64_t sub = (c * mod_[j]) % p_;
            buf[i - deg_ + j] += p_ * p_ - sub; // shifted by a multiple of p
        }
    }
    Elem r = 0;
    std::uint64_t mul = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        r += (buf[i] % p_) * mul;
        mul *= p_;
    }
    return r;
}

Elem Field::mul(Elem a, Elem b) const {
    if (p_ == 2) return use_clmul_ ? mul_gf2_barrett(a, b) : mul_gf2_scalar(a, b);
    return mul_generic(a, b);
}

Elem Field::mul_reference(Elem a, Elem b) const {
    return p_ == 2 ? mul_gf2_scalar(a, b) : mul_generic(a, b);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("Field::inv: zero has no inverse");
    return pow(a, size_ - 2);
}

std::uint64_t Field::order(Elem a) const {
    if (a == 0) throw std::invalid_argument("Field::order: undefined for zero");
    std::uint64_t e = size_ - 1;
    for (auto [prime, exp] : grp_factors_) {
        for (int i = 0; i < exp; ++i) {
            if (pow(a, e / prime) == 1) e /= prime;
            else break;
        }
    }
    return e;
}

std::vector<std::uint64_t> Field::digits(Elem a) const {
    std::vector<std::uint64_t> d(deg_, 0);
    for (unsigned i = 0; i < deg_ && a; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem Field::from_digits(const std::vector<std::uint64_t>& d) const {
    Elem r = 0;
    std::uint64_t mul = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        std::uint64_t c = i < d.size() ? d[i] : 0;
        if (c >= p_) throw std::invalid_argument("Field::from_digits: digit out of range");
        r += c * mul;
        mul *= p_;
    }
    return r;
}

std::string Field::elem_string(Elem a) const {
    std::ostringstream os;
    auto d = digits(a);
    for (unsigned i = 0; i < deg_; ++i) {
        if (i) os << ',';
        os << d[i];
    }
    return os.str();
}

Elem Field::parse_elem(const std::string& s) const {
    std::vector<std::uint64_t> d;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) d.push_back(std::stoull(tok));
    if (d.size() != deg_) throw std::invalid_argument("Field::parse_elem: wrong digit count");
    return from_digits(d);
}

Elem find_primitive(const Field& F) {
    const std::uint64_t g = F.size() - 1;
    for (Elem a = 1; a < F.size(); ++a) {
        bool ok = true;
        for (auto [prime, exp] : F.group_factors()) {
            (void)exp;
            if (F.pow(a, g / prime) == 1) { ok = false; break; }
        }
        if (ok) return a;
    }
    throw std::logic_error("find_primitive: no generator found"); // unreachable
}

// ---------------------------------------------------------------------------
// Poly

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(const Field& F, std::vector<Elem> coeffs) : F_(&F), c_(std::move(coeffs)) {
    normalize();
}

Poly Poly::x(const Field& F) { return Poly(F, {0, 1}); }
Poly Poly::one(const Field& F) { return Poly(F, {1}); }

Poly Poly::monomial(const Field& F, unsigned d, Elem c) {
    std::vector<Elem> v(d + 1, 0);
    v[d] = c;
    return Poly(F, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = F_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return Poly(*F_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = F_->sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return Poly(*F_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(*F_);
    std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j]) v[i + j] = F_->add(v[i + j], F_->mul(c_[i], o.c_[j]));
    }
    return Poly(*F_, std::move(v));
}

Poly Poly::scaled(Elem s) const {
    std::vector<Elem> v(c_);
    for (auto& e : v) e = F_->mul(e, s);
    return Poly(*F_, std::move(v));
}

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(F_->inv(lead()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero");
    const Field& F = *num.F_;
    std::vector<Elem> r(num.c_);
    int dd = den.deg();
    if (num.deg() < dd) return {Poly(F), num};
    std::vector<Elem> q(num.deg() - dd + 1, 0);
    Elem ilead = F.inv(den.lead());
    for (int i = num.deg(); i >= dd; --i) {
        Elem c = r[i];
        if (c == 0) continue;
        Elem f = F.mul(c, ilead);
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j)
            r[i - dd + j] = F.sub(r[i - dd + j], F.mul(f, den.c_[j]));
    }
    return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Elem Poly::eval(Elem a) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, a), c_[i]);
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() < 2) return Poly(*F_);
    std::vector<Elem> v(c_.size() - 1, 0);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        std::uint64_t k = i % F_->p();
        Elem s = 0;
        for (std::uint64_t t = 0; t < k; ++t) s = F_->add(s, c_[i]);
        v[i - 1] = s;
    }
    return Poly(*F_, std::move(v));
}

Poly Poly::powmod(std::uint64_t e, const Poly& f) const {
    Poly r = Poly::one(*F_).mod(f);
    Poly b = this->mod(f);
    while (e) {
        if (e & 1) r = (r * b).mod(f);
        b = (b * b).mod(f);
        e >>= 1;
    }
    return r;
}

Poly gcd_monic(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------------------
// Factorization

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f0) {
    const Field& F = f0.field();
    const std::uint64_t p = F.p();
    Poly f = f0.monic();
    std::vector<std::pair<Poly, unsigned>> out;
    if (f.deg() < 1) return out;

    Poly fp = f.derivative();
    if (fp.is_zero()) {
        // f = g(x^p): take p-th root of coefficients and recurse
        std::vector<Elem> g((f.deg() / p) + 1, 0);
        const std::uint64_t root_exp = ipow_checked(p, F.deg() > 0 ? F.deg() - 1 : 0);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = F.pow(f.coeff(static_cast<unsigned>(i * p)), root_exp);
        for (auto& [part, mult] : squarefree_decomposition(Poly(F, std::move(g))))
            out.push_back({part, mult * static_cast<unsigned>(p)});
        return out;
    }

    Poly c = gcd_monic(f, fp);
    Poly w = Poly::divmod(f, c).first;
    unsigned i = 1;
    while (w.deg() > 0) {
        Poly y = gcd_monic(w, c);
        Poly z = Poly::divmod(w, y).first;
        if (z.deg() > 0) out.push_back({z, i});
        w = std::move(y);
        c = Poly::divmod(c, w).first;
        ++i;
    }
    if (c.deg() > 0) {
        // c is a p-th power here; the recursion's zero-derivative branch
        // takes the root and scales the multiplicities
        for (auto& [part, mult] : squarefree_decomposition(c))
            out.push_back({part, mult});
    }
    return out;
}

std::vector<std::pair<unsigned, Poly>> distinct_degree_factorization(const Poly& f0) {
    const Field& F = f0.field();
    Poly fstar = f0.monic();
    std::vector<std::pair<unsigned, Poly>> out;
    Poly h = Poly::x(F).mod(fstar);
    unsigned i = 1;
    while (fstar.deg() >= static_cast<int>(2 * i)) {
        h = h.powmod(F.size(), fstar);
        Poly g = gcd_monic(fstar, h - Poly::x(F));
        if (g.deg() > 0) {
            out.push_back({i, g});
            fstar = Poly::divmod(fstar, g).first;
            h = h.mod(fstar);
        }
        ++i;
    }
    if (fstar.deg() > 0) out.push_back({static_cast<unsigned>(fstar.deg()), fstar});
    return out;
}

std::map<unsigned, unsigned> factor_degrees(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_degrees: zero polynomial");
    if (f.deg() < 1) throw std::invalid_argument("factor_degrees: constant polynomial");
    const Field& F = f.field();
    std::map<unsigned, unsigned> counts;
    Poly rebuilt = Poly::one(F);
    for (auto& [part, mult] : squarefree_decomposition(f)) {
        for (auto& [d, prod] : distinct_degree_factorization(part)) {
            counts[d] += mult * static_cast<unsigned>(prod.deg()) / d;
        }
        for (unsigned t = 0; t < mult; ++t) rebuilt = rebuilt * part;
    }
    // round-trip guard: the parts must multiply back to f
    if (!(rebuilt == f.monic()))
        throw std::logic_error("factor_degrees: reconstruction mismatch");
    unsigned total = 0;
    for (auto [d, c] : counts) total += d * c;
    if (total != static_cast<unsigned>(f.deg()))
        throw std::logic_error("factor_degrees: degree sum mismatch");
    return counts;
}

unsigned splitting_field_degree(const Poly& f) {
    auto degs = factor_degrees(f);
    std::uint64_t l = 1;
    for (auto [d, c] : degs) {
        (void)c;
        l = lcm_u64(l, d);
    }
    return static_cast<unsigned>(l);
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.deg() < 1)
        throw std::invalid_argument("is_irreducible: need degree >= 1");
    if (f.deg() == 1) return true;
    Poly fp = f.derivative();
    if (fp.is_zero()) return false; // p-th power
    if (gcd_monic(f, fp).deg() > 0) return false;
    auto ddf = distinct_degree_factorization(f.monic());
    return ddf.size() == 1 && ddf[0].first == static_cast<unsigned>(f.deg());
}

namespace {

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

// f: monic product of distinct linear factors, deg >= 1
void split_linear(const Poly& f, std::vector<Elem>& roots, SplitMix& rng) {
    const Field& F = f.field();
    if (f.deg() == 1) {
        roots.push_back(F.neg(f.coeff(0)));
        return;
    }
    for (;;) {
        Poly w(F);
        if (F.p() == 2) {
            // trace map of a random multiple of x
            Elem a = rng.next() % F.size();
            if (a == 0) continue;
            Poly h = Poly(F, {0, a}).mod(f);
            Poly acc = h;
            for (unsigned i = 1; i < F.deg(); ++i) {
                h = (h * h).mod(f);
                acc = acc + h;
            }
            w = gcd_monic(f, acc);
        } else {
            Elem a = rng.next() % F.size();
            Poly h = Poly(F, {a, 1}).powmod((F.size() - 1) / 2, f);
            w = gcd_monic(f, h - Poly::one(F));
        }
        if (w.deg() > 0 && w.deg() < f.deg()) {
            split_linear(w, roots, rng);
            split_linear(Poly::divmod(f, w).first, roots, rng);
            return;
        }
    }
}

} // namespace

std::vector<Elem> find_roots(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("find_roots: zero polynomial");
    const Field& F = f.field();
    // product of the distinct linear factors of f
    Poly xq = Poly::x(F).powmod(F.size(), f);
    Poly lin = gcd_monic(f, xq - Poly::x(F));
    std::vector<Elem> roots;
    if (lin.deg() >= 1) {
        SplitMix rng(0x5b5ad4f1e0a7c391ULL);
        split_linear(lin, roots, rng);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace ssc
