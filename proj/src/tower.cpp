#include "ssc/tower.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ssc/gf2poly.hpp"
#include "ssc/intmath.hpp"

namespace ssc {

namespace {

// Gauss-Jordan inverse of a square matrix over F_p; throws if singular.
std::vector<std::vector<std::uint64_t>> invert_mod_p(
    std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    const std::size_t n = a.size();
    std::vector<std::vector<std::uint64_t>> inv(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    auto inv_mod = [p](std::uint64_t v) { return powmod_u64(v, p - 2, p); };
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("invert_mod_p: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        std::uint64_t f = inv_mod(a[col][col]);
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = mulmod_u64(a[col][j], f, p);
            inv[col][j] = mulmod_u64(inv[col][j], f, p);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            std::uint64_t c = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = (a[r][j] + p * p - mulmod_u64(c, a[col][j], p)) % p;
                inv[r][j] = (inv[r][j] + p * p - mulmod_u64(c, inv[col][j], p)) % p;
            }
        }
    }
    return inv;
}

std::vector<std::uint64_t> parse_coeff_list(const std::string& s) {
    std::vector<std::uint64_t> v;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) v.push_back(std::stoull(tok));
    return v;
}

std::string coeff_list_string(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

} // namespace

bool FieldTower::modulus_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& mod) {
    if (mod.size() == 2) return true;
    if (p == 2) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < mod.size(); ++i)
            if (mod[i]) mask |= std::uint64_t(1) << i;
        return gf2_is_irreducible(Gf2Poly::from_coeff_mask(mask));
    }
    Field fp(p, {0, 1});
    std::vector<Elem> coeffs(mod.begin(), mod.end());
    return is_irreducible(Poly(fp, std::move(coeffs)));
}

std::vector<std::uint64_t> FieldTower::default_modulus(std::uint64_t p, unsigned deg) {
    // smallest monic irreducible of the given degree, candidates ordered by
    // the base-p integer encoding of the non-leading coefficients
    const std::uint64_t count = ipow_checked(p, deg);
    for (std::uint64_t v = 0; v < count; ++v) {
        std::vector<std::uint64_t> mod(deg + 1, 0);
        std::uint64_t t = v;
        for (unsigned i = 0; i < deg; ++i) {
            mod[i] = t % p;
            t /= p;
        }
        mod[deg] = 1;
        if (modulus_irreducible(p, mod)) return mod;
    }
    throw std::logic_error("default_modulus: none found"); // unreachable
}

FieldTower::FieldTower(std::uint64_t p, unsigned m, unsigned n,
                       std::vector<std::uint64_t> mid_mod, std::vector<std::uint64_t> top_mod)
    : p_(p), m_(m), n_(n),
      q_(ipow_checked(p, m)),
      base_(p, {0, 1}),
      mid_(p, std::move(mid_mod)),
      top_(p, std::move(top_mod)) {
    // embedding of the middle field: smallest root of the middle modulus
    if (m_ == 1) {
        mid_root_pows_ = {1};
    } else {
        std::vector<Elem> lifted(mid_.modulus().begin(), mid_.modulus().end());
        Poly g(top_, std::move(lifted));
        auto roots = find_roots(g);
        if (roots.size() != m_) throw std::logic_error("FieldTower: middle modulus root count");
        Elem r = roots.front();
        mid_root_pows_.resize(m_);
        mid_root_pows_[0] = 1;
        for (unsigned i = 1; i < m_; ++i) mid_root_pows_[i] = top_.mul(mid_root_pows_[i - 1], r);
    }
    gamma_ = find_primitive(top_);

    if (m_ > 1) {
        // product basis iota(y)^i x^j in F_p-coordinates, columns indexed j*m+i
        const unsigned mn = m_ * n_;
        std::vector<std::vector<std::uint64_t>> basis(mn, std::vector<std::uint64_t>(mn, 0));
        for (unsigned j = 0; j < n_; ++j) {
            const Elem xj = ipow_checked(p_, j); // power-basis element x^j
            for (unsigned i = 0; i < m_; ++i) {
                Elem b = top_.mul(mid_root_pows_[i], xj);
                auto d = top_.digits(b);
                for (unsigned row = 0; row < mn; ++row) basis[row][j * m_ + i] = d[row];
            }
        }
        coord_inv_ = invert_mod_p(std::move(basis), p_);
    }
}

std::shared_ptr<const FieldTower> FieldTower::build(
    std::uint64_t p, unsigned m, unsigned n,
    std::optional<std::vector<std::uint64_t>> mid_modulus,
    std::optional<std::vector<std::uint64_t>> top_modulus) {
    if (!is_prime_u64(p)) throw std::invalid_argument("build_tower: p must be prime");
    if (m < 1 || n < 1) throw std::invalid_argument("build_tower: m, n must be >= 1");
    ipow_checked(p, m * n); // element encoding bound, throws if too large
    if (ipow_checked(p, m * n) > (std::uint64_t(1) << 62))
        throw std::overflow_error("build_tower: p^(m*n) exceeds the element encoding");

    std::vector<std::uint64_t> mid = mid_modulus ? *mid_modulus : default_modulus(p, m);
    std::vector<std::uint64_t> top = top_modulus ? *top_modulus : default_modulus(p, m * n);
    if (mid.size() != m + 1)
        throw std::invalid_argument("build_tower: middle modulus has wrong degree");
    if (top.size() != std::size_t(m) * n + 1)
        throw std::invalid_argument("build_tower: top modulus has wrong degree");
    if (mid_modulus && !modulus_irreducible(p, mid))
        throw std::invalid_argument("build_tower: middle modulus is reducible");
    if (top_modulus && !modulus_irreducible(p, top))
        throw std::invalid_argument("build_tower: top modulus is reducible");

    return std::shared_ptr<const FieldTower>(
        new FieldTower(p, m, n, std::move(mid), std::move(top)));
}

Elem FieldTower::embed_mid(Elem a) const {
    if (m_ == 1) return a;
    Elem r = 0;
    auto d = mid_.digits(a);
    for (unsigned i = 0; i < m_; ++i) {
        if (d[i] == 0) continue;
        Elem term = top_.mul(mid_root_pows_[i], top_.from_int(d[i]));
        r = top_.add(r, term);
    }
    return r;
}

Elem FieldTower::frobenius(Elem a, std::uint64_t i) const {
    i %= n_;
    Elem r = a;
    for (std::uint64_t t = 0; t < i; ++t) r = top_.pow(r, q_);
    return r;
}

bool FieldTower::subfield_member(Elem a, unsigned d) const {
    if (d == 0 || n_ % d != 0)
        throw std::invalid_argument("subfield_member: d must divide n");
    return frobenius(a, d) == a;
}

std::uint64_t FieldTower::element_order(Elem a) const {
    if (a == 0) throw std::invalid_argument("element_order: zero element");
    return top_.order(a);
}

void FieldTower::fq_coords(Elem a, Elem* out) const {
    if (m_ == 1) {
        for (unsigned j = 0; j < n_; ++j) {
            out[j] = a % p_;
            a /= p_;
        }
        return;
    }
    const unsigned mn = m_ * n_;
    auto d = top_.digits(a);
    for (unsigned j = 0; j < n_; ++j) {
        std::vector<std::uint64_t> md(m_, 0);
        for (unsigned i = 0; i < m_; ++i) {
            std::uint64_t acc = 0;
            const auto& row = coord_inv_[j * m_ + i];
            for (unsigned t = 0; t < mn; ++t) acc = (acc + mulmod_u64(row[t], d[t], p_)) % p_;
            md[i] = acc;
        }
        out[j] = mid_.from_digits(md);
    }
}

Elem FieldTower::from_fq_coords(const Elem* c) const {
    if (m_ == 1) {
        Elem r = 0;
        std::uint64_t mul = 1;
        for (unsigned j = 0; j < n_; ++j) {
            r += (c[j] % p_) * mul;
            mul *= p_;
        }
        return r;
    }
    Elem r = 0;
    for (unsigned j = 0; j < n_; ++j) {
        if (c[j] == 0) continue;
        Elem xj = ipow_checked(p_, j);
        r = top_.add(r, top_.mul(embed_mid(c[j]), xj));
    }
    return r;
}

Elem FieldTower::subfield_generator(unsigned d) const {
    if (d == 0 || n_ % d != 0)
        throw std::invalid_argument("subfield_generator: d must divide n");
    const std::uint64_t qn1 = top_.size() - 1;
    const std::uint64_t qd1 = ipow_checked(q_, d) - 1;
    return top_.pow(gamma_, qn1 / qd1);
}

std::vector<Elem> FieldTower::subfield_elements(unsigned d) const {
    const std::uint64_t qd = ipow_checked(q_, d);
    std::vector<Elem> out;
    out.reserve(qd);
    out.push_back(0);
    Elem g = subfield_generator(d);
    Elem cur = 1;
    for (std::uint64_t i = 0; i + 1 < qd; ++i) {
        out.push_back(cur);
        cur = top_.mul(cur, g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string FieldTower::spec_string() const {
    std::ostringstream os;
    os << "p=" << p_ << ";m=" << m_ << ";n=" << n_
       << ";mid=" << coeff_list_string(mid_.modulus())
       << ";top=" << coeff_list_string(top_.modulus());
    return os.str();
}

std::shared_ptr<const FieldTower> FieldTower::parse(const std::string& spec) {
    std::uint64_t p = 0;
    unsigned m = 0, n = 0;
    std::vector<std::uint64_t> mid, top;
    std::istringstream is(spec);
    std::string part;
    while (std::getline(is, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("tower spec: bad field");
        std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        if (key == "p") p = std::stoull(val);
        else if (key == "m") m = static_cast<unsigned>(std::stoul(val));
        else if (key == "n") n = static_cast<unsigned>(std::stoul(val));
        else if (key == "mid") mid = parse_coeff_list(val);
        else if (key == "top") top = parse_coeff_list(val);
        else throw std::invalid_argument("tower spec: unknown key " + key);
    }
    if (!p || !m || !n || mid.empty() || top.empty())
        throw std::invalid_argument("tower spec: missing fields");
    return build(p, m, n, std::move(mid), std::move(top));
}

bool FieldTower::same_as(const FieldTower& o) const {
    return p_ == o.p_ && m_ == o.m_ && n_ == o.n_ &&
           mid_.modulus() == o.mid_.modulus() && top_.modulus() == o.top_.modulus();
}

FieldIso::FieldIso(const Field& src, const Field& dst) : src_(&src), dst_(&dst) {
    if (src.p() != dst.p() || dst.deg() % src.deg() != 0)
        throw std::invalid_argument("FieldIso: no embedding between these fields");
    std::vector<Elem> lifted(src.modulus().begin(), src.modulus().end());
    auto roots = find_roots(Poly(dst, std::move(lifted)));
    if (roots.size() != src.deg())
        throw std::logic_error("FieldIso: unexpected root count");
    Elem r = roots.front();
    root_pows_.resize(src.deg());
    root_pows_[0] = 1;
    for (unsigned i = 1; i < src.deg(); ++i) root_pows_[i] = dst.mul(root_pows_[i - 1], r);
}

Elem FieldIso::operator()(Elem a) const {
    Elem r = 0;
    auto d = src_->digits(a);
    for (unsigned i = 0; i < src_->deg(); ++i) {
        if (d[i] == 0) continue;
        r = dst_->add(r, dst_->mul(root_pows_[i], dst_->from_int(d[i])));
    }
    return r;
}

} // namespace ssc
