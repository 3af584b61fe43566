#include "ssc/linpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "ssc/intmath.hpp"

namespace ssc {

LinearizedPoly::LinearizedPoly(std::vector<Elem> coeffs) : c(std::move(coeffs)) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Elem lp_eval(const FieldTower& tw, const LinearizedPoly& P, Elem a) {
    const Field& top = tw.top();
    Elem r = 0;
    Elem apow = a; // a^{q^j}
    for (std::size_t j = 0; j < P.c.size(); ++j) {
        if (P.c[j]) r = top.add(r, top.mul(P.c[j], apow));
        apow = top.pow(apow, tw.q());
    }
    return r;
}

LinearizedPoly subspace_poly(const Subspace& V) {
    const FieldTower& tw = V.tower();
    const Field& top = tw.top();
    const std::uint64_t q = tw.q();
    LinearizedPoly P(std::vector<Elem>{1}); // P_{0} = x
    for (Elem v : V.rows()) {
        Elem t = lp_eval(tw, P, v);
        if (t == 0)
            throw std::invalid_argument("subspace_poly: dependent basis vector");
        // P <- P^q - t^{q-1} P
        Elem scale = top.pow(t, q - 1);
        std::vector<Elem> next(P.c.size() + 1, 0);
        for (std::size_t j = 0; j < P.c.size(); ++j) {
            next[j + 1] = top.pow(P.c[j], q);
            next[j] = top.sub(next[j], top.mul(scale, P.c[j]));
        }
        P = LinearizedPoly(std::move(next));
    }
    // sanity: vanishes on the basis
    for (Elem v : V.rows()) {
        if (lp_eval(tw, P, v) != 0)
            throw std::logic_error("subspace_poly: does not vanish on basis");
    }
    return P;
}

Subspace kernel(const FieldTower& tw, const LinearizedPoly& P) {
    if (P.is_zero()) throw std::invalid_argument("kernel: zero polynomial");
    const unsigned mn = tw.m() * tw.n();
    const std::uint64_t p = tw.p();
    // evaluation map as an mn x mn matrix over F_p, column j = image of x^j
    std::vector<std::vector<std::uint64_t>> mat(mn, std::vector<std::uint64_t>(mn, 0));
    for (unsigned j = 0; j < mn; ++j) {
        Elem img = lp_eval(tw, P, ipow_checked(p, j));
        auto d = tw.top().digits(img);
        for (unsigned row = 0; row < mn; ++row) mat[row][j] = d[row];
    }
    // null space over F_p
    std::vector<unsigned> pivot_col;
    unsigned rank = 0;
    for (unsigned col = 0; col < mn && rank < mn; ++col) {
        unsigned sel = rank;
        while (sel < mn && mat[sel][col] == 0) ++sel;
        if (sel == mn) continue;
        std::swap(mat[sel], mat[rank]);
        std::uint64_t ic = powmod_u64(mat[rank][col], p - 2, p);
        for (unsigned t = 0; t < mn; ++t) mat[rank][t] = mulmod_u64(mat[rank][t], ic, p);
        for (unsigned r2 = 0; r2 < mn; ++r2) {
            if (r2 == rank || mat[r2][col] == 0) continue;
            std::uint64_t c = mat[r2][col];
            for (unsigned t = 0; t < mn; ++t)
                mat[r2][t] = (mat[r2][t] + p * p - mulmod_u64(c, mat[rank][t], p)) % p;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_piv(mn, false);
    for (unsigned c : pivot_col) is_piv[c] = true;
    std::vector<Elem> gens;
    for (unsigned freec = 0; freec < mn; ++freec) {
        if (is_piv[freec]) continue;
        std::vector<std::uint64_t> vec(mn, 0);
        vec[freec] = 1;
        for (unsigned r2 = 0; r2 < rank; ++r2)
            vec[pivot_col[r2]] = (p - mat[r2][freec] % p) % p;
        gens.push_back(tw.top().from_digits(vec));
    }
    return Subspace::from_generators(tw, gens);
}

unsigned gap(const LinearizedPoly& P) {
    if (P.q_degree() < 1) throw std::invalid_argument("gap: q-degree must be >= 1");
    if (!P.is_monic()) throw std::invalid_argument("gap: polynomial must be monic");
    if (P.coeff(0) == 0) throw std::invalid_argument("gap: coefficient of x is zero");
    const unsigned k = static_cast<unsigned>(P.q_degree());
    for (unsigned i = k; i-- > 0;) {
        if (P.coeff(i) != 0) return k - i;
    }
    return k; // unreachable given c_0 != 0
}

bool is_subspace_poly(const FieldTower& tw, const LinearizedPoly& P) {
    if (!P.is_monic()) return false;
    if (P.q_degree() >= 1 && P.coeff(0) == 0) return false;
    if (P.q_degree() == 0) return true; // P = x, kernel {0}
    return kernel(tw, P).dim() == static_cast<unsigned>(P.q_degree());
}

LinearizedPoly shift_poly(const FieldTower& tw, const LinearizedPoly& P, Elem alpha) {
    if (alpha == 0) throw std::invalid_argument("shift_poly: alpha must be nonzero");
    const unsigned k = static_cast<unsigned>(P.q_degree());
    const std::uint64_t qk = ipow_checked(tw.q(), k);
    std::vector<Elem> next(P.c.size());
    for (std::size_t j = 0; j < P.c.size(); ++j) {
        if (P.c[j] == 0) continue;
        std::uint64_t e = qk - ipow_checked(tw.q(), static_cast<unsigned>(j));
        next[j] = tw.top().mul(tw.top().pow(alpha, e), P.c[j]);
    }
    return LinearizedPoly(std::move(next));
}

LinearizedPoly frobenius_poly(const FieldTower& tw, const LinearizedPoly& P, std::uint64_t s) {
    std::vector<Elem> next(P.c.size());
    for (std::size_t j = 0; j < P.c.size(); ++j)
        next[j] = tw.frobenius(P.c[j], s);
    return LinearizedPoly(std::move(next));
}

LinearizedPoly normalize_monic(const FieldTower& tw, const LinearizedPoly& P) {
    if (P.is_zero() || P.is_monic()) return P;
    Elem il = tw.top().inv(P.c.back());
    std::vector<Elem> next(P.c.size());
    for (std::size_t j = 0; j < P.c.size(); ++j) next[j] = tw.top().mul(P.c[j], il);
    return LinearizedPoly(std::move(next));
}

Poly to_ordinary(const FieldTower& tw, const LinearizedPoly& P) {
    if (P.is_zero()) return Poly(tw.top());
    const std::uint64_t qk = ipow_checked(tw.q(), static_cast<unsigned>(P.q_degree()));
    if (qk > (1u << 22))
        throw std::invalid_argument("to_ordinary: expanded degree too large");
    std::vector<Elem> coeffs(qk + 1, 0);
    for (std::size_t j = 0; j < P.c.size(); ++j)
        coeffs[ipow_checked(tw.q(), static_cast<unsigned>(j))] = P.c[j];
    return Poly(tw.top(), std::move(coeffs));
}

unsigned intersection_dim_poly(const FieldTower& tw, const LinearizedPoly& pu,
                               const LinearizedPoly& pv) {
    if (!is_subspace_poly(tw, pu) || !is_subspace_poly(tw, pv))
        throw std::invalid_argument("intersection_dim_poly: inputs must be subspace polynomials");
    Poly g = gcd_monic(to_ordinary(tw, pu), to_ordinary(tw, pv));
    std::uint64_t deg = static_cast<std::uint64_t>(g.deg());
    unsigned w = 0;
    std::uint64_t t = 1;
    while (t < deg) {
        t *= tw.q();
        ++w;
    }
    if (t != deg) throw std::logic_error("intersection_dim_poly: gcd degree not a power of q");
    return w;
}

unsigned intersection_bound(const LinearizedPoly& pu, const LinearizedPoly& pv) {
    auto second_top = [](const LinearizedPoly& P) -> unsigned {
        const unsigned k = static_cast<unsigned>(P.q_degree());
        for (unsigned i = k; i-- > 0;)
            if (P.coeff(i) != 0) return i;
        throw std::invalid_argument("intersection_bound: no interior coefficient");
    };
    const int k2 = pu.q_degree(), k1 = pv.q_degree();
    if (k1 > k2) throw std::invalid_argument("intersection_bound: expects q-deg(pv) <= q-deg(pu)");
    unsigned s = second_top(pu), t = second_top(pv);
    return std::max(s, t + static_cast<unsigned>(k2 - k1));
}

std::string lp_to_string(const FieldTower& tw, const LinearizedPoly& P) {
    std::ostringstream os;
    os << "k=" << P.q_degree() << ";c=";
    for (std::size_t j = 0; j < P.c.size(); ++j) {
        if (j) os << '|';
        os << tw.elem_string(P.c[j]);
    }
    return os.str();
}

LinearizedPoly lp_parse(const FieldTower& tw, const std::string& s) {
    auto cpos = s.find(";c=");
    if (s.rfind("k=", 0) != 0 || cpos == std::string::npos)
        throw std::invalid_argument("lp_parse: bad format");
    int k = std::stoi(s.substr(2, cpos - 2));
    std::vector<Elem> coeffs;
    std::string body = s.substr(cpos + 3);
    if (!body.empty()) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, '|')) coeffs.push_back(tw.parse_elem(tok));
    }
    LinearizedPoly P(std::move(coeffs));
    if (P.q_degree() != k) throw std::invalid_argument("lp_parse: degree mismatch");
    return P;
}

} // namespace ssc
