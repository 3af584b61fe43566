// Command-line front end: construct cyclic subspace codes, verify their
// claimed parameters by brute force, run the orbit census, and probe the
// irreducible-trinomial family.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssc/codefile.hpp"
#include "ssc/construct.hpp"
#include "ssc/intmath.hpp"
#include "ssc/verify.hpp"

namespace {

void emit_code(const ssc::CyclicCode& code, const std::string& out) {
    if (out.empty() || out == "-") std::cout << ssc::code_to_json(code);
    else {
        ssc::save_code(code, out);
        std::cerr << "wrote " << out << " (" << code.orbits.size() << " orbit(s), size "
                  << code.claimed_size.to_decimal() << ")\n";
    }
}

ssc::VerifyOptions load_caps(const std::string& config_path) {
    ssc::VerifyOptions opt;
    if (config_path.empty()) return opt;
    std::ifstream f(config_path);
    if (!f) throw std::runtime_error("cannot open config: " + config_path);
    nlohmann::json j = nlohmann::json::parse(f);
    if (j.contains("pair_budget")) opt.pair_budget = j["pair_budget"].get<std::uint64_t>();
    if (j.contains("shift_budget")) opt.shift_budget = j["shift_budget"].get<std::uint64_t>();
    if (j.contains("sample_pairs")) opt.sample_pairs = j["sample_pairs"].get<std::uint64_t>();
    if (j.contains("materialize_cap"))
        opt.materialize_cap = j["materialize_cap"].get<std::uint64_t>();
    return opt;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic subspace codes: constructions and brute-force verification"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON file with caps (pair_budget, shift_budget, ...)");

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build a code and write its code file");
    construct->require_subcommand(1);
    std::uint64_t q = 2;
    unsigned kdim = 3, nparam = 3, dparam = 1, tparam = 1, nmax = ssc::kDefaultNMax;
    std::string out, divisors_str;

    auto* c_tri = construct->add_subcommand("trinomial", "kernel of x^{q^k}+x^q+x, full orbit");
    c_tri->add_option("--q", q, "field size (prime power)")->required();
    c_tri->add_option("--k", kdim, "codeword dimension")->required();
    c_tri->add_option("-o,--out", out, "output file (default stdout)");

    auto* c_irr = construct->add_subcommand(
        "irreducible", "same kernel with n = t(q^k-1); needs x^{q^k-1}+x^{q-1}+1 irreducible");
    c_irr->add_option("--q", q)->required();
    c_irr->add_option("--k", kdim)->required();
    c_irr->add_option("--t", tparam, "multiplier for n = t(q^k-1)");
    c_irr->add_option("-o,--out", out);

    auto* c_multi = construct->add_subcommand("multiorbit",
                                              "n prime: n Frobenius-shift orbits in F_{q^N}");
    c_multi->add_option("--q", q)->required();
    c_multi->add_option("--n", nparam, "prime degree of the coefficient field")->required();
    c_multi->add_option("--k", kdim)->required();
    c_multi->add_option("--nmax", nmax, "cap on the splitting field degree N");
    c_multi->add_option("-o,--out", out);

    auto* c_sub = construct->add_subcommand("subfield", "C_d: all F_{q^d}-subspaces of dim k");
    c_sub->add_option("--q", q)->required();
    c_sub->add_option("--n", nparam)->required();
    c_sub->add_option("--k", kdim)->required();
    c_sub->add_option("--d", dparam)->required();
    c_sub->add_option("-o,--out", out);

    auto* c_union = construct->add_subcommand("union", "union of C_d over a divisor set");
    c_union->add_option("--q", q)->required();
    c_union->add_option("--n", nparam)->required();
    c_union->add_option("--k", kdim)->required();
    c_union->add_option("--divisors", divisors_str, "comma-separated divisors of gcd(n,k)")
        ->required();
    c_union->add_option("-o,--out", out);

    // ---- embed ----
    auto* embed = app.add_subcommand("embed", "embed a code over F_{q^d} down to F_q");
    std::string embed_in;
    unsigned embed_d = 1;
    embed->add_option("--in", embed_in, "input code file")->required();
    embed->add_option("--d", embed_d, "divisor: input middle field is F_{q^d}")->required();
    embed->add_option("-o,--out", out);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "brute-force check of a code file's claims");
    std::string verify_in, mode_str = "auto";
    bool as_json = false;
    verify->add_option("--in", verify_in, "code file")->required();
    verify->add_option("--mode", mode_str, "auto|exhaustive|orbit|sample")
        ->check(CLI::IsMember({"auto", "exhaustive", "orbit", "sample"}));
    verify->add_flag("--json", as_json, "machine-readable report");

    // ---- census ----
    auto* census = app.add_subcommand("census", "orbit census of G_q(n,k) with the size identity");
    census->add_option("--q", q)->required();
    census->add_option("--n", nparam)->required();
    census->add_option("--k", kdim)->required();
    std::uint64_t census_cap = ssc::kDefaultEnumCap;
    census->add_option("--cap", census_cap, "enumeration cap");
    census->add_flag("--json", as_json);

    // ---- search ----
    auto* search = app.add_subcommand("search", "scan candidate families");
    auto* s_tri = search->add_subcommand("trinomial",
                                         "irreducibility of x^{q^k-1}+x^{q-1}+1 for k=2..kmax");
    unsigned kmax = 7;
    s_tri->add_option("--q", q)->required();
    s_tri->add_option("--kmax", kmax)->required();
    s_tri->add_flag("--json", as_json);

    // ---- gaussian ----
    auto* gauss = app.add_subcommand("gaussian", "Gaussian binomial coefficient [n choose k]_q");
    gauss->add_option("--n", nparam)->required();
    gauss->add_option("--k", kdim)->required();
    gauss->add_option("--q", q)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        ssc::VerifyOptions opt = load_caps(config_path);

        if (c_tri->parsed()) {
            emit_code(ssc::trinomial_code(q, kdim), out);
            return 0;
        }
        if (c_irr->parsed()) {
            emit_code(ssc::irreducible_trinomial_code(q, kdim, tparam), out);
            return 0;
        }
        if (c_multi->parsed()) {
            emit_code(ssc::multi_orbit_code(q, nparam, kdim, nmax), out);
            return 0;
        }
        if (c_sub->parsed()) {
            emit_code(ssc::subfield_code(q, nparam, kdim, dparam), out);
            return 0;
        }
        if (c_union->parsed()) {
            std::vector<unsigned> ds;
            std::istringstream is(divisors_str);
            std::string tok;
            while (std::getline(is, tok, ',')) ds.push_back(static_cast<unsigned>(std::stoul(tok)));
            emit_code(ssc::union_subfield_code(q, nparam, kdim, ds), out);
            return 0;
        }
        if (embed->parsed()) {
            emit_code(ssc::embed_code(ssc::load_code(embed_in), embed_d), out);
            return 0;
        }
        if (verify->parsed()) {
            ssc::CyclicCode code = ssc::load_code(verify_in);
            if (mode_str == "exhaustive") opt.mode = ssc::DistanceMode::Exhaustive;
            else if (mode_str == "orbit") opt.mode = ssc::DistanceMode::OrbitReduced;
            else if (mode_str == "sample") opt.mode = ssc::DistanceMode::Sampled;
            ssc::VerificationReport rep = ssc::verify_code(code, opt);
            std::cout << (as_json ? ssc::report_to_json(rep) : ssc::report_to_text(rep));
            return rep.all_pass ? 0 : 1;
        }
        if (census->parsed()) {
            ssc::CensusResult r = ssc::orbit_census(q, nparam, kdim, census_cap);
            if (as_json) {
                nlohmann::ordered_json j;
                j["q"] = r.q;
                j["n"] = r.n;
                j["k"] = r.k;
                j["total"] = r.total.to_decimal();
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (auto [d, cnt] : r.orbit_counts) rows.push_back({{"d", d}, {"orbits", cnt}});
                j["by_stabilizer_degree"] = rows;
                j["identity_ok"] = r.identity_ok;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "G_" << r.q << "(" << r.n << "," << r.k
                          << "): " << r.total.to_decimal() << " subspaces\n";
                const std::uint64_t qn1 = ssc::ipow_checked(r.q, r.n) - 1;
                for (auto [d, cnt] : r.orbit_counts) {
                    std::uint64_t size = qn1 / (ssc::ipow_checked(r.q, d) - 1);
                    std::cout << "  d=" << d << ": " << cnt << " orbit(s) x " << size << "\n";
                }
                std::cout << "identity " << (r.identity_ok ? "PASS" : "FAIL") << "\n";
            }
            return r.identity_ok ? 0 : 1;
        }
        if (s_tri->parsed()) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (unsigned k = 2; k <= kmax; ++k) {
                std::uint64_t deg = ssc::ipow_checked(q, k) - 1;
                bool irr = ssc::trinomial_family_irreducible(q, k);
                if (as_json) {
                    rows.push_back({{"k", k}, {"degree", deg}, {"irreducible", irr}});
                } else {
                    std::cout << "k=" << k << "  x^" << deg << "+x^" << (q - 1) << "+1 over F_"
                              << q << ": " << (irr ? "irreducible" : "reducible") << "\n";
                }
            }
            if (as_json) std::cout << rows.dump(2) << "\n";
            return 0;
        }
        if (gauss->parsed()) {
            std::cout << ssc::gaussian(nparam, kdim, q).to_decimal() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
