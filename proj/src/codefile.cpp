#include "ssc/codefile.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace ssc {

using ordered_json = nlohmann::ordered_json;

std::string code_to_json(const CyclicCode& c) {
    ordered_json j;
    j["format"] = "cyclic-subspace-code-v1";
    j["field"] = c.tower->spec_string();
    j["k"] = c.k;
    j["construction"] = c.construction;
    ordered_json params = ordered_json::object();
    for (const auto& [key, val] : c.params) params[key] = val;
    j["parameters"] = params;
    j["claimed_size"] = c.claimed_size.to_decimal();
    if (c.claimed_min_distance < 0) j["claimed_min_distance"] = nullptr;
    else j["claimed_min_distance"] = c.claimed_min_distance;
    ordered_json orbits = ordered_json::array();
    for (const auto& o : c.orbits) {
        ordered_json rec;
        rec["rep"] = o.rep.to_string();
        rec["t"] = o.t;
        rec["size"] = o.size;
        orbits.push_back(rec);
    }
    j["orbits"] = orbits;
    return j.dump(2) + "\n";
}

CyclicCode code_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.value("format", "") != "cyclic-subspace-code-v1")
        throw std::invalid_argument("code file: unknown format tag");
    CyclicCode c;
    c.tower = FieldTower::parse(j.at("field").get<std::string>());
    c.k = j.at("k").get<unsigned>();
    c.construction = j.value("construction", "unknown");
    if (j.contains("parameters")) {
        for (auto it = j["parameters"].begin(); it != j["parameters"].end(); ++it)
            c.params.push_back({it.key(), it.value().get<std::string>()});
    }
    c.claimed_size = BigUint::from_decimal(j.at("claimed_size").get<std::string>());
    if (j.at("claimed_min_distance").is_null()) c.claimed_min_distance = -1;
    else c.claimed_min_distance = j.at("claimed_min_distance").get<int>();
    for (const auto& rec : j.at("orbits")) {
        OrbitRec o{Subspace::parse(*c.tower, rec.at("rep").get<std::string>()),
                   rec.at("t").get<unsigned>(), rec.at("size").get<std::uint64_t>()};
        if (o.rep.dim() != c.k)
            throw std::invalid_argument("code file: orbit representative has wrong dimension");
        c.orbits.push_back(std::move(o));
    }
    return c;
}

void save_code(const CyclicCode& c, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << code_to_json(c);
}

CyclicCode load_code(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return code_from_json(text);
}

} // namespace ssc
