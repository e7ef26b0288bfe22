#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sincasym/coeffgen.hpp"

namespace sincasym {

inline constexpr int coeff_text_version = 1;
inline constexpr int schema_version = 1;

/// Versioned text form:
///
///   # sincasym coefficient table v1
///   # family: ball
///   # nu: 4/3
///   # scale_sq: 28/3
///   # order: 6
///   # radius: ...
///   # b 0: 1            (b_k, one per line)
///   0: 1                (c_k, or d_k for ball_general, one per line)
inline std::string to_text(const CoeffTable& t) {
    std::ostringstream os;
    os << "# sincasym coefficient table v" << coeff_text_version << '\n';
    os << "# family: " << to_string(t.family) << '\n';
    if (t.nu) os << "# nu: " << t.nu->str() << '\n';
    if (t.a_exp) os << "# a: " << t.a_exp->str() << '\n';
    os << "# scale_sq: " << t.scale_sq.str() << '\n';
    os << "# order: " << t.order << '\n';
    os << "# radius: " << t.radius_note << '\n';
    for (std::size_t k = 0; k < t.b.size(); ++k) os << "# b " << k << ": " << t.b[k].str() << '\n';
    for (std::size_t k = 0; k < t.c.size(); ++k) os << k << ": " << t.c[k].str() << '\n';
    return os.str();
}

inline CoeffTable parse_text(std::string_view text) {
    CoeffTable t;
    std::istringstream is{std::string(text)};
    std::string line;
    bool header = false;
    auto indexed = [](const std::string& body, std::vector<Rational>& into) {
        const auto colon = body.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("coefficient line without ':'");
        const std::size_t k = std::stoul(body.substr(0, colon));
        if (k != into.size()) throw std::invalid_argument("coefficient lines out of order");
        into.push_back(Rational::parse(body.substr(colon + 1)));
    };
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("# sincasym coefficient table v", 0) == 0) {
            if (std::stoi(line.substr(30)) != coeff_text_version)
                throw std::invalid_argument("unsupported coefficient table version");
            header = true;
            continue;
        }
        if (line.rfind("# b ", 0) == 0) {
            indexed(line.substr(4), t.b);
            continue;
        }
        if (line.rfind("# ", 0) == 0) {
            const auto colon = line.find(':');
            if (colon == std::string::npos) continue;
            const std::string key = line.substr(2, colon - 2);
            std::string value = line.substr(colon + 1);
            if (!value.empty() && value.front() == ' ') value.erase(0, 1);
            if (key == "family") t.family = parse_family(value);
            else if (key == "nu") t.nu = Rational::parse(value);
            else if (key == "a") t.a_exp = Rational::parse(value);
            else if (key == "scale_sq") t.scale_sq = Rational::parse(value);
            else if (key == "order") t.order = std::stoi(value);
            else if (key == "radius") t.radius_note = value;
            continue;
        }
        indexed(line, t.c);
    }
    if (!header) throw std::invalid_argument("missing coefficient table header");
    if (static_cast<int>(t.c.size()) != t.order + 1) throw std::invalid_argument("coefficient count does not match order");
    return t;
}

inline nlohmann::json to_json(const CoeffTable& t) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["kind"] = "coeff_table";
    j["family"] = to_string(t.family);
    j["nu"] = t.nu ? nlohmann::json(t.nu->str()) : nlohmann::json(nullptr);
    j["a"] = t.a_exp ? nlohmann::json(t.a_exp->str()) : nlohmann::json(nullptr);
    j["scale_sq"] = t.scale_sq.str();
    j["order"] = t.order;
    j["radius_note"] = t.radius_note;
    auto strings = [](const std::vector<Rational>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : v) arr.push_back(r.str());
        return arr;
    };
    j["b"] = strings(t.b);
    j["c"] = strings(t.c);
    return j;
}

inline CoeffTable coeff_table_from_json(const nlohmann::json& j) {
    if (j.at("schema_version").get<int>() != schema_version) throw std::invalid_argument("unsupported schema version");
    CoeffTable t;
    t.family = parse_family(j.at("family").get<std::string>());
    if (!j.at("nu").is_null()) t.nu = Rational::parse(j.at("nu").get<std::string>());
    if (!j.at("a").is_null()) t.a_exp = Rational::parse(j.at("a").get<std::string>());
    t.scale_sq = Rational::parse(j.at("scale_sq").get<std::string>());
    t.order = j.at("order").get<int>();
    t.radius_note = j.value("radius_note", "");
    for (const auto& s : j.at("b")) t.b.push_back(Rational::parse(s.get<std::string>()));
    for (const auto& s : j.at("c")) t.c.push_back(Rational::parse(s.get<std::string>()));
    return t;
}

}  // namespace sincasym
