#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "krphase/invariants.hpp"
#include "krphase/symmetry.hpp"

namespace krphase {

/// Reals are serialized as decimal strings so JSON output diffs stay stable
/// across platforms and libraries.
inline std::string decimal_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline nlohmann::json to_json(const KRClassVector& kr) {
    nlohmann::json j;
    j["d"] = kr.d;
    j["m"] = decimal_string(kr.m);
    j["p"] = kr.p ? nlohmann::json(*kr.p) : nlohmann::json(nullptr);
    j["strong"] = kr.strong;
    nlohmann::json w1 = nlohmann::json::object();
    for (const auto& [i, v] : kr.weak1) w1["[" + std::to_string(i) + "]"] = v;
    j["weak1"] = w1;
    nlohmann::json w2 = nlohmann::json::object();
    for (const auto& [ij, v] : kr.weak2)
        w2["[" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "]"] = v;
    j["weak2"] = w2;
    j["coefficient"] = kr.coefficient == Coefficient::Z ? "Z" : "Z2";
    j["sign_convention"] = "chi-undetermined";
    return j;
}

inline KRClassVector kr_class_from_json(const nlohmann::json& j) {
    KRClassVector kr;
    kr.d = j.at("d").get<int>();
    kr.m = std::stod(j.at("m").get<std::string>());
    if (!j.at("p").is_null()) kr.p = j.at("p").get<int>();
    kr.strong = j.at("strong").get<long long>();
    for (const auto& [key, v] : j.at("weak1").items()) {
        const int i = std::stoi(key.substr(1));
        kr.weak1[i] = v.get<int>();
    }
    for (const auto& [key, v] : j.at("weak2").items()) {
        const auto comma = key.find(',');
        const int i = std::stoi(key.substr(1, comma - 1));
        const int jj = std::stoi(key.substr(comma + 1));
        kr.weak2[{i, jj}] = v.get<int>();
    }
    kr.coefficient =
        j.at("coefficient").get<std::string>() == "Z" ? Coefficient::Z : Coefficient::Z2;
    kr.chi_undetermined = j.at("sign_convention").get<std::string>() == "chi-undetermined";
    return kr;
}

inline nlohmann::json to_json(int a, int b, const SymmetryClass& c) {
    nlohmann::json j;
    j["a"] = a;
    j["b"] = b;
    j["j"] = c.j;
    j["theta_sq"] = c.theta_sq ? nlohmann::json(*c.theta_sq) : nlohmann::json(nullptr);
    j["chiral"] = c.chiral_present;
    j["xi_theta_sq"] =
        c.xi_theta_sq ? nlohmann::json(*c.xi_theta_sq) : nlohmann::json(nullptr);
    j["theta_role"] =
        c.theta_role == ThetaRole::TimeReversal ? "time-reversal" : "particle-hole";
    j["real_subalgebra"] = c.real_subalgebra;
    j["cartan_label"] = c.cartan_label;
    return j;
}

} // namespace krphase
