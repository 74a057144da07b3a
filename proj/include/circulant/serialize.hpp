#pragma once

/// JSON and line formats for counts, polynomials, identity reports and
/// oracle class dumps. Every count is written as a decimal string.

#include "circulant/bigint.hpp"
#include "circulant/enumerators.hpp"
#include "circulant/error.hpp"
#include "circulant/identities.hpp"
#include "circulant/oracle.hpp"
#include "circulant/sympoly.hpp"
#include "circulant/unipoly.hpp"

#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace circulant::io {

using Json = nlohmann::ordered_json;

// ---- polynomials ----

inline Json to_json(const UniPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(c.str());
    return a;
}

inline UniPoly unipoly_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("UniPoly json: expected an array");
    std::vector<BigInt> coeffs;
    for (const auto& c : j) coeffs.push_back(from_decimal(c.get<std::string>()));
    return UniPoly(std::move(coeffs));
}

inline Json to_json(const SymPoly& p) {
    Json a = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::array();
        for (const auto& [v, e] : m) mono.push_back(Json::array({v.name(), e}));
        a.push_back({{"monomial", mono}, {"num", BigInt(numerator(c)).str()}, {"den", BigInt(denominator(c)).str()}});
    }
    return a;
}

inline Var parse_var(const std::string& name) {
    if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) throw DomainError("SymPoly json: bad variable " + name);
    return {name[0] == 'x' ? Family::x : Family::y, std::stoull(name.substr(1))};
}

inline SymPoly sympoly_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("SymPoly json: expected an array");
    SymPoly out;
    for (const auto& rec : j) {
        SymPoly term = SymPoly::constant(BigRational(from_decimal(rec.at("num").get<std::string>()),
                                                     from_decimal(rec.at("den").get<std::string>())));
        for (const auto& ve : rec.at("monomial")) {
            term *= SymPoly::variable(parse_var(ve.at(0).get<std::string>()), ve.at(1).get<std::uint64_t>());
        }
        out += term;
    }
    return out;
}

// ---- counts ----

inline Json to_json(const CountResult& r) {
    Json j;
    j["order"] = r.order;
    j["class"] = std::string(class_tag(r.cls));
    j["total"] = r.total.str();
    j["by_valency"] = r.by_valency ? to_json(*r.by_valency) : Json(nullptr);
    j["provenance"] = std::string(provenance_tag(r.provenance));
    return j;
}

inline Provenance parse_provenance(const std::string& s) {
    if (s == "formula") return Provenance::formula;
    if (s == "formal") return Provenance::formal;
    if (s == "oracle") return Provenance::oracle;
    throw DomainError("unknown provenance " + s);
}

inline CountResult count_from_json(const Json& j) {
    CountResult r;
    r.order = j.at("order").get<std::uint64_t>();
    auto cls = parse_class(j.at("class").get<std::string>());
    if (!cls) throw DomainError("CountResult json: unknown class");
    r.cls = *cls;
    r.total = from_decimal(j.at("total").get<std::string>());
    if (!j.at("by_valency").is_null()) r.by_valency = unipoly_from_json(j.at("by_valency"));
    r.provenance = parse_provenance(j.at("provenance").get<std::string>());
    return r;
}

// ---- identity reports ----

inline Json to_json(const identities::IdentityReport& r) {
    Json j;
    j["key"] = r.key;
    j["orders"] = r.orders;
    j["status"] = std::string(identities::status_tag(r.status));
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["elapsed_ns"] = std::to_string(r.elapsed.count());
    return j;
}

inline identities::IdentityReport report_from_json(const Json& j) {
    identities::IdentityReport r;
    r.key = j.at("key").get<std::string>();
    r.orders = j.at("orders").get<std::vector<std::uint64_t>>();
    const auto s = j.at("status").get<std::string>();
    if (s == "holds") r.status = identities::Status::holds;
    else if (s == "fails") r.status = identities::Status::fails;
    else if (s == "not-applicable") r.status = identities::Status::not_applicable;
    else throw DomainError("unknown identity status " + s);
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.elapsed = std::chrono::nanoseconds(std::stoll(j.at("elapsed_ns").get<std::string>()));
    return r;
}

/// One row per registry key: No, Formula, Orders, Restrictions, Types, status.
/// The status column counts the instantiations found in `reports`.
inline std::string identity_table(const std::vector<identities::IdentityReport>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(6) << "No" << std::setw(72) << "Formula" << std::setw(10) << "Orders"
       << std::setw(32) << "Restrictions" << std::setw(10) << "Types" << "status\n";
    for (const auto& info : identities::registry()) {
        std::size_t holds = 0, fails = 0;
        for (const auto& r : reports) {
            if (r.key != info.key) continue;
            if (r.status == identities::Status::holds) ++holds;
            if (r.status == identities::Status::fails) ++fails;
        }
        if (holds + fails == 0) continue;
        std::string status = fails ? "fails (" + std::to_string(fails) + " of " + std::to_string(holds + fails) + ")"
                                   : "holds (" + std::to_string(holds) + ")";
        os << std::setw(6) << info.key << std::setw(72) << info.formula << std::setw(10) << info.orders
           << std::setw(32) << info.restrictions << std::setw(10) << info.types << status << "\n";
    }
    return os.str();
}

// ---- oracle dump ----

inline std::string member_text(const oracle::ConnectionSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto m : s.member_list()) {
        out += (first ? "" : ",") + std::to_string(m);
        first = false;
    }
    return out + "}";
}

/// `n;valency;lex-min connection set;class size`
inline std::string representative_line(const oracle::ClassRecord& c) {
    return std::to_string(c.order) + ";" + std::to_string(c.valency) + ";" + member_text(c.representative) + ";" +
           std::to_string(c.class_size);
}

} // namespace circulant::io
