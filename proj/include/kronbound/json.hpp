#pragma once

#include "kronbound/bounds.hpp"
#include "kronbound/constructions.hpp"
#include "kronbound/pyramids.hpp"
#include "kronbound/sweeps.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace kronbound {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.vec()); }

inline Json to_json(const MarginTriple& m) { return Json::array({to_json(m.x), to_json(m.y), to_json(m.z)}); }

inline Json to_json(const Pyramid& p) { return Json(p.heights()); }

inline const char* kind_name(BoundKind k) { return k == BoundKind::Upper ? "upper" : "lower"; }

inline Json to_json(const BoundEntry& b) {
    Json j;
    j["name"] = b.name;
    j["kind"] = kind_name(b.kind);
    if (b.value.exact) j["exact_value"] = to_decimal(*b.value.exact);
    if (std::isfinite(b.value.log_value)) j["log_value"] = b.value.log_value;
    j["approx"] = b.value.approx();
    j["method"] = b.value.method;
    return j;
}

inline Json to_json(const BoundReport& r) {
    Json j;
    j["triple"] = Json::array({to_json(r.triple[0]), to_json(r.triple[1]), to_json(r.triple[2])});
    if (r.exact) j["exact"] = to_decimal(*r.exact);
    j["bounds"] = Json::array();
    for (const auto& b : r.bounds) j["bounds"].push_back(to_json(b));
    if (!r.unavailable.empty()) {
        j["unavailable"] = Json::array();
        for (const auto& u : r.unavailable) j["unavailable"].push_back({{"name", u.name}, {"reason", u.reason}});
    }
    j["tightest"] = r.tightest;
    return j;
}

inline Json to_json(const PyramidFamily& f) {
    Json j;
    j["s"] = f.s;
    j["margins"] = to_json(f.margins);
    j["size"] = f.size;
    j["member_count"] = f.members.size();
    j["members"] = Json::array();
    for (const auto& m : f.members) j["members"].push_back(to_json(m));
    return j;
}

inline Json to_json(const CyclicWitness& w) {
    return {{"margin", to_json(w.margin)}, {"first", to_json(w.first)}, {"second", to_json(w.second)}};
}

inline Json to_json(const EqualMarginSearch& s) {
    Json j;
    j["entries"] = Json::array();
    for (const auto& e : s.entries)
        j["entries"].push_back({{"n", e.n}, {"margins", to_json(e.margins)}, {"count", to_decimal(e.count)}});
    j["smallest_diagonal_n"] = s.smallest_diagonal_n ? Json(*s.smallest_diagonal_n) : Json(nullptr);
    return j;
}

inline Json to_json(const Violation& v) {
    return {{"item", v.item}, {"check", v.check}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

/// Wall time is left out so the output is reproducible.
inline Json to_json(const SweepResult& r) {
    Json j;
    j["n"] = r.n;
    j["suite"] = r.suite;
    j["checked"] = r.checked;
    j["violations"] = Json::array();
    for (const auto& v : r.violations) j["violations"].push_back(to_json(v));
    if (!r.tightest.empty()) j["tightest"] = Json(r.tightest);
    return j;
}

}  // namespace kronbound
