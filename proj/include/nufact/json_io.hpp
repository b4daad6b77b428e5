#pragma once

// JSON encodings used by the CLI's --json mode. The schemas are described in
// docs/json.md; every encoder here has a matching decoder.

#include <json.hpp>

#include "nufact/oracle.hpp"
#include "nufact/text.hpp"

namespace nufact::json {

using nlohmann::json;

inline json encode(const GroupElement& e) { return e.coords(); }

inline GroupElement decode_element(const FinAbGroup& g, const json& j) {
    return g.element(j.get<std::vector<std::int64_t>>());
}

/// {"text": "1^3 2^3", "length": 6, "counts": [[[1],3],[[2],3]]}
inline json encode(const ZSeq& s) {
    json counts = json::array();
    for (const auto& [e, m] : s.counts()) counts.push_back(json::array({encode(e), m}));
    return {{"text", text::format_sequence(s)}, {"length", s.length()}, {"counts", counts}};
}

inline ZSeq decode_sequence(const FinAbGroup& g, const json& j) {
    ZSeq s(g);
    for (const auto& item : j.at("counts")) s.add(decode_element(g, item.at(0)), item.at(1).get<std::uint64_t>());
    return s;
}

inline json encode(const ZFactorization& f) {
    json parts = json::array();
    for (const auto& a : f) parts.push_back(encode(a));
    return parts;
}

inline json encode(const QuadInt& x) { return json::array({x.a, x.b}); }
inline QuadInt decode_quad(const json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

/// Divisor as an object label -> count, listing only nonzero counts.
inline json encode(const Divisor& d) {
    json out = json::object();
    for (const auto& [p, n] : d.counts()) out[p] = n;
    return out;
}

inline Divisor decode_divisor(const json& j) {
    Divisor d;
    for (const auto& [p, n] : j.items()) d.set(p, n.get<std::uint64_t>());
    return d;
}

inline json encode(const tring::ExponentMatrix& m) { return m.rows(); }
inline tring::ExponentMatrix decode_matrix(const json& j) {
    return tring::ExponentMatrix::from_rows(j.get<std::vector<std::vector<std::int64_t>>>());
}

inline json encode(const oracle::Report& r) {
    json props = json::array();
    for (const auto& p : r.properties) {
        json item = {{"name", p.name}, {"passed", p.passed}, {"checked", p.checked}};
        if (!p.passed) item["counterexample"] = p.counterexample;
        props.push_back(item);
    }
    return {{"l", r.l},           {"max_exp", r.max_exp}, {"seed", r.seed}, {"corpus_size", r.corpus_size},
            {"passed", r.all_passed()}, {"properties", props}};
}

}  // namespace nufact::json
