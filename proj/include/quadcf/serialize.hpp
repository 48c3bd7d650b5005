#pragma once

#include <json.hpp>

#include "quadcf/ball.hpp"
#include "quadcf/bivar.hpp"
#include "quadcf/cf.hpp"
#include "quadcf/newton.hpp"
#include "quadcf/quadext.hpp"
#include "quadcf/symbolic.hpp"

namespace quadcf {

using json = nlohmann::json;

inline json to_json(const LatticePoint& p) {
    return {{"kind", kind_tag(p.kind())}, {"x", p.x().str()}, {"y", p.y().str()}};
}

inline json to_json(const ExclusionSet& s) {
    json arr = json::array();
    for (const auto& p : s.members) arr.push_back(to_json(p));
    return arr;
}

inline json to_json(const FieldElement& v) {
    return {{"kind", kind_tag(v.kind())},
            {"x", rational_string(v.x())},
            {"y", rational_string(v.y())}};
}

inline json to_json(const QuadExtElement& z) {
    return {{"t", to_json(z.params().t())},
            {"u", to_json(z.params().u().value())},
            {"a", to_json(z.a())},
            {"b", to_json(z.b())}};
}

inline json to_json(const Ball& b, unsigned digits = 40) {
    return {{"re", decimal_string(b.re(), digits)},
            {"im", decimal_string(b.im(), digits)},
            {"radius", decimal_string_upper(b.radius() + make_rational(2, pow(Integer(10), digits)),
                                            digits)},
            {"bits", b.bits()}};
}

inline json to_json(const BivarPoly& p) {
    json arr = json::array();
    for (const auto& [k, c] : p.terms())
        arr.push_back({{"dT", k.first}, {"dU", k.second}, {"c", c.str()}});
    return arr;
}

inline json to_json(const CFWord& w) {
    json partials = json::array();
    for (const auto& a : w.partials) partials.push_back(to_json(a));
    return {{"a0", to_json(w.a0)}, {"partials", partials}, {"terminated", w.terminated}};
}

inline json to_json(const Theorem1Report& r) {
    return {{"n", r.n},
            {"newton_eq_series", r.newton_eq_series},
            {"series_eq_cf", r.series_eq_cf},
            {"newton_eq_series_t", r.newton_eq_series_t},
            {"series_eq_cf_t", r.series_eq_cf_t},
            {"max_deg_T", r.max_deg_T},
            {"max_deg_U", r.max_deg_U}};
}

inline json to_json(const PeriodicityReport& r) {
    json period = json::array();
    for (const auto& p : r.period) period.push_back(to_json(p));
    return {{"preperiod_length", r.preperiod_length},
            {"period_length", r.period_length},
            {"period", period}};
}

inline json to_json(const BoundCheckRow& r, const QuadParams& p) {
    return {{"params", {{"t", to_json(p.t())}, {"u", to_json(p.u().value())}}},
            {"n", r.n},
            {"side", r.alpha_side ? "alpha" : "beta"},
            {"lhs", {{"upper", decimal_string_upper(r.lhs_upper, 40)}, {"bits", r.bits}}},
            {"rhs", {{"lower", decimal_string(r.rhs_lower, 40)}, {"bits", r.bits}}},
            {"pass", r.pass}};
}

}  // namespace quadcf
