#pragma once

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "starcert/catalog.hpp"
#include "starcert/criteria.hpp"
#include "starcert/scan.hpp"
#include "starcert/series.hpp"

namespace starcert::io {

using nlohmann::json;

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

/// Series as an array of [re, im] pairs, index = power.
inline json series_to_json(const TaylorSeries& s) {
    json out = json::array();
    for (const auto& c : s.coeffs()) out.push_back(complex_to_json(c));
    return out;
}

inline TaylorSeries series_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("coefficients must be a non-empty JSON array");
    std::vector<Complex> c;
    c.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_number()) {
            c.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            c.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw std::invalid_argument("each coefficient must be [re, im]");
        }
        if (!std::isfinite(c.back().real()) || !std::isfinite(c.back().imag()))
            throw std::invalid_argument("non-finite coefficient");
    }
    if (c.size() < 2) c.resize(2);
    return TaylorSeries(std::move(c));
}

inline TaylorSeries load_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return series_from_json(json::parse(in));
}

inline json to_json(const ScanResult& s) {
    json pr = json::array();
    for (const auto& [r, v] : s.per_radius) pr.push_back({r, v});
    return {{"extremum", s.extremum},
            {"witness", complex_to_json(s.witness)},
            {"per_radius", pr},
            {"refined", s.refined},
            {"tail_flag", s.tail_flag}};
}

inline json to_json(const CriterionReport& r) {
    json params = json::object();
    if (r.criterion.has_param()) params[r.criterion.param_name()] = r.criterion.param;
    json hyp = {{"status", to_string(r.hypothesis_status)},
                {"extremum", r.hypothesis_scan.extremum},
                {"witness", complex_to_json(r.hypothesis_scan.witness)},
                {"tail_flag", r.hypothesis_scan.tail_flag},
                {"region_exit", r.hypothesis_scan.region_exit}};
    json con = {{"status", to_string(r.conclusion_status)},
                {"extremum", r.conclusion_scan.extremum},
                {"witness", complex_to_json(r.conclusion_scan.witness)}};
    json out = {{"criterion", r.criterion.name()},
                {"params", params},
                {"threshold", r.threshold},
                {"hypothesis", hyp},
                {"conclusion", con},
                {"implication_consistent", r.implication_consistent}};
    if (r.pole) out["pole_suspected"] = complex_to_json(*r.pole);
    return out;
}

inline json to_json(const ClassGReport& r) {
    return {{"status", to_string(r.status)}, {"bound", kClassGBound}, {"scan", to_json(r.scan)}};
}

inline json catalog_entry(const AnalyticFunction& f) {
    return {{"name", f.name()}, {"params", f.params()}, {"formula", f.formula()}};
}

}  // namespace starcert::io
