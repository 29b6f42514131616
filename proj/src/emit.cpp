#include "udw/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace udw {

namespace {

using nlohmann::json;

std::string g17(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json number_or_null(double x)
{
    return std::isfinite(x) ? json(x) : json(nullptr);
}

json detector_json(const DetectorParams& d)
{
    return {{"omega_t", d.omega_t},
            {"lambda", d.lambda},
            {"width", d.width},
            {"eta", d.eta},
            {"sigma", d.sigma},
            {"alpha", {d.alpha.real(), d.alpha.imag()}},
            {"beta", {d.beta.real(), d.beta.imag()}}};
}

json plan_json(const SweepPlan& p)
{
    json models = json::array();
    for (Model m : p.models) {
        models.push_back(to_string(m));
    }
    return {{"name", p.name},
            {"axis", to_string(p.axis)},
            {"range", {{"min", p.range.min}, {"max", p.range.max}, {"steps", p.range.steps}}},
            {"observable", to_string(p.observable)},
            {"models", models},
            {"switching", to_string(p.switching)},
            {"placement", to_string(p.placement)},
            {"geometry", {{"l_over_t", p.geometry.L}, {"t0_over_t", p.geometry.t0}, {"theta", p.geometry.theta}}},
            {"detector_a", detector_json(p.a)},
            {"detector_b", detector_json(p.b)}};
}

}  // namespace

Format format_from_string(const std::string& s)
{
    if (s == "csv") {
        return Format::csv;
    }
    if (s == "json") {
        return Format::json;
    }
    throw DomainError("unknown format: " + s);
}

std::string to_csv(const std::vector<SweepRow>& rows)
{
    std::string out = "axis_name,axis_value,model,observable,value,est_error,causal_class\n";
    for (const auto& r : rows) {
        out += r.axis_name + ',' + g17(r.axis_value) + ',' + to_string(r.model) + ',' + r.observable + ',' +
               g17(r.value) + ',' + g17(r.est_error) + ',' + r.causal_class + '\n';
    }
    return out;
}

std::string to_json(const std::vector<SweepRow>& rows, const SweepPlan& plan, const QuadratureSpec& spec)
{
    json jrows = json::array();
    for (const auto& r : rows) {
        json j = {{"axis_name", r.axis_name},
                  {"axis_value", r.axis_value},
                  {"model", to_string(r.model)},
                  {"observable", r.observable},
                  {"value", number_or_null(r.value)},
                  {"est_error", number_or_null(r.est_error)},
                  {"causal_class", r.causal_class}};
        if (!r.error.empty()) {
            j["error"] = r.error;
        }
        jrows.push_back(j);
    }
    json meta = {{"plan", plan_json(plan)},
                 {"spec",
                  {{"abs_tol", spec.abs_tol},
                   {"rel_tol", spec.rel_tol},
                   {"max_subdivisions", spec.max_subdivisions},
                   {"integration_window_sigmas", spec.integration_window_sigmas}}},
                 {"version", kVersion}};
    return json{{"meta", meta}, {"rows", jrows}}.dump(2) + "\n";
}

std::vector<SweepRow> rows_from_json(const std::string& text)
{
    std::vector<SweepRow> rows;
    try {
        const json doc = json::parse(text);
        const auto num = [](const json& j) {
            return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
        };
        for (const auto& j : doc.at("rows")) {
            SweepRow r;
            r.axis_name = j.at("axis_name").get<std::string>();
            r.axis_value = j.at("axis_value").get<double>();
            r.model = model_from_string(j.at("model").get<std::string>());
            r.observable = j.at("observable").get<std::string>();
            r.value = num(j.at("value"));
            r.est_error = num(j.at("est_error"));
            r.causal_class = j.at("causal_class").get<std::string>();
            if (j.contains("error")) {
                r.error = j.at("error").get<std::string>();
            }
            rows.push_back(r);
        }
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed sweep JSON: ") + e.what());
    }
    return rows;
}

void emit(const std::vector<SweepRow>& rows, Format format, const std::string& path, const SweepPlan& plan,
          const QuadratureSpec& spec)
{
    if (rows.empty()) {
        throw DomainError("nothing to emit");
    }
    const std::string text = format == Format::csv ? to_csv(rows) : to_json(rows, plan, spec);
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open output file: " + path);
    }
    f << text;
    f.close();
    if (!f) {
        throw IoError("failed writing output file: " + path);
    }
}

}  // namespace udw
