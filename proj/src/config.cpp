#include "udw/config.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

namespace udw {

namespace {

double to_double(const std::string& key, const std::vector<std::string>& in)
{
    if (in.size() != 1) {
        throw DomainError("config key " + key + " needs a single value");
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(in[0], &used);
        if (used != in[0].size()) {
            throw std::invalid_argument(in[0]);
        }
        return v;
    } catch (const std::logic_error&) {
        throw DomainError("config key " + key + " is not a number: " + in[0]);
    }
}

std::string to_word(const std::string& key, const std::vector<std::string>& in)
{
    if (in.size() != 1) {
        throw DomainError("config key " + key + " needs a single value");
    }
    return in[0];
}

cplx to_complex(const std::string& key, const std::vector<std::string>& in)
{
    if (in.size() == 1) {
        return {to_double(key, in), 0.0};
    }
    if (in.size() == 2) {
        return {to_double(key, {in[0]}), to_double(key, {in[1]})};
    }
    throw DomainError("config key " + key + " needs a number or a [re, im] pair");
}

void apply_detector(DetectorParams& d, const std::string& key, const std::vector<std::string>& in)
{
    if (key == "omega_t") {
        d.omega_t = to_double(key, in);
    } else if (key == "lambda") {
        d.lambda = to_double(key, in);
    } else if (key == "width") {
        d.width = to_double(key, in);
    } else if (key == "eta") {
        d.eta = to_double(key, in);
    } else if (key == "sigma") {
        d.sigma = to_double(key, in);
    } else if (key == "alpha") {
        d.alpha = to_complex(key, in);
    } else if (key == "beta") {
        d.beta = to_complex(key, in);
    } else {
        throw DomainError("unknown detector key: " + key);
    }
}

std::vector<Model> to_models(const std::vector<std::string>& in)
{
    if (in.size() == 1 && in[0] == "both") {
        return {Model::qc, Model::quantum};
    }
    std::vector<Model> out;
    for (const auto& s : in) {
        out.push_back(model_from_string(s));
    }
    return out;
}

}  // namespace

void apply_config_text(RunConfig& cfg, const std::string& text, bool allow_preset)
{
    std::istringstream is(text);
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigTOML().from_config(is);
    } catch (const CLI::Error& e) {
        throw DomainError(std::string("malformed config: ") + e.what());
    }

    // A preset replaces the whole plan, so it is applied before everything else.
    for (const auto& it : items) {
        if (allow_preset && it.parents == std::vector<std::string>{"sweep"} && it.name == "preset") {
            cfg.plan = preset(to_word("preset", it.inputs));
        }
    }

    auto& p = cfg.plan;
    for (const auto& it : items) {
        if (it.name == "++" || it.name == "--") {
            continue;
        }
        const std::string section = CLI::detail::join(it.parents, ".");
        const std::string& k = it.name;
        const auto& in = it.inputs;
        if (section == "detector.a") {
            apply_detector(p.a, k, in);
        } else if (section == "detector.b") {
            apply_detector(p.b, k, in);
        } else if (section == "geometry") {
            if (k == "l_over_t") {
                p.geometry.L = to_double(k, in);
            } else if (k == "t0_over_t") {
                p.geometry.t0 = to_double(k, in);
            } else if (k == "theta") {
                p.geometry.theta = to_double(k, in);
            } else if (k == "placement") {
                const std::string w = to_word(k, in);
                if (w != "theta" && w != "delay") {
                    throw DomainError("placement must be theta or delay");
                }
                p.placement = w == "theta" ? Placement::theta : Placement::delay;
            } else {
                throw DomainError("unknown geometry key: " + k);
            }
        } else if (section == "sweep") {
            if (k == "preset") {
                continue;
            } else if (k == "axis") {
                p.axis = sweep_axis_from_string(to_word(k, in));
            } else if (k == "min") {
                p.range.min = to_double(k, in);
            } else if (k == "max") {
                p.range.max = to_double(k, in);
            } else if (k == "steps") {
                p.range.steps = static_cast<int>(to_double(k, in));
            } else if (k == "observable") {
                p.observable = observable_from_string(to_word(k, in));
            } else if (k == "models") {
                p.models = to_models(in);
            } else if (k == "switching") {
                p.switching = switching_from_string(to_word(k, in));
            } else {
                throw DomainError("unknown sweep key: " + k);
            }
        } else if (section == "quadrature") {
            if (k == "abs_tol") {
                cfg.spec.abs_tol = to_double(k, in);
            } else if (k == "rel_tol") {
                cfg.spec.rel_tol = to_double(k, in);
            } else if (k == "max_subdivisions") {
                cfg.spec.max_subdivisions = static_cast<int>(to_double(k, in));
            } else if (k == "window") {
                cfg.spec.integration_window_sigmas = to_double(k, in);
            } else {
                throw DomainError("unknown quadrature key: " + k);
            }
        } else {
            throw DomainError("unknown config section or key: " + (section.empty() ? k : section + "." + k));
        }
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path, bool allow_preset)
{
    std::ifstream f(path);
    if (!f) {
        throw IoError("cannot read config file: " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    apply_config_text(cfg, ss.str(), allow_preset);
}

}  // namespace udw
