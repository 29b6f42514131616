#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "udw/config.hpp"
#include "udw/emit.hpp"
#include "udw/sweep.hpp"

using namespace udw;

namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SweepPlan small_plan()
{
    SweepPlan p = preset("fig5");
    p.range.steps = 12;
    return p;
}

}  // namespace

TEST_CASE("presets match the figure captions")
{
    for (const char* name : {"fig2", "fig3", "fig5"}) {
        const auto p = preset(name);
        CHECK(p.axis == SweepAxis::theta);
        CHECK(p.a.omega_t == 10.0);
        CHECK(p.geometry.L == 10.0);
        CHECK(p.range.max == doctest::Approx(kPi / 2));
        CHECK(p.a.lambda == 0.01);
        CHECK_NOTHROW(p.validate());
    }
    CHECK(preset("fig2").models == std::vector<Model>{Model::qc});
    CHECK(preset("fig3").models == std::vector<Model>{Model::quantum});
    CHECK(preset("fig5").models.size() == 2);
    const auto f4 = preset("fig4");
    CHECK(f4.axis == SweepAxis::omega_t);
    CHECK(f4.geometry.t0 == 0.0);
    CHECK_THROWS_AS(preset("fig9"), DomainError);
}

TEST_CASE("plan validation")
{
    SweepPlan p;
    p.range = {1.0, 1.0, 10};
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.range = {0.0, 1.0, 1};
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.range = {0.0, 1.0, 5};
    p.models.clear();
    CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("grid endpoints are exact")
{
    const auto g = preset("fig2").grid();
    REQUIRE(g.size() == 100);
    CHECK(g.front() == 0.0);
    CHECK(g.back() <= kPi / 2);
}

TEST_CASE("parallel and serial sweeps agree exactly")
{
    const auto plan = small_plan();
    const auto par = run_sweep(plan, {});
    const auto ser = run_sweep_serial(plan, {});
    REQUIRE(par.size() == ser.size());
    CHECK(par.size() == 24);
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].axis_value == ser[i].axis_value);
        CHECK(par[i].model == ser[i].model);
        CHECK(par[i].value == ser[i].value);
        CHECK(par[i].est_error == ser[i].est_error);
        CHECK(par[i].causal_class == ser[i].causal_class);
    }
    CHECK(to_csv(par) == to_csv(ser));
}

TEST_CASE("qc theta sweep: spacelike rows carry no negativity")
{
    const auto rows = run_sweep(preset("fig2"), {});
    int spacelike = 0;
    for (const auto& r : rows) {
        CHECK(r.error.empty());
        if (r.causal_class == "effectively-spacelike") {
            ++spacelike;
            CHECK(r.value < 1e-12);
        }
    }
    CHECK(spacelike > 0);
}

TEST_CASE("gap sweep: threshold, single peak, decay")
{
    const auto rows = run_sweep(preset("fig4"), {});
    REQUIRE(rows.size() == 101);
    std::size_t first = rows.size(), peak = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].value > 0.0 && first == rows.size()) {
            first = i;
        }
        if (rows[i].value > rows[peak].value) {
            peak = i;
        }
    }
    REQUIRE(first < rows.size());
    CHECK(first > 0);
    CHECK(peak > first);
    CHECK(peak < rows.size() - 1);
    for (std::size_t i = first + 1; i <= peak; ++i) {
        CHECK(rows[i].value >= rows[i - 1].value);
    }
    for (std::size_t i = peak + 1; i < rows.size(); ++i) {
        CHECK(rows[i].value <= rows[i - 1].value);
    }
}

TEST_CASE("failed grid points are recorded in-row")
{
    SweepPlan p = small_plan();
    p.axis = SweepAxis::t0_over_t;
    p.placement = Placement::delay;
    p.range = {-5.0, -1.0, 3};  // receiver before sender: every point fails
    p.switching = SwitchingKind::delta;
    p.a.sigma = p.b.sigma = 0.3;
    p.observable = Observable::capacity_delta;
    const auto rows = run_sweep(p, {});
    REQUIRE_FALSE(rows.empty());
    for (const auto& r : rows) {
        CHECK_FALSE(r.error.empty());
        CHECK(std::isnan(r.value));
    }
}

TEST_CASE("CSV layout")
{
    SweepPlan p = small_plan();
    p.range.steps = 2;
    p.models = {Model::quantum};
    const auto csv = to_csv(run_sweep(p, {}));
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "axis_name,axis_value,model,observable,value,est_error,causal_class");
    CHECK(lines[1].rfind("theta,0,quantum,negativity_leading,", 0) == 0);
}

TEST_CASE("emit is deterministic and JSON round-trips")
{
    const auto plan = small_plan();
    const auto rows = run_sweep(plan, {});
    const auto dir = std::filesystem::temp_directory_path() / "udw_test_sweep";
    std::filesystem::create_directories(dir);
    for (auto fmt : {Format::csv, Format::json}) {
        const auto p1 = dir / "one", p2 = dir / "two";
        emit(run_sweep(plan, {}), fmt, p1.string(), plan, {});
        emit(run_sweep(plan, {}), fmt, p2.string(), plan, {});
        CHECK(slurp(p1) == slurp(p2));
    }
    const auto back = rows_from_json(to_json(rows, plan, {}));
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].axis_value == rows[i].axis_value);
        CHECK(back[i].value == rows[i].value);
        CHECK(back[i].est_error == rows[i].est_error);
        CHECK(back[i].model == rows[i].model);
        CHECK(back[i].causal_class == rows[i].causal_class);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("emit errors")
{
    const auto plan = small_plan();
    CHECK_THROWS_AS(emit({}, Format::csv, "-", plan, {}), DomainError);
    const auto rows = evaluate_point(plan, 0.5, {});
    CHECK_THROWS_AS(emit(rows, Format::csv, "/nonexistent/dir/out.csv", plan, {}), IoError);
    CHECK_THROWS_AS(format_from_string("xml"), DomainError);
}

TEST_CASE("amplitudes observable names its rows")
{
    SweepPlan p = small_plan();
    p.observable = Observable::amplitudes;
    p.models = {Model::quantum};
    const auto rows = evaluate_point(p, 0.3, {});
    std::vector<std::string> names;
    for (const auto& r : rows) {
        names.push_back(r.observable);
    }
    CHECK(names == std::vector<std::string>{"M", "L_aa", "L_bb", "L_ab"});
}

TEST_CASE("config text mirrors the flags")
{
    RunConfig cfg;
    apply_config_text(cfg, R"(
[sweep]
preset = "fig4"
steps = 11
models = "qc"

[detector.a]
omega_t = 3.5
alpha = [0.6, 0.0]
beta = [0.0, 0.8]

[geometry]
l_over_t = 4

[quadrature]
rel_tol = 1e-9
window = 8
)");
    CHECK(cfg.plan.name == "fig4");
    CHECK(cfg.plan.axis == SweepAxis::omega_t);
    CHECK(cfg.plan.range.steps == 11);
    CHECK(cfg.plan.models == std::vector<Model>{Model::qc});
    CHECK(cfg.plan.a.omega_t == 3.5);
    CHECK(cfg.plan.a.beta == cplx(0.0, 0.8));
    CHECK(cfg.plan.geometry.L == 4.0);
    CHECK(cfg.spec.rel_tol == 1e-9);
    CHECK(cfg.spec.integration_window_sigmas == 8.0);

    RunConfig keep;
    keep.plan = preset("fig2");
    apply_config_text(keep, "[sweep]\npreset = \"fig4\"\n", false);
    CHECK(keep.plan.name == "fig2");

    RunConfig bad;
    CHECK_THROWS_AS(apply_config_text(bad, "[geometry]\nl_over = 3\n"), DomainError);
    CHECK_THROWS_AS(apply_config_text(bad, "[nowhere]\nx = 1\n"), DomainError);
    CHECK_THROWS_AS(apply_config_file(bad, "/nonexistent/udw.toml"), IoError);
}

TEST_CASE("enum names round trip")
{
    for (auto a : {SweepAxis::theta, SweepAxis::omega_t, SweepAxis::l_over_t, SweepAxis::t0_over_t, SweepAxis::nu_b}) {
        CHECK(sweep_axis_from_string(to_string(a)) == a);
    }
    for (auto o : {Observable::negativity_leading, Observable::negativity_exact, Observable::capacity_perturbative,
                   Observable::capacity_delta, Observable::amplitudes, Observable::purity}) {
        CHECK(observable_from_string(to_string(o)) == o);
    }
    CHECK(switching_from_string("delta") == SwitchingKind::delta);
}
