#include <doctest.h>

#include <cmath>

#include "dsg/experiment.hpp"

using namespace dsg;
using doctest::Approx;

namespace {

ExperimentPlan smoke_plan() {
	ExperimentPlan plan;
	plan.model = ModelKind::Poisson;
	plan.params = {5.0};
	plan.alphas = {0.5};
	plan.heuristics = {Heuristic::Uniform};
	plan.n = 300;
	plan.graphs_per_point = 2;
	plan.runs_per_graph = 3;
	plan.seed = 7;
	return plan;
}

}  // namespace

TEST_CASE("figure presets") {
	auto f1 = ExperimentPlan::figure(1);
	CHECK(f1.model == ModelKind::Poisson);
	CHECK(f1.params.size() == 10);
	CHECK(f1.params.front() == 1.0);
	CHECK(f1.params.back() == 10.0);
	CHECK(f1.gamma == 1.0);

	auto f2 = ExperimentPlan::figure(2);
	CHECK(f2.model == ModelKind::PowerLaw);
	CHECK(f2.params.front() == Approx(2.0));
	CHECK(f2.params.back() == Approx(3.0));

	auto f3 = ExperimentPlan::figure(3);
	CHECK(f3.gamma == Approx(0.95));
	CHECK(f3.heuristics == std::vector<Heuristic>{Heuristic::DegreeBased});
	CHECK(f3.alphas == std::vector<double>{0.50, 0.75, 1.00});

	CHECK_THROWS(ExperimentPlan::figure(4));
}

TEST_CASE("run_experiment smoke") {
	auto plan = smoke_plan();
	auto rows = run_experiment(plan);
	REQUIRE(rows.size() == 1);
	const auto& r = rows[0];
	CHECK(r.samples == plan.graphs_per_point * plan.runs_per_graph);
	CHECK(r.pn > 0);
	CHECK(r.pn <= 1.0);
	CHECK(r.pm > 0);
	CHECK(r.zd > 0);
	CHECK(r.pt > 0);
	CHECK(r.pn_se >= 0);
	// uniform rows carry the analytic columns
	CHECK(r.pn_analytic.has_value());
	CHECK(r.pm_analytic.has_value());
	CHECK(r.zd_analytic.has_value());
	CHECK(r.pt_analytic.has_value());
}

TEST_CASE("same seed, byte-identical CSV") {
	auto plan = smoke_plan();
	auto a = to_csv(run_experiment(plan));
	auto b = to_csv(run_experiment(plan));
	CHECK(a == b);

	plan.seed = 8;
	auto c = to_csv(run_experiment(plan));
	CHECK(a != c);
}

TEST_CASE("degree-based rows have empty analytic columns at gamma=1") {
	auto plan = smoke_plan();
	plan.heuristics = {Heuristic::DegreeBased};
	auto rows = run_experiment(plan);
	REQUIRE(rows.size() == 1);
	CHECK(!rows[0].pn_analytic.has_value());
	CHECK(!rows[0].zd_analytic.has_value());
}

TEST_CASE("gamma<1 rows carry the reach bound for any heuristic") {
	auto plan = smoke_plan();
	plan.heuristics = {Heuristic::DegreeBased};
	plan.gamma = 0.9;
	auto rows = run_experiment(plan);
	REQUIRE(rows.size() == 1);
	REQUIRE(rows[0].pn_analytic.has_value());
	CHECK(*rows[0].pn_analytic < 1.0);
	CHECK(*rows[0].pn_analytic > 0.0);
	CHECK(!rows[0].pm_analytic.has_value());
}

TEST_CASE("points below the phase transition are skipped") {
	auto plan = smoke_plan();
	plan.params = {0.5, 5.0};
	auto rows = run_experiment(plan);
	REQUIRE(rows.size() == 1);
	CHECK(rows[0].param == 5.0);
}

TEST_CASE("CSV round trip") {
	AggregateRow r{};
	r.model = ModelKind::PowerLaw;
	r.param = 2.5;
	r.alpha = 0.75;
	r.heuristic = Heuristic::DegreeBased;
	r.gamma = 0.95;
	r.pn = 0.123456789;
	r.pn_se = 0.001;
	r.pm = 1.5;
	r.pm_se = 0.02;
	r.zd = 2.375;
	r.zd_se = 0.01;
	r.pt = 1.75;
	r.pt_se = 0.05;
	r.pn_analytic = 0.5;
	// pm/zd/pt analytic left empty
	r.samples = 10;

	auto parsed = parse_csv(to_csv({r}));
	REQUIRE(parsed.size() == 1);
	const auto& p = parsed[0];
	CHECK(p.model == ModelKind::PowerLaw);
	CHECK(p.param == r.param);
	CHECK(p.alpha == r.alpha);
	CHECK(p.heuristic == Heuristic::DegreeBased);
	CHECK(p.gamma == r.gamma);
	CHECK(p.pn == Approx(r.pn).epsilon(1e-9));
	CHECK(p.pm == r.pm);
	CHECK(p.zd == r.zd);
	CHECK(p.pt == r.pt);
	REQUIRE(p.pn_analytic.has_value());
	CHECK(*p.pn_analytic == 0.5);
	CHECK(!p.pm_analytic.has_value());
	CHECK(!p.pt_analytic.has_value());

	CHECK(to_csv({r}).substr(0, 5) == "model");
	CHECK_THROWS(parse_csv(""));
}

TEST_CASE("SVG emission") {
	std::vector<AggregateRow> rows;
	for (int z = 2; z <= 4; ++z)
		for (double alpha : {0.5, 1.0}) {
			AggregateRow r{};
			r.model = ModelKind::Poisson;
			r.param = double(z);
			r.alpha = alpha;
			r.heuristic = Heuristic::Uniform;
			r.gamma = 1.0;
			r.pn = 0.1 * z * alpha;
			r.pn_analytic = 0.1 * z * alpha + 0.01;
			rows.push_back(r);
		}

	SUBCASE("lines and points for each series") {
		auto svg = to_svg(rows, "pn");
		CHECK(svg.find("<svg") == 0);
		CHECK(svg.find("<polyline") != std::string::npos);
		CHECK(svg.find("<circle") != std::string::npos);
		CHECK(svg.find("alpha=0.5") != std::string::npos);
		CHECK(svg.find("alpha=1") != std::string::npos);
	}
	SUBCASE("points only when the analytic column is empty") {
		for (auto& r : rows) r.pn_analytic.reset();
		auto svg = to_svg(rows, "pn");
		CHECK(svg.find("<polyline") == std::string::npos);
		CHECK(svg.find("<circle") != std::string::npos);
	}
	SUBCASE("single grid point degenerates gracefully") {
		auto svg = to_svg({rows[0]}, "pn");
		CHECK(svg.find("<svg") == 0);
	}
	SUBCASE("bad inputs rejected") {
		CHECK_THROWS(to_svg(rows, "nope"));
		CHECK_THROWS(to_svg({}, "pn"));
		auto mixed = rows;
		mixed[0].model = ModelKind::PowerLaw;
		CHECK_THROWS(to_svg(mixed, "pn"));
	}
}
