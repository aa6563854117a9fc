#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsg/analytics.hpp"
#include "dsg/degree_model.hpp"
#include "dsg/heuristics.hpp"

namespace dsg {

struct ExperimentPlan {
	ModelKind model = ModelKind::Poisson;
	std::vector<double> params;  // z grid or tau grid
	std::vector<double> alphas{0.10, 0.25, 0.50, 0.75, 1.00};
	std::vector<Heuristic> heuristics{Heuristic::Uniform, Heuristic::DegreeBased};
	std::size_t n = 10000;
	std::size_t graphs_per_point = 30;   // R
	std::size_t runs_per_graph = 100;    // S
	double gamma = 1.0;
	std::uint64_t seed = 1;

	// Sweeps matching the three figure layouts.
	static ExperimentPlan figure(int number);
};

struct AggregateRow {
	ModelKind model;
	double param;
	double alpha;
	Heuristic heuristic;
	double gamma;
	double pn, pn_se;
	double pm, pm_se;
	double zd, zd_se;
	double pt, pt_se;
	std::optional<double> pn_analytic, pm_analytic, zd_analytic, pt_analytic;
	std::size_t samples = 0;
};

std::vector<AggregateRow> run_experiment(const ExperimentPlan& plan);

std::string to_csv(const std::vector<AggregateRow>& rows);
void emit_csv(const std::vector<AggregateRow>& rows, const std::string& path);
std::vector<AggregateRow> parse_csv(const std::string& text);

// One SVG per metric ("pn", "pm", "zd", "pt"): simulation points per alpha
// plus the analytic polyline where defined.
std::string to_svg(const std::vector<AggregateRow>& rows, const std::string& metric);
void emit_plot(const std::vector<AggregateRow>& rows, const std::string& metric,
               const std::string& path);

const char* heuristic_name(Heuristic h);
const char* model_name(ModelKind k);

}  // namespace dsg
