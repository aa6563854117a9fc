#include "dsg/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dsg/dissemination.hpp"
#include "dsg/generator.hpp"
#include "dsg/graph.hpp"

namespace dsg {

const char* heuristic_name(Heuristic h) {
	return h == Heuristic::Uniform ? "uniform" : "degree";
}

const char* model_name(ModelKind k) {
	return k == ModelKind::Poisson ? "poisson" : "powerlaw";
}

ExperimentPlan ExperimentPlan::figure(int number) {
	ExperimentPlan plan;
	switch (number) {
		case 1:
			plan.model = ModelKind::Poisson;
			for (int z = 1; z <= 10; ++z) plan.params.push_back(double(z));
			break;
		case 2:
			plan.model = ModelKind::PowerLaw;
			for (int i = 0; i <= 5; ++i) plan.params.push_back(2.0 + 0.2 * i);
			break;
		case 3:
			plan.model = ModelKind::Poisson;
			for (int z = 1; z <= 10; ++z) plan.params.push_back(double(z));
			plan.alphas = {0.50, 0.75, 1.00};
			plan.heuristics = {Heuristic::DegreeBased};
			plan.gamma = 0.95;
			break;
		default:
			throw std::invalid_argument("figure must be 1, 2 or 3");
	}
	return plan;
}

namespace {

struct Accumulator {
	double sum = 0, sumsq = 0;
	std::size_t count = 0;
	void add(double x) {
		sum += x;
		sumsq += x * x;
		++count;
	}
	double mean() const { return count ? sum / double(count) : 0.0; }
	double se() const {
		if (count < 2) return 0.0;
		double m = mean();
		double var = std::max(0.0, (sumsq - double(count) * m * m) / double(count - 1));
		return std::sqrt(var / double(count));
	}
};

struct GraphResult {
	Accumulator pn, pm, pt;
	double zd = 0;
	bool ok = false;
};

GraphResult run_one_graph(const ExperimentPlan& plan, const DegreeModel& model,
                          double alpha, Heuristic h, std::uint64_t graph_seed) {
	GraphResult res;
	SplitMix64 gen_rng = substream(graph_seed, 0);
	Graph g = model.kind() == ModelKind::Poisson
	              ? gen_erdos_renyi(plan.n, model.parameter(), gen_rng)
	              : gen_power_law(plan.n, model, gen_rng);
	auto labels = components(g);
	if (labels.giant_size() <= 1) return res;

	auto choices = make_choices(g, h, alpha, mix_seed(graph_seed, 1));
	Graph d = build_subgraph(g, choices);
	res.zd = mean_d_degree_over_gcc(d, labels);

	std::vector<NodeId> gcc_nodes;
	gcc_nodes.reserve(labels.giant_size());
	for (NodeId u = 0; u < g.node_count(); ++u)
		if (labels.in_giant(u)) gcc_nodes.push_back(u);

	for (std::size_t run = 0; run < plan.runs_per_graph; ++run) {
		SplitMix64 run_rng = substream(graph_seed, 2, run);
		NodeId origin = gcc_nodes[run_rng.uniform_below(gcc_nodes.size())];
		auto outcome = disseminate(d, origin, plan.gamma, run_rng);
		auto sample = measure(g, d, outcome, labels);
		res.pn.add(sample.pn);
		res.pm.add(sample.pm);
		res.pt.add(sample.pt);
	}
	res.ok = true;
	return res;
}

}  // namespace

std::vector<AggregateRow> run_experiment(const ExperimentPlan& plan) {
	if (plan.graphs_per_point < 1 || plan.runs_per_graph < 1)
		throw std::invalid_argument("R and S must be >= 1");
	std::vector<AggregateRow> rows;
	const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());

	std::uint64_t point_index = 0;
	for (double param : plan.params) {
		auto model = plan.model == ModelKind::Poisson
		                 ? DegreeModel::poisson(param, plan.n - 1)
		                 : DegreeModel::power_law(param, plan.n - 1);
		if (!model.above_phase_transition()) {
			std::cerr << "warning: skipping " << model_name(plan.model) << " "
			          << param << " (below phase transition)\n";
			point_index += plan.alphas.size() * plan.heuristics.size();
			continue;
		}

		for (double alpha : plan.alphas) {
			// analytic columns are per (param, alpha); the pipeline covers
			// the uniform approach only
			std::optional<Prediction> pred;
			try {
				pred = predict(model, alpha, plan.n);
			} catch (const std::exception&) {
			}
			std::optional<double> failure_bound;
			if (plan.gamma < 1.0)
				failure_bound = failure_fixed_point(model, plan.gamma).bound;

			for (Heuristic h : plan.heuristics) {
				std::uint64_t point_seed = substream(plan.seed, point_index)();
				++point_index;

				std::vector<GraphResult> results(plan.graphs_per_point);
				std::size_t next = 0;
				while (next < results.size()) {
					std::size_t batch = std::min(workers, results.size() - next);
					std::vector<std::future<GraphResult>> futs;
					for (std::size_t k = 0; k < batch; ++k) {
						std::uint64_t graph_seed = mix_seed(point_seed, next + k);
						futs.push_back(std::async(std::launch::async, run_one_graph,
						                          std::cref(plan), std::cref(model), alpha,
						                          h, graph_seed));
					}
					for (std::size_t k = 0; k < batch; ++k)
						results[next + k] = futs[k].get();
					next += batch;
				}

				// reduce in graph order for determinism
				Accumulator pn, pm, pt, zd;
				for (const auto& r : results) {
					if (!r.ok) continue;
					pn.sum += r.pn.sum;
					pn.sumsq += r.pn.sumsq;
					pn.count += r.pn.count;
					pm.sum += r.pm.sum;
					pm.sumsq += r.pm.sumsq;
					pm.count += r.pm.count;
					pt.sum += r.pt.sum;
					pt.sumsq += r.pt.sumsq;
					pt.count += r.pt.count;
					zd.add(r.zd);
				}

				AggregateRow row{};
				row.model = plan.model;
				row.param = param;
				row.alpha = alpha;
				row.heuristic = h;
				row.gamma = plan.gamma;
				row.pn = pn.mean();
				row.pn_se = pn.se();
				row.pm = pm.mean();
				row.pm_se = pm.se();
				row.zd = zd.mean();
				row.zd_se = zd.se();
				row.pt = pt.mean();
				row.pt_se = pt.se();
				row.samples = pn.count;
				if (h == Heuristic::Uniform && pred) {
					row.pn_analytic = pred->pn;
					row.pm_analytic = pred->pm;
					row.zd_analytic = pred->z_d_gcc_g;
					row.pt_analytic = pred->pt;
				}
				// under failures the analytic reach line is the G' bound,
				// drawn for every heuristic as in the resilience figure
				if (failure_bound) row.pn_analytic = failure_bound;
				rows.push_back(row);
			}
		}
	}
	return rows;
}

namespace {

std::string fmt(double x) {
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.10g", x);
	return buf;
}

std::string fmt_opt(const std::optional<double>& x) {
	return x ? fmt(*x) : std::string();
}

}  // namespace

std::string to_csv(const std::vector<AggregateRow>& rows) {
	std::string out =
	    "model,param,alpha,heuristic,gamma,pn,pn_se,pm,pm_se,zd,zd_se,pt,pt_se,"
	    "pn_analytic,pm_analytic,zd_analytic,pt_analytic\n";
	for (const auto& r : rows) {
		out += model_name(r.model);
		out += ',';
		out += fmt(r.param) + ',' + fmt(r.alpha) + ',';
		out += heuristic_name(r.heuristic);
		out += ',';
		out += fmt(r.gamma) + ',';
		out += fmt(r.pn) + ',' + fmt(r.pn_se) + ',';
		out += fmt(r.pm) + ',' + fmt(r.pm_se) + ',';
		out += fmt(r.zd) + ',' + fmt(r.zd_se) + ',';
		out += fmt(r.pt) + ',' + fmt(r.pt_se) + ',';
		out += fmt_opt(r.pn_analytic) + ',' + fmt_opt(r.pm_analytic) + ',';
		out += fmt_opt(r.zd_analytic) + ',' + fmt_opt(r.pt_analytic) + '\n';
	}
	return out;
}

void emit_csv(const std::vector<AggregateRow>& rows, const std::string& path) {
	if (rows.empty()) throw std::invalid_argument("no rows to write");
	std::ofstream out(path, std::ios::binary);
	if (!out) throw std::runtime_error("cannot open " + path);
	out << to_csv(rows);
}

std::vector<AggregateRow> parse_csv(const std::string& text) {
	std::istringstream in(text);
	std::string line;
	if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
	std::vector<AggregateRow> rows;
	while (std::getline(in, line)) {
		if (line.empty()) continue;
		std::vector<std::string> fields;
		std::string field;
		std::istringstream ls(line);
		while (std::getline(ls, field, ',')) fields.push_back(field);
		while (fields.size() < 17) fields.emplace_back();
		AggregateRow r{};
		r.model = fields[0] == "poisson" ? ModelKind::Poisson : ModelKind::PowerLaw;
		r.param = std::stod(fields[1]);
		r.alpha = std::stod(fields[2]);
		r.heuristic = fields[3] == "uniform" ? Heuristic::Uniform : Heuristic::DegreeBased;
		r.gamma = std::stod(fields[4]);
		r.pn = std::stod(fields[5]);
		r.pn_se = std::stod(fields[6]);
		r.pm = std::stod(fields[7]);
		r.pm_se = std::stod(fields[8]);
		r.zd = std::stod(fields[9]);
		r.zd_se = std::stod(fields[10]);
		r.pt = std::stod(fields[11]);
		r.pt_se = std::stod(fields[12]);
		auto opt = [](const std::string& s) -> std::optional<double> {
			return s.empty() ? std::nullopt : std::optional<double>(std::stod(s));
		};
		r.pn_analytic = opt(fields[13]);
		r.pm_analytic = opt(fields[14]);
		r.zd_analytic = opt(fields[15]);
		r.pt_analytic = opt(fields[16]);
		rows.push_back(r);
	}
	return rows;
}

namespace {

double metric_value(const AggregateRow& r, const std::string& metric, bool analytic,
                    bool& present) {
	present = true;
	if (metric == "pn") {
		if (!analytic) return r.pn;
		present = r.pn_analytic.has_value();
		return present ? *r.pn_analytic : 0;
	}
	if (metric == "pm") {
		if (!analytic) return r.pm;
		present = r.pm_analytic.has_value();
		return present ? *r.pm_analytic : 0;
	}
	if (metric == "zd") {
		if (!analytic) return r.zd;
		present = r.zd_analytic.has_value();
		return present ? *r.zd_analytic : 0;
	}
	if (metric == "pt") {
		if (!analytic) return r.pt;
		present = r.pt_analytic.has_value();
		return present ? *r.pt_analytic : 0;
	}
	throw std::invalid_argument("unsupported metric " + metric);
}

}  // namespace

std::string to_svg(const std::vector<AggregateRow>& rows, const std::string& metric) {
	if (rows.empty()) throw std::invalid_argument("no rows to plot");
	for (const auto& r : rows)
		if (r.model != rows.front().model)
			throw std::invalid_argument("rows must share a model family");

	const double width = 640, height = 480, ml = 60, mr = 20, mt = 30, mb = 50;
	double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
	for (const auto& r : rows) {
		xmin = std::min(xmin, r.param);
		xmax = std::max(xmax, r.param);
		for (bool analytic : {false, true}) {
			bool present;
			double y = metric_value(r, metric, analytic, present);
			if (!present) continue;
			ymin = std::min(ymin, y);
			ymax = std::max(ymax, y);
		}
	}
	if (xmax <= xmin) xmax = xmin + 1;  // single grid point
	if (ymax <= ymin) ymax = ymin + 1;
	double ypad = 0.05 * (ymax - ymin);
	ymin -= ypad;
	ymax += ypad;

	auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
	auto sy = [&](double y) {
		return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
	};

	static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
	                               "#9467bd", "#8c564b", "#e377c2"};

	std::vector<std::pair<double, Heuristic>> series;  // one per (alpha, heuristic)
	for (const auto& r : rows) {
		std::pair<double, Heuristic> key{r.alpha, r.heuristic};
		if (std::find(series.begin(), series.end(), key) == series.end())
			series.push_back(key);
	}

	std::ostringstream svg;
	svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
	    << "\" height=\"" << height << "\">\n";
	svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
	svg << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
	    << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
	svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
	    << height - mb << "\" stroke=\"black\"/>\n";
	svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
	    << "\" text-anchor=\"middle\" font-size=\"14\">"
	    << (rows.front().model == ModelKind::Poisson ? "z" : "tau") << "</text>\n";
	svg << "<text x=\"16\" y=\"" << height / 2 << "\" text-anchor=\"middle\" "
	    << "font-size=\"14\" transform=\"rotate(-90 16 " << height / 2 << ")\">" << metric
	    << "</text>\n";
	// axis extremes
	svg << "<text x=\"" << ml << "\" y=\"" << height - mb + 18
	    << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(xmin) << "</text>\n";
	svg << "<text x=\"" << width - mr << "\" y=\"" << height - mb + 18
	    << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(xmax) << "</text>\n";
	svg << "<text x=\"" << ml - 6 << "\" y=\"" << sy(ymin) + 4
	    << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(ymin) << "</text>\n";
	svg << "<text x=\"" << ml - 6 << "\" y=\"" << sy(ymax) + 4
	    << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(ymax) << "</text>\n";

	int color_idx = 0;
	double legend_y = mt + 6;
	for (auto [alpha, h] : series) {
		const char* color = colors[color_idx++ % 7];
		// analytic solid line
		std::ostringstream line;
		bool has_line = false;
		for (const auto& r : rows) {
			if (r.alpha != alpha || r.heuristic != h) continue;
			bool present;
			double y = metric_value(r, metric, true, present);
			if (!present) continue;
			line << sx(r.param) << ',' << sy(y) << ' ';
			has_line = true;
		}
		if (has_line)
			svg << "<polyline points=\"" << line.str() << "\" fill=\"none\" stroke=\""
			    << color << "\" stroke-width=\"1.5\"/>\n";
		// simulation points
		for (const auto& r : rows) {
			if (r.alpha != alpha || r.heuristic != h) continue;
			bool present;
			double y = metric_value(r, metric, false, present);
			svg << "<circle cx=\"" << sx(r.param) << "\" cy=\"" << sy(y)
			    << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
		}
		svg << "<text x=\"" << width - mr - 4 << "\" y=\"" << legend_y
		    << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << color
		    << "\">alpha=" << fmt(alpha) << " " << heuristic_name(h) << "</text>\n";
		legend_y += 14;
	}
	svg << "</svg>\n";
	return svg.str();
}

void emit_plot(const std::vector<AggregateRow>& rows, const std::string& metric,
               const std::string& path) {
	std::string svg = to_svg(rows, metric);
	std::ofstream out(path, std::ios::binary);
	if (!out) throw std::runtime_error("cannot open " + path);
	out << svg;
}

}  // namespace dsg
