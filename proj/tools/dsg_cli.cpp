#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dsg/dissemination.hpp"
#include "dsg/experiment.hpp"
#include "dsg/generator.hpp"

namespace {

dsg::DegreeModel make_model(const std::string& name, double z, double tau,
                            std::size_t max_degree) {
	if (name == "poisson") return dsg::DegreeModel::poisson(z, max_degree);
	if (name == "powerlaw") return dsg::DegreeModel::power_law(tau, max_degree);
	throw CLI::ValidationError("--model must be poisson or powerlaw");
}

dsg::Heuristic parse_heuristic(const std::string& name) {
	if (name == "uniform") return dsg::Heuristic::Uniform;
	if (name == "degree") return dsg::Heuristic::DegreeBased;
	throw CLI::ValidationError("--heuristic must be uniform or degree");
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"dissemination-subgraph toolkit"};
	app.require_subcommand(1);

	std::string model_name = "poisson", heuristic_name = "uniform";
	std::string load_path, dump_path, out_path = ".", csv_path, metric = "pn";
	double z = 5.0, tau = 2.5, alpha = 0.5, gamma = 1.0;
	std::size_t n = 10000, max_degree = 0, runs = 100, graphs = 30;
	std::uint64_t seed = 1;
	int figure = 0;
	bool sweep = false;

	auto* gen = app.add_subcommand("generate", "generate a random graph");
	gen->add_option("--model", model_name);
	gen->add_option("--z", z);
	gen->add_option("--tau", tau);
	gen->add_option("--n", n);
	gen->add_option("--max-degree", max_degree);
	gen->add_option("--seed", seed);
	gen->add_option("--dump", dump_path)->required();

	auto* build = app.add_subcommand("build", "build a dissemination subgraph");
	build->add_option("--load", load_path)->required();
	build->add_option("--heuristic", heuristic_name);
	build->add_option("--alpha", alpha);
	build->add_option("--seed", seed);
	build->add_option("--dump-d", dump_path);

	auto* sim = app.add_subcommand("simulate", "flood a built subgraph");
	sim->add_option("--load", load_path)->required();
	sim->add_option("--heuristic", heuristic_name);
	sim->add_option("--alpha", alpha);
	sim->add_option("--gamma", gamma);
	sim->add_option("--runs", runs);
	sim->add_option("--seed", seed);
	sim->add_option("--csv", csv_path);

	auto* pred = app.add_subcommand("predict", "analytic prediction bundle");
	pred->add_option("--model", model_name);
	pred->add_option("--z", z);
	pred->add_option("--tau", tau);
	pred->add_option("--alpha", alpha);
	pred->add_option("--n", n);
	pred->add_option("--max-degree", max_degree);
	pred->add_option("--gamma", gamma);
	pred->add_flag("--sweep", sweep, "emit the full figure sweep as CSV");

	auto* exp = app.add_subcommand("experiment", "run a figure sweep");
	exp->add_option("--figure", figure)->check(CLI::Range(1, 3));
	exp->add_option("--model", model_name);
	exp->add_option("--n", n);
	exp->add_option("--graphs", graphs, "graphs per grid point (R)");
	exp->add_option("--runs", runs, "disseminations per graph (S)");
	exp->add_option("--gamma", gamma);
	exp->add_option("--seed", seed);
	exp->add_option("--out", out_path, "output directory");

	auto* plot = app.add_subcommand("plot", "render an SVG from an experiment CSV");
	plot->add_option("--csv", csv_path)->required();
	plot->add_option("--metric", metric);
	plot->add_option("--out", dump_path)->required();

	CLI11_PARSE(app, argc, argv);

	try {
		if (*gen) {
			std::size_t cap = max_degree ? max_degree : n - 1;
			auto model = make_model(model_name, z, tau, cap);
			dsg::Graph g = dsg::generate({n, &model, seed});
			dsg::dump_edge_list_file(g, dump_path);
			std::cout << "n=" << g.node_count() << " m=" << g.edge_count() << "\n";
		} else if (*build) {
			dsg::Graph g = dsg::load_edge_list_file(load_path);
			auto table = dsg::make_choices(g, parse_heuristic(heuristic_name), alpha, seed);
			dsg::Graph d = dsg::build_subgraph(g, table);
			if (!dump_path.empty()) dsg::dump_edge_list_file(d, dump_path);
			std::cout << "D: n=" << d.node_count() << " m=" << d.edge_count() << "\n";
		} else if (*sim) {
			dsg::Graph g = dsg::load_edge_list_file(load_path);
			auto table = dsg::make_choices(g, parse_heuristic(heuristic_name), alpha, seed);
			dsg::Graph d = dsg::build_subgraph(g, table);
			auto labels = dsg::components(g);
			std::vector<dsg::NodeId> gcc;
			for (dsg::NodeId u = 0; u < g.node_count(); ++u)
				if (labels.in_giant(u)) gcc.push_back(u);
			std::ostringstream csv;
			csv << "run,originator,reached,messages,pn,pm,pt\n";
			double pn_sum = 0, pm_sum = 0, pt_sum = 0;
			for (std::size_t i = 0; i < runs; ++i) {
				auto rng = dsg::substream(seed, 100, i);
				dsg::NodeId origin = gcc[rng.uniform_below(gcc.size())];
				auto outcome = dsg::disseminate(d, origin, gamma, rng);
				auto sample = dsg::measure(g, d, outcome, labels);
				pn_sum += sample.pn;
				pm_sum += sample.pm;
				pt_sum += sample.pt;
				csv << i << ',' << origin << ',' << outcome.reached.size() << ','
				    << outcome.messages << ',' << sample.pn << ',' << sample.pm << ','
				    << sample.pt << '\n';
			}
			if (!csv_path.empty()) {
				std::ofstream out(csv_path, std::ios::binary);
				out << csv.str();
			}
			std::cout << "pn=" << pn_sum / double(runs) << " pm=" << pm_sum / double(runs)
			          << " pt=" << pt_sum / double(runs)
			          << " zd=" << dsg::mean_d_degree_over_gcc(d, labels) << "\n";
		} else if (*pred) {
			std::size_t cap = max_degree ? max_degree : n - 1;
			std::vector<double> params;
			if (sweep) {
				if (model_name == "poisson")
					for (int v = 2; v <= 10; ++v) params.push_back(v);
				else
					for (int i = 0; i <= 5; ++i) params.push_back(2.0 + 0.2 * i);
			} else {
				params.push_back(model_name == "poisson" ? z : tau);
			}
			std::cout << "model,param,alpha,q,theta_g,theta_d,r,z_gcc_d,z_d_gcc_g,"
			             "pn,pm,pt,gamma,failure_bound\n";
			for (double p : params) {
				auto model = make_model(model_name, p, p, cap);
				auto bundle = dsg::predict(model, alpha, n);
				std::cout << model_name << ',' << p << ',' << alpha << ','
				          << bundle.fp.q << ',' << bundle.fp.theta_g << ','
				          << bundle.fp.theta_d << ',' << bundle.r << ','
				          << bundle.z_gcc_d << ',' << bundle.z_d_gcc_g << ','
				          << bundle.pn << ',' << bundle.pm << ',';
				if (bundle.pt)
					std::cout << *bundle.pt;
				else
					std::cout << "non-convergent";
				std::cout << ',' << gamma << ',';
				if (gamma < 1.0)
					std::cout << dsg::failure_fixed_point(model, gamma).bound;
				std::cout << '\n';
			}
		} else if (*exp) {
			dsg::ExperimentPlan plan;
			if (figure) {
				plan = dsg::ExperimentPlan::figure(figure);
			} else {
				plan.model = model_name == "poisson" ? dsg::ModelKind::Poisson
				                                     : dsg::ModelKind::PowerLaw;
				plan = dsg::ExperimentPlan::figure(plan.model == dsg::ModelKind::Poisson ? 1 : 2);
				plan.gamma = gamma;
			}
			plan.n = n;
			plan.graphs_per_point = graphs;
			plan.runs_per_graph = runs;
			plan.seed = seed;
			auto rows = dsg::run_experiment(plan);
			std::filesystem::create_directories(out_path);
			dsg::emit_csv(rows, out_path + "/results.csv");
			for (const char* m : {"pn", "pm", "zd", "pt"})
				dsg::emit_plot(rows, m, out_path + "/" + m + ".svg");
			std::cout << rows.size() << " aggregate rows -> " << out_path << "\n";
		} else if (*plot) {
			std::ifstream in(csv_path, std::ios::binary);
			if (!in) throw std::runtime_error("cannot open " + csv_path);
			std::stringstream buf;
			buf << in.rdbuf();
			auto rows = dsg::parse_csv(buf.str());
			dsg::emit_plot(rows, metric, dump_path);
			std::cout << "wrote " << dump_path << "\n";
		}
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}
