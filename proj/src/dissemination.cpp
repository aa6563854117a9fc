#include "dsg/dissemination.hpp"

#include <deque>
#include <stdexcept>

namespace dsg {

DisseminationOutcome disseminate(const Graph& d, NodeId originator, double gamma,
                                 SplitMix64& rng) {
	if (originator >= d.node_count()) throw std::out_of_range("originator out of range");
	if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma in [0,1]");

	DisseminationOutcome out;
	out.originator = originator;
	out.dist.assign(d.node_count(), kUnreachable);
	out.dist[originator] = 0;
	out.reached.push_back(originator);

	std::deque<NodeId> frontier{originator};
	const bool lossless = gamma >= 1.0;
	while (!frontier.empty()) {
		NodeId u = frontier.front();
		frontier.pop_front();
		for (NodeId v : d.neighbors(u)) {
			++out.messages;
			if (!lossless && !rng.bernoulli(gamma)) continue;
			if (out.dist[v] == kUnreachable) {
				out.dist[v] = out.dist[u] + 1;
				out.distance_sum += out.dist[v];
				out.reached.push_back(v);
				frontier.push_back(v);
			}
		}
	}
	return out;
}

double mean_d_degree_over_gcc(const Graph& d, const ComponentLabeling& labels_g) {
	std::size_t gcc = labels_g.giant_size();
	if (gcc == 0) throw std::domain_error("empty giant component");
	std::uint64_t total = 0;
	for (NodeId u = 0; u < d.node_count(); ++u)
		if (labels_g.in_giant(u)) total += d.degree(u);
	return double(total) / double(gcc);
}

MetricSample measure(const Graph& g, const Graph& d, const DisseminationOutcome& outcome,
                     const ComponentLabeling& labels_g) {
	const std::size_t gcc = labels_g.giant_size();
	if (gcc <= 1) throw std::domain_error("degenerate giant component");
	if (!labels_g.in_giant(outcome.originator))
		throw std::invalid_argument("originator must be drawn from GCC_G");

	MetricSample s;
	s.pn = double(outcome.reached.size()) / double(gcc);
	s.pm = double(outcome.messages) / (2.0 * double(gcc - 1));

	// mean D-distance over reached vs mean G-distance over GCC_G, same originator
	double mean_d = outcome.reached.size() > 1
	                    ? double(outcome.distance_sum) / double(outcome.reached.size() - 1)
	                    : 0.0;
	auto gdist = bfs_distances(g, outcome.originator);
	std::uint64_t gsum = 0;
	for (NodeId u = 0; u < g.node_count(); ++u)
		if (labels_g.in_giant(u) && u != outcome.originator) gsum += gdist[u];
	double mean_g = double(gsum) / double(gcc - 1);
	s.pt = mean_g > 0 ? mean_d / mean_g : 0.0;

	s.zd = mean_d_degree_over_gcc(d, labels_g);
	return s;
}

}  // namespace dsg
