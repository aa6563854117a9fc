#include "dsg/heuristics.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsg {

namespace {

NodeId pick_uniform(const std::vector<NodeId>& nbrs, SplitMix64& rng) {
	return nbrs[rng.uniform_below(nbrs.size())];
}

// First choice of the degree-based approach: uniform among max-degree neighbors.
NodeId pick_max_degree(const Graph& g, const std::vector<NodeId>& nbrs, SplitMix64& rng) {
	std::size_t best = 0;
	std::size_t ties = 0;
	NodeId pick = nbrs[0];
	for (NodeId v : nbrs) {
		std::size_t d = g.degree(v);
		if (d > best) {
			best = d;
			ties = 1;
			pick = v;
		} else if (d == best) {
			// reservoir over the tied set
			++ties;
			if (rng.uniform_below(ties) == 0) pick = v;
		}
	}
	return pick;
}

// Second choice of the degree-based approach: proportional to degree in G.
NodeId pick_degree_proportional(const Graph& g, const std::vector<NodeId>& nbrs,
                                SplitMix64& rng) {
	std::uint64_t total = 0;
	for (NodeId v : nbrs) total += g.degree(v);
	std::uint64_t x = rng.uniform_below(total);
	for (NodeId v : nbrs) {
		std::uint64_t d = g.degree(v);
		if (x < d) return v;
		x -= d;
	}
	return nbrs.back();  // unreachable
}

void make_row(const Graph& g, Heuristic h, double alpha, std::uint64_t seed,
              NodeId u, std::uint32_t epoch, ChoiceTable& t) {
	const auto& nbrs = g.neighbors(u);
	t.epoch[u] = epoch;
	if (nbrs.empty()) {
		t.choice_count[u] = 0;
		t.chosen_size[u] = 0;
		t.chosen[u] = {0, 0};
		return;
	}
	SplitMix64 rng = substream(seed, u, epoch);
	NodeId first = (h == Heuristic::Uniform) ? pick_uniform(nbrs, rng)
	                                         : pick_max_degree(g, nbrs, rng);
	bool second_choice = rng.bernoulli(alpha);
	t.choice_count[u] = second_choice ? 2 : 1;
	if (!second_choice) {
		t.chosen[u] = {first, 0};
		t.chosen_size[u] = 1;
		return;
	}
	NodeId second = (h == Heuristic::Uniform) ? pick_uniform(nbrs, rng)
	                                          : pick_degree_proportional(g, nbrs, rng);
	if (second == first) {
		t.chosen[u] = {first, 0};
		t.chosen_size[u] = 1;
	} else {
		t.chosen[u] = {first, second};
		t.chosen_size[u] = 2;
	}
}

}  // namespace

ChoiceTable make_choices(const Graph& g, Heuristic h, double alpha, std::uint64_t seed) {
	if (!(alpha > 0.0 && alpha <= 1.0))
		throw std::invalid_argument("alpha must be in (0, 1]");
	const std::size_t n = g.node_count();
	ChoiceTable t;
	t.alpha = alpha;
	t.seed = seed;
	t.choice_count.resize(n);
	t.chosen.resize(n);
	t.chosen_size.resize(n);
	t.epoch.assign(n, 0);
	for (NodeId u = 0; u < n; ++u) make_row(g, h, alpha, seed, u, 0, t);
	return t;
}

Graph build_subgraph(const Graph& g, const ChoiceTable& t) {
	const std::size_t n = g.node_count();
	if (t.size() != n) throw std::invalid_argument("choice table does not match graph");
	std::vector<std::pair<NodeId, NodeId>> edges;
	for (NodeId u = 0; u < n; ++u) {
		for (std::uint8_t k = 0; k < t.chosen_size[u]; ++k) {
			NodeId v = t.chosen[u][k];
			if (!g.has_edge(u, v))
				throw std::invalid_argument("choice table inconsistent with graph");
			if (u < v)
				edges.emplace_back(u, v);
			else if (!t.chose(v, u))  // avoid double insert when both chose
				edges.emplace_back(v, u);
		}
	}
	std::sort(edges.begin(), edges.end());
	edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
	return Graph::from_edges(n, edges);
}

UpdateResult local_update(const Graph& g, const ChoiceTable& t, Heuristic h,
                          NodeId u, NodeId v, EdgeOp op) {
	if (op == EdgeOp::Add && g.has_edge(u, v))
		throw std::invalid_argument("edge already present");
	if (op == EdgeOp::Remove && !g.has_edge(u, v))
		throw std::invalid_argument("edge not present");

	UpdateResult res{op == EdgeOp::Add ? g.with_edge_added(u, v)
	                                   : g.with_edge_removed(u, v),
	                 t};

	std::vector<NodeId> affected{u, v};
	if (h == Heuristic::DegreeBased) {
		// neighbors see a changed degree at u or v
		for (NodeId w : res.graph.neighbors(u)) affected.push_back(w);
		for (NodeId w : res.graph.neighbors(v)) affected.push_back(w);
		if (op == EdgeOp::Remove) {
			for (NodeId w : g.neighbors(u)) affected.push_back(w);
			for (NodeId w : g.neighbors(v)) affected.push_back(w);
		}
	}
	std::sort(affected.begin(), affected.end());
	affected.erase(std::unique(affected.begin(), affected.end()), affected.end());

	for (NodeId w : affected)
		make_row(res.graph, h, t.alpha, t.seed, w, t.epoch[w] + 1, res.choices);
	return res;
}

}  // namespace dsg
