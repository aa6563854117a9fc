#include "dsg/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dsg {

void Graph::check_node(NodeId u) const {
	if (u >= adjacency_.size())
		throw std::out_of_range("node id " + std::to_string(u) + " out of range (n=" +
		                        std::to_string(adjacency_.size()) + ")");
}

Graph Graph::from_edges(std::size_t node_count,
                        const std::vector<std::pair<NodeId, NodeId>>& edges) {
	Graph g(node_count);
	for (auto [u, v] : edges) {
		g.check_node(u);
		g.check_node(v);
		if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
		g.adjacency_[u].push_back(v);
		g.adjacency_[v].push_back(u);
	}
	for (auto& adj : g.adjacency_) {
		std::sort(adj.begin(), adj.end());
		if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
			throw std::invalid_argument("duplicate edge in edge list");
	}
	g.edge_count_ = edges.size();
	return g;
}

std::size_t Graph::degree(NodeId u) const {
	check_node(u);
	return adjacency_[u].size();
}

const std::vector<NodeId>& Graph::neighbors(NodeId u) const {
	check_node(u);
	return adjacency_[u];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
	check_node(u);
	check_node(v);
	const auto& adj = adjacency_[u];
	return std::binary_search(adj.begin(), adj.end(), v);
}

Graph Graph::with_edge_added(NodeId u, NodeId v) const {
	if (u == v) throw std::invalid_argument("self-loop");
	if (has_edge(u, v)) throw std::invalid_argument("edge already present");
	Graph g = *this;
	auto& au = g.adjacency_[u];
	au.insert(std::upper_bound(au.begin(), au.end(), v), v);
	auto& av = g.adjacency_[v];
	av.insert(std::upper_bound(av.begin(), av.end(), u), u);
	g.edge_count_ = edge_count_ + 1;
	return g;
}

Graph Graph::with_edge_removed(NodeId u, NodeId v) const {
	if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
	Graph g = *this;
	auto& au = g.adjacency_[u];
	au.erase(std::lower_bound(au.begin(), au.end(), v));
	auto& av = g.adjacency_[v];
	av.erase(std::lower_bound(av.begin(), av.end(), u));
	g.edge_count_ = edge_count_ - 1;
	return g;
}

ComponentLabeling components(const Graph& g) {
	const std::size_t n = g.node_count();
	ComponentLabeling lab;
	lab.component_id.assign(n, ~std::uint32_t(0));
	std::deque<NodeId> queue;
	for (NodeId s = 0; s < n; ++s) {
		if (lab.component_id[s] != ~std::uint32_t(0)) continue;
		const auto cid = std::uint32_t(lab.component_sizes.size());
		std::size_t size = 0;
		lab.component_id[s] = cid;
		queue.push_back(s);
		while (!queue.empty()) {
			NodeId u = queue.front();
			queue.pop_front();
			++size;
			for (NodeId v : g.neighbors(u)) {
				if (lab.component_id[v] == ~std::uint32_t(0)) {
					lab.component_id[v] = cid;
					queue.push_back(v);
				}
			}
		}
		lab.component_sizes.push_back(size);
	}
	for (std::uint32_t cid = 0; cid < lab.component_sizes.size(); ++cid) {
		if (!lab.giant_id || lab.component_sizes[cid] > lab.component_sizes[*lab.giant_id])
			lab.giant_id = cid;
	}
	return lab;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
	if (source >= g.node_count()) throw std::out_of_range("bfs source out of range");
	std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
	std::deque<NodeId> queue;
	dist[source] = 0;
	queue.push_back(source);
	while (!queue.empty()) {
		NodeId u = queue.front();
		queue.pop_front();
		for (NodeId v : g.neighbors(u)) {
			if (dist[v] == kUnreachable) {
				dist[v] = dist[u] + 1;
				queue.push_back(v);
			}
		}
	}
	return dist;
}

Graph load_edge_list(std::istream& in) {
	std::size_t n = 0, m = 0;
	if (!(in >> n >> m)) throw std::runtime_error("bad edge-list header");
	std::vector<std::pair<NodeId, NodeId>> edges;
	edges.reserve(m);
	for (std::size_t i = 0; i < m; ++i) {
		NodeId u, v;
		if (!(in >> u >> v)) throw std::runtime_error("truncated edge list");
		if (u >= v) throw std::runtime_error("edge list requires u < v");
		edges.emplace_back(u, v);
	}
	return Graph::from_edges(n, edges);
}

Graph load_edge_list_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw std::runtime_error("cannot open " + path);
	return load_edge_list(in);
}

void dump_edge_list(const Graph& g, std::ostream& out) {
	out << g.node_count() << ' ' << g.edge_count() << '\n';
	for (NodeId u = 0; u < g.node_count(); ++u)
		for (NodeId v : g.neighbors(u))
			if (u < v) out << u << ' ' << v << '\n';
}

void dump_edge_list_file(const Graph& g, const std::string& path) {
	std::ofstream out(path);
	if (!out) throw std::runtime_error("cannot open " + path);
	dump_edge_list(g, out);
}

}  // namespace dsg
