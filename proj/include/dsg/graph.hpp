#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dsg {

using NodeId = std::uint32_t;

// Undirected simple graph over node ids 0..n-1. Adjacency lists are kept
// sorted by neighbor id so iteration order is deterministic under a fixed
// seed. Immutable after construction; edge edits produce a new graph.
class Graph {
public:
	Graph() = default;
	explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

	// Builds from an unordered edge list; throws on self-loops, duplicate
	// edges, or out-of-range endpoints.
	static Graph from_edges(std::size_t node_count,
	                        const std::vector<std::pair<NodeId, NodeId>>& edges);

	std::size_t node_count() const { return adjacency_.size(); }
	std::size_t edge_count() const { return edge_count_; }

	std::size_t degree(NodeId u) const;
	const std::vector<NodeId>& neighbors(NodeId u) const;
	bool has_edge(NodeId u, NodeId v) const;

	Graph with_edge_added(NodeId u, NodeId v) const;
	Graph with_edge_removed(NodeId u, NodeId v) const;

private:
	void check_node(NodeId u) const;

	std::vector<std::vector<NodeId>> adjacency_;
	std::size_t edge_count_ = 0;
};

struct ComponentLabeling {
	std::vector<std::uint32_t> component_id;  // per node
	std::vector<std::size_t> component_sizes;
	std::optional<std::uint32_t> giant_id;  // largest component, lowest id on ties

	std::size_t giant_size() const {
		return giant_id ? component_sizes[*giant_id] : 0;
	}
	bool in_giant(NodeId u) const {
		return giant_id && component_id[u] == *giant_id;
	}
};

// Connected components by iterative BFS.
ComponentLabeling components(const Graph& g);

constexpr std::uint32_t kUnreachable = ~std::uint32_t(0);

// Hop distances from source; unreachable nodes get kUnreachable.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

// Edge-list text format: first line "n m", then m lines "u v" with u < v.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void dump_edge_list(const Graph& g, std::ostream& out);
void dump_edge_list_file(const Graph& g, const std::string& path);

}  // namespace dsg
