#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dsg/graph.hpp"
#include "dsg/rng.hpp"

namespace dsg {

enum class Heuristic { Uniform, DegreeBased };

// Per-node local choices. choice_count is 0 for isolated nodes, otherwise 1
// or 2 (second choice made with probability alpha, may repeat the first).
// Rows are drawn from substreams keyed by (seed, node, epoch) so a single
// row can be regenerated without touching the others.
struct ChoiceTable {
	double alpha = 0;
	std::uint64_t seed = 0;
	std::vector<std::uint8_t> choice_count;          // c_u
	std::vector<std::array<NodeId, 2>> chosen;       // C_u, chosen[u][1] unused if |C_u|=1
	std::vector<std::uint8_t> chosen_size;           // |C_u|
	std::vector<std::uint32_t> epoch;

	std::size_t size() const { return choice_count.size(); }
	bool chose(NodeId u, NodeId v) const {
		return chosen_size[u] >= 1 &&
		       (chosen[u][0] == v || (chosen_size[u] == 2 && chosen[u][1] == v));
	}
};

ChoiceTable make_choices(const Graph& g, Heuristic h, double alpha, std::uint64_t seed);

// D has the same node set as g; edge (u,v) present iff u chose v or v chose u.
Graph build_subgraph(const Graph& g, const ChoiceTable& t);

enum class EdgeOp { Add, Remove };

struct UpdateResult {
	Graph graph;  // g with the edge applied
	ChoiceTable choices;
};

// Applies the edge change and remakes choices only where locality requires:
// rows of u and v for the uniform approach, plus all their neighbors for the
// degree-based one. Untouched rows are copied bit-identical.
UpdateResult local_update(const Graph& g, const ChoiceTable& t, Heuristic h,
                          NodeId u, NodeId v, EdgeOp op);

}  // namespace dsg
