#pragma once

#include <cstdint>

#include "dsg/degree_model.hpp"
#include "dsg/graph.hpp"
#include "dsg/rng.hpp"

namespace dsg {

struct GenSpec {
	std::size_t n;
	const DegreeModel* model;
	std::uint64_t seed;
};

// G(n, p) with p = z/(n-1); geometric skipping over the pair index space,
// O(n + m) expected time.
Graph gen_erdos_renyi(std::size_t n, double z, SplitMix64& rng);

// Uniform pairing of labeled stubs ("balls in an urn"): returns the raw
// multigraph edge list, self-loops and parallel edges included. Requires an
// even stub count.
std::vector<std::pair<NodeId, NodeId>> pair_stubs(const std::vector<std::size_t>& degrees,
                                                  SplitMix64& rng);

// Configuration model: i.i.d. degree sequence (values capped at n-1),
// resampled until the sum is even, stubs paired by pair_stubs, self-loops
// and parallel edges discarded.
Graph gen_power_law(std::size_t n, const DegreeModel& model, SplitMix64& rng);

Graph generate(const GenSpec& spec);

}  // namespace dsg
