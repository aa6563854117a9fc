#pragma once

#include <cstdint>
#include <vector>

#include "dsg/graph.hpp"
#include "dsg/rng.hpp"

namespace dsg {

struct DisseminationOutcome {
	std::vector<NodeId> reached;       // includes the originator
	std::vector<std::uint32_t> dist;   // D-hop distance per node, kUnreachable if not reached
	std::uint64_t messages = 0;        // all attempted transmissions, failed ones included
	std::uint64_t distance_sum = 0;    // sum of D-distances over reached nodes
	NodeId originator = 0;
};

// Flooding of a single datum over d: the originator transmits on every
// incident edge; every node does the same upon first successful receipt.
// Each directed transmission independently succeeds with probability gamma;
// nothing is retransmitted to make up for failures.
DisseminationOutcome disseminate(const Graph& d, NodeId originator, double gamma,
                                 SplitMix64& rng);

struct MetricSample {
	double pn = 0;  // |reached| / |GCC_G|
	double pm = 0;  // messages / (2(|GCC_G|-1)), the spanning-tree baseline
	double pt = 0;  // mean D-distance over reached / mean G-distance over GCC_G
	double zd = 0;  // mean D-degree of GCC_G members (per graph, run-independent)
};

MetricSample measure(const Graph& g, const Graph& d, const DisseminationOutcome& outcome,
                     const ComponentLabeling& labels_g);

// The run-independent part of MetricSample.
double mean_d_degree_over_gcc(const Graph& d, const ComponentLabeling& labels_g);

}  // namespace dsg
