#include "dsg/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsg {

namespace {

// Maps a linear index over the lexicographic pair space {(u,v): u<v} back
// to its endpoints.
std::pair<NodeId, NodeId> pair_from_index(std::uint64_t idx, std::uint64_t n) {
	double nd = double(n);
	double disc = (nd - 0.5) * (nd - 0.5) - 2.0 * double(idx);
	auto u = std::uint64_t(std::max(0.0, std::floor(nd - 0.5 - std::sqrt(std::max(0.0, disc)))));
	auto offset = [n](std::uint64_t u) { return u * n - u * (u + 1) / 2; };
	while (u > 0 && offset(u) > idx) --u;
	while (offset(u + 1) <= idx) ++u;
	std::uint64_t v = u + 1 + (idx - offset(u));
	return {NodeId(u), NodeId(v)};
}

}  // namespace

Graph gen_erdos_renyi(std::size_t n, double z, SplitMix64& rng) {
	if (n < 1) throw std::invalid_argument("n must be >= 1");
	if (z > double(n - 1)) throw std::invalid_argument("z exceeds n-1");
	const double p = (n > 1) ? z / double(n - 1) : 0.0;
	std::vector<std::pair<NodeId, NodeId>> edges;
	const std::uint64_t total = std::uint64_t(n) * (n - 1) / 2;
	if (p >= 1.0) {
		for (NodeId u = 0; u + 1 < n; ++u)
			for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
	} else if (p > 0.0) {
		// Skip-length sampling: gaps between present edges are geometric
		const double log1mp = std::log1p(-p);
		std::uint64_t idx = 0;
		for (;;) {
			double u01 = rng.uniform01();
			double skip = std::floor(std::log1p(-u01) / log1mp);
			if (skip >= double(total)) break;  // also guards overflow
			idx += std::uint64_t(skip);
			if (idx >= total) break;
			edges.push_back(pair_from_index(idx, n));
			++idx;
		}
	}
	return Graph::from_edges(n, edges);
}

std::vector<std::pair<NodeId, NodeId>> pair_stubs(const std::vector<std::size_t>& degrees,
                                                  SplitMix64& rng) {
	std::vector<NodeId> balls;
	for (NodeId i = 0; i < degrees.size(); ++i)
		balls.insert(balls.end(), degrees[i], i);
	if (balls.size() % 2 != 0) throw std::invalid_argument("stub count must be even");
	// uniform shuffle then consuming consecutive pairs is equivalent to
	// withdrawing uniformly from the urn
	for (std::size_t i = balls.size(); i > 1; --i)
		std::swap(balls[i - 1], balls[rng.uniform_below(i)]);
	std::vector<std::pair<NodeId, NodeId>> edges;
	edges.reserve(balls.size() / 2);
	for (std::size_t i = 0; i + 1 < balls.size(); i += 2)
		edges.emplace_back(balls[i], balls[i + 1]);
	return edges;
}

Graph gen_power_law(std::size_t n, const DegreeModel& model, SplitMix64& rng) {
	if (n < 1) throw std::invalid_argument("n must be >= 1");
	// inverse-CDF sampler over degrees 1..min(max_degree, n-1)
	const std::size_t cap = std::min(model.max_degree(), n - 1);
	if (cap < 1) throw std::invalid_argument("n too small for power-law sampling");
	std::vector<double> cdf(cap + 1, 0.0);
	for (std::size_t a = 1; a <= cap; ++a) cdf[a] = cdf[a - 1] + model.pmf(a);

	auto sample_degree = [&]() -> std::size_t {
		for (;;) {
			double u = rng.uniform01();
			// draws landing beyond degree n-1 are resampled individually
			if (u >= cdf[cap]) continue;
			auto it = std::upper_bound(cdf.begin() + 1, cdf.end(), u);
			return std::size_t(it - cdf.begin());
		}
	};

	std::vector<std::size_t> degrees(n);
	const int kMaxAttempts = 1000000;
	int attempt = 0;
	for (;; ++attempt) {
		if (attempt >= kMaxAttempts)
			throw std::runtime_error("even-sum resampling did not terminate");
		std::size_t sum = 0;
		for (auto& d : degrees) {
			d = sample_degree();
			sum += d;
		}
		if (sum % 2 == 0) break;
	}

	auto raw = pair_stubs(degrees, rng);
	std::vector<std::pair<NodeId, NodeId>> edges;
	edges.reserve(raw.size());
	for (auto [u, v] : raw) {
		if (u == v) continue;  // discard self-loop
		if (u > v) std::swap(u, v);
		edges.emplace_back(u, v);
	}
	std::sort(edges.begin(), edges.end());
	edges.erase(std::unique(edges.begin(), edges.end()), edges.end());  // parallel edges
	return Graph::from_edges(n, edges);
}

Graph generate(const GenSpec& spec) {
	SplitMix64 rng(spec.seed);
	if (spec.model->kind() == ModelKind::Poisson)
		return gen_erdos_renyi(spec.n, spec.model->parameter(), rng);
	return gen_power_law(spec.n, *spec.model, rng);
}

}  // namespace dsg
