#pragma once

#include <cstdint>

namespace dsg {

// SplitMix64: seedable 64-bit generator with cheap construction, used for
// per-replicate and per-node substreams. Substreams are derived by hashing
// the parent seed together with stream keys, so row-level regeneration is
// reproducible without storing engine state.
class SplitMix64 {
public:
	using result_type = std::uint64_t;

	explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

	static constexpr result_type min() { return 0; }
	static constexpr result_type max() { return ~std::uint64_t(0); }

	result_type operator()() {
		std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
		return z ^ (z >> 31);
	}

	// Uniform integer in [0, n), n >= 1. Rejection sampling keeps the
	// draw exact and platform-independent.
	std::uint64_t uniform_below(std::uint64_t n) {
		std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
		for (;;) {
			std::uint64_t x = (*this)();
			if (x >= threshold) return x % n;
		}
	}

	// Uniform double in [0, 1) with 53 bits of precision.
	double uniform01() { return double((*this)() >> 11) * 0x1.0p-53; }

	bool bernoulli(double p) { return uniform01() < p; }

private:
	std::uint64_t state_;
};

// Mixes a value into a seed; chain calls to derive hierarchical substreams
// (master -> point -> graph -> run, or seed -> node -> epoch).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key) {
	std::uint64_t z = seed ^ (key + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t k1) {
	return SplitMix64(mix_seed(seed, k1));
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2) {
	return SplitMix64(mix_seed(mix_seed(seed, k1), k2));
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2,
                            std::uint64_t k3) {
	return SplitMix64(mix_seed(mix_seed(mix_seed(seed, k1), k2), k3));
}

}  // namespace dsg
