#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "capsched/model.hpp"

namespace capsched {

/// SplitMix64. Seeds map to the same instances on every platform.
class SplitMix64 {
public:
	explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

	std::uint64_t next()
	{
		std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
		z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
		z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
		return z ^ (z >> 31);
	}

	/// Uniform on [0, 1) with 53 random bits.
	double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
	std::uint64_t state_;
};

/// Uniform point in the disc of radius `radius` around `center`, via r = R*sqrt(u).
/// u is drawn from (0, 1], so the center itself is never returned unless rounding
/// collapses a tiny radius.
Point uniform_in_disc(SplitMix64 &rng, const Point &center, double radius);

struct TopologySpec {
	enum class Family { random, clustered };

	Family family = Family::random;
	std::uint32_t n = 100;
	double field_size = 1000.0;
	double l_max = 20.0;
	// Defaults to max(1, n / 10) when absent.
	std::optional<std::uint32_t> n_clusters;
	double r_cluster = 10.0;
	std::uint64_t seed = 0;

	std::uint32_t cluster_count() const;
	/// Throws InvalidParameters on n == 0, non-positive sizes or radii.
	void validate() const;
};

/// Receivers uniform in the field square, each sender uniform in the disc of radius
/// l_max around its receiver. Senders may fall outside the field. Ids are 0..n-1.
Instance gen_random(const TopologySpec &spec, const ModelParams &params = {});

struct ClusteredTopology {
	Instance instance;
	std::vector<Point> centers;
	// cluster_of[i] is the cluster of link i.
	std::vector<std::uint32_t> cluster_of;
};

/// Cluster centers uniform in the field; link i belongs to cluster i mod n_clusters,
/// and both its endpoints are drawn independently and uniformly in that cluster's disc.
ClusteredTopology gen_clustered_with_clusters(const TopologySpec &spec, const ModelParams &params = {});
Instance gen_clustered(const TopologySpec &spec, const ModelParams &params = {});

/// Dispatches on spec.family.
Instance generate(const TopologySpec &spec, const ModelParams &params = {});

} // namespace capsched
