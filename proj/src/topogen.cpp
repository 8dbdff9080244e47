#include "capsched/topogen.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace capsched {

Point uniform_in_disc(SplitMix64 &rng, const Point &center, double radius)
{
	const double r = radius * std::sqrt(1.0 - rng.uniform());
	const double theta = 2.0 * std::numbers::pi * rng.uniform();
	return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

std::uint32_t TopologySpec::cluster_count() const
{
	if (n_clusters)
		return *n_clusters;
	return std::max<std::uint32_t>(1, n / 10);
}

void TopologySpec::validate() const
{
	if (n == 0)
		throw InvalidParameters("topology needs at least one link");
	if (!(field_size > 0.0))
		throw InvalidParameters("field_size must be positive");
	if (family == Family::random && !(l_max > 0.0))
		throw InvalidParameters("l_max must be positive");
	if (family == Family::clustered) {
		if (!(r_cluster > 0.0))
			throw InvalidParameters("r_cluster must be positive");
		if (cluster_count() == 0)
			throw InvalidParameters("n_clusters must be at least 1");
	}
}

Instance gen_random(const TopologySpec &spec, const ModelParams &params)
{
	spec.validate();
	SplitMix64 rng(spec.seed);
	std::vector<Link> links;
	links.reserve(spec.n);
	for (std::uint32_t i = 0; i < spec.n; ++i) {
		const Point receiver{spec.field_size * rng.uniform(), spec.field_size * rng.uniform()};
		Point sender = uniform_in_disc(rng, receiver, spec.l_max);
		while (sender == receiver)
			sender = uniform_in_disc(rng, receiver, spec.l_max);
		links.push_back(Link{i, sender, receiver, std::nullopt});
	}
	return Instance(params, std::move(links));
}

ClusteredTopology gen_clustered_with_clusters(const TopologySpec &spec, const ModelParams &params)
{
	spec.validate();
	SplitMix64 rng(spec.seed);
	const std::uint32_t k = spec.cluster_count();
	std::vector<Point> centers;
	centers.reserve(k);
	for (std::uint32_t c = 0; c < k; ++c)
		centers.push_back({spec.field_size * rng.uniform(), spec.field_size * rng.uniform()});

	std::vector<Link> links;
	std::vector<std::uint32_t> cluster_of;
	links.reserve(spec.n);
	for (std::uint32_t i = 0; i < spec.n; ++i) {
		const std::uint32_t c = i % k;
		Point sender;
		Point receiver;
		do {
			sender = uniform_in_disc(rng, centers[c], spec.r_cluster);
			receiver = uniform_in_disc(rng, centers[c], spec.r_cluster);
		} while (sender == receiver);
		links.push_back(Link{i, sender, receiver, std::nullopt});
		cluster_of.push_back(c);
	}
	return {Instance(params, std::move(links)), std::move(centers), std::move(cluster_of)};
}

Instance gen_clustered(const TopologySpec &spec, const ModelParams &params)
{
	return gen_clustered_with_clusters(spec, params).instance;
}

Instance generate(const TopologySpec &spec, const ModelParams &params)
{
	return spec.family == TopologySpec::Family::random ? gen_random(spec, params)
			: gen_clustered(spec, params);
}

} // namespace capsched
