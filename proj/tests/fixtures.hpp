#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "capsched/model.hpp"
#include "capsched/sinr.hpp"
#include "capsched/topogen.hpp"

namespace fixtures {

using namespace capsched;

inline Link link(LinkId id, Point s, Point r, std::optional<double> power = std::nullopt)
{
	return Link{id, s, r, power};
}

inline ModelParams params(double alpha = 3.0, double beta = 1.2, double noise = 0.0, double power = 1.0)
{
	return ModelParams{alpha, beta, noise, power};
}

/// `count` identical unit links (0,0) -> (1,0), ids 0..count-1.
inline Instance co_located(std::size_t count, double beta = 2.0)
{
	std::vector<Link> links;
	for (std::size_t i = 0; i < count; ++i)
		links.push_back(link(static_cast<LinkId>(i), {0, 0}, {1, 0}));
	return Instance(params(3.0, beta), links);
}

/// Links spaced far apart along the x axis: mutually compatible for any sane params.
inline Instance far_apart(std::size_t count, double spacing = 1000.0)
{
	std::vector<Link> links;
	for (std::size_t i = 0; i < count; ++i) {
		const double x = spacing * static_cast<double>(i);
		links.push_back(link(static_cast<LinkId>(i), {x, 0}, {x + 1, 0}));
	}
	return Instance(params(), links);
}

/// Random links: receivers uniform in a `field` square, senders within `l_max`.
/// Dense enough at small fields that interesting conflicts occur.
inline std::vector<Link> random_links(SplitMix64 &rng, std::size_t n, double field, double l_max,
		std::optional<std::pair<double, double>> power_range = std::nullopt)
{
	std::vector<Link> links;
	for (std::size_t i = 0; i < n; ++i) {
		const Point r{field * rng.uniform(), field * rng.uniform()};
		const Point s = uniform_in_disc(rng, r, l_max);
		std::optional<double> power;
		if (power_range)
			power = power_range->first + (power_range->second - power_range->first) * rng.uniform();
		links.push_back(link(static_cast<LinkId>(i), s, r, power));
	}
	return links;
}

/// Noise level small enough that every link up to length l_max stays alive,
/// at a tenth of the weakest possible signal.
inline double small_noise(double l_max, double alpha, double beta, double power = 1.0)
{
	return 0.1 * power / std::pow(l_max, alpha) / beta;
}

inline std::vector<Slot> all_subsets(const Instance &instance)
{
	const std::size_t n = instance.size();
	std::vector<Slot> out;
	for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
		std::vector<LinkId> ids;
		for (std::size_t i = 0; i < n; ++i)
			if (mask >> i & 1)
				ids.push_back(instance.links()[i].id);
		out.emplace_back(std::move(ids));
	}
	return out;
}

} // namespace fixtures
