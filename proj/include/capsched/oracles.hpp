#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stop_token>

#include "capsched/model.hpp"

namespace capsched {

// Exhaustive solvers for small instances. They exist to check the approximation
// algorithms, not to be fast.

struct OracleLimits {
	std::size_t max_links_subset = 20;
	std::size_t max_links_schedule = 12;
};

/// Maximum-cardinality SINR-feasible subset. Among optimal subsets the
/// lexicographically smallest ascending id sequence is returned.
Slot max_feasible_subset(const Instance &instance, const OracleLimits &limits = {},
		std::stop_token stop = {});

/// Maximum-cardinality subset in which every member's affectance is at most 1/p.
Slot max_p_signal_subset(const Instance &instance, double p, const OracleLimits &limits = {},
		std::stop_token stop = {});

/// Calls `visit` for every nonempty p-signal subset (in ascending-id DFS order).
/// Enumeration only extends p-signal sets, since subsets of p-signal sets are p-signal.
void for_each_p_signal_subset(const Instance &instance, double p,
		const std::function<void(const Slot &)> &visit, const OracleLimits &limits = {},
		std::stop_token stop = {});

/// Minimum schedule by dynamic programming over subsets. With `p` set, slots must be
/// p-signal instead of merely feasible, giving psi_p. The witness is deterministic.
Schedule min_schedule(const Instance &instance, std::optional<double> p = std::nullopt,
		const OracleLimits &limits = {}, std::stop_token stop = {});

/// psi(L), or psi_p(L) when `p` is given.
inline std::size_t min_slot_count(const Instance &instance, std::optional<double> p = std::nullopt,
		const OracleLimits &limits = {})
{
	return min_schedule(instance, p, limits).slot_count();
}

} // namespace capsched
