#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "capsched/errors.hpp"

namespace capsched {

struct Point {
	double x = 0.0;
	double y = 0.0;

	friend bool operator==(const Point &, const Point &) = default;
};

double distance(const Point &p, const Point &q);

struct Link {
	LinkId id = 0;
	Point sender;
	Point receiver;
	// Absent means the instance-wide default power.
	std::optional<double> power;

	double length() const { return distance(sender, receiver); }

	friend bool operator==(const Link &, const Link &) = default;
};

/// Physical constants of the SINR model.
struct ModelParams {
	double alpha = 3.0;
	double beta = 1.2;
	double noise = 0.0;
	double default_power = 1.0;

	/// Throws InvalidParameters unless alpha > 2, beta > 0, noise >= 0, power > 0.
	void validate() const;

	friend bool operator==(const ModelParams &, const ModelParams &) = default;
};

/// An immutable set of links under one parameter set.
///
/// Construction rejects duplicate ids, non-finite coordinates, zero-length links,
/// non-positive powers, and dead links whose signal alone cannot exceed beta*N.
class Instance {
public:
	Instance(ModelParams params, std::vector<Link> links);

	const ModelParams &params() const { return params_; }
	const std::vector<Link> &links() const { return links_; }
	std::size_t size() const { return links_.size(); }
	bool empty() const { return links_.empty(); }

	bool contains(LinkId id) const { return index_.contains(id); }
	/// Position of `id` in links(); throws InputError for unknown ids.
	std::size_t index_of(LinkId id) const;
	const Link &link(LinkId id) const { return links_[index_of(id)]; }

	double power_of(const Link &l) const { return l.power.value_or(params_.default_power); }
	bool uniform_power() const;

	/// The same links under different model parameters (revalidated).
	Instance with_params(const ModelParams &params) const { return Instance(params, links_); }
	/// Restriction to the given ids, in instance order.
	Instance subset(std::span<const LinkId> ids) const;

private:
	ModelParams params_;
	std::vector<Link> links_;
	std::unordered_map<LinkId, std::size_t> index_;
};

/// Links that transmit concurrently. Members are kept in ascending id order.
struct Slot {
	std::vector<LinkId> members;

	Slot() = default;
	explicit Slot(std::vector<LinkId> ids);

	std::size_t size() const { return members.size(); }
	bool empty() const { return members.empty(); }

	friend bool operator==(const Slot &, const Slot &) = default;
};

struct Schedule {
	std::vector<Slot> slots;

	std::size_t slot_count() const { return slots.size(); }
	std::size_t link_count() const;

	friend bool operator==(const Schedule &, const Schedule &) = default;
};

/// All ids of the instance as one slot.
Slot all_links(const Instance &instance);

/// Throws InputError unless the schedule's slots are disjoint, reference only ids
/// of `instance`, and together cover every link of it.
void check_partition(const Schedule &schedule, const Instance &instance);

} // namespace capsched
