#include "capsched/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "capsched/sinr.hpp"

namespace capsched {

double distance(const Point &p, const Point &q)
{
	return std::hypot(p.x - q.x, p.y - q.y);
}

void ModelParams::validate() const
{
	if (!(std::isfinite(alpha) && alpha > 2.0))
		throw InvalidParameters("alpha must be a finite value > 2, got " + std::to_string(alpha));
	if (!(std::isfinite(beta) && beta > 0.0))
		throw InvalidParameters("beta must be a finite value > 0, got " + std::to_string(beta));
	if (!(std::isfinite(noise) && noise >= 0.0))
		throw InvalidParameters("noise must be a finite value >= 0, got " + std::to_string(noise));
	if (!(std::isfinite(default_power) && default_power > 0.0))
		throw InvalidParameters("default_power must be a finite value > 0, got "
				+ std::to_string(default_power));
}

static bool finite(const Point &p)
{
	return std::isfinite(p.x) && std::isfinite(p.y);
}

Instance::Instance(ModelParams params, std::vector<Link> links)
	: params_(params), links_(std::move(links))
{
	params_.validate();
	index_.reserve(links_.size());
	for (std::size_t i = 0; i < links_.size(); ++i) {
		const Link &l = links_[i];
		const std::string name = "link " + std::to_string(l.id);
		if (!index_.emplace(l.id, i).second)
			throw InputError("duplicate " + name);
		if (!finite(l.sender) || !finite(l.receiver))
			throw InputError(name + " has non-finite coordinates");
		if (l.sender == l.receiver)
			throw InputError(name + " has coincident sender and receiver");
		if (l.power && !(std::isfinite(*l.power) && *l.power > 0.0))
			throw InputError(name + " has non-positive power");
		// Dead links are rejected here rather than silently dropped.
		noise_factor(Link{l.id, l.sender, l.receiver, power_of(l)}, params_);
	}
}

std::size_t Instance::index_of(LinkId id) const
{
	auto it = index_.find(id);
	if (it == index_.end())
		throw InputError("unknown link id " + std::to_string(id));
	return it->second;
}

bool Instance::uniform_power() const
{
	if (links_.empty())
		return true;
	const double p0 = power_of(links_.front());
	return std::all_of(links_.begin(), links_.end(),
			[&](const Link &l) { return power_of(l) == p0; });
}

Instance Instance::subset(std::span<const LinkId> ids) const
{
	std::unordered_set<LinkId> keep(ids.begin(), ids.end());
	std::vector<Link> out;
	for (const Link &l : links_)
		if (keep.contains(l.id))
			out.push_back(l);
	if (out.size() != keep.size())
		throw InputError("subset references ids outside the instance");
	return Instance(params_, std::move(out));
}

Slot::Slot(std::vector<LinkId> ids) : members(std::move(ids))
{
	std::sort(members.begin(), members.end());
	if (std::adjacent_find(members.begin(), members.end()) != members.end())
		throw InputError("slot contains a duplicate link id");
}

std::size_t Schedule::link_count() const
{
	std::size_t n = 0;
	for (const Slot &s : slots)
		n += s.size();
	return n;
}

Slot all_links(const Instance &instance)
{
	std::vector<LinkId> ids;
	ids.reserve(instance.size());
	for (const Link &l : instance.links())
		ids.push_back(l.id);
	return Slot(std::move(ids));
}

void check_partition(const Schedule &schedule, const Instance &instance)
{
	std::unordered_set<LinkId> seen;
	for (std::size_t s = 0; s < schedule.slots.size(); ++s) {
		for (LinkId id : schedule.slots[s].members) {
			if (!instance.contains(id))
				throw InputError("slot " + std::to_string(s) + " references unknown link "
						+ std::to_string(id));
			if (!seen.insert(id).second)
				throw InputError("link " + std::to_string(id) + " appears in more than one slot");
		}
	}
	if (seen.size() != instance.size()) {
		for (const Link &l : instance.links())
			if (!seen.contains(l.id))
				throw InputError("link " + std::to_string(l.id) + " is not scheduled");
	}
}

} // namespace capsched
