#pragma once

// Per-link quantities cached by position in Instance::links(). Internal to the library.

#include <cmath>
#include <vector>

#include "capsched/model.hpp"
#include "capsched/sinr.hpp"

namespace capsched::detail {

class LinkTable {
public:
	explicit LinkTable(const Instance &instance) : instance_(&instance)
	{
		const auto &links = instance.links();
		const ModelParams &params = instance.params();
		length_.reserve(links.size());
		for (const Link &l : links) {
			const double power = instance.power_of(l);
			power_.push_back(power);
			length_.push_back(l.length());
			signal_.push_back(received_power(l.sender, l.receiver, power, params));
			noise_factor_.push_back(capsched::noise_factor(Link{l.id, l.sender, l.receiver, power}, params));
		}
	}

	const Instance &instance() const { return *instance_; }
	const Link &link(std::size_t i) const { return instance_->links()[i]; }
	std::size_t size() const { return length_.size(); }

	double length(std::size_t i) const { return length_[i]; }
	double power(std::size_t i) const { return power_[i]; }
	double signal(std::size_t i) const { return signal_[i]; }
	double noise_factor(std::size_t i) const { return noise_factor_[i]; }

	/// Received power at receiver v from sender w.
	double interference(std::size_t w, std::size_t v) const
	{
		if (w == v)
			return 0.0;
		return received_power(link(w).sender, link(v).receiver, power_[w], instance_->params());
	}

	/// a_w(l_v).
	double affectance(std::size_t w, std::size_t v) const
	{
		if (w == v)
			return 0.0;
		return noise_factor_[v] * interference(w, v) / signal_[v];
	}

	/// Strict order by (length, id); equal lengths are broken by id.
	bool shorter(std::size_t a, std::size_t b) const
	{
		if (length_[a] != length_[b])
			return length_[a] < length_[b];
		return link(a).id < link(b).id;
	}

	std::vector<std::size_t> indices_of(const Slot &slot) const
	{
		std::vector<std::size_t> out;
		out.reserve(slot.size());
		for (LinkId id : slot.members)
			out.push_back(instance_->index_of(id));
		return out;
	}

	Slot slot_of(const std::vector<std::size_t> &indices) const
	{
		std::vector<LinkId> ids;
		ids.reserve(indices.size());
		for (std::size_t i : indices)
			ids.push_back(link(i).id);
		return Slot(std::move(ids));
	}

private:
	const Instance *instance_;
	std::vector<double> length_;
	std::vector<double> power_;
	std::vector<double> signal_;
	std::vector<double> noise_factor_;
};

} // namespace capsched::detail
