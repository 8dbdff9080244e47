#include "capsched/schedulers.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "capsched/sinr.hpp"
#include "link_table.hpp"

namespace capsched {

using detail::LinkTable;

AlgoConstants compute_constants(const ModelParams &params)
{
	params.validate();
	const double alpha = params.alpha;
	const double beta = params.beta;

	AlgoConstants k;
	k.C = 72.0;
	const double decay = (alpha - 1.0) / (alpha - 2.0);
	const double required = (k.C + 1.0) * beta * decay;
	k.tau = 2.0 + std::max(2.0, std::pow(required, 1.0 / alpha));
	k.c = std::pow(k.tau, -alpha);
	k.c_hat = std::max(2.0, std::pow(32.0 * 9.0 * beta * decay, 1.0 / alpha));
	k.nu = 2.0 * std::pow(1.5 * k.tau, alpha);

	// Feasibility of A relies on (tau-2)^alpha >= (C+1)*beta*(alpha-1)/(alpha-2).
	if (std::pow(k.tau - 2.0, alpha) < required * (1.0 - 1e-12))
		throw InternalError("tau does not satisfy the dispersion inequality");
	return k;
}

namespace {

std::vector<std::size_t> sorted_by_length(const LinkTable &t, std::vector<std::size_t> idx)
{
	std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return t.shorter(a, b); });
	return idx;
}

double affectance_from(const LinkTable &t, const std::vector<std::size_t> &set, std::size_t v)
{
	double sum = 0.0;
	for (std::size_t w : set)
		sum += t.affectance(w, v);
	return sum;
}

// Algorithm A with an arbitrary acceptance threshold.
std::vector<std::size_t> greedy_a(const LinkTable &t, std::vector<std::size_t> candidates,
		double threshold)
{
	std::vector<std::size_t> accepted;
	for (std::size_t v : sorted_by_length(t, std::move(candidates)))
		if (affectance_from(t, accepted, v) <= threshold + kThresholdSlack)
			accepted.push_back(v);
	return accepted;
}

void require_uniform(const Instance &instance, const char *what)
{
	if (!instance.uniform_power())
		throw Unsupported(std::string(what)
				+ " requires uniform power; use schedule_nonuniform for per-link powers");
}

Schedule repeated(const LinkTable &t, std::vector<std::size_t> remaining, double threshold)
{
	Schedule out;
	while (!remaining.empty()) {
		std::vector<std::size_t> chosen = greedy_a(t, remaining, threshold);
		if (chosen.empty())
			throw InternalError("single-shot selection returned no links");
		std::unordered_set<std::size_t> taken(chosen.begin(), chosen.end());
		std::erase_if(remaining, [&](std::size_t i) { return taken.contains(i); });
		out.slots.push_back(t.slot_of(chosen));
	}
	return out;
}

std::vector<std::size_t> all_indices(std::size_t n)
{
	std::vector<std::size_t> idx(n);
	for (std::size_t i = 0; i < n; ++i)
		idx[i] = i;
	return idx;
}

void verify_slots(const Schedule &schedule, const Instance &instance)
{
	for (std::size_t s = 0; s < schedule.slots.size(); ++s) {
		const FeasibilityReport r = is_feasible(schedule.slots[s], instance);
		if (!r.feasible)
			throw VerificationFailed("slot " + std::to_string(s) + " is infeasible at link "
					+ std::to_string(*r.worst_link) + " (margin " + std::to_string(r.worst_margin) + ")");
	}
}

} // namespace

Slot single_shot_a(const Instance &instance, const Slot &candidates)
{
	require_uniform(instance, "algorithm A");
	const LinkTable t(instance);
	const AlgoConstants k = compute_constants(instance.params());
	return t.slot_of(greedy_a(t, t.indices_of(candidates), k.c));
}

Slot single_shot_a(const Instance &instance)
{
	return single_shot_a(instance, all_links(instance));
}

Slot single_shot_b(const Instance &instance, const Slot &candidates, SeparationRule rule)
{
	require_uniform(instance, "algorithm B");
	const LinkTable t(instance);
	const AlgoConstants k = compute_constants(instance.params());

	auto separated = [&](std::size_t w, std::size_t v) {
		const Link &lw = t.link(w);
		const Link &lv = t.link(v);
		const double dvv = t.length(v);
		if (rule == SeparationRule::literal)
			return dvv > k.c_hat * distance(lv.sender, lw.receiver);
		return std::min(distance(lw.sender, lv.receiver), distance(lv.sender, lw.receiver))
				> k.c_hat * dvv;
	};

	std::vector<std::size_t> accepted;
	for (std::size_t v : sorted_by_length(t, t.indices_of(candidates))) {
		if (affectance_from(t, accepted, v) > 2.0 / 3.0 + kThresholdSlack)
			continue;
		if (std::all_of(accepted.begin(), accepted.end(), [&](std::size_t w) { return separated(w, v); }))
			accepted.push_back(v);
	}

	Slot out = t.slot_of(accepted);
	const FeasibilityReport r = is_feasible(out, instance);
	if (!r.feasible)
		throw HeuristicInfeasible(*r.worst_link, "algorithm B produced an infeasible slot at link "
				+ std::to_string(*r.worst_link));
	return out;
}

Slot single_shot_b(const Instance &instance)
{
	return single_shot_b(instance, all_links(instance));
}

Schedule schedule_repeated(const Instance &instance)
{
	require_uniform(instance, "algorithm A");
	const LinkTable t(instance);
	return repeated(t, all_indices(t.size()), compute_constants(instance.params()).c);
}

Schedule schedule_repeated(const Instance &instance, const SingleShot &single_shot)
{
	Schedule out;
	std::vector<LinkId> remaining = all_links(instance).members;
	while (!remaining.empty()) {
		Slot chosen = single_shot(instance, Slot(remaining));
		if (chosen.empty())
			throw InternalError("single-shot selection returned no links");
		std::unordered_set<LinkId> taken(chosen.members.begin(), chosen.members.end());
		const std::size_t before = remaining.size();
		std::erase_if(remaining, [&](LinkId id) { return taken.contains(id); });
		if (before - remaining.size() != chosen.size())
			throw InternalError("single-shot selection returned links outside the candidates");
		out.slots.push_back(std::move(chosen));
	}
	return out;
}

std::size_t Refinement::max_blowup() const
{
	std::size_t best = 0;
	std::size_t run = 0;
	for (std::size_t i = 0; i < origin.size(); ++i) {
		run = (i > 0 && origin[i] == origin[i - 1]) ? run + 1 : 1;
		best = std::max(best, run);
	}
	return best;
}

namespace {

// First-fit by affectance from the part's current members.
std::vector<std::vector<std::size_t>> split_by_affectance(const LinkTable &t,
		const std::vector<std::size_t> &ordered, double threshold)
{
	std::vector<std::vector<std::size_t>> parts;
	for (std::size_t v : ordered) {
		auto fits = std::find_if(parts.begin(), parts.end(), [&](const auto &part) {
			return affectance_from(t, part, v) <= threshold;
		});
		if (fits == parts.end())
			parts.push_back({v});
		else
			fits->push_back(v);
	}
	return parts;
}

} // namespace

Refinement strengthen(const Schedule &schedule, double p, double p_prime, const Instance &instance)
{
	if (!(p > 0.0) || !(p_prime > p))
		throw InvalidParameters("strengthening needs 0 < p < p'");
	for (const Slot &slot : schedule.slots) {
		const FeasibilityReport r = is_p_signal(slot, p, instance);
		if (!r.feasible)
			throw PreconditionViolated(r.worst_link, "input is not " + std::to_string(p)
					+ "-signal at link " + std::to_string(*r.worst_link));
	}

	const LinkTable t(instance);
	const double threshold = 1.0 / (2.0 * p_prime);
	Refinement out;
	for (std::size_t s = 0; s < schedule.slots.size(); ++s) {
		std::vector<std::size_t> order = sorted_by_length(t, t.indices_of(schedule.slots[s]));
		std::reverse(order.begin(), order.end());
		for (auto &part : split_by_affectance(t, order, threshold)) {
			// Parts keep decreasing order; the second pass runs increasing.
			std::reverse(part.begin(), part.end());
			for (const auto &piece : split_by_affectance(t, part, threshold)) {
				out.schedule.slots.push_back(t.slot_of(piece));
				out.origin.push_back(s);
			}
		}
	}
	return out;
}

std::size_t disperse_bound(double q, double alpha)
{
	return static_cast<std::size_t>(std::ceil(std::pow(q + 2.0, alpha) - 1e-9));
}

std::size_t disperse_proof_bound(double q, double alpha, double beta)
{
	return static_cast<std::size_t>(std::ceil(std::pow(q + 2.0, alpha) / beta - 1e-9));
}

Refinement disperse(const Schedule &schedule, double q, const Instance &instance)
{
	if (!(q > 0.0))
		throw InvalidParameters("dispersion factor q must be positive");
	require_uniform(instance, "dispersion");
	for (std::size_t s = 0; s < schedule.slots.size(); ++s) {
		const FeasibilityReport r = is_feasible(schedule.slots[s], instance);
		if (!r.feasible)
			throw PreconditionViolated(r.worst_link, "input slot " + std::to_string(s)
					+ " is not SINR-feasible at link " + std::to_string(*r.worst_link));
	}

	const LinkTable t(instance);
	const double alpha = instance.params().alpha;
	Refinement out;
	for (std::size_t s = 0; s < schedule.slots.size(); ++s) {
		std::vector<std::vector<std::size_t>> parts;
		for (std::size_t v : sorted_by_length(t, t.indices_of(schedule.slots[s]))) {
			const Point &rv = t.link(v).receiver;
			const double clearance = (q * std::pow(t.noise_factor(v), 1.0 / alpha) + 2.0) * t.length(v);
			auto clear = [&](std::size_t w) {
				return distance(rv, t.link(w).sender) >= clearance
						&& distance(rv, t.link(w).receiver) >= clearance;
			};
			auto fits = std::find_if(parts.begin(), parts.end(), [&](const auto &part) {
				return std::all_of(part.begin(), part.end(), clear);
			});
			if (fits == parts.end())
				parts.push_back({v});
			else
				fits->push_back(v);
		}
		for (const auto &part : parts) {
			out.schedule.slots.push_back(t.slot_of(part));
			out.origin.push_back(s);
		}
	}
	return out;
}

std::vector<Slot> power_regimes(const Instance &instance, double base)
{
	if (!(base > 1.0))
		throw InvalidParameters("regime base must exceed 1");
	if (instance.empty())
		return {};
	double p_min = instance.power_of(instance.links().front());
	for (const Link &l : instance.links())
		p_min = std::min(p_min, instance.power_of(l));

	std::vector<std::vector<LinkId>> buckets;
	for (const Link &l : instance.links()) {
		const double ratio = std::log(instance.power_of(l) / p_min) / std::log(base);
		const auto k = static_cast<std::size_t>(std::floor(ratio + 1e-12));
		if (buckets.size() <= k)
			buckets.resize(k + 1);
		buckets[k].push_back(l.id);
	}
	std::vector<Slot> out;
	for (auto &b : buckets)
		if (!b.empty())
			out.emplace_back(std::move(b));
	return out;
}

namespace {

std::pair<double, double> power_range(const LinkTable &t, const std::vector<std::size_t> &idx)
{
	double lo = t.power(idx.front());
	double hi = lo;
	for (std::size_t i : idx) {
		lo = std::min(lo, t.power(i));
		hi = std::max(hi, t.power(i));
	}
	return {lo, hi};
}

} // namespace

Schedule schedule_nonuniform(const Instance &instance, const PowerStrategy &strategy)
{
	if (instance.empty())
		return {};
	Schedule out;
	switch (strategy.mode) {
	case PowerStrategy::Mode::uniform:
		out = schedule_repeated(instance);
		break;
	case PowerStrategy::Mode::scaled_threshold: {
		const LinkTable t(instance);
		const auto idx = all_indices(t.size());
		const auto [lo, hi] = power_range(t, idx);
		out = repeated(t, idx, compute_constants(instance.params()).c * lo / hi);
		break;
	}
	case PowerStrategy::Mode::power_regimes: {
		const LinkTable t(instance);
		const double c = compute_constants(instance.params()).c;
		for (const Slot &regime : power_regimes(instance, strategy.regime_base)) {
			const auto idx = t.indices_of(regime);
			const auto [lo, hi] = power_range(t, idx);
			Schedule part = repeated(t, idx, c * lo / hi);
			for (Slot &s : part.slots)
				out.slots.push_back(std::move(s));
		}
		break;
	}
	}
	verify_slots(out, instance);
	return out;
}

Schedule first_fit_baseline(const Instance &instance)
{
	const LinkTable t(instance);
	const ModelParams &params = instance.params();

	struct Open {
		std::vector<std::size_t> members;
		// Interference currently received by each member.
		std::vector<double> received;
	};
	auto meets = [&](std::size_t v, double interference) {
		return t.signal(v) >= params.beta * (interference + params.noise);
	};

	std::vector<Open> slots;
	for (std::size_t v = 0; v < t.size(); ++v) {
		bool placed = false;
		for (Open &slot : slots) {
			double own = 0.0;
			bool ok = true;
			for (std::size_t i = 0; i < slot.members.size() && ok; ++i) {
				const std::size_t u = slot.members[i];
				own += t.interference(u, v);
				ok = meets(u, slot.received[i] + t.interference(v, u));
			}
			if (!ok || !meets(v, own))
				continue;
			for (std::size_t i = 0; i < slot.members.size(); ++i)
				slot.received[i] += t.interference(v, slot.members[i]);
			slot.members.push_back(v);
			slot.received.push_back(own);
			placed = true;
			break;
		}
		if (!placed)
			slots.push_back(Open{{v}, {0.0}});
	}

	Schedule out;
	for (const Open &slot : slots)
		out.slots.push_back(t.slot_of(slot.members));
	return out;
}

} // namespace capsched
