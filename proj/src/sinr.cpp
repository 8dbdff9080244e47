#include "capsched/sinr.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace capsched {

double received_power(const Point &source_sender, const Point &target_receiver,
		double power, const ModelParams &params)
{
	const double d = distance(source_sender, target_receiver);
	if (d == 0.0)
		throw Singularity("sender coincides with receiver at (" + std::to_string(target_receiver.x)
				+ ", " + std::to_string(target_receiver.y) + ")");
	return power / std::pow(d, params.alpha);
}

double noise_factor(const Link &link, const ModelParams &params)
{
	const double signal = received_power(link.sender, link.receiver,
			link.power.value_or(params.default_power), params);
	const double floor = params.beta * params.noise;
	if (signal <= floor)
		throw InfeasibleLink(link.id, "link " + std::to_string(link.id)
				+ " cannot meet the SINR threshold even alone (signal "
				+ std::to_string(signal) + " <= beta*N " + std::to_string(floor) + ")");
	return 1.0 / (1.0 - floor / signal);
}

double relative_interference(const Link &w, const Link &v, const ModelParams &params)
{
	if (w.id == v.id)
		return 0.0;
	const double interference = received_power(w.sender, v.receiver,
			w.power.value_or(params.default_power), params);
	const double signal = received_power(v.sender, v.receiver,
			v.power.value_or(params.default_power), params);
	return interference / signal;
}

double affectance(const Link &w, const Link &v, const ModelParams &params)
{
	if (w.id == v.id)
		return 0.0;
	return noise_factor(v, params) * relative_interference(w, v, params);
}

double affectance(const Slot &set, const Link &v, const Instance &instance)
{
	const ModelParams &params = instance.params();
	double sum = 0.0;
	for (LinkId id : set.members)
		sum += relative_interference(instance.link(id), v, params);
	if (sum == 0.0)
		return 0.0;
	return noise_factor(v, params) * sum;
}

namespace {

template<class MarginFn>
FeasibilityReport worst_over(const Slot &slot, const Instance &instance, MarginFn margin_of)
{
	FeasibilityReport report;
	report.worst_margin = std::numeric_limits<double>::infinity();
	for (LinkId id : slot.members) {
		const double m = margin_of(instance.link(id));
		if (!report.worst_link || m < report.worst_margin) {
			report.worst_margin = m;
			report.worst_link = id;
		}
	}
	if (!report.worst_link)
		report.worst_margin = 0.0;
	report.feasible = report.worst_margin >= -kThresholdSlack;
	return report;
}

} // namespace

FeasibilityReport is_feasible(const Slot &slot, const Instance &instance)
{
	const ModelParams &params = instance.params();
	return worst_over(slot, instance, [&](const Link &v) {
		const double signal = received_power(v.sender, v.receiver, instance.power_of(v), params);
		if (signal <= params.beta * params.noise)
			return -std::numeric_limits<double>::infinity();
		double interference = 0.0;
		for (LinkId wid : slot.members) {
			if (wid == v.id)
				continue;
			const Link &w = instance.link(wid);
			interference += received_power(w.sender, v.receiver, instance.power_of(w), params);
		}
		return (signal - params.beta * (interference + params.noise)) / signal;
	});
}

FeasibilityReport is_feasible_by_affectance(const Slot &slot, const Instance &instance)
{
	return is_feasible_perturbed(slot, instance, 1.0);
}

FeasibilityReport is_feasible_perturbed(const Slot &slot, const Instance &instance, double theta)
{
	const double limit = 1.0 / instance.params().beta;
	return worst_over(slot, instance, [&](const Link &v) {
		return limit - theta * affectance(slot, v, instance);
	});
}

FeasibilityReport is_p_signal(const Slot &slot, double p, const Instance &instance)
{
	if (!(p > 0.0))
		throw InvalidParameters("signal level p must be positive");
	return worst_over(slot, instance, [&](const Link &v) {
		return 1.0 / p - affectance(slot, v, instance);
	});
}

bool is_p_signal(const Schedule &schedule, double p, const Instance &instance)
{
	for (const Slot &s : schedule.slots)
		if (!is_p_signal(s, p, instance).feasible)
			return false;
	return true;
}

bool is_q_near(const Link &w, const Link &v, double q, const ModelParams &params)
{
	const double cv = noise_factor(v, params);
	return distance(w.sender, v.receiver) < q * std::pow(cv, 1.0 / params.alpha) * v.length();
}

bool is_q_dispersed(const Slot &set, double q, const Instance &instance)
{
	if (set.members.size() < 2)
		return true;
	const double p0 = instance.power_of(instance.link(set.members.front()));
	for (LinkId id : set.members)
		if (instance.power_of(instance.link(id)) != p0)
			throw Unsupported("dispersion is only defined for uniform power assignments");
	for (LinkId wid : set.members) {
		const Link &w = instance.link(wid);
		for (LinkId vid : set.members)
			if (vid != wid && is_q_near(w, instance.link(vid), q, instance.params()))
				return false;
	}
	return true;
}

} // namespace capsched
