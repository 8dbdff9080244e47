#pragma once

#include <optional>
#include <span>

#include "capsched/model.hpp"

namespace capsched {

/// Absolute slack applied to every threshold comparison.
inline constexpr double kThresholdSlack = 1e-12;

/// power / d^alpha. Throws Singularity when the points coincide.
double received_power(const Point &source_sender, const Point &target_receiver,
		double power, const ModelParams &params);

/// c_v = 1 / (1 - beta*N/P_vv). Throws InfeasibleLink when P_vv <= beta*N.
double noise_factor(const Link &link, const ModelParams &params);

// Interference of w on v is always measured at v's receiver from w's sender,
// i.e. over d(s_w, r_v).

/// Power received at r_v from s_w over power received at r_v from s_v; 0 when w is v.
double relative_interference(const Link &w, const Link &v, const ModelParams &params);

/// c_v times the summed relative interference of `set` on `v`. The self term is 0.
double affectance(const Slot &set, const Link &v, const Instance &instance);
double affectance(const Link &w, const Link &v, const ModelParams &params);

struct FeasibilityReport {
	bool feasible = true;
	// Link with the smallest margin; empty for an empty slot.
	std::optional<LinkId> worst_link;
	// Dimensionless; >= 0 means the link meets its threshold.
	double worst_margin = 0.0;
};

/// The SINR condition evaluated directly from received powers. The margin of link v is
/// (P_vv - beta*(I_v + N)) / P_vv.
FeasibilityReport is_feasible(const Slot &slot, const Instance &instance);

/// The affectance criterion: a_S(v) <= 1/beta for every member. The margin is
/// 1/beta - a_S(v).
FeasibilityReport is_feasible_by_affectance(const Slot &slot, const Instance &instance);

/// Feasibility when every affectance may be inflated by a factor theta >= 1:
/// theta * a_S(v) <= 1/beta.
FeasibilityReport is_feasible_perturbed(const Slot &slot, const Instance &instance, double theta);

/// Every member's in-slot affectance is at most 1/p.
FeasibilityReport is_p_signal(const Slot &slot, double p, const Instance &instance);
bool is_p_signal(const Schedule &schedule, double p, const Instance &instance);

/// d(s_w, r_v) < q * c_v^(1/alpha) * d_vv.
bool is_q_near(const Link &w, const Link &v, double q, const ModelParams &params);

/// No ordered pair of distinct members is q-near. Requires uniform power over
/// the set (throws Unsupported otherwise).
bool is_q_dispersed(const Slot &set, double q, const Instance &instance);

} // namespace capsched
