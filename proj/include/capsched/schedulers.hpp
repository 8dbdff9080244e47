#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "capsched/model.hpp"

namespace capsched {

/// Constants of the single-shot algorithms, all derived from ModelParams.
struct AlgoConstants {
	double C = 72.0;
	// Dispersion scale; always >= 4.
	double tau = 0.0;
	// Acceptance threshold of algorithm A, tau^-alpha.
	double c = 0.0;
	// Separation factor of algorithm B.
	double c_hat = 0.0;
	// Signal level OPT is compared at: 2 * (3*tau/2)^alpha.
	double nu = 0.0;
};

/// Throws InvalidParameters for alpha <= 2 (or otherwise invalid params).
AlgoConstants compute_constants(const ModelParams &params);

/// How algorithm B tests separation between a candidate v and an accepted w.
enum class SeparationRule {
	// min(d(s_w, r_v), d(s_v, r_w)) > c_hat * d_vv
	symmetric,
	// d_vv > c_hat * d(s_v, r_w), as typeset in the original pseudocode
	literal,
};

/// Algorithm A: scan links by non-decreasing length (ties by id) and keep each one
/// whose affectance from the links kept so far is at most c. Requires uniform power.
Slot single_shot_a(const Instance &instance);
Slot single_shot_a(const Instance &instance, const Slot &candidates);

/// Algorithm B, the heuristic variant of A. The result is checked with the SINR condition;
/// a violation raises HeuristicInfeasible naming the worst link.
Slot single_shot_b(const Instance &instance, const Slot &candidates,
		SeparationRule rule = SeparationRule::symmetric);
Slot single_shot_b(const Instance &instance);

using SingleShot = std::function<Slot(const Instance &, const Slot &)>;

/// Repeatedly takes the single-shot selection of the still-unscheduled links as the
/// next slot. Defaults to algorithm A.
Schedule schedule_repeated(const Instance &instance);
Schedule schedule_repeated(const Instance &instance, const SingleShot &single_shot);

/// A refined schedule plus, for every output slot, the index of the input slot it
/// was carved from.
struct Refinement {
	Schedule schedule;
	std::vector<std::size_t> origin;

	/// Largest number of output slots produced from a single input slot.
	std::size_t max_blowup() const;
};

/// Refines a p-signal schedule into a p'-signal one. Each slot is split first-fit
/// in decreasing (length, id) order, admitting a link to a part while the
/// affectance on it from that part is at most 1/(2p'); each part is then split
/// again the same way in increasing order. Blow-up per slot is at most ceil(2p'/p)^2.
Refinement strengthen(const Schedule &schedule, double p, double p_prime, const Instance &instance);

/// Refines a feasible uniform-power schedule into a q-dispersed one. Within a slot,
/// links are taken by increasing length and placed first-fit into the first part
/// where r_v is at least (q*c_v^(1/alpha) + 2)*d_vv away from every sender and
/// receiver already there.
Refinement disperse(const Schedule &schedule, double q, const Instance &instance);

inline std::size_t strengthen_bound(double p, double p_prime)
{
	const auto k = static_cast<std::size_t>(std::ceil(2.0 * p_prime / p - 1e-12));
	return k * k;
}

/// Blow-up bound stated for dispersion: ceil((q+2)^alpha).
std::size_t disperse_bound(double q, double alpha);
/// Tighter bound reached by the counting argument: ceil((q+2)^alpha / beta).
std::size_t disperse_proof_bound(double q, double alpha, double beta);

struct PowerStrategy {
	enum class Mode { uniform, scaled_threshold, power_regimes };

	Mode mode = Mode::uniform;
	double regime_base = 2.0;
};

/// Groups link ids by floor(log_base(P_v / P_min)), in increasing regime order.
/// Empty regimes are omitted.
std::vector<Slot> power_regimes(const Instance &instance, double base);

/// Schedules links with per-link powers.
///
/// - uniform: schedule_repeated with algorithm A (uniform power required).
/// - scaled_threshold: algorithm A with threshold c * P_min / P_max, affectance
///   computed with the true powers.
/// - power_regimes: each regime is scheduled on its own with the threshold scaled
///   by that regime's P_min / P_max, and the schedules are concatenated.
///
/// Every slot is verified with the SINR condition; a violation raises VerificationFailed.
Schedule schedule_nonuniform(const Instance &instance, const PowerStrategy &strategy);

/// First-fit in input order: each link joins the first slot that stays feasible
/// with it, or opens a new one. A plain baseline for comparison.
Schedule first_fit_baseline(const Instance &instance);

} // namespace capsched
