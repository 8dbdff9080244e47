#include "doctest.h"
#include "fixtures.hpp"

#include <cmath>

#include "capsched/sinr.hpp"

using namespace capsched;
using fixtures::link;
using fixtures::params;

TEST_CASE("distance")
{
	CHECK(distance({0, 0}, {0, 0}) == 0.0);
	CHECK(distance({0, 0}, {3, 4}) == 5.0);
	CHECK(distance({1, 0}, {3, 0}) == 2.0);
	CHECK(distance({3, 4}, {0, 0}) == distance({0, 0}, {3, 4}));
}

TEST_CASE("received power follows the path-loss law")
{
	CHECK(received_power({0, 0}, {2, 0}, 1.0, params(3.0)) == doctest::Approx(0.125));
	CHECK(received_power({0, 0}, {1, 0}, 1.0, params(2.5)) == 1.0);
	CHECK(received_power({0, 0}, {1, 0}, 1.0, params(4.0)) == 1.0);
	CHECK(received_power({0, 0}, {2, 0}, 8.0, params(3.0)) == doctest::Approx(1.0));
	CHECK_THROWS_AS(received_power({1, 1}, {1, 1}, 1.0, params()), Singularity);
}

TEST_CASE("noise factor")
{
	const Link unit = link(0, {0, 0}, {1, 0});
	CHECK(noise_factor(unit, params(3.0, 1.2, 0.0)) == 1.0);
	CHECK(noise_factor(link(1, {0, 0}, {17, 3}), params(3.0, 1.2, 0.0)) == 1.0);
	CHECK(noise_factor(unit, params(3.0, 1.0, 0.5)) == doctest::Approx(2.0));

	// P_vv = beta*N exactly.
	CHECK_THROWS_AS(noise_factor(unit, params(3.0, 2.0, 0.5)), InfeasibleLink);
	try {
		noise_factor(link(42, {0, 0}, {1, 0}), params(3.0, 2.0, 0.5));
	} catch (const InfeasibleLink &e) {
		CHECK(e.link() == 42);
	}
}

TEST_CASE("dead links are rejected when the instance is built")
{
	CHECK_THROWS_AS(Instance(params(3.0, 2.0, 0.5), {link(0, {0, 0}, {1, 0})}), InfeasibleLink);
	CHECK_THROWS_AS(Instance(params(), {link(0, {0, 0}, {0, 0})}), InputError);
	CHECK_THROWS_AS(Instance(params(), {link(0, {0, 0}, {1, 0}), link(0, {5, 0}, {6, 0})}), InputError);
	CHECK_THROWS_AS(Instance(params(), {link(0, {0, 0}, {NAN, 0})}), InputError);
	CHECK_THROWS_AS(Instance(params(2.0), {}), InvalidParameters);
	CHECK_THROWS_AS(Instance(params(3.0, 0.0), {}), InvalidParameters);
	CHECK_THROWS_AS(Instance(params(3.0, 1.0, -1.0), {}), InvalidParameters);
}

TEST_CASE("relative interference uses d(s_w, r_v)")
{
	// v has length 1 and its receiver at the origin; w's sender is 2 away from it.
	const Link v = link(1, {-1, 0}, {0, 0});
	const Link w = link(2, {2, 0}, {3, 0});
	CHECK(relative_interference(v, v, params()) == 0.0);
	CHECK(relative_interference(w, v, params(3.0)) == doctest::Approx(0.125));

	const Link v1 = link(1, {-1, 0}, {0, 0}, 1.0);
	const Link w2 = link(2, {2, 0}, {3, 0}, 2.0);
	CHECK(relative_interference(w2, v1, params(3.0)) == doctest::Approx(0.25));

	CHECK_THROWS_AS(relative_interference(link(3, {0, 0}, {5, 5}), v, params()), Singularity);
}

TEST_CASE("affectance")
{
	const Link v = link(1, {-1, 0}, {0, 0});
	const Link w = link(2, {2, 0}, {3, 0});
	const Link w_twin = link(3, {2, 0}, {3, 0});
	const Instance inst(params(3.0), {v, w, w_twin});

	CHECK(affectance(Slot{}, v, inst) == 0.0);
	CHECK(affectance(Slot({1}), v, inst) == 0.0);
	CHECK(affectance(Slot({2}), v, inst) == doctest::Approx(0.125));
	CHECK(affectance(w, v, inst.params()) == doctest::Approx(0.125));
	CHECK(affectance(Slot({1, 2, 3}), v, inst) == doctest::Approx(0.25));
}

TEST_CASE("feasibility examples")
{
	const Instance single(params(3.0, 1.2), {link(0, {0, 0}, {1, 0})});
	CHECK(is_feasible(Slot({0}), single).feasible);

	const Instance twins = fixtures::co_located(2, 2.0);
	const FeasibilityReport r = is_feasible(Slot({0, 1}), twins);
	CHECK_FALSE(r.feasible);
	REQUIRE(r.worst_link);
	CHECK(r.worst_margin < 0.0);
	CHECK_FALSE(is_feasible_by_affectance(Slot({0, 1}), twins).feasible);

	// Senders 9 and 11 link lengths from the other receiver; 2 * 2^(1/3) ~ 2.52 suffices.
	const Instance apart(params(3.0, 2.0), {link(0, {0, 0}, {1, 0}), link(1, {10, 0}, {11, 0})});
	CHECK(is_feasible(Slot({0, 1}), apart).feasible);
	CHECK(is_feasible_by_affectance(Slot({0, 1}), apart).feasible);

	const FeasibilityReport empty = is_feasible(Slot{}, apart);
	CHECK(empty.feasible);
	CHECK_FALSE(empty.worst_link);
}

TEST_CASE("p-signal examples")
{
	const Instance singles = fixtures::co_located(3);
	Schedule s;
	for (LinkId id : {0, 1, 2})
		s.slots.push_back(Slot({id}));
	for (double p : {0.5, 1.0, 10.0, 1e9})
		CHECK(is_p_signal(s, p, singles));

	// Max affectance is exactly 0.25 on link 1 (power 2 interferer at distance 2).
	const Instance quarter(params(3.0, 1.0), {link(1, {-1, 0}, {0, 0}, 1.0), link(2, {2, 0}, {3, 0}, 2.0)});
	CHECK(is_p_signal(Slot({1, 2}), 4.0, quarter).feasible);
	CHECK_FALSE(is_p_signal(Slot({1, 2}), 5.0, quarter).feasible);
	CHECK(is_p_signal(Slot({1, 2}), 4.0, quarter).worst_link == 1);

	const Instance apart(params(3.0, 2.0), {link(0, {0, 0}, {1, 0}), link(1, {10, 0}, {11, 0})});
	CHECK(is_p_signal(Slot({0, 1}), apart.params().beta, apart).feasible);
}

TEST_CASE("q-near and q-dispersed examples")
{
	const Link v = link(1, {-1, 0}, {0, 0});
	const Link w = link(2, {3, 0}, {4, 0});
	CHECK(is_q_near(w, v, 4.0, params()));
	CHECK_FALSE(is_q_near(w, v, 2.0, params()));

	const Instance one(params(), {v});
	for (double q : {0.1, 1.0, 100.0})
		CHECK(is_q_dispersed(Slot({1}), q, one));

	const Instance mixed(params(), {link(1, {0, 0}, {1, 0}, 1.0), link(2, {50, 0}, {51, 0}, 2.0)});
	CHECK_THROWS_AS(is_q_dispersed(Slot({1, 2}), 2.0, mixed), Unsupported);
}

namespace {

Instance random_instance(SplitMix64 &rng, std::size_t n, double noise_scale = 0.0, double alpha = 3.0)
{
	const double beta = 0.5 + 2.0 * rng.uniform();
	const double noise = noise_scale * fixtures::small_noise(10.0, alpha, beta);
	return Instance(params(alpha, beta, noise), fixtures::random_links(rng, n, 60.0, 10.0));
}

Slot random_slot(SplitMix64 &rng, const Instance &inst)
{
	std::vector<LinkId> ids;
	for (const Link &l : inst.links())
		if (rng.uniform() < 0.5)
			ids.push_back(l.id);
	return Slot(std::move(ids));
}

} // namespace

TEST_CASE("property: direct and affectance feasibility agree")
{
	SplitMix64 rng(101);
	int feasible = 0;
	int infeasible = 0;
	for (int trial = 0; trial < 400; ++trial) {
		const Instance inst = random_instance(rng, 2 + trial % 9, trial % 2 ? 1.0 : 0.0);
		const Slot slot = random_slot(rng, inst);
		const bool direct = is_feasible(slot, inst).feasible;
		CHECK(direct == is_feasible_by_affectance(slot, inst).feasible);
		(direct ? feasible : infeasible)++;
	}
	// Both outcomes have to be exercised for the check to mean anything.
	CHECK(feasible > 20);
	CHECK(infeasible > 20);
}

TEST_CASE("property: affectance is additive over disjoint sets")
{
	SplitMix64 rng(202);
	for (int trial = 0; trial < 200; ++trial) {
		const Instance inst = random_instance(rng, 8, 1.0);
		std::vector<LinkId> a;
		std::vector<LinkId> b;
		for (const Link &l : inst.links())
			(rng.uniform() < 0.5 ? a : b).push_back(l.id);
		std::vector<LinkId> both = a;
		both.insert(both.end(), b.begin(), b.end());
		for (const Link &v : inst.links()) {
			const double whole = affectance(Slot(both), v, inst);
			const double parts = affectance(Slot(a), v, inst) + affectance(Slot(b), v, inst);
			CHECK(std::abs(whole - parts) <= 1e-12 * std::max(1.0, whole));
		}
	}
}

TEST_CASE("property: single-link affectance closed form")
{
	SplitMix64 rng(303);
	for (int trial = 0; trial < 200; ++trial) {
		const Instance inst = random_instance(rng, 2, 1.0, 2.5 + 2.0 * rng.uniform());
		const Link &w = inst.links()[0];
		const Link &v = inst.links()[1];
		const double cv = noise_factor(v, inst.params());
		const double closed = cv * std::pow(v.length() / distance(w.sender, v.receiver), inst.params().alpha);
		CHECK(affectance(w, v, inst.params()) == doctest::Approx(closed).epsilon(1e-12));
	}
}

TEST_CASE("property: scale and power invariance without noise")
{
	SplitMix64 rng(404);
	for (int trial = 0; trial < 100; ++trial) {
		const Instance inst = random_instance(rng, 6);
		const double s = 0.01 + 50.0 * rng.uniform();
		const double k = 0.01 + 50.0 * rng.uniform();
		std::vector<Link> scaled;
		for (Link l : inst.links()) {
			l.sender = {l.sender.x * s, l.sender.y * s};
			l.receiver = {l.receiver.x * s, l.receiver.y * s};
			scaled.push_back(l);
		}
		const Instance big(inst.params(), scaled);
		ModelParams louder = inst.params();
		louder.default_power *= k;
		const Instance loud = inst.with_params(louder);
		const Slot all = all_links(inst);
		for (const Link &v : inst.links()) {
			const double a = affectance(all, v, inst);
			CHECK(affectance(all, big.link(v.id), big) == doctest::Approx(a).epsilon(1e-10));
			CHECK(affectance(all, v, loud) == doctest::Approx(a).epsilon(1e-12));
		}
	}
}

TEST_CASE("property: adding a link never lowers affectance on others")
{
	SplitMix64 rng(505);
	for (int trial = 0; trial < 200; ++trial) {
		const Instance inst = random_instance(rng, 7, 1.0);
		const Slot base = random_slot(rng, inst);
		for (const Link &extra : inst.links()) {
			std::vector<LinkId> grown = base.members;
			if (std::find(grown.begin(), grown.end(), extra.id) != grown.end())
				continue;
			grown.push_back(extra.id);
			for (const Link &v : inst.links())
				if (v.id != extra.id)
					CHECK(affectance(Slot(grown), v, inst) >= affectance(base, v, inst));
		}
	}
}

TEST_CASE("property: noise factor grows with link length under uniform power")
{
	SplitMix64 rng(606);
	for (int trial = 0; trial < 300; ++trial) {
		const Instance inst = random_instance(rng, 2, 1.0);
		const Link &a = inst.links()[0];
		const Link &b = inst.links()[1];
		const double ca = noise_factor(a, inst.params());
		const double cb = noise_factor(b, inst.params());
		CHECK(ca >= 1.0);
		CHECK(cb >= 1.0);
		if (a.length() >= b.length())
			CHECK(ca >= cb);
		else
			CHECK(cb >= ca);
	}
}

TEST_CASE("property: q-nearness is equivalent to single-link affectance above q^-alpha")
{
	SplitMix64 rng(707);
	int near = 0;
	for (int trial = 0; trial < 500; ++trial) {
		const Instance inst = random_instance(rng, 2, trial % 2 ? 1.0 : 0.0);
		const Link &w = inst.links()[0];
		const Link &v = inst.links()[1];
		const double q = 0.5 + 8.0 * rng.uniform();
		const bool is_near = is_q_near(w, v, q, inst.params());
		CHECK(is_near == (affectance(w, v, inst.params()) > std::pow(q, -inst.params().alpha)));
		near += is_near;
	}
	CHECK(near > 50);
	CHECK(near < 450);
}

TEST_CASE("property: a p-signal slot is p^(1/alpha)-dispersed")
{
	SplitMix64 rng(808);
	int checked = 0;
	for (int trial = 0; trial < 400; ++trial) {
		const Instance inst = random_instance(rng, 2 + trial % 5, 1.0);
		const Slot slot = random_slot(rng, inst);
		const double p = inst.params().beta * (trial % 3 == 0 ? 2.0 : 1.0);
		if (!is_p_signal(slot, p, inst).feasible)
			continue;
		++checked;
		CHECK(is_q_dispersed(slot, std::pow(p, 1.0 / inst.params().alpha), inst));
	}
	CHECK(checked > 100);
}
