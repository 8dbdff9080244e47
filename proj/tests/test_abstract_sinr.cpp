#include "doctest.h"
#include "fixtures.hpp"

#include <set>

#include "capsched/abstract_sinr.hpp"
#include "capsched/sinr.hpp"

using namespace capsched;
using namespace capsched::abstract;

namespace {

std::vector<std::size_t> members_of(std::uint64_t mask, std::size_t n)
{
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < n; ++i)
		if (mask >> i & 1)
			out.push_back(i);
	return out;
}

std::size_t max_feasible_size(const GainMatrix &m)
{
	std::size_t best = 0;
	for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.size()); ++mask) {
		const auto set = members_of(mask, m.size());
		if (abstract_feasible(m, set))
			best = std::max(best, set.size());
	}
	return best;
}

Graph complete(std::size_t n)
{
	std::vector<std::pair<std::size_t, std::size_t>> edges;
	for (std::size_t u = 0; u < n; ++u)
		for (std::size_t v = u + 1; v < n; ++v)
			edges.emplace_back(u, v);
	return Graph(n, edges);
}

Graph random_graph(SplitMix64 &rng, std::size_t n, double density)
{
	std::vector<std::pair<std::size_t, std::size_t>> edges;
	for (std::size_t u = 0; u < n; ++u)
		for (std::size_t v = u + 1; v < n; ++v)
			if (rng.uniform() < density)
				edges.emplace_back(u, v);
	return Graph(n, edges);
}

} // namespace

TEST_CASE("reduction matrix entries")
{
	const GainMatrix k3 = graph_to_instance(complete(3));
	CHECK(k3.size() == 3);
	CHECK(k3.threshold() == 1.0);
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j)
			CHECK(k3(i, j) == (i == j ? 0.0 : 2.0));

	const GainMatrix empty5 = graph_to_instance(Graph(5));
	for (std::size_t i = 0; i < 5; ++i)
		for (std::size_t j = 0; j < 5; ++j)
			CHECK(empty5(i, j) == (i == j ? 0.0 : 0.2));

	const GainMatrix one = graph_to_instance(Graph(1));
	CHECK(one.size() == 1);
	CHECK(one.entries() == std::vector<double>{0.0});

	CHECK_THROWS_AS(graph_to_instance(Graph(0)), InputError);
}

TEST_CASE("abstract affectance and feasibility examples")
{
	const GainMatrix empty6 = graph_to_instance(Graph(6));
	CHECK(abstract_affectance(empty6, {}, 0) == 0.0);
	for (std::size_t k = 1; k <= 6; ++k) {
		const auto set = members_of((std::uint64_t{1} << k) - 1, 6);
		CHECK(abstract_affectance(empty6, set, 0) == doctest::Approx((k - 1) / 6.0));
	}
	CHECK(abstract_feasible(empty6, {0, 1, 2, 3, 4, 5}));

	const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
	const GainMatrix pm = graph_to_instance(path);
	CHECK(abstract_affectance(pm, {0, 1, 3}, 0) >= 2.0);
	CHECK_FALSE(abstract_feasible(pm, {0, 1}));
	CHECK(abstract_feasible(pm, {2}));
	CHECK(abstract_feasible(pm, {0, 2}));
	CHECK_THROWS_AS(abstract_affectance(pm, {0, 7}, 0), InputError);
	CHECK_THROWS_AS(abstract_affectance(pm, {0}, 4), InputError);
}

TEST_CASE("strictness flag at the threshold")
{
	// Two links affecting each other by exactly the threshold.
	const GainMatrix m(2, {0.0, 0.5, 0.5, 0.0}, 0.5);
	CHECK_FALSE(abstract_feasible(m, {0, 1}, Strictness::strict));
	CHECK(abstract_feasible(m, {0, 1}, Strictness::non_strict));
}

TEST_CASE("reduction matrix is symmetric with zero diagonal")
{
	SplitMix64 rng(3);
	for (int trial = 0; trial < 50; ++trial) {
		const std::size_t n = 1 + rng.next() % 9;
		const GainMatrix m = graph_to_instance(random_graph(rng, n, rng.uniform()));
		CHECK(m.symmetric());
		for (std::size_t i = 0; i < n; ++i)
			CHECK(m(i, i) == 0.0);
	}
}

TEST_CASE("independent sets and feasible sets coincide on every small graph")
{
	std::uint64_t graphs = 0;
	for (std::size_t n = 1; n <= 5; ++n)
		for (const Graph &g : all_graphs(n)) {
			const CorrespondenceResult r = correspondence_check(g);
			CHECK(r.holds);
			CHECK_FALSE(r.counterexample.has_value());
			CHECK(r.subsets_checked == (std::uint64_t{1} << n));
			++graphs;
		}
	CHECK(graphs == 1 + 2 + 8 + 64 + 1024);

	// Also check the enumerated matrices directly against Graph::independent.
	for (const Graph &g : all_graphs(4)) {
		const GainMatrix m = graph_to_instance(g);
		for (std::uint64_t mask = 0; mask < 16; ++mask) {
			const auto set = members_of(mask, 4);
			CHECK(abstract_feasible(m, set) == g.independent(set));
		}
	}
}

TEST_CASE("isomorphism classes of small graphs")
{
	// Number of unlabelled simple graphs on n vertices.
	const std::size_t expected[] = {0, 1, 2, 4, 11, 34};
	for (std::size_t n = 1; n <= 5; ++n) {
		std::set<std::uint64_t> classes;
		for (const Graph &g : all_graphs(n))
			classes.insert(canonical_form(g));
		CHECK(classes.size() == expected[n]);
	}
	CHECK(canonical_form(Graph(3, {{0, 1}})) == canonical_form(Graph(3, {{1, 2}})));
	CHECK(canonical_form(Graph(3, {{0, 1}})) != canonical_form(Graph(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("maximum feasible set equals the independence number")
{
	CHECK(max_feasible_size(graph_to_instance(complete(3))) == 1);
	CHECK(max_feasible_size(graph_to_instance(Graph(3, {{0, 1}, {1, 2}}))) == 2);
	CHECK(max_feasible_size(graph_to_instance(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}))) == 2);
	CHECK(max_feasible_size(graph_to_instance(Graph(6))) == 6);
}

TEST_CASE("random graphs up to eight vertices, and sampled mode above the limit")
{
	SplitMix64 rng(11);
	for (int trial = 0; trial < 100; ++trial) {
		const std::size_t n = 1 + rng.next() % 8;
		CHECK(correspondence_check(random_graph(rng, n, rng.uniform())).holds);
	}

	const Graph big = random_graph(rng, 30, 0.2);
	CHECK_THROWS_AS(correspondence_check(big), SizeLimitExceeded);
	const CorrespondenceResult sampled = correspondence_check(big, 20, 500, 7);
	CHECK(sampled.holds);
	CHECK(sampled.subsets_checked == 500);
	CHECK(correspondence_check(big, 20, 500, 7).subsets_checked == sampled.subsets_checked);
}

TEST_CASE("geometric instances export to matching gain matrices")
{
	for (std::uint64_t seed = 0; seed < 20; ++seed) {
		SplitMix64 rng(seed);
		const double alpha = 2.5 + rng.uniform();
		const double beta = 0.5 + 1.5 * rng.uniform();
		const double noise = seed % 2 ? fixtures::small_noise(20.0, alpha, beta) : 0.0;
		const Instance inst(fixtures::params(alpha, beta, noise),
				fixtures::random_links(rng, 2 + seed % 8, 50.0, 20.0));
		const GainMatrix m = export_gain_matrix(inst);
		CHECK(m.threshold() == doctest::Approx(1.0 / beta));
		const std::size_t n = inst.size();
		for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
			const auto set = members_of(mask, n);
			std::vector<LinkId> ids;
			for (std::size_t i : set)
				ids.push_back(inst.links()[i].id);
			CHECK(abstract_feasible(m, set, Strictness::non_strict) == is_feasible(Slot(ids), inst).feasible);
		}
	}
}

TEST_CASE("validation of matrices and graphs")
{
	CHECK_THROWS_AS(GainMatrix(2, {0.0, 1.0, 1.0}), InputError);
	CHECK_THROWS_AS(GainMatrix(2, {0.5, 1.0, 1.0, 0.0}), InputError);
	CHECK_THROWS_AS(GainMatrix(2, {0.0, -1.0, 1.0, 0.0}), InputError);
	CHECK_THROWS_AS(GainMatrix(2, {0.0, std::nan(""), 1.0, 0.0}), InputError);
	CHECK_FALSE(GainMatrix(2, {0.0, 1.0, 2.0, 0.0}).symmetric());

	CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
	CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
	CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
	const Graph g(3, {{2, 0}});
	CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}});
	CHECK(g.adjacent(2, 0));
	CHECK_FALSE(g.adjacent(0, 1));
	CHECK(g.independent({0, 1}));
	CHECK_FALSE(g.independent({0, 1, 2}));
}
