#include "capsched/abstract_sinr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "capsched/sinr.hpp"
#include "capsched/topogen.hpp"
#include "link_table.hpp"

namespace capsched::abstract {

GainMatrix::GainMatrix(std::size_t n, std::vector<double> entries, double threshold)
	: n_(n), entries_(std::move(entries)), threshold_(threshold)
{
	if (entries_.size() != n_ * n_)
		throw InputError("gain matrix needs " + std::to_string(n_ * n_) + " entries, got "
				+ std::to_string(entries_.size()));
	if (!(std::isfinite(threshold_) && threshold_ > 0.0))
		throw InputError("gain matrix threshold must be positive");
	for (std::size_t i = 0; i < n_; ++i) {
		if ((*this)(i, i) != 0.0)
			throw InputError("gain matrix diagonal must be zero (row " + std::to_string(i) + ")");
		for (std::size_t j = 0; j < n_; ++j) {
			const double a = (*this)(i, j);
			if (!std::isfinite(a) || a < 0.0)
				throw InputError("gain matrix entries must be finite and nonnegative");
		}
	}
}

bool GainMatrix::symmetric() const
{
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = i + 1; j < n_; ++j)
			if ((*this)(i, j) != (*this)(j, i))
				return false;
	return true;
}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges) : n_(n)
{
	for (auto [u, v] : edges) {
		if (u >= n || v >= n)
			throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v)
					+ ") is out of range for " + std::to_string(n) + " vertices");
		if (u == v)
			throw InputError("self-loop at vertex " + std::to_string(u));
		edges_.emplace_back(std::min(u, v), std::max(u, v));
	}
	std::sort(edges_.begin(), edges_.end());
	if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
		throw InputError("duplicate edge");
}

bool Graph::adjacent(std::size_t u, std::size_t v) const
{
	return std::binary_search(edges_.begin(), edges_.end(), std::pair{std::min(u, v), std::max(u, v)});
}

bool Graph::independent(const std::vector<std::size_t> &set) const
{
	for (std::size_t i = 0; i < set.size(); ++i)
		for (std::size_t j = i + 1; j < set.size(); ++j)
			if (adjacent(set[i], set[j]))
				return false;
	return true;
}

double abstract_affectance(const GainMatrix &matrix, const std::vector<std::size_t> &set, std::size_t v)
{
	const std::size_t n = matrix.size();
	if (v >= n)
		throw InputError("link index " + std::to_string(v) + " out of range");
	double sum = 0.0;
	for (std::size_t w : set) {
		if (w >= n)
			throw InputError("link index " + std::to_string(w) + " out of range");
		if (w != v)
			sum += matrix(w, v);
	}
	return sum;
}

bool abstract_feasible(const GainMatrix &matrix, const std::vector<std::size_t> &set, Strictness strictness)
{
	for (std::size_t v : set) {
		const double a = abstract_affectance(matrix, set, v);
		const bool ok = strictness == Strictness::strict ? a < matrix.threshold()
				: a <= matrix.threshold() + kThresholdSlack;
		if (!ok)
			return false;
	}
	return true;
}

GainMatrix graph_to_instance(const Graph &g)
{
	const std::size_t n = g.vertex_count();
	if (n == 0)
		throw InputError("graph must have at least one vertex");
	std::vector<double> entries(n * n, 1.0 / static_cast<double>(n));
	for (std::size_t i = 0; i < n; ++i)
		entries[i * n + i] = 0.0;
	for (auto [u, v] : g.edges()) {
		entries[u * n + v] = 2.0;
		entries[v * n + u] = 2.0;
	}
	return GainMatrix(n, std::move(entries), 1.0);
}

GainMatrix export_gain_matrix(const Instance &instance)
{
	const detail::LinkTable t(instance);
	const std::size_t n = t.size();
	std::vector<double> entries(n * n);
	for (std::size_t w = 0; w < n; ++w)
		for (std::size_t v = 0; v < n; ++v)
			entries[w * n + v] = t.affectance(w, v);
	return GainMatrix(n, std::move(entries), 1.0 / instance.params().beta);
}

namespace {

std::vector<std::size_t> members_of(std::uint64_t mask, std::size_t n)
{
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < n; ++i)
		if (mask >> i & 1)
			out.push_back(i);
	return out;
}

} // namespace

CorrespondenceResult correspondence_check(const Graph &g, std::size_t max_exhaustive,
		std::optional<std::uint64_t> samples, std::uint64_t seed)
{
	const std::size_t n = g.vertex_count();
	const GainMatrix matrix = graph_to_instance(g);
	CorrespondenceResult result;
	auto check = [&](const std::vector<std::size_t> &set) {
		++result.subsets_checked;
		if (g.independent(set) != abstract_feasible(matrix, set)) {
			result.holds = false;
			result.counterexample = set;
		}
		return result.holds;
	};

	if (n <= max_exhaustive && n < 64) {
		const std::uint64_t count = std::uint64_t{1} << n;
		for (std::uint64_t mask = 0; mask < count; ++mask)
			if (!check(members_of(mask, n)))
				break;
		return result;
	}
	if (!samples)
		throw SizeLimitExceeded("exhaustive correspondence check is limited to "
				+ std::to_string(max_exhaustive) + " vertices");
	SplitMix64 rng(seed);
	for (std::uint64_t s = 0; s < *samples; ++s) {
		std::vector<std::size_t> set;
		for (std::size_t i = 0; i < n; ++i)
			if (rng.next() >> 63)
				set.push_back(i);
		if (!check(set))
			break;
	}
	return result;
}

std::vector<Graph> all_graphs(std::size_t n)
{
	std::vector<std::pair<std::size_t, std::size_t>> pairs;
	for (std::size_t u = 0; u < n; ++u)
		for (std::size_t v = u + 1; v < n; ++v)
			pairs.emplace_back(u, v);
	if (pairs.size() >= 32)
		throw SizeLimitExceeded("too many labelled graphs to enumerate");
	std::vector<Graph> out;
	const std::uint64_t count = std::uint64_t{1} << pairs.size();
	for (std::uint64_t mask = 0; mask < count; ++mask) {
		std::vector<std::pair<std::size_t, std::size_t>> edges;
		for (std::size_t i = 0; i < pairs.size(); ++i)
			if (mask >> i & 1)
				edges.push_back(pairs[i]);
		out.emplace_back(n, edges);
	}
	return out;
}

std::uint64_t canonical_form(const Graph &g)
{
	const std::size_t n = g.vertex_count();
	if (n > 8)
		throw SizeLimitExceeded("canonical form is limited to 8 vertices");
	std::vector<std::size_t> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	std::uint64_t best = ~std::uint64_t{0};
	do {
		std::uint64_t code = 0;
		for (auto [u, v] : g.edges()) {
			std::size_t a = std::min(perm[u], perm[v]);
			std::size_t b = std::max(perm[u], perm[v]);
			code |= std::uint64_t{1} << (a * n + b);
		}
		best = std::min(best, code);
	} while (std::next_permutation(perm.begin(), perm.end()));
	return best;
}

} // namespace capsched::abstract
