#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "capsched/model.hpp"

namespace capsched::abstract {

/// Pairwise affectances set freely, with no geometry behind them.
/// entries[i * n + j] is the affectance of link i on link j.
class GainMatrix {
public:
	GainMatrix() = default;
	/// Throws InputError on a size mismatch, a nonzero diagonal, or a negative or
	/// non-finite entry.
	GainMatrix(std::size_t n, std::vector<double> entries, double threshold = 1.0);

	std::size_t size() const { return n_; }
	double threshold() const { return threshold_; }
	double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
	const std::vector<double> &entries() const { return entries_; }
	bool symmetric() const;

	friend bool operator==(const GainMatrix &, const GainMatrix &) = default;

private:
	std::size_t n_ = 0;
	std::vector<double> entries_;
	double threshold_ = 1.0;
};

enum class Strictness {
	// affectance < threshold
	strict,
	// affectance <= threshold, with the geometric slack
	non_strict,
};

/// Undirected simple graph on vertices 0..n-1.
class Graph {
public:
	explicit Graph(std::size_t n = 0) : n_(n) {}
	/// Throws InputError on self-loops, duplicates, or out-of-range vertices.
	Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges);

	std::size_t vertex_count() const { return n_; }
	std::size_t edge_count() const { return edges_.size(); }
	/// Edges as (u, v) with u < v, sorted.
	const std::vector<std::pair<std::size_t, std::size_t>> &edges() const { return edges_; }
	bool adjacent(std::size_t u, std::size_t v) const;
	bool independent(const std::vector<std::size_t> &set) const;

private:
	std::size_t n_ = 0;
	std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Sum of matrix(w, v) over w in `set`, w != v. Throws InputError for bad indices.
double abstract_affectance(const GainMatrix &matrix, const std::vector<std::size_t> &set, std::size_t v);

/// Every member's affectance is below (or, non-strict, at most) the threshold.
bool abstract_feasible(const GainMatrix &matrix, const std::vector<std::size_t> &set,
		Strictness strictness = Strictness::strict);

/// Hardness reduction: 2 on edges, 1/n on non-edges, zero diagonal, threshold 1.
GainMatrix graph_to_instance(const Graph &g);

/// Affectances a_w(l_v) of a geometric instance (links in instance order) with
/// threshold 1/beta. Use Strictness::non_strict to match geometric feasibility.
GainMatrix export_gain_matrix(const Instance &instance);

struct CorrespondenceResult {
	bool holds = true;
	std::uint64_t subsets_checked = 0;
	// A vertex subset where independence and feasibility disagree.
	std::optional<std::vector<std::size_t>> counterexample;
};

/// Checks independent-in-g <=> feasible-in-graph_to_instance(g). Exhaustive over all
/// 2^n subsets when n <= max_exhaustive (else throws SizeLimitExceeded unless
/// `samples` is given, in which case that many random subsets are drawn with `seed`).
CorrespondenceResult correspondence_check(const Graph &g, std::size_t max_exhaustive = 20,
		std::optional<std::uint64_t> samples = std::nullopt, std::uint64_t seed = 0);

/// Every labelled simple graph on exactly n vertices (2^(n choose 2) of them).
std::vector<Graph> all_graphs(std::size_t n);

/// Canonical form under vertex relabelling; equal iff the graphs are isomorphic.
/// Brute force over permutations, intended for n <= 8.
std::uint64_t canonical_form(const Graph &g);

} // namespace capsched::abstract
