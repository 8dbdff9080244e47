#include "capsched/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "capsched/sinr.hpp"
#include "link_table.hpp"

namespace capsched {

namespace {

// Pairwise affectances over links sorted by ascending id.
struct AffectanceMatrix {
	std::vector<LinkId> ids;
	std::vector<double> a; // a[w * n + v] = a_w(l_v)

	explicit AffectanceMatrix(const Instance &instance)
	{
		const detail::LinkTable t(instance);
		std::vector<std::size_t> order(t.size());
		for (std::size_t i = 0; i < order.size(); ++i)
			order[i] = i;
		std::sort(order.begin(), order.end(),
				[&](std::size_t x, std::size_t y) { return t.link(x).id < t.link(y).id; });
		const std::size_t n = order.size();
		a.resize(n * n);
		for (std::size_t w = 0; w < n; ++w) {
			ids.push_back(t.link(order[w]).id);
			for (std::size_t v = 0; v < n; ++v)
				a[w * n + v] = t.affectance(order[w], order[v]);
		}
	}

	std::size_t size() const { return ids.size(); }
	double operator()(std::size_t w, std::size_t v) const { return a[w * ids.size() + v]; }
};

void check_limit(std::size_t n, std::size_t limit, const char *what)
{
	if (n > limit)
		throw SizeLimitExceeded(std::string(what) + " is limited to " + std::to_string(limit)
				+ " links, got " + std::to_string(n));
}

void check_p(double p)
{
	if (!(p > 0.0))
		throw InvalidParameters("signal level p must be positive");
}

// Depth-first search over subsets that only ever extends p-signal sets.
class SubsetSearch {
public:
	SubsetSearch(const AffectanceMatrix &m, double p, std::stop_token stop)
		: m_(m), limit_(1.0 / p + kThresholdSlack), stop_(std::move(stop))
	{
	}

	// visit(members) returns false to prune the subtree below this set.
	template<class Visit, class Bound>
	void run(Visit &&visit, Bound &&worth_descending)
	{
		std::vector<double> received(m_.size(), 0.0);
		std::vector<std::size_t> members;
		descend(0, received, members, visit, worth_descending);
	}

private:
	template<class Visit, class Bound>
	void descend(std::size_t next, const std::vector<double> &received,
			std::vector<std::size_t> &members, Visit &visit, Bound &worth_descending)
	{
		if (stop_.stop_requested())
			throw Cancelled();
		const std::size_t n = m_.size();
		for (std::size_t x = next; x < n; ++x) {
			if (!worth_descending(members.size(), n - x))
				return;
			if (!admits(x, received, members))
				continue;
			std::vector<double> grown(received);
			for (std::size_t v = 0; v < n; ++v)
				grown[v] += m_(x, v);
			members.push_back(x);
			visit(members);
			descend(x + 1, grown, members, visit, worth_descending);
			members.pop_back();
		}
	}

	bool admits(std::size_t x, const std::vector<double> &received,
			const std::vector<std::size_t> &members) const
	{
		if (received[x] > limit_)
			return false;
		return std::all_of(members.begin(), members.end(),
				[&](std::size_t u) { return received[u] + m_(x, u) <= limit_; });
	}

	const AffectanceMatrix &m_;
	double limit_;
	std::stop_token stop_;
};

Slot to_slot(const AffectanceMatrix &m, const std::vector<std::size_t> &members)
{
	std::vector<LinkId> ids;
	for (std::size_t i : members)
		ids.push_back(m.ids[i]);
	return Slot(std::move(ids));
}

Slot max_subset(const Instance &instance, double p, const OracleLimits &limits, std::stop_token stop)
{
	check_p(p);
	check_limit(instance.size(), limits.max_links_subset, "subset oracle");
	const AffectanceMatrix m(instance);
	std::vector<std::size_t> best;
	SubsetSearch search(m, p, std::move(stop));
	// Include-first DFS meets optimal sets in lexicographic order, so only a
	// strictly larger set replaces the incumbent.
	search.run(
			[&](const std::vector<std::size_t> &members) {
				if (members.size() > best.size())
					best = members;
			},
			[&](std::size_t have, std::size_t remaining) { return have + remaining > best.size(); });
	return to_slot(m, best);
}

} // namespace

Slot max_feasible_subset(const Instance &instance, const OracleLimits &limits, std::stop_token stop)
{
	return max_subset(instance, instance.params().beta, limits, std::move(stop));
}

Slot max_p_signal_subset(const Instance &instance, double p, const OracleLimits &limits,
		std::stop_token stop)
{
	return max_subset(instance, p, limits, std::move(stop));
}

void for_each_p_signal_subset(const Instance &instance, double p,
		const std::function<void(const Slot &)> &visit, const OracleLimits &limits,
		std::stop_token stop)
{
	check_p(p);
	check_limit(instance.size(), limits.max_links_subset, "subset enumeration");
	const AffectanceMatrix m(instance);
	SubsetSearch search(m, p, std::move(stop));
	search.run([&](const std::vector<std::size_t> &members) { visit(to_slot(m, members)); },
			[](std::size_t, std::size_t) { return true; });
}

Schedule min_schedule(const Instance &instance, std::optional<double> p, const OracleLimits &limits,
		std::stop_token stop)
{
	const double level = p.value_or(instance.params().beta);
	check_p(level);
	check_limit(instance.size(), limits.max_links_schedule, "schedule oracle");
	const AffectanceMatrix m(instance);
	const std::size_t n = m.size();
	const double limit = 1.0 / level + kThresholdSlack;
	const std::uint32_t full = (std::uint32_t{1} << n) - 1;

	std::vector<bool> ok(std::size_t{full} + 1, false);
	for (std::uint32_t mask = 1; mask <= full; ++mask) {
		if ((mask & 0xFF) == 1 && stop.stop_requested())
			throw Cancelled();
		bool good = true;
		for (std::size_t v = 0; v < n && good; ++v) {
			if (!(mask >> v & 1))
				continue;
			double sum = 0.0;
			for (std::size_t w = 0; w < n; ++w)
				if (mask >> w & 1)
					sum += m(w, v);
			good = sum <= limit;
		}
		ok[mask] = good;
	}

	constexpr std::uint32_t kUnset = ~std::uint32_t{0};
	std::vector<std::uint32_t> cost(std::size_t{full} + 1, kUnset);
	std::vector<std::uint32_t> choice(std::size_t{full} + 1, 0);
	cost[0] = 0;
	for (std::uint32_t mask = 1; mask <= full; ++mask) {
		if ((mask & 0xFF) == 1 && stop.stop_requested())
			throw Cancelled();
		// The slot holding the lowest remaining id; larger slots are tried first.
		const std::uint32_t low = mask & (~mask + 1);
		const std::uint32_t rest = mask ^ low;
		for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
			const std::uint32_t slot = sub | low;
			if (ok[slot] && cost[mask ^ slot] + 1 < cost[mask]) {
				cost[mask] = cost[mask ^ slot] + 1;
				choice[mask] = slot;
			}
			if (sub == 0)
				break;
		}
	}

	Schedule out;
	for (std::uint32_t mask = full; mask != 0; mask ^= choice[mask]) {
		std::vector<std::size_t> members;
		for (std::size_t i = 0; i < n; ++i)
			if (choice[mask] >> i & 1)
				members.push_back(i);
		out.slots.push_back(to_slot(m, members));
	}
	return out;
}

} // namespace capsched
