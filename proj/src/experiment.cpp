#include "capsched/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "capsched/io.hpp"
#include "capsched/schedulers.hpp"
#include "capsched/sinr.hpp"
#include "json.hpp"

namespace capsched {

std::string_view algorithm_name(Algorithm a)
{
	switch (a) {
	case Algorithm::a_repeated:
		return "A-repeated";
	case Algorithm::b_repeated:
		return "B-repeated";
	case Algorithm::first_fit:
		return "first-fit-baseline";
	}
	return "unknown";
}

Algorithm parse_algorithm(std::string_view name)
{
	if (name == "A-repeated" || name == "A")
		return Algorithm::a_repeated;
	if (name == "B-repeated" || name == "B")
		return Algorithm::b_repeated;
	if (name == "first-fit-baseline" || name == "firstfit")
		return Algorithm::first_fit;
	throw InputError("unknown algorithm \"" + std::string(name) + "\"");
}

Schedule run_algorithm(Algorithm algorithm, const Instance &instance)
{
	switch (algorithm) {
	case Algorithm::a_repeated:
		return schedule_repeated(instance);
	case Algorithm::b_repeated:
		return schedule_repeated(instance, [](const Instance &inst, const Slot &candidates) {
			return single_shot_b(inst, candidates);
		});
	case Algorithm::first_fit:
		return first_fit_baseline(instance);
	}
	throw InternalError("unhandled algorithm");
}

namespace {

const std::vector<std::string> kSweepable{"n", "alpha", "r_cluster", "l_max"};

struct Cell {
	Algorithm algorithm;
	std::size_t point;
	std::uint32_t repetition;
	TopologySpec spec;
	ModelParams params;
};

// Sweep points as assignments of one value per axis, first axis outermost.
std::vector<std::vector<double>> sweep_points(const std::vector<SweepAxis> &sweep)
{
	std::vector<std::vector<double>> points{{}};
	for (const SweepAxis &axis : sweep) {
		std::vector<std::vector<double>> next;
		for (const auto &prefix : points)
			for (double v : axis.values) {
				auto p = prefix;
				p.push_back(v);
				next.push_back(std::move(p));
			}
		points = std::move(next);
	}
	return points;
}

void apply(const std::string &parameter, double value, TopologySpec &spec, ModelParams &params)
{
	if (parameter == "n")
		spec.n = static_cast<std::uint32_t>(value);
	else if (parameter == "alpha")
		params.alpha = value;
	else if (parameter == "r_cluster")
		spec.r_cluster = value;
	else if (parameter == "l_max")
		spec.l_max = value;
}

std::string family_name(TopologySpec::Family f)
{
	return f == TopologySpec::Family::random ? "random" : "clustered";
}

std::string fmt6(double v)
{
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.6g", v);
	return buf;
}

} // namespace

void ExperimentConfig::validate() const
{
	if (repetitions < 1)
		throw InvalidParameters("repetitions must be at least 1");
	if (algorithms.empty())
		throw InvalidParameters("at least one algorithm is required");
	for (const SweepAxis &axis : sweep) {
		if (std::find(kSweepable.begin(), kSweepable.end(), axis.parameter) == kSweepable.end())
			throw InvalidParameters("cannot sweep \"" + axis.parameter
					+ "\" (supported: n, alpha, r_cluster, l_max)");
		if (axis.values.empty())
			throw InvalidParameters("sweep over \"" + axis.parameter + "\" has no values");
		for (double v : axis.values) {
			if (axis.parameter == "n" && (v < 1 || v != std::floor(v)))
				throw InvalidParameters("swept n must be a positive integer");
		}
	}
	for (const auto &point : sweep_points(sweep)) {
		TopologySpec spec = topology;
		ModelParams params = this->params;
		for (std::size_t a = 0; a < sweep.size(); ++a)
			apply(sweep[a].parameter, point[a], spec, params);
		spec.validate();
		params.validate();
	}
}

ExperimentConfig read_experiment_config(std::string_view text)
{
	using nlohmann::json;
	ExperimentConfig cfg;
	try {
		const json doc = json::parse(text);
		if (doc.contains("topology")) {
			const json &t = doc.at("topology");
			const std::string family = t.value("family", std::string("random"));
			if (family == "random")
				cfg.topology.family = TopologySpec::Family::random;
			else if (family == "clustered")
				cfg.topology.family = TopologySpec::Family::clustered;
			else
				throw InputError("unknown topology family \"" + family + "\"");
			cfg.topology.n = t.value("n", cfg.topology.n);
			cfg.topology.field_size = t.value("field_size", cfg.topology.field_size);
			cfg.topology.l_max = t.value("l_max", cfg.topology.l_max);
			cfg.topology.r_cluster = t.value("r_cluster", cfg.topology.r_cluster);
			if (t.contains("n_clusters"))
				cfg.topology.n_clusters = t.at("n_clusters").get<std::uint32_t>();
		}
		if (doc.contains("params")) {
			const json &p = doc.at("params");
			cfg.params.alpha = p.value("alpha", cfg.params.alpha);
			cfg.params.beta = p.value("beta", cfg.params.beta);
			cfg.params.noise = p.value("noise", cfg.params.noise);
			cfg.params.default_power = p.value("default_power", cfg.params.default_power);
		}
		if (doc.contains("sweep"))
			for (const json &axis : doc.at("sweep"))
				cfg.sweep.push_back({axis.at("param").get<std::string>(),
						axis.at("values").get<std::vector<double>>()});
		if (doc.contains("algorithms")) {
			cfg.algorithms.clear();
			for (const json &a : doc.at("algorithms"))
				cfg.algorithms.push_back(parse_algorithm(a.get<std::string>()));
		}
		cfg.repetitions = doc.value("repetitions", cfg.repetitions);
		cfg.base_seed = doc.value("base_seed", cfg.base_seed);
		cfg.output = doc.value("output", cfg.output);
		cfg.record_wall_time = doc.value("record_wall_time", cfg.record_wall_time);
		cfg.threads = doc.value("threads", cfg.threads);
	} catch (const nlohmann::json::exception &e) {
		throw InputError(std::string("experiment config: ") + e.what());
	}
	try {
		cfg.validate();
	} catch (const InvalidParameters &e) {
		throw InputError(std::string("experiment config: ") + e.what());
	}
	return cfg;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig &config)
{
	config.validate();
	const auto points = sweep_points(config.sweep);
	std::vector<Cell> cells;
	for (Algorithm algorithm : config.algorithms)
		for (std::size_t p = 0; p < points.size(); ++p)
			for (std::uint32_t r = 0; r < config.repetitions; ++r) {
				Cell cell{algorithm, p, r, config.topology, config.params};
				for (std::size_t a = 0; a < config.sweep.size(); ++a)
					apply(config.sweep[a].parameter, points[p][a], cell.spec, cell.params);
				cell.spec.seed = config.base_seed + r;
				cells.push_back(cell);
			}

	std::vector<ResultRow> rows(cells.size());
	std::atomic<std::size_t> next{0};
	std::atomic<bool> failed{false};
	std::exception_ptr error;
	std::mutex error_mutex;

	auto worker = [&] {
		while (!failed) {
			const std::size_t i = next++;
			if (i >= cells.size())
				return;
			const Cell &cell = cells[i];
			try {
				const Instance instance = generate(cell.spec, cell.params);
				const auto start = std::chrono::steady_clock::now();
				Schedule schedule;
				try {
					schedule = run_algorithm(cell.algorithm, instance);
				} catch (const HeuristicInfeasible &e) {
					throw ExperimentFailure(e.what(), io::write_instance(instance), "");
				}
				const auto stop = std::chrono::steady_clock::now();

				check_partition(schedule, instance);
				for (std::size_t s = 0; s < schedule.slots.size(); ++s) {
					const FeasibilityReport r = is_feasible(schedule.slots[s], instance);
					if (!r.feasible)
						throw ExperimentFailure(std::string(algorithm_name(cell.algorithm)) + " slot "
								+ std::to_string(s) + " failed verification at link "
								+ std::to_string(*r.worst_link) + " (seed "
								+ std::to_string(cell.spec.seed) + ")",
								io::write_instance(instance), io::write_schedule(schedule));
				}

				ResultRow &row = rows[i];
				row.algorithm = algorithm_name(cell.algorithm);
				row.family = family_name(cell.spec.family);
				row.n = cell.spec.n;
				row.alpha = cell.params.alpha;
				row.beta = cell.params.beta;
				row.l_max = cell.spec.l_max;
				row.r_cluster = cell.spec.r_cluster;
				row.seed = cell.spec.seed;
				row.slot_count = schedule.slot_count();
				if (config.record_wall_time)
					row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
				row.verified = true;
			} catch (...) {
				std::lock_guard lock(error_mutex);
				if (!error)
					error = std::current_exception();
				failed = true;
			}
		}
	};

	unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
	threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));
	{
		std::vector<std::jthread> pool;
		for (unsigned t = 0; t < threads; ++t)
			pool.emplace_back(worker);
	}
	if (error)
		std::rethrow_exception(error);
	// Cells were laid out in canonical order, so rows already are.
	return rows;
}

std::vector<AggregateRow> aggregate(const std::vector<ResultRow> &rows)
{
	std::vector<AggregateRow> out;
	std::vector<std::vector<double>> samples;
	std::map<std::tuple<std::string, std::string, std::uint32_t, double, double, double>, std::size_t> index;
	for (const ResultRow &r : rows) {
		const auto key = std::tuple(r.algorithm, r.family, r.n, r.alpha, r.l_max, r.r_cluster);
		auto [it, fresh] = index.emplace(key, out.size());
		if (fresh) {
			out.push_back(AggregateRow{r.algorithm, r.family, r.n, r.alpha, r.l_max, r.r_cluster});
			samples.emplace_back();
		}
		samples[it->second].push_back(static_cast<double>(r.slot_count));
	}
	for (std::size_t i = 0; i < out.size(); ++i) {
		const auto &xs = samples[i];
		const double k = static_cast<double>(xs.size());
		double mean = 0.0;
		for (double x : xs)
			mean += x;
		mean /= k;
		double ss = 0.0;
		for (double x : xs)
			ss += (x - mean) * (x - mean);
		out[i].repetitions = xs.size();
		out[i].mean_slots = mean;
		out[i].ci95 = xs.size() < 2 ? 0.0 : 1.96 * std::sqrt(ss / (k - 1.0)) / std::sqrt(k);
	}
	return out;
}

std::string write_results_csv(const std::vector<ResultRow> &rows)
{
	std::string out = "algorithm,family,n,alpha,beta,l_max,r_cluster,seed,slot_count,wall_time_ms,verified\n";
	for (const ResultRow &r : rows) {
		out += r.algorithm + ',' + r.family + ',' + std::to_string(r.n) + ',' + fmt6(r.alpha) + ','
				+ fmt6(r.beta) + ',' + fmt6(r.l_max) + ',' + fmt6(r.r_cluster) + ','
				+ std::to_string(r.seed) + ',' + std::to_string(r.slot_count) + ','
				+ fmt6(r.wall_time_ms) + ',' + (r.verified ? "true" : "false") + '\n';
	}
	return out;
}

std::string write_aggregate_csv(const std::vector<AggregateRow> &rows)
{
	std::string out = "algorithm,family,n,alpha,l_max,r_cluster,repetitions,mean_slots,ci95\n";
	for (const AggregateRow &r : rows)
		out += r.algorithm + ',' + r.family + ',' + std::to_string(r.n) + ',' + fmt6(r.alpha) + ','
				+ fmt6(r.l_max) + ',' + fmt6(r.r_cluster) + ',' + std::to_string(r.repetitions) + ','
				+ fmt6(r.mean_slots) + ',' + fmt6(r.ci95) + '\n';
	return out;
}

std::string write_aggregate_dat(const std::vector<AggregateRow> &rows)
{
	std::string out;
	std::string current;
	for (const AggregateRow &r : rows) {
		if (r.algorithm != current) {
			if (!current.empty())
				out += "\n\n";
			current = r.algorithm;
			out += "# " + r.algorithm + " (" + r.family + ")\n";
			out += "# n alpha l_max r_cluster repetitions mean_slots ci95_low ci95_high\n";
		}
		out += std::to_string(r.n) + ' ' + fmt6(r.alpha) + ' ' + fmt6(r.l_max) + ' '
				+ fmt6(r.r_cluster) + ' ' + std::to_string(r.repetitions) + ' ' + fmt6(r.mean_slots)
				+ ' ' + fmt6(r.mean_slots - r.ci95) + ' ' + fmt6(r.mean_slots + r.ci95) + '\n';
	}
	return out;
}

} // namespace capsched
