#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "capsched/model.hpp"
#include "capsched/topogen.hpp"

namespace capsched {

enum class Algorithm { a_repeated, b_repeated, first_fit };

std::string_view algorithm_name(Algorithm a);
/// Accepts "A-repeated", "B-repeated", "first-fit-baseline" and the short forms A, B, firstfit.
Algorithm parse_algorithm(std::string_view name);

/// Runs one scheduler on the instance.
Schedule run_algorithm(Algorithm algorithm, const Instance &instance);

struct SweepAxis {
	// One of n, alpha, r_cluster, l_max.
	std::string parameter;
	std::vector<double> values;
};

struct ExperimentConfig {
	TopologySpec topology;
	ModelParams params;
	// Axes combine as a cartesian product, first axis outermost.
	std::vector<SweepAxis> sweep;
	std::vector<Algorithm> algorithms{Algorithm::a_repeated};
	std::uint32_t repetitions = 1;
	std::uint64_t base_seed = 0;
	std::string output = "results.csv";
	// Off by default so that reruns produce identical CSV files.
	bool record_wall_time = false;
	// 0 means std::thread::hardware_concurrency().
	unsigned threads = 0;

	/// Throws InvalidParameters on unknown sweep parameters or invalid values.
	void validate() const;
};

/// Parses the JSON config format; throws InputError.
ExperimentConfig read_experiment_config(std::string_view text);

struct ResultRow {
	std::string algorithm;
	std::string family;
	std::uint32_t n = 0;
	double alpha = 0.0;
	double beta = 0.0;
	double l_max = 0.0;
	double r_cluster = 0.0;
	std::uint64_t seed = 0;
	std::size_t slot_count = 0;
	double wall_time_ms = 0.0;
	bool verified = false;
};

/// Mean slot count over the repetitions of one (algorithm, sweep point).
struct AggregateRow {
	std::string algorithm;
	std::string family;
	std::uint32_t n = 0;
	double alpha = 0.0;
	double l_max = 0.0;
	double r_cluster = 0.0;
	std::size_t repetitions = 0;
	double mean_slots = 0.0;
	// Normal-approximation 95% half-width, 1.96 * s / sqrt(k); 0 for k < 2.
	double ci95 = 0.0;
};

/// Raised when a cell fails verification. Carries the offending artifacts.
class ExperimentFailure : public VerificationFailed {
public:
	ExperimentFailure(const std::string &what, std::string instance_text, std::string schedule_text)
		: VerificationFailed(what), instance_text(std::move(instance_text)),
		  schedule_text(std::move(schedule_text))
	{
	}

	std::string instance_text;
	std::string schedule_text;
};

/// One row per (algorithm, sweep point, repetition); repetition r uses seed
/// base_seed + r. Cells run concurrently; rows are returned sorted by algorithm,
/// sweep point order, then seed.
std::vector<ResultRow> run_experiment(const ExperimentConfig &config);

std::vector<AggregateRow> aggregate(const std::vector<ResultRow> &rows);

/// Header plus one line per row; reals with 6 significant digits, LF endings.
std::string write_results_csv(const std::vector<ResultRow> &rows);
std::string write_aggregate_csv(const std::vector<AggregateRow> &rows);
/// Whitespace-separated columns, one block per algorithm separated by two blank
/// lines (gnuplot `index`).
std::string write_aggregate_dat(const std::vector<AggregateRow> &rows);

} // namespace capsched
