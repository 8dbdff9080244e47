#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "capsched/abstract_sinr.hpp"
#include "capsched/experiment.hpp"
#include "capsched/io.hpp"
#include "capsched/oracles.hpp"
#include "capsched/schedulers.hpp"
#include "capsched/sinr.hpp"
#include "capsched/topogen.hpp"

namespace capsched::cli {

namespace {

// Model parameter flags shared by several subcommands. Unset flags leave the
// instance's own values alone.
struct ParamFlags {
	std::optional<double> alpha;
	std::optional<double> beta;
	std::optional<double> noise;
	std::optional<double> power;

	void attach(CLI::App *cmd)
	{
		cmd->add_option("--alpha", alpha, "path-loss exponent (> 2)");
		cmd->add_option("--beta", beta, "SINR threshold (> 0)");
		cmd->add_option("--noise", noise, "ambient noise (>= 0)");
		cmd->add_option("--power", power, "default transmit power (> 0)");
	}

	ModelParams apply(ModelParams p) const
	{
		if (alpha)
			p.alpha = *alpha;
		if (beta)
			p.beta = *beta;
		if (noise)
			p.noise = *noise;
		if (power)
			p.default_power = *power;
		return p;
	}

	bool any() const { return alpha || beta || noise || power; }
};

Instance load_instance(const std::string &path, const ParamFlags &flags)
{
	Instance instance = io::read_instance(io::read_file(path));
	if (!flags.any())
		return instance;
	return instance.with_params(flags.apply(instance.params()));
}

void emit(const std::string &path, const std::string &text, std::ostream &out)
{
	if (path.empty() || path == "-")
		out << text;
	else
		io::write_file(path, text);
}

std::string real(double v)
{
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.6g", v);
	return buf;
}

// Checks partition and per-slot feasibility; prints one line per slot.
bool verify_report(const Instance &instance, const Schedule &schedule, std::ostream &out,
		std::optional<double> p, std::optional<double> q, std::optional<double> theta)
{
	check_partition(schedule, instance);
	bool ok = true;
	for (std::size_t s = 0; s < schedule.slots.size(); ++s) {
		const Slot &slot = schedule.slots[s];
		const FeasibilityReport r = is_feasible(slot, instance);
		out << "slot " << s << ": links=" << slot.size() << " feasible=" << (r.feasible ? "yes" : "no");
		if (r.worst_link)
			out << " worst_link=" << *r.worst_link << " margin=" << real(r.worst_margin);
		ok = ok && r.feasible;
		if (p) {
			const FeasibilityReport ps = is_p_signal(slot, *p, instance);
			out << " p_signal=" << (ps.feasible ? "yes" : "no") << " p_margin=" << real(ps.worst_margin);
			ok = ok && ps.feasible;
		}
		if (q) {
			const bool dispersed = is_q_dispersed(slot, *q, instance);
			out << " q_dispersed=" << (dispersed ? "yes" : "no");
			ok = ok && dispersed;
		}
		if (theta) {
			const FeasibilityReport pt = is_feasible_perturbed(slot, instance, *theta);
			out << " theta_feasible=" << (pt.feasible ? "yes" : "no")
				<< " theta_margin=" << real(pt.worst_margin);
			ok = ok && pt.feasible;
		}
		out << (r.feasible ? "\n" : "  <-- violates SINR threshold\n");
	}
	return ok;
}

PowerStrategy::Mode parse_strategy(const std::string &s)
{
	if (s == "uniform")
		return PowerStrategy::Mode::uniform;
	if (s == "scaled-threshold")
		return PowerStrategy::Mode::scaled_threshold;
	if (s == "power-regimes")
		return PowerStrategy::Mode::power_regimes;
	throw InputError("unknown power strategy \"" + s + "\"");
}

int builtin_reduction_suite(std::ostream &out)
{
	std::size_t graphs = 0;
	std::uint64_t subsets = 0;
	for (std::size_t n = 1; n <= 5; ++n) {
		for (const abstract::Graph &g : abstract::all_graphs(n)) {
			const auto r = abstract::correspondence_check(g);
			++graphs;
			subsets += r.subsets_checked;
			if (!r.holds) {
				out << "FAIL on graph\n" << io::write_edge_list(g);
				return kVerificationFailed;
			}
		}
	}
	out << "correspondence holds on all " << graphs << " labelled graphs with 1-5 vertices ("
		<< subsets << " subsets)\n";
	return kOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Link scheduling under the SINR interference model", "capsched"};
	app.require_subcommand(1);

	// gen
	auto *gen = app.add_subcommand("gen", "generate a random or clustered topology");
	std::string family = "random";
	TopologySpec spec;
	std::optional<std::uint32_t> clusters;
	std::string gen_out;
	ParamFlags gen_params;
	gen->add_option("--family", family, "random | clustered")->check(CLI::IsMember({"random", "clustered"}));
	gen->add_option("--n", spec.n, "number of links")->check(CLI::PositiveNumber);
	gen->add_option("--seed", spec.seed, "generator seed");
	gen->add_option("--field", spec.field_size, "side of the square field");
	gen->add_option("--lmax", spec.l_max, "sender disc radius (random family)");
	gen->add_option("--clusters", clusters, "number of clusters (default n/10)");
	gen->add_option("--rc", spec.r_cluster, "cluster radius");
	gen->add_option("--out", gen_out, "output file (default stdout)");
	gen_params.attach(gen);

	// schedule
	auto *sched = app.add_subcommand("schedule", "schedule all links of an instance");
	std::string sched_in;
	std::string algo = "A";
	std::string strategy = "uniform";
	double regime_base = 2.0;
	std::string sched_out;
	ParamFlags sched_params;
	sched->add_option("instance", sched_in, "instance file")->required();
	sched->add_option("--algo", algo, "A | B | firstfit")->check(CLI::IsMember({"A", "B", "firstfit"}));
	sched->add_option("--power-strategy", strategy, "uniform | scaled-threshold | power-regimes (algorithm A)");
	sched->add_option("--regime-base", regime_base, "power regime width factor");
	sched->add_option("--out", sched_out, "output schedule file (default stdout)");
	sched_params.attach(sched);

	// verify
	auto *verify = app.add_subcommand("verify", "verify a schedule against an instance");
	std::string ver_inst;
	std::string ver_sched;
	std::optional<double> ver_p;
	std::optional<double> ver_q;
	std::optional<double> ver_theta;
	ParamFlags ver_params;
	verify->add_option("instance", ver_inst, "instance file")->required();
	verify->add_option("schedule", ver_sched, "schedule file")->required();
	verify->add_option("--p", ver_p, "also require every slot to be p-signal");
	verify->add_option("--q", ver_q, "also require every slot to be q-dispersed");
	verify->add_option("--theta", ver_theta, "also require feasibility with every affectance scaled by theta");
	ver_params.attach(verify);

	// refine
	auto *refine = app.add_subcommand("refine", "strengthen or disperse a schedule");
	std::string ref_inst;
	std::string ref_sched;
	std::vector<double> strengthen_args;
	std::optional<double> disperse_q;
	std::string ref_out;
	ParamFlags ref_params;
	refine->add_option("instance", ref_inst, "instance file")->required();
	refine->add_option("schedule", ref_sched, "schedule file")->required();
	auto *str_opt = refine->add_option("--strengthen", strengthen_args, "p p': refine a p-signal schedule to p'-signal")
			->expected(2);
	auto *disp_opt = refine->add_option("--disperse", disperse_q, "q: refine into a q-dispersed schedule");
	str_opt->excludes(disp_opt);
	refine->add_option("--out", ref_out, "output schedule file (default stdout)");
	ref_params.attach(refine);

	// experiment
	auto *exp = app.add_subcommand("experiment", "run a seeded sweep and write CSV results");
	std::string exp_config;
	std::string exp_out;
	exp->add_option("--config,config", exp_config, "experiment config (JSON)")->required();
	exp->add_option("--out", exp_out, "overrides the config's output path");

	// oracle
	auto *oracle = app.add_subcommand("oracle", "exact solutions for small instances");
	std::string or_inst;
	std::string mode = "subset";
	std::optional<double> or_p;
	std::string or_out;
	ParamFlags or_params;
	oracle->add_option("instance", or_inst, "instance file")->required();
	oracle->add_option("--mode", mode, "subset | psignal | schedule")
			->check(CLI::IsMember({"subset", "psignal", "schedule"}));
	oracle->add_option("--p", or_p, "signal level (psignal, or psi_p for schedule)");
	oracle->add_option("--out", or_out, "output file (default stdout)");
	or_params.attach(oracle);

	// reduce-graph
	auto *reduce = app.add_subcommand("reduce-graph", "graph to abstract gain matrix reduction");
	std::string graph_in;
	std::string red_out;
	bool red_check = false;
	bool builtin_suite = false;
	reduce->add_option("graph", graph_in, "edge-list file");
	reduce->add_option("--out", red_out, "output gain-matrix file (default stdout)");
	reduce->add_flag("--check", red_check, "verify independent-set <=> feasible-set correspondence");
	reduce->add_flag("--builtin-suite", builtin_suite, "check every graph with at most 5 vertices");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? kOk : kInputError;
	}

	try {
		if (*gen) {
			spec.family = family == "random" ? TopologySpec::Family::random : TopologySpec::Family::clustered;
			spec.n_clusters = clusters;
			const ModelParams params = gen_params.apply(ModelParams{});
			emit(gen_out, io::write_instance(generate(spec, params)), out);
			return kOk;
		}

		if (*sched) {
			const Instance instance = load_instance(sched_in, sched_params);
			Schedule schedule;
			if (algo == "A")
				schedule = schedule_nonuniform(instance, PowerStrategy{parse_strategy(strategy), regime_base});
			else
				schedule = run_algorithm(parse_algorithm(algo), instance);
			std::ostream &summary = sched_out.empty() ? err : out;
			check_partition(schedule, instance);
			bool verified = true;
			for (const Slot &s : schedule.slots)
				verified = verified && is_feasible(s, instance).feasible;
			if (verified)
				emit(sched_out, io::write_schedule(schedule), out);
			summary << "algo=" << algo << " links=" << instance.size() << " slots=" << schedule.slot_count()
					<< " verified=" << (verified ? "true" : "false") << "\n";
			return verified ? kOk : kVerificationFailed;
		}

		if (*verify) {
			const Instance instance = load_instance(ver_inst, ver_params);
			const Schedule schedule = io::read_schedule(io::read_file(ver_sched));
			const bool ok = verify_report(instance, schedule, out, ver_p, ver_q, ver_theta);
			out << (ok ? "PASS" : "FAIL") << " slots=" << schedule.slot_count() << "\n";
			return ok ? kOk : kVerificationFailed;
		}

		if (*refine) {
			const Instance instance = load_instance(ref_inst, ref_params);
			const Schedule schedule = io::read_schedule(io::read_file(ref_sched));
			check_partition(schedule, instance);
			if (strengthen_args.empty() == !disperse_q)
				throw InputError("refine needs exactly one of --strengthen p p' or --disperse q");
			std::ostream &summary = ref_out.empty() ? err : out;
			Refinement r;
			bool ok = true;
			if (!strengthen_args.empty()) {
				const double p = strengthen_args[0];
				const double p_prime = strengthen_args[1];
				r = strengthen(schedule, p, p_prime, instance);
				ok = is_p_signal(r.schedule, p_prime, instance);
				summary << "strengthen " << real(p) << " -> " << real(p_prime) << ": slots "
						<< schedule.slot_count() << " -> " << r.schedule.slot_count()
						<< " blowup=" << r.max_blowup() << " bound=" << strengthen_bound(p, p_prime) << "\n";
			} else {
				const double q = *disperse_q;
				r = disperse(schedule, q, instance);
				for (const Slot &s : r.schedule.slots)
					ok = ok && is_q_dispersed(s, q, instance) && is_feasible(s, instance).feasible;
				const ModelParams &mp = instance.params();
				summary << "disperse q=" << real(q) << ": slots " << schedule.slot_count() << " -> "
						<< r.schedule.slot_count() << " blowup=" << r.max_blowup()
						<< " bound=" << disperse_bound(q, mp.alpha)
						<< " proof_bound=" << disperse_proof_bound(q, mp.alpha, mp.beta) << "\n";
			}
			check_partition(r.schedule, instance);
			if (!ok) {
				err << "refined schedule failed verification\n";
				return kVerificationFailed;
			}
			emit(ref_out, io::write_schedule(r.schedule), out);
			return kOk;
		}

		if (*exp) {
			ExperimentConfig cfg = read_experiment_config(io::read_file(exp_config));
			if (!exp_out.empty())
				cfg.output = exp_out;
			try {
				const auto rows = run_experiment(cfg);
				const auto agg = aggregate(rows);
				io::write_file(cfg.output, write_results_csv(rows));
				io::write_file(cfg.output + ".agg.csv", write_aggregate_csv(agg));
				io::write_file(cfg.output + ".dat", write_aggregate_dat(agg));
				out << "rows=" << rows.size() << " written to " << cfg.output << "\n";
				return kOk;
			} catch (const ExperimentFailure &f) {
				io::write_file(cfg.output + ".failed-instance.json", f.instance_text);
				if (!f.schedule_text.empty())
					io::write_file(cfg.output + ".failed-schedule.json", f.schedule_text);
				err << "verification failed: " << f.what() << "\nartifacts dumped next to "
					<< cfg.output << "\n";
				return kVerificationFailed;
			}
		}

		if (*oracle) {
			const Instance instance = load_instance(or_inst, or_params);
			if (mode == "subset") {
				emit(or_out, io::write_oracle_subset(mode, std::nullopt, max_feasible_subset(instance)), out);
			} else if (mode == "psignal") {
				if (!or_p)
					throw InputError("--mode psignal needs --p");
				emit(or_out, io::write_oracle_subset(mode, or_p, max_p_signal_subset(instance, *or_p)), out);
			} else {
				emit(or_out, io::write_oracle_schedule(or_p, min_schedule(instance, or_p)), out);
			}
			return kOk;
		}

		if (*reduce) {
			if (builtin_suite)
				return builtin_reduction_suite(out);
			if (graph_in.empty())
				throw InputError("reduce-graph needs an edge-list file (or --builtin-suite)");
			const abstract::Graph g = io::read_edge_list(io::read_file(graph_in));
			emit(red_out, io::write_gain_matrix(abstract::graph_to_instance(g)), out);
			if (red_check) {
				const auto r = abstract::correspondence_check(g, 20, std::uint64_t{1} << 16, 1);
				std::ostream &summary = red_out.empty() ? err : out;
				summary << "correspondence " << (r.holds ? "holds" : "FAILS") << " over "
						<< r.subsets_checked << " subsets\n";
				if (!r.holds)
					return kVerificationFailed;
			}
			return kOk;
		}
	} catch (const SizeLimitExceeded &e) {
		err << "size limit: " << e.what() << "\n";
		return kSizeLimit;
	} catch (const VerificationFailed &e) {
		err << "verification failed: " << e.what() << "\n";
		return kVerificationFailed;
	} catch (const HeuristicInfeasible &e) {
		err << "verification failed: " << e.what() << "\n";
		return kVerificationFailed;
	} catch (const Error &e) {
		err << "error: " << e.what() << "\n";
		return kInputError;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << "\n";
		return kInputError;
	}
	return kInputError;
}

} // namespace capsched::cli
