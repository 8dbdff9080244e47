#include "capsched/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace capsched::io {

using nlohmann::json;

std::string format_real(double value)
{
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.17g", value);
	return buf;
}

namespace {

bool scalar(const json &j)
{
	return !j.is_object() && !j.is_array();
}

void emit(const json &j, std::string &out, int depth)
{
	const std::string pad(2 * (depth + 1), ' ');
	const std::string close_pad(2 * depth, ' ');
	switch (j.type()) {
	case json::value_t::object: {
		if (j.empty()) {
			out += "{}";
			return;
		}
		out += "{\n";
		bool first = true;
		// nlohmann::json keeps object keys in a std::map, so iteration is sorted.
		for (auto it = j.begin(); it != j.end(); ++it) {
			if (!first)
				out += ",\n";
			first = false;
			out += pad + json(it.key()).dump() + ": ";
			emit(it.value(), out, depth + 1);
		}
		out += "\n" + close_pad + "}";
		return;
	}
	case json::value_t::array: {
		const bool inline_array = std::all_of(j.begin(), j.end(), scalar);
		if (j.empty() || inline_array) {
			out += "[";
			for (std::size_t i = 0; i < j.size(); ++i) {
				if (i)
					out += ", ";
				emit(j[i], out, depth + 1);
			}
			out += "]";
			return;
		}
		out += "[\n";
		for (std::size_t i = 0; i < j.size(); ++i) {
			if (i)
				out += ",\n";
			out += pad;
			emit(j[i], out, depth + 1);
		}
		out += "\n" + close_pad + "]";
		return;
	}
	case json::value_t::number_float:
		out += format_real(j.get<double>());
		return;
	default:
		out += j.dump();
	}
}

std::string canonical(const json &j)
{
	std::string out;
	emit(j, out, 0);
	out += "\n";
	return out;
}

json parse(std::string_view text, const char *what)
{
	try {
		return json::parse(text);
	} catch (const json::exception &e) {
		throw InputError(std::string(what) + ": " + e.what());
	}
}

template<class T>
T field(const json &obj, const char *key, const char *what)
{
	if (!obj.is_object() || !obj.contains(key))
		throw InputError(std::string(what) + ": missing field \"" + key + "\"");
	const json &v = obj.at(key);
	if constexpr (std::is_floating_point_v<T>) {
		if (!v.is_number())
			throw InputError(std::string(what) + ": field \"" + key + "\" must be a number");
	} else if constexpr (std::is_integral_v<T>) {
		if (!v.is_number_integer())
			throw InputError(std::string(what) + ": field \"" + key + "\" must be an integer");
	}
	return v.get<T>();
}

} // namespace

std::string write_instance(const Instance &instance)
{
	const ModelParams &p = instance.params();
	json links = json::array();
	for (const Link &l : instance.links()) {
		json jl = {{"id", l.id}, {"sx", l.sender.x}, {"sy", l.sender.y},
				{"rx", l.receiver.x}, {"ry", l.receiver.y}};
		if (l.power)
			jl["power"] = *l.power;
		links.push_back(std::move(jl));
	}
	json doc = {
		{"params", {{"alpha", p.alpha}, {"beta", p.beta}, {"noise", p.noise},
				{"default_power", p.default_power}}},
		{"links", std::move(links)},
	};
	return canonical(doc);
}

Instance read_instance(std::string_view text)
{
	constexpr const char *what = "instance";
	const json doc = parse(text, what);
	const json &jp = doc.contains("params") ? doc.at("params") : json();
	ModelParams params;
	params.alpha = field<double>(jp, "alpha", what);
	params.beta = field<double>(jp, "beta", what);
	params.noise = field<double>(jp, "noise", what);
	params.default_power = field<double>(jp, "default_power", what);
	try {
		params.validate();
	} catch (const InvalidParameters &e) {
		throw InputError(std::string(what) + ": " + e.what());
	}

	if (!doc.contains("links") || !doc.at("links").is_array())
		throw InputError("instance: \"links\" must be an array");
	std::vector<Link> links;
	for (const json &jl : doc.at("links")) {
		Link l;
		l.id = field<LinkId>(jl, "id", what);
		l.sender = {field<double>(jl, "sx", what), field<double>(jl, "sy", what)};
		l.receiver = {field<double>(jl, "rx", what), field<double>(jl, "ry", what)};
		if (jl.contains("power") && !jl.at("power").is_null())
			l.power = field<double>(jl, "power", what);
		links.push_back(l);
	}
	return Instance(params, std::move(links));
}

std::string write_schedule(const Schedule &schedule)
{
	json slots = json::array();
	for (const Slot &s : schedule.slots)
		slots.push_back(s.members);
	return canonical(json{{"slots", std::move(slots)}});
}

Schedule read_schedule(std::string_view text)
{
	const json doc = parse(text, "schedule");
	if (!doc.is_object() || !doc.contains("slots") || !doc.at("slots").is_array())
		throw InputError("schedule: \"slots\" must be an array");
	Schedule out;
	for (const json &js : doc.at("slots")) {
		if (!js.is_array())
			throw InputError("schedule: every slot must be an array of ids");
		std::vector<LinkId> ids;
		for (const json &id : js) {
			if (!id.is_number_integer())
				throw InputError("schedule: link ids must be integers");
			ids.push_back(id.get<LinkId>());
		}
		out.slots.emplace_back(std::move(ids));
	}
	return out;
}

std::string write_gain_matrix(const abstract::GainMatrix &matrix)
{
	json doc = {{"n", matrix.size()}, {"threshold", matrix.threshold()},
			{"entries", matrix.entries()}};
	return canonical(doc);
}

abstract::GainMatrix read_gain_matrix(std::string_view text)
{
	constexpr const char *what = "gain matrix";
	const json doc = parse(text, what);
	const auto n = field<std::size_t>(doc, "n", what);
	const double threshold = field<double>(doc, "threshold", what);
	if (!doc.contains("entries") || !doc.at("entries").is_array())
		throw InputError("gain matrix: \"entries\" must be an array");
	std::vector<double> entries;
	for (const json &e : doc.at("entries")) {
		if (!e.is_number())
			throw InputError("gain matrix: entries must be numbers");
		entries.push_back(e.get<double>());
	}
	return abstract::GainMatrix(n, std::move(entries), threshold);
}

std::string write_oracle_subset(std::string_view mode, std::optional<double> p, const Slot &slot)
{
	json doc = {{"mode", mode}, {"size", slot.size()}, {"slot", slot.members}};
	if (p)
		doc["p"] = *p;
	return canonical(doc);
}

std::string write_oracle_schedule(std::optional<double> p, const Schedule &schedule)
{
	json slots = json::array();
	for (const Slot &s : schedule.slots)
		slots.push_back(s.members);
	json doc = {{"mode", "schedule"}, {"slot_count", schedule.slot_count()}, {"slots", std::move(slots)}};
	if (p)
		doc["p"] = *p;
	return canonical(doc);
}

std::string write_edge_list(const abstract::Graph &graph)
{
	std::ostringstream out;
	out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
	for (auto [u, v] : graph.edges())
		out << u << ' ' << v << '\n';
	return out.str();
}

abstract::Graph read_edge_list(std::string_view text)
{
	std::istringstream in{std::string(text)};
	long long n = -1;
	long long m = -1;
	if (!(in >> n >> m) || n < 0 || m < 0)
		throw InputError("edge list: expected header line \"n m\"");
	std::vector<std::pair<std::size_t, std::size_t>> edges;
	for (long long i = 0; i < m; ++i) {
		long long u = -1;
		long long v = -1;
		if (!(in >> u >> v) || u < 0 || v < 0)
			throw InputError("edge list: expected " + std::to_string(m) + " edges, failed at edge "
					+ std::to_string(i));
		edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
	}
	std::string rest;
	if (in >> rest)
		throw InputError("edge list: trailing data after " + std::to_string(m) + " edges");
	return abstract::Graph(static_cast<std::size_t>(n), edges);
}

std::string read_file(const std::filesystem::path &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot open " + path.string());
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

void write_file(const std::filesystem::path &path, std::string_view contents)
{
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out)
		throw InputError("cannot write " + path.string());
	out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
	if (!out)
		throw InputError("failed writing " + path.string());
}

} // namespace capsched::io
