#include "coevolve/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "coevolve/errors.hpp"

namespace coevolve::io {

namespace {

using nlohmann::json;

constexpr const char* kEventHeader = "kind,destination,source,time";
constexpr const char* kEdgeHeader = "destination,source";

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
  throw ValidationError("line " + std::to_string(line_no) + ": " + what);
}

NodeId parse_node(const std::string& text, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
      v > std::numeric_limits<NodeId>::max())
    bad_line(line_no, "invalid node id '" + text + "'");
  return static_cast<NodeId>(v);
}

double parse_time(const std::string& text, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || !std::isfinite(v))
    bad_line(line_no, "invalid time '" + text + "'");
  return v;
}

// Yields non-blank lines with their 1-based numbers, without trailing '\r'.
template <typename F>
void for_each_line(std::istream& in, F&& f) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    f(line, line_no);
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return in;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

void check_keys(const json& doc, const std::set<std::string>& allowed, const std::string& what) {
  if (!doc.is_object()) throw ValidationError(what + " must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!allowed.count(key)) throw ValidationError("unknown key '" + key + "' in " + what);
}

void check_version(const json& doc, const std::string& what) {
  if (!doc.contains("version")) throw ValidationError(what + " lacks a version field");
  if (!doc["version"].is_number_integer() || doc["version"].get<int>() != kFormatVersion)
    throw ValidationError(what + " has unsupported version");
}

template <typename T>
T get(const json& doc, const std::string& key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError("bad value for '" + key + "': " + e.what());
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw NumericalError("cannot format number");
  return std::string(buf, ptr);
}

void write_events(std::ostream& out, const EventLog& events) {
  out << kEventHeader << '\n';
  for (const Event& e : events)
    out << kind_code(e.kind) << ',' << e.destination << ',' << e.source << ','
        << format_double(e.time) << '\n';
}

EventLog read_events(std::istream& in) {
  EventLog events;
  bool header = false;
  for_each_line(in, [&](const std::string& line, std::size_t line_no) {
    if (!header) {
      if (line != kEventHeader) bad_line(line_no, std::string("expected header '") + kEventHeader + "'");
      header = true;
      return;
    }
    const auto f = split_fields(line);
    if (f.size() != 4) bad_line(line_no, "expected 4 fields, got " + std::to_string(f.size()));
    EventKind kind;
    if (f[0] == "R")
      kind = EventKind::Retweet;
    else if (f[0] == "L")
      kind = EventKind::Link;
    else
      bad_line(line_no, "unknown event kind '" + f[0] + "'");
    events.push_back(Event{kind, parse_node(f[1], line_no), parse_node(f[2], line_no),
                           parse_time(f[3], line_no)});
  });
  if (!header) throw ValidationError("event log is empty (no header)");
  return events;
}

EventLog read_events(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_events(in);
}

void write_edges(std::ostream& out, const NetworkState& network) {
  out << kEdgeHeader << '\n';
  for (NodeId u = 0; u < network.nodes(); ++u)
    for (const Edge& e : network.followees(u)) out << u << ',' << e.node << '\n';
}

NetworkState read_edges(std::istream& in, std::size_t nodes) {
  NetworkState network(nodes);
  bool header = false;
  for_each_line(in, [&](const std::string& line, std::size_t line_no) {
    if (!header) {
      if (line != kEdgeHeader) bad_line(line_no, std::string("expected header '") + kEdgeHeader + "'");
      header = true;
      return;
    }
    const auto f = split_fields(line);
    if (f.size() != 2) bad_line(line_no, "expected 2 fields, got " + std::to_string(f.size()));
    try {
      network.add_edge(parse_node(f[0], line_no), parse_node(f[1], line_no), 0.0);
    } catch (const HistoryError&) {
      throw;
    } catch (const ValidationError& e) {
      bad_line(line_no, e.what());
    }
  });
  if (!header) throw ValidationError("edge list is empty (no header)");
  return network;
}

NetworkState read_edges(const std::filesystem::path& path, std::size_t nodes) {
  auto in = open_input(path);
  return read_edges(in, nodes);
}

std::string params_to_json(const ModelParams& p) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["omega1"] = p.omega1;
  doc["omega2"] = p.omega2;
  doc["link_variant"] = to_string(p.link_variant);
  doc["eta"] = p.eta;
  doc["beta"] = p.beta;
  doc["mu"] = p.mu;
  doc["alpha"] = p.alpha;
  return doc.dump(2) + "\n";
}

ModelParams params_from_json(const std::string& text) {
  const json doc = parse_json(text);
  check_keys(doc, {"version", "omega1", "omega2", "link_variant", "eta", "beta", "mu", "alpha"},
             "parameter file");
  check_version(doc, "parameter file");
  ModelParams p;
  p.eta = get<std::vector<double>>(doc, "eta");
  p.beta = get<std::vector<double>>(doc, "beta");
  p.mu = get<std::vector<double>>(doc, "mu");
  p.alpha = get<std::vector<double>>(doc, "alpha");
  if (doc.contains("omega1")) p.omega1 = get<double>(doc, "omega1");
  if (doc.contains("omega2")) p.omega2 = get<double>(doc, "omega2");
  if (doc.contains("link_variant")) p.link_variant = parse_link_variant(get<std::string>(doc, "link_variant"));
  p.validate();
  return p;
}

ModelParams read_params(const std::filesystem::path& path) { return params_from_json(read_file(path)); }

ModelParams RunConfig::resolve_params() const {
  switch (param_source) {
    case ParamSource::Homogeneous:
      return ModelParams::homogeneous(nodes, eta, beta, mu, alpha, omega1, omega2, link_variant);
    case ParamSource::Ranges:
      if (!seed) throw ValidationError("drawing parameters needs a seed");
      return draw_params(nodes, ranges, *seed, omega1, omega2, link_variant);
    case ParamSource::File: {
      ModelParams p = read_params(params_file);
      if (p.nodes() != nodes) throw ValidationError("parameter file size does not match nodes");
      return p;
    }
  }
  throw ValidationError("no parameter source");
}

NetworkState RunConfig::resolve_network() const {
  if (initial_network.empty()) return NetworkState(nodes);
  return read_edges(initial_network, nodes);
}

RunConfig config_from_json(const std::string& text) {
  const json doc = parse_json(text);
  check_keys(doc,
             {"version", "nodes", "horizon", "seed", "link_variant", "omega1", "omega2", "params",
              "param_ranges", "params_file", "initial_network", "output", "max_events", "runs",
              "train_fraction", "checkpoints"},
             "run config");
  check_version(doc, "run config");
  RunConfig c;
  c.nodes = get<std::size_t>(doc, "nodes");
  c.horizon = get<double>(doc, "horizon");
  if (c.nodes == 0) throw ValidationError("nodes must be positive");
  if (!(c.horizon > 0.0) || !std::isfinite(c.horizon)) throw ValidationError("horizon must be positive");
  if (doc.contains("seed")) c.seed = get<std::uint64_t>(doc, "seed");
  if (doc.contains("link_variant")) c.link_variant = parse_link_variant(get<std::string>(doc, "link_variant"));
  if (doc.contains("omega1")) c.omega1 = get<double>(doc, "omega1");
  if (doc.contains("omega2")) c.omega2 = get<double>(doc, "omega2");
  if (!(c.omega1 > 0.0) || !(c.omega2 > 0.0)) throw ValidationError("kernel decay rates must be positive");

  const int sources = static_cast<int>(doc.contains("params")) +
                      static_cast<int>(doc.contains("param_ranges")) +
                      static_cast<int>(doc.contains("params_file"));
  if (sources > 1) throw ValidationError("give only one of params, param_ranges, params_file");
  if (doc.contains("params")) {
    const json& p = doc["params"];
    check_keys(p, {"eta", "beta", "mu", "alpha"}, "params");
    if (p.contains("eta")) c.eta = get<double>(p, "eta");
    if (p.contains("beta")) c.beta = get<double>(p, "beta");
    if (p.contains("mu")) c.mu = get<double>(p, "mu");
    if (p.contains("alpha")) c.alpha = get<double>(p, "alpha");
  } else if (doc.contains("param_ranges")) {
    c.param_source = RunConfig::ParamSource::Ranges;
    const json& r = doc["param_ranges"];
    check_keys(r, {"eta", "beta", "mu", "alpha"}, "param_ranges");
    auto range = [&](const char* key, double& lo, double& hi) {
      if (!r.contains(key)) return;
      const auto v = get<std::vector<double>>(r, key);
      if (v.size() != 2 || !(v[0] >= 0.0) || !(v[1] >= v[0]))
        throw ValidationError(std::string("range '") + key + "' must be [lo, hi] with 0 <= lo <= hi");
      lo = v[0];
      hi = v[1];
    };
    range("eta", c.ranges.eta_lo, c.ranges.eta_hi);
    range("beta", c.ranges.beta_lo, c.ranges.beta_hi);
    range("mu", c.ranges.mu_lo, c.ranges.mu_hi);
    range("alpha", c.ranges.alpha_lo, c.ranges.alpha_hi);
  } else if (doc.contains("params_file")) {
    c.param_source = RunConfig::ParamSource::File;
    c.params_file = get<std::string>(doc, "params_file");
  }
  for (double v : {c.eta, c.beta, c.mu, c.alpha})
    if (!(v >= 0.0) || !std::isfinite(v)) throw ValidationError("parameters must be finite and non-negative");

  if (doc.contains("initial_network")) c.initial_network = get<std::string>(doc, "initial_network");
  if (doc.contains("output")) c.output = get<std::string>(doc, "output");
  if (doc.contains("max_events")) c.max_events = get<std::size_t>(doc, "max_events");
  if (doc.contains("runs")) c.runs = get<std::size_t>(doc, "runs");
  if (c.runs == 0) throw ValidationError("runs must be positive");
  if (doc.contains("train_fraction")) c.train_fraction = get<double>(doc, "train_fraction");
  if (!(c.train_fraction > 0.0 && c.train_fraction < 1.0))
    throw ValidationError("train_fraction must lie in (0, 1)");
  if (doc.contains("checkpoints")) c.checkpoints = get<std::vector<double>>(doc, "checkpoints");
  for (std::size_t i = 0; i < c.checkpoints.size(); ++i)
    if (!(c.checkpoints[i] >= 0.0) || (i > 0 && c.checkpoints[i] < c.checkpoints[i - 1]))
      throw ValidationError("checkpoints must be non-negative and ascending");
  return c;
}

RunConfig read_config(const std::filesystem::path& path) {
  RunConfig c = config_from_json(read_file(path));
  // Relative paths inside the config are relative to the config file.
  const auto base = path.parent_path();
  auto rebase = [&](std::filesystem::path& p) {
    if (!p.empty() && p.is_relative()) p = base / p;
  };
  rebase(c.params_file);
  rebase(c.initial_network);
  rebase(c.output);
  return c;
}

std::string read_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << contents;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw ValidationError("failed writing " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ValidationError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace coevolve::io
