#ifndef COEVOLVE_IO_HPP
#define COEVOLVE_IO_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coevolve/network.hpp"
#include "coevolve/params.hpp"

namespace coevolve::io {

inline constexpr int kFormatVersion = 1;

// Event log: header "kind,destination,source,time", kind R or L, one event
// per line. Reading stops with ValidationError naming the offending line.
void write_events(std::ostream& out, const EventLog& events);
EventLog read_events(std::istream& in);
EventLog read_events(const std::filesystem::path& path);

// Initial network: header "destination,source", one edge per line, meaning
// destination follows source from time zero.
void write_edges(std::ostream& out, const NetworkState& network);
NetworkState read_edges(std::istream& in, std::size_t nodes);
NetworkState read_edges(const std::filesystem::path& path, std::size_t nodes);

// Parameter document: {"version", "omega1", "omega2", "link_variant",
// "eta", "beta", "mu", "alpha"} with one array entry per node.
std::string params_to_json(const ModelParams& p);
ModelParams params_from_json(const std::string& text);
ModelParams read_params(const std::filesystem::path& path);

struct RunConfig {
  std::size_t nodes = 0;
  Time horizon = 0.0;
  std::optional<std::uint64_t> seed;
  LinkVariant link_variant = LinkVariant::SelfDriven;
  double omega1 = 1.0;
  double omega2 = 1.0;

  // Exactly one source of parameters: homogeneous values (defaults
  // eta 1.5, mu 4e-6, beta 0.1, alpha 0.1), uniform ranges, or a file.
  enum class ParamSource { Homogeneous, Ranges, File } param_source = ParamSource::Homogeneous;
  double eta = 1.5, beta = 0.1, mu = 4e-6, alpha = 0.1;
  ParamRanges ranges;
  std::filesystem::path params_file;

  std::filesystem::path initial_network;  // empty: no initial edges
  std::filesystem::path output;           // event log written by simulate
  std::size_t max_events = 0;
  std::size_t runs = 1;
  double train_fraction = 0.8;
  std::vector<double> checkpoints;  // sparsity levels for the diameter trace

  // Resolves the parameters; ranges are drawn from the seed.
  ModelParams resolve_params() const;
  NetworkState resolve_network() const;
};

// Unknown keys, a missing version or out-of-range values throw ValidationError.
RunConfig config_from_json(const std::string& text);
RunConfig read_config(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

// Writes through a temporary file in the same directory and renames it into
// place, so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

// Shortest decimal form that reads back to the same double.
std::string format_double(double x);

}  // namespace coevolve::io

#endif  // COEVOLVE_IO_HPP
