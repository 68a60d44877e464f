// coevolve: simulate, fit, predict, analyze and check joint retweet/link
// event logs.
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 numerical failure.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "coevolve/analysis.hpp"
#include "coevolve/errors.hpp"
#include "coevolve/estimator.hpp"
#include "coevolve/io.hpp"
#include "coevolve/prediction.hpp"
#include "coevolve/random.hpp"
#include "coevolve/simulator.hpp"
#include "coevolve/stats.hpp"

namespace fs = std::filesystem;
using namespace coevolve;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kValidation = 2, kNumerical = 3 };

// Outputs are staged in memory and written only once the whole command has
// succeeded.
class Outputs {
 public:
  void add(fs::path path, std::string contents) { files_.emplace_back(std::move(path), std::move(contents)); }
  void commit() const {
    for (const auto& [path, contents] : files_) io::write_file_atomic(path, contents);
  }

 private:
  std::vector<std::pair<fs::path, std::string>> files_;
};

std::string events_csv(const EventLog& events) {
  std::ostringstream out;
  io::write_events(out, events);
  return out.str();
}

History load_history(const io::RunConfig& config, const fs::path& events) {
  History h{config.resolve_network(), io::read_events(events)};
  validate_history(h);
  return h;
}

fs::path run_path(const fs::path& base, std::size_t run, std::size_t runs) {
  if (runs == 1) return base;
  fs::path p = base;
  p.replace_filename(base.stem().string() + "_run" + std::to_string(run) + base.extension().string());
  return p;
}

FitOptions fit_options(const io::RunConfig& config) {
  FitOptions o;
  o.omega1 = config.omega1;
  o.omega2 = config.omega2;
  o.variant = config.link_variant;
  o.seed = config.seed.value_or(0);
  return o;
}

int cmd_simulate(const io::RunConfig& config, std::optional<std::uint64_t> seed_override,
                 fs::path out, std::optional<std::size_t> runs_override, const fs::path& params_out,
                 unsigned threads) {
  const std::optional<std::uint64_t> seed = seed_override ? seed_override : config.seed;
  if (!seed) throw ValidationError("simulate needs a seed (config 'seed' or --seed)");
  io::RunConfig resolved = config;
  resolved.seed = seed;
  if (out.empty()) out = config.output;
  if (out.empty()) throw ValidationError("no output path (config 'output' or --out)");
  const std::size_t runs = runs_override.value_or(config.runs);
  if (runs == 0) throw ValidationError("runs must be positive");

  const ModelParams params = resolved.resolve_params();
  const NetworkState initial = resolved.resolve_network();
  std::vector<EventLog> logs(runs);
  std::vector<std::exception_ptr> errors(runs);
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(runs)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < runs; r += workers) {
        try {
          // Run 0 uses the seed itself; later runs derive theirs from it.
          const std::uint64_t run_seed = r == 0 ? *seed : RandomStream::substream(*seed, 0xB47C4, r)();
          logs[r] = simulate(params, config.horizon, run_seed, initial, config.max_events);
        } catch (...) {
          errors[r] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Outputs outputs;
  for (std::size_t r = 0; r < runs; ++r) {
    outputs.add(run_path(out, r, runs), events_csv(logs[r]));
    std::cerr << run_path(out, r, runs).string() << ": " << logs[r].size() << " events\n";
  }
  if (!params_out.empty()) outputs.add(params_out, io::params_to_json(params));
  outputs.commit();
  return kOk;
}

int cmd_fit(const io::RunConfig& config, const fs::path& events, const fs::path& out,
            const fs::path& trace_out) {
  const History history = load_history(config, events);
  const FitResult fit = mm_fit(history, config.horizon, fit_options(config));
  for (const auto& w : fit.warnings) std::cerr << "warning: " << w << '\n';
  std::ostringstream trace;
  trace << "iteration,log_likelihood\n";
  for (std::size_t i = 0; i < fit.trace.size(); ++i)
    trace << i << ',' << io::format_double(fit.trace[i]) << '\n';
  Outputs outputs;
  outputs.add(out, io::params_to_json(fit.params));
  if (!trace_out.empty()) outputs.add(trace_out, trace.str());
  outputs.commit();
  std::cerr << "iterations=" << fit.iterations << " converged=" << (fit.converged ? "yes" : "no")
            << " log_likelihood=" << io::format_double(fit.trace.back()) << '\n';
  return kOk;
}

prediction::ActivityMode parse_mode(const std::string& mode) {
  if (mode == "nodes") return prediction::ActivityMode::Nodes;
  if (mode == "per_source") return prediction::ActivityMode::PerSource;
  if (mode == "pairs") return prediction::ActivityMode::Pairs;
  throw ValidationError("unknown activity mode '" + mode + "'");
}

void append_records(std::ostringstream& out, const std::string& task, const std::string& method,
                    const std::vector<prediction::RankRecord>& records) {
  for (const auto& r : records)
    out << task << ',' << method << ',' << r.event_index << ',' << io::format_double(r.time) << ','
        << r.truth << ',' << r.rank << ',' << r.candidates << ',' << (r.absent ? 1 : 0) << '\n';
}

int cmd_predict(const io::RunConfig& config, const fs::path& events, const fs::path& params_in,
                const std::string& mode, const fs::path& records_out, const fs::path& summary_out) {
  const History history = load_history(config, events);
  const auto split = prediction::chronological_split(history, config.train_fraction);
  if (split.test.empty()) throw ValidationError("no test events after the split");
  ModelParams fitted = params_in.empty()
                           ? mm_fit(split.train, split.train_horizon, fit_options(config)).params
                           : io::read_params(params_in);
  const auto baseline = prediction::static_hawkes_baseline(history, split.train_horizon, config.omega1);
  const auto links = prediction::compare_link_prediction(history, split.train_events, fitted);
  const auto activity = prediction::compare_activity_prediction(history, split.train_events, fitted,
                                                                baseline, parse_mode(mode));

  std::ostringstream records;
  records << "task,method,event_index,time,truth,rank,candidates,absent\n";
  append_records(records, "link", "coevolve", links.model_records);
  append_records(records, "link", "trf", links.baseline_records);
  append_records(records, "activity", "coevolve", activity.model_records);
  append_records(records, "activity", "static_hawkes", activity.baseline_records);

  std::ostringstream summary;
  summary << "task,method,train_size,cases,avg_rank,top1\n";
  auto row = [&](const char* task, const char* method, const prediction::Evaluation& ev) {
    summary << task << ',' << method << ',' << split.train_events << ',' << ev.cases << ','
            << io::format_double(ev.avg_rank) << ',' << io::format_double(ev.top1) << '\n';
  };
  row("link", "coevolve", links.model);
  row("link", "trf", links.baseline);
  row("activity", "coevolve", activity.model);
  row("activity", "static_hawkes", activity.baseline);

  Outputs outputs;
  if (!records_out.empty()) outputs.add(records_out, records.str());
  outputs.add(summary_out, summary.str());
  outputs.commit();
  std::cout << summary.str();
  return kOk;
}

template <typename Map>
std::string histogram_csv(const std::string& header, const Map& m) {
  std::ostringstream out;
  out << header << '\n';
  for (const auto& [k, v] : m) out << k << ',' << v << '\n';
  return out.str();
}

int cmd_analyze(const io::RunConfig& config, const fs::path& events, const fs::path& out_dir,
                const fs::path& params_in, std::optional<NodeId> node, std::size_t points,
                std::size_t max_lag) {
  const History history = load_history(config, events);
  NetworkState final_network = history.initial;
  for (const Event& e : history.events)
    if (e.kind == EventKind::Link) final_network.add_edge(e.destination, e.source, e.time);

  Outputs outputs;
  const auto degrees = analysis::degree_distribution(final_network);
  {
    std::ostringstream out;
    out << "direction,degree,count\n";
    for (const auto& [d, c] : degrees.in.histogram) out << "in," << d << ',' << c << '\n';
    for (const auto& [d, c] : degrees.out.histogram) out << "out," << d << ',' << c << '\n';
    outputs.add(out_dir / "degrees.csv", out.str());
  }
  if (!config.checkpoints.empty()) {
    std::ostringstream out;
    out << "sparsity,diameter\n";
    for (const auto& p : analysis::diameter_trace(history, config.checkpoints))
      out << io::format_double(p.sparsity) << ',' << p.diameter << '\n';
    outputs.add(out_dir / "diameter.csv", out.str());
  }
  const auto cascades = analysis::cascade_stats(history);
  outputs.add(out_dir / "cascade_sizes.csv", histogram_csv("size,count", cascades.sizes));
  outputs.add(out_dir / "cascade_depths.csv", histogram_csv("depth,count", cascades.depths));
  outputs.add(out_dir / "cascade_shapes.csv", histogram_csv("shape,count", cascades.census));

  std::ostringstream summary;
  summary << "metric,value\n";
  summary << "nodes," << final_network.nodes() << '\n';
  summary << "edges," << final_network.edge_count() << '\n';
  summary << "clustering," << io::format_double(analysis::clustering_coefficient(final_network)) << '\n';
  summary << "lcc_diameter," << analysis::lcc_diameter(final_network) << '\n';
  summary << "in_degree_dispersion," << io::format_double(degrees.in.dispersion) << '\n';
  summary << "out_degree_dispersion," << io::format_double(degrees.out.dispersion) << '\n';
  if (degrees.in.fit) summary << "in_degree_exponent," << io::format_double(degrees.in.fit->exponent) << '\n';
  summary << "cascades," << cascades.cascades.size() << '\n';
  summary << "orphan_retweets," << cascades.orphans << '\n';

  if (node) {
    if (params_in.empty()) throw ValidationError("--node needs --params");
    const ModelParams p = io::read_params(params_in);
    const auto series = analysis::node_intensity_series(history, p, *node, config.horizon, points);
    std::ostringstream out;
    out << "time,retweet_intensity,link_intensity\n";
    for (std::size_t k = 0; k < series.retweet.values.size(); ++k)
      out << io::format_double(series.retweet.t0 + series.retweet.dt * static_cast<double>(k)) << ','
          << io::format_double(series.retweet.values[k]) << ','
          << io::format_double(series.link.values[k]) << '\n';
    outputs.add(out_dir / "intensity.csv", out.str());
    std::ostringstream cov;
    cov << "lag,value\n";
    for (const auto& lv : analysis::cross_covariance(series.retweet, series.link, max_lag))
      cov << io::format_double(lv.lag) << ',' << io::format_double(lv.value) << '\n';
    outputs.add(out_dir / "cross_covariance.csv", cov.str());
  }
  outputs.add(out_dir / "summary.csv", summary.str());
  fs::create_directories(out_dir);
  outputs.commit();
  return kOk;
}

int cmd_check(const io::RunConfig& config, const fs::path& events, const fs::path& params_in,
              const fs::path& out) {
  const History history = load_history(config, events);
  const ModelParams p = io::read_params(params_in);
  const auto residuals = time_change_residuals(history, p);
  if (residuals.empty()) throw ValidationError("no residuals: the log has no events");
  const double d = stats::ks_exponential(residuals);
  const double pv = stats::ks_p_value(d, static_cast<double>(residuals.size()));

  // QQ data: sorted residuals against unit-exponential quantiles.
  auto sorted = residuals;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream csv;
  csv << "residual,exponential_quantile\n";
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    csv << io::format_double(sorted[i]) << ','
        << io::format_double(-std::log1p(-(static_cast<double>(i) + 0.5) / n)) << '\n';
  Outputs outputs;
  if (!out.empty()) outputs.add(out, csv.str());
  outputs.commit();
  std::cout << "residuals=" << residuals.size() << " ks_statistic=" << io::format_double(d)
            << " p_value=" << io::format_double(pv) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint simulation and inference of retweet and link events"};
  app.require_subcommand(1);

  std::string config_path, events_path, out_path, params_path, trace_path, records_path, mode = "nodes";
  std::string params_out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  std::optional<NodeId> node;
  std::size_t points = 200, max_lag = 50;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());

  auto* sim = app.add_subcommand("simulate", "Sample an event log");
  sim->add_option("-c,--config", config_path, "run config (JSON)")->required()->check(CLI::ExistingFile);
  sim->add_option("-o,--out", out_path, "event log to write");
  sim->add_option("--seed", seed, "override the config seed");
  sim->add_option("--runs", runs, "independent runs, written as <out>_run<k>");
  sim->add_option("--threads", threads, "worker threads for batch runs");
  sim->add_option("--params-out", params_out, "also write the resolved parameters");

  auto* fit = app.add_subcommand("fit", "Estimate parameters from an event log");
  fit->add_option("-c,--config", config_path, "run config (JSON)")->required()->check(CLI::ExistingFile);
  fit->add_option("-e,--events", events_path, "event log")->required()->check(CLI::ExistingFile);
  fit->add_option("-o,--out", out_path, "parameter file to write")->required();
  fit->add_option("--trace", trace_path, "per-iteration log-likelihood CSV");

  auto* pred = app.add_subcommand("predict", "Held-out link-source and activity prediction");
  pred->add_option("-c,--config", config_path, "run config (JSON)")->required()->check(CLI::ExistingFile);
  pred->add_option("-e,--events", events_path, "event log")->required()->check(CLI::ExistingFile);
  pred->add_option("-p,--params", params_path, "use these parameters instead of fitting")->check(CLI::ExistingFile);
  pred->add_option("--mode", mode, "activity candidates: nodes, per_source or pairs");
  pred->add_option("--records", records_path, "per-event rank records CSV");
  pred->add_option("-o,--out", out_path, "summary CSV")->required();

  auto* an = app.add_subcommand("analyze", "Network and cascade statistics");
  an->add_option("-c,--config", config_path, "run config (JSON)")->required()->check(CLI::ExistingFile);
  an->add_option("-e,--events", events_path, "event log")->required()->check(CLI::ExistingFile);
  an->add_option("-o,--out-dir", out_path, "directory for the CSV files")->required();
  an->add_option("-p,--params", params_path, "parameters for intensity series")->check(CLI::ExistingFile);
  an->add_option("--node", node, "node whose intensities and cross-covariance are written");
  an->add_option("--points", points, "grid points for intensity series");
  an->add_option("--max-lag", max_lag, "largest cross-covariance lag in grid steps");

  auto* chk = app.add_subcommand("check", "Time-change residuals and KS statistic");
  chk->add_option("-c,--config", config_path, "run config (JSON)")->required()->check(CLI::ExistingFile);
  chk->add_option("-e,--events", events_path, "event log")->required()->check(CLI::ExistingFile);
  chk->add_option("-p,--params", params_path, "parameters")->required()->check(CLI::ExistingFile);
  chk->add_option("-o,--out", out_path, "residual QQ data CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const io::RunConfig config = io::read_config(config_path);
    if (sim->parsed()) return cmd_simulate(config, seed, out_path, runs, params_out, threads);
    if (fit->parsed()) return cmd_fit(config, events_path, out_path, trace_path);
    if (pred->parsed()) return cmd_predict(config, events_path, params_path, mode, records_path, out_path);
    if (an->parsed()) return cmd_analyze(config, events_path, out_path, params_path, node, points, max_lag);
    if (chk->parsed()) return cmd_check(config, events_path, params_path, out_path);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}
