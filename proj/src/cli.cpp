#include "jnmf/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jnmf/analysis.hpp"
#include "jnmf/chamfer.hpp"
#include "jnmf/csv.hpp"
#include "jnmf/error.hpp"
#include "jnmf/experiments.hpp"
#include "jnmf/similarity.hpp"
#include "jnmf/synthesis.hpp"
#include "jnmf/text.hpp"

namespace jnmf::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Option bookkeeping: every registered option can be echoed into a sidecar
// and read back through --config.

std::string to_text(const std::string& v) { return v; }
std::string to_text(bool v) { return v ? "true" : "false"; }
std::string to_text(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}
template <typename T>
  requires std::is_integral_v<T>
std::string to_text(T v) {
  return std::to_string(v);
}

class OptionEcho {
 public:
  template <typename T>
  CLI::Option* option(CLI::App* app, const std::string& name, T& var, const std::string& help) {
    entries_.emplace_back(name, [&var] { return to_text(var); });
    return app->add_option("--" + name, var, help)->capture_default_str();
  }

  CLI::Option* flag(CLI::App* app, const std::string& name, bool& var, const std::string& help) {
    entries_.emplace_back(name, [&var] { return to_text(var); });
    return app->add_flag("--" + name, var, help);
  }

  json to_json() const {
    json out = json::object();
    for (const auto& [name, get] : entries_) out[name] = get();
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::function<std::string()>>> entries_;
};

struct SimilarityOptions {
  std::size_t rank = 10;
  std::size_t samples = 500;
  std::size_t max_iter = 500;
  double tol = 1e-6;
  double eps_guard = 1e-12;
  double threshold = 0.05;
  std::string scaling = "mean_one";

  SimilarityConfig build(std::size_t trials) const {
    SimilarityConfig cfg;
    cfg.rank = rank;
    cfg.num_samples = samples;
    cfg.num_trials = trials;
    cfg.norm_threshold_fraction = threshold;
    cfg.scaling = parse_column_scaling(scaling);
    cfg.nmf.rank = rank;
    cfg.nmf.max_iterations = max_iter;
    cfg.nmf.tolerance = tol;
    cfg.nmf.epsilon_guard = eps_guard;
    cfg.validate();
    return cfg;
  }
};

void add_similarity_options(CLI::App* app, OptionEcho& echo, SimilarityOptions& o) {
  echo.option(app, "rank", o.rank, "jNMF rank k");
  echo.option(app, "samples", o.samples, "threshold draws K per profile");
  echo.option(app, "max-iter", o.max_iter, "multiplicative-update iteration cap");
  echo.option(app, "tol", o.tol, "relative objective change that stops NMF");
  echo.option(app, "eps-guard", o.eps_guard, "denominator guard of the updates");
  echo.option(app, "threshold", o.threshold, "column-norm fraction below which columns are not scaled");
  echo.option(app, "scaling", o.scaling, "column normalization: mean_one or unit_norm");
}

struct SwimmerOptions {
  std::size_t canvas_rows = 11;
  std::size_t canvas_cols = 20;
  std::size_t limb_positions = 4;
  std::size_t limbs = 4;

  SwimmerSpec spec() const { return {canvas_rows, canvas_cols, limb_positions, limbs}; }
};

void add_swimmer_options(CLI::App* app, OptionEcho& echo, SwimmerOptions& o) {
  echo.option(app, "canvas-rows", o.canvas_rows, "Swimmer image height");
  echo.option(app, "canvas-cols", o.canvas_cols, "Swimmer image width");
  echo.option(app, "limb-positions", o.limb_positions, "positions per limb (1-4)");
  echo.option(app, "limbs", o.limbs, "number of limbs (1-4)");
}

// ---------------------------------------------------------------------------
// Error plumbing.

template <typename F>
auto stage(const std::string& name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const DimensionError& e) {
    throw DimensionError(name + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(name + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(name + ": " + e.what());
  } catch (const IoError& e) {
    throw IoError(name + ": " + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError(name + ": " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

fs::path sidecar_for(const fs::path& output) { return fs::path(output.string() + ".json"); }

json stats_json(const SampleStats& s, const std::vector<double>& values) {
  return {{"mean", s.mean}, {"std", s.standard_deviation}, {"se", s.standard_error}, {"values", values}};
}

// ---------------------------------------------------------------------------
// --config expansion.

std::string strip_quotes(std::string v) {
  if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') || (v.front() == '\'' && v.back() == '\''))) {
    return v.substr(1, v.size() - 2);
  }
  return v;
}

std::vector<std::pair<std::string, std::string>> read_config_items(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::vector<std::pair<std::string, std::string>> items;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError("config " + path.string() + ": " + e.what());
    }
    const json& cfg = doc.contains("config") ? doc.at("config") : doc;
    if (!cfg.is_object()) throw ParseError("config " + path.string() + ": no config object");
    for (const auto& [key, value] : cfg.items()) {
      items.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
    }
    return items;
  }

  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config " + path.string() + ":" + std::to_string(line_no) +
                       ": expected key = value");
    }
    items.emplace_back(trim(line.substr(0, eq)), strip_quotes(trim(line.substr(eq + 1))));
  }
  return items;
}

// Inserts --key=value pairs from a --config file right after the
// subcommand, so that later command-line flags take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config_path.empty() || rest.size() < 2) return rest;
  std::vector<std::string> out{rest[0], rest[1]};
  for (const auto& [key, value] : read_config_items(config_path)) {
    // An empty value means "not set"; CLI11 would otherwise take the next
    // argument as the value.
    if (value.empty()) continue;
    out.push_back("--" + key + "=" + value);
  }
  out.insert(out.end(), rest.begin() + 2, rest.end());
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands.

struct Context {
  std::ostream& out;
  std::ostream& err;
};

struct DistanceCommand {
  OptionEcho echo;
  std::string x1, x2, measure = "jnmf", out_path, basis_out;
  bool header = false;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  SimilarityOptions sim;

  void attach(CLI::App* app) {
    echo.option(app, "x1", x1, "first dataset (CSV, columns are points)")->required();
    echo.option(app, "x2", x2, "second dataset (CSV)")->required();
    echo.flag(app, "header", header, "CSV files start with a label row");
    echo.option(app, "measure", measure, "jnmf or chamfer");
    echo.option(app, "trials", trials, "independent runs to average");
    echo.option(app, "seed", seed, "root random seed");
    add_similarity_options(app, echo, sim);
    echo.option(app, "out", out_path, "result JSON (stdout when empty)");
    echo.option(app, "basis-out", basis_out, "CSV dump of the trial-0 basis A");
  }

  void run(Context& ctx) {
    const Measure m = stage("arguments", [&] { return parse_measure(measure); });
    const SimilarityConfig cfg = stage("arguments", [&] { return sim.build(trials); });
    const CsvOptions csv{header};
    const Matrix a = stage("reading --x1", [&] { return matrix_from_csv(x1, csv); });
    const Matrix b = stage("reading --x2", [&] { return matrix_from_csv(x2, csv); });

    json result{{"measure", to_string(m)}, {"seed", seed}, {"trials", trials}};
    if (m == Measure::chamfer) {
      result["distance"] = stage("chamfer", [&] {
        return chamfer_distance(scale_columns(a, cfg.scaling, cfg.norm_threshold_fraction),
                                scale_columns(b, cfg.scaling, cfg.norm_threshold_fraction));
      });
    } else {
      const auto summary =
          stage("similarity", [&] { return jnmf_distance_trials(a, b, cfg, RandomSource(seed)); });
      result.update(profile_to_json(summary.first_profile, seed, trials));
      result["distance"] = summary.mean;
      result["distance_std"] = summary.standard_deviation;
      result["trial_distances"] = summary.trial_distances;
      result["p_bar_trial"] = 0;
      if (!summary.first_profile.degenerate_rows.empty()) {
        ctx.err << "warning: basis rows unused by both datasets (p_bar set to 0):";
        for (auto r : summary.first_profile.degenerate_rows) ctx.err << ' ' << r;
        ctx.err << '\n';
      }
      if (!basis_out.empty()) {
        stage("writing --basis-out", [&] { matrix_to_csv(summary.first_profile.factorization.basis, basis_out); });
      }
    }
    result["config"] = echo.to_json();
    const std::string text = result.dump(2) + "\n";
    if (out_path.empty()) {
      ctx.out << text;
    } else {
      stage("writing --out", [&] { write_text(out_path, text); });
    }
  }
};

struct PropertiesCommand {
  OptionEcho echo;
  std::string x1, out_path = "properties.csv";
  bool header = false;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  double subset_fraction = 0.9;
  double noise_level = 1.0;
  SimilarityOptions sim;
  SwimmerOptions swimmer;

  void attach(CLI::App* app) {
    echo.option(app, "x1", x1, "dataset CSV (default: generated Swimmer)");
    echo.flag(app, "header", header, "CSV starts with a label row");
    echo.option(app, "trials", trials, "trials per table column");
    echo.option(app, "seed", seed, "root random seed");
    echo.option(app, "subset-fraction", subset_fraction, "fraction of columns kept for X1~");
    echo.option(app, "noise-level", noise_level, "epsilon of X1 + epsilon N");
    add_similarity_options(app, echo, sim);
    add_swimmer_options(app, echo, swimmer);
    echo.option(app, "out", out_path, "table CSV (sidecar written to <out>.json)");
  }

  void run(Context& ctx) {
    PropertySuiteConfig cfg;
    cfg.similarity = stage("arguments", [&] { return sim.build(trials); });
    cfg.trials = trials;
    cfg.subset_fraction = subset_fraction;
    cfg.noise_level = noise_level;
    const Matrix data = stage("loading data", [&] {
      return x1.empty() ? generate_swimmer(swimmer.spec()) : matrix_from_csv(x1, CsvOptions{header});
    });
    const auto report =
        stage("property suite", [&] { return run_property_suite(data, cfg, RandomSource(seed)); });

    ctx.out << property_table_csv(report);
    json checks = json::array();
    for (const auto& c : report.checks) {
      ctx.out << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << '\n';
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    json columns = json::object();
    for (std::size_t i = 0; i < kTableColumns; ++i) {
      const auto& col = report.columns[i];
      columns[std::string(kTableColumnNames[i])] = {
          {"jnmf", stats_json(col.jnmf, col.jnmf_values)},
          {"chamfer", stats_json(col.chamfer, col.chamfer_values)}};
    }
    columns["swapped X1+N"] = {
        {"jnmf", stats_json(report.swapped_noisy.jnmf, report.swapped_noisy.jnmf_values)},
        {"chamfer", stats_json(report.swapped_noisy.chamfer, report.swapped_noisy.chamfer_values)}};
    const json sidecar{{"columns", columns}, {"checks", checks},
                       {"all_passed", report.all_passed()}, {"config", echo.to_json()}};
    stage("writing --out", [&] {
      write_text(out_path, property_table_csv(report));
      write_text(sidecar_for(out_path), sidecar.dump(2) + "\n");
    });
  }
};

struct SweepCommand {
  OptionEcho echo;
  std::string parameter = "noise_eps", x1, out_path = "sweep.csv";
  bool header = false;
  double from = -1.0, to = -1.0;
  std::size_t steps = 0;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  SimilarityOptions sim;
  SwimmerOptions swimmer;

  void attach(CLI::App* app) {
    echo.option(app, "parameter", parameter, "subset_q or noise_eps");
    echo.option(app, "from", from, "first value (default 0.88 for subset_q, 0 for noise_eps)");
    echo.option(app, "to", to, "last value (default 0.98 for subset_q, 1 for noise_eps)");
    echo.option(app, "steps", steps, "number of values (default 6 for subset_q, 11 for noise_eps)");
    echo.option(app, "x1", x1, "dataset CSV (default: generated Swimmer)");
    echo.flag(app, "header", header, "CSV starts with a label row");
    echo.option(app, "trials", trials, "trials per value");
    echo.option(app, "seed", seed, "root random seed");
    add_similarity_options(app, echo, sim);
    add_swimmer_options(app, echo, swimmer);
    echo.option(app, "out", out_path, "sweep CSV (sidecar written to <out>.json)");
  }

  void run(Context& ctx) {
    SweepConfig cfg;
    stage("arguments", [&] {
      cfg.parameter = parse_sweep_parameter(parameter);
      const bool q = cfg.parameter == SweepParameter::subset_q;
      if (from < 0.0) from = q ? 0.88 : 0.0;
      if (to < 0.0) to = q ? 0.98 : 1.0;
      if (steps == 0) steps = q ? 6 : 11;
      if (steps < 2) throw ValidationError("--steps must be at least 2");
      cfg.values = linspace(from, to, steps);
      cfg.trials = trials;
      cfg.similarity = sim.build(trials);
    });
    const Matrix data = stage("loading data", [&] {
      return x1.empty() ? generate_swimmer(swimmer.spec()) : matrix_from_csv(x1, CsvOptions{header});
    });
    const auto rows = stage("sweep", [&] { return run_sweep(data, cfg, RandomSource(seed)); });
    const std::string csv = sweep_csv(cfg.parameter, rows);
    ctx.out << csv;

    std::vector<SampleStats> jn, ch;
    for (const auto& r : rows) {
      jn.push_back(r.stats.jnmf);
      ch.push_back(r.stats.chamfer);
    }
    const Trend trend =
        cfg.parameter == SweepParameter::subset_q ? Trend::nonincreasing : Trend::nondecreasing;
    const json sidecar{{"jnmf_monotone", monotone_within(jn, trend)},
                       {"chamfer_monotone", monotone_within(ch, trend)},
                       {"trend", trend == Trend::nonincreasing ? "nonincreasing" : "nondecreasing"},
                       {"config", echo.to_json()}};
    stage("writing --out", [&] {
      write_text(out_path, csv);
      write_text(sidecar_for(out_path), sidecar.dump(2) + "\n");
    });
  }
};

struct SwimmerCommand {
  OptionEcho echo;
  std::string out_path = "swimmer.csv", pgm_dir, invert_out;
  SwimmerOptions swimmer;

  void attach(CLI::App* app) {
    add_swimmer_options(app, echo, swimmer);
    echo.option(app, "out", out_path, "matrix CSV (sidecar written to <out>.json)");
    echo.option(app, "pgm-dir", pgm_dir, "directory for one PGM image per column");
    echo.option(app, "invert-out", invert_out, "also write the inverted dataset here");
  }

  void run(Context& ctx) {
    const SwimmerSpec spec = swimmer.spec();
    const Matrix x = stage("generating", [&] { return generate_swimmer(spec); });
    stage("writing --out", [&] {
      matrix_to_csv(x, out_path);
      write_text(sidecar_for(out_path),
                 json{{"rows", x.rows()}, {"cols", x.cols()}, {"config", echo.to_json()}}.dump(2) + "\n");
    });
    if (!invert_out.empty()) {
      stage("writing --invert-out", [&] { matrix_to_csv(invert_binary(x), invert_out); });
    }
    if (!pgm_dir.empty()) {
      stage("writing --pgm-dir", [&] {
        std::error_code ec;
        fs::create_directories(pgm_dir, ec);
        if (ec) throw IoError("cannot create '" + pgm_dir + "': " + ec.message());
        for (std::size_t c = 0; c < x.cols(); ++c) {
          char name[32];
          std::snprintf(name, sizeof name, "swimmer_%03zu.pgm", c);
          const auto column = x.column(c);
          write_pgm(fs::path(pgm_dir) / name, column, spec.canvas_rows, spec.canvas_cols);
        }
      });
    }
    ctx.out << "wrote " << x.rows() << "x" << x.cols() << " matrix to " << out_path << '\n';
  }
};

struct IngestCommand {
  OptionEcho echo;
  std::string data_dir, out_path = "corpus.json";
  std::size_t max_features = 5000;
  bool strip_headers = false;

  void attach(CLI::App* app) {
    echo.option(app, "data-dir", data_dir, "one subdirectory per label, one file per document")
        ->envname("JNMFDIST_DATA_DIR");
    echo.option(app, "max-features", max_features, "vocabulary cap");
    echo.flag(app, "strip-headers", strip_headers, "drop newsgroup headers, quotes and signatures");
    echo.option(app, "out", out_path, "corpus JSON");
  }

  void run(Context& ctx) {
    if (data_dir.empty()) {
      throw ValidationError("arguments: --data-dir is required (or set JNMFDIST_DATA_DIR)");
    }
    const auto groups = stage("reading corpus", [&] { return load_text_groups(data_dir, strip_headers); });
    const auto corpus = stage("fitting tf-idf", [&] { return fit_tfidf(groups, {max_features}); });
    json doc = corpus_to_json(corpus);
    doc["config"] = echo.to_json();
    stage("writing --out", [&] { write_text(out_path, doc.dump() + "\n"); });
    ctx.out << "ingested " << corpus.document_count << " documents in " << corpus.groups.size()
            << " groups, vocabulary " << corpus.vocabulary.size() << '\n';
  }
};

struct NewsgroupsCommand {
  OptionEcho echo;
  std::string corpus_path, measure = "jnmf", out_path = "heatmap.csv";
  std::size_t trials = 50, sample_size = 100, clusters = 6, restarts = 20;
  std::uint64_t seed = 0;
  SimilarityOptions sim;

  void attach(CLI::App* app) {
    echo.option(app, "corpus", corpus_path, "corpus JSON from `ingest`")->required();
    echo.option(app, "measure", measure, "jnmf or chamfer");
    echo.option(app, "trials", trials, "trials averaged per entry");
    echo.option(app, "sample-size", sample_size, "documents sampled per group and trial");
    echo.option(app, "clusters", clusters, "k of the k-means clustering");
    echo.option(app, "restarts", restarts, "k-means restarts");
    echo.option(app, "seed", seed, "root random seed");
    add_similarity_options(app, echo, sim);
    echo.option(app, "out", out_path, "reordered matrix CSV (sidecar written to <out>.json)");
  }

  void run(Context& ctx) {
    DistanceMatrixConfig cfg;
    stage("arguments", [&] {
      cfg.measure = parse_measure(measure);
      cfg.trials = trials;
      cfg.sample_size = sample_size;
      cfg.similarity = sim.build(1);
    });
    const auto corpus = stage("reading --corpus", [&] { return corpus_from_json(read_json(corpus_path)); });
    std::vector<GroupSource> groups;
    stage("building groups", [&] {
      for (const auto& g : corpus.groups) groups.push_back({g.label, group_matrix(corpus, g.label)});
    });
    const RandomSource root(seed);
    auto result = stage("distance matrix", [&] { return distance_matrix(groups, cfg, root.derive(0)); });
    stage("clustering", [&] {
      RandomSource krng = root.derive(1);
      cluster_distance_matrix(result, clusters, krng, KMeansOptions{restarts, 300, 1e-8});
    });
    stage("writing --out", [&] {
      write_heatmap(result, out_path, sidecar_for(out_path),
                    json{{"measure", measure}, {"trials", trials}, {"seed", seed},
                         {"config", echo.to_json()}});
    });
    ctx.out << "groups: " << result.labels.size() << ", clusters: " << clusters << ", ratio: ";
    if (result.intra_inter_ratio) {
      ctx.out << *result.intra_inter_ratio << '\n';
    } else {
      ctx.out << "absent\n";
    }
  }
};

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Joint-NMF similarity profiles and distances between nonnegative datasets",
               "jnmfdist"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  DistanceCommand distance;
  PropertiesCommand properties;
  SweepCommand sweep;
  SwimmerCommand swimmer;
  IngestCommand ingest;
  NewsgroupsCommand newsgroups;
  distance.attach(app.add_subcommand("distance", "distance and p_bar profile between two datasets"));
  properties.attach(app.add_subcommand("properties", "distance-property table on Swimmer data"));
  sweep.attach(app.add_subcommand("sweep", "subset or additive-noise sweep"));
  swimmer.attach(app.add_subcommand("swimmer", "write the Swimmer dataset"));
  ingest.attach(app.add_subcommand("ingest", "tf-idf corpus from labeled text directories"));
  newsgroups.attach(app.add_subcommand("newsgroups", "clustered group distance matrix"));

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kSuccess;
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) {
        out << app.help();
        return kSuccess;
      }
      err << "error: " << e.what() << '\n';
      return kValidation;
    }

    if (app.got_subcommand("distance")) distance.run(ctx);
    else if (app.got_subcommand("properties")) properties.run(ctx);
    else if (app.got_subcommand("sweep")) sweep.run(ctx);
    else if (app.got_subcommand("swimmer")) swimmer.run(ctx);
    else if (app.got_subcommand("ingest")) ingest.run(ctx);
    else if (app.got_subcommand("newsgroups")) newsgroups.run(ctx);
    return kSuccess;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace jnmf::cli
