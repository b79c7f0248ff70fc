#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jnmf/cli.hpp"
#include "jnmf/csv.hpp"
#include "jnmf/random.hpp"
#include "jnmf/synthesis.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "jnmfdist");
  std::ostringstream out, err;
  const int code = jnmf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path workdir() {
  const fs::path dir = fs::temp_directory_path() / "jnmf_cli";
  fs::create_directories(dir);
  return dir;
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

std::string small_swimmer() {
  const auto path = workdir() / "small.csv";
  jnmf::matrix_to_csv(jnmf::generate_swimmer({11, 20, 2, 4}), path);
  return path.string();
}

const std::vector<std::string> kQuick{"--rank", "3", "--samples", "50", "--max-iter", "30"};

std::vector<std::string> with_quick(std::vector<std::string> args) {
  args.insert(args.end(), kQuick.begin(), kQuick.end());
  return args;
}

}  // namespace

TEST_CASE("cli exit codes") {
  const std::string x = small_swimmer();
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"distance", "--x1", x}).code == 1);
  const auto rank0 = cli({"distance", "--x1", x, "--x2", x, "--rank", "0"});
  CHECK(rank0.code == 1);
  CHECK(rank0.err.find("rank") != std::string::npos);
  const auto missing = cli({"distance", "--x1", x, "--x2", (workdir() / "missing.csv").string()});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--x2") != std::string::npos);

  const auto bad = workdir() / "ragged.csv";
  std::ofstream(bad) << "1,2\n3\n";
  CHECK(cli({"distance", "--x1", bad.string(), "--x2", x}).code == 1);
  const auto neg = workdir() / "neg.csv";
  std::ofstream(neg) << "1,-2\n3,4\n";
  CHECK(cli({"distance", "--x1", neg.string(), "--x2", neg.string()}).code == 1);
  CHECK(cli({"distance", "--x1", x, "--x2", x, "--out", "/nonexistent/dir/o.json", "--measure",
             "chamfer"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli distance output") {
  const std::string x = small_swimmer();
  const auto out = workdir() / "d.json";
  const auto basis = workdir() / "basis.csv";
  const auto r = cli(with_quick({"distance", "--x1", x, "--x2", x, "--trials", "2", "--seed", "4",
                                 "--out", out.string(), "--basis-out", basis.string()}));
  REQUIRE(r.code == 0);
  const json d = read_json(out);
  CHECK(d.at("p_bar").size() == 3);
  CHECK(d.at("seed") == 4);
  CHECK(d.at("trial_distances").size() == 2);
  CHECK(d.at("distance").get<double>() < 0.5);
  CHECK(d.at("config").at("rank") == "3");
  CHECK(jnmf::matrix_from_csv(basis).cols() == 3);

  const auto c = cli({"distance", "--x1", x, "--x2", x, "--measure", "chamfer"});
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out).at("distance") == 0.0);
}

TEST_CASE("cli config precedence") {
  const std::string x = small_swimmer();
  const auto cfg = workdir() / "run.cfg";
  std::ofstream(cfg) << "# comment\nmeasure = chamfer\nx1 = " << x << "\nx2 = " << x
                     << "\nseed = 9\ntrials = 7\n";
  auto r = cli({"distance", "--config", cfg.string()});
  REQUIRE(r.code == 0);
  json d = json::parse(r.out);
  CHECK(d.at("measure") == "chamfer");
  CHECK(d.at("trials") == 7);
  r = cli({"distance", "--config", cfg.string(), "--trials", "3"});
  REQUIRE(r.code == 0);
  d = json::parse(r.out);
  CHECK(d.at("trials") == 3);
  CHECK(d.at("seed") == 9);

  // A sidecar is itself a valid config.
  const auto side = workdir() / "side.json";
  std::ofstream(side) << d.dump();
  r = cli({"distance", "--config", side.string()});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out).at("config") == d.at("config"));

  CHECK(cli({"distance", "--config", (workdir() / "none.cfg").string()}).code == 2);
}

TEST_CASE("cli swimmer") {
  const auto dir = workdir() / "swim";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto r = cli({"swimmer", "--out", (dir / "s.csv").string(), "--pgm-dir", (dir / "pgm").string(),
                      "--limb-positions", "2"});
  REQUIRE(r.code == 0);
  CHECK(jnmf::matrix_from_csv(dir / "s.csv") == jnmf::generate_swimmer({11, 20, 2, 4}));
  CHECK(std::distance(fs::directory_iterator(dir / "pgm"), fs::directory_iterator()) == 16);
  CHECK(read_json(dir / "s.csv.json").at("config").at("limb-positions") == "2");
  CHECK(cli({"swimmer", "--out", (dir / "t.csv").string(), "--canvas-rows", "4"}).code == 1);
}

TEST_CASE("cli properties and sweep") {
  const auto dir = workdir();
  const auto p = cli(with_quick({"properties", "--limb-positions", "2", "--trials", "2", "--out",
                                 (dir / "props.csv").string()}));
  REQUIRE(p.code == 0);
  CHECK(p.out.find("P2 self-similarity (chamfer)") != std::string::npos);
  const json side = read_json(dir / "props.csv.json");
  CHECK(side.at("checks").size() == 14);
  CHECK(side.at("columns").contains("X1+N"));

  const auto s = cli(with_quick({"sweep", "--parameter", "subset_q", "--limb-positions", "2",
                                 "--trials", "2", "--steps", "2", "--out", (dir / "sweep.csv").string()}));
  REQUIRE(s.code == 0);
  std::ifstream in(dir / "sweep.csv");
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header == "parameter,value,jnmf_mean,jnmf_std,jnmf_se,chamfer_mean,chamfer_std,chamfer_se");
  CHECK(first.rfind("subset_q,0.88,", 0) == 0);
  const json sweep_side = read_json(dir / "sweep.csv.json");
  CHECK(sweep_side.at("trend") == "nonincreasing");
}

TEST_CASE("cli ingest and newsgroups") {
  const auto dir = workdir() / "news";
  fs::remove_all(dir);
  const std::vector<std::vector<std::string>> topics{{"rocket", "orbit", "launch", "nasa"},
                                                     {"engine", "wheel", "brake", "car"}};
  jnmf::RandomSource rng(1);
  for (std::size_t t = 0; t < 2; ++t) {
    for (int g = 0; g < 2; ++g) {
      const auto gdir = dir / "data" / ("t" + std::to_string(t) + "g" + std::to_string(g));
      fs::create_directories(gdir);
      for (int d = 0; d < 8; ++d) {
        std::ofstream f(gdir / ("d" + std::to_string(d)));
        for (int w = 0; w < 12; ++w) f << topics[t][rng.uniform_index(4)] << ' ';
      }
    }
  }
  const auto corpus = dir / "corpus.json";
  CHECK(cli({"ingest", "--out", corpus.string()}).code == 1);
  auto r = cli({"ingest", "--data-dir", (dir / "data").string(), "--out", corpus.string()});
  REQUIRE(r.code == 0);
  CHECK(read_json(corpus).at("vocabulary").size() == 8);

  const auto heat = dir / "heat.csv";
  r = cli({"newsgroups", "--corpus", corpus.string(), "--measure", "chamfer", "--trials", "2",
           "--sample-size", "5", "--clusters", "2", "--out", heat.string()});
  REQUIRE(r.code == 0);
  const json side = read_json(fs::path(heat.string() + ".json"));
  const auto cluster_of = side.at("cluster_of");
  CHECK(cluster_of[0] == cluster_of[1]);
  CHECK(cluster_of[2] == cluster_of[3]);
  CHECK(cluster_of[0] != cluster_of[2]);
  CHECK(side.at("ratio").get<double>() < 0.5);
  CHECK(side.at("measure") == "chamfer");
  CHECK(cli({"newsgroups", "--corpus", (dir / "missing.json").string()}).code == 2);
}
