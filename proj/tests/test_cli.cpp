#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "cli/app.hpp"
#include "cli/registry.hpp"
#include "cli/sweep.hpp"
#include "dobinski/matrix_elements.hpp"
#include "oracles.hpp"

using namespace dobinski;
using namespace dobinski::cli;
using Catch::Matchers::ContainsSubstring;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "dobinski_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("table stirling2 contains S(4,2) = 7") {
  const auto r = invoke({"table", "--kind", "stirling2", "--n-max", "4"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  CHECK(rows[0] == std::vector<std::string>{"n", "k", "value"});
  CHECK(rows.size() == 1 + 15);
  CHECK(std::find(rows.begin(), rows.end(), std::vector<std::string>{"4", "2", "7"}) != rows.end());
}

TEST_CASE("table entries agree with set-partition enumeration") {
  const auto rows = csv_rows(invoke({"table", "--kind", "stirling2", "--n-max", "8"}).out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const unsigned n = std::stoul(rows[i][0]);
    const unsigned k = std::stoul(rows[i][1]);
    CHECK(std::stoull(rows[i][2]) == oracle::set_partition_counts(n)[k]);
  }
}

TEST_CASE("table bell ends with B(5) = 52") {
  const auto r = invoke({"table", "--kind", "bell", "--n-max", "5"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  CHECK(rows.back()[0] == "5");
  CHECK(rows.back()[1] == "52");
}

TEST_CASE("table stirling1 row n = 3") {
  const auto rows = csv_rows(invoke({"table", "--kind", "stirling1", "--n-max", "3"}).out);
  std::vector<std::vector<std::string>> row3;
  for (const auto& r : rows) {
    if (r[0] == "3") row3.push_back(r);
  }
  REQUIRE(row3.size() == 4);
  CHECK(row3[1][2] == "2");
  CHECK(row3[2][2] == "-3");
  CHECK(row3[3][2] == "1");
}

TEST_CASE("table stays exact at n_max = 64 and rejects 65") {
  const auto r = invoke({"table", "--kind", "bell", "--n-max", "64"});
  REQUIRE(r.code == 0);
  CHECK(csv_rows(r.out).back()[1] == "172134143357358850934369963665272571125557575184049758045339873395");
  CHECK(invoke({"table", "--kind", "bell", "--n-max", "65"}).code == 2);
  CHECK(invoke({"table", "--kind", "catalan"}).code == 2);
}

TEST_CASE("json output mirrors csv fields") {
  const auto csv = csv_rows(invoke({"table", "--kind", "stirling1", "--n-max", "3"}).out);
  const auto js = nlohmann::json::parse(invoke({"table", "--kind", "stirling1", "--n-max", "3", "--format", "json"}).out);
  REQUIRE(js.size() == csv.size() - 1);
  for (std::size_t i = 0; i < js.size(); ++i) {
    for (std::size_t c = 0; c < csv[0].size(); ++c) CHECK(js[i][csv[0][c]].get<std::string>() == csv[i + 1][c]);
  }
  CHECK(invoke({"table", "--kind", "bell", "--format", "xml"}).code == 2);
}

TEST_CASE("series G at g = xi = x = 1: c_1 = -(e^-1 + e^-2)") {
  const auto r = invoke({"series", "--variable", "G", "--order", "1", "--g", "1", "--xi", "1", "--x", "1"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"variable", "k", "coefficient", "prefactor"});
  const double c1 = std::stod(rows[2][2]);
  CHECK(rel(c1, -(std::exp(-1.0) + std::exp(-2.0))) < 1e-14);
  CHECK(rel(std::stod(rows[2][3]), std::exp(std::exp(-1.0) - 1.0)) < 1e-15);
}

TEST_CASE("series XI at G = 0 is the Taylor series of the closed form") {
  // exp(x (e^{-g xi} - 1)) with g = 1, x = 3/2
  const auto r = invoke({"series", "--variable", "xi", "--G", "0", "--g", "1", "--x", "1.5", "--order", "10"});
  REQUIRE(r.code == 0);
  std::vector<Rational> exponent(11, Rational(0));
  Rational term(1);
  for (unsigned k = 1; k <= 10; ++k) {
    term = term * Rational(-1) / Rational(k);
    exponent[k] = Rational(3, 2) * term;
  }
  const auto taylor = oracle::series_exp(exponent, 10);
  const auto rows = csv_rows(r.out);
  for (unsigned k = 0; k <= 10; ++k) {
    CHECK(rows[k + 1][0] == "XI");
    CHECK(rel(std::stod(rows[k + 1][2]), to_double(taylor[k])) < 1e-12);
  }
}

TEST_CASE("series order bounds") {
  const auto r = invoke({"series", "--variable", "xi", "--order", "0"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][2] == "1");
  CHECK(invoke({"series", "--order", "41"}).code == 2);
  CHECK(invoke({"series", "--variable", "q"}).code == 2);
}

TEST_CASE("pade from coefficients and the singular retry") {
  auto r = invoke({"pade", "--coeffs", "1,1,1/2", "--L", "1", "--M", "1", "--at", "0.5"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  CHECK(rows[1][2] == "1 + 1/2*x");
  CHECK(rows[1][3] == "1 - 1/2*x");
  CHECK(std::stod(rows[1][6]) == Catch::Approx(1.25 / 0.75).epsilon(1e-15));

  r = invoke({"pade", "--coeffs", "1,1,1,1,1", "--L", "2", "--M", "2"});
  REQUIRE(r.code == 0);
  CHECK_THAT(r.err, ContainsSubstring("singular"));
  rows = csv_rows(r.out);
  CHECK(rows[1][1] == "1");
  CHECK(rows[1][3] == "1 - x");

  CHECK(invoke({"pade", "--L", "1", "--M", "1"}).code == 2);
}

TEST_CASE("pade from the G series matches resum") {
  const auto r = invoke({"pade", "--series", "G", "--L", "3", "--M", "4", "--at", "1"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  CHECK(rows[0].back() == "resum");
  CHECK(std::stod(rows[1][6]) == std::stod(rows[1][7]));
}

TEST_CASE("exact subcommand kinds") {
  auto r = invoke({"exact", "--kind", "toy", "--lambda", "0.7", "--z", "1,0.5", "--zprime", "0.8,0.1", "--eps", "1e-16"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  CHECK(rel(std::stod(rows[1][1]), std::stod(rows[1][3])) < 1e-12);

  r = invoke({"exact", "--kind", "dobinski", "--n", "7", "--x", "2", "--eps", "1e-14"});
  rows = csv_rows(r.out);
  CHECK(std::abs(std::stod(rows[1][2]) - std::stod(rows[1][3])) < 1e-10);

  CHECK(invoke({"exact", "--kind", "quartic", "--G", "-1"}).code == 1);
  CHECK(invoke({"exact", "--kind", "nothing"}).code == 2);
}

TEST_CASE("sweep at G = 0: Pade, exact and closed form coincide") {
  const auto r = invoke({"sweep", "--variable", "G", "--range", "0:2:41", "--g", "1", "--xi", "1", "--x", "1"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 42);
  CHECK(rows[0] == std::vector<std::string>{"G", "exact", "pade_G_3_4", "status"});
  CHECK(rows[1][0] == "0");
  CHECK(rows[41][0] == "2");
  const double closed = toy_closed_form(1.0, CoherentLabel(1.0), CoherentLabel(1.0)).real();
  CHECK(rel(std::stod(rows[1][1]), closed) <= 1e-10);
  CHECK(rel(std::stod(rows[1][2]), closed) <= 1e-10);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].back() == "ok");
}

TEST_CASE("sweep: [3/4] tracks the exact value where the order-7 partial sum fails") {
  const auto r = invoke({"sweep", "--range", "0:2:41", "--partial", "7"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows[0] == std::vector<std::string>{"G", "exact", "partial_G_7", "pade_G_3_4", "status"});
  // G = 1 sits at row 21
  REQUIRE(std::stod(rows[21][0]) == 1.0);
  const double exact = std::stod(rows[21][1]);
  CHECK(rel(std::stod(rows[21][2]), exact) > 0.1);
  CHECK(rel(std::stod(rows[21][3]), exact) <= 1e-2);

  // On G <= 1 the [3/4] error stays under 1e-2; toward G = 2 it grows to
  // about 1.7e-2.
  double worst_low = 0.0, worst_all = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double e = rel(std::stod(rows[i][3]), std::stod(rows[i][1]));
    if (std::stod(rows[i][0]) <= 1.0) worst_low = std::max(worst_low, e);
    worst_all = std::max(worst_all, e);
  }
  CHECK(worst_low <= 1e-2);
  CHECK(worst_all < 2e-2);
}

TEST_CASE("sweep records per-point trouble in the status column") {
  // x = 0 makes every G coefficient beyond c_0 vanish, so [3/4] degenerates
  SweepSpec spec;
  spec.fixed.x = 0.0;
  spec.max = 1.0;
  spec.steps = 3;
  const SweepTable t = run_sweep(spec);
  REQUIRE(t.values.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(t.values[i][1] == 1.0);
    CHECK(t.values[i][2] == 1.0);
    CHECK_THAT(t.status[i], ContainsSubstring("singular:pade_G_3_4->[3/0]"));
  }
}

TEST_CASE("sweep spec validation") {
  CHECK(invoke({"sweep", "--range", "2:0:5"}).code == 2);
  CHECK(invoke({"sweep", "--range", "0:1:1"}).code == 2);
  CHECK(invoke({"sweep", "--range", "0:1"}).code == 2);
  CHECK(invoke({"sweep", "--pade", "3-4"}).code == 2);
  CHECK(invoke({"sweep", "--variable", "Q"}).code == 2);
  SweepSpec spec;
  spec.min = 1.0;
  spec.max = 1.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("outputs are byte-stable across runs") {
  const std::vector<std::vector<std::string>> commands{
      {"sweep", "--series", "BOTH", "--partial", "5,7", "--pade", "2/3,3/4,4/5", "--range", "0:2:41"},
      {"sweep", "--variable", "X", "--range", "0.5:3:11", "--format", "json"},
      {"series", "--variable", "G", "--order", "20", "--format", "json"},
  };
  for (const auto& cmd : commands) {
    auto a = cmd, b = cmd;
    a.insert(a.end(), {"--out", scratch("a.out").string()});
    b.insert(b.end(), {"--out", scratch("b.out").string()});
    REQUIRE(invoke(a).code == 0);
    REQUIRE(invoke(b).code == 0);
    const auto sa = slurp(scratch("a.out"));
    CHECK(!sa.empty());
    CHECK(sa == slurp(scratch("b.out")));
    CHECK(sa == invoke(cmd).out);
  }
}

TEST_CASE("sweep CSV re-ingested by selftest reproduces the summary") {
  const auto path = scratch("sweep.csv").string();
  const std::vector<std::string> flags{"--range", "0:1.5:16", "--partial", "6", "--pade", "2/3,3/4", "--series", "BOTH"};
  auto sweep = std::vector<std::string>{"sweep", "--out", path};
  sweep.insert(sweep.end(), flags.begin(), flags.end());
  const auto s = invoke(sweep);
  REQUIRE(s.code == 0);
  CHECK_THAT(s.out, ContainsSubstring("pade_G_3_4 max_rel_error="));

  auto st = std::vector<std::string>{"selftest", "--ingest", path};
  st.insert(st.end(), flags.begin(), flags.end());
  const auto r = invoke(st);
  CHECK(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("PASS sweep_ingest"));

  std::ifstream in(path);
  const SweepTable back = read_sweep_csv(in);
  SweepSpec spec;
  parse_range("0:1.5:16", spec);
  spec.partial_orders = {6};
  spec.pade_orders = parse_pade_orders("2/3,3/4");
  spec.series = SeriesChoice::both;
  CHECK(summarize(back) == summarize(run_sweep(spec)));

  // a different sweep must not match
  const auto mismatch = invoke({"selftest", "--ingest", path, "--range", "0:1.5:17"});
  CHECK(mismatch.code == 1);
  CHECK_THAT(mismatch.out, ContainsSubstring("FAIL sweep_ingest"));
}

TEST_CASE("selftest passes and its negative control fails") {
  const auto ok = invoke({"selftest"});
  CHECK(ok.code == 0);
  CHECK_THAT(ok.out, ContainsSubstring("PASS toy_model"));
  CHECK_THAT(ok.out, ContainsSubstring("PASS stirling_orthogonality"));
  CHECK_THAT(ok.out, ContainsSubstring("PASS dobinski"));
  CHECK_THAT(ok.out, ContainsSubstring("PASS pade_reexpansion"));

  const auto bad = invoke({"selftest", "--inject-fault", "--seed", "7"});
  CHECK(bad.code == 1);
  CHECK_THAT(bad.out, ContainsSubstring("FAIL pade_reexpansion"));
}

TEST_CASE("selftest reports the toy-model residual under 1e-12") {
  const auto r = invoke({"selftest"});
  const auto pos = r.out.find("toy_model max_residual=");
  REQUIRE(pos != std::string::npos);
  const double residual = std::stod(r.out.substr(pos + std::string("toy_model max_residual=").size()));
  CHECK(residual <= 1e-12);
}

TEST_CASE("every library operation is reachable from the command registry") {
  std::set<std::string> covered;
  const std::set<std::string> known(library_operations().begin(), library_operations().end());
  CHECK(known.size() == 25);
  for (const auto& entry : command_registry()) {
    INFO(entry.args.front() << " " << (entry.args.size() > 2 ? entry.args[2] : ""));
    const auto r = invoke(entry.args);
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
    for (const auto& op : entry.operations) {
      CHECK(known.count(op) == 1);
      covered.insert(op);
    }
  }
  for (const auto& op : known) {
    INFO(op);
    CHECK(covered.count(op) == 1);
  }
}

TEST_CASE("help and usage errors") {
  const auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK_THAT(help.out, ContainsSubstring("sweep"));
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"table"}).code == 2);
  CHECK(invoke({"series", "--order", "abc"}).code == 2);
}
