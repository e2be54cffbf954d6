#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>

#include "unimig/run.hpp"

using namespace unimig;

namespace {

const char* kExamplePairConfig = R"(# running pair
grid = 20
mode = exact
u1 = U1
u2 = U2
alpha = 0.7
subject = U1

[operator U1]
family = example-2uninorm
e = 0.2
a = 0.6
f = 0.8

[operator U2]
family = example-2uninorm
e = 3/10
a = 1/2
f = 7/10
)";

RunOptions options_for(Command cmd, const std::string& text) {
  RunOptions opt;
  opt.command = cmd;
  opt.cfg = parse_config(text);
  return opt;
}

std::string strip_elapsed(std::string s) {
  return std::regex_replace(s, std::regex("\"elapsed_ms\":[0-9]+"), "\"elapsed_ms\":X");
}

}  // namespace

TEST_CASE("stanzas resolve to evaluable operators") {
  const RunConfig cfg = parse_config(kExamplePairConfig);
  CHECK(cfg.grid_n == 20);
  REQUIRE(cfg.operators.size() == 2);
  const auto ops = resolve_operators(cfg, make_grid(20), ToleranceConfig::exact());
  const auto& u2 = ops.at("U2");
  CHECK(evaluate(*u2.spec, make_grid(20), {14}, {4}).index == 10);  // u2(0.7, 0.2) = 0.5
  const auto& u1 = ops.at("U1");
  CHECK(evaluate(*u1.spec, make_grid(20), {16}, {14}).index == 14);
}

TEST_CASE("minimal stanza") {
  const RunConfig cfg = parse_config("grid = 4\n[operator T]\nfamily = min\n");
  const auto ops = resolve_operators(cfg, make_grid(4), ToleranceConfig::exact());
  CHECK(evaluate(*ops.at("T").spec, make_grid(4), {3}, {4}).index == 3);
}

TEST_CASE("diagnostics carry line numbers") {
  // off-grid parameter in exact mode
  const RunConfig off = parse_config(
      "grid = 10\n[operator X]\nfamily = example-2uninorm\ne = 0.25\na = 0.6\nf = 0.8\n");
  try {
    resolve_operators(off, make_grid(10), ToleranceConfig::exact());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("X") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_config("[operator A]\nfamily = min\n[operator A]\nfamily = max\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_config("[operator A]\nfamily = warp\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("wibble = 3\n"), ParseError);
  CHECK_THROWS_AS(parse_config("grid == 3\n"), ValidationError);
  CHECK_THROWS_AS(
      resolve_operators(parse_config("grid = 2\n[operator D]\nfamily = dual\ninner = nope\n"),
                        make_grid(2), ToleranceConfig::exact()),
      ValidationError);

  // forward references are rejected, declaration order matters
  CHECK_THROWS_AS(
      resolve_operators(parse_config("grid = 2\n[operator D]\nfamily = dual\ninner = "
                                     "M\n[operator M]\nfamily = min\n"),
                        make_grid(2), ToleranceConfig::exact()),
      ValidationError);
}

TEST_CASE("table stanzas parse fraction rows") {
  const char* text =
      "grid = 2\nsubject = R\n[operator R]\nfamily = table\n"
      "row = 0 0 0\nrow = 0 1/2 1/2\nrow = 0 1/2 1\n";
  const auto ops = resolve_operators(parse_config(text), make_grid(2), ToleranceConfig::exact());
  CHECK(evaluate(*ops.at("R").spec, make_grid(2), {1}, {2}).index == 1);

  CHECK_THROWS_AS(resolve_operators(parse_config("grid = 2\n[operator R]\nfamily = table\n"
                                                 "row = 0 0 0\nrow = 0 1/2 1/2\n"),
                                    make_grid(2), ToleranceConfig::exact()),
                  ValidationError);
}

TEST_CASE("sweep command reproduces the example's migrative set") {
  const Report rep = run_command(options_for(Command::Sweep, kExamplePairConfig));
  CHECK_FALSE(rep.failed);
  CHECK(rep.summary["migrative_set"] ==
        std::vector<std::string>{"14/20", "17/20", "18/20", "19/20", "20/20"});

  const std::string csv = emit_report(rep, OutputFormat::Csv);
  CHECK(csv.find("alpha,verdict,route,case") == 0);
  CHECK(csv.find("0.7,1,by-lambda,iii") != std::string::npos);
  CHECK(csv.find("0.75,0,by-lambda,iv") != std::string::npos);
  CHECK(csv.find("1,1,by-lambda,iv") != std::string::npos);
}

TEST_CASE("exact-mode reports are byte-stable") {
  const Report a = run_command(options_for(Command::Sweep, kExamplePairConfig));
  const Report b = run_command(options_for(Command::Sweep, kExamplePairConfig));
  CHECK(strip_elapsed(emit_report(a, OutputFormat::JsonLines)) ==
        strip_elapsed(emit_report(b, OutputFormat::JsonLines)));
  CHECK(emit_report(a, OutputFormat::Csv) == emit_report(b, OutputFormat::Csv));
}

TEST_CASE("verify command reports axioms, triples and structure") {
  const Report rep = run_command(options_for(Command::Verify, kExamplePairConfig));
  CHECK_FALSE(rep.failed);
  const std::string text = emit_report(rep, OutputFormat::JsonLines);
  CHECK(text.find("\"check\":\"commutative\",\"ok\":true") != std::string::npos);
  CHECK(text.find("\"check\":\"associative\",\"ok\":true") != std::string::npos);
  CHECK(text.find("4/20 12/20 16/20") != std::string::npos);
  CHECK(text.find("structural-7") != std::string::npos);
}

TEST_CASE("migrative command runs every route and checks agreement") {
  const Report rep = run_command(options_for(Command::Migrative, kExamplePairConfig));
  CHECK_FALSE(rep.failed);
  const std::string text = emit_report(rep, OutputFormat::JsonLines);
  CHECK(text.find("\"route\":\"brute-force\",\"migrative\":true") != std::string::npos);
  CHECK(text.find("\"route\":\"by-lambda\",\"migrative\":true,\"case\":\"iii\"") !=
        std::string::npos);
  CHECK(text.find("\"route\":\"by-mu\"") != std::string::npos);
  CHECK(text.find("routes agree") != std::string::npos);
}

TEST_CASE("heatmap emits one matrix row per carrier point") {
  RunOptions opt = options_for(Command::Heatmap, kExamplePairConfig);
  opt.grid_override = 10;
  const Report rep = run_command(opt);
  const std::string csv = emit_report(rep, OutputFormat::Csv);
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 11);
  CHECK(csv.rfind("0,0,0,", 0) == 0);
}

TEST_CASE("audit command on the 2-chain") {
  RunOptions opt;
  opt.command = Command::Audit;
  opt.cfg = parse_config("grid = 2\n");
  const Report rep = run_command(opt);
  CHECK_FALSE(rep.failed);
  const std::string text = emit_report(rep, OutputFormat::JsonLines);
  CHECK(text.find("\"section\":\"oracle\"") != std::string::npos);
  CHECK(text.find("\"violations\":0") != std::string::npos);
  CHECK(rep.summary["status"] == "ok");
}

TEST_CASE("failed checks flag the report") {
  const char* bad =
      "grid = 4\nsubject = M\n[operator M]\nfamily = table\n"
      "row = 0/4 1/4 1/4 2/4 2/4\nrow = 1/4 1/4 2/4 2/4 3/4\nrow = 1/4 2/4 2/4 3/4 3/4\n"
      "row = 2/4 2/4 3/4 3/4 4/4\nrow = 2/4 3/4 3/4 4/4 4/4\n";
  const Report rep = run_command(options_for(Command::Verify, bad));
  CHECK(rep.failed);
  const std::string text = emit_report(rep, OutputFormat::JsonLines);
  CHECK(text.find("\"check\":\"associative\",\"ok\":false") != std::string::npos);
}

TEST_CASE("enumerate command honors the triple key and table emission") {
  RunOptions opt;
  opt.command = Command::Enumerate;
  opt.cfg = parse_config("grid = 3\ntriple = 0 0 1\nemit_tables = true\n");
  const Report rep = run_command(opt);
  CHECK_FALSE(rep.failed);
  int tables = 0, stats = 0;
  for (const Record& r : rep.records) {
    if (r["record"] == "table") ++tables;
    if (r["record"] == "enumerate") ++stats;
  }
  CHECK(stats == 1);
  CHECK(tables == rep.summary["tables"].get<int>());
  CHECK(tables == 6);  // the t-norm count on the 4-chain, from the census
}

TEST_CASE("float mode plots closed forms at off-grid values") {
  RunOptions opt;
  opt.command = Command::Heatmap;
  opt.cfg = parse_config(
      "grid = 4\nmode = float\nsubject = P\n[operator P]\nfamily = product\n");
  const Report rep = run_command(opt);
  const std::string csv = emit_report(rep, OutputFormat::Csv);
  CHECK(csv.find("0.375") != std::string::npos);  // 1/2 * 3/4, off every carrier

  // The same operator is rejected outright in exact mode.
  opt.cfg = parse_config("grid = 4\nsubject = P\n[operator P]\nfamily = product\n");
  CHECK_THROWS_AS(run_command(opt), NotOnGridError);
}

TEST_CASE("migrative command reports subclass routes for shaped pairs") {
  const char* text =
      "grid = 20\nu1 = T\nu2 = U2\nalpha = 0.7\n"
      "[operator T]\nfamily = min\n"
      "[operator U2]\nfamily = example-2uninorm\ne = 0.3\na = 0.5\nf = 0.7\n";
  const Report rep = run_command(options_for(Command::Migrative, text));
  CHECK_FALSE(rep.failed);
  const std::string out = emit_report(rep, OutputFormat::JsonLines);
  CHECK(out.find("\"route\":\"subclass\"") != std::string::npos);
  CHECK(out.find("\"case\":\"i\"") != std::string::npos);
}

TEST_CASE("a disagreement record carries the full pair identity") {
  const OperatorTable t = discretize(*make_spec(MinOp{}), make_grid(2));
  const DecodedDisagreement d{"oracle", 17,     3,    5,     {{2}, {2}, {2}},
                              {{0}, {0}, {2}},  {1},  true,  false,
                              true,             t,    t};
  const Record r = disagreement_record(d, 2);
  CHECK(r["kind"] == "oracle");
  CHECK(r["pair_index"] == 17);
  CHECK(r["t1"] == "2/2 2/2 2/2");
  CHECK(r["t2"] == "0/2 0/2 2/2");
  CHECK(r["alpha"] == "1/2");
  CHECK(r["brute"] == true);
  CHECK(r["by_lambda"] == false);
  CHECK(r["by_mu"] == true);
  REQUIRE(r["u1_rows"].size() == 3);
  CHECK(r["u1_rows"][2] == "0/2 1/2 2/2");
}
