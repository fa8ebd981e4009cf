#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hankel/cli.hpp"

using namespace hankel;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_inproc(std::vector<std::string> args) {
  args.insert(args.begin(), "hankel");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(HANKEL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

RunReport sample_report() {
  RunReport r;
  r.command = "hankel";
  r.parameters = {{"measure", "0:1"}, {"exact", "false"}};
  r.seed = 17;
  r.runtime_s = 0.25;
  r.items = {compare_item("x", "1/9", 1.0 / 9, 1.0 / 9, 1e-9), exact_item("y", make_rational(1, 3), make_rational(1, 3)),
             info_item("z, with comma", "", "note \"quoted\"")};
  return r;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  const RunReport r = sample_report();
  EXPECT_EQ(report_from_json(to_json(r)), r);
  EXPECT_EQ(report_from_json(nlohmann::ordered_json::parse(to_json(r).dump())), r);
}

TEST(Report, CsvHeaderFixed) {
  std::ostringstream os;
  write_csv(sample_report(), os);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "name,paper,computed,tol,status");
  EXPECT_NE(os.str().find("\"z, with comma\""), std::string::npos);
  std::ostringstream empty;
  write_csv(RunReport{}, empty);
  EXPECT_EQ(empty.str(), "name,paper,computed,tol,status\n");
}

TEST(Report, EmptyTextIsHeaderOnly) {
  std::ostringstream os;
  write_text(RunReport{}, os);
  const std::string s = os.str();
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 1);
  EXPECT_EQ(s.rfind("name", 0), 0u);
}

TEST(Report, ExitCodes) {
  RunReport r = sample_report();
  EXPECT_EQ(r.exit_code(), 0);
  r.items.push_back({"bad", "1", "2", 0.0, Status::Fail});
  EXPECT_TRUE(r.any_fail());
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Report, EmitToFile) {
  const auto path = std::filesystem::temp_directory_path() / "hankel_report_test.json";
  emit_report(sample_report(), Format::Json, path.string());
  std::ifstream in(path);
  EXPECT_EQ(report_from_json(nlohmann::ordered_json::parse(in)), sample_report());
  std::filesystem::remove(path);
  EXPECT_THROW(emit_report(sample_report(), Format::Json, "/nonexistent-dir/x.json"), std::runtime_error);
}

TEST(CliParsing, Rationals) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-0.25"), make_rational(-1, 4));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_THROW(parse_rational("1/0"), UsageError);
  EXPECT_THROW(parse_rational("abc"), UsageError);
}

TEST(CliParsing, Measures) {
  const AtomicMeasure m = parse_measure("0:0.5,3.14159:0.5");
  ASSERT_EQ(m.atoms.size(), 2u);
  EXPECT_THROW(parse_measure("0:0.5"), UsageError);
  const RationalMeasure q = parse_rational_measure("0:1/2,1:1/4,-1:1/4");
  EXPECT_EQ(q.atoms.size(), 3u);
  EXPECT_THROW(parse_rational_measure("0:1/2"), UsageError);
}

TEST(Cli, CoeffsPointMass) {
  const CliRun r = run_inproc({"coeffs", "--measure", "0:1.0", "--upto", "7", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a2,,1,"), std::string::npos);
  EXPECT_NE(r.out.find("a3,,1,"), std::string::npos);
  EXPECT_NE(r.out.find("a4,,0.833333333333,"), std::string::npos);
  EXPECT_NE(r.out.find("a5,,0.625,"), std::string::npos);
  const CliRun e = run_inproc({"coeffs", "--measure", "0:1", "--upto", "5", "--exact", "--format", "csv"});
  EXPECT_NE(e.out.find("a4,,5/6,"), std::string::npos);
  EXPECT_NE(e.out.find("a5,,5/8,"), std::string::npos);
}

TEST(Cli, NfoldCardioid) {
  const CliRun r = run_inproc({"nfold", "--phi", "cardioid", "--fold", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  const RunReport rep = report_from_json(j);
  const ReportItem* it = rep.find("twofold_bound");
  ASSERT_NE(it, nullptr);
  EXPECT_EQ(it->computed, "1/24");
  EXPECT_EQ(it->status, Status::Pass);
}

TEST(Cli, HankelExtremal) {
  const CliRun r = run_inproc({"hankel", "--extremal", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const RunReport rep = report_from_json(nlohmann::ordered_json::parse(r.out));
  EXPECT_EQ(rep.find("H4")->computed, "-1/81");
  EXPECT_EQ(rep.find("abs_H3")->computed, "1/9");
}

TEST(Cli, VerifyConjectureJson) {
  const CliRun r = run_inproc({"verify", "conjecture", "--tol", "1e-6", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const RunReport rep = report_from_json(nlohmann::ordered_json::parse(r.out));
  const ReportItem* sup = rep.find("cuboid_sup");
  ASSERT_NE(sup, nullptr);
  EXPECT_EQ(sup->paper, "1/9");
  EXPECT_EQ(sup->status, Status::Pass);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_inproc({}).code, 2);
  EXPECT_EQ(run_inproc({"frobnicate"}).code, 2);
  EXPECT_EQ(run_inproc({"coeffs", "--bogus"}).code, 2);
  EXPECT_EQ(run_inproc({"search", "--functional", "H9"}).code, 2);
  EXPECT_EQ(run_inproc({"nfold", "--phi", "cardioid"}).code, 2);
  EXPECT_EQ(run_inproc({"--help"}).code, 0);
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(run_binary("nfold --phi cardioid --fold 3"), 0);
  EXPECT_EQ(run_binary("verify conjecture --budget 10"), 1);
  EXPECT_EQ(run_binary("verify nothing"), 2);
  EXPECT_EQ(run_binary("--nope"), 2);
}

TEST(CliBinary, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "hankel_cli_test.csv";
  EXPECT_EQ(run_binary("series --extremal --order 7 --exact --format csv --out " + path.string()), 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "name,paper,computed,tol,status");
  std::filesystem::remove(path);
}
