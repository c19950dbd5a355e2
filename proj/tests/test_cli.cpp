#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "cli_runner.hpp"

namespace fs = std::filesystem;
using cli::data;
using cli::run;
using cli::scratch;
using cli::slurp;
using cli::strip_banner;

namespace {

/// Compares against tests/golden/<name>; HSPEC_UPDATE_GOLDEN=1 rewrites it.
void expect_golden(const std::string& name, const std::string& actual) {
  const fs::path p = cli::golden(name);
  if (std::getenv("HSPEC_UPDATE_GOLDEN")) {
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << actual;
    return;
  }
  ASSERT_TRUE(fs::exists(p)) << "missing golden file " << p;
  EXPECT_EQ(actual, slurp(p)) << "golden mismatch: " << name;
}

class CliGolden : public testing::TestWithParam<const char*> {};

}  // namespace

TEST_P(CliGolden, Spectrum) {
  const std::string f = GetParam();
  const auto r = run("spectrum " + data(f + ".tensor"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("hspec 0.1.0\n", 0), 0u);
  expect_golden(f + ".spectrum.txt", strip_banner(r.out));
}

TEST_P(CliGolden, Bounds) {
  const std::string f = GetParam();
  const auto r = run("bounds " + data(f + ".tensor"));
  EXPECT_EQ(r.code, 0) << r.err;
  expect_golden(f + ".bounds.txt", strip_banner(r.out));
}

TEST_P(CliGolden, Compare) {
  const std::string f = GetParam();
  const fs::path csv = scratch() / (f + "_csv");
  fs::remove_all(csv);
  const auto r = run("compare " + data(f + ".tensor") + " --csv \"" + csv.string() + "\"");
  EXPECT_EQ(r.code, 0) << r.err;
  expect_golden(f + ".compare.txt", strip_banner(r.out));
  for (const char* c : {"upper_bounds", "distribution", "intervals"})
    expect_golden(f + "." + c + ".csv", slurp(csv / (std::string(c) + ".csv")));
}

TEST_P(CliGolden, Certify) {
  const std::string f = GetParam();
  const auto r = run("certify " + data(f + ".tensor"));
  EXPECT_EQ(r.code, 0) << r.err;
  expect_golden(f + ".certify.txt", strip_banner(r.out));
}

TEST_P(CliGolden, CertifyJson) {
  const std::string f = GetParam();
  const auto r = run("--json certify " + data(f + ".tensor"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("{\n  \"version\": \"0.1.0\"", 0), 0u);
  expect_golden(f + ".certify.json", strip_banner(r.out));
}

INSTANTIATE_TEST_SUITE_P(Fixtures, CliGolden, testing::Values("section4", "example51", "example52"));

TEST(Cli, BoundsWithIndexRange) {
  const auto r = run("bounds " + data("example51.tensor") + " --k 2 --l 4");
  EXPECT_EQ(r.code, 0) << r.err;
  expect_golden("example51.bounds_k2_l4.txt", strip_banner(r.out));
}

TEST(Cli, SvgFiguresAreWritten) {
  const fs::path svg = scratch() / "svg";
  fs::remove_all(svg);
  const auto r = run("compare " + data("example51.tensor") + " --svg \"" + svg.string() + "\"");
  EXPECT_EQ(r.code, 0) << r.err;
  for (const char* c : {"upper_bounds", "distribution", "intervals"}) {
    const auto text = slurp(svg / (std::string(c) + ".svg"));
    EXPECT_EQ(text.rfind("<svg", 0), 0u) << c;
    EXPECT_NE(text.find("</svg>"), std::string::npos) << c;
  }
}

TEST(Cli, ExitCodeParseError) {
  const fs::path p = scratch() / "bad.tensor";
  std::ofstream(p) << "tensor m=4 n=2\na 1 1 1 1 = oops\n";
  const auto r = run("spectrum \"" + p.string() + "\"");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(run("spectrum \"" + (scratch() / "missing.tensor").string() + "\"").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("certify " + data("section4.tensor") + " --samples 0").code, 2);
}

TEST(Cli, ExitCodeValidationError) {
  const fs::path p = scratch() / "unsorted.tensor";
  std::ofstream(p) << "tensor m=4 n=2\na 2 1 1 1 = 1\n";
  const auto r = run("spectrum \"" + p.string() + "\"");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("(2,1,1,1)"), std::string::npos) << r.err;
  EXPECT_EQ(run("bounds " + data("section4.tensor") + " --k 0").code, 3);
  EXPECT_EQ(run("bounds " + data("section4.tensor") + " --k 3 --l 2").code, 3);
}

TEST(Cli, ExitCodeUnsupported) {
  const fs::path p = scratch() / "cubic3.tensor";
  std::ofstream(p) << "tensor m=4 n=3\na 1 1 1 1 = 1\na 2 2 2 2 = 1\na 3 3 3 3 = 1\n";
  EXPECT_EQ(run("spectrum \"" + p.string() + "\"").code, 4);
  EXPECT_EQ(run("bounds \"" + p.string() + "\"").code, 4);
}

TEST(Cli, ExternalDeterminantEnablesBounds) {
  const fs::path p = scratch() / "cubic3det.tensor";
  std::ofstream(p) << "tensor m=4 n=3\ndet=1\na 1 1 1 1 = 1\na 2 2 2 2 = 1\na 3 3 3 3 = 1\n";
  const auto r = run("bounds \"" + p.string() + "\"");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("assumed"), std::string::npos) << r.out;
  EXPECT_EQ(run("certify \"" + p.string() + "\"").code, 0);
}

TEST(Cli, ExitCodeNotPositiveDefinite) {
  const fs::path p = scratch() / "indefinite.tensor";
  std::ofstream(p) << "tensor m=4 n=2\na 1 1 1 1 = 1\na 1 1 2 2 = -1\na 2 2 2 2 = 1\n";
  const auto r = run("certify \"" + p.string() + "\"");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("certified_not_pd"), std::string::npos) << r.out;

  const fs::path odd = scratch() / "odd.tensor";
  std::ofstream(odd) << "tensor m=3 n=2\na 1 1 1 = 1\na 2 2 2 = 1\n";
  EXPECT_EQ(run("certify \"" + odd.string() + "\"").code, 1);
}

TEST(Cli, ExitCodeInconclusive) {
  const fs::path p = scratch() / "coupled3.tensor";
  std::ofstream(p) << "tensor m=4 n=3\na 1 1 1 1 = 1\na 1 1 2 2 = 0.5\na 2 2 2 2 = 1\na 3 3 3 3 = 1\n";
  const auto r = run("certify \"" + p.string() + "\" --samples 500");
  EXPECT_EQ(r.code, 5);
  EXPECT_NE(r.out.find("inconclusive"), std::string::npos) << r.out;
}

TEST(Cli, VersionFlag) {
  const auto r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "hspec 0.1.0\n");
}
