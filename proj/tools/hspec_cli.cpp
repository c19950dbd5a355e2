#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hspec/hspec.hpp"
#include "json_report.hpp"

namespace {

namespace fs = std::filesystem;
using namespace hspec;

// Exit codes; certify returns 1 (not definite) and 5 (inconclusive) itself.
constexpr int kOk = 0;
constexpr int kParse = 2;
constexpr int kValidation = 3;
constexpr int kUnsupported = 4;

TensorDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_tensor_document(ss.str());
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw error("cannot write '" + p.string() + "'");
  out << text;
}

template <class Report>
void emit(const Report& r, bool json) {
  if (json)
    std::cout << report::to_json(r).dump(2) << "\n";
  else
    std::cout << report::render_text(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, eigenvalue bounds and definiteness certificates for symmetric tensors"};
  app.set_version_flag("--version", report::banner());
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  std::string file;
  int k = 1;
  int l = 0;
  std::string csv_dir, svg_dir;
  int samples = 1000;
  std::uint64_t seed = 42;

  auto* spectrum = app.add_subcommand("spectrum", "characteristic roots, multiplicities and H-eigenvalue flags");
  spectrum->add_option("file", file, "tensor document")->required();

  auto* bounds = app.add_subcommand("bounds", "trace/determinant bounds and Gershgorin interval");
  bounds->add_option("file", file, "tensor document")->required();
  bounds->add_option("--k", k, "first index k (default 1)");
  bounds->add_option("--l", l, "last index l (default k)");

  auto* compare = app.add_subcommand("compare", "bounds against the actual spectrum, with figure data");
  compare->add_option("file", file, "tensor document")->required();
  compare->add_option("--csv", csv_dir, "directory for upper_bounds/distribution/intervals .csv");
  compare->add_option("--svg", svg_dir, "directory for upper_bounds/distribution/intervals .svg");

  auto* certify = app.add_subcommand("certify", "positive definiteness and gradient-flow Lyapunov check");
  certify->add_option("file", file, "tensor document")->required();
  certify->add_option("--samples", samples, "unit-sphere samples (default 1000)")->check(CLI::PositiveNumber);
  certify->add_option("--seed", seed, "sampling seed (default 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    const TensorDocument doc = load(file);
    if (spectrum->parsed()) {
      emit(report::make_spectrum_report(doc), json);
      return kOk;
    }
    if (bounds->parsed()) {
      emit(report::make_bounds_report(doc, k, l == 0 ? k : l), json);
      return kOk;
    }
    if (compare->parsed()) {
      const auto r = report::make_compare_report(doc);
      if (!csv_dir.empty()) {
        fs::create_directories(csv_dir);
        write_file(fs::path(csv_dir) / "upper_bounds.csv", report::csv_upper_bounds(r));
        write_file(fs::path(csv_dir) / "distribution.csv", report::csv_distribution(r));
        write_file(fs::path(csv_dir) / "intervals.csv", report::csv_intervals(r));
      }
      if (!svg_dir.empty()) {
        fs::create_directories(svg_dir);
        write_file(fs::path(svg_dir) / "upper_bounds.svg", report::svg_upper_bounds(r));
        write_file(fs::path(svg_dir) / "distribution.svg", report::svg_distribution(r));
        write_file(fs::path(svg_dir) / "intervals.svg", report::svg_intervals(r));
      }
      emit(r, json);
      return kOk;
    }
    const auto r = report::make_certify_report(doc, samples, seed);
    emit(r, json);
    return report::exit_code(r);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const conditioning_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
