// Prints every trace/determinant bound next to the true partial sums and
// products for a tensor file (default: a random positive quartic).

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hspec/hspec.hpp"

namespace {

hspec::SymmetricTensor load(const char* path) {
  std::ifstream in(path);
  if (!in) throw hspec::error(std::string("cannot open ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return hspec::parse_tensor_document(ss.str()).tensor();
}

hspec::SymmetricTensor sample_quartic() {
  // 9 x1^4 + 1.8 x1^2 x2^2 + 4 x2^4
  return hspec::SymmetricTensor::from_unique_entries(4, 2,
                                                     {{hspec::MultiIndex{1, 1, 1, 1}, 9.0},
                                                      {hspec::MultiIndex{1, 1, 2, 2}, 0.3},
                                                      {hspec::MultiIndex{2, 2, 2, 2}, 4.0}});
}

std::string cell(bool applies, const std::function<double()>& value) {
  if (!applies) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value());
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hspec;
  try {
    const SymmetricTensor t = argc > 1 ? load(argv[1]) : sample_quartic();
    const auto in = bound_inputs(t);
    const auto lam = h_spectrum(t).expanded();
    std::printf("d = %lld, S = %.6g, det = %.6g, hypothesis %s\n", in.d, in.S, in.det, to_string(in.status).c_str());
    if (in.status != Hypothesis::verified_positive) {
      std::printf("spectrum is not all real and positive; bounds do not apply\n");
      return 0;
    }

    std::printf("%3s %12s %12s %12s %12s %12s\n", "k", "top-k sum", "t1 bound", "t6 bound", "top-k prod", "t4 bound");
    double sum = 0, prod = 1;
    for (int k = 1; k <= in.d; ++k) {
      sum += lam[static_cast<std::size_t>(k - 1)];
      prod *= lam[static_cast<std::size_t>(k - 1)];
      const std::string t1 = cell(k <= in.d - 1, [&] { return t1_sum_upper(in, k).value; });
      const std::string t4 = cell(k <= in.d - 2, [&] { return t4_product_upper(in, k).value; });
      std::printf("%3d %12.6g %12s %12.6g %12.6g %12s\n", k, sum, t1.c_str(), t6_sum_upper(in, k).value, prod,
                  t4.c_str());
    }

    std::printf("\n%3s %14s %14s %14s\n", "k", "bottom-k prod", "t1 lower", "t4 lower");
    prod = 1;
    for (int k = 1; k <= in.d - 1; ++k) {
      prod *= lam[static_cast<std::size_t>(in.d - k)];
      const std::string t4 = cell(k >= 2, [&] { return t4_tail_product_lower(in, k).value; });
      std::printf("%3d %14.6g %14.6g %14s\n", k, prod, t1_tail_product_lower(in, k).value, t4.c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
