#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "hspec/tensor.hpp"

namespace hspec {

/// Disk |lambda - a_{i..i}| <= R_i for slice i (1-based index).
struct GershgorinDisk {
  int index = 0;
  double center = 0.0;
  double radius = 0.0;

  double lower() const { return center - radius; }
  double upper() const { return center + radius; }
};

struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double x, double slack = 0.0) const { return x >= lower - slack && x <= upper + slack; }
  double width() const { return upper - lower; }
};

/// R_i sums |a_{i i_2 .. i_m}| over every raw tuple (i_2..i_m) other than
/// (i..i); an orbit contributes its value times the number of its
/// permutations that start with i.
inline std::vector<GershgorinDisk> gershgorin_disks(const SymmetricTensor& t) {
  const int n = t.dimension();
  const int m = t.order();
  std::vector<GershgorinDisk> disks(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) disks[static_cast<std::size_t>(i)].index = i + 1;

  for (const auto& [idx, term] : t.entries()) {
    const Exponent alpha = idx.counts(n);
    for (int i = 0; i < n; ++i) {
      const int ai = alpha[static_cast<std::size_t>(i)];
      if (ai == 0) continue;
      auto& disk = disks[static_cast<std::size_t>(i)];
      if (ai == m) {
        disk.center = term.value;
        continue;
      }
      const std::uint64_t in_slice = term.orbit_size * static_cast<std::uint64_t>(ai) / static_cast<std::uint64_t>(m);
      disk.radius += std::abs(term.value) * static_cast<double>(in_slice);
    }
  }
  return disks;
}

inline Interval gershgorin_interval(std::span<const GershgorinDisk> disks) {
  if (disks.empty()) throw error("gershgorin_interval needs at least one disk");
  Interval iv{disks[0].lower(), disks[0].upper()};
  for (const auto& d : disks) {
    iv.lower = std::min(iv.lower, d.lower());
    iv.upper = std::max(iv.upper, d.upper());
  }
  return iv;
}

inline Interval gershgorin_interval(const SymmetricTensor& t) { return gershgorin_interval(gershgorin_disks(t)); }

}  // namespace hspec
