#pragma once

// Line-oriented tensor documents:
//
//   # comment
//   tensor m=4 n=2
//   name=section4
//   a 1 1 1 1 = 1.1
//   a 2 2 2 2 = 1.0
//
// The header comes first. `name=` and `det=` (dimension > 2 only) are
// optional and may appear once each. Entries list one value per orbit, with
// indices in nondecreasing order.

#include <charconv>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "hspec/error.hpp"
#include "hspec/tensor.hpp"

namespace hspec {

struct TensorEntry {
  std::vector<int> index;
  double value = 0.0;

  bool operator==(const TensorEntry&) const = default;
};

struct TensorDocument {
  int order = 0;
  int dimension = 0;
  std::vector<TensorEntry> entries;
  std::optional<std::string> name;
  std::optional<double> external_determinant;

  bool operator==(const TensorDocument&) const = default;

  SymmetricTensor tensor() const {
    std::vector<std::pair<MultiIndex, double>> e;
    e.reserve(entries.size());
    for (const auto& x : entries) e.emplace_back(MultiIndex(x.index), x.value);
    return SymmetricTensor::from_unique_entries(order, dimension, e);
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline double parse_real(std::string_view s, int line) {
  std::string_view body = s;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size() || body.empty() || !std::isfinite(v))
    throw parse_error(line, "expected a finite real number, got '" + std::string(s) + "'");
  return v;
}

inline int parse_int(std::string_view s, int line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw parse_error(line, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

/// Parses `key=<int>` tokens of the header line.
inline int header_field(std::string_view token, std::string_view key, int line) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key || token[key.size()] != '=')
    throw parse_error(line, "expected '" + std::string(key) + "=<int>', got '" + std::string(token) + "'");
  return parse_int(token.substr(key.size() + 1), line);
}

inline std::string index_string(const std::vector<int>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

}  // namespace detail

/// Shortest decimal string that reads back to the same double.
inline std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::to_string(v);
}

/// Throws parse_error (with line number) for malformed text and
/// validation_error for well-formed text that does not describe a valid tensor.
inline TensorDocument parse_tensor_document(std::string_view text) {
  TensorDocument doc;
  bool have_header = false;
  std::set<std::vector<int>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = detail::trim(raw);
    if (line.empty()) continue;

    if (!have_header) {
      const auto tok = detail::split_ws(line);
      if (tok.size() != 3 || tok[0] != "tensor")
        throw parse_error(line_no, "expected header 'tensor m=<int> n=<int>'");
      doc.order = detail::header_field(tok[1], "m", line_no);
      doc.dimension = detail::header_field(tok[2], "n", line_no);
      if (doc.order < 2) throw validation_error("order m=" + std::to_string(doc.order) + " must be at least 2");
      if (doc.dimension < 1)
        throw validation_error("dimension n=" + std::to_string(doc.dimension) + " must be at least 1");
      have_header = true;
      continue;
    }

    if (line.substr(0, 5) == "name=") {
      if (doc.name) throw parse_error(line_no, "duplicate name= line");
      const auto value = detail::trim(line.substr(5));
      if (value.empty()) throw parse_error(line_no, "empty name");
      doc.name = std::string(value);
      continue;
    }
    if (line.substr(0, 4) == "det=") {
      if (doc.external_determinant) throw parse_error(line_no, "duplicate det= line");
      doc.external_determinant = detail::parse_real(detail::trim(line.substr(4)), line_no);
      if (doc.dimension <= 2)
        throw validation_error("det= is only accepted for dimension n > 2; it is computed for n = " +
                               std::to_string(doc.dimension));
      continue;
    }

    const auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] != "a") throw parse_error(line_no, "expected an entry 'a <i1> ... <im> = <real>'");
    if (tok.size() < 4 || tok[tok.size() - 2] != "=")
      throw parse_error(line_no, "entry must end with '= <real>'");
    TensorEntry e;
    for (std::size_t i = 1; i + 2 < tok.size(); ++i) e.index.push_back(detail::parse_int(tok[i], line_no));
    e.value = detail::parse_real(tok.back(), line_no);
    const std::string where = "line " + std::to_string(line_no) + ": index " + detail::index_string(e.index);
    if (static_cast<int>(e.index.size()) != doc.order)
      throw validation_error(where + " has " + std::to_string(e.index.size()) + " indices, expected " +
                             std::to_string(doc.order));
    for (std::size_t i = 0; i < e.index.size(); ++i) {
      if (e.index[i] < 1 || e.index[i] > doc.dimension)
        throw validation_error(where + " is out of range 1.." + std::to_string(doc.dimension));
      if (i > 0 && e.index[i] < e.index[i - 1]) throw validation_error(where + " is not in nondecreasing order");
    }
    if (!seen.insert(e.index).second) throw validation_error(where + " appears twice");
    doc.entries.push_back(std::move(e));
  }
  if (!have_header) throw parse_error(line_no, "missing header 'tensor m=<int> n=<int>'");
  return doc;
}

inline std::string serialize_tensor_document(const TensorDocument& doc) {
  std::ostringstream out;
  out << "tensor m=" << doc.order << " n=" << doc.dimension << "\n";
  if (doc.name) out << "name=" << *doc.name << "\n";
  if (doc.external_determinant) out << "det=" << format_real(*doc.external_determinant) << "\n";
  for (const auto& e : doc.entries) {
    out << "a";
    for (int i : e.index) out << ' ' << i;
    out << " = " << format_real(e.value) << "\n";
  }
  return out.str();
}

/// Document for a tensor, entries in canonical order.
inline TensorDocument to_document(const SymmetricTensor& t, std::optional<std::string> name = std::nullopt) {
  TensorDocument doc;
  doc.order = t.order();
  doc.dimension = t.dimension();
  doc.name = std::move(name);
  for (const auto& [idx, term] : t.entries()) doc.entries.push_back({idx.indices(), term.value});
  return doc;
}

}  // namespace hspec
