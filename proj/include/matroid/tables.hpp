#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "matroid/catalog.hpp"
#include "matroid/generate.hpp"

namespace matroid {

// Renders the classified single-element extension/coextension tables of the
// catalog matroids with recomputed E4-minor flags, in the report format
// "name<TAB>members<TAB>flags" with classes ordered by least member string.

namespace detail {

inline std::string e4_flag(const BinaryMatroid& rep) {
  return has_minor_bool(rep, get("E4").matroid) ? "E4-minor=yes" : "E4-minor=no";
}

inline std::string named_class_table(const std::vector<ExtensionClass>& classes,
                                     const std::map<CanonicalForm, std::string>& names) {
  std::string out;
  for (const ExtensionClass& cls : classes) {
    std::string name = "-";
    auto it = names.find(canonical_form(cls.representative));
    if (it != names.end()) name = it->second;
    out += format_class_line(name, cls.columns, e4_flag(cls.representative));
  }
  return out;
}

}  // namespace detail

inline std::string build_table_a1() {
  std::map<CanonicalForm, std::string> names;
  for (const char* nm : {"A", "B", "C", "H"})
    names.emplace(canonical_form(get(nm).matroid), nm);
  return detail::named_class_table(extensions(get("E5").matroid, ClassSpec{}), names);
}

inline std::string build_table_a2() {
  std::map<CanonicalForm, std::string> names;
  for (const char* nm : {"A", "B", "C", "H"})
    names.emplace(canonical_form(dual(get(nm).matroid)), std::string(nm) + "*");
  return detail::named_class_table(coextensions(get("E5").matroid, ClassSpec{}), names);
}

inline std::string build_table_a3() {
  std::string out;
  for (const char* parent : {"A", "B", "C"}) {
    std::vector<ExtensionClass> classes = coextensions(get(parent).matroid, ClassSpec{});
    int idx = 0;
    for (const ExtensionClass& cls : classes) {
      std::string name = std::string(parent) + ".coext" + std::to_string(++idx);
      out += format_class_line(name, cls.columns, detail::e4_flag(cls.representative));
    }
  }
  return out;
}

inline std::string build_table(const std::string& which) {
  if (which == "a1") return build_table_a1();
  if (which == "a2") return build_table_a2();
  if (which == "a3") return build_table_a3();
  throw unknown_name_error("unknown table: " + which);
}

inline std::string golden_file_name(const std::string& which) {
  return "table_" + which + ".txt";
}

// Unified diff of two small line lists (plain LCS).
inline std::string unified_diff(const std::string& expected, const std::string& actual,
                                const std::string& expected_name,
                                const std::string& actual_name) {
  auto split = [](const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
  };
  std::vector<std::string> a = split(expected), b = split(actual);
  std::size_t na = a.size(), nb = b.size();
  std::vector<std::vector<std::size_t>> lcs(na + 1, std::vector<std::size_t>(nb + 1, 0));
  for (std::size_t i = na; i-- > 0;)
    for (std::size_t j = nb; j-- > 0;)
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);

  std::string out = "--- " + expected_name + "\n+++ " + actual_name + "\n";
  std::size_t i = 0, j = 0;
  while (i < na || j < nb) {
    if (i < na && j < nb && a[i] == b[j]) {
      out += " " + a[i] + "\n";
      ++i, ++j;
    } else if (j < nb && (i == na || lcs[i][j + 1] >= lcs[i + 1][j])) {
      out += "+" + b[j] + "\n";
      ++j;
    } else {
      out += "-" + a[i] + "\n";
      ++i;
    }
  }
  return out;
}

// True when the regenerated text matches the golden file byte for byte; on
// mismatch a diff is written to *diff_out when given.
inline bool matches_golden(const std::string& text, const std::filesystem::path& golden_path,
                           std::string* diff_out = nullptr) {
  std::ifstream in(golden_path, std::ios::binary);
  if (!in) {
    if (diff_out) *diff_out = "golden file missing: " + golden_path.string() + "\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string expected = buf.str();
  if (expected == text) return true;
  if (diff_out)
    *diff_out = unified_diff(expected, text, golden_path.string(), "regenerated");
  return false;
}

}  // namespace matroid
