#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "matroid/minors.hpp"

namespace matroid {

enum class Provenance { PrintedMatrix, Reconstructed, Generated, Derived };

struct CatalogEntry {
  std::string name;
  BinaryMatroid matroid;
  Provenance provenance = Provenance::PrintedMatrix;
};

namespace detail {

inline BinaryMatroid from_rows(int r, int n, std::initializer_list<const char*> rows) {
  BitMatrix d(r, n - r);
  int i = 0;
  for (const char* row : rows) {
    for (int c = 0; row[c] != '\0'; ++c)
      if (row[c] == '1') d.set(i, c, true);
    ++i;
  }
  std::vector<Label> labels;
  for (int l = 1; l <= n; ++l) labels.push_back(l);
  return BinaryMatroid(r, std::move(labels), std::move(d));
}

// Same matroid with fresh default labels 1..n in position order.
inline BinaryMatroid relabeled(const BinaryMatroid& m) {
  std::vector<Label> labels;
  for (int l = 1; l <= m.size(); ++l) labels.push_back(l);
  return BinaryMatroid(m.rank(), std::move(labels), m.d());
}

inline BinaryMatroid e4() {
  return from_rows(5, 10, {"01111", "10110", "11010", "11110", "11001"});
}

inline BinaryMatroid e5() {
  return from_rows(5, 10, {"01111", "10110", "11011", "11110", "11000"});
}

inline BinaryMatroid m12() {
  return from_rows(6, 12,
                   {"011111", "101100", "110110", "111101", "110001", "100111"});
}

inline BinaryMatroid h11() {
  return from_rows(5, 11, {"011111", "101100", "110111", "111100", "110001"});
}

// 5x5 circulant over E5's identity block; validated by the property and
// splitter tests rather than by a printed matrix.
inline BinaryMatroid r10() {
  return from_rows(5, 10, {"11001", "11100", "01110", "00111", "10011"});
}

inline BinaryMatroid fano() {
  return from_rows(3, 7, {"1101", "1011", "0111"});
}

// The extension columns of E5 whose extensions have no E4-minor; adding all
// of them to E5 gives the maximal rank-5 member R17.
inline const std::vector<std::string>& no_e4_extension_columns() {
  static const std::vector<std::string> cols = {"00101", "00110", "01011", "01100",
                                                "10011", "11001", "11101"};
  return cols;
}

inline BinaryMatroid r17_from_columns() {
  BinaryMatroid m = e5();
  for (const std::string& c : no_e4_extension_columns()) m = extend(m, column_word(c));
  return m;
}

}  // namespace detail

// The graphic matroid of the k-spoke wheel: [I_k | D] where D column j is the
// sum of identity columns j and j+1 (cyclically).
inline BinaryMatroid wheel(int k) {
  if (k < 3) throw precondition_error("wheel: need k >= 3");
  if (k > BitMatrix::max_rows) throw precondition_error("wheel: k too large");
  BitMatrix d(k, k);
  for (int j = 0; j < k; ++j) {
    d.set(j, j, true);
    d.set((j + 1) % k, j, true);
  }
  std::vector<Label> labels;
  for (int l = 1; l <= 2 * k; ++l) labels.push_back(l);
  return BinaryMatroid(k, std::move(labels), std::move(d));
}

// The four pairwise non-isomorphic 12-element extensions of A, B and C inside
// the no-E4 class, named D, E, F, G in canonical-form order.
inline const std::vector<CatalogEntry>& derive_defg();

namespace detail {

inline std::map<std::string, CatalogEntry> build_catalog() {
  std::map<std::string, CatalogEntry> cat;
  auto put = [&](const std::string& name, BinaryMatroid m, Provenance prov) {
    cat.emplace(name, CatalogEntry{name, std::move(m), prov});
  };

  BinaryMatroid E5 = e5();
  put("E4", e4(), Provenance::PrintedMatrix);
  put("E5", E5, Provenance::PrintedMatrix);
  put("M12", m12(), Provenance::PrintedMatrix);
  put("H", h11(), Provenance::PrintedMatrix);
  put("R10", r10(), Provenance::Reconstructed);
  // The circulated R17 display is inconsistent with its own extension table
  // (it has an E4-minor), so the catalog rebuilds it from the no-E4 columns.
  put("R17", r17_from_columns(), Provenance::Reconstructed);
  put("F7", fano(), Provenance::Reconstructed);
  put("F7*", relabeled(dual(fano())), Provenance::Derived);

  put("A", extend(E5, column_word("00101")), Provenance::Reconstructed);
  put("B", extend(E5, column_word("10011")), Provenance::Reconstructed);
  put("C", extend(E5, column_word("11001")), Provenance::Reconstructed);
  return cat;
}

inline const std::map<std::string, CatalogEntry>& base_catalog() {
  static const std::map<std::string, CatalogEntry> cat = build_catalog();
  return cat;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& derive_defg() {
  static const std::vector<CatalogEntry> defg = [] {
    const auto& cat = detail::base_catalog();
    const BinaryMatroid& e4 = cat.at("E4").matroid;
    std::map<CanonicalForm, BinaryMatroid> classes;
    for (const char* parent : {"A", "B", "C"}) {
      const BinaryMatroid& p = cat.at(parent).matroid;
      std::vector<std::uint32_t> present = p.columns();
      for (const std::string& cs : detail::no_e4_extension_columns()) {
        std::uint32_t w = column_word(cs);
        if (std::find(present.begin(), present.end(), w) != present.end()) continue;
        BinaryMatroid x = extend(p, w);
        if (has_minor_bool(x, e4)) continue;
        classes.emplace(canonical_form(x), std::move(x));
      }
    }
    if (classes.size() != 4)
      throw error("derive_defg: expected 4 classes, found " + std::to_string(classes.size()));
    std::vector<CatalogEntry> out;
    const char* names[] = {"D", "E", "F", "G"};
    int i = 0;
    for (auto& [form, m] : classes)
      out.push_back({names[i++], std::move(m), Provenance::Derived});
    return out;
  }();
  return defg;
}

inline const std::map<std::string, CatalogEntry>& catalog() {
  static const std::map<std::string, CatalogEntry> cat = [] {
    std::map<std::string, CatalogEntry> all = detail::base_catalog();
    for (const CatalogEntry& e : derive_defg()) all.emplace(e.name, e);
    return all;
  }();
  return cat;
}

inline const CatalogEntry& get(const std::string& name) {
  const auto& cat = catalog();
  auto it = cat.find(name);
  if (it == cat.end()) throw unknown_name_error("unknown catalog name: " + name);
  return it->second;
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : catalog()) names.push_back(name);
  return names;
}

}  // namespace matroid
