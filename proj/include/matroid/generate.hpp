#pragma once

#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matroid/minors.hpp"

namespace matroid {

// One isomorphism class of single-element extensions: every listed column
// yields the same matroid up to isomorphism; the representative is built from
// the lexicographically least column.
struct ExtensionClass {
  BinaryMatroid representative;
  std::vector<std::string> columns;
};

// All 3-connected single-element extensions of a simple 3-connected matroid,
// grouped into isomorphism classes and filtered by the class spec.  Candidate
// columns are the nonzero words not already present in [I | D]; appending any
// of them keeps 3-connectivity (the new element is in no 1- or 2-element
// circuit and cannot be a coloop), which the property tests cross-check
// against the separation sweep.
inline std::vector<ExtensionClass> extensions(const BinaryMatroid& m, const ClassSpec& spec) {
  if (!is_simple(m)) throw precondition_error("extensions: matroid must be simple");
  if (!is_3connected(m)) throw precondition_error("extensions: matroid must be 3-connected");
  int r = m.rank();

  std::set<std::uint32_t> existing;
  for (std::uint32_t w : m.columns()) existing.insert(w);

  Label nl = next_label(m);
  std::vector<ExtensionClass> classes;
  std::map<CanonicalForm, std::size_t> class_of;
  for (std::uint32_t v = 1; v < (1u << r); ++v) {
    // v counts in lexicographic column-string order (top row = high digit)
    std::uint32_t w = 0;
    for (int i = 0; i < r; ++i)
      if ((v >> (r - 1 - i)) & 1u) w |= 1u << i;
    if (existing.count(w)) continue;
    BinaryMatroid x = extend(m, w, nl);
    if (spec.connectivity == Connectivity::InternallyFourConnected &&
        !is_internally_4connected(x))
      continue;
    CanonicalForm f = canonical_form(x);
    auto it = class_of.find(f);
    if (it == class_of.end()) {
      class_of.emplace(std::move(f), classes.size());
      classes.push_back({std::move(x), {column_string(w, r)}});
    } else {
      classes[it->second].columns.push_back(column_string(w, r));
    }
  }

  std::vector<ExtensionClass> kept;
  for (ExtensionClass& cls : classes) {
    bool ok = true;
    for (const BinaryMatroid& req : spec.required_minors)
      if (!has_minor_bool(cls.representative, req)) {
        ok = false;
        break;
      }
    if (ok)
      for (const BinaryMatroid& ex : spec.excluded_minors)
        if (has_minor_bool(cls.representative, ex)) {
          ok = false;
          break;
        }
    if (ok) kept.push_back(std::move(cls));
  }
  return kept;
}

// Coextensions are the duals of extensions of the dual; class strings are the
// new D rows (bit j under D column j), and the representative gains one rank.
inline std::vector<ExtensionClass> coextensions(const BinaryMatroid& m, const ClassSpec& spec) {
  if (!is_cosimple(m)) throw precondition_error("coextensions: matroid must be cosimple");
  std::vector<ExtensionClass> dx = extensions(dual(m), dualized(spec));
  std::vector<ExtensionClass> out;
  out.reserve(dx.size());
  for (ExtensionClass& cls : dx)
    out.push_back({dual(cls.representative), std::move(cls.columns)});
  return out;
}

// ---------------------------------------------------------------------------
// Append-only on-disk record of discovered isomorphism classes, keyed by
// canonical form.  Concurrent appends of equal keys store identical values,
// so last-write-wins merging is safe.

class DedupCache {
 public:
  explicit DedupCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string form, rows, labels;
      int r = 0, n = 0;
      if (!std::getline(ls, form, '\t')) continue;
      ls >> r >> n;
      ls.ignore(1);
      std::getline(ls, rows, '\t');
      std::getline(ls, labels, '\t');
      std::optional<BinaryMatroid> m = decode(r, n, rows, labels);
      if (m) entries_.emplace(form, *m);
    }
  }

  const std::map<CanonicalForm, BinaryMatroid>& entries() const { return entries_; }

  bool contains(const CanonicalForm& f) const { return entries_.count(f) > 0; }

  void append(const CanonicalForm& f, const BinaryMatroid& m) {
    if (contains(f)) return;
    entries_.emplace(f, m);
    std::ofstream out(path_, std::ios::app);
    out << f << '\t' << m.rank() << ' ' << m.size() << '\t';
    for (int i = 0; i < m.rank(); ++i) {
      if (i) out << ';';
      out << m.d().row_string(i);
    }
    out << '\t';
    for (std::size_t i = 0; i < m.labels().size(); ++i) {
      if (i) out << ',';
      out << m.labels()[i];
    }
    out << '\n';
  }

 private:
  static std::optional<BinaryMatroid> decode(int r, int n, const std::string& rows,
                                             const std::string& labels) {
    try {
      BitMatrix d(r, n - r);
      std::istringstream rs(rows);
      std::string row;
      for (int i = 0; i < r; ++i) {
        if (!std::getline(rs, row, ';')) return std::nullopt;
        if (static_cast<int>(row.size()) != n - r) return std::nullopt;
        for (int c = 0; c < n - r; ++c)
          if (row[static_cast<std::size_t>(c)] == '1') d.set(i, c, true);
      }
      std::vector<Label> ls;
      std::istringstream lss(labels);
      std::string tok;
      while (std::getline(lss, tok, ',')) ls.push_back(std::stoi(tok));
      return BinaryMatroid(r, std::move(ls), std::move(d));
    } catch (...) {
      return std::nullopt;
    }
  }

  std::filesystem::path path_;
  std::map<CanonicalForm, BinaryMatroid> entries_;
};

// Breadth-first closure of the seed under 3-connected single-element
// extensions and coextensions inside the class, deduplicated by canonical
// form, halting at the element budget.  Output is sorted by (rank, size,
// canonical form).
//
// True when both minor lists are closed under duality up to isomorphism; only
// then may a self-dual matroid's splitter check look at one side.
inline bool spec_is_dual_closed(const ClassSpec& spec) {
  auto closed = [](const std::vector<BinaryMatroid>& list) {
    for (const BinaryMatroid& m : list) {
      BinaryMatroid dm = dual(m);
      bool found = false;
      for (const BinaryMatroid& other : list)
        if (is_isomorphic(dm, other)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  return closed(spec.required_minors) && closed(spec.excluded_minors);
}

// When the class is dual-closed, the seed is self-dual, and the seed itself is
// one of the required minors, the coextension side is redundant: every member
// contains the seed, so it has a 3-connected in-class single-element reduction
// keeping the seed-minor, and if that reduction is a contraction the dual
// member has it as a deletion.  Walking extensions and inserting duals then
// finds the same closure while keeping every canonical-form sweep on the
// cheap side; the plain two-sided walk remains for all other specs, and a
// property test checks the two strategies agree.
inline std::vector<BinaryMatroid> generate_class(const BinaryMatroid& seed, const ClassSpec& spec,
                                                 int max_elements, DedupCache* cache = nullptr,
                                                 bool allow_dual_strategy = true) {
  if (!satisfies(seed, spec))
    throw precondition_error("generate_class: seed does not satisfy the class spec");

  bool seed_required = false;
  for (const BinaryMatroid& r : spec.required_minors)
    if (is_isomorphic(seed, r)) {
      seed_required = true;
      break;
    }
  bool dual_closed = allow_dual_strategy && seed_required &&
                     is_isomorphic(seed, dual(seed)).has_value() && spec_is_dual_closed(spec);

  std::map<CanonicalForm, BinaryMatroid> found;
  std::deque<BinaryMatroid> queue;
  auto insert = [&](const BinaryMatroid& m) {
    CanonicalForm f = canonical_form(m);
    if (found.count(f)) return;
    if (cache) cache->append(f, m);
    found.emplace(std::move(f), m);
    queue.push_back(m);
  };

  insert(seed);
  if (dual_closed && seed.size() <= max_elements) insert(dual(seed));

  while (!queue.empty()) {
    BinaryMatroid x = std::move(queue.front());
    queue.pop_front();
    if (x.size() >= max_elements) continue;
    for (ExtensionClass& cls : extensions(x, spec)) {
      insert(cls.representative);
      if (dual_closed) insert(dual(cls.representative));
    }
    if (!dual_closed)
      for (ExtensionClass& cls : coextensions(x, spec)) insert(cls.representative);
  }

  std::vector<BinaryMatroid> out;
  out.reserve(found.size());
  for (auto& [f, m] : found) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(), [](const BinaryMatroid& a, const BinaryMatroid& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    if (a.size() != b.size()) return a.size() < b.size();
    return canonical_form(a) < canonical_form(b);
  });
  return out;
}

// Report line: "name<TAB>col1 col2 ...<TAB>flags".
inline std::string format_class_line(const std::string& name,
                                     const std::vector<std::string>& columns,
                                     const std::string& flags) {
  std::string out = name;
  out += '\t';
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ' ';
    out += columns[i];
  }
  out += '\t';
  out += flags;
  out += '\n';
  return out;
}

}  // namespace matroid
