#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matroid/bitmatrix.hpp"
#include "matroid/errors.hpp"

namespace matroid {

using Label = int;
// A subset of the ground set, as a sorted list of distinct labels.
using LabelSet = std::vector<Label>;

// A binary matroid in standard form [I_r | D] with labelled ground set.
// Position p < r is the p-th identity column, position p >= r is column p - r
// of D.  Labels are distinct positive integers; all structure lives over GF(2).
class BinaryMatroid {
 public:
  BinaryMatroid() = default;

  BinaryMatroid(int rank, std::vector<Label> labels, BitMatrix d)
      : rank_(rank), labels_(std::move(labels)), d_(std::move(d)) {
    if (rank_ < 0 || d_.rows() != rank_)
      throw error("BinaryMatroid: rank does not match matrix");
    if (rank_ + d_.cols() != static_cast<int>(labels_.size()))
      throw error("BinaryMatroid: label count does not match matrix");
    if (rank_ > BitMatrix::max_rows || d_.cols() > BitMatrix::max_rows)
      throw error("BinaryMatroid: rank and corank must stay within word width");
    std::vector<Label> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw error("BinaryMatroid: duplicate labels");
    if (!sorted.empty() && sorted.front() <= 0)
      throw error("BinaryMatroid: labels must be positive");
  }

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int corank() const { return size() - rank_; }
  const std::vector<Label>& labels() const { return labels_; }
  const BitMatrix& d() const { return d_; }

  bool has_label(Label l) const {
    return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
  }

  int position(Label l) const {
    for (int p = 0; p < size(); ++p)
      if (labels_[static_cast<std::size_t>(p)] == l) return p;
    throw unknown_label_error("unknown label " + std::to_string(l));
  }

  // Full column of [I_r | D] at a position, as a word with bit i = row i.
  std::uint32_t column(int pos) const {
    if (pos < rank_) return 1u << pos;
    return d_.column(pos - rank_);
  }

  std::uint32_t column_of(Label l) const { return column(position(l)); }

  std::vector<std::uint32_t> columns() const {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(size()));
    for (int p = 0; p < size(); ++p) out[static_cast<std::size_t>(p)] = column(p);
    return out;
  }

  bool operator==(const BinaryMatroid&) const = default;

 private:
  int rank_ = 0;
  std::vector<Label> labels_;
  BitMatrix d_;
};

namespace detail {

// Sorted duplicate-free copy, each member checked against the matroid.
inline LabelSet normalized_subset(const BinaryMatroid& m, const LabelSet& x) {
  LabelSet s = x;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Label l : s) (void)m.position(l);
  return s;
}

// Incremental GF(2) column basis that can express dependent columns in terms
// of the original pivot columns.  Each stored word carries a combo recording
// which pivot columns sum to it, so express() returns fundamental-circuit
// coefficients rather than coordinates in the reduced words.
class Gf2Basis {
 public:
  // Adds col as a new pivot if independent of the current pivots.
  bool add(std::uint32_t col) {
    auto [w, combo] = reduce(col);
    if (w == 0) return false;
    int b = std::countr_zero(w);
    combo ^= 1u << entries_.size();
    for (Entry& e : entries_)
      if ((e.word >> b) & 1u) {
        e.word ^= w;
        e.combo ^= combo;
      }
    entries_.push_back({b, w, combo});
    return true;
  }

  // Coefficients of col over the pivot columns (bit i = pivot i), or nullopt
  // when col is independent of them.
  std::optional<std::uint32_t> express(std::uint32_t col) const {
    auto [w, combo] = reduce(col);
    if (w != 0) return std::nullopt;
    return combo;
  }

  int rank() const { return static_cast<int>(entries_.size()); }

 private:
  struct Entry {
    int bit;
    std::uint32_t word;
    std::uint32_t combo;
  };

  std::pair<std::uint32_t, std::uint32_t> reduce(std::uint32_t col) const {
    std::uint32_t w = col, combo = 0;
    for (const Entry& e : entries_)
      if ((w >> e.bit) & 1u) {
        w ^= e.word;
        combo ^= e.combo;
      }
    return {w, combo};
  }

  std::vector<Entry> entries_;
};

// Representation-level memo key: rank, size and the D words.  Labels do not
// enter, so relabelled copies share cache entries for label-free questions.
inline std::string rep_key(const BinaryMatroid& m) {
  std::string key;
  key.reserve(static_cast<std::size_t>(8 + 4 * m.corank()));
  key += static_cast<char>(m.rank());
  key += static_cast<char>(m.size());
  for (int c = 0; c < m.corank(); ++c) {
    std::uint32_t w = m.d().column(c);
    key += static_cast<char>(w & 0xff);
    key += static_cast<char>((w >> 8) & 0xff);
    key += static_cast<char>((w >> 16) & 0xff);
    key += static_cast<char>((w >> 24) & 0xff);
  }
  return key;
}

}  // namespace detail

// Rebuild standard form from an arbitrary labelled column list.  Pivot columns
// are chosen greedily in the order of the label sequence, which keeps the
// operation the identity on matroids already in standard form.
inline BinaryMatroid standardize(const std::vector<Label>& labels,
                                 const std::vector<std::uint32_t>& cols) {
  int n = static_cast<int>(cols.size());
  detail::Gf2Basis basis;
  std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
  std::vector<Label> new_labels;
  new_labels.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    if (basis.add(cols[static_cast<std::size_t>(c)])) {
      is_pivot[static_cast<std::size_t>(c)] = 1;
      new_labels.push_back(labels[static_cast<std::size_t>(c)]);
    }
  int r = basis.rank();

  BitMatrix d(r, n - r);
  int out = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    new_labels.push_back(labels[static_cast<std::size_t>(c)]);
    std::optional<std::uint32_t> dw = basis.express(cols[static_cast<std::size_t>(c)]);
    if (!dw) throw std::logic_error("standardize: column escaped its own span");
    d.set_column(out++, *dw);
  }
  return BinaryMatroid(r, std::move(new_labels), std::move(d));
}

inline int rank(const BinaryMatroid& m, const LabelSet& x) {
  LabelSet s = detail::normalized_subset(m, x);
  std::vector<std::uint32_t> cols;
  cols.reserve(s.size());
  for (Label l : s) cols.push_back(m.column_of(l));
  return gf2_rank(std::move(cols));
}

// [I_r | D] dualizes to [I_{n-r} | D^T] with the complementary label split.
inline BinaryMatroid dual(const BinaryMatroid& m) {
  int r = m.rank(), n = m.size();
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int p = r; p < n; ++p) labels.push_back(m.labels()[static_cast<std::size_t>(p)]);
  for (int p = 0; p < r; ++p) labels.push_back(m.labels()[static_cast<std::size_t>(p)]);
  return BinaryMatroid(n - r, std::move(labels), m.d().transposed());
}

inline BinaryMatroid deletion(const BinaryMatroid& m, const LabelSet& x) {
  LabelSet s = detail::normalized_subset(m, x);
  std::vector<Label> labels;
  std::vector<std::uint32_t> cols;
  for (int p = 0; p < m.size(); ++p) {
    Label l = m.labels()[static_cast<std::size_t>(p)];
    if (std::binary_search(s.begin(), s.end(), l)) continue;
    labels.push_back(l);
    cols.push_back(m.column(p));
  }
  return standardize(labels, cols);
}

// Direct contraction by row operations: each contracted element's column is
// reduced to a unit vector, then its row and column are removed.  Loops in X
// are simply deleted.
inline BinaryMatroid contraction(const BinaryMatroid& m, const LabelSet& x) {
  LabelSet s = detail::normalized_subset(m, x);
  int n = m.size();
  std::vector<std::uint32_t> cols = m.columns();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);

  for (int p = 0; p < n; ++p) {
    if (!std::binary_search(s.begin(), s.end(), m.labels()[static_cast<std::size_t>(p)])) continue;
    std::uint32_t v = cols[static_cast<std::size_t>(p)];
    removed[static_cast<std::size_t>(p)] = 1;
    if (v == 0) continue;
    int pb = std::countr_zero(v);
    std::uint32_t rest = v ^ (1u << pb);
    std::uint32_t low = (1u << pb) - 1u;
    for (int q = 0; q < n; ++q) {
      if (removed[static_cast<std::size_t>(q)]) continue;
      std::uint32_t w = cols[static_cast<std::size_t>(q)];
      if ((w >> pb) & 1u) w ^= rest;
      // drop row pb
      cols[static_cast<std::size_t>(q)] = (w & low) | ((w >> 1) & ~low);
    }
  }

  std::vector<Label> labels;
  std::vector<std::uint32_t> kept;
  for (int p = 0; p < n; ++p) {
    if (removed[static_cast<std::size_t>(p)]) continue;
    labels.push_back(m.labels()[static_cast<std::size_t>(p)]);
    kept.push_back(cols[static_cast<std::size_t>(p)]);
  }
  return standardize(labels, kept);
}

inline LabelSet loops(const BinaryMatroid& m) {
  LabelSet out;
  for (int p = m.rank(); p < m.size(); ++p)
    if (m.column(p) == 0) out.push_back(m.labels()[static_cast<std::size_t>(p)]);
  std::sort(out.begin(), out.end());
  return out;
}

inline LabelSet coloops(const BinaryMatroid& m) { return loops(dual(m)); }

inline bool is_simple(const BinaryMatroid& m) {
  std::vector<std::uint32_t> cols = m.columns();
  std::sort(cols.begin(), cols.end());
  if (!cols.empty() && cols.front() == 0) return false;
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

inline bool is_cosimple(const BinaryMatroid& m) { return is_simple(dual(m)); }

// Drop loops and all but the first element of every parallel class.
inline BinaryMatroid simplify(const BinaryMatroid& m) {
  std::vector<Label> labels;
  std::vector<std::uint32_t> cols;
  std::vector<std::uint32_t> seen;
  for (int p = 0; p < m.size(); ++p) {
    std::uint32_t w = m.column(p);
    if (w == 0) continue;
    if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
    seen.push_back(w);
    labels.push_back(m.labels()[static_cast<std::size_t>(p)]);
    cols.push_back(w);
  }
  return standardize(labels, cols);
}

inline BinaryMatroid cosimplify(const BinaryMatroid& m) { return dual(simplify(dual(m))); }

namespace detail {

// Visit k-subsets of 0..n-1 in lexicographic order; stop when fn returns true.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (fn(static_cast<const std::vector<int>&>(idx))) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

// X is a circuit iff it is dependent and every one-element-smaller subset is
// independent.
inline bool is_circuit(const BinaryMatroid& m, const LabelSet& x) {
  LabelSet s = detail::normalized_subset(m, x);
  int k = static_cast<int>(s.size());
  if (k == 0) return false;
  if (rank(m, s) != k - 1) return false;
  for (int drop = 0; drop < k; ++drop) {
    LabelSet sub;
    for (int i = 0; i < k; ++i)
      if (i != drop) sub.push_back(s[static_cast<std::size_t>(i)]);
    if (rank(m, sub) != k - 1) return false;
  }
  return true;
}

inline std::vector<LabelSet> circuits_of_size(const BinaryMatroid& m, int k) {
  if (k < 1) throw precondition_error("circuit size must be at least 1");
  LabelSet all = m.labels();
  std::sort(all.begin(), all.end());
  std::vector<LabelSet> out;
  detail::for_each_combination(m.size(), k, [&](const std::vector<int>& idx) {
    LabelSet s;
    s.reserve(static_cast<std::size_t>(k));
    for (int i : idx) s.push_back(all[static_cast<std::size_t>(i)]);
    if (is_circuit(m, s)) out.push_back(std::move(s));
    return false;
  });
  return out;
}

// Cocircuits are the circuits of the dual.
inline std::vector<LabelSet> cocircuits_of_size(const BinaryMatroid& m, int k) {
  return circuits_of_size(dual(m), k);
}

inline bool is_cocircuit(const BinaryMatroid& m, const LabelSet& x) {
  return is_circuit(dual(m), x);
}

inline Label next_label(const BinaryMatroid& m) {
  Label mx = m.size();
  for (Label l : m.labels()) mx = std::max(mx, l);
  return mx + 1;
}

// Append one column to D.  The new element takes the next free label.
inline BinaryMatroid extend(const BinaryMatroid& m, std::uint32_t col,
                            std::optional<Label> label = std::nullopt) {
  Label l = label ? *label : next_label(m);
  std::vector<Label> labels = m.labels();
  labels.push_back(l);
  BitMatrix d(m.rank(), m.corank() + 1);
  for (int c = 0; c < m.corank(); ++c) d.set_column(c, m.d().column(c));
  d.set_column(m.corank(), col);
  return BinaryMatroid(m.rank(), std::move(labels), std::move(d));
}

// Append one row to D together with a new identity element: the dual of
// extending the dual.  Bit j of `row` sits under D column j.
inline BinaryMatroid coextend(const BinaryMatroid& m, std::uint32_t row,
                              std::optional<Label> label = std::nullopt) {
  Label l = label ? *label : next_label(m);
  return dual(extend(dual(m), row, l));
}

// ---------------------------------------------------------------------------
// Text format: line 1 "r n"; then r rows of D as strings over {0,1}; then an
// optional "labels: l1 ... ln" line when labels differ from 1..n.

inline BinaryMatroid parse_matroid(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw parse_error("empty matroid file");

  std::istringstream header(lines[0]);
  long r = -1, n = -1;
  std::string extra;
  if (!(header >> r >> n) || (header >> extra))
    throw parse_error("malformed header: expected \"r n\"");
  if (r < 0 || n < r) throw parse_error("malformed header: need 0 <= r <= n");
  if (r > BitMatrix::max_rows || n - r > BitMatrix::max_rows)
    throw parse_error("matroid too large for this representation");

  if (static_cast<long>(lines.size()) < 1 + r) throw parse_error("missing matrix rows");
  BitMatrix d(static_cast<int>(r), static_cast<int>(n - r));
  for (long i = 0; i < r; ++i) {
    const std::string& row = lines[static_cast<std::size_t>(1 + i)];
    if (static_cast<long>(row.size()) != n - r)
      throw parse_error("row " + std::to_string(i + 1) + " has wrong length");
    for (long c = 0; c < n - r; ++c) {
      char ch = row[static_cast<std::size_t>(c)];
      if (ch != '0' && ch != '1') throw parse_error("matrix entries must be 0 or 1");
      if (ch == '1') d.set(static_cast<int>(i), static_cast<int>(c), true);
    }
  }

  std::vector<Label> labels;
  std::size_t next = static_cast<std::size_t>(1 + r);
  if (next < lines.size() && lines[next].rfind("labels:", 0) == 0) {
    std::istringstream ls(lines[next].substr(7));
    Label l;
    while (ls >> l) labels.push_back(l);
    if (!ls.eof()) throw parse_error("malformed labels line");
    if (static_cast<long>(labels.size()) != n) throw parse_error("labels line has wrong count");
    ++next;
  } else {
    for (long i = 1; i <= n; ++i) labels.push_back(static_cast<Label>(i));
  }
  for (; next < lines.size(); ++next)
    if (!lines[next].empty()) throw parse_error("unexpected trailing content");

  try {
    return BinaryMatroid(static_cast<int>(r), std::move(labels), std::move(d));
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

inline std::string serialize(const BinaryMatroid& m) {
  std::ostringstream out;
  out << m.rank() << ' ' << m.size() << '\n';
  for (int i = 0; i < m.rank(); ++i) out << m.d().row_string(i) << '\n';
  bool default_labels = true;
  for (int p = 0; p < m.size(); ++p)
    if (m.labels()[static_cast<std::size_t>(p)] != p + 1) {
      default_labels = false;
      break;
    }
  if (!default_labels) {
    out << "labels:";
    for (Label l : m.labels()) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

// Column word <-> printed column string (first character = top row).
inline std::string column_string(std::uint32_t w, int rows) {
  std::string s(static_cast<std::size_t>(rows), '0');
  for (int i = 0; i < rows; ++i)
    if ((w >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

inline std::uint32_t column_word(std::string_view s) {
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      w |= 1u << i;
    else if (s[i] != '0')
      throw parse_error("column strings must be over {0,1}");
  }
  return w;
}

}  // namespace matroid
