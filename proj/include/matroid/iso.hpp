#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroid/binary_matroid.hpp"
#include "matroid/parallel.hpp"

namespace matroid {

// Canonical form: a printable byte string, equal exactly for isomorphic
// binary matroids.  For every basis we take the standard form [I | D], apply
// every row permutation, sort the resulting column strings, and keep the
// lexicographically smallest linearization over all (basis, permutation)
// pairs.  Binary matroids determine D combinatorially once a basis and a row
// order are fixed (fundamental circuits), so this is a complete invariant.
// When the rank exceeds the corank, the sweep runs on the dual instead; the
// header pins (rank, size), so forms stay comparable.
using CanonicalForm = std::string;

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Label> order;  // labels arranged in canonical column order
};

namespace detail {

constexpr int max_side_rank = 7;

struct PermTables {
  std::vector<std::vector<int>> perms;                 // lexicographic order
  std::vector<std::vector<std::uint32_t>> tables;      // perm x word -> sort key
};

// tables[p][w]: the value whose top-row-first digits are column w after row
// permutation p; numeric order on these equals lexicographic string order.
inline const PermTables& perm_tables(int s) {
  static std::array<std::optional<PermTables>, max_side_rank + 1> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[static_cast<std::size_t>(s)];
  if (!slot) {
    PermTables pt;
    std::vector<int> perm(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
      std::vector<std::uint32_t> tbl(static_cast<std::size_t>(1) << s, 0u);
      for (std::uint32_t w = 0; w < (1u << s); ++w) {
        std::uint32_t v = 0;
        for (int i = 0; i < s; ++i)
          if ((w >> perm[static_cast<std::size_t>(i)]) & 1u) v |= 1u << (s - 1 - i);
        tbl[w] = v;
      }
      pt.perms.push_back(perm);
      pt.tables.push_back(std::move(tbl));
    } while (std::next_permutation(perm.begin(), perm.end()));
    slot = std::move(pt);
  }
  return *slot;
}

struct SideBest {
  std::vector<std::uint32_t> cand;
  std::size_t basis_idx = 0;
  std::size_t perm_idx = 0;
  bool set = false;
};

// Ties on the candidate break by (basis, permutation) index, so the winner is
// independent of how the basis sweep was partitioned across workers.
inline void consider(SideBest& best, const std::vector<std::uint32_t>& cand,
                     std::size_t basis_idx, std::size_t perm_idx) {
  if (!best.set || cand < best.cand ||
      (cand == best.cand && std::pair(basis_idx, perm_idx) < std::pair(best.basis_idx, best.perm_idx))) {
    best.cand = cand;
    best.basis_idx = basis_idx;
    best.perm_idx = perm_idx;
    best.set = true;
  }
}

// All s-subsets of 0..n-1 as flat index lists.
inline std::vector<std::vector<int>> all_combinations(int n, int s) {
  std::vector<std::vector<int>> out;
  for_each_combination(n, s, [&](const std::vector<int>& idx) {
    out.push_back(idx);
    return false;
  });
  return out;
}

// Fundamental-circuit solver for one candidate basis, or nullopt when the
// chosen columns are dependent.
inline std::optional<Gf2Basis> basis_solver(const std::vector<std::uint32_t>& cols,
                                            const std::vector<int>& basis) {
  Gf2Basis solver;
  for (int b : basis)
    if (!solver.add(cols[static_cast<std::size_t>(b)])) return std::nullopt;
  return solver;
}

struct SideResult {
  std::vector<std::uint32_t> cand;  // sorted transformed column values
  std::vector<int> order;           // positions in canonical column order
};

// Minimize over all bases and row permutations of one side.
inline SideResult canonical_side(const BinaryMatroid& m) {
  int s = m.rank();
  int n = m.size();
  if (s > max_side_rank)
    throw error("canonical form supported for min(rank, corank) <= " +
                std::to_string(max_side_rank));
  std::vector<std::uint32_t> cols = m.columns();
  const PermTables& pt = perm_tables(s);
  std::vector<std::vector<int>> bases = all_combinations(n, s);

  std::size_t nb = bases.size();
  SideBest best;
  std::mutex merge_mu;
  detail::run_chunked(nb, [&](std::uint64_t from, std::uint64_t to) {
    SideBest local;
    std::vector<std::uint32_t> dvec, trans, bound;
    for (std::uint64_t bi = from; bi < to; ++bi) {
      const std::vector<int>& basis = bases[static_cast<std::size_t>(bi)];
      std::optional<Gf2Basis> solver = basis_solver(cols, basis);
      if (!solver) continue;
      dvec.clear();
      for (int q = 0; q < n; ++q) {
        if (std::find(basis.begin(), basis.end(), q) != basis.end()) continue;
        std::optional<std::uint32_t> dw = solver->express(cols[static_cast<std::size_t>(q)]);
        if (!dw) throw std::logic_error("canonical sweep: column outside basis span");
        dvec.push_back(*dw);
      }
      if (local.set) {
        // Row permutations keep column weights, so the smallest value a
        // weight-w column can reach is the all-low-bits word.  If even that
        // sorted bound cannot beat the local best, skip the basis.
        bound.clear();
        for (std::uint32_t dw : dvec)
          bound.push_back((1u << std::popcount(dw)) - 1u);
        std::sort(bound.begin(), bound.end());
        if (!(bound < local.cand)) continue;
      }
      for (std::size_t pi = 0; pi < pt.tables.size(); ++pi) {
        const std::vector<std::uint32_t>& tbl = pt.tables[pi];
        trans.clear();
        for (std::uint32_t dw : dvec) trans.push_back(tbl[dw]);
        std::sort(trans.begin(), trans.end());
        consider(local, trans, static_cast<std::size_t>(bi), pi);
      }
    }
    if (local.set) {
      std::lock_guard<std::mutex> lock(merge_mu);
      consider(best, local.cand, local.basis_idx, local.perm_idx);
    }
  });

  if (!best.set) {
    // rank 0: single empty basis, all columns are zero
    SideResult res;
    res.cand.assign(static_cast<std::size_t>(n), 0u);
    for (int q = 0; q < n; ++q) res.order.push_back(q);
    return res;
  }

  // Rebuild the order for the winning (basis, permutation).
  const std::vector<int>& basis = bases[best.basis_idx];
  const std::vector<int>& perm = pt.perms[best.perm_idx];
  const std::vector<std::uint32_t>& tbl = pt.tables[best.perm_idx];
  std::optional<Gf2Basis> solver = basis_solver(cols, basis);
  SideResult res;
  res.cand = best.cand;
  for (int i = 0; i < s; ++i)
    res.order.push_back(basis[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
  std::vector<std::pair<std::uint32_t, int>> rest;
  for (int q = 0; q < n; ++q) {
    if (std::find(basis.begin(), basis.end(), q) != basis.end()) continue;
    std::uint32_t dw = *solver->express(cols[static_cast<std::size_t>(q)]);
    rest.emplace_back(tbl[dw], q);
  }
  std::stable_sort(rest.begin(), rest.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [v, q] : rest) res.order.push_back(q);
  return res;
}

inline std::string form_string(int r, int n, int side_rank,
                               const std::vector<std::uint32_t>& cand) {
  std::string out = "R" + std::to_string(r) + "N" + std::to_string(n) + ":";
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (i) out += ',';
    // values already encode top-row-first strings
    for (int b = side_rank - 1; b >= 0; --b) out += ((cand[i] >> b) & 1u) ? '1' : '0';
  }
  return out;
}

struct LabelingCacheEntry {
  CanonicalForm form;
  std::vector<int> order;  // positions in the original label sequence
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const BinaryMatroid& m) {
  static std::unordered_map<std::string, detail::LabelingCacheEntry> cache;
  static std::mutex mu;
  std::string key = detail::rep_key(m);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      CanonicalLabeling cl;
      cl.form = it->second.form;
      for (int p : it->second.order) cl.order.push_back(m.labels()[static_cast<std::size_t>(p)]);
      return cl;
    }
  }

  int r = m.rank(), n = m.size();
  detail::LabelingCacheEntry entry;
  if (r <= n - r) {
    detail::SideResult side = detail::canonical_side(m);
    entry.form = detail::form_string(r, n, r, side.cand);
    entry.order = std::move(side.order);
  } else {
    BinaryMatroid dm = dual(m);
    detail::SideResult side = detail::canonical_side(dm);
    entry.form = detail::form_string(r, n, n - r, side.cand);
    // dual shares the ground set; translate dual positions to primal ones
    entry.order.reserve(static_cast<std::size_t>(n));
    for (int q : side.order)
      entry.order.push_back(m.position(dm.labels()[static_cast<std::size_t>(q)]));
  }

  CanonicalLabeling cl;
  cl.form = entry.form;
  for (int p : entry.order) cl.order.push_back(m.labels()[static_cast<std::size_t>(p)]);
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), std::move(entry));
  }
  return cl;
}

inline CanonicalForm canonical_form(const BinaryMatroid& m) { return canonical_labeling(m).form; }

// Ground-set bijection certifying an isomorphism, verified before returning.
struct IsoCertificate {
  std::vector<std::pair<Label, Label>> mapping;  // sorted by source label

  Label image(Label l) const {
    for (const auto& [a, b] : mapping)
      if (a == l) return b;
    throw unknown_label_error("label not in certificate");
  }
};

namespace detail {

struct RrefSignature {
  std::vector<int> pivot_cols;
  std::vector<std::uint32_t> coeffs;
  bool operator==(const RrefSignature&) const = default;
};

inline RrefSignature rref_signature(const std::vector<std::uint32_t>& cols) {
  RrefSignature sig;
  Gf2Basis basis;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (basis.add(cols[c])) sig.pivot_cols.push_back(static_cast<int>(c));
  for (std::uint32_t w : cols) {
    std::optional<std::uint32_t> cw = basis.express(w);
    if (!cw) throw std::logic_error("rref: column outside total span");
    sig.coeffs.push_back(*cw);
  }
  return sig;
}

}  // namespace detail

// The two labelled column lists present the same matroid with the same labels
// in the same positions: reduced row echelon data must coincide.
inline bool same_labeled_matroid(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b) {
  return detail::rref_signature(a) == detail::rref_signature(b);
}

inline std::optional<IsoCertificate> is_isomorphic(const BinaryMatroid& a,
                                                   const BinaryMatroid& b) {
  if (a == b) {
    IsoCertificate cert;
    for (Label l : a.labels()) cert.mapping.emplace_back(l, l);
    std::sort(cert.mapping.begin(), cert.mapping.end());
    return cert;
  }
  if (a.rank() != b.rank() || a.size() != b.size()) return std::nullopt;
  CanonicalLabeling ca = canonical_labeling(a);
  CanonicalLabeling cb = canonical_labeling(b);
  if (ca.form != cb.form) return std::nullopt;

  std::vector<std::uint32_t> cols_a, cols_b;
  for (int i = 0; i < a.size(); ++i) {
    cols_a.push_back(a.column_of(ca.order[static_cast<std::size_t>(i)]));
    cols_b.push_back(b.column_of(cb.order[static_cast<std::size_t>(i)]));
  }
  if (!same_labeled_matroid(cols_a, cols_b))
    throw std::logic_error("canonical forms matched but certificate failed verification");

  IsoCertificate cert;
  for (int i = 0; i < a.size(); ++i)
    cert.mapping.emplace_back(ca.order[static_cast<std::size_t>(i)],
                              cb.order[static_cast<std::size_t>(i)]);
  std::sort(cert.mapping.begin(), cert.mapping.end());
  return cert;
}

// Weight distribution of the row space of [I | D]: invariant under both row
// operations and column permutation, so a cheap pre-screen for isomorphism.
inline std::vector<int> code_weights(const BinaryMatroid& m) {
  int r = m.rank(), n = m.size();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    std::uint64_t w = 1ull << i;
    for (int c = 0; c < n - r; ++c)
      if (m.d().get(i, c)) w |= 1ull << (r + c);
    rows[static_cast<std::size_t>(i)] = w;
  }
  std::vector<int> hist(static_cast<std::size_t>(n + 1), 0);
  std::vector<std::uint64_t> words(static_cast<std::size_t>(1) << r, 0);
  ++hist[0];
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    std::uint64_t w = words[mask & (mask - 1)] ^ rows[static_cast<std::size_t>(std::countr_zero(mask))];
    words[mask] = w;
    ++hist[static_cast<std::size_t>(std::popcount(w))];
  }
  return hist;
}

}  // namespace matroid
