#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroid/class_spec.hpp"
#include "matroid/connectivity.hpp"
#include "matroid/iso.hpp"

namespace matroid {

// Certifies that m / contracted \ deleted is isomorphic to the target.
struct MinorWitness {
  LabelSet contracted;
  LabelSet deleted;
  IsoCertificate iso;
};

namespace detail {

// Core minor search.  Contraction sets range over independent sets of the
// forced size, deletion sets over coindependent sets of the remainder; any
// minor has such a normal form, and the pruning is what makes the search
// tractable.  When the contraction side is the larger one the search runs on
// the duals instead.  Enumeration is lexicographic over sorted labels, so the
// first witness found is reproducible.
inline std::optional<MinorWitness> minor_search(const BinaryMatroid& m, const BinaryMatroid& n,
                                                bool want_witness) {
  int c = m.rank() - n.rank();
  int d = m.corank() - n.corank();
  if (c < 0 || d < 0) return std::nullopt;

  if (c > d) {
    std::optional<MinorWitness> w = minor_search(dual(m), dual(n), want_witness);
    if (!w) return std::nullopt;
    return MinorWitness{w->deleted, w->contracted, w->iso};
  }

  std::vector<int> target_weights = code_weights(n);
  CanonicalForm target_form = canonical_form(n);

  LabelSet all = m.labels();
  std::sort(all.begin(), all.end());

  std::optional<MinorWitness> result;
  auto try_pair = [&](const LabelSet& contracted, const BinaryMatroid& m1) {
    LabelSet labels1 = m1.labels();
    std::sort(labels1.begin(), labels1.end());
    int n1 = m1.size();
    return for_each_combination(n1, d, [&](const std::vector<int>& idx) {
      LabelSet del;
      del.reserve(static_cast<std::size_t>(d));
      for (int i : idx) del.push_back(labels1[static_cast<std::size_t>(i)]);
      LabelSet keep;
      for (Label l : labels1)
        if (!std::binary_search(del.begin(), del.end(), l)) keep.push_back(l);
      if (rank(m1, keep) != m1.rank()) return false;  // not coindependent
      BinaryMatroid m2 = deletion(m1, del);
      if (code_weights(m2) != target_weights) return false;
      if (canonical_form(m2) != target_form) return false;
      MinorWitness w;
      w.contracted = contracted;
      w.deleted = del;
      if (want_witness) {
        std::optional<IsoCertificate> cert = is_isomorphic(m2, n);
        if (!cert) throw std::logic_error("canonical forms agree but certificate missing");
        w.iso = *cert;
      }
      result = std::move(w);
      return true;
    });
  };

  if (c == 0) {
    try_pair({}, m);
    return result;
  }
  for_each_combination(m.size(), c, [&](const std::vector<int>& idx) {
    LabelSet con;
    con.reserve(static_cast<std::size_t>(c));
    for (int i : idx) con.push_back(all[static_cast<std::size_t>(i)]);
    if (rank(m, con) != c) return false;  // dependent: redundant contraction set
    return try_pair(con, contraction(m, con));
  });
  return result;
}

}  // namespace detail

inline std::optional<MinorWitness> has_minor(const BinaryMatroid& m, const BinaryMatroid& n) {
  return detail::minor_search(m, n, /*want_witness=*/true);
}

// Existence only, memoized by canonical forms: minor containment is a fact
// about isomorphism classes, and the sweeps ask the same questions often.
inline bool has_minor_bool(const BinaryMatroid& m, const BinaryMatroid& n) {
  if (m.rank() < n.rank() || m.corank() < n.corank()) return false;
  static std::unordered_map<std::string, bool> cache;
  static std::mutex mu;
  std::string key = canonical_form(m);
  key += '|';
  key += canonical_form(n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  bool found = detail::minor_search(m, n, /*want_witness=*/false).has_value();
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), found);
  }
  return found;
}

inline bool satisfies(const BinaryMatroid& m, const ClassSpec& spec) {
  if (spec.connectivity == Connectivity::ThreeConnected) {
    if (!is_3connected(m)) return false;
  } else {
    if (!is_internally_4connected(m)) return false;
  }
  for (const BinaryMatroid& r : spec.required_minors)
    if (!has_minor_bool(m, r)) return false;
  for (const BinaryMatroid& x : spec.excluded_minors)
    if (has_minor_bool(m, x)) return false;
  return true;
}

// All deletion-minors of m passing the spec, one representative per
// isomorphism class, by descending element count.  The walk deletes one
// element at a time with canonical-form dedup; a level can be dropped only
// when a required minor no longer fits, since connectivity and excluded
// minors are not monotone along deletions.
inline std::vector<BinaryMatroid> restrictions_with(const BinaryMatroid& m,
                                                    const ClassSpec& spec) {
  int floor_n = 4;
  for (const BinaryMatroid& r : spec.required_minors) floor_n = std::max(floor_n, r.size());

  std::vector<BinaryMatroid> out;
  std::map<CanonicalForm, BinaryMatroid> level;
  bool seed_ok = true;
  for (const BinaryMatroid& r : spec.required_minors)
    if (!has_minor_bool(m, r)) seed_ok = false;
  if (seed_ok) level.emplace(canonical_form(m), m);

  while (!level.empty()) {
    std::map<CanonicalForm, BinaryMatroid> next;
    for (const auto& [form, x] : level) {
      if (satisfies(x, spec)) out.push_back(x);
      if (x.size() <= floor_n) continue;
      for (Label l : x.labels()) {
        BinaryMatroid y = deletion(x, {l});
        bool keep = true;
        for (const BinaryMatroid& r : spec.required_minors)
          if (!has_minor_bool(y, r)) {
            keep = false;
            break;
          }
        if (!keep) continue;
        CanonicalForm f = canonical_form(y);
        next.emplace(std::move(f), std::move(y));
      }
    }
    level = std::move(next);
  }

  std::sort(out.begin(), out.end(), [](const BinaryMatroid& a, const BinaryMatroid& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return canonical_form(a) < canonical_form(b);
  });
  return out;
}

}  // namespace matroid
