#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matroid/catalog.hpp"
#include "matroid/connectivity.hpp"
#include "matroid/minors.hpp"

namespace matroid {

// k iff m is the rank-k wheel M(W_k).  Whirls are not binary, so wheels are
// the only case the chain machinery has to guard.
inline std::optional<int> is_wheel(const BinaryMatroid& m) {
  int k = m.rank();
  if (k < 3 || m.size() != 2 * k) return std::nullopt;
  if (canonical_form(m) == canonical_form(wheel(k))) return k;
  return std::nullopt;
}

struct LemmaDeletion {
  Label element;  // m \ element is 3-connected and keeps an N-minor
};

struct LemmaSmallGap {
  int gap;                        // |E(M)| - |E(N)| <= 3
  std::optional<LabelSet> triad;  // present iff gap == 3: deletion(m, triad) = N
};

using LemmaStepResult = std::variant<LemmaDeletion, LemmaSmallGap>;

// One-step dichotomy for a rank gap of exactly one: either some deletion stays
// 3-connected with an N-minor, or the element gap is at most 3 (and a gap of
// exactly 3 is certified by a triad whose deletion gives N).
inline LemmaStepResult lemma_step(const BinaryMatroid& m, const BinaryMatroid& n) {
  if (m.rank() != n.rank() + 1)
    throw precondition_error("lemma_step: rank gap must be exactly 1");
  if (!is_3connected(m) || !is_3connected(n))
    throw precondition_error("lemma_step: both matroids must be 3-connected");
  if (!has_minor_bool(m, n)) throw precondition_error("lemma_step: N is not a minor of M");

  int gap = m.size() - n.size();
  if (gap <= 2) return LemmaSmallGap{gap, std::nullopt};

  if (gap == 3) {
    LabelSet all = m.labels();
    std::sort(all.begin(), all.end());
    std::optional<LabelSet> triad;
    detail::for_each_combination(m.size(), 3, [&](const std::vector<int>& idx) {
      LabelSet t = {all[static_cast<std::size_t>(idx[0])], all[static_cast<std::size_t>(idx[1])],
                    all[static_cast<std::size_t>(idx[2])]};
      if (!is_cocircuit(m, t)) return false;
      if (!is_isomorphic(deletion(m, t), n)) return false;
      triad = t;
      return true;
    });
    if (triad) return LemmaSmallGap{3, triad};
  }

  LabelSet all = m.labels();
  std::sort(all.begin(), all.end());
  for (Label e : all) {
    BinaryMatroid del = deletion(m, {e});
    if (is_3connected(del) && has_minor_bool(del, n)) return LemmaDeletion{e};
  }
  throw std::logic_error("lemma_step: neither branch of the dichotomy holds");
}

struct ChainStep {
  enum class Kind { Extension, Coextension, PairBatch, TriadBatch };
  BinaryMatroid result;
  Kind kind = Kind::Extension;
  LabelSet new_elements;                      // labels of result absent below
  std::optional<Label> coextension_element;   // the contracted one (Coextension, PairBatch)
};

struct ChainReport {
  BinaryMatroid start;           // isomorphic to N
  std::vector<ChainStep> steps;  // final result equals M
  int m = 0;                     // rank(M) - rank(N)
  bool valid = false;
};

struct ChainValidation {
  bool ok = false;
  std::vector<std::string> issues;
};

inline const char* kind_name(ChainStep::Kind k) {
  switch (k) {
    case ChainStep::Kind::Extension: return "extension";
    case ChainStep::Kind::Coextension: return "coextension";
    case ChainStep::Kind::PairBatch: return "pair";
    case ChainStep::Kind::TriadBatch: return "triad";
  }
  return "?";
}

// Independent re-check of a chain report: endpoints, 3-connectivity of every
// intermediate, the rank/size pattern (rank-increasing steps of at most three
// elements until full rank, then single-element extensions), the minor link of
// every step, and a cocircuit certificate for every 3-element jump.
inline ChainValidation validate_chain(const ChainReport& report, const BinaryMatroid& m,
                                      const BinaryMatroid& n) {
  ChainValidation v;
  auto issue = [&](const std::string& s) { v.issues.push_back(s); };

  if (canonical_form(report.start) != canonical_form(n))
    issue("start is not isomorphic to N");
  if (report.steps.empty()) {
    if (canonical_form(report.start) != canonical_form(m))
      issue("empty chain but start is not isomorphic to M");
    v.ok = v.issues.empty();
    return v;
  }

  int full_rank = m.rank();
  int rank_jumps = 0;
  const BinaryMatroid* prev = &report.start;
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const ChainStep& st = report.steps[i];
    std::string at = "step " + std::to_string(i + 1) + ": ";
    int growth = 0;
    int dr = 0;
    switch (st.kind) {
      case ChainStep::Kind::Extension: growth = 1; dr = 0; break;
      case ChainStep::Kind::Coextension: growth = 1; dr = 1; break;
      case ChainStep::Kind::PairBatch: growth = 2; dr = 1; break;
      case ChainStep::Kind::TriadBatch: growth = 3; dr = 1; break;
    }
    if (st.result.size() != prev->size() + growth) issue(at + "element count mismatch");
    if (st.result.rank() != prev->rank() + dr) issue(at + "rank mismatch");
    if (static_cast<int>(st.new_elements.size()) != growth)
      issue(at + "new element set has the wrong size");
    for (Label l : st.new_elements)
      if (!st.result.has_label(l)) issue(at + "new element not in the step result");
    if (!is_3connected(st.result)) issue(at + "result is not 3-connected");

    if (prev->rank() < full_rank) {
      if (dr != 1) issue(at + "rank-preserving step before full rank");
    } else if (dr != 0 || st.kind != ChainStep::Kind::Extension) {
      issue(at + "non-extension step at full rank");
    }
    rank_jumps += dr;

    // minor link back to the predecessor
    try {
      BinaryMatroid down;
      bool linked = true;
      switch (st.kind) {
        case ChainStep::Kind::Extension:
          down = deletion(st.result, st.new_elements);
          break;
        case ChainStep::Kind::Coextension:
          down = contraction(st.result, st.new_elements);
          break;
        case ChainStep::Kind::PairBatch: {
          if (!st.coextension_element) {
            issue(at + "pair step without a marked coextension element");
            linked = false;
            break;
          }
          Label f = *st.coextension_element;
          LabelSet dels;
          for (Label l : st.new_elements)
            if (l != f) dels.push_back(l);
          if (dels.size() != 1) {
            issue(at + "pair step elements inconsistent");
            linked = false;
            break;
          }
          down = contraction(deletion(st.result, dels), {f});
          break;
        }
        case ChainStep::Kind::TriadBatch:
          if (!is_cocircuit(st.result, st.new_elements))
            issue(at + "3-element jump is not a triad of the result");
          down = deletion(st.result, st.new_elements);
          break;
      }
      if (linked && canonical_form(down) != canonical_form(*prev))
        issue(at + "removing the new elements does not give the predecessor");
    } catch (const error& e) {
      issue(at + "minor link check failed: " + e.what());
    }
    prev = &st.result;
  }

  if (canonical_form(*prev) != canonical_form(m)) issue("final matroid is not isomorphic to M");
  if (rank_jumps != report.m) issue("declared rank gap does not match the steps");
  if (report.m != m.rank() - n.rank()) issue("declared rank gap does not match M and N");

  v.ok = v.issues.empty();
  return v;
}

namespace detail {

struct PosetNode {
  BinaryMatroid rep;
  std::vector<CanonicalForm> parents;  // one element smaller, 3-connected, N-minor
};

// All 3-connected minors of m that keep an n-minor, one node per isomorphism
// class, linked by single-element deletions/contractions.  Built top-down so
// every node really is a minor of m.
inline std::map<CanonicalForm, PosetNode> minor_poset(const BinaryMatroid& m,
                                                      const BinaryMatroid& n) {
  std::map<CanonicalForm, PosetNode> nodes;
  std::deque<CanonicalForm> queue;
  CanonicalForm top = canonical_form(m);
  nodes.emplace(top, PosetNode{m, {}});
  queue.push_back(top);

  while (!queue.empty()) {
    CanonicalForm f = std::move(queue.front());
    queue.pop_front();
    BinaryMatroid x = nodes.at(f).rep;
    if (x.size() <= n.size()) continue;
    LabelSet labels = x.labels();
    std::sort(labels.begin(), labels.end());
    std::vector<CanonicalForm> parents;
    for (Label e : labels) {
      for (int op = 0; op < 2; ++op) {
        if (op == 1 && x.rank() <= n.rank()) continue;
        BinaryMatroid y = op == 0 ? deletion(x, {e}) : contraction(x, {e});
        if (y.rank() < n.rank() || y.corank() < n.corank()) continue;
        if (!is_3connected(y)) continue;
        if (!has_minor_bool(y, n)) continue;
        CanonicalForm yf = canonical_form(y);
        if (!nodes.count(yf)) {
          nodes.emplace(yf, PosetNode{y, {}});
          queue.push_back(yf);
        }
        if (std::find(parents.begin(), parents.end(), yf) == parents.end())
          parents.push_back(yf);
      }
    }
    nodes.at(f).parents = std::move(parents);
  }
  return nodes;
}

}  // namespace detail

// Build a chain from N up to M: one rank-increasing step of at most three
// elements per rank level, then single-element extensions at full rank.  The
// indices at which rank first increases are minimized lexicographically over
// all single-element chains through 3-connected minors of M, with ties broken
// by canonical form.
inline ChainReport strong_chain(const BinaryMatroid& m, const BinaryMatroid& n) {
  if (!is_3connected(m) || !is_3connected(n))
    throw precondition_error("strong_chain: both matroids must be 3-connected");
  if (!has_minor_bool(m, n)) throw precondition_error("strong_chain: N is not a minor of M");
  if (canonical_form(m) == canonical_form(n))
    throw precondition_error("strong_chain: N must be a proper minor of M");
  if (std::optional<int> k = is_wheel(n)) {
    if (has_minor_bool(m, wheel(*k + 1)))
      throw wheel_precondition_error("strong_chain: M has a larger wheel-minor than N");
  }

  std::map<CanonicalForm, detail::PosetNode> nodes = detail::minor_poset(m, n);
  CanonicalForm n_form = canonical_form(n);
  CanonicalForm m_form = canonical_form(m);
  if (!nodes.count(n_form)) throw std::logic_error("strong_chain: N-node missing from poset");

  // child -> parents is stored; group nodes by size for the upward sweep
  std::map<int, std::vector<CanonicalForm>> by_size;
  for (const auto& [f, node] : nodes) by_size[node.rep.size()].push_back(f);

  struct Dp {
    std::vector<int> profile;
    std::optional<CanonicalForm> parent;
    bool reachable = false;
  };
  std::map<CanonicalForm, Dp> dp;
  dp[n_form] = {{}, std::nullopt, true};

  for (auto& [size, forms] : by_size) {
    if (size == n.size()) continue;
    for (const CanonicalForm& f : forms) {
      const detail::PosetNode& node = nodes.at(f);
      Dp best;
      for (const CanonicalForm& pf : node.parents) {
        auto it = dp.find(pf);
        if (it == dp.end() || !it->second.reachable) continue;
        std::vector<int> profile = it->second.profile;
        if (node.rep.rank() > nodes.at(pf).rep.rank())
          profile.push_back(size - n.size());
        if (!best.reachable || profile < best.profile ||
            (profile == best.profile && pf < *best.parent)) {
          best = {std::move(profile), pf, true};
        }
      }
      if (best.reachable) dp[f] = std::move(best);
    }
  }

  auto mt = dp.find(m_form);
  if (mt == dp.end() || !mt->second.reachable)
    throw std::logic_error("strong_chain: no chain found in the minor poset");

  // class path from N to M
  std::vector<CanonicalForm> path;
  for (CanonicalForm f = m_form;;) {
    path.push_back(f);
    const Dp& d = dp.at(f);
    if (!d.parent) break;
    f = *d.parent;
  }
  std::reverse(path.begin(), path.end());

  const std::vector<int>& profile = mt->second.profile;
  int mgap = m.rank() - n.rank();
  if (static_cast<int>(profile.size()) != mgap)
    throw std::logic_error("strong_chain: rank profile inconsistent");
  for (std::size_t k = 0; k < profile.size(); ++k) {
    int lo = k == 0 ? 0 : profile[k - 1];
    if (profile[k] - lo > 3)
      throw std::logic_error("strong_chain: rank step exceeds three elements");
  }

  // segment boundaries: indices into path whose matroids survive compression
  std::vector<std::size_t> marks;
  for (int idx : profile) marks.push_back(static_cast<std::size_t>(idx));
  std::size_t tail_start = profile.empty() ? 0 : static_cast<std::size_t>(profile.back());
  for (std::size_t i = tail_start + 1; i < path.size(); ++i) marks.push_back(i);

  // realize concrete matroids top-down so every step result is a minor of m
  ChainReport report;
  report.m = mgap;
  std::vector<ChainStep> steps;
  BinaryMatroid cur = m;
  for (std::size_t si = marks.size(); si-- > 0;) {
    std::size_t hi = marks[si];
    std::size_t lo = si == 0 ? 0 : marks[si - 1];
    const CanonicalForm& target = path[lo];
    int growth = static_cast<int>(hi - lo);
    bool rank_jump = nodes.at(path[hi]).rep.rank() > nodes.at(path[lo]).rep.rank();

    LabelSet labels = cur.labels();
    std::sort(labels.begin(), labels.end());
    std::optional<ChainStep> step;
    auto make_step = [&](ChainStep::Kind kind, LabelSet new_elems,
                         std::optional<Label> coel, BinaryMatroid down) {
      ChainStep st;
      st.result = cur;
      st.kind = kind;
      std::sort(new_elems.begin(), new_elems.end());
      st.new_elements = std::move(new_elems);
      st.coextension_element = coel;
      step = std::move(st);
      cur = std::move(down);
    };

    if (growth == 1 && !rank_jump) {
      for (Label e : labels) {
        BinaryMatroid down = deletion(cur, {e});
        if (canonical_form(down) == target) {
          make_step(ChainStep::Kind::Extension, {e}, std::nullopt, std::move(down));
          break;
        }
      }
    } else if (growth == 1) {
      for (Label e : labels) {
        BinaryMatroid down = contraction(cur, {e});
        if (canonical_form(down) == target) {
          make_step(ChainStep::Kind::Coextension, {e}, e, std::move(down));
          break;
        }
      }
    } else if (growth == 2) {
      for (Label e : labels) {
        if (step) break;
        BinaryMatroid mid = deletion(cur, {e});
        for (Label f : labels) {
          if (f == e) continue;
          BinaryMatroid down = contraction(mid, {f});
          if (canonical_form(down) == target) {
            make_step(ChainStep::Kind::PairBatch, {e, f}, f, std::move(down));
            break;
          }
        }
      }
    } else {
      detail::for_each_combination(cur.size(), 3, [&](const std::vector<int>& idx) {
        LabelSet t = {labels[static_cast<std::size_t>(idx[0])],
                      labels[static_cast<std::size_t>(idx[1])],
                      labels[static_cast<std::size_t>(idx[2])]};
        if (!is_cocircuit(cur, t)) return false;
        BinaryMatroid down = deletion(cur, t);
        if (canonical_form(down) != target) return false;
        make_step(ChainStep::Kind::TriadBatch, t, std::nullopt, std::move(down));
        return true;
      });
    }
    if (!step) throw std::logic_error("strong_chain: failed to realize a compressed step");
    steps.push_back(std::move(*step));
  }

  std::reverse(steps.begin(), steps.end());
  report.start = cur;
  report.steps = std::move(steps);
  report.valid = validate_chain(report, m, n).ok;
  return report;
}

// One line per step: "k | kind | new-elements | rank | n | triad?".
inline std::string format_chain(const ChainReport& report) {
  std::string out;
  out += "0 | start | - | " + std::to_string(report.start.rank()) + " | " +
         std::to_string(report.start.size()) + " | -\n";
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const ChainStep& st = report.steps[i];
    std::string elems;
    for (std::size_t j = 0; j < st.new_elements.size(); ++j) {
      if (j) elems += ',';
      elems += std::to_string(st.new_elements[j]);
    }
    std::string triad = st.kind == ChainStep::Kind::TriadBatch ? "{" + elems + "}" : "-";
    out += std::to_string(i + 1) + " | " + kind_name(st.kind) + " | " + elems + " | " +
           std::to_string(st.result.rank()) + " | " + std::to_string(st.result.size()) + " | " +
           triad + "\n";
  }
  return out;
}

}  // namespace matroid
