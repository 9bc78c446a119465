#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroid/binary_matroid.hpp"
#include "matroid/parallel.hpp"

namespace matroid {

struct SeparationReport {
  LabelSet side_a;
  LabelSet side_b;
  int lambda_value = 0;
  int k = 0;
};

// lambda(X) = r(X) + r(E - X) - r(M).
inline int lambda(const BinaryMatroid& m, const LabelSet& x) {
  LabelSet s = detail::normalized_subset(m, x);
  LabelSet rest;
  for (Label l : m.labels())
    if (!std::binary_search(s.begin(), s.end(), l)) rest.push_back(l);
  return rank(m, s) + rank(m, rest) - m.rank();
}

namespace detail {

inline int masked_rank(const std::vector<std::uint32_t>& cols, std::uint32_t mask) {
  std::uint32_t piv[BitMatrix::max_rows + 1] = {};
  int rk = 0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    std::uint32_t w = cols[static_cast<std::size_t>(std::countr_zero(m))];
    while (w != 0) {
      int b = std::countr_zero(w);
      if (piv[b] == 0) {
        piv[b] = w;
        ++rk;
        break;
      }
      w ^= piv[b];
    }
  }
  return rk;
}

}  // namespace detail

// First k-separation in a fixed subset order, if any.  Subsets are scanned as
// ascending bitmasks over positions 1..n-1 with position 0 pinned to side A,
// which halves the sweep without losing any partition.
inline std::optional<SeparationReport> find_k_separation(const BinaryMatroid& m, int k) {
  if (k < 1) throw precondition_error("separation order must be at least 1");
  int n = m.size();
  if (n < 2 * k) return std::nullopt;
  if (n - 1 > 30) throw error("separation sweep limited to 31 elements");

  std::vector<std::uint32_t> cols = m.columns();
  int r = m.rank();
  std::uint32_t full = n >= 31 ? 0xffffffffu : ((1u << n) - 1u);

  auto hit = [&](std::uint64_t idx) {
    std::uint32_t a = (static_cast<std::uint32_t>(idx) << 1) | 1u;
    int na = std::popcount(a);
    if (na < k || n - na < k) return false;
    return detail::masked_rank(cols, a) + detail::masked_rank(cols, full & ~a) - r <= k - 1;
  };

  std::optional<std::uint64_t> found = parallel_first_index(1ull << (n - 1), hit);
  if (!found) return std::nullopt;

  std::uint32_t a = (static_cast<std::uint32_t>(*found) << 1) | 1u;
  SeparationReport rep;
  rep.k = k;
  for (int p = 0; p < n; ++p) {
    if ((a >> p) & 1u)
      rep.side_a.push_back(m.labels()[static_cast<std::size_t>(p)]);
    else
      rep.side_b.push_back(m.labels()[static_cast<std::size_t>(p)]);
  }
  std::sort(rep.side_a.begin(), rep.side_a.end());
  std::sort(rep.side_b.begin(), rep.side_b.end());
  rep.lambda_value = lambda(m, rep.side_a);
  return rep;
}

// 3-connectivity: at least four elements, simple and cosimple, and no 1- or
// 2-separation.  One fused sweep covers both separation orders.
inline bool is_3connected(const BinaryMatroid& m) {
  int n = m.size();
  if (n < 4) return false;
  if (!is_simple(m) || !is_cosimple(m)) return false;

  static std::unordered_map<std::string, bool> cache;
  static std::mutex mu;
  std::string key = detail::rep_key(m);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  std::vector<std::uint32_t> cols = m.columns();
  int r = m.rank();
  std::uint32_t full = (1u << n) - 1u;
  bool separated = parallel_any(1ull << (n - 1), [&](std::uint64_t idx) {
    std::uint32_t a = (static_cast<std::uint32_t>(idx) << 1) | 1u;
    int na = std::popcount(a);
    int nb = n - na;
    if (nb < 1) return false;
    int lam = detail::masked_rank(cols, a) + detail::masked_rank(cols, full & ~a) - r;
    if (lam == 0) return true;                       // 1-separation
    return na >= 2 && nb >= 2 && lam <= 1;           // 2-separation
  });

  bool ok = !separated;
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), ok);
  }
  return ok;
}

// Internally 4-connected: 3-connected and lambda(A) >= 3 whenever both sides
// have at least four elements.
inline bool is_internally_4connected(const BinaryMatroid& m) {
  if (!is_3connected(m)) return false;
  int n = m.size();
  if (n < 8) return true;
  std::vector<std::uint32_t> cols = m.columns();
  int r = m.rank();
  std::uint32_t full = (1u << n) - 1u;
  bool bad = parallel_any(1ull << (n - 1), [&](std::uint64_t idx) {
    std::uint32_t a = (static_cast<std::uint32_t>(idx) << 1) | 1u;
    int na = std::popcount(a);
    if (na < 4 || n - na < 4) return false;
    return detail::masked_rank(cols, a) + detail::masked_rank(cols, full & ~a) - r <= 2;
  });
  return !bad;
}

}  // namespace matroid
