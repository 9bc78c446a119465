#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "matroid/errors.hpp"

namespace matroid {

// Dense 0/1 matrix over GF(2), stored column-wise.
// Bit i of a column word is the entry in row i (row 0 = top row).
class BitMatrix {
 public:
  static constexpr int max_rows = 31;

  BitMatrix() = default;

  BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), words_(static_cast<std::size_t>(cols), 0u) {
    if (rows < 0 || cols < 0) throw error("BitMatrix: negative dimension");
    if (rows > max_rows) throw error("BitMatrix: row count exceeds " + std::to_string(max_rows));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const { return (words_[static_cast<std::size_t>(c)] >> r) & 1u; }

  void set(int r, int c, bool v) {
    std::uint32_t bit = 1u << r;
    if (v)
      words_[static_cast<std::size_t>(c)] |= bit;
    else
      words_[static_cast<std::size_t>(c)] &= ~bit;
  }

  std::uint32_t column(int c) const { return words_[static_cast<std::size_t>(c)]; }

  void set_column(int c, std::uint32_t w) { words_[static_cast<std::size_t>(c)] = w; }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
      for (int r = 0; r < rows_; ++r)
        if (get(r, c)) t.set(c, r, true);
    return t;
  }

  // Row r as a string of '0'/'1', leftmost character = column 0.
  std::string row_string(int r) const {
    std::string s(static_cast<std::size_t>(cols_), '0');
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) s[static_cast<std::size_t>(c)] = '1';
    return s;
  }

  bool operator==(const BitMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> words_;
};

// Rank of a set of column words by xor elimination.
inline int gf2_rank(std::vector<std::uint32_t> cols) {
  int rank = 0;
  std::uint32_t pivots[BitMatrix::max_rows + 1] = {};
  for (std::uint32_t w : cols) {
    while (w != 0) {
      int b = std::countr_zero(w);
      if (pivots[b] == 0) {
        pivots[b] = w;
        ++rank;
        break;
      }
      w ^= pivots[b];
    }
  }
  return rank;
}

}  // namespace matroid
