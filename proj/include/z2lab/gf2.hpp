#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace z2lab {

// Fixed-length bit vector over GF(2), packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int length) : len_(length), words_((length + 63) / 64, 0) {}

  static BitVec from_string(const std::string& bits);

  int length() const { return len_; }
  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool v) {
    uint64_t m = uint64_t(1) << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(int i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

  void xor_with(const BitVec& o);
  BitVec operator^(const BitVec& o) const {
    BitVec r = *this;
    r.xor_with(o);
    return r;
  }
  bool operator==(const BitVec& o) const { return len_ == o.len_ && words_ == o.words_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }
  bool operator<(const BitVec& o) const;  // length-then-lex, for ordered containers

  bool is_zero() const;
  int weight() const;
  int lowest_set_bit() const;  // -1 when zero

  std::string to_string() const;

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  int len_ = 0;
  std::vector<uint64_t> words_;
};

// Parity of the AND-popcount of two equal-length vectors.
int gf2_dot(const BitVec& a, const BitVec& b);

// Dense GF(2) matrix, row-major packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return data_[r].get(c); }
  void set(int r, int c, bool v) { data_[r].set(c, v); }
  const BitVec& row(int r) const { return data_[r]; }
  BitVec& row(int r) { return data_[r]; }

  Gf2Matrix transposed() const;
  BitVec mul(const BitVec& v) const;  // matrix * column vector

  bool operator==(const Gf2Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::string to_text() const;                     // "m <rows> <cols>" + bit rows
  static Gf2Matrix from_text(const std::string&);  // inverse of to_text

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BitVec> data_;
};

// Row rank by forward elimination on a private copy.
int gf2_rank(const Gf2Matrix& m);

// A_{ij} + A_{ji} = 1 for all i != j; diagonal unconstrained.
bool is_tournament(const Gf2Matrix& a);

// Lower bound on the GF(2) rank of any n x n tournament matrix.
int tournament_rank_floor(int n);

// Span basis of a vector list with the coordinate map into the basis.
//
// Basis vectors are chosen greedily in input order, pivoting at the lowest set
// bit of the reduced vector, so the result is deterministic. coords(v) writes v
// in that basis; gram carries the induced symmetric form so that dot products
// between span members survive the coordinate change.
struct BasisMap {
  int dim = 0;
  std::vector<BitVec> basis;        // dim vectors of the ambient length
  std::vector<int> pivots;          // pivot bit per basis vector
  Gf2Matrix gram;                   // dim x dim, gram[i][j] = basis[i] . basis[j]
  BitVec coords(const BitVec& v) const;  // throws if v outside the span
  bool in_span(const BitVec& v) const;
};

BasisMap basis_map(const std::vector<BitVec>& vectors);

}  // namespace z2lab
