#include "z2lab/gf2.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace z2lab {

BitVec BitVec::from_string(const std::string& bits) {
  BitVec v(static_cast<int>(bits.size()));
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(static_cast<int>(i), true);
    else if (bits[i] != '0')
      throw std::invalid_argument("BitVec: bad character in bit string");
  }
  return v;
}

void BitVec::xor_with(const BitVec& o) {
  if (len_ != o.len_) throw std::invalid_argument("BitVec: length mismatch in xor");
  for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
}

bool BitVec::operator<(const BitVec& o) const {
  if (len_ != o.len_) return len_ < o.len_;
  return words_ < o.words_;
}

bool BitVec::is_zero() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

int BitVec::weight() const {
  int n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

int BitVec::lowest_set_bit() const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
  return -1;
}

std::string BitVec::to_string() const {
  std::string s(len_, '0');
  for (int i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

int gf2_dot(const BitVec& a, const BitVec& b) {
  if (a.length() != b.length()) throw std::invalid_argument("gf2_dot: length mismatch");
  uint64_t acc = 0;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (size_t i = 0; i < wa.size(); ++i) acc ^= wa[i] & wb[i];
  return std::popcount(acc) & 1;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitVec Gf2Matrix::mul(const BitVec& v) const {
  if (v.length() != cols_) throw std::invalid_argument("Gf2Matrix::mul: dimension mismatch");
  BitVec out(rows_);
  for (int r = 0; r < rows_; ++r)
    if (gf2_dot(data_[r], v)) out.set(r, true);
  return out;
}

std::string Gf2Matrix::to_text() const {
  std::ostringstream os;
  os << "m " << rows_ << " " << cols_ << "\n";
  for (int r = 0; r < rows_; ++r) os << data_[r].to_string() << "\n";
  return os.str();
}

Gf2Matrix Gf2Matrix::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  int rows, cols;
  if (!(is >> tag >> rows >> cols) || tag != "m")
    throw std::invalid_argument("Gf2Matrix: expected 'm <rows> <cols>' header");
  Gf2Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    std::string line;
    if (!(is >> line) || static_cast<int>(line.size()) != cols)
      throw std::invalid_argument("Gf2Matrix: bad row");
    m.data_[r] = BitVec::from_string(line);
  }
  return m;
}

int gf2_rank(const Gf2Matrix& m) {
  std::vector<BitVec> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r].get(c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && rows[r].get(c)) rows[r].xor_with(rows[rank]);
    ++rank;
  }
  return rank;
}

bool is_tournament(const Gf2Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("is_tournament: matrix not square");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (a.get(i, j) == a.get(j, i)) return false;
  return true;
}

int tournament_rank_floor(int n) {
  if (n < 1) throw std::invalid_argument("tournament_rank_floor: n must be >= 1");
  return n / 2;  // == ceil((n-1)/2)
}

BitVec BasisMap::coords(const BitVec& v) const {
  BitVec rem = v;
  BitVec c(dim);
  for (int i = 0; i < dim; ++i) {
    if (rem.get(pivots[i])) {
      c.set(i, true);
      rem.xor_with(basis[i]);
    }
  }
  if (!rem.is_zero()) throw std::invalid_argument("BasisMap::coords: vector outside span");
  return c;
}

bool BasisMap::in_span(const BitVec& v) const {
  BitVec rem = v;
  for (int i = 0; i < dim; ++i)
    if (rem.get(pivots[i])) rem.xor_with(basis[i]);
  return rem.is_zero();
}

BasisMap basis_map(const std::vector<BitVec>& vectors) {
  BasisMap bm;
  for (const BitVec& v : vectors) {
    if (!vectors.empty() && v.length() != vectors.front().length())
      throw std::invalid_argument("basis_map: mixed lengths");
    BitVec rem = v;
    for (int i = 0; i < bm.dim; ++i)
      if (rem.get(bm.pivots[i])) rem.xor_with(bm.basis[i]);
    int p = rem.lowest_set_bit();
    if (p >= 0) {
      bm.basis.push_back(rem);
      bm.pivots.push_back(p);
      ++bm.dim;
    }
  }
  bm.gram = Gf2Matrix(bm.dim, bm.dim);
  for (int i = 0; i < bm.dim; ++i)
    for (int j = 0; j < bm.dim; ++j)
      bm.gram.set(i, j, gf2_dot(bm.basis[i], bm.basis[j]));
  return bm;
}

}  // namespace z2lab
