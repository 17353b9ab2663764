#include "qhopf/linalg.hpp"

#include <sstream>

namespace qhopf {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<CycScalar>& d) {
  int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = d[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

int Matrix::nonzero_count() const {
  int n = 0;
  for (const auto& x : a_)
    if (!x.is_zero()) ++n;
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::pow(int e) const {
  if (r_ != c_) throw InputError("Matrix::pow: not square");
  Matrix r = identity(r_);
  Matrix b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

CycScalar Matrix::trace() const {
  CycScalar s;
  for (int i = 0; i < std::min(r_, c_); ++i) s += at(i, i);
  return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw InputError("Matrix product: shape mismatch");
  Matrix r(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const CycScalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        const CycScalar& y = b.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  return r;
}

Matrix operator*(const CycScalar& s, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.a_)
    if (!x.is_zero()) x = s * x;
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw InputError("Matrix sum: shape mismatch");
  Matrix r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw InputError("Matrix difference: shape mismatch");
  Matrix r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) return false;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << describe(at(i, j));
  }
  os << "]";
  return os.str();
}

namespace {

void axpy(SparseRow& row, const CycScalar& c, const SparseRow& other) {
  for (const auto& [col, v] : other) {
    auto it = row.find(col);
    if (it == row.end()) {
      row.emplace(col, -(c * v));
    } else {
      it->second -= c * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

}  // namespace

bool RowReducer::add(SparseRow row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second.is_zero())
      it = row.erase(it);
    else
      ++it;
  }
  for (const auto& [pc, prow] : pivots_) {
    auto it = row.find(pc);
    if (it == row.end()) continue;
    CycScalar c = it->second;
    axpy(row, c, prow);
  }
  if (row.empty()) return false;
  int pc = row.begin()->first;
  CycScalar inv = row.begin()->second.inv();
  for (auto& [col, v] : row) v = v * inv;
  for (auto& [opc, orow] : pivots_) {
    auto it = orow.find(pc);
    if (it == orow.end()) continue;
    CycScalar c = it->second;
    axpy(orow, c, row);
  }
  pivots_.emplace(pc, std::move(row));
  return true;
}

std::vector<std::vector<CycScalar>> RowReducer::kernel() const {
  std::vector<std::vector<CycScalar>> out;
  for (int f = 0; f < n_; ++f) {
    if (pivots_.count(f)) continue;
    std::vector<CycScalar> v(n_);
    v[f] = 1;
    for (const auto& [pc, prow] : pivots_) {
      auto it = prow.find(f);
      if (it != prow.end()) v[pc] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {
RowReducer reduce_matrix(const Matrix& m) {
  RowReducer rr(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) row.emplace(j, m.at(i, j));
    rr.add(std::move(row));
  }
  return rr;
}
}  // namespace

std::vector<std::vector<CycScalar>> kernel(const Matrix& m) { return reduce_matrix(m).kernel(); }

int rank(const Matrix& m) { return reduce_matrix(m).rank(); }

}  // namespace qhopf
