#include "hiconn/qmatrix.hpp"

#include <algorithm>

namespace hiconn {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return QMatrix();
  const std::size_t cols = rows.front().size();
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionError("from_rows: ragged row lengths");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  QMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o(k, j) == 0) continue;
        p(i, j) += a * o(k, j);
      }
    }
  return p;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix difference shape mismatch");
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

bool QMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Rat& x) { return x == 0; });
}

bool QMatrix::is_integral() const {
  return std::all_of(e_.begin(), e_.end(), is_integer);
}

std::vector<Rat> QMatrix::row(std::size_t i) const {
  return std::vector<Rat>(e_.begin() + i * cols_,
                          e_.begin() + (i + 1) * cols_);
}

std::size_t QMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;

  // Clear denominators row by row, then run Bareiss: every intermediate
  // entry is a minor of the scaled matrix, so divisions are exact.
  std::vector<std::vector<Int>> a(rows_, std::vector<Int>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < cols_; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              (*this)(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& q = (*this)(i, j);
      a[i][j] = q.get_num() * (lcm / q.get_den());
    }
  }

  std::size_t rank = 0;
  Int prev_pivot = 1;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pr = rank;
    while (pr < rows_ && a[pr][col] == 0) ++pr;
    if (pr == rows_) continue;
    std::swap(a[rank], a[pr]);
    const Int pivot = a[rank][col];
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      // rows with a zero leading entry are still rescaled; the Bareiss
      // minor invariant is what keeps every division exact
      for (std::size_t j = col + 1; j < cols_; ++j)
        a[i][j] = (a[i][j] * pivot - a[i][col] * a[rank][j]) / prev_pivot;
      a[i][col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rat>> QMatrix::kernel_basis() const {
  // Gauss-Jordan to reduced row echelon form, then read the kernel off the
  // free columns.
  std::vector<std::vector<Rat>> a(rows_);
  for (std::size_t i = 0; i < rows_; ++i) a[i] = row(i);

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t pr = r;
    while (pr < rows_ && a[pr][col] == 0) ++pr;
    if (pr == rows_) continue;
    std::swap(a[r], a[pr]);
    const Rat inv = 1 / a[r][col];
    for (std::size_t j = col; j < cols_; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (std::size_t j = col; j < cols_; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
      v[pivot_col[k]] = -a[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_dim(const std::vector<std::vector<Rat>>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t len = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != len) throw DimensionError("span_dim: length mismatch");
  return QMatrix::from_rows(vectors).rank();
}

PLU plu_decompose(const QMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  PLU out;
  out.perm.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.perm[i] = i;
  out.lower = QMatrix::identity(m);
  out.upper = a;

  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t pr = r;
    while (pr < m && out.upper(pr, col) == 0) ++pr;
    if (pr == m) continue;
    if (pr != r) {
      std::swap(out.perm[r], out.perm[pr]);
      for (std::size_t j = 0; j < n; ++j) {
        Rat t = out.upper(r, j);
        out.upper(r, j) = out.upper(pr, j);
        out.upper(pr, j) = t;
      }
      // swap the already-built strict lower part as well
      for (std::size_t j = 0; j < r; ++j) {
        Rat t = out.lower(r, j);
        out.lower(r, j) = out.lower(pr, j);
        out.lower(pr, j) = t;
      }
    }
    const Rat pivot = out.upper(r, col);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (out.upper(i, col) == 0) continue;
      const Rat f = out.upper(i, col) / pivot;
      out.lower(i, r) = f;
      for (std::size_t j = col; j < n; ++j)
        out.upper(i, j) -= f * out.upper(r, j);
    }
    ++r;
  }
  return out;
}

SparseVec sparse_axpy(const SparseVec& v, const Rat& c, const SparseVec& w) {
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      Rat x = c * w[j].second;
      if (x != 0) out.emplace_back(w[j].first, std::move(x));
      ++j;
    } else {
      Rat x = v[i].second + c * w[j].second;
      if (x != 0) out.emplace_back(v[i].first, std::move(x));
      ++i, ++j;
    }
  }
  return out;
}

SparseVec RowEchelon::reduce(SparseVec v,
                             std::vector<std::pair<long, Rat>>* used) const {
  // Leading-column elimination: any element of the row span has a pivot
  // column as leading column, so if v's lead is pivot-free, v is outside
  // the span and is returned as is.
  while (!v.empty()) {
    auto it = pivot_.find(v.front().first);
    if (it == pivot_.end()) return v;
    const StoredRow& row = rows_[it->second];
    const Rat coeff = v.front().second / row.ent.front().second;
    if (used) used->emplace_back(it->second, coeff);

    SparseVec out;
    out.reserve(v.size() + row.ent.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < row.ent.size()) {
      if (j == row.ent.size() ||
          (i < v.size() && v[i].first < row.ent[j].first)) {
        out.push_back(std::move(v[i++]));
      } else if (i == v.size() || row.ent[j].first < v[i].first) {
        Rat x = -coeff * Rat(row.ent[j].second);
        if (x != 0) out.emplace_back(row.ent[j].first, std::move(x));
        ++j;
      } else {
        Rat x = v[i].second - coeff * Rat(row.ent[j].second);
        if (x != 0) out.emplace_back(v[i].first, std::move(x));
        ++i, ++j;
      }
    }
    v = std::move(out);
  }
  return v;
}

long RowEchelon::insert(const SparseVec& v) {
  SparseVec rem = reduce(v);
  if (rem.empty()) return -1;

  // Normalize to a primitive integer row with positive leading coefficient.
  Int lcm = 1;
  for (const auto& [c, q] : rem)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  StoredRow row;
  row.ent.reserve(rem.size());
  Int content = 0;
  for (const auto& [c, q] : rem) {
    Int x = q.get_num() * (lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    row.ent.emplace_back(c, std::move(x));
  }
  if (sgn(row.ent.front().second) < 0) content = -content;
  for (auto& [c, x] : row.ent) x /= content;

  const long ordinal = static_cast<long>(rows_.size());
  pivot_.emplace(row.ent.front().first, ordinal);
  rows_.push_back(std::move(row));
  return ordinal;
}

}  // namespace hiconn
