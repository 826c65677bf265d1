#include "yb/matrix.hpp"

#include <cmath>

namespace yb {

namespace {

void require_same(const LinearOperator& a, const LinearOperator& b) {
  if (a.field() != b.field())
    throw FieldMismatch(a.field().description() + " vs " + b.field().description());
  if (a.dim() != b.dim())
    throw DimMismatch(std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

int exact_sqrt(int dim) {
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim))));
  while (n * n > dim) --n;
  while ((n + 1) * (n + 1) <= dim) ++n;
  if (n * n != dim) throw BadDimension(std::to_string(dim) + " is not a perfect square");
  return n;
}

} // namespace

LinearOperator::LinearOperator(ScalarField field, int dim, int base_dim)
    : field_(std::move(field)), dim_(dim), base_dim_(base_dim > 0 ? base_dim : dim) {
  if (dim <= 0) throw BadDimension("dim must be positive");
  a_.assign(static_cast<std::size_t>(dim) * dim, Scalar::zero(field_));
}

LinearOperator LinearOperator::identity(const ScalarField& f, int dim, int base_dim) {
  LinearOperator m(f, dim, base_dim);
  Scalar one = Scalar::one(f);
  for (int i = 0; i < dim; ++i) m.set(i, i, one);
  return m;
}

LinearOperator LinearOperator::twist(const ScalarField& f, int n) {
  if (n < 1) throw BadDimension("twist needs n >= 1");
  LinearOperator m(f, n * n, n);
  Scalar one = Scalar::one(f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(j * n + i, i * n + j, one);
  return m;
}

LinearOperator& LinearOperator::operator+=(const LinearOperator& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

LinearOperator& LinearOperator::operator-=(const LinearOperator& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
  require_same(a, b);
  const int n = a.dim_;
  LinearOperator c(a.field_, n, a.base_dim_);
  // zero-skip: operator matrices here are typically very sparse
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.mut(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

LinearOperator operator*(const Scalar& c, LinearOperator m) {
  if (c.field() != m.field())
    throw FieldMismatch(c.field().description() + " vs " + m.field().description());
  for (auto& x : m.a_) x *= c;
  return m;
}

bool LinearOperator::operator==(const LinearOperator& o) const {
  if (field_ != o.field_ || dim_ != o.dim_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool LinearOperator::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool LinearOperator::is_identity() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const Scalar& x = at(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

std::vector<Scalar> LinearOperator::apply(std::span<const Scalar> v) const {
  if (static_cast<int>(v.size()) != dim_) throw DimMismatch("vector length vs matrix dim");
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (int c = 0; c < dim_; ++c) {
    if (v[c].is_zero()) continue;
    for (int r = 0; r < dim_; ++r) {
      const Scalar& m = at(r, c);
      if (m.is_zero()) continue;
      out[r] += m * v[c];
    }
  }
  return out;
}

LinearOperator kron(const LinearOperator& a, const LinearOperator& b) {
  if (a.field() != b.field())
    throw FieldMismatch(a.field().description() + " vs " + b.field().description());
  const int da = a.dim(), db = b.dim();
  int base = a.dim() * b.dim();
  // preserve factor bookkeeping when both sides are powers of a common base
  if (a.base_dim() == b.base_dim()) base = a.base_dim();
  LinearOperator c(a.field(), da * db, base);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < da; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < db; ++j)
        for (int l = 0; l < db; ++l) {
          const Scalar& bjl = b.at(j, l);
          if (bjl.is_zero()) continue;
          c.set(i * db + j, k * db + l, aik * bjl);
        }
    }
  return c;
}

LinearOperator lift(const LinearOperator& r, LiftPos pos) {
  const int n = r.base_dim() * r.base_dim() == r.dim() ? r.base_dim() : exact_sqrt(r.dim());
  const int d3 = n * n * n;
  LinearOperator out(r.field(), d3, n);
  // direct index maps; the kron/twist route is re-derived in tests
  for (int rr = 0; rr < r.dim(); ++rr)
    for (int cc = 0; cc < r.dim(); ++cc) {
      const Scalar& v = r.at(rr, cc);
      if (v.is_zero()) continue;
      const int r0 = rr / n, r1 = rr % n;
      const int c0 = cc / n, c1 = cc % n;
      for (int s = 0; s < n; ++s) {
        switch (pos) {
          case LiftPos::P12: // spectator is factor 3
            out.set(r0 * n * n + r1 * n + s, c0 * n * n + c1 * n + s, v);
            break;
          case LiftPos::P23: // spectator is factor 1
            out.set(s * n * n + r0 * n + r1, s * n * n + c0 * n + c1, v);
            break;
          case LiftPos::P13: // spectator is factor 2
            out.set(r0 * n * n + s * n + r1, c0 * n * n + s * n + c1, v);
            break;
        }
      }
    }
  return out;
}

LinearOperator compose_chain(std::span<const LinearOperator> ops) {
  if (ops.empty()) throw DimMismatch("compose_chain needs at least one operator");
  LinearOperator acc = ops[0];
  for (std::size_t i = 1; i < ops.size(); ++i) acc = acc * ops[i];
  return acc;
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
  return a * b - b * a;
}

std::vector<int> rref(std::vector<std::vector<Scalar>>& rows, const ScalarField& f) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int ncols = static_cast<int>(rows[0].size());
  const int nrows = static_cast<int>(rows.size());
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int piv = -1;
    for (int r = row; r < nrows; ++r)
      if (!rows[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[row], rows[piv]);
    Scalar inv = rows[row][col].inverse();
    for (int c = col; c < ncols; ++c) rows[row][c] *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (int c = col; c < ncols; ++c) rows[r][c] -= factor * rows[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  (void)f;
  return pivots;
}

std::vector<std::vector<Scalar>> kernel_basis(std::vector<std::vector<Scalar>> rows, int ncols,
                                              const ScalarField& f) {
  std::vector<int> pivots = rref(rows, f);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(ncols, Scalar::zero(f));
    v[free_col] = Scalar::one(f);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = -rows[pr][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

InvertResult invert(const LinearOperator& a) {
  const int n = a.dim();
  const ScalarField& f = a.field();
  // augmented [A | I] rows
  std::vector<std::vector<Scalar>> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i].reserve(2 * n);
    for (int j = 0; j < n; ++j) rows[i].push_back(a.at(i, j));
    for (int j = 0; j < n; ++j) rows[i].push_back(Scalar::from_int(i == j ? 1 : 0, f));
  }
  int row = 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (!rows[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) {
      // singular: produce a kernel certificate from A alone
      std::vector<std::vector<Scalar>> arows(n);
      for (int i = 0; i < n; ++i)
        arows[i].assign(rows[i].begin(), rows[i].begin() + n);
      // arows is partially reduced, which kernel_basis handles fine
      auto basis = kernel_basis(std::move(arows), n, f);
      InvertResult res;
      res.kernel = basis.empty() ? std::vector<Scalar>() : basis.front();
      return res;
    }
    std::swap(rows[row], rows[piv]);
    Scalar inv = rows[row][col].inverse();
    for (int c = 0; c < 2 * n; ++c) rows[row][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (int c = 0; c < 2 * n; ++c) rows[r][c] -= factor * rows[row][c];
    }
    ++row;
  }
  LinearOperator out(f, n, a.base_dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set(i, j, rows[i][n + j]);
  InvertResult res;
  res.inverse = std::move(out);
  return res;
}

} // namespace yb
