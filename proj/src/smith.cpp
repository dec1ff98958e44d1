#include <utility>

#include "twkit/algebra.hpp"

namespace twkit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(static_cast<int>(rows.size()), rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (long x : row) (*this)(r, c++) = x;
    ++r;
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += x * other(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(int dst, int src, const BigInt& k) {
  for (int c = 0; c < cols_; ++c)
    if ((*this)(src, c) != 0) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(int dst, int src, const BigInt& k) {
  for (int r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

namespace {

// Row operations on a are mirrored into u, column operations into v.
struct Reducer {
  IntMatrix a;
  IntMatrix* u;
  IntMatrix* v;

  void swap_rows(int x, int y) {
    a.swap_rows(x, y);
    if (u) u->swap_rows(x, y);
  }
  void swap_cols(int x, int y) {
    a.swap_cols(x, y);
    if (v) v->swap_cols(x, y);
  }
  void add_row(int dst, int src, const BigInt& k) {
    a.add_row(dst, src, k);
    if (u) u->add_row(dst, src, k);
  }
  void add_col(int dst, int src, const BigInt& k) {
    a.add_col(dst, src, k);
    if (v) v->add_col(dst, src, k);
  }
  void negate_row(int r) {
    a.negate_row(r);
    if (u) u->negate_row(r);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool place_pivot(int t) {
    int br = -1;
    int bc = -1;
    BigInt best;
    for (int r = t; r < a.rows(); ++r)
      for (int c = t; c < a.cols(); ++c) {
        const BigInt& x = a(r, c);
        if (x == 0) continue;
        const BigInt ax = abs(x);
        if (br < 0 || ax < best) {
          best = ax;
          br = r;
          bc = c;
          if (best == 1) goto found;
        }
      }
    if (br < 0) return false;
  found:
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void run() {
    const int limit = std::min(a.rows(), a.cols());
    for (int t = 0; t < limit; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        bool dirty = false;
        for (int r = t + 1; r < a.rows(); ++r) {
          if (a(r, t) == 0) continue;
          const BigInt q = a(r, t) / a(t, t);
          add_row(r, t, -q);
          if (a(r, t) != 0) dirty = true;
        }
        for (int c = t + 1; c < a.cols(); ++c) {
          if (a(t, c) == 0) continue;
          const BigInt q = a(t, c) / a(t, t);
          add_col(c, t, -q);
          if (a(t, c) != 0) dirty = true;
        }
        if (dirty) {
          place_pivot(t);
          continue;
        }
        // Pivot must divide the whole trailing block.
        int bad_row = -1;
        for (int r = t + 1; r < a.rows() && bad_row < 0; ++r)
          for (int c = t + 1; c < a.cols(); ++c)
            if (a(r, c) % a(t, t) != 0) {
              bad_row = r;
              break;
            }
        if (bad_row < 0) break;
        add_row(t, bad_row, 1);
      }
      if (a(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

std::vector<BigInt> SmithForm::nonzero_diagonal() const {
  std::vector<BigInt> out;
  for (int i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f;
  f.u = IntMatrix::identity(a.rows());
  f.v = IntMatrix::identity(a.cols());
  Reducer red{a, &f.u, &f.v};
  red.run();
  f.d = std::move(red.a);
  return f;
}

std::vector<BigInt> invariant_factors(const IntMatrix& a) {
  Reducer red{a, nullptr, nullptr};
  red.run();
  std::vector<BigInt> out;
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (red.a(i, i) != 0) out.push_back(red.a(i, i));
  return out;
}

int rank(const IntMatrix& a) { return static_cast<int>(invariant_factors(a).size()); }

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  const auto f = invariant_factors(a);
  if (static_cast<int>(f.size()) != a.rows()) return false;
  for (const auto& x : f)
    if (x != 1) return false;
  return true;
}

}  // namespace twkit
