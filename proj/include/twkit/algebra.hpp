#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twkit/skeleton.hpp"
#include "twkit/spec_io.hpp"

namespace twkit {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int r, int c) { return data_[index(r, c)]; }
  const BigInt& operator()(int r, int c) const { return data_[index(r, c)]; }

  IntMatrix operator*(const IntMatrix& other) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[dst] += k * row[src]
  void add_row(int dst, int src, const BigInt& k);
  void add_col(int dst, int src, const BigInt& k);
  void negate_row(int r);

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c); }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

/// D = U * A * V with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  /// Nonzero diagonal entries in order.
  std::vector<BigInt> nonzero_diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);
/// Nonzero diagonal of the Smith form, without the transforms.
std::vector<BigInt> invariant_factors(const IntMatrix& a);
int rank(const IntMatrix& a);
/// True iff the matrix has a two-sided integer inverse (|det| = 1).
bool is_unimodular(const IntMatrix& a);

/// Vertices x edges; column e is head - tail of edge class e.
IntMatrix boundary_matrix_1(const SkeletonSummary& sk);
/// Edges x triangles, triangle classes oriented by their least facet.
IntMatrix boundary_matrix_2(const SkeletonSummary& sk);

struct Homology {
  int free_rank = 0;
  std::vector<BigInt> torsion;  ///< invariant factors > 1
  /// Product of the torsion factors (1 when torsion-free).
  BigInt torsion_order() const;
  /// e.g. "Z + Z/2 + Z/4", "0".
  std::string str() const;
  friend bool operator==(const Homology&, const Homology&) = default;
};

/// H_1 of the cell complex; throws InvalidComplex on invalid input.
Homology first_homology(const Triangulation& tri);

/// |sum_i b_i prod_{j != i} a_j| for a sphere base; nullopt when it is 0 (infinite H_1).
std::optional<BigInt> sfs_h1_order(const SfsSpec& spec);

}  // namespace twkit
