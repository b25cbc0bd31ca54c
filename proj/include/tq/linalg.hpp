#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tq/rational.hpp"

namespace tq {

using RationalVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, each of length `rows`.
  static RationalMatrix from_columns(std::size_t rows, std::span<const RationalVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  RationalVector row(std::size_t r) const;

  bool is_zero() const;
  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
RationalVector operator*(const RationalMatrix& m, const RationalVector& v);
RationalMatrix transpose(const RationalMatrix& m);

struct Echelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row, ascending
};

/// Reduced row echelon form; pivots are chosen leftmost-first.
Echelon rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Null-space basis from the RREF: one vector per free column, with that
/// free variable set to 1 and the others to 0.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Determinant of a square matrix (1 for the 0x0 matrix).
Rational determinant(RationalMatrix m);

/// Inverse; throws ContractViolation if singular or non-square.
RationalMatrix inverse(const RationalMatrix& m);

/// Solves m x = b for one solution; returns false if inconsistent.
bool solve(const RationalMatrix& m, const RationalVector& b, RationalVector& x);

bool is_zero(const RationalVector& v);

}  // namespace tq
