#include "tq/analytic.hpp"

#include <cmath>
#include <numbers>

#include "tq/errors.hpp"

namespace tq {

Rational l_ratio_squared_exact(const GaloisChar& chi, const FieldData& f) {
  return frac(4, artin_conductor(chi, f));
}

namespace {

void require_even_fundamental(long disc) {
  if (disc <= 1) throw DomainError("numeric check needs an even character (positive discriminant)");
}

}  // namespace

double l_value_at_one(long disc) {
  require_even_fundamental(disc);
  double sum = 0;
  for (long a = 1; a < disc; ++a) {
    int c = kronecker(disc, a);
    if (c) sum += c * std::log(2 * std::sin(std::numbers::pi * static_cast<double>(a) / disc));
  }
  return -sum / std::sqrt(static_cast<double>(disc));
}

double l_derivative_at_zero(long disc) {
  require_even_fundamental(disc);
  double sum = 0;
  for (long a = 1; a < disc; ++a) {
    int c = kronecker(disc, a);
    if (c) sum += c * std::lgamma(static_cast<double>(a) / disc);
  }
  return sum;
}

AnalyticCheck l_ratio_numeric_check(const GaloisChar& chi, const FieldData& f, double tol) {
  if (chi.is_trivial()) throw DomainError("numeric check needs a nontrivial character");
  long disc = f.subfield_disc(chi.label());
  AnalyticCheck out;
  out.chi = chi.label();
  out.conductor = artin_conductor(chi, f);
  out.rhs_exact_squared = l_ratio_squared_exact(chi, f);
  out.lhs_numeric = l_value_at_one(disc) / l_derivative_at_zero(disc);
  out.abs_error_squared = std::abs(out.lhs_numeric * out.lhs_numeric - out.rhs_exact_squared.get_d());
  out.passed = out.abs_error_squared < tol;
  return out;
}

}  // namespace tq
