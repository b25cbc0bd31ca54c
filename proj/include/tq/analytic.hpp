#pragma once

#include <string>

#include "tq/biquadratic.hpp"

namespace tq {

/// (L*(1, chi) / L*(0, chi))^2 = 4 / f(chi); 4 for the trivial character.
Rational l_ratio_squared_exact(const GaloisChar& chi, const FieldData& f);

/// L(1, chi_D) = -f^{-1/2} sum_{a<f} chi(a) log(2 sin(pi a / f)) for the even
/// primitive character chi_D(a) = (D / a) of conductor f = |D|.
double l_value_at_one(long disc);

/// L'(0, chi_D) = sum_{a<f} chi(a) log Gamma(a / f) for even primitive chi_D.
double l_derivative_at_zero(long disc);

struct AnalyticCheck {
  CharLabel chi = CharLabel::One;
  long conductor = 1;
  double lhs_numeric = 0;  // L(1, chi) / L'(0, chi)
  Rational rhs_exact_squared;
  double abs_error_squared = 0;
  bool passed = false;
};

/// Compares the numeric ratio against l_ratio_squared_exact. Throws DomainError
/// for the trivial or an odd character.
AnalyticCheck l_ratio_numeric_check(const GaloisChar& chi, const FieldData& f, double tol = 1e-8);

}  // namespace tq
