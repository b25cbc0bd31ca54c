#include "tq/rational.hpp"

#include <string>

#include "tq/errors.hpp"

namespace tq {

Rational frac(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("malformed rational literal: " + s);
  if (q.get_den() == 0) throw InputError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

namespace {
long v2_int(const Integer& n) {
  return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}
}  // namespace

long v2(const Rational& q) {
  if (q == 0) throw DomainError("2-adic valuation of zero");
  return v2_int(q.get_num()) - v2_int(q.get_den());
}

Rational strip_two(const Rational& q) {
  long e = v2(q);
  return q * rational_pow(Rational(2), -e);
}

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return 1;
  if (base == 0) {
    if (e < 0) throw DomainError("negative power of zero");
    return 0;
  }
  Integer num, den;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
  Rational r = e > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

}  // namespace tq
