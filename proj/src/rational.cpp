#include "modcurve/rational.hpp"

#include <string>

namespace modcurve {

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero();
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw DivisionByZero();
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty rational literal");
  const auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    std::string digits = part;
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    if (digits.empty() || digits == "-") throw ParseError("malformed integer '" + part + "'");
    for (std::size_t i = (digits[0] == '-') ? 1 : 0; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') throw ParseError("malformed integer '" + part + "'");
    }
    return Integer(digits, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const Integer n = parse_int(s.substr(0, slash));
  const Integer d = parse_int(s.substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(n, d);
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inv(), -exponent);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

std::pair<Integer, Integer> squarefree_decomposition(const Integer& n) {
  if (n == 0) throw Error("squarefree_decomposition of zero");
  Integer m = abs(n);
  Integer squarefree = 1;
  Integer root = 1;
  // Trial division up to the cube root; the cofactor then has at most two prime factors.
  Integer limit;
  mpz_root(limit.get_mpz_t(), m.get_mpz_t(), 3);
  limit += 1;
  for (Integer p = 2; p <= limit && p * p <= m; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) root *= p;
    if (e % 2 == 1) squarefree *= p;
    if (e > 0) mpz_root(limit.get_mpz_t(), m.get_mpz_t(), 3), limit += 1;
  }
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
      root *= s;
    } else {
      squarefree *= m;
    }
  }
  if (n < 0) squarefree = -squarefree;
  return {squarefree, root};
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value.sign() < 0) return false;
  const Integer n = value.num();
  const Integer d = value.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

}  // namespace modcurve
