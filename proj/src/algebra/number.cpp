#include "flowcount/algebra/number.hpp"

#include <numeric>

#include "flowcount/algebra/series.hpp"
#include "flowcount/error.hpp"

namespace flowcount {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw InputError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw InputError("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InputError("not an integer: '" + std::string(text) + "'");
  }
  if (s[0] == '+') s.erase(s.begin());
  return BigInt(s, 10);
}

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

void divide_by(BigInt& x, unsigned long k) {
  if (!mpz_divisible_ui_p(x.get_mpz_t(), k)) throw InternalError("inexact integer division");
  mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), k);
}

void divide_by(BigRational& x, unsigned long k) { x /= BigRational(static_cast<long>(k)); }

BigRational dot(std::span<const BigRational> a, std::span<const BigRational> b) {
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector to_rational(std::span<const BigInt> v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVector primitive(std::span<const BigRational> v) {
  BigInt lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IntVector scaled;
  scaled.reserve(v.size());
  for (const auto& x : v) scaled.push_back(BigInt(x.get_num() * (lcm / x.get_den())));
  return primitive(std::span<const BigInt>(scaled));
}

IntVector primitive(std::span<const BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IntVector out(v.begin(), v.end());
  if (sgn(g) == 0) return out;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

void canonicalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0) {
      for (auto& y : v) y = -y;
    }
    return;
  }
}

std::vector<BigInt> geometric_pole_series(unsigned mult, std::size_t order) {
  if (mult == 0) throw InputError("geometric_pole_series: multiplicity must be positive");
  std::vector<BigInt> out;
  out.reserve(order + 1);
  out.emplace_back(1);
  for (std::size_t k = 1; k <= order; ++k) {
    BigInt next = out.back() * static_cast<unsigned long>(mult - 1 + k);
    divide_by(next, static_cast<unsigned long>(k));
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace flowcount
