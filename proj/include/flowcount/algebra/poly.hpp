#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "flowcount/algebra/number.hpp"

namespace flowcount {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// A polynomial carries its ordered variable list. A constant built without
/// variables is compatible with every variable list and adopts the other
/// operand's variables in mixed arithmetic; two non-empty lists must agree.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;

  /// Higher total degree first, then lexicographically larger exponents.
  struct GradedDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, BigRational, GradedDescending>;

  Poly() = default;
  Poly(long constant);
  Poly(const BigInt& constant);
  Poly(const BigRational& constant);

  static Poly zero(std::vector<std::string> variables);
  static Poly constant(std::vector<std::string> variables, const BigRational& value);
  static Poly variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  BigRational coefficient(const Exponents& exponents) const;
  BigRational constant_term() const;
  Poly homogeneous_part(unsigned degree) const;
  BigRational evaluate(std::span<const BigRational> point) const;

  /// Rewrites a constant-without-variables into the given variable list.
  Poly with_variables(std::vector<std::string> variables) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const BigRational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  /// Canonical descending-degree text, e.g. "1/2*a1^2 + a1*a2 - 3".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const BigRational& c);
  void adopt(const std::vector<std::string>& variables);

  std::vector<std::string> variables_;
  TermMap terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }
void divide_by(Poly& p, unsigned long k);

/// Variable names a1..ar.
std::vector<std::string> indexed_names(const std::string& stem, std::size_t count);

}  // namespace flowcount
