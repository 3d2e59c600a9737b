#include "flowcount/algebra/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "flowcount/error.hpp"

namespace flowcount {

namespace {

unsigned total_degree(const Poly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool Poly::GradedDescending::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(long constant) : Poly(BigRational(constant)) {}
Poly::Poly(const BigInt& constant) : Poly(BigRational(constant)) {}
Poly::Poly(const BigRational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Exponents{}, constant);
}

Poly Poly::zero(std::vector<std::string> variables) {
  Poly p;
  p.variables_ = std::move(variables);
  return p;
}

Poly Poly::constant(std::vector<std::string> variables, const BigRational& value) {
  Poly p = zero(std::move(variables));
  p.add_term(Exponents(p.variables_.size(), 0), value);
  return p;
}

Poly Poly::variable(std::vector<std::string> variables, std::size_t index) {
  if (index >= variables.size()) throw InputError("Poly::variable: index out of range");
  Poly p = zero(std::move(variables));
  Exponents e(p.variables_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

BigRational Poly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational Poly::constant_term() const { return coefficient(Exponents(variables_.size(), 0)); }

Poly Poly::homogeneous_part(unsigned degree) const {
  Poly out = zero(variables_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == degree) out.terms_.emplace(e, c);
  }
  return out;
}

BigRational Poly::evaluate(std::span<const BigRational> point) const {
  if (point.size() != variables_.size()) throw InputError("Poly::evaluate: dimension mismatch");
  BigRational sum = 0;
  for (const auto& [e, c] : terms_) {
    BigRational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Poly Poly::with_variables(std::vector<std::string> variables) const {
  Poly out = *this;
  out.adopt(variables);
  return out;
}

void Poly::adopt(const std::vector<std::string>& variables) {
  if (variables_ == variables) return;
  if (!variables_.empty()) {
    throw InputError("Poly: incompatible variable lists");
  }
  TermMap rewritten;
  for (auto& [e, c] : terms_) rewritten.emplace(Exponents(variables.size(), 0), c);
  terms_ = std::move(rewritten);
  variables_ = variables;
}

void Poly::add_term(const Exponents& e, const BigRational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.variables_.empty() || variables_ == other.variables_) {
    if (other.variables_.empty() && !variables_.empty()) {
      for (const auto& [e, c] : other.terms_) add_term(Exponents(variables_.size(), 0), c);
      return *this;
    }
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  adopt(other.variables_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const BigRational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.variables_.empty() && a.terms_.size() <= 1) {
    Poly out = b;
    out *= a.constant_term();
    return out;
  }
  if (b.variables_.empty() && b.terms_.size() <= 1) {
    Poly out = a;
    out *= b.constant_term();
    return out;
  }
  if (a.variables_ != b.variables_) throw InputError("Poly: incompatible variable lists");
  Poly out = Poly::zero(a.variables_);
  Poly::Exponents e(a.variables_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.variables_ == b.variables_) return a.terms_ == b.terms_;
  if (a.variables_.empty()) return b == a;
  if (b.variables_.empty()) return a.terms_ == b.with_variables(a.variables_).terms_;
  return false;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool constant = total_degree(e) == 0;
    BigRational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (constant || magnitude != 1) {
      out << flowcount::to_string(magnitude);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << variables_[i];
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

void divide_by(Poly& p, unsigned long k) { p *= BigRational(1, static_cast<long>(k)); }

std::vector<std::string> indexed_names(const std::string& stem, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

}  // namespace flowcount
