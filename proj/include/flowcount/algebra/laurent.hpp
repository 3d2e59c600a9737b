#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>

#include "flowcount/algebra/number.hpp"
#include "flowcount/algebra/poly.hpp"

namespace flowcount {

/// Upper bound on the number of z-variables (rank of the root system).
inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector of a Laurent monomial; negative entries allowed.
struct Monomial {
  std::array<std::int16_t, kMaxVariables> exponents{};

  std::int16_t operator[](std::size_t i) const { return exponents[i]; }
  std::int16_t& operator[](std::size_t i) { return exponents[i]; }
  bool operator==(const Monomial&) const = default;

  Monomial& operator+=(const Monomial& other) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) exponents[i] += other.exponents[i];
    return *this;
  }
  friend Monomial operator+(Monomial a, const Monomial& b) { return a += b; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : m.exponents) {
      h ^= static_cast<std::uint16_t>(e);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Finite-support Laurent polynomial in the z-variables with coefficients in
/// a ring R (BigInt, BigRational or Poly). Zero coefficients are never kept
/// after prune().
template <typename R>
class LaurentTable {
 public:
  using Map = std::unordered_map<Monomial, R, MonomialHash>;

  LaurentTable() = default;

  static LaurentTable constant(const R& value) {
    LaurentTable t;
    t.add(Monomial{}, value);
    return t;
  }

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const Monomial& m, const R& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Accumulates a * b at m without pruning; call prune() afterwards.
  void accumulate(const Monomial& m, const R& a, const R& b) {
    auto [it, inserted] = terms_.try_emplace(m);
    it->second += a * b;
  }

  void prune() {
    std::erase_if(terms_, [](const auto& kv) { return is_zero(kv.second); });
  }

  void shift(const Monomial& by) {
    Map shifted;
    shifted.reserve(terms_.size());
    for (auto& [m, c] : terms_) shifted.emplace(m + by, std::move(c));
    terms_ = std::move(shifted);
  }

  void scale(const R& s) {
    if (is_zero(s)) {
      terms_.clear();
      return;
    }
    for (auto& [m, c] : terms_) c *= s;
  }

  /// this += a * b.
  void add_product(const LaurentTable& a, const LaurentTable& b) {
    terms_.reserve(terms_.size() + a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) accumulate(ma + mb, ca, cb);
    }
    prune();
  }

  /// Minimum exponent of variable v over the support (0 for empty tables).
  int min_exponent(std::size_t v) const {
    bool first = true;
    int lo = 0;
    for (const auto& [m, c] : terms_) {
      if (first || m[v] < lo) lo = m[v];
      first = false;
    }
    return lo;
  }

 private:
  Map terms_;
};

}  // namespace flowcount
