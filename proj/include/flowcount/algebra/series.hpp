#pragma once

#include <cstddef>
#include <vector>

#include "flowcount/algebra/number.hpp"
#include "flowcount/algebra/poly.hpp"

namespace flowcount {

/// Coefficients c_0..c_order of (1+v)^e, c_k = e(e-1)...(e-k+1)/k!.
/// Works for any ring element e that supports subtraction of integers and
/// exact division by k (BigInt, BigRational, Poly).
template <typename R>
std::vector<R> binomial_series(const R& exponent, std::size_t order) {
  std::vector<R> out;
  out.reserve(order + 1);
  out.push_back(R(1));
  for (std::size_t k = 1; k <= order; ++k) {
    R next = out.back() * (exponent - R(static_cast<long>(k - 1)));
    divide_by(next, static_cast<unsigned long>(k));
    out.push_back(std::move(next));
  }
  return out;
}

/// Coefficients of (1-u)^{-mult}: C(mult-1+k, k).
std::vector<BigInt> geometric_pole_series(unsigned mult, std::size_t order);

/// Coefficients of exp(scale * v): scale^k / k!.
template <typename R>
std::vector<R> exponential_series(const R& scale, std::size_t order) {
  std::vector<R> out;
  out.reserve(order + 1);
  out.push_back(R(1));
  for (std::size_t k = 1; k <= order; ++k) {
    R next = out.back() * scale;
    divide_by(next, static_cast<unsigned long>(k));
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace flowcount
