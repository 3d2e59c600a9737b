#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flowcount {

using BigInt = mpz_class;
using BigRational = mpq_class;

using IntVector = std::vector<BigInt>;
using RationalVector = std::vector<BigRational>;

/// Builds a rational in lowest terms.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const BigInt& value);
std::string to_string(const BigRational& value);

/// Accepts "p" or "p/q" (optional sign). Throws InputError on garbage.
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }

/// Exact division by a small positive integer. The integer overload
/// requires divisibility and checks it.
void divide_by(BigInt& x, unsigned long k);
void divide_by(BigRational& x, unsigned long k);

BigRational dot(std::span<const BigRational> a, std::span<const BigRational> b);
BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b);

RationalVector to_rational(std::span<const BigInt> v);

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction (positive multiple). The zero vector maps to zeros.
IntVector primitive(std::span<const BigRational> v);
IntVector primitive(std::span<const BigInt> v);

/// Flips the sign so that the first nonzero entry is positive.
void canonicalize_sign(IntVector& v);

}  // namespace flowcount
