#pragma once

// Arbitrary-precision integers and rationals plus the elementary number
// theory the rest of the library leans on (factoring small integers,
// squarefree parts, exact roots).

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadtower/sqclass.hpp"

namespace quadtower {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws std::invalid_argument on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

/// Prime factorization of |n| by trial division; n must be nonzero.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);
std::vector<Integer> positive_divisors(const Integer& n);
bool is_prime(const Integer& n);

/// Signed squarefree kernel: n = squarefree_part(n) * m^2.
Integer squarefree_part(const Integer& n);
/// Squarefree integer in the same class of Q*/Q*^2 as r.
Integer squarefree_part(const Rational& r);

std::optional<Integer> exact_sqrt(const Integer& n);
std::optional<Rational> exact_sqrt(const Rational& r);
std::optional<Rational> exact_fourth_root(const Rational& r);

/// p-adic valuation of a nonzero rational.
int valuation(const Rational& r, const Integer& p);

/// Legendre symbol (a|p) for an odd prime p; 0 when p divides a.
int legendre(const Integer& a, const Integer& p);

/// Label of the sign generator of Q*/Q*^2.
inline constexpr std::string_view kSignLabel = "p:-1";
std::string prime_label(const Integer& p);

/// Class of r in Q*/Q*^2 over labels "p:-1" and "p:<prime>".
SquareClassVector rational_square_class(const Rational& r);

bool is_square(const Rational& r);
std::optional<Rational> sqrt_exact(const Rational& r);

/// a = x^2 + y^2 for rationals x, y.
bool is_sum_of_two_squares(const Rational& a);

}  // namespace quadtower
