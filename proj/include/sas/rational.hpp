#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sas {

// All coefficient arithmetic is over Q, backed by GMP. mpq_class keeps values
// canonical (lowest terms, positive denominator) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "7", "-3/11" and terminating decimals such as "2.5" (read exactly).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer binomial(long n, long k);

// binom(k + 2, 2) clamped to zero for k < 0: the dimension of degree-k forms.
long forms_dim(long k);

}  // namespace sas
