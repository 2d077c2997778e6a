#pragma once

// Certified comparisons between exact rationals and transcendental quantities
// (natural logs, square roots).  Every comparison is decided by interval
// arithmetic with directed rounding, refining precision until the interval
// separates the operands.  No result ever depends on a rounded value.

#include <gmpxx.h>

#include <string>

namespace liarwalk {

// Starting precision in bits; configurable via LIARWALK_PRECISION_BITS.
unsigned long default_precision_bits();

// Hard cap on refinement; exceeding it raises resource_limit_error.
inline constexpr unsigned long max_precision_bits = 1ul << 20;

// The dyadic rational num / 2^scale_exp, canonicalized.
mpq_class dyadic(const mpz_class& num, unsigned long scale_exp);

// Sign of num/2^scale_exp - c*ln(t); requires t >= 2 and c > 0.
int cmp_dyadic_vs_c_ln(const mpz_class& num, unsigned long scale_exp,
                       const mpq_class& c, unsigned long t);

// Sign of q - (ln n)^k; requires n >= 2, k >= 1.
int cmp_q_vs_ln_pow(const mpq_class& q, unsigned long n, unsigned k);

// floor(c * ln(ln n)); requires n >= 3 (so ln ln n is defined) and c >= 0.
long floor_c_lnln(const mpq_class& c, unsigned long n);

// ceil(q * sqrt(m)); requires q > 0, m >= 0.
mpz_class ceil_q_sqrt(const mpq_class& q, const mpz_class& m);

// ceil(q * sqrt(ln ln n)); requires q > 0 and n >= 16 (so ln ln n > 0).
mpz_class ceil_q_sqrt_lnln(const mpq_class& q, unsigned long n);

// ceil(q * ln m); requires q > 0, m >= 2.
mpz_class ceil_q_ln(const mpq_class& q, unsigned long m);

// Round-to-nearest doubles for report columns only (never used in a verdict).
double ln_double(unsigned long t);
double lnln_double(unsigned long n);
double to_double(const mpq_class& q);

// Exact rational from a double (doubles are dyadic rationals).
mpq_class rational_from_double(double x);

// Shortest decimal with 17 significant digits, enough to round-trip a double.
std::string format_sig17(double x);

}  // namespace liarwalk
