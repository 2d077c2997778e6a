#pragma once

// Exact combinatorial quantities: binomials with the zero convention, partial
// binomial sums, the sphere bound, the two-stage n1/n2 split, hypergeometric
// pmf and median, and the derived threshold and ratio statistics.  Everything
// that feeds an assertion is an exact integer or rational.

#include <gmpxx.h>

namespace liarwalk {

// binom(n, k); zero unless 0 <= k <= n.
mpz_class binom(long n, long k);

// Sum of binom(n, k) for 0 <= k <= F (empty for F < 0); requires n >= 0.
mpz_class binom_le(long n, long F);

// Incremental walker for one Pascal row: value() == binom(s, k()).
class binom_row {
  public:
    explicit binom_row(unsigned long s) : s_(s), k_(0), value_(1) {}
    const mpz_class& value() const { return value_; }
    unsigned long k() const { return k_; }
    bool advance();  // move to k+1; false once k == s

  private:
    unsigned long s_, k_;
    mpz_class value_;
};

// 2^n / binom_le(n, floor(f*n)); requires 0 < f < 1/2.
mpq_class sphere_bound(unsigned long n, const mpq_class& f);

struct stage_split_result {
    unsigned long n = 0;
    mpq_class f;
    unsigned long n1 = 0, n2 = 0;
    long F = 0, F1 = 0, F2 = 0;
};

// n2 = floor( 4/(1-2f)^2 * ln ln n ), n1 = n - n2, F = floor(f n),
// F1 = floor(f n1), F2 = F - F1.  Errors if n <= 2 or n1 < 1.
stage_split_result stage_split(unsigned long n, const mpq_class& f);

// ceil( sphere_bound * 2 * c_prime * sqrt(n2) )
mpz_class m_threshold_machine(unsigned long n, const mpq_class& f, const mpq_class& c_prime);

// ceil( sphere_bound * 4/(1-2f) * c_prime * sqrt(ln ln n) )
mpz_class m_threshold_game(unsigned long n, const mpq_class& f, const mpq_class& c_prime);

// ceil( sphere_bound * n * ln 2 )
mpz_class m_delsarte_piret(unsigned long n, const mpq_class& f);

// binom(class2, k) * binom(population - class2, draws - k) / binom(population, draws)
mpq_class hypergeom_pmf(unsigned long population, unsigned long class2,
                        unsigned long draws, long k);

// Least m with CDF(m) >= 1/2 (decided by exact integer comparison).
long hypergeom_median(unsigned long population, unsigned long class2, unsigned long draws);

// [ sum_{k=F1}^{F} sum_{s=F1}^{k} binom(n1,s) binom(n2,k-s) ] / binom_le(n, F)
mpq_class split_sum_ratio(unsigned long n, const mpq_class& f);

// sum_{i=F-n3}^{F} binom(n,i) / binom_le(n,F); requires 0 <= n3 <= F.
mpq_class cutoff_tail(unsigned long n, const mpq_class& f, unsigned long n3);

// 1 - (f/(1-f))^n3 * (1-f)/(1-2f), the closed-form floor for cutoff_tail.
mpq_class cutoff_tail_bound(const mpq_class& f, unsigned long n3);

// (2^n / binom_le(n,F)) * binom(n1,F1) / 2^{n1}
mpq_class relative_cdf_stat(unsigned long n, const mpq_class& f);

// Certified check: relative_cdf_stat(n,f) >= (ln n)^(2*slack), slack in (0,1).
bool relative_cdf_check(unsigned long n, const mpq_class& f, const mpq_class& slack);

}  // namespace liarwalk
