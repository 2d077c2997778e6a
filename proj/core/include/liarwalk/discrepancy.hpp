#pragma once

// Exact discrepancy between the liar machine f and its linearization g.
// Rather than running both machines at full precision, we track the scaled
// difference D_t = 2^t (f_t - g_t), which obeys the integer recurrence
//
//   D_{t+1}(j) = D_t(j-1) + D_t(j+1) + 2^t ( chi_t(j-1) - chi_t(j+1) )
//
// (f is carried alongside exactly, since chi_t depends on its parities).
// All verdicts compare exact dyadic rationals against certified rational
// enclosures of the transcendental bounds.

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "liarwalk/chip_config.hpp"
#include "liarwalk/limits.hpp"

namespace liarwalk {

struct interval_spec {
    long a = 0;
    long b = 0;
    long width() const { return b - a; }
};

struct discrepancy_report {
    unsigned long t = 0;
    long interval_width = 0;  // B; 0 for pointwise reports
    mpq_class max_abs;        // exact |f_t - g_t| (max over sites, or |sum over I|)
    long argmax_site = 0;     // pointwise: leftmost argmax site; interval: a
    double bound_value = 0;   // pointwise: 12 ln t; interval: interval_bound_double
    double ratio = 0;         // max_abs / bound_value (0 when the bound is 0)
};

class discrepancy_tracker {
  public:
    explicit discrepancy_tracker(const chip_configuration& f0,
                                 unsigned long max_window = default_max_window);

    unsigned long t() const { return t_; }
    const mpz_class& scale() const { return pow2t_; }  // 2^t
    void step();
    void run_to(unsigned long t_target);

    // (max_j |D_t(j)|, leftmost argmax site); (0, 0) for empty support
    std::pair<mpz_class, long> max_abs_numerator() const;
    mpz_class numerator_at(long site) const;             // D_t(site)
    mpz_class interval_numerator(long a, long b) const;  // sum over [a,b]
    mpz_class f_at(long site) const;
    int chi_at(long site);  // chi of the current configuration

  private:
    void compute_chi();

    // stride-2 cells over the occupied parity class: cell i is site lo_ + 2i
    long lo_ = 0;
    unsigned long t_ = 0;
    unsigned long max_window_;
    bool big_ = false;
    std::vector<unsigned long long> fs_, fs_next_;  // small-count fast path
    std::vector<mpz_class> fb_, fb_next_;
    std::vector<mpz_class> d_, d_next_;
    std::vector<signed char> chi_;
    bool chi_valid_ = false;
    mpz_class pow2t_ = 1;
    size_t cells() const { return d_.size(); }
};

discrepancy_report pointwise_discrepancy(const chip_configuration& f0, unsigned long t,
                                         unsigned long max_window = default_max_window);
discrepancy_report interval_discrepancy(const chip_configuration& f0, unsigned long t,
                                        interval_spec I,
                                        unsigned long max_window = default_max_window);

// Exact Theorem-1 verdict: |num|/2^t < 12 ln t, decided without rounding.
// Fast path: bitlength(|num|) <= t+3 implies the value is < 8 < 12 ln 2.
bool theorem1_holds(const mpz_class& max_abs_num, unsigned long t);

// Shared interval bound: min(sqrt(t), max(B', B' ln(t/B'^2))) with B' = max(B,1).
// The max(B, .) substitution keeps the statistic positive when t <= B^2 e.
double interval_bound_double(unsigned long t, long B);

// Sign of num/2^scale - q * interval_bound(t, B), certified.
int cmp_dyadic_vs_q_interval_bound(const mpz_class& num, unsigned long scale,
                                   const mpq_class& q, unsigned long t, long B);

// h_B(j) = 2^{-s} ( binom(s, (s+j-B)/2) - binom(s, (s+j)/2) ); B even, positive.
mpq_class hB_eval(unsigned long s, long B, long j);

struct bimodality_result {
    bool bimodal = false;
    std::vector<long> sign_changes;  // sites j where h_B(j-2) - h_B(j) flips sign
};

// Single exact pass over one (s, B) pair: peak of |h_B| and the bimodality scan.
struct hB_scan_result {
    mpz_class max_abs_num;  // max_j |h_B(j)| * 2^s
    long argmax_j = 0;
    bimodality_result bim;
};
hB_scan_result hB_scan(unsigned long s, long B);

bimodality_result bimodality_check(unsigned long s, long B);

// Lemma-6 constants, decided by exact integer predicates on max|h_B|*2^s:
//   c2: max <= 1/sqrt(s);  c4: max <= (3/2) B/s;
//   c1: max >= (1/4)/sqrt(s) when B >= sqrt(s) and s >= s_check.
bool hB_bounds_check(unsigned long s, long B, unsigned long s_check = 100);

struct interval_run {
    chip_configuration f0;
    unsigned long t = 0;
    interval_spec I;
};

// sup over runs of |f_t(I) - g_t(I)| / interval_bound(t, B); error on empty input.
double fit_interval_constant(const std::vector<interval_run>& runs,
                             unsigned long max_window = default_max_window);

}  // namespace liarwalk
