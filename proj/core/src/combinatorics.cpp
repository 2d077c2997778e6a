#include "liarwalk/combinatorics.hpp"

#include "liarwalk/arith.hpp"
#include "liarwalk/errors.hpp"

namespace liarwalk {

mpz_class binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class binom_le(long n, long F) {
    require_input(n >= 0, "binom_le requires n >= 0");
    if (F < 0) return 0;
    if (F >= n) {
        mpz_class r = 1;
        mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    mpz_class sum = 0;
    binom_row row(static_cast<unsigned long>(n));
    for (long k = 0; k <= F; ++k) {
        sum += row.value();
        row.advance();
    }
    return sum;
}

bool binom_row::advance() {
    if (k_ >= s_) return false;
    value_ *= static_cast<unsigned long>(s_ - k_);
    mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(k_ + 1));
    ++k_;
    return true;
}

namespace {

void require_lie_fraction(const mpq_class& f, const char* who) {
    require_input(sgn(f) > 0 && f < mpq_class(1, 2),
                  std::string(who) + " requires 0 < f < 1/2");
}

// floor(f * m) for rational f >= 0, integer m >= 0
long floor_f_times(const mpq_class& f, unsigned long m) {
    mpz_class num = f.get_num() * static_cast<unsigned long>(m);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), f.get_den().get_mpz_t());
    require_internal(q.fits_slong_p(), "floor(f*m) exceeds long");
    return q.get_si();
}

mpz_class pow2(unsigned long e) {
    mpz_class r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

}  // namespace

mpq_class sphere_bound(unsigned long n, const mpq_class& f) {
    require_lie_fraction(f, "sphere_bound");
    long F = floor_f_times(f, n);
    mpq_class r(pow2(n), binom_le(static_cast<long>(n), F));
    r.canonicalize();
    return r;
}

stage_split_result stage_split(unsigned long n, const mpq_class& f) {
    require_lie_fraction(f, "stage_split");
    require_input(n >= 3, "stage_split requires n >= 3 (ln ln n must be defined)");
    mpq_class one_minus_2f = 1 - 2 * f;
    mpq_class coeff = 4 / (one_minus_2f * one_minus_2f);
    long n2 = floor_c_lnln(coeff, n);
    require_internal(n2 >= 0, "stage_split produced negative n2");
    require_input(static_cast<unsigned long>(n2) < n, "stage_split requires n1 >= 1");
    stage_split_result r;
    r.n = n;
    r.f = f;
    r.n2 = static_cast<unsigned long>(n2);
    r.n1 = n - r.n2;
    r.F = floor_f_times(f, n);
    r.F1 = floor_f_times(f, r.n1);
    r.F2 = r.F - r.F1;
    return r;
}

mpz_class m_threshold_machine(unsigned long n, const mpq_class& f, const mpq_class& c_prime) {
    require_input(sgn(c_prime) > 0, "m_threshold_machine requires c_prime > 0");
    stage_split_result s = stage_split(n, f);
    return ceil_q_sqrt(sphere_bound(n, f) * 2 * c_prime, mpz_class(s.n2));
}

mpz_class m_threshold_game(unsigned long n, const mpq_class& f, const mpq_class& c_prime) {
    require_input(sgn(c_prime) > 0, "m_threshold_game requires c_prime > 0");
    stage_split(n, f);  // range checks
    mpq_class coeff = 4 / (1 - 2 * f);
    return ceil_q_sqrt_lnln(sphere_bound(n, f) * coeff * c_prime, n);
}

mpz_class m_delsarte_piret(unsigned long n, const mpq_class& f) {
    return ceil_q_ln(sphere_bound(n, f) * static_cast<unsigned long>(n), 2);
}

mpq_class hypergeom_pmf(unsigned long population, unsigned long class2,
                        unsigned long draws, long k) {
    require_input(class2 <= population && draws <= population,
                  "hypergeom_pmf requires class2 <= population and draws <= population");
    mpz_class num = binom(static_cast<long>(class2), k) *
                    binom(static_cast<long>(population - class2), static_cast<long>(draws) - k);
    mpq_class r(num, binom(static_cast<long>(population), static_cast<long>(draws)));
    r.canonicalize();
    return r;
}

long hypergeom_median(unsigned long population, unsigned long class2, unsigned long draws) {
    require_input(class2 <= population && draws <= population,
                  "hypergeom_median requires class2 <= population and draws <= population");
    mpz_class total = binom(static_cast<long>(population), static_cast<long>(draws));
    mpz_class twice_partial = 0;
    for (long m = 0;; ++m) {
        mpz_class w = binom(static_cast<long>(class2), m) *
                      binom(static_cast<long>(population - class2),
                            static_cast<long>(draws) - m);
        twice_partial += 2 * w;
        if (twice_partial >= total) return m;
        require_internal(m <= static_cast<long>(draws), "hypergeom_median failed to terminate");
    }
}

mpq_class split_sum_ratio(unsigned long n, const mpq_class& f) {
    stage_split_result s = stage_split(n, f);
    // sum_{k=F1}^{F} sum_{s2=F1}^{k} binom(n1,s2) binom(n2,k-s2)
    //   = sum_{s2=F1}^{F} binom(n1,s2) * binom_le(n2, F-s2)
    mpz_class num = 0;
    for (long s2 = s.F1; s2 <= s.F; ++s2)
        num += binom(static_cast<long>(s.n1), s2) * binom_le(static_cast<long>(s.n2), s.F - s2);
    mpq_class r(num, binom_le(static_cast<long>(n), s.F));
    r.canonicalize();
    return r;
}

mpq_class cutoff_tail(unsigned long n, const mpq_class& f, unsigned long n3) {
    require_lie_fraction(f, "cutoff_tail");
    long F = floor_f_times(f, n);
    require_input(static_cast<long>(n3) <= F, "cutoff_tail requires 0 <= n3 <= F");
    mpz_class num = 0;
    for (long i = F - static_cast<long>(n3); i <= F; ++i)
        num += binom(static_cast<long>(n), i);
    mpq_class r(num, binom_le(static_cast<long>(n), F));
    r.canonicalize();
    return r;
}

mpq_class cutoff_tail_bound(const mpq_class& f, unsigned long n3) {
    require_lie_fraction(f, "cutoff_tail_bound");
    mpq_class ratio = f / (1 - f);
    mpq_class p;
    mpz_pow_ui(p.get_num_mpz_t(), ratio.get_num().get_mpz_t(), n3);
    mpz_pow_ui(p.get_den_mpz_t(), ratio.get_den().get_mpz_t(), n3);
    p.canonicalize();
    return 1 - p * (1 - f) / (1 - 2 * f);
}

mpq_class relative_cdf_stat(unsigned long n, const mpq_class& f) {
    stage_split_result s = stage_split(n, f);
    mpq_class r(pow2(n), binom_le(static_cast<long>(n), s.F));
    r *= mpq_class(binom(static_cast<long>(s.n1), s.F1), pow2(s.n1));
    r.canonicalize();
    return r;
}

bool relative_cdf_check(unsigned long n, const mpq_class& f, const mpq_class& slack) {
    require_input(sgn(slack) > 0 && slack < 1, "relative_cdf_check requires slack in (0,1)");
    mpq_class v = relative_cdf_stat(n, f);
    if (sgn(v) <= 0) return false;
    // v >= (ln n)^(2 p/q)  <=>  v^q >= (ln n)^(2p), both sides positive
    unsigned long p = slack.get_num().get_ui();
    unsigned long q = slack.get_den().get_ui();
    mpq_class vq;
    mpz_pow_ui(vq.get_num_mpz_t(), v.get_num().get_mpz_t(), q);
    mpz_pow_ui(vq.get_den_mpz_t(), v.get_den().get_mpz_t(), q);
    vq.canonicalize();
    return cmp_q_vs_ln_pow(vq, n, static_cast<unsigned>(2 * p)) >= 0;
}

}  // namespace liarwalk
