#include "liarwalk/discrepancy.hpp"

#include <mpfr.h>

#include <algorithm>

#include "liarwalk/arith.hpp"
#include "liarwalk/combinatorics.hpp"
#include "liarwalk/errors.hpp"

namespace liarwalk {

discrepancy_tracker::discrepancy_tracker(const chip_configuration& f0,
                                         unsigned long max_window)
    : max_window_(max_window) {
    for (size_t i = 0; i < f0.counts.size(); ++i) {
        require_input(sgn(f0.counts[i]) >= 0, "negative chip count");
        if (f0.counts[i] != 0)
            require_input(site_matches(f0.offset + static_cast<long>(i), f0.parity),
                          "configuration occupies both parity classes");
    }
    chip_configuration f = f0;
    f.trim();
    if (f.support_empty()) return;
    lo_ = f.support_min();
    size_t n = static_cast<size_t>((f.support_max() - lo_) / 2) + 1;
    require_input(n <= max_window_, "initial configuration exceeds max_window");
    mpz_class mass = f.mass();
    big_ = mpz_sizeinbase(mass.get_mpz_t(), 2) > 62;
    d_.assign(n, mpz_class(0));
    if (big_) {
        fb_.assign(n, mpz_class(0));
        for (size_t i = 0; i < n; ++i) fb_[i] = f.at(lo_ + 2 * static_cast<long>(i));
    } else {
        fs_.assign(n, 0);
        for (size_t i = 0; i < n; ++i)
            fs_[i] = mpz_get_ui(f.at(lo_ + 2 * static_cast<long>(i)).get_mpz_t());
    }
}

void discrepancy_tracker::compute_chi() {
    if (chi_valid_) return;
    chi_.assign(cells(), 0);
    int sign = 1;
    if (big_) {
        for (size_t i = 0; i < fb_.size(); ++i) {
            if (mpz_odd_p(fb_[i].get_mpz_t())) {
                chi_[i] = static_cast<signed char>(sign);
                sign = -sign;
            }
        }
    } else {
        for (size_t i = 0; i < fs_.size(); ++i) {
            if (fs_[i] & 1) {
                chi_[i] = static_cast<signed char>(sign);
                sign = -sign;
            }
        }
    }
    chi_valid_ = true;
}

void discrepancy_tracker::step() {
    size_t n = cells();
    if (n == 0) {  // empty support stays empty
        ++t_;
        pow2t_ <<= 1;
        return;
    }
    if (n + 1 > max_window_) throw resource_limit_error("tracker window exceeds max_window");
    compute_chi();
    size_t m = n + 1;
    d_next_.resize(m);
    auto chi = [&](long i) -> int {
        return (i >= 0 && i < static_cast<long>(n)) ? chi_[static_cast<size_t>(i)] : 0;
    };
    for (size_t i = 0; i < m; ++i) {
        // new cell i sits at site (lo_-1) + 2i, fed by old cells i-1 and i
        mpz_ptr dst = d_next_[i].get_mpz_t();
        bool has_l = i >= 1, has_r = i < n;
        if (has_l && has_r)
            mpz_add(dst, d_[i - 1].get_mpz_t(), d_[i].get_mpz_t());
        else if (has_l)
            mpz_set(dst, d_[i - 1].get_mpz_t());
        else
            mpz_set(dst, d_[i].get_mpz_t());
        int diff = chi(static_cast<long>(i) - 1) - chi(static_cast<long>(i));
        if (diff > 0)
            mpz_addmul_ui(dst, pow2t_.get_mpz_t(), static_cast<unsigned long>(diff));
        else if (diff < 0)
            mpz_submul_ui(dst, pow2t_.get_mpz_t(), static_cast<unsigned long>(-diff));
    }
    if (big_) {
        fb_next_.resize(m);
        for (size_t i = 0; i < m; ++i) {
            mpz_ptr dst = fb_next_[i].get_mpz_t();
            bool has_l = i >= 1, has_r = i < n;
            if (has_l && has_r)
                mpz_add(dst, fb_[i - 1].get_mpz_t(), fb_[i].get_mpz_t());
            else if (has_l)
                mpz_set(dst, fb_[i - 1].get_mpz_t());
            else
                mpz_set(dst, fb_[i].get_mpz_t());
            int diff = chi(static_cast<long>(i) - 1) - chi(static_cast<long>(i));
            if (diff > 0)
                mpz_add_ui(dst, dst, static_cast<unsigned long>(diff));
            else if (diff < 0)
                mpz_sub_ui(dst, dst, static_cast<unsigned long>(-diff));
            require_internal(mpz_even_p(dst), "liar step numerator must be even");
            mpz_fdiv_q_2exp(dst, dst, 1);
            require_internal(mpz_sgn(dst) >= 0, "liar step produced a negative count");
        }
        fb_.swap(fb_next_);
    } else {
        fs_next_.resize(m);
        for (size_t i = 0; i < m; ++i) {
            unsigned long long acc = (i >= 1 ? fs_[i - 1] : 0) + (i < n ? fs_[i] : 0);
            int diff = chi(static_cast<long>(i) - 1) - chi(static_cast<long>(i));
            acc += static_cast<unsigned long long>(static_cast<long long>(diff));
            require_internal((acc & 1) == 0, "liar step numerator must be even");
            fs_next_[i] = acc >> 1;
        }
        fs_.swap(fs_next_);
    }
    d_.swap(d_next_);
    --lo_;
    ++t_;
    pow2t_ <<= 1;
    chi_valid_ = false;
}

void discrepancy_tracker::run_to(unsigned long t_target) {
    require_input(t_target >= t_, "run_to cannot rewind");
    while (t_ < t_target) step();
}

std::pair<mpz_class, long> discrepancy_tracker::max_abs_numerator() const {
    if (d_.empty()) return {mpz_class(0), 0};
    size_t best = 0;
    for (size_t i = 1; i < d_.size(); ++i)
        if (mpz_cmpabs(d_[i].get_mpz_t(), d_[best].get_mpz_t()) > 0) best = i;
    mpz_class m;
    mpz_abs(m.get_mpz_t(), d_[best].get_mpz_t());
    return {m, lo_ + 2 * static_cast<long>(best)};
}

mpz_class discrepancy_tracker::numerator_at(long site) const {
    long off = site - lo_;
    if (off < 0 || off % 2 != 0) return 0;
    size_t i = static_cast<size_t>(off / 2);
    if (i >= d_.size()) return 0;
    return d_[i];
}

mpz_class discrepancy_tracker::interval_numerator(long a, long b) const {
    require_input(a <= b, "interval_numerator requires a <= b");
    if (d_.empty()) return 0;
    long first = a - lo_;
    first = first <= 0 ? 0 : (first + 1) / 2;  // first cell with site >= a
    long last = (b - lo_) / 2;                 // last cell with site <= b
    if (b < lo_) return 0;
    last = std::min(last, static_cast<long>(d_.size()) - 1);
    mpz_class s = 0;
    for (long i = first; i <= last; ++i) s += d_[static_cast<size_t>(i)];
    return s;
}

mpz_class discrepancy_tracker::f_at(long site) const {
    long off = site - lo_;
    if (off < 0 || off % 2 != 0) return 0;
    size_t i = static_cast<size_t>(off / 2);
    if (big_) return i < fb_.size() ? fb_[i] : mpz_class(0);
    return i < fs_.size() ? mpz_class(static_cast<unsigned long>(fs_[i])) : mpz_class(0);
}

int discrepancy_tracker::chi_at(long site) {
    compute_chi();
    long off = site - lo_;
    if (off < 0 || off % 2 != 0) return 0;
    size_t i = static_cast<size_t>(off / 2);
    return i < chi_.size() ? chi_[i] : 0;
}

namespace {

double ratio_or_zero(const mpq_class& value, double bound) {
    return bound > 0 ? to_double(value) / bound : 0.0;
}

}  // namespace

discrepancy_report pointwise_discrepancy(const chip_configuration& f0, unsigned long t,
                                         unsigned long max_window) {
    discrepancy_tracker tr(f0, max_window);
    tr.run_to(t);
    auto [num, site] = tr.max_abs_numerator();
    discrepancy_report r;
    r.t = t;
    r.interval_width = 0;
    r.max_abs = dyadic(num, t);
    r.argmax_site = site;
    r.bound_value = t >= 2 ? 12.0 * ln_double(t) : 0.0;
    r.ratio = ratio_or_zero(r.max_abs, r.bound_value);
    return r;
}

discrepancy_report interval_discrepancy(const chip_configuration& f0, unsigned long t,
                                        interval_spec I, unsigned long max_window) {
    require_input(I.a <= I.b, "interval_discrepancy requires a <= b");
    require_input(t >= 1, "interval_discrepancy requires t >= 1");
    discrepancy_tracker tr(f0, max_window);
    tr.run_to(t);
    mpz_class num = tr.interval_numerator(I.a, I.b);
    mpz_abs(num.get_mpz_t(), num.get_mpz_t());
    discrepancy_report r;
    r.t = t;
    r.interval_width = I.width();
    r.max_abs = dyadic(num, t);
    r.argmax_site = I.a;
    r.bound_value = interval_bound_double(t, I.width());
    r.ratio = ratio_or_zero(r.max_abs, r.bound_value);
    return r;
}

bool theorem1_holds(const mpz_class& max_abs_num, unsigned long t) {
    require_input(t >= 2, "theorem1_holds requires t >= 2");
    require_input(sgn(max_abs_num) >= 0, "theorem1_holds takes |numerator|");
    if (max_abs_num == 0) return true;
    // |num|/2^t < 2^(bitlen - t) <= 8 < 12 ln 2 <= 12 ln t
    if (mpz_sizeinbase(max_abs_num.get_mpz_t(), 2) <= t + 3) return true;
    return cmp_dyadic_vs_c_ln(max_abs_num, t, mpq_class(12), t) < 0;
}

namespace {

// Enclosure of interval_bound(t, B) in [lo, hi] at the given precision.
void interval_bound_enclosure(mpfr_t lo, mpfr_t hi, unsigned long t, long B) {
    unsigned long Bp = B < 1 ? 1 : static_cast<unsigned long>(B);
    mpfr_t sq_lo, sq_hi, term_lo, term_hi;
    mpfr_prec_t prec = mpfr_get_prec(lo);
    mpfr_inits2(prec, sq_lo, sq_hi, term_lo, term_hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_sqrt_ui(sq_lo, t, MPFR_RNDD);
    mpfr_sqrt_ui(sq_hi, t, MPFR_RNDU);
    mpq_class arg(mpz_class(t), mpz_class(Bp) * Bp);  // t / B'^2, exact
    arg.canonicalize();
    mpfr_set_q(term_lo, arg.get_mpq_t(), MPFR_RNDD);
    mpfr_log(term_lo, term_lo, MPFR_RNDD);
    mpfr_mul_ui(term_lo, term_lo, Bp, MPFR_RNDD);
    mpfr_set_q(term_hi, arg.get_mpq_t(), MPFR_RNDU);
    mpfr_log(term_hi, term_hi, MPFR_RNDU);
    mpfr_mul_ui(term_hi, term_hi, Bp, MPFR_RNDU);
    // max with the exact B'
    if (mpfr_cmp_ui(term_lo, Bp) < 0) mpfr_set_ui(term_lo, Bp, MPFR_RNDD);
    if (mpfr_cmp_ui(term_hi, Bp) < 0) mpfr_set_ui(term_hi, Bp, MPFR_RNDU);
    // min with sqrt(t): min of lower bounds / min of upper bounds
    mpfr_min(lo, sq_lo, term_lo, MPFR_RNDD);
    mpfr_min(hi, sq_hi, term_hi, MPFR_RNDU);
    mpfr_clears(sq_lo, sq_hi, term_lo, term_hi, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

double interval_bound_double(unsigned long t, long B) {
    require_input(t >= 1, "interval_bound requires t >= 1");
    mpfr_t lo, hi, mid;
    mpfr_inits2(128, lo, hi, mid, static_cast<mpfr_ptr>(nullptr));
    interval_bound_enclosure(lo, hi, t, B);
    mpfr_add(mid, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    double r = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clears(lo, hi, mid, static_cast<mpfr_ptr>(nullptr));
    return r;
}

int cmp_dyadic_vs_q_interval_bound(const mpz_class& num, unsigned long scale,
                                   const mpq_class& q, unsigned long t, long B) {
    require_input(t >= 1, "interval_bound requires t >= 1");
    require_input(sgn(q) > 0, "cmp_dyadic_vs_q_interval_bound requires q > 0");
    mpq_class lhs = dyadic(num, scale);
    for (unsigned long prec = default_precision_bits(); prec <= max_precision_bits;
         prec *= 2) {
        mpfr_t lo, hi;
        mpfr_inits2(static_cast<mpfr_prec_t>(prec), lo, hi,
                    static_cast<mpfr_ptr>(nullptr));
        interval_bound_enclosure(lo, hi, t, B);
        mpfr_mul_q(lo, lo, const_cast<mpq_srcptr>(q.get_mpq_t()), MPFR_RNDD);
        mpfr_mul_q(hi, hi, const_cast<mpq_srcptr>(q.get_mpq_t()), MPFR_RNDU);
        int against_lo = mpfr_cmp_q(lo, lhs.get_mpq_t());
        int against_hi = mpfr_cmp_q(hi, lhs.get_mpq_t());
        mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
        if (against_lo > 0) return -1;  // lhs < q * bound
        if (against_hi < 0) return 1;
        if (against_lo == 0 && against_hi == 0) return 0;  // bound is exactly rational here
    }
    throw resource_limit_error("certified interval-bound comparison did not converge");
}

mpq_class hB_eval(unsigned long s, long B, long j) {
    require_input(s >= 1, "hB_eval requires s >= 1");
    require_input(B > 0 && B % 2 == 0, "hB_eval requires even positive B");
    auto half_binom = [&](long x) -> mpz_class {
        if (((x % 2) + 2) % 2 != 0) return 0;  // non-integer lower index
        return binom(static_cast<long>(s), x / 2);
    };
    mpz_class num = half_binom(static_cast<long>(s) + j - B) - half_binom(static_cast<long>(s) + j);
    return dyadic(num, s);
}

hB_scan_result hB_scan(unsigned long s, long B) {
    require_input(s >= 1, "hB_scan requires s >= 1");
    require_input(B > 0 && B % 2 == 0, "hB_scan requires even positive B");
    const long R = B / 2;
    // h_num(k2) = binom(s,k2-R) - binom(s,k2) for k2 in [0, s+R], j = 2 k2 - s
    binom_row trail(s), lead(s);  // trail tracks k2-R, lead tracks k2
    hB_scan_result out;
    out.max_abs_num = 0;
    out.argmax_j = 0;
    mpz_class prev_h = 0, cur_h, diff;
    int prev_sign = 0;
    long changes = 0;
    const long kmax = static_cast<long>(s) + R + 1;  // one past support for edge diff
    for (long k2 = 0; k2 <= kmax; ++k2) {
        cur_h = 0;
        if (k2 <= static_cast<long>(s) + R) {
            if (k2 - R >= 0 && k2 - R <= static_cast<long>(s)) cur_h = trail.value();
            if (k2 <= static_cast<long>(s)) cur_h -= lead.value();
        }
        if (mpz_cmpabs(cur_h.get_mpz_t(), out.max_abs_num.get_mpz_t()) > 0) {
            out.max_abs_num = abs(cur_h);
            out.argmax_j = 2 * k2 - static_cast<long>(s);
        }
        diff = prev_h - cur_h;  // h_B(j-2) - h_B(j)
        int sg = sgn(diff);
        if (sg != 0) {
            if (prev_sign != 0 && sg != prev_sign) {
                ++changes;
                out.bim.sign_changes.push_back(2 * k2 - static_cast<long>(s));
            }
            prev_sign = sg;
        }
        prev_h = cur_h;
        if (k2 - R >= 0 && k2 - R < static_cast<long>(s)) trail.advance();
        if (k2 < static_cast<long>(s)) lead.advance();
    }
    out.bim.bimodal = changes <= 2;
    return out;
}

bimodality_result bimodality_check(unsigned long s, long B) {
    return hB_scan(s, B).bim;
}

bool hB_bounds_check(unsigned long s, long B, unsigned long s_check) {
    hB_scan_result r = hB_scan(s, B);
    const mpz_class& m = r.max_abs_num;  // max |h_B| = m / 2^s
    mpz_class four_s = 1;
    mpz_mul_2exp(four_s.get_mpz_t(), four_s.get_mpz_t(), 2 * s);
    mpz_class m2s = m * m * s;
    // c2: m/2^s <= 1/sqrt(s)  <=>  m^2 s <= 4^s
    if (m2s > four_s) return false;
    // c4: m/2^s <= (3/2) B/s  <=>  2 m s <= 3 B 2^s
    mpz_class two_s = 1;
    mpz_mul_2exp(two_s.get_mpz_t(), two_s.get_mpz_t(), s);
    if (2 * m * s > 3 * B * two_s) return false;
    // c1: m/2^s >= (1/4)/sqrt(s)  <=>  16 m^2 s >= 4^s, when B >= sqrt(s), s >= s_check
    if (s >= s_check && static_cast<unsigned long>(B) * static_cast<unsigned long>(B) >= s)
        if (16 * m2s < four_s) return false;
    return true;
}

double fit_interval_constant(const std::vector<interval_run>& runs,
                             unsigned long max_window) {
    require_input(!runs.empty(), "fit_interval_constant requires a nonempty run list");
    double sup = 0;
    for (const auto& run : runs) {
        discrepancy_report r = interval_discrepancy(run.f0, run.t, run.I, max_window);
        sup = std::max(sup, r.ratio);
    }
    return sup;
}

}  // namespace liarwalk
