#include "liarwalk/arith.hpp"

#include <mpfr.h>

#include <cstdio>
#include <cstdlib>

#include "liarwalk/errors.hpp"

namespace liarwalk {

unsigned long default_precision_bits() {
    static const unsigned long bits = [] {
        const char* env = std::getenv("LIARWALK_PRECISION_BITS");
        if (!env) return 128ul;
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (!end || *end != '\0' || v < 16 || v > max_precision_bits)
            throw input_error("LIARWALK_PRECISION_BITS must be an integer in [16, 2^20]");
        return v;
    }();
    return bits;
}

mpq_class dyadic(const mpz_class& num, unsigned long scale_exp) {
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), scale_exp);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

namespace {

// Lower/upper enclosure of a transcendental expression at one precision.
struct enclosure {
    mpfr_t lo, hi;
    explicit enclosure(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
    }
    ~enclosure() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    enclosure(const enclosure&) = delete;
    enclosure& operator=(const enclosure&) = delete;
};

void set_ln(enclosure& e, unsigned long t) {
    mpfr_set_ui(e.lo, t, MPFR_RNDD);
    mpfr_log(e.lo, e.lo, MPFR_RNDD);
    mpfr_set_ui(e.hi, t, MPFR_RNDU);
    mpfr_log(e.hi, e.hi, MPFR_RNDU);
}

void set_lnln(enclosure& e, unsigned long n) {
    set_ln(e, n);
    mpfr_log(e.lo, e.lo, MPFR_RNDD);  // log is monotone, endpoints map to endpoints
    mpfr_log(e.hi, e.hi, MPFR_RNDU);
}

// Multiply an enclosure of a positive quantity by a positive rational.
void mul_q_pos(enclosure& e, const mpq_class& q) {
    mpfr_mul_q(e.lo, e.lo, const_cast<mpq_srcptr>(q.get_mpq_t()), MPFR_RNDD);
    mpfr_mul_q(e.hi, e.hi, const_cast<mpq_srcptr>(q.get_mpq_t()), MPFR_RNDU);
}

[[noreturn]] void precision_exhausted(const char* what) {
    throw resource_limit_error(std::string("certified comparison for ") + what +
                               " did not converge below the precision cap");
}

}  // namespace

int cmp_dyadic_vs_c_ln(const mpz_class& num, unsigned long scale_exp,
                       const mpq_class& c, unsigned long t) {
    require_input(t >= 2, "cmp_dyadic_vs_c_ln requires t >= 2");
    require_input(sgn(c) > 0, "cmp_dyadic_vs_c_ln requires c > 0");
    mpq_class lhs = dyadic(num, scale_exp);
    for (unsigned long prec = default_precision_bits(); prec <= max_precision_bits; prec *= 2) {
        enclosure e{static_cast<mpfr_prec_t>(prec)};
        set_ln(e, t);
        mul_q_pos(e, c);
        if (mpfr_cmp_q(e.lo, lhs.get_mpq_t()) > 0) return -1;  // lhs < c ln t
        if (mpfr_cmp_q(e.hi, lhs.get_mpq_t()) < 0) return 1;
    }
    precision_exhausted("dyadic vs c*ln t");
}

int cmp_q_vs_ln_pow(const mpq_class& q, unsigned long n, unsigned k) {
    require_input(n >= 2 && k >= 1, "cmp_q_vs_ln_pow requires n >= 2, k >= 1");
    for (unsigned long prec = default_precision_bits(); prec <= max_precision_bits; prec *= 2) {
        enclosure e{static_cast<mpfr_prec_t>(prec)};
        set_ln(e, n);
        // ln n > 0 for n >= 2, so pow_ui is monotone on the enclosure
        mpfr_pow_ui(e.lo, e.lo, k, MPFR_RNDD);
        mpfr_pow_ui(e.hi, e.hi, k, MPFR_RNDU);
        if (mpfr_cmp_q(e.lo, q.get_mpq_t()) > 0) return -1;
        if (mpfr_cmp_q(e.hi, q.get_mpq_t()) < 0) return 1;
    }
    precision_exhausted("q vs (ln n)^k");
}

namespace {

// floor of an enclosure once both endpoints agree; nullopt-style via bool.
bool floor_agrees(const enclosure& e, mpz_class& out) {
    mpz_class flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), e.lo, MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), e.hi, MPFR_RNDD);
    if (flo != fhi) return false;
    out = flo;
    return true;
}

bool ceil_agrees(const enclosure& e, mpz_class& out) {
    mpz_class clo, chi;
    mpfr_get_z(clo.get_mpz_t(), e.lo, MPFR_RNDU);
    mpfr_get_z(chi.get_mpz_t(), e.hi, MPFR_RNDU);
    if (clo != chi) return false;
    out = clo;
    return true;
}

}  // namespace

long floor_c_lnln(const mpq_class& c, unsigned long n) {
    require_input(n >= 3, "floor_c_lnln requires n >= 3");
    require_input(sgn(c) >= 0, "floor_c_lnln requires c >= 0");
    if (sgn(c) == 0) return 0;
    for (unsigned long prec = default_precision_bits(); prec <= max_precision_bits; prec *= 2) {
        enclosure e{static_cast<mpfr_prec_t>(prec)};
        set_lnln(e, n);
        mul_q_pos(e, c);
        mpz_class f;
        if (floor_agrees(e, f)) {
            require_internal(f.fits_slong_p(), "floor_c_lnln result exceeds long");
            return f.get_si();
        }
    }
    precision_exhausted("floor(c*lnln n)");
}

mpz_class ceil_q_sqrt(const mpq_class& q, const mpz_class& m) {
    require_input(sgn(q) > 0, "ceil_q_sqrt requires q > 0");
    require_input(sgn(m) >= 0, "ceil_q_sqrt requires m >= 0");
    if (sgn(m) == 0) return 0;
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    if (rem == 0) {  // perfect square: q*root is rational, take an exact ceiling
        mpq_class v = q * mpq_class(root);
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        return r;
    }
    for (unsigned long prec = default_precision_bits(); prec <= max_precision_bits; prec *= 2) {
        enclosure e{static_cast<mpfr_prec_t>(prec)};
        mpfr_set_z(e.lo, m.get_mpz_t(), MPFR_RNDD);
        mpfr_sqrt(e.lo, e.lo, MPFR_RNDD);
        mpfr_set_z(e.hi, m.get_mpz_t(), MPFR_RNDU);
        mpfr_sqrt(e.hi, e.hi, MPFR_RNDU);
        mul_q_pos(e, q);
        mpz_class r;
        if (ceil_agrees(e, r)) return r;  // q*sqrt(m) irrational, never an integer
    }
    precision_exhausted("ceil(q*sqrt(m))");
}

mpz_class ceil_q_sqrt_lnln(const mpq_class& q, unsigned long n) {
    require_input(sgn(q) > 0, "ceil_q_sqrt_lnln requires q > 0");
    require_input(n >= 16, "ceil_q_sqrt_lnln requires n >= 16");
    for (unsigned long prec = default_precision_bits(); prec <= max_precision_bits; prec *= 2) {
        enclosure e{static_cast<mpfr_prec_t>(prec)};
        set_lnln(e, n);
        mpfr_sqrt(e.lo, e.lo, MPFR_RNDD);
        mpfr_sqrt(e.hi, e.hi, MPFR_RNDU);
        mul_q_pos(e, q);
        mpz_class r;
        if (ceil_agrees(e, r)) return r;
    }
    precision_exhausted("ceil(q*sqrt(lnln n))");
}

mpz_class ceil_q_ln(const mpq_class& q, unsigned long m) {
    require_input(sgn(q) > 0, "ceil_q_ln requires q > 0");
    require_input(m >= 2, "ceil_q_ln requires m >= 2");
    for (unsigned long prec = default_precision_bits(); prec <= max_precision_bits; prec *= 2) {
        enclosure e{static_cast<mpfr_prec_t>(prec)};
        set_ln(e, m);
        mul_q_pos(e, q);
        mpz_class r;
        if (ceil_agrees(e, r)) return r;  // q*ln m irrational for m >= 2
    }
    precision_exhausted("ceil(q*ln m)");
}

double ln_double(unsigned long t) {
    mpfr_t x;
    mpfr_init2(x, 64);
    mpfr_set_ui(x, t, MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    double r = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return r;
}

double lnln_double(unsigned long n) {
    mpfr_t x;
    mpfr_init2(x, 64);
    mpfr_set_ui(x, n, MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    double r = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return r;
}

double to_double(const mpq_class& q) {
    mpfr_t x;
    mpfr_init2(x, 64);
    mpfr_set_q(x, const_cast<mpq_srcptr>(q.get_mpq_t()), MPFR_RNDN);
    double r = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return r;
}

mpq_class rational_from_double(double x) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    q.canonicalize();
    return q;
}

std::string format_sig17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace liarwalk
