#include "liarwalk/chip_config.hpp"

#include <algorithm>

#include "liarwalk/errors.hpp"

namespace liarwalk {

namespace {

const mpz_class zero_mpz = 0;

}  // namespace

const mpz_class& chip_configuration::at(long site) const {
    long i = site - offset;
    if (i < 0 || i >= static_cast<long>(counts.size())) return zero_mpz;
    return counts[static_cast<size_t>(i)];
}

void chip_configuration::set(long site, const mpz_class& value) {
    if (counts.empty()) {
        offset = site;
        counts.push_back(value);
        return;
    }
    if (site < offset) {
        counts.insert(counts.begin(), static_cast<size_t>(offset - site), mpz_class(0));
        offset = site;
    } else if (site >= offset + static_cast<long>(counts.size())) {
        counts.resize(static_cast<size_t>(site - offset + 1));
    }
    counts[static_cast<size_t>(site - offset)] = value;
}

mpz_class chip_configuration::mass() const {
    mpz_class m = 0;
    for (const auto& c : counts) m += c;
    return m;
}

bool chip_configuration::support_empty() const {
    return std::all_of(counts.begin(), counts.end(),
                       [](const mpz_class& c) { return c == 0; });
}

long chip_configuration::support_min() const {
    for (size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 0) return offset + static_cast<long>(i);
    throw internal_error("support_min on empty configuration");
}

long chip_configuration::support_max() const {
    for (size_t i = counts.size(); i-- > 0;)
        if (counts[i] != 0) return offset + static_cast<long>(i);
    throw internal_error("support_max on empty configuration");
}

bool chip_configuration::all_even() const {
    return std::all_of(counts.begin(), counts.end(),
                       [](const mpz_class& c) { return mpz_even_p(c.get_mpz_t()); });
}

void chip_configuration::trim() {
    size_t lo = 0, hi = counts.size();
    while (lo < hi && counts[lo] == 0) ++lo;
    while (hi > lo && counts[hi - 1] == 0) --hi;
    if (lo == 0 && hi == counts.size()) return;
    counts.erase(counts.begin() + static_cast<long>(hi), counts.end());
    counts.erase(counts.begin(), counts.begin() + static_cast<long>(lo));
    offset += static_cast<long>(lo);
    if (counts.empty()) offset = 0;
}

void chip_configuration::validate() const {
    for (size_t i = 0; i < counts.size(); ++i) {
        require_internal(sgn(counts[i]) >= 0, "negative chip count");
        if (counts[i] != 0)
            require_internal(site_matches(offset + static_cast<long>(i), parity),
                             "occupied site off the parity class");
    }
}

int sign_vector::at(long site) const {
    long i = site - offset;
    if (i < 0 || i >= static_cast<long>(values.size())) return 0;
    return values[static_cast<size_t>(i)];
}

mpq_class linear_profile::at(long site) const {
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), scale_exponent);
    mpq_class q(numerator_at(site), den);
    q.canonicalize();
    return q;
}

mpz_class linear_profile::numerator_at(long site) const {
    long i = site - offset;
    if (i < 0 || i >= static_cast<long>(numerators.size())) return 0;
    return numerators[static_cast<size_t>(i)];
}

void linear_profile::trim() {
    size_t lo = 0, hi = numerators.size();
    while (lo < hi && numerators[lo] == 0) ++lo;
    while (hi > lo && numerators[hi - 1] == 0) --hi;
    if (lo == 0 && hi == numerators.size()) return;
    numerators.erase(numerators.begin() + static_cast<long>(hi), numerators.end());
    numerators.erase(numerators.begin(), numerators.begin() + static_cast<long>(lo));
    offset += static_cast<long>(lo);
    if (numerators.empty()) offset = 0;
}

sign_vector chi_compute(const chip_configuration& f) {
    sign_vector chi;
    chi.offset = f.offset;
    chi.values.assign(f.counts.size(), 0);
    int sign = 1;  // leftmost odd site gets +1
    for (size_t i = 0; i < f.counts.size(); ++i) {
        if (mpz_odd_p(f.counts[i].get_mpz_t())) {
            chi.values[i] = static_cast<signed char>(sign);
            sign = -sign;
        }
    }
    return chi;
}

chip_configuration liar_step(const chip_configuration& f) {
    sign_vector chi = chi_compute(f);
    chip_configuration next;
    next.parity = flip(f.parity);
    next.step = f.step + 1;
    if (f.counts.empty()) {
        next.offset = 0;
        return next;
    }
    next.offset = f.offset - 1;
    next.counts.assign(f.counts.size() + 2, mpz_class(0));
    mpz_class acc;
    for (long i = 0; i < static_cast<long>(next.counts.size()); ++i) {
        long site = next.offset + i;
        acc = f.at(site - 1) + f.at(site + 1);
        acc += chi.at(site - 1) - chi.at(site + 1);
        require_internal(mpz_even_p(acc.get_mpz_t()), "liar_step numerator must be even");
        mpz_fdiv_q_2exp(acc.get_mpz_t(), acc.get_mpz_t(), 1);
        require_internal(sgn(acc) >= 0, "liar_step produced a negative count");
        next.counts[static_cast<size_t>(i)] = acc;
    }
    next.trim();
    return next;
}

chip_configuration liar_run(const chip_configuration& f, unsigned long steps,
                            unsigned long max_window) {
    chip_configuration cur = f;
    cur.trim();
    for (unsigned long s = 0; s < steps; ++s) {
        if (cur.counts.size() + 2 > max_window)
            throw resource_limit_error("liar_run window exceeds max_window");
        cur = liar_step(cur);
    }
    return cur;
}

linear_profile linear_of(const chip_configuration& f) {
    linear_profile g;
    g.offset = f.offset;
    g.numerators = f.counts;
    g.scale_exponent = 0;
    g.parity = f.parity;
    g.step = f.step;
    g.trim();
    return g;
}

linear_profile linear_step(const linear_profile& g) {
    linear_profile next;
    next.parity = flip(g.parity);
    next.step = g.step + 1;
    next.scale_exponent = g.scale_exponent + 1;
    if (g.numerators.empty()) {
        next.offset = 0;
        return next;
    }
    next.offset = g.offset - 1;
    next.numerators.assign(g.numerators.size() + 2, mpz_class(0));
    for (long i = 0; i < static_cast<long>(next.numerators.size()); ++i) {
        long site = next.offset + i;
        next.numerators[static_cast<size_t>(i)] =
            g.numerator_at(site - 1) + g.numerator_at(site + 1);
    }
    next.trim();
    return next;
}

linear_profile linear_run(const linear_profile& g, unsigned long steps,
                          unsigned long max_window) {
    linear_profile cur = g;
    for (unsigned long s = 0; s < steps; ++s) {
        if (cur.numerators.size() + 2 > max_window)
            throw resource_limit_error("linear_run window exceeds max_window");
        cur = linear_step(cur);
    }
    return cur;
}

mpz_class interval_sum(const chip_configuration& f, long a, long b) {
    require_input(a <= b, "interval_sum requires a <= b");
    mpz_class s = 0;
    long lo = std::max(a, f.offset);
    long hi = std::min(b, f.offset + static_cast<long>(f.counts.size()) - 1);
    for (long j = lo; j <= hi; ++j) s += f.counts[static_cast<size_t>(j - f.offset)];
    return s;
}

mpq_class interval_sum(const linear_profile& g, long a, long b) {
    require_input(a <= b, "interval_sum requires a <= b");
    mpz_class s = 0;
    long lo = std::max(a, g.offset);
    long hi = std::min(b, g.offset + static_cast<long>(g.numerators.size()) - 1);
    for (long j = lo; j <= hi; ++j) s += g.numerators[static_cast<size_t>(j - g.offset)];
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), g.scale_exponent);
    mpq_class q(s, den);
    q.canonicalize();
    return q;
}

}  // namespace liarwalk
