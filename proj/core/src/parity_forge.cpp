#include "liarwalk/parity_forge.hpp"

#include <algorithm>
#include <map>

#include "liarwalk/combinatorics.hpp"
#include "liarwalk/errors.hpp"

namespace liarwalk {

bool parity_grid::bit(long n, long t) const {
    return bits[static_cast<std::size_t>(t) * n_sites + n] != 0;
}

void parity_grid::set_bit(long n, long t, bool value) {
    bits[static_cast<std::size_t>(t) * n_sites + n] = value ? 1 : 0;
}

bool parity_grid::cell_valid(long n, long t) const {
    return ((n + t) % 2 + 2) % 2 == (support_parity == parity_class::even ? 0 : 1);
}

void parity_grid::validate() const {
    require_input(n_sites >= 1 && t_steps >= 1, "grid needs N >= 1 and T >= 1");
    require_input(bits.size() == static_cast<std::size_t>(n_sites) * t_steps,
                  "grid bit array must hold N*T cells");
    for (long t = 0; t < t_steps; ++t)
        for (long n = 0; n < n_sites; ++n)
            require_input(!bit(n, t) || cell_valid(n, t),
                          "grid demands a 1 on a structurally zero cell");
}

chip_configuration force_parity(const parity_grid& g) {
    g.validate();
    if (g.t_steps > 30)
        throw resource_limit_error("force_parity chip counts grow like 2^T; T capped at 30");
    chip_configuration f0;
    f0.parity = g.support_parity;
    f0.step = 0;
    for (long n = 0; n < g.n_sites; ++n)
        if (g.bit(n, 0)) f0.set(n, 1);
    for (long t = 1; t < g.t_steps; ++t) {
        chip_configuration ft = liar_run(f0, static_cast<unsigned long>(t));
        for (long n = 0; n < g.n_sites; ++n) {
            if (!g.cell_valid(n, t)) continue;
            bool have = mpz_odd_p(ft.at(n).get_mpz_t()) != 0;
            if (have == g.bit(n, t)) continue;
            f0.set(n + t, f0.at(n + t) + (mpz_class(1) << t));
            ft = liar_run(f0, static_cast<unsigned long>(t));
        }
    }
    f0.trim();
    return f0;
}

namespace {

// The kernel is uniform over slices once the right endpoint is dropped to
// the parity class of a, so all geometry below uses the normalized b.
long normalized_b(const interval_spec& target) {
    require_input(target.a <= target.b, "interval needs a <= b");
    return target.a + 2 * ((target.b - target.a) / 2);
}

}  // namespace

kernel_peak interval_kernel_peak(unsigned long s, const interval_spec& target) {
    const long alpha = target.a - 1;
    const long beta = normalized_b(target) + 1;
    const long half_gap = (beta - alpha) / 2;  // B/2 + 1 >= 1

    // num(k) = binom(s,k) - binom(s,k+half_gap), zero beyond the row's end.
    binom_row trail(s);
    binom_row lead(s);
    bool lead_live = true;
    for (long i = 0; i < half_gap && lead_live; ++i) lead_live = lead.advance();
    kernel_peak best;
    long best_k = -1;
    for (long k = 0;; ++k) {
        mpz_class num = trail.value();
        if (lead_live) num -= lead.value();
        if (best_k < 0 || num > best.num) {
            best.num = num;
            best_k = k;
        }
        if (k == static_cast<long>(s)) break;
        trail.advance();
        if (lead_live) lead_live = lead.advance();
    }
    require_internal(best.num >= 1, "kernel peak must be at least 1 (attained at k = s)");
    best.k_star = best_k;
    const long w_star = 2 * best_k - static_cast<long>(s);
    best.z_plus = alpha - w_star;
    best.z_minus = alpha + beta - best.z_plus;
    require_internal(best.z_plus < best.z_minus, "a positive peak forces z+ < z-");
    return best;
}

mpq_class adversarial_predicted_value(unsigned long steps, const interval_spec& target) {
    require_input(steps >= 1, "need at least one step");
    mpz_class total = 0;
    for (unsigned long s = 0; s < steps; ++s) {
        mpz_class term = interval_kernel_peak(s, target).num;
        term <<= steps - 1 - s;
        total += term;
    }
    mpq_class value(total, mpz_class(1) << (steps - 1));
    value.canonicalize();
    return value;
}

chip_configuration adversarial_config(unsigned long steps, const interval_spec& target) {
    require_input(steps >= 1, "adversarial construction needs at least one step");
    if (steps > (1ul << 14))
        throw resource_limit_error("adversarial construction capped at 2^14 steps");
    const long T = static_cast<long>(steps);
    const long a = target.a;
    const long b = normalized_b(target);
    const long win_lo = a - T, win_hi = b + T;
    const int p0 = ((a + T) % 2 + 2) % 2;

    std::vector<kernel_peak> demand;
    demand.reserve(steps);
    for (long r = 0; r < T; ++r)
        demand.push_back(interval_kernel_peak(static_cast<unsigned long>(T - 1 - r), target));

    // Row r is simulated mod 2^(T-r) on the valid sites of
    // [win_lo - r - 2, win_hi + T - 1 - r]; that window covers the support
    // margin on the left (chips placed at >= win_lo - 2 + t on row t drift
    // left at most one site per step) and the dependence cone of the final
    // row on the right, and it shrinks by one site per row on both ends, so
    // its cell count is constant.
    long vlo = win_lo - 2;
    long vhi = win_hi + T - 1 - (T % 2 == 0 ? 1 : 0);
    std::vector<mpz_class> v((vhi - vlo) / 2 + 1);
    std::vector<signed char> chi(v.size(), 0);
    std::vector<mpz_class> pascal{mpz_class(1)};  // binom(r, .) mod 2^(T-r)
    std::map<long, mpz_class> chips;

    for (long r = 0; r < T; ++r) {
        const unsigned long m_bits = static_cast<unsigned long>(T - r);
        const long guard = (r % 2 != 0) ? win_lo - 1 : win_lo - 2;
        const long zp = demand[r].z_plus, zm = demand[r].z_minus;

        int left_odd_parity = 0;
        for (std::size_t c = 0; c < v.size(); ++c) {
            const long site = vlo + 2 * static_cast<long>(c);
            if (site < guard) {
                left_odd_parity ^= mpz_odd_p(v[c].get_mpz_t()) ? 1 : 0;
                continue;
            }
            if (site > win_hi) break;
            const int want =
                site == guard ? left_odd_parity : (site == zp || site == zm) ? 1 : 0;
            const int have = mpz_odd_p(v[c].get_mpz_t()) ? 1 : 0;
            if (want == have) continue;
            // 2^r chips at site+r read binom(r, j) at site+2j on this row
            // and even values on every earlier one.
            mpz_setbit(chips[site + r].get_mpz_t(), static_cast<mp_bitcnt_t>(r));
            const std::size_t spread = std::min(v.size() - c, pascal.size());
            for (std::size_t j = 0; j < spread; ++j) v[c + j] += pascal[j];
        }
        if (r + 1 == T) break;

        int sign = 1;
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (mpz_odd_p(v[c].get_mpz_t())) {
                chi[c] = static_cast<signed char>(sign);
                sign = -sign;
            } else {
                chi[c] = 0;
            }
        }
        // Step: the new cell at site z (one site inward on both ends) reads
        // the old cells at z-1 and z+1; z-1 below the window is a structural
        // zero, z+1 is always in range.
        std::vector<mpz_class> nv(v.size());
        for (std::size_t c = 0; c < nv.size(); ++c) {
            mpz_class acc = c >= 1 ? v[c - 1] : mpz_class(0);
            acc += v[c];
            acc += (c >= 1 ? chi[c - 1] : 0) - chi[c];
            require_internal(acc >= 0, "pre-halving residue must stay nonnegative");
            mpz_tdiv_q_2exp(acc.get_mpz_t(), acc.get_mpz_t(), 1);
            mpz_fdiv_r_2exp(nv[c].get_mpz_t(), acc.get_mpz_t(), m_bits - 1);
        }
        v.swap(nv);
        --vlo;
        --vhi;

        pascal.emplace_back(0);
        for (std::size_t j = pascal.size() - 1; j >= 1; --j) {
            pascal[j] += pascal[j - 1];
            mpz_fdiv_r_2exp(pascal[j].get_mpz_t(), pascal[j].get_mpz_t(), m_bits - 1);
        }
    }

    chip_configuration f0;
    f0.parity = p0 == 0 ? parity_class::even : parity_class::odd;
    f0.step = 0;
    for (const auto& [site, count] : chips) f0.set(site, count);
    f0.trim();
    f0.validate();
    return f0;
}

chip_configuration adversarial_config(unsigned long steps, long target_site) {
    return adversarial_config(steps, interval_spec{target_site, target_site});
}

adversarial_verification adversarial_verify(unsigned long steps, const interval_spec& target,
                                            unsigned long max_window) {
    chip_configuration f0 = adversarial_config(steps, target);
    const long T = static_cast<long>(steps);
    const long a = target.a;
    const long b = normalized_b(target);
    const long win_lo = a - T, win_hi = b + T;

    adversarial_verification out;
    out.chi_pattern_ok = true;
    discrepancy_tracker tracker(f0, max_window);
    for (long r = 0; r < T; ++r) {
        kernel_peak pk = interval_kernel_peak(static_cast<unsigned long>(T - 1 - r), target);
        const long start = win_lo + (r % 2 != 0 ? 1 : 0);  // win_lo is valid on even rows
        for (long site = start; site <= win_hi; site += 2) {
            const int want = site == pk.z_plus ? 1 : site == pk.z_minus ? -1 : 0;
            if (tracker.chi_at(site) != want) out.chi_pattern_ok = false;
        }
        tracker.step();
    }
    mpz_class num = tracker.interval_numerator(target.a, target.b);
    out.measured = mpq_class(abs(num), tracker.scale());
    out.measured.canonicalize();
    out.predicted = adversarial_predicted_value(steps, target);
    return out;
}

}  // namespace liarwalk
