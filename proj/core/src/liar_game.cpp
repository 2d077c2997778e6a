#include "liarwalk/liar_game.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "liarwalk/errors.hpp"

namespace liarwalk {

mpz_class state_vector::total() const {
    mpz_class s = 0;
    for (const auto& v : x) s += v;
    return s;
}

void state_vector::validate() const {
    require_input(!x.empty(), "state vector must have at least one entry");
    for (const auto& v : x)
        require_input(v >= 0, "state vector entries must be nonnegative");
}

position_vector position_of(const state_vector& x, unsigned long max_materialize) {
    x.validate();
    mpz_class m = x.total();
    if (m > max_materialize)
        throw resource_limit_error("position vector would materialize " + m.get_str() +
                                   " entries (cap " + std::to_string(max_materialize) + ")");
    position_vector u;
    u.u.reserve(m.get_ui());
    for (std::size_t i = 0; i < x.x.size(); ++i) {
        unsigned long c = x.x[i].get_ui();
        u.u.insert(u.u.end(), c, static_cast<long long>(i));
    }
    return u;
}

state_vector state_of(const position_vector& u, long e) {
    require_input(e >= 0, "max lie count must be nonnegative");
    require_input(std::is_sorted(u.u.begin(), u.u.end()),
                  "position vector must be nondecreasing");
    state_vector x;
    x.x.assign(static_cast<std::size_t>(e) + 1, mpz_class(0));
    for (long long lies : u.u) {
        require_input(lies >= 0, "position vector entries must be nonnegative here");
        if (lies <= e) x.x[static_cast<std::size_t>(lies)] += 1;
    }
    return x;
}

namespace {

// a + R(b): R right-shifts one slot, dropping the last coordinate.
state_vector add_shifted(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    state_vector out;
    out.x = a;
    for (std::size_t i = 1; i < out.x.size(); ++i) out.x[i] += b[i - 1];
    return out;
}

}  // namespace

state_vector apply_question(const state_vector& x, const question_vector& a, answer_t ans) {
    x.validate();
    require_input(a.a.size() == x.x.size(), "question and state must have equal length");
    std::vector<mpz_class> rest(x.x.size());
    for (std::size_t i = 0; i < x.x.size(); ++i) {
        require_input(a.a[i] >= 0 && a.a[i] <= x.x[i],
                      "question entries must satisfy 0 <= a(i) <= x(i)");
        rest[i] = x.x[i] - a.a[i];
    }
    return ans == answer_t::yes ? add_shifted(a.a, rest) : add_shifted(rest, a.a);
}

namespace {

position_vector bump_and_sort(const position_vector& u, std::size_t first_index) {
    position_vector out = u;
    for (std::size_t j = first_index; j < out.u.size(); j += 2) out.u[j] += 1;
    std::sort(out.u.begin(), out.u.end());
    return out;
}

}  // namespace

position_vector odd_pos(const position_vector& u) { return bump_and_sort(u, 0); }

position_vector even_pos(const position_vector& u) { return bump_and_sort(u, 1); }

bool leq(const position_vector& u, const position_vector& v) {
    require_input(u.u.size() == v.u.size(),
                  "partial order compares equal-length position vectors only");
    long long su = 0, sv = 0;
    for (std::size_t j = 0; j < u.u.size(); ++j) {
        su += u.u[j];
        sv += v.u[j];
        if (su > sv) return false;
    }
    return true;
}

position_vector majorize_step(const position_vector& u, const position_vector& v) {
    require_input(leq(u, v) && !(u == v), "majorize_step needs u < v in the partial order");
    position_vector out = u;
    long long su = 0, sv = 0;
    for (std::size_t j = 0; j < u.u.size(); ++j) {
        su += u.u[j];
        sv += v.u[j];
    }
    if (su < sv) {
        out.u.back() += sv - su;  // Step 1: close the sum deficit at the last entry
    } else {
        // Step 2: equal sums; lift the rightmost shortfall from the nearest
        // surplus to its right.
        std::size_t j = u.u.size();
        for (std::size_t i = u.u.size(); i-- > 0;) {
            if (u.u[i] < v.u[i]) {
                j = i;
                break;
            }
        }
        require_internal(j < u.u.size(), "equal sums with u != v must have a shortfall");
        std::size_t k = u.u.size();
        for (std::size_t i = j + 1; i < u.u.size(); ++i) {
            if (u.u[i] > v.u[i]) {
                k = i;
                break;
            }
        }
        require_internal(k < u.u.size(), "no surplus right of the last shortfall");
        out.u[j] += 1;
        out.u[k] -= 1;
    }
    require_internal(std::is_sorted(out.u.begin(), out.u.end()),
                     "majorize_step output must stay nondecreasing");
    require_internal(leq(out, v), "majorize_step output must stay below v");
    return out;
}

std::vector<position_vector> majorize_chain(const position_vector& u,
                                            const position_vector& v) {
    require_input(leq(u, v), "majorize_chain needs u <= v");
    std::vector<position_vector> chain{u};
    // Convergence: Step 1 fires at most once; every Step 2 shrinks the total
    // prefix-sum gap by at least 1.
    long long gap = 0, pu = 0, pv = 0;
    for (std::size_t j = 0; j < u.u.size(); ++j) {
        pu += u.u[j];
        pv += v.u[j];
        gap += pv - pu;
    }
    long long fuel = gap + 2 + static_cast<long long>(u.u.size()) * (gap + 1);
    while (!(chain.back() == v)) {
        require_internal(fuel-- > 0, "majorize_chain failed to converge");
        chain.push_back(majorize_step(chain.back(), v));
    }
    return chain;
}

question_vector alternating_question(const state_vector& x, unsigned long max_materialize) {
    position_vector u = position_of(x, max_materialize);
    question_vector a;
    a.a.assign(x.x.size(), mpz_class(0));
    for (std::size_t j = 1; j < u.u.size(); j += 2) {
        long long lies = u.u[j];
        require_internal(lies >= 0 && lies < static_cast<long long>(a.a.size()),
                         "state-derived position entries stay within 0..e");
        a.a[static_cast<std::size_t>(lies)] += 1;
    }
    return a;
}

std::vector<state_vector> odd_strategy_run(const state_vector& x0, unsigned long n,
                                           unsigned long max_materialize) {
    long e = x0.e();
    position_vector u = position_of(x0, max_materialize);
    std::vector<state_vector> states{x0};
    states.reserve(n + 1);
    for (unsigned long s = 0; s < n; ++s) {
        u = odd_pos(u);
        states.push_back(state_of(u, e));
    }
    return states;
}

namespace {

struct solver_ctx {
    std::map<std::pair<std::vector<mpz_class>, unsigned long>, bool> memo;
    unsigned long long nodes = 0;
    unsigned long max_nodes = 0;
    unsigned long max_questions = 0;
};

// Canonical representative of the a <-> x-a symmetry: the lexicographically
// larger of the pair, i.e. 2a >= x at the first index where they differ.
bool canonical_question(const std::vector<mpz_class>& a, const std::vector<mpz_class>& x) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(2 * a[i], x[i]);
        if (c != 0) return c > 0;
    }
    return true;
}

// Lexicographic successor with per-coordinate bounds x; false once exhausted.
bool next_question(std::vector<mpz_class>& a, const std::vector<mpz_class>& x) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] < x[i]) {
            a[i] += 1;
            return true;
        }
        a[i] = 0;
    }
    return false;
}

bool node_wins(solver_ctx& ctx, const std::vector<mpz_class>& x, unsigned long rounds,
               question_vector* record_first) {
    mpz_class sum = 0;
    for (const auto& v : x) sum += v;
    if (sum == 0) return false;
    if (rounds == 0) return true;
    auto key = std::make_pair(x, rounds);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
    if (++ctx.nodes > ctx.max_nodes)
        throw resource_limit_error("solver expanded more than " +
                                   std::to_string(ctx.max_nodes) + " positions");
    mpz_class question_count = 1;
    for (const auto& v : x) question_count *= v + 1;
    if (question_count > ctx.max_questions)
        throw resource_limit_error("node has " + question_count.get_str() +
                                   " questions (cap " + std::to_string(ctx.max_questions) + ")");
    state_vector xs;
    xs.x = x;
    std::vector<mpz_class> a(x.size(), mpz_class(0));
    bool win = false;
    do {
        if (!canonical_question(a, x)) continue;
        question_vector q{a};
        state_vector yes = apply_question(xs, q, answer_t::yes);
        state_vector no = apply_question(xs, q, answer_t::no);
        if (node_wins(ctx, yes.x, rounds - 1, nullptr) &&
            node_wins(ctx, no.x, rounds - 1, nullptr)) {
            if (record_first) *record_first = q;
            win = true;
            break;
        }
    } while (next_question(a, x));
    ctx.memo.emplace(std::move(key), win);
    return win;
}

}  // namespace

solve_result solve_game(const state_vector& x0, unsigned long n, long e,
                        unsigned long max_nodes, unsigned long max_questions_per_node) {
    x0.validate();
    require_input(x0.e() == e, "state vector length must be e+1");
    solver_ctx ctx;
    ctx.max_nodes = max_nodes;
    ctx.max_questions = max_questions_per_node;
    solve_result result;
    question_vector first;
    result.paul_wins = node_wins(ctx, x0.x, n, &first);
    if (result.paul_wins && !first.a.empty()) result.first_question = std::move(first);
    result.nodes_expanded = ctx.nodes;
    return result;
}

namespace {

bool dominated_leaves(const position_vector& u, unsigned long depth,
                      const position_vector& top) {
    if (depth == 0) return leq(u, top);
    return dominated_leaves(odd_pos(u), depth - 1, top) &&
           dominated_leaves(even_pos(u), depth - 1, top);
}

}  // namespace

bool verify_carole_dominance(const state_vector& x0, unsigned long n,
                             unsigned long max_rounds, unsigned long max_materialize) {
    if (n > max_rounds)
        throw resource_limit_error("dominance check over 2^" + std::to_string(n) +
                                   " leaves exceeds the cap of 2^" + std::to_string(max_rounds));
    position_vector u0 = position_of(x0, max_materialize);
    position_vector top = u0;
    for (unsigned long s = 0; s < n; ++s) top = odd_pos(top);
    return dominated_leaves(u0, n, top);
}

chip_configuration reduction_config(const state_vector& x0) {
    x0.validate();
    chip_configuration f;
    f.parity = parity_class::even;
    f.step = 0;
    for (std::size_t i = 0; i < x0.x.size(); ++i)
        if (x0.x[i] != 0) f.set(2 * static_cast<long>(i), x0.x[i]);
    return f;
}

state_vector machine_readout(const chip_configuration& f, long e) {
    require_input(e >= 0, "max lie count must be nonnegative");
    state_vector x;
    x.x.reserve(static_cast<std::size_t>(e) + 1);
    for (long i = 0; i <= e; ++i) x.x.push_back(f.at(-f.step + 2 * i));
    return x;
}

bool machine_win_check(const state_vector& x0, unsigned long n, unsigned long max_window) {
    chip_configuration f = liar_run(reduction_config(x0), n, max_window);
    long e = x0.e();
    long s = static_cast<long>(n);
    return interval_sum(f, -s, -s + 2 * e) >= 1;
}

bool machine_win_check(const mpz_class& M, unsigned long n, long e, unsigned long max_window) {
    require_input(M >= 0, "chip count must be nonnegative");
    require_input(e >= 0, "max lie count must be nonnegative");
    state_vector x0;
    x0.x.assign(static_cast<std::size_t>(e) + 1, mpz_class(0));
    x0.x[0] = M;
    return machine_win_check(x0, n, max_window);
}

}  // namespace liarwalk
