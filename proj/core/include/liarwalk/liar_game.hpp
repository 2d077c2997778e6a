#pragma once

// The pathological liar game.  Paul asks binary questions about a search
// space of M elements; Carole may lie, each element tolerating at most e
// lies; Paul wins after n rounds if at least one element survives.  States
// are histograms x(i) = number of elements carrying i lies; positions are
// sorted per-element lie counts carrying the prefix-sum partial order.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "liarwalk/chip_config.hpp"
#include "liarwalk/limits.hpp"

namespace liarwalk {

struct state_vector {
    std::vector<mpz_class> x;  // x[i] = elements with i lies, i = 0..e

    long e() const { return static_cast<long>(x.size()) - 1; }
    mpz_class total() const;
    void validate() const;  // nonempty, entries >= 0
};

struct question_vector {
    std::vector<mpz_class> a;  // componentwise 0 <= a <= x of the paired state

    bool operator==(const question_vector&) const = default;
};

// Sorted per-element lie counts.  Entries > e mark disqualified elements;
// entries as low as -2 appear only inside the sentinel-padding machinery.
// Entries are small (bounded by e plus the round count), so plain integers.
struct position_vector {
    std::vector<long long> u;

    bool operator==(const position_vector&) const = default;
};

enum class answer_t { yes, no };

// u(j) = min{ k : sum_{i<=k} x(i) >= j }, i.e. x(i) copies of each i.
position_vector position_of(const state_vector& x,
                            unsigned long max_materialize = default_max_materialize);

// x(i) = #{ j : u(j) = i } for 0 <= i <= e; entries above e are dropped.
state_vector state_of(const position_vector& u, long e);

// yes -> a + R(x-a); no -> (x-a) + R(a); R right-shifts, dropping the last entry.
state_vector apply_question(const state_vector& x, const question_vector& a, answer_t ans);

// Add 1 to the entries at odd (resp. even) 1-based indices, then re-sort.
position_vector odd_pos(const position_vector& u);
position_vector even_pos(const position_vector& u);

// Prefix-sum domination; error on length mismatch.
bool leq(const position_vector& u, const position_vector& v);

// One step of the chain transformation: given u < v (strictly, under leq),
// returns u' with u < u' <= v.  Step 1 adds the sum deficit to the last
// entry; with equal sums, Step 2 increments the largest j with u(j) < v(j)
// and decrements the smallest k > j with u(k) > v(k).
position_vector majorize_step(const position_vector& u, const position_vector& v);

// Iterated majorize_step from u up to v, endpoints included.
std::vector<position_vector> majorize_chain(const position_vector& u,
                                            const position_vector& v);

// Paul's alternating question: elements at even 1-based position-vector
// indices form the answer class A0; a(i) counts those with i lies.
question_vector alternating_question(const state_vector& x,
                                     unsigned long max_materialize = default_max_materialize);

// Trajectory x0, x1, ..., xn under Paul's alternating question and Carole's
// odd response (n+1 states; round s satisfies x_s(i) = f_s(-s+2i)).
std::vector<state_vector> odd_strategy_run(const state_vector& x0, unsigned long n,
                                           unsigned long max_materialize = default_max_materialize);

struct solve_result {
    bool paul_wins = false;
    std::optional<question_vector> first_question;  // lex-smallest canonical winner
    unsigned long long nodes_expanded = 0;
};

// Exact minimax: Paul wins iff some question wins against both answers.
// Memoized on (state, rounds remaining); questions are enumerated in lex
// order, restricted to canonical representatives a >= x-a of the complement
// symmetry.  Caps: total positions evaluated, and per-node question count.
solve_result solve_game(const state_vector& x0, unsigned long n, long e,
                        unsigned long max_nodes = default_max_nodes,
                        unsigned long max_questions_per_node = 1ul << 20);

// Exhaustively checks odd^n(u0) >= every leaf of the 2^n-leaf response tree.
bool verify_carole_dominance(const state_vector& x0, unsigned long n,
                             unsigned long max_rounds = 24,
                             unsigned long max_materialize = default_max_materialize);

// The game-to-machine reduction: x(i) chips at site 2i (M at the origin for
// the canonical (M,0,...,0) start).
chip_configuration reduction_config(const state_vector& x0);

// x_s(i) = f_s(-s+2i) for i = 0..e, where s = f.step.
state_vector machine_readout(const chip_configuration& f, long e);

// Seeds M chips at the origin, runs n steps, tests sum_{i=0}^{e} f_n(-n+2i) >= 1.
bool machine_win_check(const mpz_class& M, unsigned long n, long e,
                       unsigned long max_window = default_max_window);

// General-x0 variant through the same reduction.
bool machine_win_check(const state_vector& x0, unsigned long n,
                       unsigned long max_window = default_max_window);

}  // namespace liarwalk
