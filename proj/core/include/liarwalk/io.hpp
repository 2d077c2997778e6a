#pragma once

// Flat-file formats: configuration and grid round-trip serialization, the
// CSV report schemas, and the JSON-lines game records.  All writers are
// deterministic (exact integers in decimal, reals via %.17g) so repeated
// runs are byte-identical.

#include <iosfwd>
#include <string>

#include "liarwalk/chip_config.hpp"
#include "liarwalk/combinatorics.hpp"
#include "liarwalk/discrepancy.hpp"
#include "liarwalk/liar_game.hpp"
#include "liarwalk/parity_forge.hpp"

namespace liarwalk {

const char* parity_name(parity_class p);
parity_class parse_parity(const std::string& name);

// Header "# parity=<even|odd> t=<step>", then one "site,count" line per
// occupied site, sorted by site.  Bit-exact round-trip.
void write_config(std::ostream& out, const chip_configuration& f);
chip_configuration read_config(std::istream& in);

// Inline form "{site:count,site:count,...}"; "{}" is the empty even-class
// configuration at step 0.
chip_configuration parse_config_inline(const std::string& text);

// Accepts an inline form (leading '{') or a path to a config file.
chip_configuration load_config(const std::string& path_or_inline);

// Header "N T parity", then T lines of N characters from {0,1,.} ('.' marks
// cells off the support parity class; row t on line t+1, site n left to right).
void write_grid(std::ostream& out, const parity_grid& g);
parity_grid read_grid(std::istream& in);

// CSV "t,B,max_abs_num,max_abs_den,bound,ratio,argmax_site".
void write_discrepancy_header(std::ostream& out);
void write_discrepancy_row(std::ostream& out, const discrepancy_report& report);

// CSV "n,f,F,n1,n2,F1,F2,sphere_num,sphere_den,m_machine,m_game,m_delsarte_piret";
// f and the sphere bound are exact rationals (f printed as num/den).
void write_bounds_header(std::ostream& out);
void write_bounds_row(std::ostream& out, unsigned long n, const mpq_class& f,
                      const mpq_class& c_prime);

// One JSON-lines record per game round / solver result.
std::string game_round_json(unsigned long round, const question_vector& question,
                            answer_t answer, const state_vector& state);
std::string solver_json(const solve_result& result);

}  // namespace liarwalk
