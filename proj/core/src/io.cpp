#include "liarwalk/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "liarwalk/arith.hpp"
#include "liarwalk/errors.hpp"

namespace liarwalk {

const char* parity_name(parity_class p) {
    return p == parity_class::even ? "even" : "odd";
}

parity_class parse_parity(const std::string& name) {
    if (name == "even") return parity_class::even;
    if (name == "odd") return parity_class::odd;
    throw input_error("parity must be 'even' or 'odd', got '" + name + "'");
}

namespace {

long parse_long(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        long value = std::stol(text, &used);
        require_input(used == text.size(), std::string("trailing characters in ") + what);
        return value;
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error(std::string("cannot parse ") + what + " from '" + text + "'");
    }
}

mpz_class parse_mpz(const std::string& text, const char* what) {
    // mpz_set_str accepts an optional sign and decimal digits only (base 10).
    mpz_class value;
    require_input(!text.empty() &&
                      mpz_set_str(value.get_mpz_t(), text.c_str(), 10) == 0,
                  std::string("cannot parse ") + what + " from '" + text + "'");
    return value;
}

}  // namespace

void write_config(std::ostream& out, const chip_configuration& f) {
    out << "# parity=" << parity_name(f.parity) << " t=" << f.step << "\n";
    if (f.support_empty()) return;
    for (long site = f.support_min(); site <= f.support_max(); ++site) {
        const mpz_class& c = f.at(site);
        if (c != 0) out << site << "," << c << "\n";
    }
}

chip_configuration read_config(std::istream& in) {
    std::string line;
    require_input(static_cast<bool>(std::getline(in, line)), "empty configuration input");
    std::istringstream header(line);
    std::string hash, parity_field, t_field;
    header >> hash >> parity_field >> t_field;
    require_input(hash == "#" && parity_field.rfind("parity=", 0) == 0 &&
                      t_field.rfind("t=", 0) == 0,
                  "configuration header must be '# parity=<even|odd> t=<step>'");
    chip_configuration f;
    f.parity = parse_parity(parity_field.substr(7));
    f.step = parse_long(t_field.substr(2), "step");
    long previous_site = 0;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        require_input(comma != std::string::npos, "expected 'site,count': " + line);
        long site = parse_long(line.substr(0, comma), "site");
        mpz_class count = parse_mpz(line.substr(comma + 1), "count");
        require_input(count > 0, "counts in a configuration file must be positive");
        require_input(first || site > previous_site,
                      "configuration sites must be strictly increasing");
        require_input(site_matches(site, f.parity),
                      "site off the declared parity class: " + line);
        f.set(site, count);
        previous_site = site;
        first = false;
    }
    f.validate();
    return f;
}

chip_configuration parse_config_inline(const std::string& text) {
    require_input(text.size() >= 2 && text.front() == '{' && text.back() == '}',
                  "inline configuration must look like {site:count,...}");
    chip_configuration f;
    f.step = 0;
    std::string body = text.substr(1, text.size() - 2);
    bool parity_known = false;
    if (!body.empty()) {
        std::istringstream parts(body);
        std::string entry;
        while (std::getline(parts, entry, ',')) {
            auto colon = entry.find(':');
            require_input(colon != std::string::npos, "expected site:count, got '" + entry + "'");
            long site = parse_long(entry.substr(0, colon), "site");
            mpz_class count = parse_mpz(entry.substr(colon + 1), "count");
            require_input(count >= 0, "inline counts must be nonnegative");
            if (count == 0) continue;
            if (!parity_known) {
                f.parity = site % 2 == 0 ? parity_class::even : parity_class::odd;
                parity_known = true;
            }
            require_input(site_matches(site, f.parity),
                          "inline sites must share one parity class");
            require_input(f.at(site) == 0, "duplicate site in inline configuration");
            f.set(site, count);
        }
    }
    f.validate();
    return f;
}

chip_configuration load_config(const std::string& path_or_inline) {
    if (!path_or_inline.empty() && path_or_inline.front() == '{')
        return parse_config_inline(path_or_inline);
    std::ifstream in(path_or_inline);
    require_input(static_cast<bool>(in), "cannot open configuration file " + path_or_inline);
    return read_config(in);
}

void write_grid(std::ostream& out, const parity_grid& g) {
    g.validate();
    out << g.n_sites << " " << g.t_steps << " " << parity_name(g.support_parity) << "\n";
    for (long t = 0; t < g.t_steps; ++t) {
        for (long n = 0; n < g.n_sites; ++n) {
            if (!g.cell_valid(n, t))
                out << '.';
            else
                out << (g.bit(n, t) ? '1' : '0');
        }
        out << "\n";
    }
}

parity_grid read_grid(std::istream& in) {
    parity_grid g;
    std::string parity;
    require_input(static_cast<bool>(in >> g.n_sites >> g.t_steps >> parity),
                  "grid header must be 'N T parity'");
    g.support_parity = parse_parity(parity);
    require_input(g.n_sites >= 1 && g.t_steps >= 1, "grid needs N >= 1 and T >= 1");
    g.bits.assign(static_cast<std::size_t>(g.n_sites) * g.t_steps, 0);
    std::string line;
    std::getline(in, line);  // rest of the header line
    for (long t = 0; t < g.t_steps; ++t) {
        require_input(static_cast<bool>(std::getline(in, line)), "grid is missing rows");
        require_input(line.size() == static_cast<std::size_t>(g.n_sites),
                      "grid rows must have exactly N characters");
        for (long n = 0; n < g.n_sites; ++n) {
            char c = line[static_cast<std::size_t>(n)];
            require_input(c == '0' || c == '1' || c == '.',
                          "grid cells must be one of {0,1,.}");
            if (c == '1') g.set_bit(n, t, true);
        }
    }
    g.validate();
    return g;
}

void write_discrepancy_header(std::ostream& out) {
    out << "t,B,max_abs_num,max_abs_den,bound,ratio,argmax_site\n";
}

void write_discrepancy_row(std::ostream& out, const discrepancy_report& report) {
    out << report.t << "," << report.interval_width << "," << report.max_abs.get_num()
        << "," << report.max_abs.get_den() << "," << format_sig17(report.bound_value)
        << "," << format_sig17(report.ratio) << "," << report.argmax_site << "\n";
}

void write_bounds_header(std::ostream& out) {
    out << "n,f,F,n1,n2,F1,F2,sphere_num,sphere_den,m_machine,m_game,m_delsarte_piret\n";
}

void write_bounds_row(std::ostream& out, unsigned long n, const mpq_class& f,
                      const mpq_class& c_prime) {
    stage_split_result split = stage_split(n, f);
    mpq_class sphere = sphere_bound(n, f);
    out << n << "," << f.get_num() << "/" << f.get_den() << "," << split.F << ","
        << split.n1 << "," << split.n2 << "," << split.F1 << "," << split.F2 << ","
        << sphere.get_num() << "," << sphere.get_den() << ","
        << m_threshold_machine(n, f, c_prime) << "," << m_threshold_game(n, f, c_prime)
        << "," << m_delsarte_piret(n, f) << "\n";
}

namespace {

nlohmann::ordered_json mpz_json(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();  // out-of-range counts degrade to decimal strings
}

nlohmann::ordered_json vector_json(const std::vector<mpz_class>& values) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : values) arr.push_back(mpz_json(v));
    return arr;
}

}  // namespace

std::string game_round_json(unsigned long round, const question_vector& question,
                            answer_t answer, const state_vector& state) {
    nlohmann::ordered_json record;
    record["round"] = round;
    record["question"] = vector_json(question.a);
    record["answer"] = answer == answer_t::yes ? "yes" : "no";
    record["state"] = vector_json(state.x);
    return record.dump();
}

std::string solver_json(const solve_result& result) {
    nlohmann::ordered_json record;
    record["paul_wins"] = result.paul_wins;
    record["first_question"] =
        result.first_question ? vector_json(result.first_question->a)
                              : nlohmann::ordered_json(nullptr);
    record["nodes_expanded"] = result.nodes_expanded;
    return record.dump();
}

}  // namespace liarwalk
