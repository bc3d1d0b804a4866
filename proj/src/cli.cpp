#include "aperiodic/cli.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aperiodic/automaton.hpp"
#include "aperiodic/operators.hpp"
#include "aperiodic/schreier.hpp"
#include "aperiodic/spectra.hpp"
#include "aperiodic/words.hpp"

namespace aperiodic::cli {

namespace {

// Locale-free shortest round-trip formatting.
std::string fmt(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

WeightParams parse_params(const std::string& s) {
    double vals[4];
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        const std::size_t next = s.find(',', pos);
        const std::string piece =
            next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos);
        const char* b = piece.data();
        const char* e = b + piece.size();
        const auto res = std::from_chars(b, e, vals[i]);
        if (res.ec != std::errc{} || res.ptr != e)
            throw std::invalid_argument("--params expects four comma-separated reals, got '" +
                                        s + "'");
        if (i < 3) {
            if (next == std::string::npos)
                throw std::invalid_argument("--params expects four comma-separated reals");
            pos = next + 1;
        } else if (next != std::string::npos) {
            throw std::invalid_argument("--params expects four comma-separated reals");
        }
    }
    return WeightParams{vals[0], vals[1], vals[2], vals[3]};
}

void require_in_P(const WeightParams& p) {
    if (!p.in_P())
        throw std::domain_error(
            "parameters outside P: need t != 0, u+v != 0, u+w != 0, v+w != 0");
}

double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
}

nlohmann::ordered_json window_json(const Window& w) {
    return {{"offset", w.offset}, {"letters", to_string(w.letters)}};
}

struct Output {
    std::string path;  // empty = stdout
    std::string buffer;

    void flush() {
        if (path.empty()) {
            std::cout << buffer;
            std::cout.flush();
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open output file: " + path);
            f << buffer;
        }
    }
};

// ---- subcommand bodies ----

std::string run_word_gen(std::int64_t p, std::int64_t eta, const std::string& word,
                         const std::string& sub, std::int64_t iters, bool do_reflect) {
    int sources = (p >= 0) + (eta >= 0) + (!word.empty() ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument("word gen: give exactly one of --p, --eta, --word");
    Word w;
    if (p >= 0)
        w = p_n(static_cast<int>(p));
    else if (eta >= 0)
        w = eta_prefix(static_cast<std::size_t>(eta));
    else
        w = word_from_string(word);
    if (iters > 0) {
        const SubstitutionRule* rule = nullptr;
        if (sub == "tau")
            rule = &tau();
        else if (sub == "zeta")
            rule = &zeta();
        else
            throw std::invalid_argument("word gen: --sub must be tau or zeta");
        for (std::int64_t i = 0; i < iters; ++i) w = apply_substitution(*rule, w);
    }
    if (do_reflect) w = reflect(w);
    return to_string(w) + "\n";
}

std::string run_word_complexity(std::int64_t max, std::int64_t subwords) {
    std::string out;
    if (subwords >= 1) {
        for (const Word& w : enumerate_subwords(static_cast<std::size_t>(subwords)))
            out += to_string(w) + "\n";
        return out;
    }
    if (max < 1) throw std::invalid_argument("word complexity: --max must be >= 1");
    const auto counts = complexity_range(static_cast<std::size_t>(max));
    out = "L,complexity,closed_form\n";
    for (std::int64_t L = 1; L <= max; ++L)
        out += std::to_string(L) + "," + std::to_string(counts[static_cast<std::size_t>(L - 1)]) +
               "," + std::to_string(complexity_closed_form(static_cast<std::size_t>(L))) + "\n";
    return out;
}

std::string run_word_index(std::int64_t scan) {
    const IndexReport rep = max_index_scan(static_cast<std::size_t>(scan));
    std::string out = "scan_length=" + std::to_string(scan) + "\n";
    if (!rep.found()) {
        out += "index=none\n";
        return out;
    }
    out += "index=" + rep.index.str() + "\n";
    out += "word=" + to_string(rep.word) + "\n";
    out += "position=" + std::to_string(rep.position) + "\n";
    return out;
}

std::string run_word_partition(std::int64_t length, std::int64_t n, std::int64_t offset) {
    if (length < 1) throw std::invalid_argument("word partition: --length must be >= 1");
    Window w{eta_prefix(static_cast<std::size_t>(length)), offset};
    const PartitionClass pc = n_partition(w, static_cast<int>(n));
    return "residue=" + std::to_string(pc.residue) + "\nmodulus=" + std::to_string(pc.modulus) +
           "\n";
}

std::string run_word_special(std::int64_t L) {
    std::string out;
    for (const RightSpecialWord& rs : right_special_words(static_cast<std::size_t>(L))) {
        out += to_string(rs.word) + " ";
        for (Letter l : rs.extensions) out += to_char(l);
        out += "\n";
    }
    return out;
}

std::string run_word_window(const std::string& s, std::int64_t radius, bool do_reflect) {
    Window w = special_word_window(letter_from_char(s.at(0)), radius);
    if (do_reflect) w = reflect_origin(std::move(w));
    return window_json(w).dump(2) + "\n";
}

std::string run_word_frequency(std::int64_t L) {
    std::string out;
    for (const auto& [l, f] : letter_frequency(static_cast<std::size_t>(L))) {
        out += to_char(l);
        out += " " + f.str() + "\n";
    }
    return out;
}

std::string run_word_repetitivity(std::int64_t max_l, std::int64_t text) {
    std::string out = "L,window,per_length,cumulative\n";
    for (const auto& row :
         repetitivity_table(static_cast<std::size_t>(max_l), static_cast<std::size_t>(text)))
        out += std::to_string(row.L) + "," + std::to_string(row.window_needed) + "," +
               row.per_length.str() + "," + row.cumulative.str() + "\n";
    return out;
}

std::string run_automaton_check(std::int64_t n, std::int64_t fnq, std::int64_t state,
                                int& exit_code) {
    if (fnq >= 1) {
        return to_string(label_block(static_cast<int>(fnq), static_cast<int>(state))) + "\n";
    }
    if (n < 1) throw std::invalid_argument("automaton check: --n must be >= 1");
    const Word eta = eta_prefix(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const Letter got = automaton_letter(static_cast<std::uint64_t>(i));
        if (got != eta[static_cast<std::size_t>(i)]) {
            exit_code = 1;
            return "MISMATCH at " + std::to_string(i) + ": automaton=" +
                   std::string(1, to_char(got)) + " eta=" +
                   std::string(1, to_char(eta[static_cast<std::size_t>(i)])) + "\n";
        }
    }
    return "OK n=" + std::to_string(n) + "\n";
}

std::string graph_output(const LabeledLinearGraph& g, const std::string& format) {
    if (format == "dot") return to_dot(g);
    if (format == "json") return to_json(g);
    throw std::invalid_argument("--format must be dot or json");
}

std::string run_graph_gamma(std::int64_t n, const std::string& format) {
    return graph_output(gamma_n(static_cast<int>(n)), format);
}

std::string run_graph_word(const std::string& letters, std::int64_t offset, std::int64_t theta_n,
                           const std::string& format) {
    Window w{word_from_string(letters), offset};
    LabeledLinearGraph g = graph_of_word(w);
    for (std::int64_t i = 0; i < theta_n; ++i) g = theta(g);
    return graph_output(g, format);
}

std::string run_graph_act(const std::string& g, const std::string& s, std::int64_t radius) {
    if (radius <= 0) radius = 2 * static_cast<std::int64_t>(g.size()) + 4;
    const Window before = special_word_window(letter_from_char(s.at(0)), radius);
    const Window after = act_group_word(g, before);
    nlohmann::ordered_json j;
    j["group_word"] = g;
    j["before"] = window_json(before);
    j["after"] = window_json(after);
    j["shift"] = before.offset - after.offset;  // net power of T applied
    return j.dump(2) + "\n";
}

std::string run_group_relator(std::int64_t k, const std::string& base, std::int64_t verify,
                              std::int64_t seed, int& exit_code) {
    const GroupWord* basew = nullptr;
    if (base == "ad")
        basew = &relator_ad_4;
    else if (base == "adacac")
        basew = &relator_adacac_4;
    else
        throw std::invalid_argument("group relator: --base must be ad or adacac");
    const GroupWord rel = lysenok_relator(static_cast<int>(k), *basew);
    std::string out = rel + "\n";
    if (verify > 0) {
        const std::int64_t len = 2 * static_cast<std::int64_t>(rel.size()) + 16;
        const std::size_t budget = std::size_t{1} << 20;
        const Word text = eta_prefix(budget);
        std::mt19937_64 eng(static_cast<std::uint64_t>(seed));
        std::int64_t violations = 0;
        for (std::int64_t i = 0; i < verify; ++i) {
            const std::int64_t start = static_cast<std::int64_t>(
                eng() % (budget - static_cast<std::size_t>(len)));
            Window w{Word(text.begin() + start, text.begin() + start + len), 1 - len / 2};
            const Window moved = act_group_word(rel, w);
            if (!(moved == w)) ++violations;
        }
        out += "verify: " + std::to_string(verify) + " windows, " +
               std::to_string(violations) + " violations\n";
        if (violations > 0) exit_code = 1;
    }
    return out;
}

std::string run_spectrum_tower(std::int64_t n, const WeightParams& p, double tol,
                               std::int64_t workers, const std::string& format) {
    require_in_P(p);
    const auto tower = spectrum_tower(static_cast<int>(n), p, tol, static_cast<int>(workers));
    if (format == "svg") return tower_svg(tower);
    if (format != "csv") throw std::invalid_argument("--format must be csv or svg");
    std::string out = "n,index,eigenvalue\n";
    for (const auto& est : tower)
        for (std::size_t i = 0; i < est.eigenvalues.size(); ++i)
            out += std::to_string(est.level) + "," + std::to_string(i + 1) + "," +
                   fmt(est.eigenvalues[i]) + "\n";
    return out;
}

std::string run_spectrum_measure(std::int64_t n, const WeightParams& p, double tol,
                                 std::int64_t workers) {
    require_in_P(p);
    const auto tower = spectrum_tower(static_cast<int>(n), p, tol, static_cast<int>(workers));
    std::string out = "n,eps,measure\n";
    for (const auto& est : tower) {
        const double eps = est.hull_width() * std::ldexp(1.0, -est.level);
        out += std::to_string(est.level) + "," + fmt(eps) + "," +
               fmt(measure_estimate(est.eigenvalues, eps)) + "\n";
    }
    return out;
}

std::string run_spectrum_ids(std::int64_t n, const WeightParams& p, double tol,
                             std::int64_t workers, std::int64_t grid) {
    require_in_P(p);
    if (grid < 1) throw std::invalid_argument("spectrum ids: --grid must be >= 1");
    const auto tower = spectrum_tower(static_cast<int>(n), p, tol, static_cast<int>(workers));
    const auto& est = tower.back();
    std::string out = "E,ids\n";
    for (std::int64_t i = 0; i <= grid; ++i) {
        const double E =
            est.hull_min + (est.hull_max - est.hull_min) * static_cast<double>(i) /
                               static_cast<double>(grid);
        out += fmt(E) + "," + ids(est.eigenvalues, E).str() + "\n";
    }
    return out;
}

std::string run_spectrum_section(const std::string& s, std::int64_t radius,
                                 const std::string& letters, std::int64_t offset,
                                 const WeightParams& p, double tol, bool eigs,
                                 const std::string& format) {
    require_in_P(p);
    Window w;
    if (!letters.empty())
        w = Window{word_from_string(letters), offset};
    else
        w = special_word_window(letter_from_char(s.at(0)), radius);
    const JacobiMatrix m = finite_section(w, p);
    if (eigs) {
        const auto ev = eigenvalues(m, tol);
        std::string out = "index,eigenvalue\n";
        for (std::size_t i = 0; i < ev.size(); ++i)
            out += std::to_string(i + 1) + "," + fmt(ev[i]) + "\n";
        return out;
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["diagonal"] = m.diagonal;
        j["off_diagonal"] = m.off_diagonal;
        return j.dump(2) + "\n";
    }
    if (format != "csv") throw std::invalid_argument("--format must be csv or json");
    std::string out = "diagonal,off_diagonal\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += fmt(m.diagonal[i]) + ",";
        if (i < m.off_diagonal.size()) out += fmt(m.off_diagonal[i]);
        out += "\n";
    }
    return out;
}

std::string run_gordon_check(const std::string& s, std::int64_t m_max, std::int64_t energies,
                             const WeightParams& p, std::int64_t seed, std::int64_t hull_level,
                             double tol, int& exit_code) {
    require_in_P(p);
    std::vector<Letter> ss;
    if (s == "all")
        ss = {Letter::x, Letter::y, Letter::z};
    else
        ss = {letter_from_char(s.at(0))};
    const auto tower = spectrum_tower(static_cast<int>(hull_level), p, tol, 0);
    const auto& eigs = tower.back().eigenvalues;
    const double lo = eigs.front(), hi = eigs.back();

    std::mt19937_64 eng(static_cast<std::uint64_t>(seed));
    std::string out = "s,m,scale,energy,log2_ratio,det_error,holds\n";
    bool all_hold = true;
    for (Letter letter : ss) {
        for (const GordonWitness& wit : gordon_witnesses(letter, static_cast<int>(m_max))) {
            for (std::int64_t i = 0; i < energies; ++i) {
                const double E = uniform(eng, lo, hi);
                const double phi = uniform(eng, 0.0, 6.283185307179586);
                const auto rep =
                    gordon_growth_check(wit, E, p, std::cos(phi), std::sin(phi));
                all_hold = all_hold && rep.bound_holds;
                out += std::string(1, to_char(wit.s)) + "," + std::to_string(wit.m) + "," +
                       std::to_string(wit.scale) + "," + fmt(E) + "," + fmt(rep.log2_ratio) +
                       "," + fmt(rep.det_error) + "," + (rep.bound_holds ? "1" : "0") + "\n";
            }
        }
    }
    if (!all_hold) exit_code = 1;
    return out;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"substitution subshift, Schreier graphs and aperiodic Jacobi spectra"};
    app.require_subcommand(1);

    Output output;
    app.add_option("--out", output.path, "write output to a file instead of stdout");
    int exit_code = 0;

    // shared option storage
    std::int64_t opt_p = -1, opt_eta = -1, opt_iters = 0, opt_max = -1, opt_subwords = -1;
    std::int64_t opt_scan = 65536, opt_length = -1, opt_n = -1, opt_offset = 1;
    std::int64_t opt_L = -1, opt_radius = 0, opt_maxl = 256, opt_text = 262144;
    std::int64_t opt_fnq = -1, opt_state = 0, opt_theta = 0, opt_verify = 0;
    std::int64_t opt_seed = 12345, opt_k = 0, opt_workers = 0, opt_grid = 64;
    std::int64_t opt_mmax = 2, opt_energies = 10, opt_hull_level = 10;
    std::string opt_word, opt_sub = "tau", opt_s = "x", opt_letters, opt_format;
    std::string opt_base = "ad", opt_params;
    double opt_tol = 1e-12;
    bool opt_reflect = false, opt_eigs = false;

    // word
    auto* word = app.add_subcommand("word", "substitution language operations");
    word->require_subcommand(1);
    auto* wgen = word->add_subcommand("gen", "generate words");
    wgen->add_option("--p", opt_p, "level of the palindromic prefix block p(n)");
    wgen->add_option("--eta", opt_eta, "length of the fixed-point prefix");
    wgen->add_option("--word", opt_word, "explicit word over a,x,y,z");
    wgen->add_option("--sub", opt_sub, "substitution to iterate: tau or zeta");
    wgen->add_option("--iters", opt_iters, "number of substitution applications");
    wgen->add_flag("--reflect", opt_reflect, "reverse the result");
    wgen->callback([&] {
        output.buffer = run_word_gen(opt_p, opt_eta, opt_word, opt_sub, opt_iters, opt_reflect);
    });

    auto* wcomp = word->add_subcommand("complexity", "factor counts vs the closed form");
    wcomp->add_option("--max", opt_max, "table of lengths 1..max as CSV");
    wcomp->add_option("--subwords", opt_subwords, "list all factors of this length instead");
    wcomp->callback([&] { output.buffer = run_word_complexity(opt_max, opt_subwords); });

    auto* windex = word->add_subcommand("index", "maximal fractional-power index scan");
    windex->add_option("--scan", opt_scan, "prefix length to scan");
    windex->callback([&] { output.buffer = run_word_index(opt_scan); });

    auto* wpart = word->add_subcommand("partition", "block-decomposition residue class");
    wpart->add_option("--length", opt_length, "window length (prefix of the fixed point)")
        ->required();
    wpart->add_option("--n", opt_n, "decomposition level")->required();
    wpart->add_option("--offset", opt_offset, "absolute position of the first letter");
    wpart->callback([&] { output.buffer = run_word_partition(opt_length, opt_n, opt_offset); });

    auto* wspec = word->add_subcommand("special", "right-special factors with extensions");
    wspec->add_option("--L", opt_L, "factor length")->required();
    wspec->callback([&] { output.buffer = run_word_special(opt_L); });

    auto* wwin = word->add_subcommand("window", "two-sided special-word window");
    wwin->add_option("--s", opt_s, "distinguished letter: x, y or z");
    wwin->add_option("--radius", opt_radius, "covered positions [-radius, radius+1]")
        ->required();
    wwin->add_flag("--reflect-origin", opt_reflect, "apply the origin reflection i -> 1-i");
    wwin->callback([&] { output.buffer = run_word_window(opt_s, opt_radius, opt_reflect); });

    auto* wfreq = word->add_subcommand("frequency", "letter frequencies in a prefix");
    wfreq->add_option("--L", opt_L, "prefix length")->required();
    wfreq->callback([&] { output.buffer = run_word_frequency(opt_L); });

    auto* wrep = word->add_subcommand("repetitivity", "linear-repetitivity constants");
    wrep->add_option("--max-l", opt_maxl, "largest factor length (power of two)");
    wrep->add_option("--text", opt_text, "prefix length scanned");
    wrep->callback([&] { output.buffer = run_word_repetitivity(opt_maxl, opt_text); });

    // automaton
    auto* automaton = app.add_subcommand("automaton", "binary-expansion generator");
    automaton->require_subcommand(1);
    auto* acheck = automaton->add_subcommand("check", "verify agreement with the fixed point");
    acheck->add_option("--n", opt_n, "number of positions to verify")->default_val(1048576);
    acheck->add_option("--fnq", opt_fnq, "print end-state labels of all inputs of this length");
    acheck->add_option("--state", opt_state, "start state for --fnq (0..3)");
    acheck->callback([&] {
        output.buffer = run_automaton_check(opt_n, opt_fnq, opt_state, exit_code);
    });

    // graph
    auto* graph = app.add_subcommand("graph", "rooted labeled linear graphs");
    graph->require_subcommand(1);
    auto* ggamma = graph->add_subcommand("gamma", "level-n graph");
    ggamma->add_option("--n", opt_n, "level (2^n vertices)")->required();
    ggamma->add_option("--format", opt_format, "dot or json")->default_val("json");
    ggamma->callback([&] { output.buffer = run_graph_gamma(opt_n, opt_format); });

    auto* gword = graph->add_subcommand("word", "graph of a window, optionally substituted");
    gword->add_option("--letters", opt_letters, "gap word over a,x,y,z")->required();
    gword->add_option("--offset", opt_offset, "absolute position of the first letter");
    gword->add_option("--theta", opt_theta, "apply the graph substitution this many times");
    gword->add_option("--format", opt_format, "dot or json")->default_val("json");
    gword->callback([&] {
        output.buffer = run_graph_word(opt_letters, opt_offset, opt_theta, opt_format);
    });

    auto* gact = graph->add_subcommand("act", "generator word acting on a window");
    gact->add_option("--g", opt_word, "word over the generators a,b,c,d")->required();
    gact->add_option("--s", opt_s, "special-word letter for the base window");
    gact->add_option("--radius", opt_radius, "window radius (0 = derive from |g|)");
    gact->callback([&] { output.buffer = run_graph_act(opt_word, opt_s, opt_radius); });

    // group
    auto* group = app.add_subcommand("group", "group-word utilities");
    group->require_subcommand(1);
    auto* grel = group->add_subcommand("relator", "relators of the finite presentation");
    grel->add_option("--k", opt_k, "substitution applications");
    grel->add_option("--base", opt_base, "ad (for (ad)^4) or adacac (for (adacac)^4)");
    grel->add_option("--verify", opt_verify, "check identity action on this many windows");
    grel->add_option("--seed", opt_seed, "sampling seed");
    grel->callback([&] {
        output.buffer = run_group_relator(opt_k, opt_base, opt_verify, opt_seed, exit_code);
    });

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the level operators");
    spectrum->require_subcommand(1);
    auto add_spec_common = [&](CLI::App* cmd) {
        cmd->add_option("--params", opt_params, "t,u,v,w edge weights")->required();
        cmd->add_option("--tol", opt_tol, "bisection tolerance (times hull width)");
        cmd->add_option("--workers", opt_workers, "worker threads (0 = hardware)");
    };
    auto* stower = spectrum->add_subcommand("tower", "eigenvalues for levels 1..n");
    stower->add_option("--n", opt_n, "largest level")->required();
    add_spec_common(stower);
    stower->add_option("--format", opt_format, "csv or svg")->default_val("csv");
    stower->callback([&] {
        output.buffer = run_spectrum_tower(opt_n, parse_params(opt_params), opt_tol,
                                           opt_workers, opt_format);
    });

    auto* smeasure = spectrum->add_subcommand("measure", "eps-cover measures per level");
    smeasure->add_option("--n", opt_n, "largest level")->required();
    add_spec_common(smeasure);
    smeasure->callback([&] {
        output.buffer =
            run_spectrum_measure(opt_n, parse_params(opt_params), opt_tol, opt_workers);
    });

    auto* sids = spectrum->add_subcommand("ids", "integrated density of states table");
    sids->add_option("--n", opt_n, "level")->required();
    add_spec_common(sids);
    sids->add_option("--grid", opt_grid, "number of energy intervals");
    sids->callback([&] {
        output.buffer =
            run_spectrum_ids(opt_n, parse_params(opt_params), opt_tol, opt_workers, opt_grid);
    });

    auto* ssection = spectrum->add_subcommand("section", "finite section of a window");
    ssection->add_option("--s", opt_s, "special-word letter for the window");
    ssection->add_option("--radius", opt_radius, "window radius");
    ssection->add_option("--letters", opt_letters, "explicit window letters instead");
    ssection->add_option("--offset", opt_offset, "offset for --letters");
    add_spec_common(ssection);
    ssection->add_flag("--eigs", opt_eigs, "print eigenvalues instead of the matrix");
    ssection->add_option("--format", opt_format, "csv or json")->default_val("csv");
    ssection->callback([&] {
        if (opt_letters.empty() && opt_radius <= 0)
            throw std::invalid_argument("spectrum section: give --letters or --radius");
        output.buffer = run_spectrum_section(opt_s, opt_radius, opt_letters, opt_offset,
                                             parse_params(opt_params), opt_tol, opt_eigs,
                                             opt_format);
    });

    // gordon
    auto* gordon = app.add_subcommand("gordon", "three-block growth bound");
    gordon->require_subcommand(1);
    auto* gcheck = gordon->add_subcommand("check", "transfer-matrix growth at witnesses");
    gcheck->add_option("--s", opt_s, "witness letter: x, y, z or all")->default_val("all");
    gcheck->add_option("--m-max", opt_mmax, "largest witness rank");
    gcheck->add_option("--energies", opt_energies, "sampled energies per witness");
    gcheck->add_option("--params", opt_params, "t,u,v,w edge weights")->required();
    gcheck->add_option("--seed", opt_seed, "sampling seed");
    gcheck->add_option("--level", opt_hull_level, "level whose spectrum spans the energy range");
    gcheck->add_option("--tol", opt_tol, "bisection tolerance (times hull width)");
    gcheck->callback([&] {
        output.buffer = run_gordon_check(opt_s, opt_mmax, opt_energies,
                                         parse_params(opt_params), opt_seed, opt_hull_level,
                                         opt_tol, exit_code);
    });

    // let --out (registered on the root) appear after any subcommand
    const auto enable_fallthrough = [](CLI::App* a, const auto& self) -> void {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough(true);
            self(sub, self);
        }
    };
    enable_fallthrough(&app, enable_fallthrough);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 64;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }

    try {
        output.flush();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace aperiodic::cli
