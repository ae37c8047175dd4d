// legr: command line driver for the ruling / augmentation library.
// Exit codes: 0 ok, 1 a verification failed, 2 usage, parse or validation error.
#include "legr/augcount.hpp"
#include "legr/dsl.hpp"
#include "legr/errors.hpp"
#include "legr/json.hpp"
#include "legr/rulings.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

using namespace legr;
using nlohmann::json;

namespace {

struct Borders {
    std::string left, right, phi;
    bool all = false;
};

// thrown for bad flag values so they map to exit code 2
struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(t, &used));
            if (t.find_first_not_of(" \t", used) != std::string::npos) throw Usage("bad integer '" + t + "'");
        } catch (const std::logic_error&) {
            throw Usage("bad integer '" + t + "'");
        }
    }
    return out;
}

std::vector<long long> q_list(const std::string& s) {
    std::vector<long long> out;
    for (int q : int_list(s)) {
        if (q < 2) throw Usage("q must be at least 2");
        out.push_back(q);
    }
    return out;
}

BorderRuling border_from(const std::string& text, const std::vector<int>& mu, const char* side) {
    const int n = static_cast<int>(mu.size());
    if (text.empty()) {
        if (n == 0) return BorderRuling{};
        auto nr = enumerate_border_rulings(mu);
        if (nr.size() == 1) return nr[0];
        throw Usage(std::string("--") + side + " is required for this diagram (or pass --all-borders)");
    }
    BorderRuling r = parse_border_ruling(text, n);
    if (!is_valid_border_ruling(r, mu))
        throw Usage(std::string("--") + side + " " + text + " pairs strands whose potentials do not differ by one");
    return r;
}

// "1-6,2-5,3-4;1-2" : one involution per vertex, in event order
Resolution phi_from(const std::string& text, const FrontDiagram& d) {
    std::vector<std::pair<int, int>> types;
    for (const auto& e : d.events)
        if (e.kind == EventKind::Vertex) types.emplace_back(e.left, e.right);
    auto parts = split(text, ';');
    if (parts.size() != types.size())
        throw Usage("--phi needs " + std::to_string(types.size()) + " involutions separated by ';'");
    Resolution phi;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        auto [l, r] = types[k];
        BorderRuling b = parse_border_ruling(parts[k], l + r);
        phi.push_back(VertexInvolution{l, r, b.pairs});
    }
    return phi;
}

std::vector<std::pair<BorderRuling, BorderRuling>> border_pairs(const FrontDiagram& d, const Borders& b) {
    SliceTrace t = validate(d);
    std::vector<std::pair<BorderRuling, BorderRuling>> out;
    if (b.all) {
        for (const auto& e : ruling_matrix(d)) out.emplace_back(e.left, e.right);
        return out;
    }
    out.emplace_back(border_from(b.left, d.left_mu, "left"), border_from(b.right, t.right_mu(), "right"));
    return out;
}

void add_border_flags(CLI::App* sub, Borders& b, bool phi = true) {
    sub->add_option("--left", b.left, "left boundary ruling, e.g. 1-4,2-3");
    sub->add_option("--right", b.right, "right boundary ruling");
    sub->add_flag("--all-borders", b.all, "run over every pair of boundary rulings");
    if (phi) sub->add_option("--phi", b.phi, "restrict to one resolution, e.g. 1-6,2-5,3-4");
}

int cmd_parse(const std::string& path, bool as_json) {
    FrontDiagram d = parse_file(path);
    SliceTrace t = validate(d);
    if (as_json) {
        json j = json_of(d);
        j["right_mu"] = t.right_mu();
        j["b_hat"] = b_hat(d);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << serialize(d);
        std::cout << "# right border " << t.right_arity() << " [";
        for (std::size_t k = 0; k < t.right_mu().size(); ++k) std::cout << (k ? "," : "") << t.right_mu()[k];
        std::cout << "], B^ = " << b_hat(d) << "\n";
    }
    return 0;
}

int cmd_rulings(const std::string& path, const Borders& b, bool as_json) {
    FrontDiagram d = parse_file(path);
    Resolution phi;
    if (!b.phi.empty()) phi = phi_from(b.phi, d);
    json all = json::array();
    for (const auto& [L, R] : border_pairs(d, b)) {
        auto rs = enumerate_rulings(d, L, R, b.phi.empty() ? nullptr : &phi);
        if (as_json) {
            json rows = json::array();
            for (const auto& r : rs) rows.push_back(json_of(r));
            all.push_back({{"left", L.str()}, {"right", R.str()}, {"rulings", rows}});
            continue;
        }
        std::cout << "<" << L.str() << "| . |" << R.str() << ">: " << rs.size() << " rulings\n";
        for (const auto& r : rs) {
            std::cout << "  phi=";
            for (std::size_t k = 0; k < r.phi.size(); ++k) std::cout << (k ? ";" : "") << r.phi[k].str();
            std::cout << " switches=[";
            for (std::size_t k = 0; k < r.switches.size(); ++k) std::cout << (k ? "," : "") << r.switches[k];
            std::cout << "] chi=" << r.chi << " s=" << r.s << " r=" << r.r << " dep=" << r.dep << " A=" << r.A
                      << " weight=" << r.weight().str() << "\n";
        }
    }
    if (as_json) std::cout << all.dump() << "\n";
    return 0;
}

int cmd_rp(const std::string& path, const Borders& b, bool as_json) {
    FrontDiagram d = parse_file(path);
    Resolution phi;
    if (!b.phi.empty()) phi = phi_from(b.phi, d);
    json all = json::array();
    for (const auto& [L, R] : border_pairs(d, b)) {
        QZPolynomial p = ruling_polynomial(d, L, R, b.phi.empty() ? nullptr : &phi);
        if (as_json)
            all.push_back({{"left", L.str()}, {"right", R.str()}, {"poly", json_of(p)}});
        else if (b.all)
            std::cout << "<" << L.str() << "|R|" << R.str() << "> = " << p.str() << "\n";
        else
            std::cout << p.str() << "\n";
    }
    if (as_json) std::cout << (b.all ? all : all[0]).dump() << "\n";
    return 0;
}

int cmd_aug(const std::string& path, const Borders& b, const std::string& qs, bool as_json) {
    FrontDiagram d = parse_file(path);
    json all = json::array();
    for (const auto& [L, R] : border_pairs(d, b))
        for (long long q : q_list(qs)) {
            AugReport rep = aug_number(d, L, R, q);
            for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
            if (as_json) {
                json j = json_of(rep);
                j["left"] = L.str();
                j["right"] = R.str();
                all.push_back(j);
            } else {
                std::cout << "<" << L.str() << "|" << R.str() << "> q=" << q << " count=" << rep.count.str()
                          << " dim=" << rep.dim << " aug=" << rep.aug.str() << "\n";
            }
        }
    if (as_json) std::cout << all.dump() << "\n";
    return 0;
}

int cmd_bruteforce(const std::string& kind, const std::string& type, const std::string& mu_s, const std::string& qs,
                   bool all, bool as_json) {
    std::vector<int> mu = int_list(mu_s);
    json rows = json::array();
    bool agree = true;
    for (long long q : q_list(qs)) {
        auto p = static_cast<std::uint32_t>(q);
        if (!is_prime(p)) throw Usage("brute force needs a prime q, got " + std::to_string(q));
        BigInt brute, formula;
        if (kind == "trivial") {
            brute = brute_count_trivial(mu, p, !all);
            formula = formula_count_trivial(mu, p, !all);
        } else {
            std::vector<int> lr = int_list(type);
            if (lr.size() != 2 || lr[0] < 0 || lr[1] < 0) throw Usage("--type expects l,r");
            if (static_cast<int>(mu.size()) != lr[0] + lr[1]) throw Usage("--mu needs l + r entries");
            brute = brute_count_vertex(lr[0], lr[1], mu, p);
            formula = formula_count_vertex(lr[0], lr[1], mu, p);
        }
        agree = agree && brute == formula;
        if (as_json)
            rows.push_back({{"q", q}, {"brute", json_of(brute)}, {"formula", json_of(formula)}, {"agree", brute == formula}});
        else
            std::cout << "q=" << q << " brute=" << brute.str() << " formula=" << formula.str()
                      << (brute == formula ? " ok" : " MISMATCH") << "\n";
    }
    if (as_json) std::cout << rows.dump() << "\n";
    return agree ? 0 : 1;
}

int cmd_verify(const std::string& what, const std::vector<std::string>& files, const Borders& b, std::string qs,
               bool as_json) {
    if (files.empty()) throw Usage("verify needs a diagram file");
    bool ok = true;
    json rows = json::array();
    auto report = [&](const std::string& label, bool pass, const std::string& extra) {
        ok = ok && pass;
        if (as_json)
            rows.push_back({{"check", label}, {"ok", pass}, {"detail", extra}});
        else
            std::cout << (pass ? "ok   " : "FAIL ") << label << (extra.empty() ? "" : "  " + extra) << "\n";
    };
    FrontDiagram d = parse_file(files[0]);
    if (what == "gluing") {
        if (files.size() != 2) throw Usage("verify gluing takes two diagram files");
        FrontDiagram e = parse_file(files[1]);
        FrontDiagram whole = concatenate(d, e);
        for (const auto& row : ruling_matrix(whole)) {
            GluingReport g = verify_gluing(d, e, row.left, row.right);
            report("<" + row.left.str() + "|" + row.right.str() + ">", g.ok, g.lhs.str() + " vs " + g.rhs.str());
        }
    } else {
        if (files.size() != 1) throw Usage("verify " + what + " takes one diagram file");
        Borders bb = b;
        if (b.left.empty() && b.right.empty()) bb.all = true;
        auto pairs = border_pairs(d, bb);
        if (what == "theorem") {
            if (qs.empty()) qs = "2,3,5,7";
            for (const auto& [L, R] : pairs) {
                TheoremReport t = verify_main_theorem(d, L, R, q_list(qs));
                for (const auto& row : t.rows)
                    report("<" + L.str() + "|" + R.str() + "> q=" + std::to_string(row.q), row.ok,
                           "aug=" + row.aug.str() + " predicted=" + row.predicted.a.str() +
                               (row.predicted.b.is_zero() ? "" : " + " + row.predicted.b.str() + "*sqrt(q)"));
            }
        } else if (what == "basepoint") {
            if (qs.empty()) qs = "2,3";
            auto sites = split_sites(d);
            if (sites.empty()) throw Usage("the diagram has no base point or vertex half-edge to split");
            for (const auto& s : sites)
                for (const auto& [L, R] : pairs)
                    for (long long q : q_list(qs)) {
                        BasepointReport r = verify_basepoint_independence(d, s, L, R, q);
                        report("site " + std::to_string(s.event) + (s.half_edge ? "/" + std::to_string(s.half_edge) : "") +
                                   " <" + L.str() + "|" + R.str() + "> q=" + std::to_string(q),
                               r.ok, "");
                    }
        } else if (what == "polynomiality") {
            if (qs.empty()) qs = "2,3,5,7,11";
            for (const auto& [L, R] : pairs) {
                PolynomialityReport p = verify_polynomiality(d, L, R, q_list(qs));
                if (p.dim < 0) continue;  // no rulings, nothing to interpolate
                report("<" + L.str() + "|" + R.str() + ">", p.ok,
                       "degree=" + std::to_string(p.degree) + " dim=" + std::to_string(p.dim) + " points=" +
                           std::to_string(p.qs.size()));
            }
        } else {
            throw Usage("unknown check '" + what + "'");
        }
    }
    if (as_json) std::cout << json{{"ok", ok}, {"checks", rows}}.dump() << "\n";
    return ok ? 0 : 1;
}

int cmd_move(const std::string& path, int only, int apply, bool check, bool as_json) {
    FrontDiagram d = parse_file(path);
    std::vector<MoveSite> sites;
    for (int mv = 1; mv <= 6; ++mv)
        if (only == 0 || only == mv)
            for (const auto& s : find_move_sites(d, mv)) sites.push_back(s);
    if (apply >= 0) {
        if (apply >= static_cast<int>(sites.size())) throw Usage("no site " + std::to_string(apply));
        FrontDiagram e = apply_move(d, sites[apply]);
        std::cout << (as_json ? json_of(e).dump() + "\n" : serialize(e));
        return 0;
    }
    bool ok = true;
    json rows = json::array();
    auto before = ruling_matrix(d);
    for (std::size_t k = 0; k < sites.size(); ++k) {
        bool same = true;
        if (check) {
            auto after = ruling_matrix(apply_move(d, sites[k]));
            same = after.size() == before.size();
            for (std::size_t i = 0; same && i < after.size(); ++i) same = after[i].poly == before[i].poly;
            ok = ok && same;
        }
        if (as_json) {
            json j{{"index", k}, {"site", sites[k].str()}};
            if (check) j["invariant"] = same;
            rows.push_back(j);
        } else {
            std::cout << k << "  " << sites[k].str() << (check ? (same ? "  invariant" : "  CHANGED") : "") << "\n";
        }
    }
    if (as_json) std::cout << rows.dump() << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"legr: normal rulings and augmentation numbers of bordered Legendrian graphs"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output")->configurable(false);

    std::string file;
    Borders borders;
    std::string qs, aug_qs, bf_qs;

    auto* p_parse = app.add_subcommand("parse", "validate a diagram and print its canonical form");
    p_parse->add_option("file", file)->required();
    p_parse->add_flag("--json", as_json);

    auto* p_rul = app.add_subcommand("rulings", "list normal rulings with their statistics");
    p_rul->add_option("file", file)->required();
    add_border_flags(p_rul, borders);
    p_rul->add_flag("--json", as_json);

    auto* p_rp = app.add_subcommand("rp", "ruling polynomial");
    p_rp->add_option("file", file)->required();
    add_border_flags(p_rp, borders);
    p_rp->add_flag("--json", as_json);

    auto* p_aug = app.add_subcommand("aug", "augmentation numbers from the ruling stratification");
    p_aug->add_option("file", file)->required();
    add_border_flags(p_aug, borders, false);
    p_aug->add_option("--q", aug_qs, "comma separated list")->default_val("2");
    p_aug->add_flag("--json", as_json);

    std::string kind, type, mu;
    bool gnr = false;
    auto* p_bf = app.add_subcommand("bruteforce", "exhaustive point count against the stratified formula");
    p_bf->add_option("kind", kind, "trivial or vertex")->required()->check(CLI::IsMember({"trivial", "vertex"}));
    p_bf->add_option("--type", type, "vertex type l,r");
    p_bf->add_option("--mu", mu, "potentials, comma separated")->required();
    p_bf->add_option("--q", bf_qs, "primes, comma separated")->default_val("2");
    p_bf->add_flag("--all", gnr, "trivial: count every d with d^2 = 0, not only acyclic ones");
    p_bf->add_flag("--json", as_json);

    std::string what;
    std::vector<std::string> files;
    auto* p_ver = app.add_subcommand("verify", "check an identity; exit 1 on failure");
    p_ver->add_option("check", what, "theorem, gluing, basepoint or polynomiality")
        ->required()
        ->check(CLI::IsMember({"theorem", "gluing", "basepoint", "polynomiality"}));
    p_ver->add_option("files", files, "diagram file(s)")->required();
    add_border_flags(p_ver, borders, false);
    p_ver->add_option("--q", qs, "comma separated list");
    p_ver->add_flag("--json", as_json);

    int only = 0, apply = -1;
    bool check = false;
    auto* p_mv = app.add_subcommand("move", "list, apply or check front Reidemeister rewrites");
    p_mv->add_option("file", file)->required();
    p_mv->add_option("--move", only, "restrict to one move, 1..6")->check(CLI::Range(0, 6));
    p_mv->add_option("--apply", apply, "index of the site to rewrite; prints the new diagram");
    p_mv->add_flag("--check", check, "compare ruling polynomials before and after every site");
    p_mv->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*p_parse) return cmd_parse(file, as_json);
        if (*p_rul) return cmd_rulings(file, borders, as_json);
        if (*p_rp) return cmd_rp(file, borders, as_json);
        if (*p_aug) return cmd_aug(file, borders, aug_qs, as_json);
        if (*p_bf) {
            if (kind == "vertex" && type.empty()) throw Usage("bruteforce vertex needs --type l,r");
            return cmd_bruteforce(kind, type, mu, bf_qs, gnr, as_json);
        }
        if (*p_ver) return cmd_verify(what, files, borders, qs, as_json);
        if (*p_mv) return cmd_move(file, only, apply, check, as_json);
    } catch (const SyntaxError& e) {
        std::cerr << (*p_parse || *p_rul || *p_rp || *p_aug || *p_mv ? file : "input") << ":" << e.line() << ":"
                  << e.column() << ": syntax error: " << e.message() << "\n";
        return 2;
    } catch (const Usage& e) {
        std::cerr << "legr: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "legr: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
