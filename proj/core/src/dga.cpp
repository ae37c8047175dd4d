#include "legr/dga.hpp"

#include "legr/errors.hpp"
#include "legr/rulings.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace legr {

namespace {

void add_into(NCPoly& acc, const Word& w, std::int64_t c) {
    if (c == 0) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) acc.erase(it);
}

}  // namespace

int koszul_sign(int degree) { return ((degree - 1) % 2 == 0) ? 1 : -1; }

int DGA::add_generator(Generator g) {
    gens_.push_back(std::move(g));
    diff_.emplace_back();
    return static_cast<int>(gens_.size()) - 1;
}

void DGA::set_differential(int gen, NCPoly d) { diff_.at(gen) = std::move(d); }

int DGA::find(const std::string& name) const {
    for (std::size_t k = 0; k < gens_.size(); ++k)
        if (gens_[k].name == name) return static_cast<int>(k);
    return -1;
}

int DGA::word_degree(const Word& w) const {
    int s = 0;
    for (int g : w) s += gens_.at(g).degree;
    return s;
}

NCPoly DGA::apply(const NCPoly& p) const {
    NCPoly out;
    for (const auto& [w, c] : p) {
        int prefix_deg = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            // d(xy) = d(x) y + (-1)^{|x|} x d(y)
            std::int64_t sign = (prefix_deg % 2 == 0) ? 1 : -1;
            for (const auto& [dw, dc] : diff_.at(w[k])) {
                Word nw(w.begin(), w.begin() + k);
                nw.insert(nw.end(), dw.begin(), dw.end());
                nw.insert(nw.end(), w.begin() + k + 1, w.end());
                add_into(out, nw, sign * c * dc);
            }
            prefix_deg += gens_.at(w[k]).degree;
        }
    }
    return out;
}

std::vector<int> DGA::d_squared_failures() const {
    std::vector<int> bad;
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (!apply(diff_[g]).empty()) bad.push_back(static_cast<int>(g));
    return bad;
}

std::vector<int> DGA::degree_failures() const {
    std::vector<int> bad;
    for (std::size_t g = 0; g < gens_.size(); ++g)
        for (const auto& [w, c] : diff_[g])
            if (word_degree(w) != gens_[g].degree - 1) {
                bad.push_back(static_cast<int>(g));
                break;
            }
    return bad;
}

std::map<int, NCPoly> DGA::differential_in_degree(int degree) const {
    std::map<int, NCPoly> out;
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (gens_[g].degree == degree) out[static_cast<int>(g)] = diff_[g];
    return out;
}

std::string poly_str(const DGA& dga, const NCPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p) {
        std::int64_t mag = c < 0 ? -c : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (mag != 1 || w.empty()) os << mag;
        for (std::size_t k = 0; k < w.size(); ++k)
            os << ((k || mag != 1) ? "*" : "") << dga.generators()[w[k]].name;
    }
    return os.str();
}

std::string DGA::to_json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [w, c] : diff_[g]) {
            nlohmann::json word = nlohmann::json::array();
            for (int x : w) word.push_back(gens_[x].name);
            terms.push_back({{"c", c}, {"word", word}});
        }
        gens.push_back({{"name", gens_[g].name}, {"degree", gens_[g].degree}, {"d", terms}});
    }
    return nlohmann::json{{"generators", gens}}.dump();
}

DGA build_border_dga(const std::vector<int>& mu) {
    const int n = static_cast<int>(mu.size());
    DGA dga;
    std::vector<std::vector<int>> id(n + 1, std::vector<int>(n + 1, -1));
    for (int gap = 1; gap < n; ++gap)
        for (int a = 1; a + gap <= n; ++a) {
            int b = a + gap;
            id[a][b] = dga.add_generator(
                {"k" + std::to_string(a) + "_" + std::to_string(b), mu[a - 1] - mu[b - 1] - 1, a, b});
        }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            NCPoly d;
            for (int c = a + 1; c < b; ++c)
                add_into(d, {id[a][c], id[c][b]}, koszul_sign(dga.generators()[id[a][c]].degree));
            dga.set_differential(id[a][b], std::move(d));
        }
    return dga;
}

InternalDGA build_internal_dga(int l, int r, const std::vector<int>& mu_v) {
    const int n = l + r;
    if (n < 1) throw Error(ErrorCode::EmptyVertex, "vertex needs at least one half-edge");
    if (static_cast<int>(mu_v.size()) != n) throw Error(ErrorCode::ArityMismatch, "potential list does not match valency");
    InternalDGA out{l, r, mu_v, 0, {}};
    // degrees grow by 2 per full turn, so the last i with degree <= 1 is within reach
    int N = 0;
    for (int a = 1; a <= n; ++a)
        for (int i = 1; i <= n; ++i) {
            int deg = vertex_generator_degree(mu_v, l, r, a, i);
            if (deg <= 1) N = std::max(N, i + n * ((1 - deg) / 2));
        }
    out.window = N + n;
    std::vector<std::vector<int>> id(n + 1, std::vector<int>(out.window + 1, -1));
    for (int i = 1; i <= out.window; ++i)
        for (int a = 1; a <= n; ++a)
            id[a][i] = out.dga.add_generator({"v" + std::to_string(a) + "_" + std::to_string(i),
                                              vertex_generator_degree(mu_v, l, r, a, i), a, i});
    for (int i = 1; i <= out.window; ++i)
        for (int a = 1; a <= n; ++a) {
            NCPoly d;
            if (i == n) add_into(d, {}, 1);
            for (int i1 = 1; i1 < i; ++i1) {
                int a2 = (a - 1 + i1) % n + 1;
                int x = id[a][i1];
                add_into(d, {x, id[a2][i - i1]}, koszul_sign(out.dga.generators()[x].degree));
            }
            out.dga.set_differential(id[a][i], std::move(d));
        }
    return out;
}

std::vector<int> normalize_to_zero_left(int l, int r, const std::vector<int>& mu_v) {
    std::vector<int> out = mu_v;
    for (int a = 0; a < l && a < static_cast<int>(out.size()); ++a) out[a] += 1;
    (void)r;
    return out;
}

bool inclusion_is_chain_map(const std::vector<int>& mu, std::string* why) {
    const int n = static_cast<int>(mu.size());
    if (n == 0) return true;
    DGA border = build_border_dga(mu);
    InternalDGA in = build_internal_dga(0, n, mu);
    std::vector<int> image(border.generators().size());
    for (std::size_t g = 0; g < image.size(); ++g) {
        const Generator& k = border.generators()[g];
        image[g] = in.dga.find("v" + std::to_string(k.a) + "_" + std::to_string(k.b - k.a));
        if (image[g] < 0 || in.dga.generators()[image[g]].degree != k.degree) {
            if (why) *why = "degree of " + k.name + " is not preserved";
            return false;
        }
    }
    auto push = [&](const NCPoly& p) {
        NCPoly out;
        for (const auto& [w, c] : p) {
            Word nw;
            for (int x : w) nw.push_back(image[x]);
            add_into(out, nw, c);
        }
        return out;
    };
    for (std::size_t g = 0; g < image.size(); ++g) {
        if (push(border.differential(static_cast<int>(g))) != in.dga.differential(image[g])) {
            if (why) *why = "d does not commute on " + border.generators()[g].name;
            return false;
        }
    }
    return true;
}

BigInt count_augmentations(const DGA& dga, std::uint32_t p) {
    PrimeField f(p);
    const auto& gens = dga.generators();
    std::vector<int> slot(gens.size(), -1);
    int unknowns = 0;
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (gens[g].degree == 0) slot[g] = unknowns++;
    if (unknowns > 26) throw Error(ErrorCode::InvalidArgument, "too many degree-0 generators for brute force");

    struct Equation {
        std::vector<std::pair<std::uint32_t, std::vector<int>>> terms;  // coefficient, unknown slots
    };
    std::vector<std::vector<Equation>> ready_at(unknowns);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].degree != 1) continue;
        Equation e;
        int last = -1;
        for (const auto& [w, c] : dga.differential(static_cast<int>(g))) {
            std::vector<int> slots;
            bool alive = true;
            for (int x : w) {
                if (slot[x] < 0) {
                    alive = false;
                    break;
                }
                slots.push_back(slot[x]);
            }
            if (!alive) continue;
            for (int s : slots) last = std::max(last, s);
            e.terms.emplace_back(f.from_int(c), std::move(slots));
        }
        if (e.terms.empty()) continue;
        if (last < 0) {
            std::uint32_t s = 0;
            for (const auto& t : e.terms) s = f.add(s, t.first);
            if (s) return 0;
            continue;
        }
        ready_at[last].push_back(std::move(e));
    }
    std::vector<std::uint32_t> val(unknowns, 0);
    BigInt count = 0;
    std::function<void(int)> rec = [&](int k) {
        if (k == unknowns) {
            ++count;
            return;
        }
        for (std::uint32_t x = 0; x < p; ++x) {
            val[k] = x;
            bool ok = true;
            for (const auto& e : ready_at[k]) {
                std::uint32_t s = 0;
                for (const auto& [c, slots] : e.terms) {
                    std::uint32_t t = c;
                    for (int u : slots) t = f.mul(t, val[u]);
                    s = f.add(s, t);
                }
                if (s) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(k + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace legr
