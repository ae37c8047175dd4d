#include "legr/front_model.hpp"

#include "legr/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace legr {

SliceEvent SliceEvent::left_cusp(int pos, int mu) {
    SliceEvent e;
    e.kind = EventKind::LeftCusp;
    e.pos = pos;
    e.mu = mu;
    return e;
}

SliceEvent SliceEvent::right_cusp(int pos, bool bp) {
    SliceEvent e;
    e.kind = EventKind::RightCusp;
    e.pos = pos;
    e.basepoint = bp;
    return e;
}

SliceEvent SliceEvent::crossing(int pos) {
    SliceEvent e;
    e.kind = EventKind::Crossing;
    e.pos = pos;
    return e;
}

SliceEvent SliceEvent::marking(int pos) {
    SliceEvent e;
    e.kind = EventKind::Marking;
    e.pos = pos;
    return e;
}

SliceEvent SliceEvent::vertex(int pos, int l, int r, std::vector<int> right_mu, bool lbp) {
    SliceEvent e;
    e.kind = EventKind::Vertex;
    e.pos = pos;
    e.left = l;
    e.right = r;
    e.right_mu = std::move(right_mu);
    e.basepoint = lbp;
    return e;
}

SliceEvent SliceEvent::base_point(int pos, int sign) {
    SliceEvent e;
    e.kind = EventKind::BasePoint;
    e.pos = pos;
    e.sign = sign < 0 ? -1 : 1;
    return e;
}

bool SliceEvent::operator==(const SliceEvent& o) const {
    if (kind != o.kind || pos != o.pos) return false;
    switch (kind) {
    case EventKind::LeftCusp: return mu == o.mu;
    case EventKind::RightCusp: return basepoint == o.basepoint;
    case EventKind::Crossing:
    case EventKind::Marking: return true;
    case EventKind::Vertex:
        return left == o.left && right == o.right && right_mu == o.right_mu && basepoint == o.basepoint;
    case EventKind::BasePoint: return sign == o.sign;
    }
    return false;
}

std::vector<int> SliceTrace::strand_counts() const {
    std::vector<int> out;
    out.reserve(mu.size());
    for (const auto& m : mu) out.push_back(static_cast<int>(m.size()));
    return out;
}

namespace {

[[noreturn]] void fail(ErrorCode c, std::size_t k, const std::string& msg) {
    throw Error(c, "event " + std::to_string(k) + ": " + msg);
}

}  // namespace

SliceTrace validate(const FrontDiagram& d) {
    if (d.left_arity < 0 || static_cast<int>(d.left_mu.size()) != d.left_arity)
        throw Error(ErrorCode::PotentialMismatch, "left border has " + std::to_string(d.left_mu.size()) +
                                                      " potentials for arity " + std::to_string(d.left_arity));
    SliceTrace t;
    t.mu.reserve(d.events.size() + 1);
    std::vector<int> cur = d.left_mu;
    for (std::size_t k = 0; k < d.events.size(); ++k) {
        t.mu.push_back(cur);
        const SliceEvent& e = d.events[k];
        const int n = static_cast<int>(cur.size());
        const int p = e.pos;
        switch (e.kind) {
        case EventKind::LeftCusp:
            if (p < 1 || p > n + 1) fail(ErrorCode::IndexOutOfRange, k, "left cusp at " + std::to_string(p));
            cur.insert(cur.begin() + (p - 1), {e.mu, e.mu - 1});
            break;
        case EventKind::RightCusp:
            if (p < 1 || p + 1 > n) fail(ErrorCode::IndexOutOfRange, k, "right cusp at " + std::to_string(p));
            if (cur[p - 1] != cur[p] + 1)
                fail(ErrorCode::PotentialMismatchAtRightCusp, k,
                     "potentials " + std::to_string(cur[p - 1]) + "," + std::to_string(cur[p]));
            cur.erase(cur.begin() + (p - 1), cur.begin() + (p + 1));
            break;
        case EventKind::Crossing:
        case EventKind::Marking:
            if (p < 1 || p + 1 > n) fail(ErrorCode::IndexOutOfRange, k, "crossing at " + std::to_string(p));
            std::swap(cur[p - 1], cur[p]);
            break;
        case EventKind::Vertex: {
            if (e.left < 0 || e.right < 0 || e.left + e.right < 1)
                fail(ErrorCode::EmptyVertex, k, "vertex needs at least one half-edge");
            if (static_cast<int>(e.right_mu.size()) != e.right)
                fail(ErrorCode::PotentialMismatch, k, "vertex right potentials do not match its valence");
            if (p < 1 || (e.left == 0 ? p > n + 1 : p + e.left - 1 > n))
                fail(ErrorCode::IndexOutOfRange, k, "vertex at " + std::to_string(p));
            cur.erase(cur.begin() + (p - 1), cur.begin() + (p - 1 + e.left));
            cur.insert(cur.begin() + (p - 1), e.right_mu.begin(), e.right_mu.end());
            break;
        }
        case EventKind::BasePoint:
            if (p < 1 || p > n) fail(ErrorCode::IndexOutOfRange, k, "base point at " + std::to_string(p));
            break;
        }
    }
    t.mu.push_back(cur);
    return t;
}

FrontDiagram concatenate(const FrontDiagram& a, const FrontDiagram& b) {
    SliceTrace ta = validate(a);
    validate(b);
    if (ta.right_arity() != b.left_arity)
        throw Error(ErrorCode::ArityMismatch,
                    std::to_string(ta.right_arity()) + " vs " + std::to_string(b.left_arity));
    if (ta.right_mu() != b.left_mu) throw Error(ErrorCode::PotentialMismatch, "border potentials differ");
    FrontDiagram out = a;
    out.events.insert(out.events.end(), b.events.begin(), b.events.end());
    return out;
}

FrontDiagram closure(const FrontDiagram& d) {
    SliceTrace t = validate(d);
    FrontDiagram out;
    out.name = d.name;
    if (d.left_arity > 0) out.events.push_back(SliceEvent::vertex(1, 0, d.left_arity, d.left_mu));
    out.events.insert(out.events.end(), d.events.begin(), d.events.end());
    if (t.right_arity() > 0) out.events.push_back(SliceEvent::vertex(1, t.right_arity(), 0, {}));
    return out;
}

FrontDiagram trivial_tangle(const std::vector<int>& mu) {
    FrontDiagram d;
    d.name = "T" + std::to_string(mu.size());
    d.left_arity = static_cast<int>(mu.size());
    d.left_mu = mu;
    return d;
}

int count_basepoints(const FrontDiagram& d) {
    int c = 0;
    for (const auto& e : d.events) {
        if (e.kind == EventKind::BasePoint) ++c;
        if (e.kind == EventKind::RightCusp && e.basepoint) ++c;
        if (e.kind == EventKind::Vertex && e.basepoint) c += e.left;
    }
    return c;
}

int half_valency_sum(const FrontDiagram& d) {
    int twice = 0;
    for (const auto& e : d.events)
        if (e.kind == EventKind::Vertex) twice += e.left + e.right;
    return twice / 2;
}

int b_hat(const FrontDiagram& d) { return count_basepoints(d) + half_valency_sum(d); }

std::vector<int> BorderRuling::as_map() const {
    std::vector<int> m(n + 1, 0);
    for (auto [a, b] : pairs) {
        m[a] = b;
        m[b] = a;
    }
    return m;
}

BorderRuling BorderRuling::from_map(const std::vector<int>& partner) {
    BorderRuling r;
    r.n = static_cast<int>(partner.size()) - 1;
    for (int a = 1; a <= r.n; ++a)
        if (partner[a] > a) r.pairs.emplace_back(a, partner[a]);
    return r;
}

std::string BorderRuling::str() const {
    std::string s;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(pairs[i].first) + "-" + std::to_string(pairs[i].second);
    }
    return s;
}

BorderRuling parse_border_ruling(const std::string& text, int n) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    BorderRuling r;
    r.n = n;
    std::vector<int> seen(n + 1, 0);
    std::size_t i = 0;
    auto read_int = [&](void) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw Error(ErrorCode::InvalidInvolution, "bad border ruling '" + text + "'");
        return std::stoi(s.substr(start, i - start));
    };
    while (i < s.size()) {
        int a = read_int();
        if (i >= s.size() || s[i] != '-') throw Error(ErrorCode::InvalidInvolution, "expected '-' in '" + text + "'");
        ++i;
        int b = read_int();
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n || a == b || seen[a] || seen[b])
            throw Error(ErrorCode::InvalidInvolution, "'" + text + "' is not an involution on 1.." + std::to_string(n));
        seen[a] = seen[b] = 1;
        r.pairs.emplace_back(a, b);
        if (i < s.size()) {
            if (s[i] != ',') throw Error(ErrorCode::InvalidInvolution, "expected ',' in '" + text + "'");
            ++i;
        }
    }
    for (int a = 1; a <= n; ++a)
        if (!seen[a]) throw Error(ErrorCode::InvalidInvolution, "'" + text + "' leaves " + std::to_string(a) + " unpaired");
    std::sort(r.pairs.begin(), r.pairs.end());
    return r;
}

bool is_valid_border_ruling(const BorderRuling& r, const std::vector<int>& mu) {
    if (r.n != static_cast<int>(mu.size())) return false;
    std::vector<int> seen(r.n + 1, 0);
    for (auto [a, b] : r.pairs) {
        if (a < 1 || b > r.n || a >= b || seen[a] || seen[b]) return false;
        seen[a] = seen[b] = 1;
        if (mu[a - 1] - mu[b - 1] - 1 != 0) return false;
    }
    return 2 * static_cast<int>(r.pairs.size()) == r.n;
}

std::vector<std::vector<int>> enumerate_involutions(const std::vector<int>& mu, bool fixed_points_allowed) {
    const int n = static_cast<int>(mu.size());
    std::vector<std::vector<int>> out;
    std::vector<int> partner(n + 1, 0);
    std::function<void()> rec = [&]() {
        int a = 1;
        while (a <= n && partner[a] != 0) ++a;
        if (a > n) {
            out.push_back(partner);
            return;
        }
        if (fixed_points_allowed) {
            partner[a] = a;
            rec();
            partner[a] = 0;
        }
        for (int b = a + 1; b <= n; ++b) {
            if (partner[b] != 0 || mu[a - 1] - mu[b - 1] - 1 != 0) continue;
            partner[a] = b;
            partner[b] = a;
            rec();
            partner[a] = partner[b] = 0;
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BorderRuling> enumerate_border_rulings(const std::vector<int>& mu) {
    std::vector<BorderRuling> out;
    if (mu.size() % 2) return out;
    for (const auto& m : enumerate_involutions(mu, false)) out.push_back(BorderRuling::from_map(m));
    std::sort(out.begin(), out.end());
    return out;
}

FrontDiagram split_basepoint(const FrontDiagram& d, const Site& site) {
    validate(d);
    if (site.event < 0 || site.event >= static_cast<int>(d.events.size()))
        throw Error(ErrorCode::InvalidSite, "no event " + std::to_string(site.event));
    const SliceEvent& e = d.events[site.event];
    FrontDiagram out = d;
    auto at = out.events.begin() + site.event;
    if (e.kind == EventKind::BasePoint) {
        out.events.insert(at + 1, SliceEvent::base_point(e.pos, e.sign));
    } else if (e.kind == EventKind::RightCusp && e.basepoint) {
        out.events.insert(at, SliceEvent::base_point(e.pos, 1));
    } else if (e.kind == EventKind::Vertex && site.half_edge >= 1 && site.half_edge <= e.left) {
        out.events.insert(at, SliceEvent::base_point(e.pos + site.half_edge - 1, 1));
    } else {
        throw Error(ErrorCode::InvalidSite, "event " + std::to_string(site.event) + " carries no base point or half-edge");
    }
    return out;
}

std::vector<Site> split_sites(const FrontDiagram& d) {
    std::vector<Site> out;
    for (int k = 0; k < static_cast<int>(d.events.size()); ++k) {
        const SliceEvent& e = d.events[k];
        if (e.kind == EventKind::BasePoint || (e.kind == EventKind::RightCusp && e.basepoint))
            out.push_back({k, 0});
        if (e.kind == EventKind::Vertex)
            for (int h = 1; h <= e.left; ++h) out.push_back({k, h});
    }
    return out;
}

}  // namespace legr
