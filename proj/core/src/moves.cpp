// Front Reidemeister rewrites as local pattern replacements on the event list.
//
// Each variant is a pair (lhs, rhs) of event windows built from a few
// parameters read off the first event of the side being matched. Forward
// replaces lhs by rhs, Backward replaces rhs by lhs.
#include "legr/errors.hpp"
#include "legr/front_model.hpp"

#include <optional>

namespace legr {

namespace {

using Events = std::vector<SliceEvent>;

struct Ctx {
    const Events& ev;
    int e;
    const std::vector<int>& mu;  // potentials before event e
    MoveDirection dir;
    int strand;

    int n() const { return static_cast<int>(mu.size()); }
    const SliceEvent* at(int k) const {
        int i = e + k;
        return (i >= 0 && i < static_cast<int>(ev.size())) ? &ev[i] : nullptr;
    }
    bool is(int k, EventKind kind) const {
        const SliceEvent* x = at(k);
        return x && x->kind == kind;
    }
};

struct Pattern {
    Events lhs, rhs;
    int inv_strand = 0;  // strand parameter needed to undo the rewrite
};

struct Rewrite {
    int old_len = 0;
    Events replacement;
    int inv_strand = 0;
};

Events down_run(int hi, int lo) {  // X hi, X hi-1, ..., X lo
    Events out;
    for (int c = hi; c >= lo; --c) out.push_back(SliceEvent::crossing(c));
    return out;
}

Events up_run(int lo, int hi) {  // X lo, ..., X hi
    Events out;
    for (int c = lo; c <= hi; ++c) out.push_back(SliceEvent::crossing(c));
    return out;
}

Events cat(Events a, const Events& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

using Builder = std::optional<Pattern> (*)(const Ctx&);

bool fwd(const Ctx& c) { return c.dir == MoveDirection::Forward; }

// I: kink with one crossing <-> plain strand
std::optional<Pattern> move1(const Ctx& c, bool flipped) {
    int p;
    bool bp = false;
    if (fwd(c)) {
        if (!c.is(0, EventKind::LeftCusp)) return std::nullopt;
        p = c.at(0)->pos - (flipped ? 1 : 0);
        if (c.is(2, EventKind::RightCusp)) bp = c.at(2)->basepoint;
    } else {
        p = c.strand;
    }
    if (p < 1 || p > c.n()) return std::nullopt;
    int m = c.mu[p - 1];
    Pattern pt;
    if (!flipped)
        pt.lhs = {SliceEvent::left_cusp(p, m + 1), SliceEvent::crossing(p + 1), SliceEvent::right_cusp(p, bp)};
    else
        pt.lhs = {SliceEvent::left_cusp(p + 1, m), SliceEvent::crossing(p), SliceEvent::right_cusp(p + 1, bp)};
    if (bp) pt.rhs = {SliceEvent::base_point(p, 1)};
    pt.inv_strand = p;
    return pt;
}
std::optional<Pattern> move1a(const Ctx& c) { return move1(c, false); }
std::optional<Pattern> move1b(const Ctx& c) { return move1(c, true); }

// II: strand passing through a cusp
std::optional<Pattern> move2a(const Ctx& c) {
    if (!c.is(0, EventKind::LeftCusp)) return std::nullopt;
    int p = fwd(c) ? c.at(0)->pos : c.at(0)->pos - 1, m = c.at(0)->mu;
    if (p < 1 || p > c.n()) return std::nullopt;
    return Pattern{{SliceEvent::left_cusp(p, m), SliceEvent::crossing(p + 1), SliceEvent::crossing(p)},
                   {SliceEvent::left_cusp(p + 1, m)}};
}
std::optional<Pattern> move2b(const Ctx& c) {
    if (!c.is(0, EventKind::LeftCusp)) return std::nullopt;
    int p = fwd(c) ? c.at(0)->pos - 1 : c.at(0)->pos, m = c.at(0)->mu;
    if (p < 1 || p > c.n()) return std::nullopt;
    return Pattern{{SliceEvent::left_cusp(p + 1, m), SliceEvent::crossing(p), SliceEvent::crossing(p + 1)},
                   {SliceEvent::left_cusp(p, m)}};
}
std::optional<Pattern> move2c(const Ctx& c) {
    int p;
    bool bp;
    if (fwd(c)) {
        if (!c.is(0, EventKind::Crossing) || !c.is(2, EventKind::RightCusp)) return std::nullopt;
        p = c.at(0)->pos;
        bp = c.at(2)->basepoint;
    } else {
        if (!c.is(0, EventKind::RightCusp)) return std::nullopt;
        p = c.at(0)->pos - 1;
        bp = c.at(0)->basepoint;
    }
    if (p < 1 || p + 2 > c.n()) return std::nullopt;
    return Pattern{{SliceEvent::crossing(p), SliceEvent::crossing(p + 1), SliceEvent::right_cusp(p, bp)},
                   {SliceEvent::right_cusp(p + 1, bp)}};
}
std::optional<Pattern> move2d(const Ctx& c) {
    int p;
    bool bp;
    if (fwd(c)) {
        if (!c.is(0, EventKind::Crossing) || !c.is(2, EventKind::RightCusp)) return std::nullopt;
        p = c.at(0)->pos - 1;
        bp = c.at(2)->basepoint;
    } else {
        if (!c.is(0, EventKind::RightCusp)) return std::nullopt;
        p = c.at(0)->pos;
        bp = c.at(0)->basepoint;
    }
    if (p < 1 || p + 2 > c.n()) return std::nullopt;
    return Pattern{{SliceEvent::crossing(p + 1), SliceEvent::crossing(p), SliceEvent::right_cusp(p + 1, bp)},
                   {SliceEvent::right_cusp(p, bp)}};
}

// III: triple point
std::optional<Pattern> move3a(const Ctx& c) {
    if (!c.is(0, EventKind::Crossing)) return std::nullopt;
    int p = fwd(c) ? c.at(0)->pos : c.at(0)->pos - 1;
    if (p < 1 || p + 2 > c.n()) return std::nullopt;
    return Pattern{{SliceEvent::crossing(p), SliceEvent::crossing(p + 1), SliceEvent::crossing(p)},
                   {SliceEvent::crossing(p + 1), SliceEvent::crossing(p), SliceEvent::crossing(p + 1)}};
}

// V: strand passing through a vertex
std::optional<Pattern> move5(const Ctx& c, bool up) {
    auto build = [&](int p, const SliceEvent& v) -> std::optional<Pattern> {
        int l = v.left, r = v.right;
        if (p < 1) return std::nullopt;
        SliceEvent vl = v, vr = v;
        Pattern pt;
        if (up) {
            if (p + l > c.n()) return std::nullopt;
            vl.pos = p + 1;
            vr.pos = p;
            pt.lhs = cat(down_run(p + l - 1, p), {vl});
            pt.rhs = cat({vr}, down_run(p + r - 1, p));
        } else {
            if (p > c.n()) return std::nullopt;
            vl.pos = p;
            vr.pos = p + 1;
            pt.lhs = cat(up_run(p, p + l - 1), {vl});
            pt.rhs = cat({vr}, up_run(p, p + r - 1));
        }
        return pt;
    };
    if (fwd(c)) {
        for (int l = 0; c.at(l); ++l) {
            const SliceEvent* v = c.at(l);
            if (v->kind == EventKind::Vertex) {
                if (v->left != l) return std::nullopt;
                return build(up ? v->pos - 1 : v->pos, *v);
            }
            if (v->kind != EventKind::Crossing) return std::nullopt;
        }
        return std::nullopt;
    }
    if (!c.is(0, EventKind::Vertex)) return std::nullopt;
    const SliceEvent& v = *c.at(0);
    return build(up ? v.pos : v.pos - 1, v);
}
std::optional<Pattern> move5a(const Ctx& c) { return move5(c, true); }
std::optional<Pattern> move5b(const Ctx& c) { return move5(c, false); }

// V with a base point in place of a bivalent vertex
std::optional<Pattern> move5c(const Ctx& c) {
    int p, s;
    if (fwd(c)) {
        if (!c.is(0, EventKind::BasePoint)) return std::nullopt;
        p = c.at(0)->pos;
        s = c.at(0)->sign;
    } else {
        if (!c.is(0, EventKind::Crossing) || !c.is(1, EventKind::BasePoint)) return std::nullopt;
        p = c.at(0)->pos;
        s = c.at(1)->sign;
    }
    if (p < 1 || p + 1 > c.n()) return std::nullopt;
    return Pattern{{SliceEvent::base_point(p, s), SliceEvent::crossing(p)},
                   {SliceEvent::crossing(p), SliceEvent::base_point(p + 1, s)}};
}
std::optional<Pattern> move5d(const Ctx& c) {
    int p, s;
    if (fwd(c)) {
        if (!c.is(0, EventKind::BasePoint)) return std::nullopt;
        p = c.at(0)->pos - 1;
        s = c.at(0)->sign;
    } else {
        if (!c.is(0, EventKind::Crossing) || !c.is(1, EventKind::BasePoint)) return std::nullopt;
        p = c.at(0)->pos;
        s = c.at(1)->sign;
    }
    if (p < 1 || p + 1 > c.n()) return std::nullopt;
    return Pattern{{SliceEvent::base_point(p + 1, s), SliceEvent::crossing(p)},
                   {SliceEvent::crossing(p), SliceEvent::base_point(p, s)}};
}

// VI: a half-edge turned around through a cusp changes sides
std::optional<Pattern> move6ab(const Ctx& c, bool below) {
    auto build = [&](int p, int l, int r, int m, std::vector<int> R) -> std::optional<Pattern> {
        if (p < 1 || p + l - 1 > c.n()) return std::nullopt;
        Pattern pt;
        std::vector<int> Rn;
        if (below) {
            Rn.push_back(m);
            Rn.insert(Rn.end(), R.begin(), R.end());
            pt.lhs = cat(cat({SliceEvent::left_cusp(p + l, m)}, down_run(p + l - 1, p)),
                         {SliceEvent::vertex(p + 1, l + 1, r, R)});
        } else {
            Rn = R;
            Rn.push_back(m - 1);
            pt.lhs = cat(cat({SliceEvent::left_cusp(p, m)}, up_run(p + 1, p + l)),
                         {SliceEvent::vertex(p, l + 1, r, R)});
        }
        pt.rhs = {SliceEvent::vertex(p, l, r + 1, Rn)};
        return pt;
    };
    if (fwd(c)) {
        if (!c.is(0, EventKind::LeftCusp)) return std::nullopt;
        int cp = c.at(0)->pos, m = c.at(0)->mu;
        for (int l = 0; c.at(l + 1); ++l) {
            const SliceEvent* v = c.at(l + 1);
            if (v->kind == EventKind::Vertex) {
                if (v->left != l + 1 || v->basepoint) return std::nullopt;
                return build(below ? cp - l : cp, l, v->right, m, v->right_mu);
            }
            if (v->kind != EventKind::Crossing) return std::nullopt;
        }
        return std::nullopt;
    }
    if (!c.is(0, EventKind::Vertex)) return std::nullopt;
    const SliceEvent& v = *c.at(0);
    if (v.right < 1 || v.basepoint) return std::nullopt;
    std::vector<int> R = v.right_mu;
    int m;
    if (below) {
        m = R.front();
        R.erase(R.begin());
    } else {
        m = R.back() + 1;
        R.pop_back();
    }
    return build(v.pos, v.left, v.right - 1, m, R);
}
std::optional<Pattern> move6a(const Ctx& c) { return move6ab(c, true); }
std::optional<Pattern> move6b(const Ctx& c) { return move6ab(c, false); }

// mirror images: a right half-edge turns through a right cusp
std::optional<Pattern> move6cd(const Ctx& c, bool above) {
    if (!c.is(0, EventKind::Vertex)) return std::nullopt;
    const SliceEvent& v = *c.at(0);
    if (v.basepoint) return std::nullopt;
    int p, l, r, m;
    std::vector<int> R;
    if (fwd(c)) {
        if (v.right < 1) return std::nullopt;
        l = v.left;
        r = v.right - 1;
        R = v.right_mu;
        if (above) {
            p = v.pos - 1;
            if (p < 1) return std::nullopt;
            m = c.mu[p - 1];
            R.pop_back();
        } else {
            p = v.pos;
            m = R.front();
            R.erase(R.begin());
        }
    } else {
        if (v.left < 1) return std::nullopt;
        p = v.pos;
        l = v.left - 1;
        r = v.right;
        R = v.right_mu;
        m = above ? c.mu[p - 1] : c.mu[p + l - 1] + 1;
    }
    if (p < 1 || p + l > c.n()) return std::nullopt;
    if (above && c.mu[p - 1] != m) return std::nullopt;
    if (!above && c.mu[p + l - 1] != m - 1) return std::nullopt;
    Pattern pt;
    std::vector<int> Rl;
    if (above) {
        Rl = R;
        Rl.push_back(m - 1);
        pt.lhs = cat(cat({SliceEvent::vertex(p + 1, l, r + 1, Rl)}, up_run(p, p + r - 1)),
                     {SliceEvent::right_cusp(p + r, false)});
    } else {
        Rl.push_back(m);
        Rl.insert(Rl.end(), R.begin(), R.end());
        // the returning strand comes up from below the vertex to meet the top half-edge
        pt.lhs = cat(cat({SliceEvent::vertex(p, l, r + 1, Rl)}, down_run(p + r, p + 1)),
                     {SliceEvent::right_cusp(p, false)});
    }
    pt.rhs = {SliceEvent::vertex(p, l + 1, r, R)};
    return pt;
}
std::optional<Pattern> move6c(const Ctx& c) { return move6cd(c, true); }
std::optional<Pattern> move6d(const Ctx& c) { return move6cd(c, false); }

// VI with a base point in place of a bivalent vertex: base point around a cusp
std::optional<Pattern> move6e(const Ctx& c) {
    if (!c.is(0, EventKind::LeftCusp) || !c.is(1, EventKind::BasePoint)) return std::nullopt;
    int p = c.at(0)->pos, m = c.at(0)->mu, s = c.at(1)->sign;
    return Pattern{{SliceEvent::left_cusp(p, m), SliceEvent::base_point(p, s)},
                   {SliceEvent::left_cusp(p, m), SliceEvent::base_point(p + 1, s)}};
}
std::optional<Pattern> move6f(const Ctx& c) {
    if (!c.is(0, EventKind::BasePoint) || !c.is(1, EventKind::RightCusp)) return std::nullopt;
    const SliceEvent& rc = *c.at(1);
    int s = c.at(0)->sign;
    return Pattern{{SliceEvent::base_point(rc.pos, s), rc}, {SliceEvent::base_point(rc.pos + 1, s), rc}};
}

struct VariantEntry {
    int move;
    char variant;
    Builder build;
    bool needs_strand_backward;
};

const std::vector<VariantEntry>& catalog() {
    static const std::vector<VariantEntry> cat = {
        {1, 'a', move1a, true},  {1, 'b', move1b, true},  {2, 'a', move2a, false}, {2, 'b', move2b, false},
        {2, 'c', move2c, false}, {2, 'd', move2d, false}, {3, 'a', move3a, false},
        {5, 'a', move5a, false}, {5, 'b', move5b, false}, {5, 'c', move5c, false},
        {5, 'd', move5d, false}, {6, 'a', move6a, false}, {6, 'b', move6b, false}, {6, 'c', move6c, false},
        {6, 'd', move6d, false}, {6, 'e', move6e, false}, {6, 'f', move6f, false},
    };
    return cat;
}

const VariantEntry* lookup(int move, char variant) {
    for (const auto& v : catalog())
        if (v.move == move && v.variant == variant) return &v;
    return nullptr;
}

bool window_equals(const Events& ev, int e, const Events& w) {
    if (e < 0 || e + static_cast<int>(w.size()) > static_cast<int>(ev.size())) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!(ev[e + i] == w[i])) return false;
    return true;
}

std::optional<Rewrite> instantiate(const FrontDiagram& d, const SliceTrace& t, const MoveSite& s) {
    const VariantEntry* v = lookup(s.move, s.variant);
    if (!v) return std::nullopt;
    if (s.event < 0 || s.event > static_cast<int>(d.events.size())) return std::nullopt;
    Ctx c{d.events, s.event, t.mu[s.event], s.dir, s.strand};
    std::optional<Pattern> pt = v->build(c);
    if (!pt) return std::nullopt;
    const Events& old = s.dir == MoveDirection::Forward ? pt->lhs : pt->rhs;
    const Events& neu = s.dir == MoveDirection::Forward ? pt->rhs : pt->lhs;
    if (!window_equals(d.events, s.event, old)) return std::nullopt;
    return Rewrite{static_cast<int>(old.size()), neu, pt->inv_strand};
}

}  // namespace

std::string MoveSite::str() const {
    static const char* roman[] = {"", "I", "II", "III", "IV", "V", "VI"};
    std::string s = (move >= 1 && move <= 6) ? roman[move] : "?";
    s += variant;
    s += dir == MoveDirection::Forward ? "+" : "-";
    s += "@" + std::to_string(event);
    if (strand) s += "/" + std::to_string(strand);
    return s;
}

FrontDiagram apply_move(const FrontDiagram& d, const MoveSite& site) {
    SliceTrace t = validate(d);
    std::optional<Rewrite> rw = instantiate(d, t, site);
    if (!rw) throw Error(ErrorCode::PatternMismatch, "move " + site.str() + " does not match");
    FrontDiagram out = d;
    auto first = out.events.begin() + site.event;
    out.events.erase(first, first + rw->old_len);
    out.events.insert(out.events.begin() + site.event, rw->replacement.begin(), rw->replacement.end());
    validate(out);
    return out;
}

MoveSite inverse_site(const FrontDiagram& before, const MoveSite& site) {
    SliceTrace t = validate(before);
    std::optional<Rewrite> rw = instantiate(before, t, site);
    if (!rw) throw Error(ErrorCode::PatternMismatch, "move " + site.str() + " does not match");
    MoveSite inv = site;
    inv.dir = site.dir == MoveDirection::Forward ? MoveDirection::Backward : MoveDirection::Forward;
    inv.strand = inv.dir == MoveDirection::Backward ? rw->inv_strand : 0;
    return inv;
}

std::vector<MoveSite> find_move_sites(const FrontDiagram& d, int move) {
    SliceTrace t = validate(d);
    std::vector<MoveSite> out;
    const int nev = static_cast<int>(d.events.size());
    for (const auto& v : catalog()) {
        if (v.move != move) continue;
        for (MoveDirection dir : {MoveDirection::Forward, MoveDirection::Backward}) {
            for (int e = 0; e <= nev; ++e) {
                std::vector<int> strands{0};
                if (dir == MoveDirection::Backward && v.needs_strand_backward) {
                    strands.clear();
                    int lim = static_cast<int>(t.mu[e].size());
                    for (int p = 1; p <= lim; ++p) strands.push_back(p);
                }
                for (int p : strands) {
                    MoveSite s{move, v.variant, dir, e, p};
                    if (instantiate(d, t, s)) out.push_back(s);
                }
            }
        }
    }
    return out;
}

}  // namespace legr
