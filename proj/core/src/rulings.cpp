#include "legr/rulings.hpp"

#include "legr/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace legr {

namespace {

int wrap(int a, int n) { return ((a - 1) % n + n) % n + 1; }

// crossings of the y-axis when stepping from half-edge j to j+1
int unit_step(int l, int r, int j) {
    const int n = l + r;
    if (l * r == 0) return j == n ? 2 : 0;
    return (j == l ? 1 : 0) + (j == n ? 1 : 0);
}

}  // namespace

int sector_count(int l, int r, int a, int i) {
    const int n = l + r;
    if (n <= 0) throw Error(ErrorCode::EmptyVertex, "vertex of valency 0");
    if (i < 0) throw Error(ErrorCode::InvalidArgument, "negative sector count");
    int total = 2 * (i / n);
    a = wrap(a, n);
    for (int k = 0; k < i % n; ++k) total += unit_step(l, r, wrap(a + k, n));
    return total;
}

int vertex_generator_degree(const std::vector<int>& mu_v, int l, int r, int a, int i) {
    const int n = l + r;
    if (static_cast<int>(mu_v.size()) != n) throw Error(ErrorCode::ArityMismatch, "potential list does not match valency");
    if (i < 1) throw Error(ErrorCode::InvalidArgument, "generator index must be positive");
    return mu_v[wrap(a, n) - 1] - mu_v[wrap(a + i, n) - 1] + sector_count(l, r, a, i) - 1;
}

std::vector<int> VertexInvolution::as_map() const {
    std::vector<int> m(n() + 1, 0);
    for (auto [a, b] : pairs) {
        m[a] = b;
        m[b] = a;
    }
    return m;
}

std::string VertexInvolution::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < pairs.size(); ++k) os << (k ? "," : "") << pairs[k].first << "-" << pairs[k].second;
    return os.str();
}

std::vector<int> vertex_potentials(const FrontDiagram& d, const SliceTrace& t, int ev) {
    const SliceEvent& v = d.events.at(ev);
    if (v.kind != EventKind::Vertex) throw Error(ErrorCode::InvalidArgument, "event is not a vertex");
    std::vector<int> mu;
    for (int k = 0; k < v.left; ++k) mu.push_back(t.mu[ev][v.pos - 1 + k]);
    mu.insert(mu.end(), v.right_mu.begin(), v.right_mu.end());
    return mu;
}

bool is_vertex_ruling(const VertexInvolution& rho, const std::vector<int>& mu_v) {
    const int n = rho.n();
    if (n % 2 || static_cast<int>(rho.pairs.size()) * 2 != n) return false;
    std::vector<int> seen(n + 1, 0);
    for (auto [a, b] : rho.pairs) {
        if (a < 1 || b > n || a >= b || seen[a]++ || seen[b]++) return false;
        if (vertex_generator_degree(mu_v, rho.l, rho.r, a, b - a) != 0) return false;
    }
    return true;
}

std::vector<VertexInvolution> enumerate_vertex_rulings(int l, int r, const std::vector<int>& mu_v) {
    const int n = l + r;
    std::vector<VertexInvolution> out;
    if (n % 2) return out;
    std::vector<int> partner(n + 1, 0);
    VertexInvolution cur{l, r, {}};
    std::function<void()> rec = [&]() {
        int a = 1;
        while (a <= n && partner[a]) ++a;
        if (a > n) {
            out.push_back(cur);
            return;
        }
        for (int b = a + 1; b <= n; ++b) {
            if (partner[b] || vertex_generator_degree(mu_v, l, r, a, b - a) != 0) continue;
            partner[a] = b;
            partner[b] = a;
            cur.pairs.emplace_back(a, b);
            rec();
            cur.pairs.pop_back();
            partner[a] = partner[b] = 0;
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> vertex_index_set(const std::vector<int>& mu_v, int l, int r, int a) {
    // |v_{a,i+n}| = |v_{a,i}| + 2, so each residue class contributes at most once
    const int n = l + r;
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        int deg = vertex_generator_degree(mu_v, l, r, a, i);
        if (deg <= -1 && (-1 - deg) % 2 == 0) out.push_back(i + n * ((-1 - deg) / 2));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int A_v(const VertexInvolution& rho, const std::vector<int>& mu_v) {
    if (!is_vertex_ruling(rho, mu_v)) throw Error(ErrorCode::InvalidInvolution, "not a vertex ruling: " + rho.str());
    const int n = rho.n();
    std::vector<int> partner = rho.as_map();
    int total = 0;
    for (int a = 1; a <= n; ++a) {
        std::vector<int> I = vertex_index_set(mu_v, rho.l, rho.r, a);
        if (partner[a] < a) {
            total += static_cast<int>(I.size());
            continue;
        }
        for (int b = a + 1; b <= n; ++b)
            if (partner[b] > b && partner[b] < partner[a] && std::binary_search(I.begin(), I.end(), b - a)) ++total;
    }
    return total;
}

int A_b(const std::vector<int>& partner, const std::vector<int>& mu) {
    const int n = static_cast<int>(mu.size());
    auto rho = [&](int i) { return partner[i] == i ? 1 << 29 : partner[i]; };
    int total = 0;
    for (int i = 1; i <= n; ++i) {
        if (partner[i] < i) {  // lower endpoint
            for (int j = i + 1; j <= n; ++j) total += mu[j - 1] == mu[i - 1];
            continue;
        }
        for (int j = i + 1; j <= n; ++j)
            if (partner[j] > j && mu[j - 1] == mu[i - 1] && rho(j) < rho(i)) ++total;
    }
    return total;
}

namespace {

// bubble sort of `order` towards increasing rank; emits one crossing per swap
void sort_braid(std::vector<int>& order, const std::function<int(int)>& rank, int base, bool marked,
                std::vector<SliceEvent>& out) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t k = 0; k + 1 < order.size(); ++k) {
            if (rank(order[k]) > rank(order[k + 1])) {
                int pos = base + static_cast<int>(k);
                out.push_back(marked ? SliceEvent::marking(pos) : SliceEvent::crossing(pos));
                std::swap(order[k], order[k + 1]);
                moved = true;
            }
        }
    }
}

// Close the pairs among `labels` one by one: slide the upper strand down
// through marked crossings until it sits on its partner, then a right cusp.
void cap_pairs(std::vector<int> labels, const std::vector<std::pair<int, int>>& pairs, int base,
               std::vector<SliceEvent>& out, std::vector<int>* cusp_upper) {
    for (auto [a, b] : pairs) {
        int ia = static_cast<int>(std::find(labels.begin(), labels.end(), a) - labels.begin());
        int ib = static_cast<int>(std::find(labels.begin(), labels.end(), b) - labels.begin());
        while (ia + 1 < ib) {
            out.push_back(SliceEvent::marking(base + ia));
            std::swap(labels[ia], labels[ia + 1]);
            ++ia;
        }
        out.push_back(SliceEvent::right_cusp(base + ia));
        if (cusp_upper) cusp_upper->push_back(a);
        labels.erase(labels.begin() + ia, labels.begin() + ia + 2);
    }
}

}  // namespace

VertexSplit split_pairs(const VertexInvolution& rho) {
    VertexSplit out;
    for (auto [a, b] : rho.pairs) {
        if (b <= rho.l)
            out.L.push_back(a);
        else if (a > rho.l)
            out.R.push_back(a);
        else
            out.B.push_back(a);
    }
    return out;
}

int return_correction(const VertexInvolution& rho, const std::vector<int>& mu_v) {
    const int l = rho.l;
    std::vector<int> partner = rho.as_map();
    int u = 0, c = 0;
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            if (mu_v[i - 1] != mu_v[j - 1]) continue;
            ++u;
            // through strands that cross inside beta
            if (partner[i] > l && partner[j] > l && partner[j] < partner[i]) ++c;
        }
    std::vector<int> left(l + 1);
    for (int a = 1; a <= l; ++a) left[a] = partner[a] <= l ? partner[a] : a;
    std::vector<int> mu_l(mu_v.begin(), mu_v.begin() + l);
    return u - A_b(left, mu_l) - c;
}

FrontDiagram resolve_vertex(const FrontDiagram& d, int ev, const VertexInvolution& rho) {
    SliceTrace t = validate(d);
    if (ev < 0 || ev >= static_cast<int>(d.events.size()) || d.events[ev].kind != EventKind::Vertex)
        throw Error(ErrorCode::InvalidArgument, "event " + std::to_string(ev) + " is not a vertex");
    const SliceEvent& v = d.events[ev];
    std::vector<int> mu_v = vertex_potentials(d, t, ev);
    if (rho.l != v.left || rho.r != v.right || !is_vertex_ruling(rho, mu_v))
        throw Error(ErrorCode::InvalidInvolution, "invalid resolution " + rho.str() + " at event " + std::to_string(ev));
    const int l = v.left, p = v.pos;
    std::vector<int> partner = rho.as_map();

    std::vector<std::pair<int, int>> lpairs, rpairs;
    std::vector<int> through;  // left labels of through pairs
    for (auto [a, b] : rho.pairs) {
        if (b <= l)
            lpairs.emplace_back(a, b);
        else if (a > l)
            rpairs.emplace_back(a, b);
    }
    std::vector<SliceEvent> out;

    std::vector<int> left_labels(l);
    std::iota(left_labels.begin(), left_labels.end(), 1);
    cap_pairs(left_labels, lpairs, p, out, nullptr);
    for (int a = 1; a <= l; ++a)
        if (partner[a] > l) through.push_back(a);

    // beta then its complement to the half twist, then the complement undone
    std::vector<int> order = through;
    sort_braid(order, [&](int a) { return partner[a]; }, p, false, out);
    std::vector<SliceEvent> comp;
    auto rev_rank = [&](int a) {
        return -static_cast<int>(std::find(through.begin(), through.end(), a) - through.begin());
    };
    sort_braid(order, rev_rank, p, true, comp);
    out.insert(out.end(), comp.begin(), comp.end());
    out.insert(out.end(), comp.rbegin(), comp.rend());

    // right side: build the mirror capping and run it backwards
    std::vector<int> right_labels(v.right);
    std::iota(right_labels.begin(), right_labels.end(), l + 1);
    std::vector<SliceEvent> mirror;
    std::vector<int> uppers;
    cap_pairs(right_labels, rpairs, p, mirror, &uppers);
    auto up = uppers.rbegin();
    for (auto it = mirror.rbegin(); it != mirror.rend(); ++it) {
        if (it->kind == EventKind::RightCusp)
            out.push_back(SliceEvent::left_cusp(it->pos, mu_v[*up++ - 1]));
        else
            out.push_back(*it);
    }

    FrontDiagram res = d;
    res.events.erase(res.events.begin() + ev);
    res.events.insert(res.events.begin() + ev, out.begin(), out.end());
    return res;
}

FrontDiagram full_resolution(const FrontDiagram& d, const Resolution& phi) {
    std::vector<int> verts;
    for (int k = 0; k < static_cast<int>(d.events.size()); ++k)
        if (d.events[k].kind == EventKind::Vertex) verts.push_back(k);
    if (verts.size() != phi.size())
        throw Error(ErrorCode::ArityMismatch, "resolution has " + std::to_string(phi.size()) + " entries for " +
                                                  std::to_string(verts.size()) + " vertices");
    // back to front keeps earlier indices stable
    FrontDiagram out = d;
    for (int k = static_cast<int>(verts.size()) - 1; k >= 0; --k) out = resolve_vertex(out, verts[k], phi[k]);
    return out;
}

std::vector<Resolution> enumerate_resolutions(const FrontDiagram& d) {
    SliceTrace t = validate(d);
    std::vector<std::vector<VertexInvolution>> choices;
    for (int k = 0; k < static_cast<int>(d.events.size()); ++k) {
        if (d.events[k].kind != EventKind::Vertex) continue;
        const SliceEvent& v = d.events[k];
        choices.push_back(enumerate_vertex_rulings(v.left, v.right, vertex_potentials(d, t, k)));
    }
    std::vector<Resolution> out{{}};
    for (const auto& c : choices) {
        std::vector<Resolution> next;
        for (const auto& prefix : out)
            for (const auto& rho : c) {
                next.push_back(prefix);
                next.back().push_back(rho);
            }
        out = std::move(next);
    }
    return out;
}

unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* s = std::getenv("LEGR_THREADS")) {
        int v = std::atoi(s);
        if (v >= 1) return std::min<unsigned>(static_cast<unsigned>(v), hw * 4);
    }
    return hw;
}

namespace {

bool interlaced(int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    return (a < c && c < b) != (a < d && d < b);
}

bool normal_switch(int k, int rk, int rk1) {
    // configurations of the two disks meeting at a switch of strands k, k+1
    return (rk1 < rk && rk < k) || (k + 1 < rk1 && rk1 < rk) || (rk < k && k + 1 < rk1);
}

struct WalkResult {
    NormalRuling ruling;
    std::vector<int> right_partner;
};

// Left-to-right sweep over a resolved diagram, branching at switchable crossings.
class Walker {
public:
    Walker(const FrontDiagram& res, const SliceTrace& t) : res_(res), t_(t) {}

    std::vector<WalkResult> run(const std::vector<int>& left_partner) {
        results_.clear();
        cur_ = NormalRuling{};
        right_cusps_ = 0;
        rec(0, left_partner);
        return std::move(results_);
    }

private:
    void rec(int e, std::vector<int> partner) {
        const int nev = static_cast<int>(res_.events.size());
        while (e < nev) {
            const SliceEvent& x = res_.events[e];
            const std::vector<int>& mu = t_.mu[e];
            switch (x.kind) {
            case EventKind::LeftCusp: {
                int p = x.pos;
                std::vector<int> next(partner.size() + 2, 0);
                for (int a = 1; a < static_cast<int>(partner.size()); ++a) {
                    int na = a >= p ? a + 2 : a;
                    int b = partner[a];
                    next[na] = b >= p ? b + 2 : b;
                }
                next[p] = p + 1;
                next[p + 1] = p;
                partner = std::move(next);
                break;
            }
            case EventKind::RightCusp: {
                int p = x.pos;
                if (partner[p] != p + 1) return;
                std::vector<int> next(partner.size() - 2, 0);
                for (int a = 1; a < static_cast<int>(partner.size()); ++a) {
                    if (a == p || a == p + 1) continue;
                    int na = a > p + 1 ? a - 2 : a;
                    int b = partner[a];
                    next[na] = b > p + 1 ? b - 2 : b;
                }
                partner = std::move(next);
                ++right_cusps_;
                break;
            }
            case EventKind::Crossing:
            case EventKind::Marking: {
                int k = x.pos, rk = partner[k], rk1 = partner[k + 1];
                if (rk == k + 1) return;
                bool graded = mu[k - 1] == mu[k];
                bool marked = x.kind == EventKind::Marking;
                if (!marked && graded && normal_switch(k, rk, rk1)) {
                    NormalRuling saved = cur_;
                    int saved_rc = right_cusps_;
                    cur_.switches.push_back(e);
                    ++cur_.s;
                    rec(e + 1, partner);
                    cur_ = std::move(saved);
                    right_cusps_ = saved_rc;
                }
                // pass through: the two strands trade places
                bool before = interlaced(k, rk, k + 1, rk1);
                auto sw = [&](int a) { return a == k ? k + 1 : a == k + 1 ? k : a; };
                std::vector<int> next(partner.size(), 0);
                for (int a = 1; a < static_cast<int>(partner.size()); ++a) next[sw(a)] = sw(partner[a]);
                partner = std::move(next);
                bool after = interlaced(k, partner[k], k + 1, partner[k + 1]);
                if (graded && before && !after)
                    ++(marked ? cur_.r_marked : cur_.r_unmarked);
                else if (graded && !before && after)
                    ++(marked ? cur_.dep_marked : cur_.dep);
                break;
            }
            case EventKind::BasePoint: break;
            case EventKind::Vertex: throw Error(ErrorCode::InvalidArgument, "walk over an unresolved vertex");
            }
            ++e;
        }
        results_.push_back({cur_, partner});
        results_.back().ruling.chi_surface = right_cusps_;  // completed by the caller
    }

    const FrontDiagram& res_;
    const SliceTrace& t_;
    NormalRuling cur_;
    int right_cusps_ = 0;
    std::vector<WalkResult> results_;
};

int count_left_cusps(const FrontDiagram& d) {
    return static_cast<int>(std::count_if(d.events.begin(), d.events.end(),
                                          [](const SliceEvent& e) { return e.kind == EventKind::LeftCusp; }));
}

struct PhiJob {
    Resolution phi;
    FrontDiagram resolved;
    SliceTrace trace;
    int A = 0;
    int shift = 0;
};

std::vector<PhiJob> prepare(const FrontDiagram& d, const Resolution* filter) {
    SliceTrace t = validate(d);
    std::vector<int> vert_idx;
    for (int k = 0; k < static_cast<int>(d.events.size()); ++k)
        if (d.events[k].kind == EventKind::Vertex) vert_idx.push_back(k);
    std::vector<Resolution> all;
    if (filter)
        all.push_back(*filter);
    else
        all = enumerate_resolutions(d);
    std::vector<PhiJob> jobs;
    for (auto& phi : all) {
        PhiJob j;
        j.resolved = full_resolution(d, phi);
        j.trace = validate(j.resolved);
        for (std::size_t k = 0; k < phi.size(); ++k) {
            std::vector<int> mu_v = vertex_potentials(d, t, vert_idx[k]);
            j.A += A_v(phi[k], mu_v);
            j.shift += return_correction(phi[k], mu_v);
        }
        j.phi = std::move(phi);
        jobs.push_back(std::move(j));
    }
    return jobs;
}

template <class F>
void parallel_for(std::size_t n, F&& f) {
    unsigned workers = std::min<std::size_t>(thread_budget(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

// every ruling for every resolution, grouped by the left boundary ruling index
std::vector<std::vector<WalkResult>> walk_all(const FrontDiagram& d, const std::vector<BorderRuling>& lefts,
                                              const Resolution* filter) {
    std::vector<PhiJob> jobs = prepare(d, filter);
    const int nL = d.left_arity, hb = b_hat(d);
    // results[phi][left]
    std::vector<std::vector<std::vector<WalkResult>>> per(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t j) {
        const PhiJob& job = jobs[j];
        Walker w(job.resolved, job.trace);
        const int D = count_left_cusps(job.resolved) + nL / 2;
        const int nR = job.trace.right_arity();
        per[j].resize(lefts.size());
        for (std::size_t li = 0; li < lefts.size(); ++li) {
            std::vector<int> lp = lefts[li].as_map();
            lp.resize(nL + 1);
            auto res = w.run(lp);
            for (auto& wr : res) {
                NormalRuling& nr = wr.ruling;
                nr.phi = job.phi;
                nr.A = job.A;
                nr.r = nr.r_unmarked + job.shift;
                nr.b_hat = hb;
                nr.chi = D - nr.s - nR / 2;
                // disks counted at their right ends (right cusps plus border
                // pairs), one glued strip per switch, minus the border pairs
                nr.chi_surface = nr.chi_surface - nr.s;
            }
            per[j][li] = std::move(res);
        }
    });
    std::vector<std::vector<WalkResult>> out(lefts.size());
    for (auto& pj : per)
        for (std::size_t li = 0; li < lefts.size(); ++li)
            for (auto& wr : pj[li]) out[li].push_back(std::move(wr));
    return out;
}

void check_border(const BorderRuling& rho, const std::vector<int>& mu, const char* side) {
    if (rho.n != static_cast<int>(mu.size()))
        throw Error(ErrorCode::ArityMismatch, std::string(side) + " ruling has the wrong arity");
    if (!is_valid_border_ruling(rho, mu))
        throw Error(ErrorCode::InvalidInvolution, std::string(side) + " ruling " + rho.str() + " is not normal");
}

}  // namespace

std::vector<NormalRuling> enumerate_rulings(const FrontDiagram& d, const BorderRuling& rho_L,
                                            const BorderRuling& rho_R, const Resolution* phi_filter) {
    SliceTrace t = validate(d);
    check_border(rho_L, d.left_mu, "left");
    check_border(rho_R, t.right_mu(), "right");
    auto all = walk_all(d, {rho_L}, phi_filter);
    std::vector<int> want = rho_R.as_map();
    want.resize(rho_R.n + 1);
    std::vector<NormalRuling> out;
    for (auto& wr : all[0])
        if (wr.right_partner == want) out.push_back(std::move(wr.ruling));
    return out;
}

QZPolynomial ruling_polynomial(const FrontDiagram& d, const BorderRuling& rho_L, const BorderRuling& rho_R,
                               const Resolution* phi_filter) {
    QZPolynomial p;
    for (const auto& r : enumerate_rulings(d, rho_L, rho_R, phi_filter)) p += r.weight();
    return p;
}

std::vector<BorderPairPolynomial> ruling_matrix(const FrontDiagram& d) {
    SliceTrace t = validate(d);
    std::vector<BorderRuling> lefts = enumerate_border_rulings(d.left_mu);
    std::vector<BorderRuling> rights = enumerate_border_rulings(t.right_mu());
    auto all = walk_all(d, lefts, nullptr);
    std::vector<BorderPairPolynomial> out;
    for (std::size_t li = 0; li < lefts.size(); ++li) {
        std::map<std::vector<int>, QZPolynomial> by_right;
        for (const auto& wr : all[li]) by_right[wr.right_partner] += wr.ruling.weight();
        for (const auto& rr : rights) {
            std::vector<int> key = rr.as_map();
            key.resize(rr.n + 1);
            auto it = by_right.find(key);
            out.push_back({lefts[li], rr, it == by_right.end() ? QZPolynomial() : it->second});
        }
    }
    return out;
}

QZPolynomial total_ruling_polynomial(const FrontDiagram& d) {
    QZPolynomial p;
    for (const auto& e : ruling_matrix(d)) p += e.poly;
    return p;
}

GluingReport verify_gluing(const FrontDiagram& d1, const FrontDiagram& d2, const BorderRuling& rho_L,
                           const BorderRuling& rho_R) {
    FrontDiagram whole = concatenate(d1, d2);
    GluingReport rep;
    rep.lhs = ruling_polynomial(whole, rho_L, rho_R);
    for (const auto& mid : enumerate_border_rulings(validate(d1).right_mu()))
        rep.rhs += ruling_polynomial(d1, rho_L, mid) * ruling_polynomial(d2, mid, rho_R);
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace legr
