#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace legr {

// Strand positions are 1-based, counted top to bottom at the slice just before the event.
enum class EventKind { LeftCusp, RightCusp, Crossing, Marking, Vertex, BasePoint };

struct SliceEvent {
    EventKind kind = EventKind::Crossing;
    int pos = 1;
    int mu = 0;              // left cusp: potential of the upper new strand
    bool basepoint = false;  // right cusp "bp", vertex "lbp"
    int left = 0;            // vertex valences
    int right = 0;
    std::vector<int> right_mu;  // vertex right half-edge potentials, top to bottom
    int sign = 1;               // base point orientation

    static SliceEvent left_cusp(int pos, int mu);
    static SliceEvent right_cusp(int pos, bool bp = false);
    static SliceEvent crossing(int pos);
    static SliceEvent marking(int pos);
    static SliceEvent vertex(int pos, int l, int r, std::vector<int> right_mu, bool lbp = false);
    static SliceEvent base_point(int pos, int sign = 1);

    bool is_crossing() const { return kind == EventKind::Crossing || kind == EventKind::Marking; }
    bool operator==(const SliceEvent& o) const;
};

struct FrontDiagram {
    std::string name = "t";
    int left_arity = 0;
    std::vector<int> left_mu;
    std::vector<SliceEvent> events;

    bool operator==(const FrontDiagram& o) const {
        return name == o.name && left_arity == o.left_arity && left_mu == o.left_mu && events == o.events;
    }
};

struct SliceTrace {
    // mu[k] = potentials before event k; mu.back() is the right border
    std::vector<std::vector<int>> mu;
    int right_arity() const { return static_cast<int>(mu.back().size()); }
    const std::vector<int>& right_mu() const { return mu.back(); }
    std::vector<int> strand_counts() const;
};

SliceTrace validate(const FrontDiagram& d);

FrontDiagram concatenate(const FrontDiagram& a, const FrontDiagram& b);
FrontDiagram closure(const FrontDiagram& d);
FrontDiagram trivial_tangle(const std::vector<int>& mu);

int count_basepoints(const FrontDiagram& d);
int half_valency_sum(const FrontDiagram& d);
// base points plus half the total vertex valency
int b_hat(const FrontDiagram& d);

// Fixed-point-free involution on {1..n}, pairs sorted with a < b.
struct BorderRuling {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;

    std::vector<int> as_map() const;  // 1-based partner table, index 0 unused
    static BorderRuling from_map(const std::vector<int>& partner);
    std::string str() const;  // "1-4,2-3"
    bool operator==(const BorderRuling& o) const { return n == o.n && pairs == o.pairs; }
    bool operator<(const BorderRuling& o) const { return pairs < o.pairs; }
};

BorderRuling parse_border_ruling(const std::string& s, int n);
bool is_valid_border_ruling(const BorderRuling& r, const std::vector<int>& mu);

// Involutions with |k_{a,rho(a)}| = 0 on pairs; fixed points only when allowed.
// Fixed points are encoded as partner[a] == a.
std::vector<std::vector<int>> enumerate_involutions(const std::vector<int>& mu, bool fixed_points_allowed);
std::vector<BorderRuling> enumerate_border_rulings(const std::vector<int>& mu);

// base point splitting
struct Site {
    int event = 0;      // 0-based event index
    int half_edge = 0;  // for vertices: left half-edge 1..l
};
FrontDiagram split_basepoint(const FrontDiagram& d, const Site& site);
std::vector<Site> split_sites(const FrontDiagram& d);

// front Reidemeister rewrites
enum class MoveDirection { Forward, Backward };

struct MoveSite {
    int move = 1;        // 1..6
    char variant = 'a';  // reflection / flavour
    MoveDirection dir = MoveDirection::Forward;
    int event = 0;   // first event of the window (insertion gap for pure insertions)
    int strand = 0;  // strand position used by insertions
    std::string str() const;
};

FrontDiagram apply_move(const FrontDiagram& d, const MoveSite& site);
std::vector<MoveSite> find_move_sites(const FrontDiagram& d, int move);
MoveSite inverse_site(const FrontDiagram& before, const MoveSite& site);

}  // namespace legr
