#pragma once

#include "legr/algebra.hpp"
#include "legr/front_model.hpp"

#include <string>
#include <vector>

namespace legr {

// Half-edges of a vertex of type (l, r) are labeled 1..l down the left side
// of the front, then l+1..n down the right side.

// n(l, r, a, i): sector crossings of a spiral from half-edge a turning i sectors.
int sector_count(int l, int r, int a, int i);
// |v_{a,i}|; mu_v is indexed by half-edge label - 1
int vertex_generator_degree(const std::vector<int>& mu_v, int l, int r, int a, int i);

struct VertexInvolution {
    int l = 0, r = 0;
    std::vector<std::pair<int, int>> pairs;  // a < b, sorted

    int n() const { return l + r; }
    std::vector<int> as_map() const;  // 1-based partner table
    std::string str() const;
    bool operator==(const VertexInvolution& o) const { return l == o.l && r == o.r && pairs == o.pairs; }
    bool operator<(const VertexInvolution& o) const { return pairs < o.pairs; }
};

// smaller endpoints of the pairs inside the left side (L), of the pairs crossing
// the vertex (B) and of the pairs inside the right side (R)
struct VertexSplit {
    std::vector<int> L, B, R;
};
VertexSplit split_pairs(const VertexInvolution& rho);

// potentials of the half-edges of the vertex event at index ev, in label order
std::vector<int> vertex_potentials(const FrontDiagram& d, const SliceTrace& t, int ev);

std::vector<VertexInvolution> enumerate_vertex_rulings(int l, int r, const std::vector<int>& mu_v);
bool is_vertex_ruling(const VertexInvolution& rho, const std::vector<int>& mu_v);

// {i > 0 : |v_{a,i}| = -1}
std::vector<int> vertex_index_set(const std::vector<int>& mu_v, int l, int r, int a);
int A_v(const VertexInvolution& rho, const std::vector<int>& mu_v);
// border index; partner[a] == a marks a fixed point
int A_b(const std::vector<int>& partner, const std::vector<int>& mu);

// Per-vertex shift from walked returns to the stratum exponent: degree-0
// crossings among left half-edges, less A_b of the left restriction, less the
// degree-0 crossings of the braid block. Zero for vertices of type (0, n).
int return_correction(const VertexInvolution& rho, const std::vector<int>& mu_v);

// Replace the vertex event at index ev by its rho-resolution. Markings are
// crossings the ruling may not switch.
FrontDiagram resolve_vertex(const FrontDiagram& d, int ev, const VertexInvolution& rho);
// One involution per vertex event, in event order.
using Resolution = std::vector<VertexInvolution>;
FrontDiagram full_resolution(const FrontDiagram& d, const Resolution& phi);
// All resolution choices, lexicographic.
std::vector<Resolution> enumerate_resolutions(const FrontDiagram& d);

struct NormalRuling {
    Resolution phi;
    std::vector<int> switches;  // event indices in the resolved diagram
    int chi = 0;
    int s = 0;
    int r = 0;    // unmarked graded returns plus the vertex corrections
    int dep = 0;  // unmarked graded departures
    int r_unmarked = 0;
    int r_marked = 0;  // graded returns at markings
    int dep_marked = 0;
    int A = 0;
    int b_hat = 0;
    int chi_surface = 0;  // Euler characteristic recomputed from the ruling surface

    // q^{A/2} z^{-chi}
    QZPolynomial weight() const { return QZPolynomial::monomial(A, -chi); }
};

// rho_L, rho_R fixed-point-free; phi_filter restricts to one resolution when non-null
std::vector<NormalRuling> enumerate_rulings(const FrontDiagram& d, const BorderRuling& rho_L,
                                            const BorderRuling& rho_R, const Resolution* phi_filter = nullptr);

QZPolynomial ruling_polynomial(const FrontDiagram& d, const BorderRuling& rho_L, const BorderRuling& rho_R,
                               const Resolution* phi_filter = nullptr);
// Sum over every pair of boundary rulings.
QZPolynomial total_ruling_polynomial(const FrontDiagram& d);

struct BorderPairPolynomial {
    BorderRuling left, right;
    QZPolynomial poly;
};
// All compatible boundary pairs with their polynomial (zero entries included).
std::vector<BorderPairPolynomial> ruling_matrix(const FrontDiagram& d);

struct GluingReport {
    bool ok = true;
    QZPolynomial lhs, rhs;
};
GluingReport verify_gluing(const FrontDiagram& d1, const FrontDiagram& d2, const BorderRuling& rho_L,
                           const BorderRuling& rho_R);

// worker count from LEGR_THREADS, at least 1
unsigned thread_budget();

}  // namespace legr
