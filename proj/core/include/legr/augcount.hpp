#pragma once

#include "legr/algebra.hpp"
#include "legr/front_model.hpp"
#include "legr/rulings.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace legr {

// Exhaustive Morse complex count over F_p for the trivial tangle: strictly
// upper triangular d supported on degree-0 pairs with d^2 = 0.
BigInt brute_count_trivial(const std::vector<int>& mu, std::uint32_t p, bool acyclic_only);
// sum over NR (acyclic) or GNR (all) of the orbit sizes
BigInt formula_count_trivial(const std::vector<int>& mu, std::uint32_t p, bool acyclic_only);

// Exhaustive count of augmentations of the internal DGA of a vertex over F_p.
BigInt brute_count_vertex(int l, int r, const std::vector<int>& mu_v, std::uint32_t p);
BigInt formula_count_vertex(int l, int r, const std::vector<int>& mu_v, std::uint32_t p);

struct Stratum {
    Resolution phi;
    std::vector<int> switches;
    int chi = 0, r = 0, A = 0;
    int dim = 0;  // -chi + B^ + r + A
    Rational count;
};

struct AugReport {
    long long q = 0;
    Rational count;  // raw point count
    int dim = -1;    // -1 when there is no ruling
    Rational aug;
    std::vector<Stratum> strata;
    std::vector<std::string> warnings;
};

// reasons the diagram is outside the normal form the counting formula assumes
std::vector<std::string> normal_form_violations(const FrontDiagram& d);
bool in_normal_form(const FrontDiagram& d);

AugReport aug_number(const FrontDiagram& d, const BorderRuling& rho_L, const BorderRuling& rho_R, long long q);

// q^{(d+B^)/2} z^{-B^} aug at z = q^{1/2} - q^{-1/2}; zero when no ruling exists
SqrtQValue normalized_aug(const FrontDiagram& d, const BorderRuling& rho_L, const BorderRuling& rho_R, long long q);

struct TheoremRow {
    long long q = 0;
    Rational aug;
    SqrtQValue predicted;
    bool ok = false;
};

struct TheoremReport {
    bool ok = true;
    QZPolynomial R;
    int d = 0;  // meaningless when R == 0
    int b_hat = 0;
    std::vector<TheoremRow> rows;
};

TheoremReport verify_main_theorem(const FrontDiagram& d, const BorderRuling& rho_L, const BorderRuling& rho_R,
                                  const std::vector<long long>& qs);

struct BasepointReport {
    bool ok = false;
    SqrtQValue before, after;
    int b_hat_before = 0, b_hat_after = 0;
};

BasepointReport verify_basepoint_independence(const FrontDiagram& d, const Site& site, const BorderRuling& rho_L,
                                              const BorderRuling& rho_R, long long q);

struct PolynomialityReport {
    bool ok = false;
    std::vector<long long> qs;
    std::vector<Rational> counts;
    std::vector<Rational> coefficients;  // low to high in q
    int degree = -1;
    int dim = -1;
};

// raw counts at the given q interpolate to a polynomial of degree dim
PolynomialityReport verify_polynomiality(const FrontDiagram& d, const BorderRuling& rho_L,
                                         const BorderRuling& rho_R, const std::vector<long long>& qs);

}  // namespace legr
