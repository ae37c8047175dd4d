#include "legr/augcount.hpp"
#include "legr/errors.hpp"
#include "legr/json.hpp"

#include "support/diagrams.hpp"
#include "support/fuzz.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

using namespace legr;

TEST_CASE("trivial tangle counts") {
    CHECK(brute_count_trivial({1, 0}, 2, true) == 1);
    CHECK(brute_count_trivial({1, 1, 0, 0}, 3, true) == 48);
    CHECK(formula_count_trivial({1, 1, 0, 0}, 3, true) == 48);
    CHECK(brute_count_trivial({1, 0, 0}, 2, true) == 0);
    CHECK_THROWS_AS(brute_count_trivial({1, 0}, 4, true), Error);
    // the test-side enumeration over all matrices agrees
    for (auto mu : std::vector<std::vector<int>>{{1, 0}, {1, 1, 0, 0}, {2, 1, 1, 0}, {1, 0, 1, 0}, {2, 1, 0}})
        for (std::uint32_t p : {2u, 3u})
            for (bool acyclic : {true, false}) {
                CAPTURE(p);
                CHECK(brute_count_trivial(mu, p, acyclic) == oracle::morse_complexes(mu, static_cast<int>(p), acyclic));
            }
}

TEST_CASE("vertex counts") {
    CHECK(brute_count_vertex(0, 1, {0}, 2) == 0);
    CHECK(brute_count_vertex(2, 1, {0}, 3) == 0);
    // (0,2) with its single ruling: (p-1) p^{A_v}, A_v = 0 here
    for (std::uint32_t p : {2u, 3u}) {
        CHECK(brute_count_vertex(0, 2, {1, 0}, p) == p - 1);
        CHECK(formula_count_vertex(0, 2, {1, 0}, p) == p - 1);
    }
    // 2^6 + 2^5 + 2^5 + 2^3 + 2^4 + 2^4
    CHECK(formula_count_vertex(3, 3, std::vector<int>(6, 0), 2) == 168);
}

TEST_CASE("augmentation number of the six-valent example") {
    FrontDiagram lam = samples::lambda();
    for (long long q : {2, 3, 5, 7}) {
        AugReport rep = aug_number(lam, BorderRuling{}, BorderRuling{}, q);
        auto [num, den] = oracle::lambda_aug(q);
        CHECK(rep.aug == Rational(BigInt(num), BigInt(den)));
        CHECK(rep.dim == 12);
        CHECK(rep.warnings.size() == 1);  // the (3,3) vertex is outside the normal form
    }
}

TEST_CASE("trivial tangle augmentation number") {
    FrontDiagram t = trivial_tangle({1, 1, 0, 0});
    for (const auto& r : enumerate_border_rulings(t.left_mu)) {
        AugReport rep = aug_number(t, r, r, 5);
        CHECK(rep.aug == Rational(1));
        CHECK(rep.warnings.empty());
        CHECK(verify_main_theorem(t, r, r, {2, 3}).ok);
    }
    auto nr = enumerate_border_rulings(t.left_mu);
    AugReport none = aug_number(t, nr[0], nr[1], 2);
    CHECK(none.aug == Rational(0));
    CHECK(none.strata.empty());
    CHECK(none.dim == -1);
}

TEST_CASE("theorem on the six-valent example") {
    TheoremReport rep = verify_main_theorem(samples::lambda(), BorderRuling{}, BorderRuling{}, {2, 3, 5, 7});
    CHECK(rep.ok);
    CHECK(rep.d == 6);
    CHECK(rep.b_hat == 6);
}

TEST_CASE("base point lemma on the six-valent example") {
    FrontDiagram lam = samples::lambda();
    for (const Site& s : split_sites(lam))
        for (long long q : {2, 3}) CHECK(verify_basepoint_independence(lam, s, BorderRuling{}, BorderRuling{}, q).ok);
    CHECK_THROWS_AS(verify_basepoint_independence(lam, Site{1, 0}, BorderRuling{}, BorderRuling{}, 2), Error);
}

TEST_CASE("polynomiality in q") {
    PolynomialityReport rep = verify_polynomiality(samples::lambda(), BorderRuling{}, BorderRuling{}, {2, 3, 5, 7, 11});
    CHECK(rep.ok);
    CHECK(rep.degree == 12);
    CHECK(rep.qs.size() >= 14);
}

TEST_CASE("normal form bookkeeping") {
    CHECK(in_normal_form(parse("tangle t { left 0 [] V 1 0 2 [1,0] R 1 bp }")));
    CHECK_FALSE(in_normal_form(parse("tangle t { left 0 [] V 1 0 2 [1,0] R 1 }")));
    // vertex above another strand
    CHECK_FALSE(in_normal_form(parse("tangle t { left 1 [5] V 1 0 2 [1,0] }")));
}

TEST_CASE("constant index law and theorem on random normal-form diagrams") {
    std::mt19937 rng(31);
    fuzz::Options o;
    o.normal_form = true;
    int cases = 0;
    for (int it = 0; it < 3000 && cases < 40; ++it) {
        FrontDiagram d = fuzz::random_diagram(rng, o);
        REQUIRE(in_normal_form(d));
        for (const auto& e : ruling_matrix(d)) {
            auto rs = enumerate_rulings(d, e.left, e.right);
            if (rs.empty()) continue;
            ++cases;
            std::set<int> law;
            for (const auto& r : rs) law.insert(-r.chi + 2 * r.r + r.A);
            CHECK(law.size() == 1);
            CHECK(verify_main_theorem(d, e.left, e.right, {2, 3}).ok);
        }
    }
    CHECK(cases >= 40);
}

TEST_CASE("report json") {
    AugReport rep = aug_number(samples::lambda(), BorderRuling{}, BorderRuling{}, 2);
    auto j = json_of(rep);
    CHECK(j["q"] == 2);
    CHECK(j["dim"] == 12);
    CHECK(j["aug"]["num"] == 1);
    CHECK(j["aug"]["den"] == 8);
    CHECK(j["strata"].size() == rep.strata.size());
}
