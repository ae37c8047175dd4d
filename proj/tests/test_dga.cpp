#include "legr/dga.hpp"
#include "legr/rulings.hpp"

#include "support/oracle.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <set>

using namespace legr;

namespace {

// every potential list of length n with entries in [0, spread]
std::vector<std::vector<int>> potentials(int n, int spread) {
    std::vector<std::vector<int>> out;
    std::vector<int> mu(n, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back(mu);
            return;
        }
        for (int v = 0; v <= spread; ++v) {
            mu[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("border DGA generators") {
    CHECK(build_border_dga({0}).generators().empty());
    DGA d = build_border_dga({2, 1, 0});
    REQUIRE(d.generators().size() == 3);
    int k12 = d.find("k1_2"), k23 = d.find("k2_3"), k13 = d.find("k1_3");
    CHECK(d.generators()[k12].degree == 0);
    CHECK(d.generators()[k13].degree == 1);
    // sign (-1)^{|k12| - 1} = -1
    NCPoly expect{{Word{k12, k23}, -1}};
    CHECK(d.differential(k13) == expect);
    CHECK(koszul_sign(0) == -1);
    CHECK(koszul_sign(1) == 1);
}

TEST_CASE("border DGA degree-1 equations") {
    // all potentials equal shifts: mu = [1,0,-1,-2] gives k_{a,a+2} in degree 1
    DGA d = build_border_dga({1, 0, -1, -2});
    auto eqs = d.differential_in_degree(1);
    CHECK(eqs.size() == 2);
    for (const auto& [g, p] : eqs) CHECK(p.size() == 1);
    CHECK(build_border_dga({0, 0}).differential_in_degree(1).empty());
}

TEST_CASE("d squared vanishes and degrees drop by one") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : potentials(n, 2)) {
            DGA b = build_border_dga(mu);
            CHECK(b.d_squared_failures().empty());
            CHECK(b.degree_failures().empty());
        }
    for (int l = 0; l <= 3; ++l)
        for (int r = 0; r <= 3; ++r) {
            if (l + r == 0) continue;
            for (const auto& mu : potentials(l + r, 1)) {
                InternalDGA in = build_internal_dga(l, r, mu);
                CHECK(in.dga.degree_failures().empty());
                // d only lowers the index, so the window is closed under it
                CHECK(in.dga.d_squared_failures().empty());
            }
        }
}

TEST_CASE("internal DGA of a bivalent vertex") {
    InternalDGA in = build_internal_dga(0, 2, {0, 1});
    auto deg = [&](const char* name) { return in.dga.generators()[in.dga.find(name)].degree; };
    CHECK(deg("v1_1") == -2);
    CHECK(deg("v2_1") == 2);
    CHECK(deg("v1_2") == 1);
    CHECK(deg("v2_2") == 1);
    // unit term in the differential of v_{a,n}
    CHECK(in.dga.differential(in.dga.find("v1_2")).count(Word{}) == 1);

    InternalDGA flat = build_internal_dga(0, 2, {1, 0});
    CHECK(flat.dga.generators()[flat.dga.find("v1_1")].degree == 0);
    CHECK(flat.dga.generators()[flat.dga.find("v2_1")].degree == 0);
    auto eqs = flat.dga.differential_in_degree(1);
    bool quadric = false;
    for (const auto& [g, p] : eqs)
        if (p.count(Word{}) && p.size() == 2) quadric = true;
    CHECK(quadric);
}

TEST_CASE("six-valent degree-0 generators") {
    InternalDGA in = build_internal_dga(3, 3, std::vector<int>(6, 0));
    std::set<std::string> got;
    for (const auto& g : in.dga.generators())
        if (g.degree == 0) got.insert(g.name);
    std::set<std::string> expect{"v1_3", "v1_4", "v1_5", "v2_2", "v2_3", "v2_4", "v3_1", "v3_2", "v3_3",
                                 "v4_3", "v4_4", "v4_5", "v5_2", "v5_3", "v5_4", "v6_1", "v6_2", "v6_3"};
    CHECK(got == expect);
    for (const auto& g : in.dga.generators()) CHECK(g.degree == oracle::degree(in.mu, 3, 3, g.a, g.b));
}

TEST_CASE("inclusion of the border DGA") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : potentials(n, 2)) {
            std::string why;
            CAPTURE(n);
            CHECK_MESSAGE(inclusion_is_chain_map(mu, &why), why);
        }
}

TEST_CASE("reduction to type (0,n)") {
    CHECK(normalize_to_zero_left(2, 1, {0, 0, 0}) == std::vector<int>{1, 1, 0});
    // same augmentation count after the shift
    for (const auto& mu : potentials(4, 1)) {
        auto a = count_augmentations(build_internal_dga(2, 2, mu).dga, 2);
        auto b = count_augmentations(build_internal_dga(0, 4, normalize_to_zero_left(2, 2, mu)).dga, 2);
        CHECK(a == b);
    }
}

TEST_CASE("json dump") {
    auto j = nlohmann::json::parse(build_border_dga({2, 1, 0}).to_json());
    CHECK(j["generators"].size() == 3);
    CHECK(j["generators"][2]["name"] == "k1_3");
}
