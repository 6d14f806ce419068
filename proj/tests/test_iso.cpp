#include <doctest.h>

#include <algorithm>
#include <random>

#include "qm/catalog.hpp"
#include "qm/iso.hpp"

using namespace qm;

namespace {

Quiver random_quiver(std::mt19937& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<Arrow> as;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> count(0, 2 * n);
    int arrows = count(rng);
    for (int k = 0; k < arrows; ++k) as.push_back({"e" + std::to_string(k), vs[pick(rng)], vs[pick(rng)]});
    return Quiver(vs, as);
}

Quiver relabel(const Quiver& q, std::mt19937& rng) {
    std::vector<std::string> perm = q.vertices();
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<std::string, std::string> phi;
    for (size_t i = 0; i < perm.size(); ++i) phi[q.vertices()[i]] = "w" + std::to_string(i + 100);
    std::vector<std::string> vs;
    for (const std::string& v : perm) vs.push_back(phi[v]);
    std::vector<Arrow> as;
    for (const Arrow& a : q.arrows()) as.push_back({a.id, phi[a.source], phi[a.target]});
    std::shuffle(as.begin(), as.end(), rng);
    return Quiver(vs, as);
}

}  // namespace

TEST_CASE("isomorphism finds the identity and simple swaps") {
    Quiver q({"1", "2"}, {{"a", "1", "2"}});
    Quiver r({"1", "2"}, {{"a", "2", "1"}});
    auto phi = is_isomorphic(q, r);
    REQUIRE(phi);
    CHECK(phi->at("1") == "2");
    CHECK(phi->at("2") == "1");
}

TEST_CASE("different shapes are not isomorphic") {
    Quiver q({"1", "2"}, {{"a", "1", "2"}});
    Quiver r({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    CHECK(!is_isomorphic(q, r));
    CHECK(canonical_form(q) != canonical_form(r));
}

TEST_CASE("canonical form distinguishes direction multisets") {
    Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    Quiver r({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "3", "2"}});
    CHECK(canonical_form(q) != canonical_form(r));
}

TEST_CASE("canonical form handles loops and parallels") {
    Quiver q({"1", "2"}, {{"l", "1", "1"}, {"a", "1", "2"}, {"a2", "1", "2"}});
    Quiver r({"x", "y"}, {{"m", "y", "y"}, {"b", "y", "x"}, {"b2", "y", "x"}});
    CHECK(canonical_form(q) == canonical_form(r));
    auto phi = is_isomorphic(q, r);
    REQUIRE(phi);
    CHECK(phi->at("1") == "y");
}

TEST_CASE("canonical form equality matches isomorphism on random relabelings") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        Quiver q = random_quiver(rng, 7);
        Quiver r = relabel(q, rng);
        CHECK(canonical_form(q) == canonical_form(r));
        auto phi = is_isomorphic(q, r);
        REQUIRE(phi);
        // the returned bijection really maps arrows onto arrows
        for (const std::string& u : q.vertices())
            for (const std::string& v : q.vertices())
                CHECK(q.count_arrows(u, v) == r.count_arrows(phi->at(u), phi->at(v)));
    }
}

TEST_CASE("random pairs with different invariants never collide") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        Quiver q = random_quiver(rng, 6);
        Quiver r = random_quiver(rng, 6);
        bool same_code = canonical_form(q) == canonical_form(r);
        CHECK(same_code == is_isomorphic(q, r).has_value());
    }
}

TEST_CASE("the seven E82 items are pairwise non-isomorphic") {
    std::vector<std::string> codes;
    for (char letter : {'a', 'b', 'c', 'd', 'e', 'f', 'g'})
        codes.push_back(canonical_form(cat::gen_e82(letter).qp.quiver));
    std::sort(codes.begin(), codes.end());
    CHECK(std::unique(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("orientation variants stay within their own letter") {
    for (char x : {'a', 'b', 'c', 'd', 'e', 'f', 'g'})
        for (const Quiver& v : cat::e82_letter_variants(x)) {
            auto letter = cat::match_e82_letter(v);
            REQUIRE(letter);
            CHECK(*letter == x);
        }
}
