#include <doctest.h>

#include <random>

#include "qm/fixtures.hpp"
#include "qm/quiver.hpp"

using namespace qm;

namespace {

Quiver linear_a3() { return Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}); }

Quiver random_quiver(std::mt19937& rng, int max_vertices, int max_parallel, bool allow_loops) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<Arrow> as;
    std::uniform_int_distribution<int> nm(0, max_parallel);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int id = 0;
    int arrows = nm(rng) + n;
    for (int k = 0; k < arrows; ++k) {
        int s = pick(rng), t = pick(rng);
        if (!allow_loops && s == t) continue;
        if (nm(rng) == 0) continue;
        as.push_back({"e" + std::to_string(id++), vs[s], vs[t]});
    }
    return Quiver(vs, as);
}

// loop-free and 2-cycle-free: one direction per vertex pair
Quiver random_cluster_like(std::mt19937& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    int n = nv(rng);
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<Arrow> as;
    std::uniform_int_distribution<int> mult(0, 2);
    std::uniform_int_distribution<int> dir(0, 1);
    int id = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int m = mult(rng);
            bool forward = dir(rng) == 1;
            for (int k = 0; k < m; ++k)
                as.push_back({"e" + std::to_string(id++), forward ? vs[i] : vs[j], forward ? vs[j] : vs[i]});
        }
    return Quiver(vs, as);
}

}  // namespace

TEST_CASE("skew matrix of a single arrow") {
    Quiver q({"1", "2"}, {{"a", "1", "2"}});
    SkewMatrix m = skew_matrix(q, {"1", "2"});
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == -1);
}

TEST_CASE("loops and 2-cycles vanish in the skew matrix") {
    Quiver q({"1", "2"}, {{"l", "1", "1"}, {"a", "1", "2"}, {"b", "2", "1"}});
    SkewMatrix m = skew_matrix(q, {"1", "2"});
    CHECK(m.matrix().is_zero());
}

TEST_CASE("skew matrix rejects a non-permutation order") {
    Quiver q({"1", "2"}, {{"a", "1", "2"}});
    CHECK_THROWS_AS(skew_matrix(q, {"1", "1"}), input_error);
    CHECK_THROWS_AS(skew_matrix(q, {"1"}), input_error);
    CHECK_THROWS_AS(skew_matrix(q, {"1", "3"}), input_error);
}

TEST_CASE("skew matrix of the a9 fixture has the expected blocks") {
    QuiverWithPotential a9 = fixtures::a9();
    std::vector<std::string> order = {"1_1", "1_2", "1_3", "2_1", "2_2", "2_3", "3_1", "3_2", "3_3"};
    SkewMatrix m = skew_matrix(a9.quiver, order);
    for (int i = 0; i < 3; ++i) {
        CHECK(m.at(i, (i + 1) % 3) == 1);  // the cyclic A block
        CHECK(m.at((i + 1) % 3, i) == -1);
    }
    for (int j = 0; j < 3; ++j) {
        CHECK(m.at(j, 3 + j) == 1);      // beta_j: 1_j -> 2_j
        CHECK(m.at(6 + j, j) == 1);      // delta_j: 3_j -> 1_j
        CHECK(m.at(3 + j, 6 + j) == 1);  // gamma_j: 2_j -> 3_j
    }
}

TEST_CASE("fz matrix mutation examples") {
    SkewMatrix m(IntMatrix::from_rows({{0, 1}, {-1, 0}}));
    SkewMatrix r = fz_mutate_matrix(m, 0);
    CHECK(r.at(0, 1) == -1);

    SkewMatrix a3(IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
    SkewMatrix expected(IntMatrix::from_rows({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
    CHECK(fz_mutate_matrix(a3, 1) == expected);

    CHECK_THROWS_AS(fz_mutate_matrix(m, 2), input_error);
    CHECK_THROWS_AS(fz_mutate_matrix(m, -1), input_error);
}

TEST_CASE("fz matrix mutation is an involution on random quivers") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Quiver q = random_quiver(rng, 8, 3, true);
        SkewMatrix m = skew_matrix(q);
        for (int v = 0; v < static_cast<int>(q.vertices().size()); ++v)
            CHECK(fz_mutate_matrix(fz_mutate_matrix(m, v), v) == m);
    }
}

TEST_CASE("skew matrices are skew-symmetric on random quivers") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Quiver q = random_quiver(rng, 8, 3, true);
        CHECK(skew_matrix(q).matrix().is_skew_symmetric());
    }
}

TEST_CASE("fz quiver mutation reverses a single arrow") {
    Quiver q({"1", "2"}, {{"a", "1", "2"}});
    Quiver r = fz_mutate_quiver(q, "1");
    CHECK(r.count_arrows("2", "1") == 1);
    CHECK(r.count_arrows("1", "2") == 0);
}

TEST_CASE("fz quiver mutation at the middle of linear A3") {
    Quiver r = fz_mutate_quiver(linear_a3(), "2");
    CHECK(r.count_arrows("2", "1") == 1);
    CHECK(r.count_arrows("3", "2") == 1);
    CHECK(r.count_arrows("1", "3") == 1);
    CHECK(r.arrows().size() == 3);
}

TEST_CASE("fz quiver mutation refuses loops and 2-cycles") {
    Quiver loops({"1", "2"}, {{"l", "1", "1"}, {"a", "1", "2"}});
    CHECK_THROWS_WITH_AS(fz_mutate_quiver(loops, "1"), doctest::Contains("mutate-covered"), unsupported_mutation);
    Quiver two({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
    CHECK_THROWS_AS(fz_mutate_quiver(two, "2"), unsupported_mutation);
}

TEST_CASE("fz quiver mutation leaves far-away 2-cycles alone") {
    Quiver q({"1", "2", "3"}, {{"p", "1", "2"}, {"a", "2", "3"}, {"b", "3", "2"}});
    Quiver r = fz_mutate_quiver(q, "1");
    CHECK(r.count_arrows("2", "1") == 1);
    CHECK(r.count_arrows("2", "3") == 1);
    CHECK(r.count_arrows("3", "2") == 1);
}

TEST_CASE("fz quiver mutation commutes with the skew matrix") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        Quiver q = random_cluster_like(rng, 6);
        for (const std::string& v : q.vertices()) {
            SkewMatrix lhs = skew_matrix(fz_mutate_quiver(q, v), q.vertices());
            SkewMatrix rhs = fz_mutate_matrix(skew_matrix(q), q.vertex_index(v));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("minimal cycles of an acyclic quiver") { CHECK(minimal_cycles(linear_a3()).empty()); }

TEST_CASE("minimal cycles of a single 3-cycle") {
    Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
    auto cycles = minimal_cycles(q);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == Path{"a", "b", "c"});
}

TEST_CASE("a chord disqualifies a cycle") {
    Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}, {"chord", "1", "3"}});
    auto cycles = minimal_cycles(q);
    // the 3-cycle now has a chord; only the 2-cycle (c, chord) survives
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == Path{"c", "chord"});
}

TEST_CASE("the a9 fixture has four minimal cycles") {
    auto cycles = minimal_cycles(fixtures::a9().quiver);
    CHECK(cycles.size() == 4);
    Potential p = sum_of_minimal_cycles_potential(fixtures::a9().quiver);
    CHECK(p.terms().size() == 4);
    for (const auto& t : p.terms()) CHECK(t.coeff == 1);
}

TEST_CASE("minimal cycles of a loop quiver include the loop and the triangle") {
    QuiverWithPotential base = fixtures::a9_base();
    auto cycles = minimal_cycles(base.quiver);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == Path{"alpha"});
    CHECK(cycles[1] == Path{"beta", "gamma", "delta"});
}

TEST_CASE("the preprojective A6 fixture has sixteen minimal cycles") {
    CHECK(minimal_cycles(fixtures::pp_a6().quiver).size() == 16);
}

TEST_CASE("cyclic derivative of a 3-cycle") {
    Potential p({{1, {"a", "b", "c"}}});
    auto d = cyclic_derivative(p, "a");
    REQUIRE(d.size() == 1);
    CHECK(d[0].coeff == 1);
    CHECK(d[0].path == Path{"b", "c"});
}

TEST_CASE("cyclic derivative of a cubed loop") {
    Potential p({{1, {"l", "l", "l"}}});
    auto d = cyclic_derivative(p, "l");
    REQUIRE(d.size() == 1);
    CHECK(d[0].coeff == 3);
    CHECK(d[0].path == Path{"l", "l"});
}

TEST_CASE("cyclic derivative picks out the rho factor") {
    Potential p({{1, {"alpha", "beta", "alpha", "beta"}},
                 {1, {"rho", "gamma", "beta"}},
                 {1, {"rho", "delta", "epsilon"}}});
    auto d = cyclic_derivative(p, "rho");
    REQUIRE(d.size() == 2);
    CHECK(d[0].path == Path{"delta", "epsilon"});
    CHECK(d[1].path == Path{"gamma", "beta"});
}

TEST_CASE("cyclic derivative respects cyclic equivalence") {
    std::vector<Path> rotations = {{"a", "b", "c"}, {"b", "c", "a"}, {"c", "a", "b"}};
    auto base = cyclic_derivative(Potential({{1, rotations[0]}}), "b");
    for (const Path& rot : rotations) CHECK(cyclic_derivative(Potential({{1, rot}}), "b") == base);
}

TEST_CASE("potential terms merge up to rotation") {
    Potential p({{1, {"a", "b", "c"}}, {2, {"b", "c", "a"}}, {-3, {"c", "a", "b"}}});
    CHECK(p.terms().empty());
}
