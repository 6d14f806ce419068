#include "qm/fixtures.hpp"

namespace qm::fixtures {

namespace {

std::string sub(const std::string& base, int j) { return base + "_" + std::to_string(j); }

int wrap3(int j) { return (j - 1) % 3 + 1; }  // 1-based index mod 3

}  // namespace

QuiverWithPotential a9() {
    std::vector<std::string> vs;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) vs.push_back(sub(std::to_string(i), j));
    std::vector<Arrow> as;
    for (int j = 1; j <= 3; ++j) {
        as.push_back({sub("alpha", j), sub("1", j), sub("1", wrap3(j + 1))});
        as.push_back({sub("beta", j), sub("1", j), sub("2", j)});
        as.push_back({sub("gamma", j), sub("2", j), sub("3", j)});
        as.push_back({sub("delta", j), sub("3", j), sub("1", j)});
    }
    Quiver q(std::move(vs), std::move(as));
    return {q, sum_of_minimal_cycles_potential(q)};
}

CycleSpec a9_spec() {
    CycleSpec s;
    s.cycle = {"1_1", "1_2", "1_3"};
    for (int j = 1; j <= 3; ++j) {
        s.c_index[sub("delta", j)] = 1;
        s.b_index[sub("beta", j)] = 1;
    }
    return s;
}

Quiver a9_mutated() {
    std::vector<std::string> vs;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) vs.push_back(sub(std::to_string(i), j));
    std::vector<Arrow> as;
    for (int j = 1; j <= 3; ++j) {
        as.push_back({sub("alpha", j), sub("1", j), sub("1", wrap3(j + 1))});
        // triangles 1_j -> 3_{j+1} -> 2_{j+2} -> 1_j
        as.push_back({sub("da2t", j), sub("1", j), sub("3", wrap3(j + 1))});
        as.push_back({sub("dab", j), sub("3", wrap3(j + 1)), sub("2", wrap3(j + 2))});
        as.push_back({sub("a2bt", j), sub("2", wrap3(j + 2)), sub("1", j)});
    }
    return Quiver(std::move(vs), std::move(as));
}

QuiverWithPotential pp_a6() {
    std::vector<std::string> vs;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 3; ++j) vs.push_back(sub(std::to_string(i), j));
    std::vector<Arrow> as;
    for (int j = 1; j <= 3; ++j) {
        as.push_back({sub("53", j), sub("5", j), sub("3", j)});
        as.push_back({sub("34", j), sub("3", j), sub("4", j)});
        as.push_back({sub("45", j), sub("4", j), sub("5", j)});
        as.push_back({sub("52", j), sub("5", j), sub("2", j)});
        as.push_back({sub("24", j), sub("2", j), sub("4", j)});
        as.push_back({sub("41", j), sub("4", j), sub("1", j)});
        as.push_back({sub("12", j), sub("1", j), sub("2", j)});
        // pairs (x, y) with x = y + 1 cyclically: 2_y -> 3_x, 3_x -> 5_y, 5_y -> 5_x
        int x = wrap3(j + 1);
        as.push_back({sub("23", j), sub("2", j), sub("3", x)});
        as.push_back({sub("35", j), sub("3", x), sub("5", j)});
        as.push_back({sub("55", j), sub("5", j), sub("5", x)});
    }
    Quiver q(std::move(vs), std::move(as));
    return {q, sum_of_minimal_cycles_potential(q)};
}

CycleSpec pp_a6_spec() {
    CycleSpec s;
    s.cycle = {"5_1", "5_2", "5_3"};
    for (int j = 1; j <= 3; ++j) {
        s.c_index[sub("35", j)] = 0;  // 3 -> 5
        s.c_index[sub("45", j)] = 1;  // 4 -> 5
        s.b_index[sub("53", j)] = 0;  // 5 -> 3
        s.b_index[sub("52", j)] = 1;  // 5 -> 2
    }
    return s;
}

Quiver pp_a6_mutated() {
    std::vector<std::string> vs;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 3; ++j) vs.push_back(sub(std::to_string(i), j));
    std::vector<Arrow> as;
    for (int j = 1; j <= 3; ++j) {
        int x = wrap3(j + 1);
        as.push_back({sub("53", j), sub("5", j), sub("3", j)});         // B_0 kept
        as.push_back({sub("54t", j), sub("5", wrap3(j + 2)), sub("4", j)});  // [gamma alpha^2]^t
        as.push_back({sub("25t", j), sub("2", j), sub("5", wrap3(j + 1))});  // [alpha^2 beta]^t
        as.push_back({sub("35", j), sub("3", x), sub("5", j)});         // C_0 kept
        as.push_back({sub("41", j), sub("4", j), sub("1", j)});         // (f,f)
        as.push_back({sub("12", j), sub("1", j), sub("2", j)});         // (f,f)
        as.push_back({sub("452", j), sub("4", j), sub("2", wrap3(j + 1))});  // [4 -> 5 -> 5 -> 2]
        as.push_back({sub("55", j), sub("5", j), sub("5", x)});         // cycle arrows
    }
    return Quiver(std::move(vs), std::move(as));
}

QuiverWithPotential d6_cover() {
    std::vector<std::string> vs;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) vs.push_back(sub(std::to_string(i), j));
    std::vector<Arrow> as;
    for (int j = 1; j <= 3; ++j) {
        as.push_back({sub("alpha", j), sub("1", j), sub("1", wrap3(j + 1))});
        as.push_back({sub("beta", j), sub("1", wrap3(j + 1)), sub("2", j)});
        as.push_back({sub("gamma", j), sub("2", j), sub("1", j)});
    }
    Quiver q(std::move(vs), std::move(as));
    return {q, sum_of_minimal_cycles_potential(q)};
}

CycleSpec d6_cover_spec() {
    CycleSpec s;
    s.cycle = {"1_1", "1_2", "1_3"};
    for (int j = 1; j <= 3; ++j) {
        s.c_index[sub("gamma", j)] = 0;
        s.b_index[sub("beta", j)] = 0;
    }
    return s;
}

QuiverWithPotential a9_base() {
    Quiver q({"1", "2", "3"}, {{"alpha", "1", "1"}, {"beta", "1", "2"}, {"gamma", "2", "3"}, {"delta", "3", "1"}});
    Potential p({{1, {"alpha", "alpha", "alpha"}}, {1, {"beta", "gamma", "delta"}}});
    return {q, p};
}

QuiverWithPotential d6_base() {
    Quiver q({"1", "2"}, {{"alpha", "1", "1"}, {"beta", "1", "2"}, {"gamma", "2", "1"}});
    Potential p({{1, {"alpha", "alpha", "alpha"}}, {1, {"alpha", "beta", "gamma"}}});
    return {q, p};
}

Quiver a9_base_mutated() {
    return Quiver({"1", "2", "3"}, {{"alpha", "1", "1"}, {"b", "1", "3"}, {"c", "3", "2"}, {"d", "2", "1"}});
}

}  // namespace qm::fixtures
