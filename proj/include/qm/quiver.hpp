#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qm/matrix.hpp"

namespace qm {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Bad user input (malformed files, unknown vertices, invalid orders). CLI exit code 1.
struct input_error : error {
    using error::error;
};
// Structurally valid input that the requested mutation cannot handle. CLI exit code 2.
struct unsupported_mutation : error {
    using error::error;
};
// The bounded rewriting procedure could not decide a factoring condition.
struct undecidable_annotation : error {
    using error::error;
};

struct Arrow {
    std::string id;
    std::string source;
    std::string target;

    friend bool operator==(const Arrow& a, const Arrow& b) {
        return a.id == b.id && a.source == b.source && a.target == b.target;
    }
};

// Finite directed multigraph with stable arrow identities.
// Loops and 2-cycles are first-class citizens here.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_vertex(const std::string& v) const { return vertex_index_.count(v) != 0; }
    int vertex_index(const std::string& v) const;

    const Arrow& arrow(const std::string& id) const;
    bool has_arrow_id(const std::string& id) const { return arrow_index_.count(id) != 0; }

    int count_arrows(const std::string& from, const std::string& to) const;
    bool has_loop_at(const std::string& v) const { return count_arrows(v, v) > 0; }
    bool has_two_cycle_at(const std::string& v) const;

    std::vector<const Arrow*> arrows_from(const std::string& v) const;
    std::vector<const Arrow*> arrows_into(const std::string& v) const;

    // Adjacency count matrix in the given vertex order (defaults to vertices()).
    IntMatrix adjacency(const std::vector<std::string>& order) const;
    IntMatrix adjacency() const { return adjacency(vertices_); }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_index_;
    std::map<std::string, int> arrow_index_;
};

// A path is an arrow-id sequence, consecutive arrows composable head-to-tail.
using Path = std::vector<std::string>;

struct PotentialTerm {
    long long coeff = 0;
    Path cycle;  // stored rotated to the lexicographically minimal arrow-id sequence

    friend bool operator==(const PotentialTerm& a, const PotentialTerm& b) {
        return a.coeff == b.coeff && a.cycle == b.cycle;
    }
};

// Formal integer combination of cyclic paths, normalized up to cyclic equivalence.
class Potential {
public:
    Potential() = default;
    explicit Potential(std::vector<PotentialTerm> terms);

    const std::vector<PotentialTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    static Path rotate_min(const Path& cycle);

    friend bool operator==(const Potential& a, const Potential& b) { return a.terms_ == b.terms_; }

private:
    std::vector<PotentialTerm> terms_;
};

struct QuiverWithPotential {
    Quiver quiver;
    Potential potential;  // every arrow id it mentions must exist in the quiver

    void validate() const;
};

// Net-arrow-count matrix; loops and 2-cycles cancel out of the entries by definition.
class SkewMatrix {
public:
    SkewMatrix() = default;
    explicit SkewMatrix(IntMatrix m);

    int size() const { return m_.rows(); }
    long long at(int i, int j) const { return m_.at(i, j); }
    const IntMatrix& matrix() const { return m_; }

    friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) { return a.m_ == b.m_; }
    friend bool operator!=(const SkewMatrix& a, const SkewMatrix& b) { return !(a == b); }

private:
    IntMatrix m_;
};

SkewMatrix skew_matrix(const Quiver& q, const std::vector<std::string>& vertex_order);
SkewMatrix skew_matrix(const Quiver& q);

SkewMatrix fz_mutate_matrix(const SkewMatrix& m, int ell);

// Arrow-level FZ mutation. Refuses to mutate at a vertex lying on a loop or 2-cycle;
// those cases go through the covering module (CLI: mutate-covered).
Quiver fz_mutate_quiver(const Quiver& q, const std::string& v);

// All minimal cycles up to rotation, in a deterministic order. A cycle is minimal when
// its vertices are pairwise distinct and the induced subquiver on them adds no chord
// (loops at the cycle's vertices are not counted as chords; see sum_of_minimal_cycles_potential).
std::vector<Path> minimal_cycles(const Quiver& q);

// Coefficient-1 potential on every minimal cycle. Only guaranteed meaningful on
// loop-free, 2-cycle-free quivers; on other input the result is advisory.
Potential sum_of_minimal_cycles_potential(const Quiver& q);

struct PathSumTerm {
    long long coeff = 0;
    Path path;

    friend bool operator==(const PathSumTerm& a, const PathSumTerm& b) {
        return a.coeff == b.coeff && a.path == b.path;
    }
};

// Sum over all decompositions c = x p y of every term, contributing coeff * (y x).
std::vector<PathSumTerm> cyclic_derivative(const Potential& p, const std::string& arrow_id);

// Path endpoints relative to a quiver; throws input_error on a non-composable sequence.
std::string path_source(const Quiver& q, const Path& p);
std::string path_target(const Quiver& q, const Path& p);
void check_composable(const Quiver& q, const Path& p);

}  // namespace qm
