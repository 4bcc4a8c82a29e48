#pragma once

#include "symcode/util.hpp"

#include <cstdint>
#include <optional>
#include <vector>

// Vertex-colored graph canonical labeling by partition refinement with
// individualization, plus permutation-group bookkeeping (Schreier-Sims).
// One engine, several clients: Hadamard equivalence, design isomorphism,
// code equivalence and all automorphism-group computations reduce to it.

namespace symcode::graphs {

using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);  // (a*b)(x) = a[b[x]]
Perm inverse(const Perm& a);
bool is_identity(const Perm& p);

// Permutation group with a base and strong generating set.
class PermGroup {
  public:
    explicit PermGroup(int degree) : n_(degree) {}

    // Returns true when the generator enlarged the group.
    bool add_generator(const Perm& g);
    bool contains(const Perm& g) const;
    unsigned long long order() const;
    int degree() const { return n_; }
    const std::vector<Perm>& strong_generators() const { return gens_; }

    // Explicit element list; throws if the order exceeds `cap`.
    std::vector<Perm> elements(std::size_t cap) const;

    // Orbit partition of {0..n-1}; representative-labeled.
    std::vector<int> orbit_representatives() const;

  private:
    struct Level {
        int base_point = -1;
        std::vector<int> orbit;
        std::vector<int> where;   // vertex -> index into orbit, -1 outside
        std::vector<Perm> trans;  // trans[i] maps base_point -> orbit[i]
    };

    void update_level(std::size_t li);
    Perm sift(Perm g, std::size_t from) const;
    void close();

    int n_;
    std::vector<Perm> gens_;
    std::vector<Level> levels_;
};

// Orbits of <gens> on {0..n-1} as a representative map (smallest element).
std::vector<int> orbits_of(const std::vector<Perm>& gens, int n);

class ColoredGraph {
  public:
    ColoredGraph(int n, std::vector<int> colors);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int size() const { return n_; }
    int words() const { return words_; }
    const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }
    const std::vector<int>& colors() const { return colors_; }

    bool is_automorphism(const Perm& p) const;

  private:
    int n_;
    int words_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> colors_;
};

struct CanonicalForm {
    // labeling[i] = vertex placed at canonical position i.
    Perm labeling;
    // Color sequence followed by the packed upper-triangular adjacency under
    // the canonical labeling; equal certificates == isomorphic graphs.
    std::vector<std::uint64_t> certificate;
    std::vector<Perm> automorphism_generators;
    unsigned long long group_order = 1;
};

CanonicalForm canonize(const ColoredGraph& g, const Budget& budget = Budget::unlimited());

// Vertex map sending graph-a onto graph-b provided their certificates match.
std::optional<Perm> isomorphism_from_canonical(const CanonicalForm& a, const CanonicalForm& b);

}  // namespace symcode::graphs
