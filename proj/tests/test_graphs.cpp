#include "symcode/graphs.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace symcode;
using graphs::ColoredGraph;
using graphs::Perm;

namespace {

ColoredGraph cycle(int n) {
    ColoredGraph g(n, std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

ColoredGraph complete(int n) {
    ColoredGraph g(n, std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

ColoredGraph petersen() {
    ColoredGraph g(10, std::vector<int>(10, 0));
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

ColoredGraph relabel(const ColoredGraph& g, const Perm& p) {
    std::vector<int> colors(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v)
        colors[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])] =
            g.colors()[static_cast<std::size_t>(v)];
    ColoredGraph h(g.size(), colors);
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.has_edge(u, v))
                h.add_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
    return h;
}

}  // namespace

TEST_CASE("automorphism group orders of reference graphs") {
    CHECK(graphs::canonize(cycle(5)).group_order == 10);     // dihedral D5
    CHECK(graphs::canonize(cycle(8)).group_order == 16);     // dihedral D8
    CHECK(graphs::canonize(complete(4)).group_order == 24);  // S4
    CHECK(graphs::canonize(complete(6)).group_order == 720);
    CHECK(graphs::canonize(petersen()).group_order == 120);
}

TEST_CASE("colors restrict automorphisms") {
    // K_{3,3} with sides colored separately: 3! x 3! = 36.
    std::vector<int> colors{0, 0, 0, 1, 1, 1};
    ColoredGraph g(6, colors);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) g.add_edge(i, j);
    CHECK(graphs::canonize(g).group_order == 36);
}

TEST_CASE("every reported generator is an automorphism") {
    auto form = graphs::canonize(petersen());
    for (const Perm& a : form.automorphism_generators) CHECK(petersen().is_automorphism(a));
}

TEST_CASE("certificates are invariant under relabeling and witness maps verify") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 9;
        std::vector<int> colors(static_cast<std::size_t>(n), 0);
        for (auto& c : colors) c = static_cast<int>(rng() % 2);
        ColoredGraph g(n, colors);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        Perm p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        ColoredGraph h = relabel(g, p);

        auto fg = graphs::canonize(g);
        auto fh = graphs::canonize(h);
        REQUIRE(fg.certificate == fh.certificate);
        auto iso = graphs::isomorphism_from_canonical(fg, fh);
        REQUIRE(iso.has_value());
        // Replay: the witness must carry g onto h.
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                CHECK(g.has_edge(u, v) ==
                      h.has_edge((*iso)[static_cast<std::size_t>(u)],
                                 (*iso)[static_cast<std::size_t>(v)]));
    }
}

TEST_CASE("non-isomorphic graphs get distinct certificates") {
    ColoredGraph path(4, std::vector<int>(4, 0));
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    ColoredGraph star(4, std::vector<int>(4, 0));
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(graphs::canonize(path).certificate != graphs::canonize(star).certificate);
}

TEST_CASE("PermGroup computes orders via Schreier-Sims") {
    using graphs::PermGroup;
    {
        PermGroup g(5);
        g.add_generator({1, 2, 3, 4, 0});
        CHECK(g.order() == 5);
        g.add_generator({0, 4, 3, 2, 1});  // a reflection
        CHECK(g.order() == 10);
    }
    {
        PermGroup s6(6);
        s6.add_generator({1, 0, 2, 3, 4, 5});
        s6.add_generator({1, 2, 3, 4, 5, 0});
        CHECK(s6.order() == 720);
        CHECK(s6.contains({5, 4, 3, 2, 1, 0}));
        CHECK_FALSE(PermGroup(6).contains({1, 0, 2, 3, 4, 5}));
    }
}

TEST_CASE("PermGroup element enumeration") {
    graphs::PermGroup g(4);
    g.add_generator({1, 2, 3, 0});
    auto elems = g.elements(100);
    CHECK(elems.size() == 4);
    CHECK_THROWS(g.elements(3));
}

TEST_CASE("orbit computation") {
    auto reps = graphs::orbits_of({{1, 0, 2, 3}, {0, 1, 3, 2}}, 4);
    CHECK(reps[0] == 0);
    CHECK(reps[1] == 0);
    CHECK(reps[2] == 2);
    CHECK(reps[3] == 2);
}
