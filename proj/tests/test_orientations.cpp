#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "fsgraph/explorer.hpp"
#include "fsgraph/orientations.hpp"

using namespace fsg;

namespace {

SimpleGraph from_mask(int n, uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.push_back({u, v});
    return SimpleGraph(n, edges);
}

// brute-force closure of alpha under inflips+outflips
std::set<std::vector<int>> flip_closure(const AcyclicOrientation& alpha) {
    std::set<std::vector<int>> seen{alpha.toward()};
    std::vector<AcyclicOrientation> queue{alpha};
    while (!queue.empty()) {
        auto cur = queue.back();
        queue.pop_back();
        for (int v : cur.sources()) {
            auto next = inflip(cur, v);
            if (seen.insert(next.toward()).second) queue.push_back(next);
        }
        for (int v : cur.sinks()) {
            auto next = outflip(cur, v);
            if (seen.insert(next.toward()).second) queue.push_back(next);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("orientation_from and linear extensions") {
    SimpleGraph p3 = make_named(Family::path, 3);
    auto alpha = orientation_from(identity_configuration(3), p3);
    CHECK(alpha.directed(0, 1));
    CHECK(alpha.directed(1, 2));
    Configuration rev(std::vector<uint16_t>{2, 1, 0});
    auto beta = orientation_from(rev, p3);
    CHECK(beta.directed(2, 1));
    CHECK(beta.directed(1, 0));

    // sigma is always a linear extension of its own orientation
    std::mt19937_64 rng(13);
    for (int it = 0; it < 40; ++it) {
        int n = 3 + static_cast<int>(rng() % 3);
        SimpleGraph g = from_mask(n, rng());
        auto sigma = identity_configuration(n);
        std::shuffle(sigma.map.begin(), sigma.map.end(), rng);
        auto a = orientation_from(sigma, g);
        auto ext = linear_extensions(a);
        CHECK(std::find(ext.begin(), ext.end(), sigma) != ext.end());
        CHECK(!ext.empty());
    }
}

TEST_CASE("linear extension counts") {
    CHECK(linear_extensions(AcyclicOrientation(SimpleGraph(3, {}), {})).size() == 6);
    SimpleGraph chain = make_named(Family::path, 3);
    AcyclicOrientation total(chain, {1, 2});  // 0->1->2
    CHECK(linear_extensions(total).size() == 1);
    AcyclicOrientation vee(chain, {1, 1});  // 0->1, 2->1
    CHECK(linear_extensions(vee).size() == 2);
}

TEST_CASE("flips and their inverses") {
    SimpleGraph e1(2, {{0, 1}});
    AcyclicOrientation a(e1, {1});  // 0 -> 1
    auto b = inflip(a, 0);
    CHECK(b.directed(1, 0));
    CHECK(outflip(b, 0) == a);
    CHECK_THROWS_AS(inflip(a, 1), input_error);  // 1 is a sink, not a source

    // isolated vertices may be flipped, with no effect
    SimpleGraph iso(3, {{0, 1}});
    AcyclicOrientation c(iso, {1});
    CHECK(inflip(c, 2) == c);
    CHECK(outflip(c, 2) == c);
}

TEST_CASE("n source-inflips along a linear extension restore the orientation") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 25; ++it) {
        int n = 3 + static_cast<int>(rng() % 3);
        SimpleGraph g = from_mask(n, rng());
        if (components(g).size() > 1) continue;  // the cycle property is per component
        auto sigma = identity_configuration(n);
        std::shuffle(sigma.map.begin(), sigma.map.end(), rng);
        auto alpha = orientation_from(sigma, g);
        AcyclicOrientation cur = alpha;
        for (int i = 0; i < n; ++i) cur = inflip(cur, sigma.map[i]);
        CHECK(cur == alpha);
    }
}

TEST_CASE("double flips") {
    SimpleGraph two(4, {{0, 1}, {2, 3}});
    AcyclicOrientation a(two, {1, 3});  // 0->1, 2->3
    auto flipped = double_flip(a, 0, 3);
    CHECK(flipped.directed(1, 0));
    CHECK(flipped.directed(3, 2));
    CHECK_THROWS_AS(double_flip(a, 0, 1), input_error);  // adjacent
    SimpleGraph iso(2, {});
    AcyclicOrientation b(iso, {});
    CHECK(double_flip(b, 0, 1) == b);  // two isolated vertices
}

TEST_CASE("cycle signature is flip invariant") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 40; ++it) {
        int n = 3 + static_cast<int>(rng() % 4);  // up to 6 vertices
        SimpleGraph g = from_mask(n, rng());
        auto all = enumerate_acyclic_orientations(g);
        if (all.empty()) continue;
        const auto& alpha = all[rng() % all.size()];
        for (int v : alpha.sources())
            CHECK(cycle_signature(alpha) == cycle_signature(inflip(alpha, v)));
        for (int v : alpha.sinks())
            CHECK(cycle_signature(alpha) == cycle_signature(outflip(alpha, v)));
    }
}

TEST_CASE("flip_equivalent agrees with brute-force closure on all graphs, n <= 4") {
    for (int n = 2; n <= 4; ++n) {
        uint64_t masks = 1ull << (n * (n - 1) / 2);
        for (uint64_t mask = 0; mask < masks; ++mask) {
            SimpleGraph g = from_mask(n, mask);
            auto all = enumerate_acyclic_orientations(g);
            for (std::size_t i = 0; i < all.size(); ++i) {
                auto closure = flip_closure(all[i]);
                for (std::size_t j = 0; j < all.size(); ++j) {
                    auto cert = flip_equivalent(all[i], all[j]);
                    CHECK(cert.equivalent == (closure.count(all[j].toward()) > 0));
                }
            }
        }
    }
}

TEST_CASE("flip_equivalent certificates replay within the bound") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 30; ++it) {
        int n = 3 + static_cast<int>(rng() % 3);
        SimpleGraph g = from_mask(n, rng());
        auto all = enumerate_acyclic_orientations(g);
        if (all.size() < 2) continue;
        const auto& a = all[rng() % all.size()];
        const auto& b = all[rng() % all.size()];
        auto cert = flip_equivalent(a, b);
        if (!cert.equivalent) continue;
        CHECK(cert.inflip_vertices.size() <= static_cast<std::size_t>(n * (n - 1) / 2));
        AcyclicOrientation cur = a;
        for (int v : cert.inflip_vertices) cur = inflip(cur, v);
        CHECK(cur == b);
    }

    // a triangle with 1 vs 2 clockwise edges is never flip equivalent
    SimpleGraph tri = make_named(Family::cycle, 3);
    // edges sorted: {0,1},{0,2},{1,2}; clockwise traversal 0->1->2->0
    AcyclicOrientation two_cw(tri, {1, 2, 2});  // 0->1, 0->2, 1->2: cw edges 0->1, 1->2
    AcyclicOrientation one_cw(tri, {1, 2, 1});  // 0->1, 0->2, 2->1: cw edge 0->1 only
    CHECK(!flip_equivalent(one_cw, two_cw).equivalent);
    CHECK(flip_equivalent(one_cw, one_cw).equivalent);
    CHECK(flip_equivalent(one_cw, one_cw).inflip_vertices.empty());

    // single edge: the two orientations are one inflip apart
    SimpleGraph e1(2, {{0, 1}});
    auto cert = flip_equivalent(AcyclicOrientation(e1, {1}), AcyclicOrientation(e1, {0}));
    CHECK(cert.equivalent);
    CHECK(cert.inflip_vertices == std::vector<int>{0});
}

TEST_CASE("double flip classes match FS(Cycle_n, Y) components") {
    // classes of Acyc(complement(Y)) <-> components of FS(Cycle_n, Y)
    std::mt19937_64 rng(41);
    for (int it = 0; it < 20; ++it) {
        int n = 4 + static_cast<int>(rng() % 2);
        SimpleGraph y = from_mask(n, rng());
        auto classes = double_flip_classes(complement(y));
        FsContext ctx(make_named(Family::cycle, n), y);
        auto report = explore(ctx, {}, false);
        CHECK(classes.size() == report.components.size());
    }
    // complement(Star_4): classes = 2 = (n-2)!
    auto classes = double_flip_classes(complement(make_named(Family::star, 4)));
    CHECK(classes.size() == 2);
    // empty graph on 3 vertices has one (empty) orientation
    CHECK(double_flip_classes(SimpleGraph(3, {})).size() == 1);
}

TEST_CASE("component = union of linear extensions over the double-flip class") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 12; ++it) {
        int n = 4 + static_cast<int>(rng() % 2);
        SimpleGraph y = from_mask(n, rng());
        SimpleGraph co = complement(y);
        FsContext ctx(make_named(Family::cycle, n), y);
        auto sigma = identity_configuration(n);
        std::shuffle(sigma.map.begin(), sigma.map.end(), rng);
        auto comp = component_of(ctx, sigma);
        std::set<std::vector<uint16_t>> lhs;
        for (const auto& c : comp) lhs.insert(c.map);

        auto alpha = orientation_from(sigma, co);
        auto cls = double_flip_classes(co);
        std::set<std::vector<uint16_t>> rhs;
        for (const auto& cl : cls) {
            bool contains = false;
            for (const auto& a : cl)
                if (a == alpha) contains = true;
            if (!contains) continue;
            for (const auto& a : cl)
                for (const auto& ext : linear_extensions(a)) rhs.insert(ext.map);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("toric and double-flip class ids are closure minima") {
    SimpleGraph p3 = make_named(Family::path, 3);
    auto all = enumerate_acyclic_orientations(p3);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (flip_equivalent(a, b).equivalent)
                CHECK(toric_class_id(a) == toric_class_id(b));
        }
}

TEST_CASE("cycle connectivity predicate") {
    CHECK(cycle_connectivity_predicate(make_named(Family::complete, 5)));
    // complement = two disjoint edges: sizes 2,2 -> gcd 2
    SimpleGraph y4 = complement(SimpleGraph(4, {{0, 1}, {2, 3}}));
    CHECK(!cycle_connectivity_predicate(y4));
    // complement contains a triangle -> not a forest
    SimpleGraph y5 = complement(SimpleGraph(5, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(!cycle_connectivity_predicate(y5));
    CHECK_THROWS_AS(cycle_connectivity_predicate(SimpleGraph(2, {})), input_error);
}

TEST_CASE("comparable pairs bound the component diameter") {
    // max inv over L(alpha)^2 <= C(n,2) - p_alpha
    std::mt19937_64 rng(47);
    for (int it = 0; it < 20; ++it) {
        int n = 3 + static_cast<int>(rng() % 3);
        SimpleGraph g = from_mask(n, rng());
        auto all = enumerate_acyclic_orientations(g);
        const auto& alpha = all[rng() % all.size()];
        auto ext = linear_extensions(alpha);
        int bound = n * (n - 1) / 2 - comparable_pairs(alpha);
        int worst = 0;
        for (const auto& s : ext)
            for (const auto& t : ext) {
                // inversions counted directly here to stay independent of solvers
                auto si = s.inverse(), ti = t.inverse();
                int inv = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if ((si[i] < si[j]) != (ti[i] < ti[j])) ++inv;
                worst = std::max(worst, inv);
            }
        CHECK(worst <= bound);
    }
}
