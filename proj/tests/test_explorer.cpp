#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fsgraph/explorer.hpp"

using namespace fsg;

TEST_CASE("component_of basics") {
    {
        FsContext ctx(make_named(Family::path, 2), make_named(Family::complete, 2));
        CHECK(component_of(ctx, identity_configuration(2)).size() == 2);
    }
    {
        FsContext ctx(make_named(Family::cycle, 4), make_named(Family::star, 4));
        CHECK(component_of(ctx, identity_configuration(4)).size() == 12);
    }
    {
        FsContext ctx(make_named(Family::path, 3), SimpleGraph(3, {}));
        CHECK(component_of(ctx, identity_configuration(3)).size() == 1);
    }
}

TEST_CASE("budget errors are explicit") {
    FsContext ctx(make_named(Family::path, 6), make_named(Family::complete, 6));
    ExplorerOptions tight;
    tight.max_n = 5;
    CHECK_THROWS_AS(component_of(ctx, identity_configuration(6), tight), budget_error);
    CHECK_THROWS_AS(distance(ctx, identity_configuration(6), identity_configuration(6), tight),
                    budget_error);
}

TEST_CASE("distance examples") {
    FsContext p4(make_named(Family::path, 4), make_named(Family::complete, 4));
    auto id4 = identity_configuration(4);
    CHECK(distance(p4, id4, id4) == 0);
    auto rev4 = id4;
    std::reverse(rev4.map.begin(), rev4.map.end());
    CHECK(distance(p4, id4, rev4) == 6);

    FsContext p3(make_named(Family::path, 3), make_named(Family::complete, 3));
    auto id3 = identity_configuration(3);
    auto rev3 = id3;
    std::reverse(rev3.map.begin(), rev3.map.end());
    CHECK(distance(p3, id3, rev3) == 3);

    FsContext split(make_named(Family::path, 3), SimpleGraph(3, {}));
    Configuration other(std::vector<uint16_t>{1, 0, 2});
    CHECK(!distance(split, id3, other).has_value());
}

TEST_CASE("component diameters") {
    FsContext p4(make_named(Family::path, 4), make_named(Family::complete, 4));
    CHECK(component_diameter(p4, identity_configuration(4)) == 6);
    FsContext c5(make_named(Family::cycle, 5), make_named(Family::complete, 5));
    CHECK(max_component_diameter(c5) == 6);
    FsContext c4s(make_named(Family::cycle, 4), make_named(Family::star, 4));
    CHECK(component_diameter(c4s, identity_configuration(4)) == 6);  // half of a 12-cycle
}

TEST_CASE("two-sweep lower bound never exceeds the exact diameter") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 15; ++it) {
        int n = 4 + static_cast<int>(rng() % 2);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) edges.push_back({u, v});
        FsContext ctx(make_named(Family::path, n), SimpleGraph(n, edges));
        auto comp = materialize_component(ctx, identity_configuration(n));
        CHECK(diameter_lower_bound_two_sweep(comp) <= diameter_of(comp));
    }
}

TEST_CASE("fs_girth examples") {
    {
        FsContext ctx(make_named(Family::cycle, 4), make_named(Family::star, 4));
        CHECK(fs_girth(ctx) == 12);
    }
    {
        SimpleGraph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
        FsContext ctx(bowtie, make_named(Family::star, 5));
        CHECK(fs_girth(ctx) == 6);
    }
    {
        FsContext ctx(make_named(Family::path, 3), make_named(Family::complete, 3));
        CHECK(fs_girth(ctx) == 6);
    }
    {
        // girth is even whenever finite (bipartite FS)
        std::mt19937_64 rng(9);
        for (int it = 0; it < 25; ++it) {
            int n = 3 + static_cast<int>(rng() % 3);
            std::vector<Edge> xe, ye;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (rng() & 1) xe.push_back({u, v});
                    if (rng() & 1) ye.push_back({u, v});
                }
            FsContext ctx(SimpleGraph(n, xe), SimpleGraph(n, ye));
            auto g = fs_girth(ctx);
            if (g) CHECK(*g % 2 == 0);
        }
    }
}

TEST_CASE("is_cycle_component") {
    {
        FsContext ctx(make_named(Family::cycle, 5), make_named(Family::star, 5));
        auto comp = materialize_component(ctx, identity_configuration(5));
        CHECK(comp.size() == 20);
        CHECK(is_cycle_component(comp));
    }
    {
        // FS(Path_4, K_4) has vertices of degree 3
        FsContext ctx(make_named(Family::path, 4), make_named(Family::complete, 4));
        auto comp = materialize_component(ctx, identity_configuration(4));
        CHECK(!is_cycle_component(comp));
    }
    {
        FsContext ctx(make_named(Family::path, 3), SimpleGraph(3, {}));
        auto comp = materialize_component(ctx, identity_configuration(3));
        CHECK(!is_cycle_component(comp));  // singleton
    }
}

TEST_CASE("is_connected_fs") {
    CHECK(is_connected_fs(FsContext(make_named(Family::cycle, 4), make_named(Family::complete, 4))));
    CHECK(!is_connected_fs(FsContext(make_named(Family::path, 3), make_named(Family::path, 3))));
    SimpleGraph disconnected(4, {{0, 1}});
    CHECK(!is_connected_fs(FsContext(make_named(Family::cycle, 4), disconnected)));
}

TEST_CASE("cycle components of FS(Cycle_n, Star_n) with counts") {
    for (int n = 3; n <= 6; ++n) {
        FsContext ctx(make_named(Family::cycle, n), make_named(Family::star, n));
        auto report = explore(ctx, {}, false);
        uint64_t want_size = static_cast<uint64_t>(n) * (n - 1);
        CHECK(report.components.size() == factorial(n) / want_size);
        for (const auto& comp : report.components) {
            CHECK(comp.size == want_size);
            CHECK(comp.is_cycle);
        }
        CHECK(report.girth == want_size);
    }
}

TEST_CASE("explore report json shape") {
    FsContext ctx(make_named(Family::cycle, 4), make_named(Family::star, 4));
    auto report = explore(ctx);
    auto json = explore_report_json(report);
    CHECK(json.find("\"components\"") != std::string::npos);
    CHECK(json.find("\"girth\":12") != std::string::npos);
    CHECK(json.find("\"connected\":false") != std::string::npos);
}
