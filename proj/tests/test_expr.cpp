#include <doctest.h>

#include <functional>
#include <random>

#include "sg/canonical.hpp"
#include "sg/expr.hpp"

using namespace sg;

TEST_CASE("parser: join of a clique with copies") {
    GraphExpr e = parse_graph_expression("K2 v 3*K3");
    REQUIRE(e.kind == GraphExpr::Kind::Join);
    CHECK(e.children[0]->kind == GraphExpr::Kind::Complete);
    CHECK(e.children[0]->params[0] == 2);
    REQUIRE(e.children[1]->kind == GraphExpr::Kind::Copies);
    CHECK(e.children[1]->params[0] == 3);
    CHECK(e.children[1]->children[0]->kind == GraphExpr::Kind::Complete);
    CHECK(e.order() == 11);

    // the nabla glyph is an alias for v
    GraphExpr e2 = parse_graph_expression("K2 ∇ 3*K3");
    CHECK(evaluate_expression(e2) == evaluate_expression(e));
}

TEST_CASE("parser: disjoint union") {
    GraphExpr e = parse_graph_expression("C4 + K1");
    REQUIRE(e.kind == GraphExpr::Kind::Union);
    CHECK(e.children[0]->kind == GraphExpr::Kind::Cycle);
    CHECK(e.children[1]->kind == GraphExpr::Kind::Complete);
    CHECK(e.order() == 5);
}

TEST_CASE("parser: union binds looser than join") {
    // K1 + K1 v K1 reads as K1 + (K1 v K1) = K1 + K2
    Graph g = evaluate_expression(parse_graph_expression("K1 + K1 v K1"));
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 1);
    Graph h = evaluate_expression(parse_graph_expression("(K1 + K1) v K1"));
    CHECK(h.edge_count() == 2); // the star K_{1,2}
}

TEST_CASE("parser: size zero rejected with a position") {
    CHECK_THROWS_AS(parse_graph_expression("K0"), parse_error);
    CHECK_THROWS_AS(parse_graph_expression(""), parse_error);
    CHECK_THROWS_AS(parse_graph_expression("   "), parse_error);
    CHECK_THROWS_AS(parse_graph_expression("K2 +"), parse_error);
    CHECK_THROWS_AS(parse_graph_expression("K2 ) "), parse_error);
    CHECK_THROWS_AS(parse_graph_expression("M(1,2)"), parse_error);
    CHECK_THROWS_AS(parse_graph_expression("K{2,}"), parse_error);
    CHECK_THROWS_AS(parse_graph_expression("3K2"), parse_error); // star needed
    try {
        parse_graph_expression("K2 v Q3");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("evaluate: F_2 via join of copies") {
    GraphExpr e = GraphExpr::join(GraphExpr::complete(1),
                                  GraphExpr::copies(2, GraphExpr::complete(2)));
    Graph g = evaluate_expression(e);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 6);
    auto prof = degree_profile(g);
    CHECK(prof.degree_multiset == std::vector<int>{2, 2, 2, 2, 4});
    CHECK(is_isomorphic(g, make_friendship(2)));
}

TEST_CASE("evaluate: complement and multipartite atoms") {
    CHECK(evaluate_expression(parse_graph_expression("~K4")).edge_count() == 0);
    Graph star = evaluate_expression(parse_graph_expression("K{1,4}"));
    CHECK(degree_profile(star).degree_multiset == std::vector<int>{1, 1, 1, 1, 4});
}

TEST_CASE("evaluate: static order always matches the built graph") {
    const char* samples[] = {"K2 v 3*K3", "C4 + K1",      "~(C5 v K2)",
                             "2*(K3 + P2)", "M(2,3,2)",   "F4",
                             "K{2,3} v E2", "~~P6",       "(K2 + K2) v 2*K1"};
    for (const char* s : samples) {
        GraphExpr e = parse_graph_expression(s);
        CHECK(evaluate_expression(e).order() == e.order());
    }
}

TEST_CASE("evaluate: capacity limit") {
    CHECK_THROWS_AS(evaluate_expression(parse_graph_expression("65*K1")), capacity_error);
    CHECK_THROWS_AS(evaluate_expression(parse_graph_expression("M(4,9,7)")),
                    capacity_error);
    CHECK_NOTHROW(evaluate_expression(parse_graph_expression("64*K1")));
}

TEST_CASE("multicone: friendship and clique degenerations") {
    Graph f2 = build_multicone({1, 2, 2});
    CHECK(f2.order() == 5);
    CHECK(f2.edge_count() == 6);

    Graph m = build_multicone({2, 3, 3});
    CHECK(m.order() == 11);
    CHECK(m.edge_count() == 28); // 1 + 18 + 9

    CHECK(is_isomorphic(build_multicone({3, 1, 2}), make_complete(5)));
}

TEST_CASE("multicone: s = 1 collapses to the complete graph") {
    for (int r = 1; r <= 4; ++r)
        for (int t = 1; t <= 4; ++t)
            CHECK(is_isomorphic(build_multicone({r, 1, t}), make_complete(r + t)));
}

TEST_CASE("multicone: edge count formula") {
    for (int r = 1; r <= 5; ++r)
        for (int s = 1; s <= 5; ++s)
            for (int t = 1; t <= 5; ++t) {
                MulticoneParams mp{r, s, t};
                if (mp.order() > Graph::kMaxOrder) continue;
                CHECK(build_multicone(mp).edge_count() == mp.edge_count());
            }
}

TEST_CASE("expression round trip through to_string") {
    const char* samples[] = {"K2 v 3*K3", "C4 + K1", "M(2,3,2)", "~K4", "K{2,3}"};
    for (const char* s : samples) {
        GraphExpr e = parse_graph_expression(s);
        GraphExpr back = parse_graph_expression(e.to_string());
        CHECK(evaluate_expression(back) == evaluate_expression(e));
    }
}

TEST_CASE("parser never crashes on arbitrary input") {
    std::mt19937_64 rng(987);
    const std::string alphabet = "KCPEFM0123456789+v*~(){},. ";
    for (int trial = 0; trial < 3000; ++trial) {
        std::string s;
        int len = static_cast<int>(rng() % 16);
        for (int i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
        try {
            GraphExpr e = parse_graph_expression(s);
            if (e.order() <= Graph::kMaxOrder) {
                Graph g = evaluate_expression(e);
                CHECK(g.order() == e.order());
            }
        } catch (const parse_error&) {
        } catch (const capacity_error&) {
        }
    }
}

TEST_CASE("random expression trees evaluate to their static order") {
    std::mt19937_64 rng(246);
    std::function<GraphExpr(int)> build = [&](int depth) -> GraphExpr {
        int pick = static_cast<int>(rng() % (depth > 0 ? 10 : 6));
        int size = 1 + static_cast<int>(rng() % 4);
        switch (pick) {
            case 0: return GraphExpr::complete(size);
            case 1: return GraphExpr::cycle(size + 2);
            case 2: return GraphExpr::path(size);
            case 3: return GraphExpr::empty(size);
            case 4: return GraphExpr::friendship(size);
            case 5:
                return GraphExpr::multicone(size, 1 + static_cast<int>(rng() % 3),
                                            1 + static_cast<int>(rng() % 3));
            case 6: return GraphExpr::complement(build(depth - 1));
            case 7: return GraphExpr::copies(1 + static_cast<int>(rng() % 3),
                                             build(depth - 1));
            case 8: return GraphExpr::join(build(depth - 1), build(depth - 1));
            default: {
                std::vector<GraphExpr> parts;
                parts.push_back(build(depth - 1));
                parts.push_back(build(depth - 1));
                return GraphExpr::disjoint_union(std::move(parts));
            }
        }
    };
    int built = 0;
    for (int trial = 0; trial < 400; ++trial) {
        GraphExpr e = build(3);
        if (e.order() > Graph::kMaxOrder) continue;
        Graph g = evaluate_expression(e);
        CHECK(g.order() == e.order());
        // round trip through the printer
        GraphExpr back = parse_graph_expression(e.to_string());
        CHECK(evaluate_expression(back) == g);
        ++built;
    }
    CHECK(built > 100);
}
