#include <gtest/gtest.h>

#include "cyclemod/classify.hpp"
#include "cyclemod/constructions.hpp"
#include "cyclemod/lemmas.hpp"
#include "support.hpp"

using namespace cyclemod;

namespace {

OrientedCycle ring(std::size_t n) {
    std::vector<Vertex> v(n);
    std::iota(v.begin(), v.end(), 0);
    return OrientedCycle(v);
}

std::string precondition_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const precondition_failed& e) {
        return e.what();
    }
    return "no error";
}

} // namespace

TEST(ModDiagonal, Examples) {
    EXPECT_TRUE(is_mod_diagonal(ring(6), 0, 3));
    EXPECT_TRUE(is_mod_diagonal(ring(5), 0, 1));
    EXPECT_FALSE(is_mod_diagonal(ring(5), 0, 2));
    EXPECT_FALSE(is_mod_diagonal(ring(4), 0, 1));
    EXPECT_THROW(is_mod_diagonal(ring(4), 0, 9), vertex_not_on_cycle);
    EXPECT_THROW(is_mod_diagonal(ring(4), 2, 2), precondition_failed);
}

TEST(ModDiagonal, FiveCycleDiagonalIffAdjacent) {
    const auto c = ring(5);
    for (Vertex x = 0; x < 5; ++x)
        for (Vertex y = 0; y < 5; ++y)
            if (x != y) {
                const bool adjacent = (x + 1) % 5 == y || (y + 1) % 5 == x;
                EXPECT_EQ(is_mod_diagonal(c, x, y), adjacent);
            }
}

TEST(ArcArithmetic, Examples) {
    // C_6 with arcs 2, 2, 2: x = 0, y = 2, z = 4.
    const auto r = lemma1_checks(ring(6), 0, 2, 4);
    EXPECT_EQ(r.arc_xy, 2u);
    EXPECT_FALSE(r.xy_diagonal);
    EXPECT_TRUE(r.part1_holds);
    EXPECT_FALSE(r.part2.has_value());

    // Antipodal pair on C_6 is diagonal, matching 3 == -6 (mod 3).
    const auto a = lemma1_checks(ring(6), 0, 3, 4);
    EXPECT_TRUE(a.xy_diagonal);
    EXPECT_TRUE(a.part1_holds);

    // C_9, x = 0 diagonal with 3 and 6: the y-z arc is 3.
    const auto b = lemma1_checks(ring(9), 0, 3, 6);
    ASSERT_TRUE(b.part2.has_value());
    EXPECT_TRUE(*b.part2);

    EXPECT_THROW(lemma1_checks(ring(6), 0, 4, 2), order_violation);
    EXPECT_THROW(lemma1_checks(ring(6), 0, 0, 2), order_violation);
}

TEST(Bridges, Examples) {
    const auto k4 = bridges_of_cycle(complete(4), OrientedCycle(std::vector<Vertex>{0, 1, 2, 3}));
    ASSERT_EQ(k4.size(), 2u);
    for (const auto& b : k4)
        EXPECT_EQ(b.kind, Bridge::Kind::chord);

    // L1: the 5-cycle is vertices 0..4 and the tree is 5..7.
    const Graph l1 = l_graph(1);
    const auto lb = bridges_of_cycle(l1, OrientedCycle(l1, std::vector<Vertex>{0, 1, 2, 3, 4}));
    ASSERT_EQ(lb.size(), 1u);
    EXPECT_EQ(lb[0].kind, Bridge::Kind::component);
    EXPECT_EQ(lb[0].interior, (VertexSet{5, 6, 7}));
    EXPECT_EQ(lb[0].attachments.size(), 3u);
    EXPECT_EQ(lb[0].edges.size(), 5u);

    EXPECT_TRUE(bridges_of_cycle(cycle_graph(7), ring(7)).empty());
}

TEST(Bridges, PartitionEdgesOffTheCycle) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        const Graph g = support::random_graph(rng, 5 + t % 6, 0.45);
        const auto w = shortest_cycle(g);
        if (!w)
            continue;
        const auto bridges = bridges_of_cycle(g, *w);
        std::multiset<Edge> covered;
        std::multiset<Vertex> interiors;
        for (const auto& b : bridges) {
            covered.insert(b.edges.begin(), b.edges.end());
            interiors.insert(b.interior.begin(), b.interior.end());
        }
        EXPECT_EQ(covered.size() + w->length(), g.edge_count());
        for (Vertex v = 0; v < g.order(); ++v)
            EXPECT_EQ(interiors.count(v), w->contains(v) ? 0u : 1u);
    }
}

TEST(ThreePathFan, Examples) {
    // x = 0, y = 1. P is the edge; Q_i have lengths 1 + {1, 2, 3}... the
    // edge itself cannot be reused, so lengths 2, 3, 4 with |P| = 1.
    {
        const Graph g = make_graph(8, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 7}, {7, 1}});
        const auto w = verify_three_path_fan(g, PathWitness({0, 1}), PathWitness({0, 2, 1}), PathWitness({0, 3, 4, 1}),
                                             PathWitness({0, 5, 6, 7, 1}));
        EXPECT_EQ(w.vertices.size(), 4u);
        EXPECT_TRUE(check_witness(g, w));
    }
    // |P| = 2, |Q_i| in {2, 3, 4}: the Q of length 2 closes a 4-cycle.
    {
        const Graph g = make_graph(9, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}, {0, 6}, {6, 7}, {7, 8}, {8, 1}});
        const auto w = verify_three_path_fan(g, PathWitness({0, 2, 1}), PathWitness({0, 3, 1}), PathWitness({0, 4, 5, 1}),
                                             PathWitness({0, 6, 7, 8, 1}));
        EXPECT_EQ(w.vertices.size(), 4u);
        EXPECT_TRUE(check_witness(g, w));
    }
}

TEST(ThreePathFan, Preconditions) {
    const Graph g = make_graph(8, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 7}, {7, 1}});
    const PathWitness p({0, 1}), q1({0, 2, 1}), q2({0, 3, 4, 1}), q3({0, 5, 6, 7, 1});
    EXPECT_EQ(precondition_message([&] { verify_three_path_fan(g, PathWitness({0, 4}), q1, q2, q3); }),
              "P is not a path of G");
    EXPECT_EQ(precondition_message([&] { verify_three_path_fan(g, p, q1, q1, q3); }), "Q1 and Q2 have equal lengths mod 3");
    EXPECT_EQ(precondition_message([&] { verify_three_path_fan(g, p, q1, PathWitness({0, 3, 4}), q3); }),
              "Q2 does not share the endpoints of P");
    EXPECT_EQ(precondition_message([&] {
                  verify_three_path_fan(g, PathWitness({0, 2, 1}), PathWitness({0, 2, 1}), q2, q3);
              }),
              "P is not internally disjoint from Q1");
}

TEST(Clashing, Examples) {
    // Two 4-cycles 0-1-2-3 and 4-5-6-7, joined 0-4 and 1-5.
    const Graph g = make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}});
    const OrientedCycle c1(g, std::vector<Vertex>{0, 1, 2, 3}), c2(g, std::vector<Vertex>{4, 5, 6, 7});
    const auto w = verify_clashing_configuration(g, c1, c2, PathWitness({0, 4}), PathWitness({1, 5}));
    EXPECT_EQ(w.vertices.size(), 4u);
    EXPECT_TRUE(check_witness(g, w));

    // A 5-cycle with attachments at distance 2 and a 4-cycle with adjacent ones.
    const Graph h = make_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 5}, {0, 5}, {2, 6}});
    const OrientedCycle d1(h, std::vector<Vertex>{0, 1, 2, 3, 4}), d2(h, std::vector<Vertex>{5, 6, 7, 8});
    const auto v = verify_clashing_configuration(h, d1, d2, PathWitness({0, 5}), PathWitness({2, 6}));
    EXPECT_TRUE(check_witness(h, v));

    // Adjacent pair on a 5-cycle is mod-diagonal.
    const Graph k = make_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 5}, {0, 5}, {1, 6}});
    EXPECT_EQ(precondition_message([&] {
                  verify_clashing_configuration(k, OrientedCycle(k, std::vector<Vertex>{0, 1, 2, 3, 4}),
                                                OrientedCycle(k, std::vector<Vertex>{5, 6, 7, 8}), PathWitness({0, 5}),
                                                PathWitness({1, 6}));
              }),
              "C1 pair mod-diagonal");
    EXPECT_EQ(precondition_message([&] { verify_clashing_configuration(g, c1, c1, PathWitness({0, 4}), PathWitness({1, 5})); }),
              "C1 and C2 are not disjoint");
}

TEST(TwoPaths, Examples) {
    // Theta: x = 0, y = 1, arcs of length 2 and 3.
    const Graph theta = make_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}});
    const auto r = two_paths_distinct_mod3(theta, 0, 1);
    ASSERT_TRUE(r.has_value());
    std::multiset<std::size_t> lengths{r->first.length(), r->second.length()};
    EXPECT_EQ(lengths, (std::multiset<std::size_t>{2, 3}));

    EXPECT_FALSE(two_paths_distinct_mod3(cycle_graph(6), 0, 3).has_value());
    EXPECT_THROW(two_paths_distinct_mod3(cycle_graph(6), 2, 2), precondition_failed);
}

TEST(TwoDisjointCycles, Examples) {
    const Graph two = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    const auto r = two_disjoint_cycles(two);
    ASSERT_TRUE(r.has_value());
    for (Vertex v : r->first.vertices())
        EXPECT_FALSE(r->second.contains(v));
    EXPECT_FALSE(two_disjoint_cycles(l_graph(3)).has_value());
    EXPECT_FALSE(two_disjoint_cycles(complete(5)).has_value());
    EXPECT_TRUE(two_disjoint_cycles(petersen()).has_value());
}

TEST(TwoDisjointCycles, AgreesWithPairScan) {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 300; ++t) {
        const Graph g = support::random_graph(rng, 5 + t % 5, 0.35);
        const auto cycles = support::all_cycles(g);
        bool expected = false;
        for (auto a = cycles.begin(); a != cycles.end() && !expected; ++a)
            for (auto b = std::next(a); b != cycles.end() && !expected; ++b) {
                std::set<Vertex> sa(a->begin(), a->end());
                expected = std::none_of(b->begin(), b->end(), [&](Vertex v) { return sa.contains(v); });
            }
        const auto r = two_disjoint_cycles(g);
        EXPECT_EQ(r.has_value(), expected) << emit_graph6(g);
        if (r) {
            EXPECT_TRUE(check_witness(g, CycleWitness{r->first.vertices(), ResidueClass(0, 1)}));
            EXPECT_TRUE(check_witness(g, CycleWitness{r->second.vertices(), ResidueClass(0, 1)}));
        }
    }
}

TEST(Classifier, Examples) {
    using Kind = L123Classification::Kind;
    EXPECT_EQ(classify_L123_instance(l_graph(1)).kind, Kind::l1);
    EXPECT_EQ(classify_L123_instance(l_graph(2)).kind, Kind::l2);
    EXPECT_EQ(classify_L123_instance(l_graph(3)).kind, Kind::l3);
    const auto p = classify_L123_instance(petersen());
    EXPECT_EQ(p.kind, Kind::not_applicable);
    EXPECT_EQ(classify_L123_instance(cycle_graph(5)).clause, "G - C is empty");
    EXPECT_EQ(classify_L123_instance(complete(4)).clause, "contains a (1 mod 3)-cycle");
    EXPECT_EQ(classify_L123_instance(path_graph(4)).clause, "not 2-connected");
}

TEST(Classifier, RhoCondition) {
    const Graph l1 = l_graph(1);
    EXPECT_TRUE(rho_condition(l1, VertexSet{5, 6, 7}));
    EXPECT_EQ(rho(l1, VertexSet{5, 6, 7}), 5u);
    EXPECT_FALSE(rho_condition(cycle_graph(6), VertexSet{3, 4}));
}
