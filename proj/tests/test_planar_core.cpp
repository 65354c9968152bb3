#include "support.hpp"

#include "twodist/error.hpp"
#include "twodist/gallery.hpp"
#include "twodist/generator.hpp"
#include "twodist/planar_graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace twodist;
namespace gal = twodist::gallery;

namespace {

int face_degree_sum(const PlanarGraph& g)
{
    int s = 0;
    for (const Face& f : g.faces())
        s += f.degree();
    return s;
}

void expect_invariants(const PlanarGraph& g)
{
    const int n = g.order(), m = g.size(), f = static_cast<int>(g.faces().size());
    EXPECT_EQ(n - m + f, 2);
    EXPECT_EQ(face_degree_sum(g), 2 * m);
    int degsum = 0;
    for (Vertex v = 0; v < n; ++v) {
        degsum += g.degree(v);
        for (Vertex u : g.rotation(v))
            EXPECT_TRUE(g.adjacent(u, v));
    }
    EXPECT_EQ(degsum, 2 * m);
    // each dart lies on exactly one face
    std::vector<int> seen(2 * m, 0);
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < g.degree(v); ++i)
            ++seen[g.dart_id(v, i)];
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

}  // namespace

TEST(PlanarGraph, TetrahedronHasFourTriangles)
{
    const PlanarGraph g = gal::tetrahedron();
    EXPECT_EQ(g.order(), 4);
    EXPECT_EQ(g.size(), 6);
    ASSERT_EQ(g.faces().size(), 4u);
    for (const Face& f : g.faces())
        EXPECT_EQ(f.degree(), 3);
    expect_invariants(g);
}

TEST(PlanarGraph, CycleHasTwoFaces)
{
    const PlanarGraph g = gal::cycle(6);
    ASSERT_EQ(g.faces().size(), 2u);
    EXPECT_EQ(g.faces()[0].degree(), 6);
    EXPECT_EQ(g.faces()[1].degree(), 6);
}

TEST(PlanarGraph, TreeHasOneFaceOfDegreeTwiceM)
{
    const PlanarGraph g = gal::star(6);
    ASSERT_EQ(g.faces().size(), 1u);
    EXPECT_EQ(g.faces()[0].degree(), 12);
    const PlanarGraph p = gal::path(3);
    ASSERT_EQ(p.faces().size(), 1u);
    EXPECT_EQ(p.faces()[0].degree(), 4);
}

TEST(PlanarGraph, SingleVertexAndEmpty)
{
    const PlanarGraph one = gal::single_vertex();
    EXPECT_EQ(one.order(), 1);
    EXPECT_EQ(one.faces().size(), 1u);
    const PlanarGraph none = PlanarGraph::from_rotations({});
    EXPECT_EQ(none.order(), 0);
}

TEST(PlanarGraph, PolytopesSatisfyEuler)
{
    for (const PlanarGraph& g : {gal::octahedron(), gal::cube(), gal::icosahedron(), gal::wheel(6), gal::bowtie()})
        expect_invariants(g);
    EXPECT_EQ(gal::octahedron().faces().size(), 8u);
    EXPECT_EQ(gal::cube().faces().size(), 6u);
    EXPECT_EQ(gal::icosahedron().faces().size(), 20u);
    const PlanarGraph cube = gal::cube();
    for (const Face& f : cube.faces())
        EXPECT_EQ(f.degree(), 4);
}

TEST(PlanarGraph, AsymmetricRotationRejected)
{
    try {
        PlanarGraph::from_rotations({{1, 2}, {0, 2}, {1}});
        FAIL() << "accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EmbeddingInvalid);
    }
}

TEST(PlanarGraph, LoopsAndMultiEdgesRejected)
{
    EXPECT_THROW(PlanarGraph::from_rotations({{0}}), Error);
    EXPECT_THROW(PlanarGraph::from_rotations({{1, 1}, {0, 0}}), Error);
    EXPECT_THROW(PlanarGraph::from_rotations({{5}, {0}}), Error);
}

TEST(PlanarGraph, DisconnectedRejected)
{
    try {
        PlanarGraph::from_rotations({{1}, {0}, {3}, {2}});
        FAIL() << "accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotConnected);
    }
}

TEST(PlanarGraph, NonPlanarRotationFailsEuler)
{
    // K4 with one rotation flipped gives a torus-like face count
    auto rot = gal::tetrahedron().rotations();
    std::reverse(rot[0].begin(), rot[0].end());
    try {
        PlanarGraph::from_rotations(rot);
        FAIL() << "accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EmbeddingInvalid);
    }
}

TEST(PlanarGraph, K5HasNoPlanarRotation)
{
    std::vector<std::vector<Vertex>> rot(5);
    for (Vertex v = 0; v < 5; ++v)
        for (Vertex u = 0; u < 5; ++u)
            if (u != v)
                rot[v].push_back(u);
    EXPECT_THROW(PlanarGraph::from_rotations(rot), Error);
}

TEST(PlanarGraph, CornerFaceMatchesDartConvention)
{
    const PlanarGraph g = gal::wheel(5);
    // every corner of the hub is a triangle; the rim corners alternate
    for (int i = 0; i < 5; ++i)
        EXPECT_EQ(g.corner_degree(0, i), 3);
    for (Vertex v = 1; v <= 5; ++v) {
        int tri = 0, big = 0;
        for (int i = 0; i < 3; ++i)
            (g.corner_degree(v, i) == 3 ? tri : big)++;
        EXPECT_EQ(tri, 2);
        EXPECT_EQ(big, 1);
        for (int i = 0; i < 3; ++i)
            EXPECT_EQ(g.corner_face(v, i), g.face_of_dart(v, (i + 1) % 3));
    }
    const auto [a, b] = g.edge_face_degrees(1, 2);
    EXPECT_EQ(std::min(a, b), 3);
    EXPECT_EQ(std::max(a, b), 5);
}

TEST(PlanarGraph, FaceWalkFollowsSuccessor)
{
    const PlanarGraph g = gal::octahedron();
    for (const Face& f : g.faces()) {
        const auto& b = f.boundary;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const Vertex u = b[i], v = b[(i + 1) % b.size()], w = b[(i + 2) % b.size()];
            auto rot = g.rotation(v);
            const int at = g.index_of(v, u);
            ASSERT_GE(at, 0);
            EXPECT_EQ(rot[(at + 1) % rot.size()], w);
        }
    }
}

TEST(PlanarGraph, DistanceProfileOfStarCentreAndLeaf)
{
    const PlanarGraph g = gal::star(6);
    EXPECT_EQ(distance_profile(g, 0).d2, 6);
    EXPECT_EQ(distance_profile(g, 1).d2, 6);
    EXPECT_THROW(distance_profile(g, 7), Error);
}

TEST(PlanarGraph, SquareOfC5IsK5)
{
    const SimpleGraph s = square(gal::cycle(5));
    EXPECT_EQ(s.edge_count(), 10u);
    const SimpleGraph c6 = square(gal::cycle(6));
    EXPECT_EQ(c6.edge_count(), 12u);
}

TEST(PlanarGraph, BfsAgreesWithFloydOnGeneratedGraphs)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const PlanarGraph g = gen_planar(30 + static_cast<int>(seed), 6, seed);
        expect_invariants(g);
        const auto d = check::floyd(g);
        const BitMatrix sq = square_matrix(g);
        const SimpleGraph s = square(g);
        for (Vertex v = 0; v < g.order(); ++v) {
            const auto bfs = bfs_distances(g, v);
            int within2 = 0;
            for (Vertex u = 0; u < g.order(); ++u) {
                ASSERT_EQ(bfs[u], d[v][u]);
                const bool close = u != v && d[v][u] <= 2;
                within2 += close;
                EXPECT_EQ(sq.test(v, u), close);
                EXPECT_EQ(s.adjacent(v, u), close);
            }
            EXPECT_EQ(distance_profile(g, v).d2, within2);
            EXPECT_EQ(s.degree(v), within2);
        }
    }
}

TEST(PlanarGraph, RotationsRoundTripThroughConstructor)
{
    const PlanarGraph g = gen_planar(50, 6, 7);
    const PlanarGraph h = PlanarGraph::from_rotations(g.rotations());
    EXPECT_EQ(g, h);
    EXPECT_EQ(g.faces().size(), h.faces().size());
}

TEST(PlanarGraph, SortedNeighbours)
{
    const PlanarGraph g = gal::icosahedron();
    for (Vertex v = 0; v < g.order(); ++v) {
        auto s = g.sorted_neighbors(v);
        EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
        EXPECT_EQ(static_cast<int>(s.size()), 5);
    }
}
