#include <gtest/gtest.h>

#include "localhom/builtins.hpp"
#include "localhom/io.hpp"
#include "localhom/mv.hpp"
#include "localhom/verify.hpp"

using namespace localhom;

TEST(InducedMap, IdentityInclusion) {
    const auto k = builtin("torus7");
    const SubcomplexPair p(k, SimplicialComplex{});
    const auto m = induced_map(p, p, 1);
    EXPECT_EQ(m.matrix, to_rational(IntegerMatrix::identity(2)));
}

TEST(InducedMap, PointIntoSphere) {
    const auto s = builtin("sphere2");
    const auto pt = parse_complex("3");
    const auto m = induced_map(SubcomplexPair(pt, SimplicialComplex{}), SubcomplexPair(s, SimplicialComplex{}), 0);
    EXPECT_EQ(m.source_dimension(), 1u);
    EXPECT_EQ(m.target_dimension(), 1u);
    EXPECT_EQ(m.rank(), 1u);
}

TEST(InducedMap, EquatorIsZeroInOctahedron) {
    const auto oct = builtin("octahedron");
    // Vertices 2,3,4,5 form the equator between poles 1 and 6.
    const auto equator = parse_complex("2 3\n3 4\n4 5\n2 5");
    const auto m = induced_map(SubcomplexPair(equator, SimplicialComplex{}),
                               SubcomplexPair(oct, SimplicialComplex{}), 1);
    EXPECT_EQ(m.source_dimension(), 1u);
    EXPECT_EQ(m.target_dimension(), 0u);
    EXPECT_EQ(m.rank(), 0u);
}

TEST(InducedMap, IntoRelativePair) {
    // The fundamental class survives collapsing the lower hemisphere.
    const auto oct = builtin("octahedron");
    const auto lower = star(oct, "6");
    const auto m = induced_map(SubcomplexPair(oct, SimplicialComplex{}), SubcomplexPair(oct, lower), 2);
    EXPECT_EQ(m.source_dimension(), 1u);
    EXPECT_EQ(m.target_dimension(), 1u);
    EXPECT_EQ(m.rank(), 1u);
}

TEST(InducedMap, RejectsNonInclusion) {
    const auto oct = builtin("octahedron");
    const auto stray = parse_complex("1 6");
    EXPECT_THROW(induced_map(SubcomplexPair(stray, SimplicialComplex{}), SubcomplexPair(oct, SimplicialComplex{}), 0),
                 PreconditionError);
    EXPECT_THROW(induced_map(SubcomplexPair(oct, star(oct, "1")), SubcomplexPair(oct, SimplicialComplex{}), 0),
                 PreconditionError);
}

TEST(MayerVietoris, DegenerateCover) {
    const auto k = builtin("octahedron");
    const auto sub = deleted(k, "1");
    const auto report = mv_exactness_check(MvDecomposition(k, k, k, sub, sub), 3);
    EXPECT_TRUE(report.exact());
    EXPECT_EQ(report.nodes.size(), 12u);
}

TEST(MayerVietoris, TwoTrianglesAndEulerAdditivity) {
    const auto k = parse_complex("1 2 3\n2 3 4");
    const auto a = parse_complex("1 2 3");
    const auto b = parse_complex("2 3 4");
    const auto report = mv_exactness_check(MvDecomposition(k, a, b), 3);
    EXPECT_TRUE(report.exact());
    const auto ab = intersection(rebase(k, a), rebase(k, b));
    EXPECT_EQ(k.euler_characteristic(), a.euler_characteristic() + b.euler_characteristic() - ab.euler_characteristic());
}

TEST(MayerVietoris, StandardDecompositionsAreExact) {
    for (const auto& [name, m] : mv_test_decompositions(corpus_dir())) {
        const auto report = mv_exactness_check(m, 3);
        for (const auto& node : report.nodes) EXPECT_TRUE(node.exact()) << name << ": " << node.name;
    }
}

TEST(MayerVietoris, HemispheresConnectingMapIsIsomorphism) {
    const auto k = builtin("octahedron");
    const auto report = mv_exactness_check(MvDecomposition(k, star(k, "1"), star(k, "6")), 2);
    // H_2(S^2) -> H_1(equator) carries the fundamental class to the circle.
    EXPECT_EQ(report.connecting[2].rank(), 1u);
    EXPECT_EQ(report.connecting[2].source_dimension(), 1u);
}

TEST(MayerVietoris, WedgeMiddleMapIsRankTwoIsomorphism) {
    const auto ds = mv_test_decompositions(corpus_dir());
    const auto& m = ds.back().decomposition;
    const auto report = mv_exactness_check(m, 3);
    EXPECT_TRUE(report.exact());
    EXPECT_EQ(report.to_union[2].source_dimension(), 2u);
    EXPECT_EQ(report.to_union[2].target_dimension(), 2u);
    EXPECT_EQ(report.to_union[2].rank(), 2u);
}

TEST(MayerVietoris, DecompositionValidation) {
    const auto k = parse_complex("1 2 3\n2 3 4");
    const auto a = parse_complex("1 2 3");
    EXPECT_THROW(MvDecomposition(k, a, a), PreconditionError);                          // K != A u B
    EXPECT_THROW(MvDecomposition(k, a, k, parse_complex("3 4")), PreconditionError);    // C not in A
    EXPECT_THROW(MvDecomposition(k, a, parse_complex("2 3 4"), parse_complex("2 3")),  // C n B not in D
                 PreconditionError);
    EXPECT_THROW(MvDecomposition(k, a, k, parse_complex("9")), PreconditionError);
    EXPECT_THROW(mv_exactness_check(MvDecomposition(k, k, k), -1), PreconditionError);
}

TEST(MayerVietoris, RenderMentionsEveryNode) {
    const auto k = parse_complex("1 2 3\n2 3 4");
    const auto text = render(mv_exactness_check(MvDecomposition(k, parse_complex("1 2 3"), parse_complex("2 3 4")), 1));
    EXPECT_NE(text.find("H_1(A, C) + H_1(B, D)"), std::string::npos);
    EXPECT_NE(text.find("EXACT"), std::string::npos);
}
