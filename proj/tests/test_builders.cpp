#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "syz/builders.hpp"

using namespace syz;

namespace {

const Field F(32003);

Polynomial poly(const std::string& s) { return parse_polynomial(F, {"x", "y", "z"}, s); }

}  // namespace

TEST(Counting, EnBettiValues)
{
    EXPECT_EQ(en_betti(3, 1), 3);
    EXPECT_EQ(en_betti(3, 2), 2);
    EXPECT_EQ(en_betti(3, 3), 0);
    EXPECT_EQ(en_betti(4, 2), 8);
    EXPECT_EQ(en_betti(5, 4), 4);
    EXPECT_THROW(en_betti(0, 1), InputError);
}

TEST(RationalNormalCurve, IdealAndSampler)
{
    for (int n = 2; n <= 5; ++n) {
        auto X = rational_normal_curve(n);
        EXPECT_EQ(X.ideal.generators().size(), static_cast<std::size_t>(binomial(n, 2)));
        auto hp = hilbert_polynomial(X.ideal);
        EXPECT_EQ(hp.dimension, 1);
        EXPECT_EQ(hp.degree, n);
        for (std::uint64_t k = 0; k < 5; ++k)
            EXPECT_TRUE(ProjectivePoint(F, *X.sampler(k)).lies_on(X.ideal));
    }
    // t = ∞ gives the last coordinate point
    EXPECT_EQ(*rational_normal_curve(3).sampler(1), (std::vector<Elem>{0, 0, 0, 1}));
    EXPECT_THROW(rational_normal_curve(1), InputError);
}

TEST(Scroll, CatalogAndHilbertData)
{
    auto cat = scroll_catalog(5, 3);
    EXPECT_EQ(cat.size(), 15u);
    std::set<std::vector<int>> seen;
    for (const auto& s : cat) {
        EXPECT_TRUE(seen.insert(s.e).second);
        EXPECT_LE(s.dimension(), 3);
        EXPECT_LE(s.degree(), 5);
    }
    for (const auto& s : cat) {
        if (s.ambient_dim() > 7)
            continue;
        auto X = scroll(s);
        auto hp = hilbert_polynomial(X.ideal);
        EXPECT_EQ(hp.dimension, s.dimension()) << s.to_string();
        EXPECT_EQ(hp.degree, s.degree()) << s.to_string();
        EXPECT_EQ(static_cast<std::int64_t>(graded_component(X.ideal, 2).size()), binomial(s.degree(), 2));
        for (std::uint64_t k = 0; k < 4; ++k)
            EXPECT_TRUE(ProjectivePoint(F, *X.sampler(k)).lies_on(X.ideal)) << s.to_string();
    }
    EXPECT_THROW(scroll(ScrollSpec{{}}), InputError);
    EXPECT_THROW(scroll(ScrollSpec{{0, 2}}), InputError);
}

TEST(CompleteIntersection, CanonicalCurves)
{
    auto C4 = complete_intersection({2, 3}, 1);
    auto hp = hilbert_polynomial(C4.ideal);
    EXPECT_EQ(hp.dimension, 1);
    EXPECT_EQ(hp.degree, 6);
    EXPECT_EQ(hp.evaluate(0), 1 - 4);  // 1 - g
    auto C5 = complete_intersection({2, 2, 2}, 1);
    EXPECT_EQ(hilbert_polynomial(C5.ideal).degree, 8);
    EXPECT_EQ(hilbert_polynomial(C5.ideal).evaluate(0), 1 - 5);
    EXPECT_THROW(complete_intersection({2, 2}, 1), InputError);
    EXPECT_THROW(complete_intersection({1, 4}, 1), InputError);
    // deterministic in the seed
    EXPECT_TRUE(ideal_equal(complete_intersection({2, 3}, 9).ideal, complete_intersection({2, 3}, 9).ideal));
}

TEST(QuadricHull, ScrollContainingTrigonalCurve)
{
    auto trig = nodal_quintic_model(1, 1, 2);
    auto hull = quadric_hull(trig.scheme.ideal);
    EXPECT_EQ(hull.hilbert.dimension, 2);
    EXPECT_EQ(hull.hilbert.degree, 3);
    EXPECT_TRUE(hull.warnings.empty());
    auto ci = complete_intersection({2, 2, 2}, 3);
    EXPECT_TRUE(ideal_equal(quadric_hull(ci.ideal).ideal, ci.ideal));
    Ideal cubic(F, {"x", "y", "z"}, {poly("x^3 + y^3 + z^3")});
    EXPECT_FALSE(quadric_hull(cubic).warnings.empty());
}

TEST(EmbeddedScheme, RejectsDegenerateIdeals)
{
    Ideal I(F, default_names(3), {parse_polynomial(F, default_names(3), "x0 - x1")});
    EXPECT_THROW(EmbeddedScheme(I, "plane"), InputError);
}

TEST(PlaneModel, Validation)
{
    EXPECT_EQ(detail::multiplicity_at(poly("x^2*z - y^3"), {0, 0, 1}), 2);
    EXPECT_EQ(detail::multiplicity_at(poly("x^2*z - y^3"), {1, 0, 0}), 1);
    EXPECT_EQ(detail::multiplicity_at(poly("x^2*z - y^3"), {1, 0, 1}), 0);
    PlaneModel doubled{poly("(x*y - z^2)^2"), {}, 1};
    EXPECT_THROW(validate_plane_model(doubled), InputError);
    PlaneModel wrong{poly("x^3 + y^3 + z^3"), {{{0, 0, 1}, 2}}, 1};
    EXPECT_THROW(validate_plane_model(wrong), InputError);
    PlaneModel cusp{poly("x^2*z - y^3"), {{{0, 0, 1}, 2}}, 1};
    EXPECT_NO_THROW(validate_plane_model(cusp));
    EXPECT_EQ(plane_system_expected_dim(cusp), 2);
    EXPECT_EQ(plane_system_expected_degree(cusp), 1);
}

TEST(PlaneModel, SmoothQuarticCanonicalModelIsItself)
{
    PlaneModel m{poly("x^4 + y^4 + z^4 + 3*x*y*z^2"), {}, 1};
    auto r = implicitize_plane_model(m);
    EXPECT_EQ(r.sections.size(), 3u);
    EXPECT_TRUE(r.degree_matches);
    EXPECT_EQ(r.scheme.ideal.generators().size(), 1u);
    EXPECT_EQ(r.scheme.ideal.generators()[0].degree(), 4);
}

TEST(NodalQuintic, SingularitiesAndModels)
{
    for (int nodes = 1; nodes <= 2; ++nodes) {
        auto Fq = nodal_plane_quintic(nodes, 5);
        EXPECT_EQ(singular_scheme_degree(Fq), nodes);
        EXPECT_EQ(detail::multiplicity_at(Fq, node_point(0)), 2);
    }
    auto C = nodal_quintic_model(2, 2, 5);
    EXPECT_EQ(C.scheme.ideal.nvars(), 4);
    EXPECT_EQ(C.hilbert.degree, 6);
    EXPECT_EQ(C.hilbert.evaluate(0), 1 - 4);
    auto D = nodal_quintic_model(2, 1, 5);
    EXPECT_EQ(D.scheme.ideal.nvars(), 5);
    EXPECT_EQ(D.hilbert.degree, 8);
    EXPECT_EQ(D.hilbert.evaluate(0), 1 - 5);  // arithmetic genus 5
    EXPECT_THROW(nodal_quintic_model(1, 2, 5), InputError);
    EXPECT_THROW(nodal_plane_quintic(3, 5), InputError);
}

TEST(Sampling, SpanningDistinctPointsFromSampler)
{
    auto X = scroll(ScrollSpec{{1, 2}});
    auto pts = sample_points(X, 10);
    ASSERT_EQ(pts.size(), 10u);
    std::vector<SparseVec> cols;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_TRUE(pts[i].lies_on(X.ideal));
        for (std::size_t j = 0; j < i; ++j)
            EXPECT_FALSE(pts[i] == pts[j]);
        cols.push_back(to_sparse(pts[i].coords()));
    }
    EXPECT_EQ(rank(Matrix::from_columns(F, 5, cols)), 5u);
}

TEST(Sampling, SearchWithoutSampler)
{
    auto ci = complete_intersection({2, 3}, 2);
    auto pts = sample_points(ci, 4, 1);
    ASSERT_EQ(pts.size(), 4u);
    for (const auto& P : pts)
        EXPECT_TRUE(P.lies_on(ci.ideal));
    auto surf = EmbeddedScheme(scroll(ScrollSpec{{1, 1}}).ideal, "quadric");
    auto spts = search_points(surf.ideal, 5, 3);
    EXPECT_EQ(spts.size(), 5u);
}

TEST(Recipe, BuildsKnownKinds)
{
    EXPECT_TRUE(ideal_equal(build_from_recipe("rnc 4").ideal, rational_normal_curve(4).ideal));
    EXPECT_TRUE(ideal_equal(build_from_recipe("scroll 1 2").ideal, scroll(ScrollSpec{{1, 2}}).ideal));
    EXPECT_TRUE(ideal_equal(build_from_recipe("ci 2 3 seed=7").ideal, complete_intersection({2, 3}, 7).ideal));
    EXPECT_EQ(build_from_recipe("nodal-quintic nodes=2 assign=2 seed=4").ideal.nvars(), 4);
    EXPECT_EQ(build_from_recipe("rnc 3", Field(31991)).field().characteristic(), 31991u);
    EXPECT_THROW(build_from_recipe("torus 3"), InputError);
    EXPECT_THROW(build_from_recipe("rnc"), InputError);
    EXPECT_THROW(build_from_recipe("scroll a"), InputError);
}

TEST(Recipe, PlaneModelFromFile)
{
    std::string path = ::testing::TempDir() + "nodal_quartic.txt";
    {
        std::ofstream out(path);
        out << "ring x y z\nideal\nx^4 + y^4 + x^2*z^2 + y^2*z^2 + x*y*z^2 - x^3*z\n";
    }
    // node at [0:0:1]; conics through it map the quartic to a sextic in P^4
    auto X = build_from_recipe("plane-model file=" + path + " adjoints=2 node=0,0,1");
    EXPECT_EQ(X.ideal.nvars(), 5);
    EXPECT_EQ(hilbert_polynomial(X.ideal).degree, 6);
    std::remove(path.c_str());
    EXPECT_THROW(build_from_recipe("plane-model adjoints=2"), InputError);
}
