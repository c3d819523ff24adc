#include <gtest/gtest.h>

#include <random>

#include "syz/builders.hpp"
#include "syz/io.hpp"
#include "syz/koszul.hpp"
#include "syz/resolution.hpp"

using namespace syz;

namespace {

const Field F(32003);

Ideal parse(const std::string& ring, const std::vector<std::string>& polys, std::uint32_t p = 32003)
{
    std::string text = "field " + std::to_string(p) + "\nring " + ring + "\nideal\n";
    for (const auto& s : polys)
        text += s + "\n";
    return parse_ideal_text(text).ideal;
}

Ideal twisted_cubic() { return rational_normal_curve(3).ideal; }

Wedge random_wedge(const Field& f, int n, int p, std::mt19937_64& rng)
{
    Wedge w{n, p, {}};
    ExteriorBasis eb(n, p);
    for (auto m : eb.masks())
        w.add(f, m, static_cast<Elem>(rng() % f.characteristic()));
    return w;
}

std::vector<Elem> random_vector(const Field& f, int n, std::mt19937_64& rng)
{
    std::vector<Elem> v(n);
    for (auto& x : v)
        x = static_cast<Elem>(rng() % f.characteristic());
    return v;
}

}  // namespace

TEST(Exterior, BasisOrderAndSigns)
{
    ExteriorBasis eb(4, 2);
    ASSERT_EQ(eb.size(), 6u);
    EXPECT_EQ(subset_elements(eb[0]), (std::vector<int>{0, 1}));
    EXPECT_EQ(subset_elements(eb[1]), (std::vector<int>{0, 2}));
    EXPECT_EQ(subset_elements(eb[3]), (std::vector<int>{1, 2}));
    EXPECT_EQ(subset_elements(eb[5]), (std::vector<int>{2, 3}));
    EXPECT_EQ(removal_sign(F, 0), F.neg(1));
    EXPECT_EQ(removal_sign(F, 1), 1u);
    EXPECT_EQ(binomial(6, 3), 20);
    EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Exterior, ContractionOfSimpleWedge)
{
    Wedge w{3, 2, {}};
    w.add(F, 0b011, 1);
    Wedge r = contract(F, std::vector<Elem>{1, 0, 0}, w);
    ASSERT_EQ(r.terms.size(), 1u);
    EXPECT_EQ(r.terms.begin()->first, 0b010u);
    EXPECT_EQ(r.terms.begin()->second, F.neg(1));
    Wedge s = contract(F, std::vector<Elem>{0, 1, 0}, w);
    EXPECT_EQ(s.terms.begin()->first, 0b001u);
    EXPECT_EQ(s.terms.begin()->second, 1u);
}

class ContractionSquare : public ::testing::TestWithParam<int> {};

TEST_P(ContractionSquare, SquaresToZeroAndAnticommutes)
{
    std::mt19937_64 rng(GetParam());
    const int n = 3 + GetParam() % 4;
    for (int p = 2; p <= n; ++p) {
        Wedge w = random_wedge(F, n, p, rng);
        auto x = random_vector(F, n, rng), y = random_vector(F, n, rng);
        EXPECT_TRUE(contract(F, x, contract(F, x, w)).is_zero());
        Wedge xy = contract(F, x, contract(F, y, w)), yx = contract(F, y, contract(F, x, w));
        for (auto& [m, c] : yx.terms)
            xy.add(F, m, c);
        EXPECT_TRUE(xy.is_zero());
    }
}

INSTANTIATE_TEST_SUITE_P(Random, ContractionSquare, ::testing::Range(0, 10));

TEST(KoszulComplex, DifferentialSquaresToZero)
{
    std::vector<Ideal> ideals{twisted_cubic(), scroll(ScrollSpec{{1, 2}}).ideal,
                              complete_intersection({2, 3}, 4).ideal};
    for (const auto& I : ideals) {
        QuotientRing R(I);
        for (int p = 2; p <= I.nvars(); ++p)
            for (int q = 0; q <= 2; ++q) {
                Matrix a = koszul_matrix(R, p - 1, q + 1), b = koszul_matrix(R, p, q);
                EXPECT_TRUE((a * b).is_zero()) << "p=" << p << " q=" << q;
            }
    }
}

TEST(KoszulComplex, PolynomialRingIsExact)
{
    QuotientRing R(Ideal::zero(F, default_names(4)));
    auto t = betti_table(R, 4, 3);
    EXPECT_EQ(t.at(0, 0), 1);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 3; ++q)
            if (p || q) {
                EXPECT_EQ(t.at(p, q), 0) << p << "," << q;
            }
}

TEST(KoszulComplex, TwistedCubicRanks)
{
    QuotientRing R(twisted_cubic());
    EXPECT_EQ(R.dim(1), 4u);
    EXPECT_EQ(R.dim(2), 7u);
    Matrix m = koszul_matrix(R, 1, 1);
    EXPECT_EQ(m.rows(), 7u);
    EXPECT_EQ(m.cols(), 16u);
    EXPECT_EQ(rank(m), 7u);
    EXPECT_EQ(koszul_rank(R, 2, 0), 6u);
}

TEST(BettiTable, TwistedCubic)
{
    auto t = betti_table(twisted_cubic(), 3, 2);
    EXPECT_EQ(t.at(0, 0), 1);
    EXPECT_EQ(t.at(1, 1), 3);
    EXPECT_EQ(t.at(2, 1), 2);
    EXPECT_EQ(t.at(3, 1), 0);
    for (int p = 0; p <= 3; ++p)
        EXPECT_EQ(t.at(p, 2), 0);
    EXPECT_EQ(t.at(4, 1), std::nullopt);
    EXPECT_NE(t.to_text().find("3"), std::string::npos);
}

TEST(BettiTable, QuadricSurfaceAndCompleteIntersection)
{
    auto q = betti_table(parse("x0 x1 x2 x3", {"x0*x3 - x1*x2"}), 3, 2);
    EXPECT_EQ(q.at(1, 1), 1);
    EXPECT_EQ(q.at(2, 1), 0);
    EXPECT_EQ(q.at(1, 2), 0);
    auto ci = betti_table(complete_intersection({2, 3}, 11).ideal, 3, 3);
    EXPECT_EQ(ci.at(1, 1), 1);
    EXPECT_EQ(ci.at(1, 2), 1);
    EXPECT_EQ(ci.at(2, 1), 0);
    EXPECT_EQ(ci.at(2, 2), 0);
    EXPECT_EQ(ci.at(2, 3), 1);
    EXPECT_EQ(ci.at(3, 3), 0);
}

TEST(BettiTable, ParallelMatchesSerial)
{
    Ideal I = rational_normal_curve(4).ideal;
    auto a = betti_table(I, 4, 2);
    auto b = betti_table(I, 4, 2, KoszulOptions{kDefaultEntryBudget, 4});
    EXPECT_EQ(a, b);
}

TEST(BettiTable, BudgetExceededIsResourceError)
{
    EXPECT_THROW(betti_table(rational_normal_curve(4).ideal, 4, 2, KoszulOptions{100, 1}), ResourceError);
}

TEST(BettiTable, CharacteristicIsRecorded)
{
    auto t = betti_table(rational_normal_curve(3, Field(31991)).ideal, 2, 1);
    EXPECT_EQ(t.characteristic, 31991u);
    EXPECT_EQ(t.at(2, 1), 2);
}

TEST(Cocycles, TwistedCubicBasis)
{
    Ideal I = twisted_cubic();
    auto b1 = k_p1_cocycle_basis(I, 1);
    auto b2 = k_p1_cocycle_basis(I, 2);
    auto b3 = k_p1_cocycle_basis(I, 3);
    EXPECT_EQ(b1.size(), 3u);
    EXPECT_EQ(b2.size(), 2u);
    EXPECT_TRUE(b3.empty());
    for (const auto& a : b2) {
        EXPECT_TRUE(is_cocycle(I, a));
        EXPECT_FALSE(is_coboundary(F, a));
        EXPECT_EQ(KoszulCocycle::from_vector(4, 2, a.to_vector()), a);
    }
    EXPECT_EQ(class_rank(F, b2), 2u);
    // deterministic output
    EXPECT_EQ(k_p1_cocycle_basis(I, 2), b2);
}

TEST(Cocycles, CoboundariesAreCocyclesWithZeroClass)
{
    Ideal I = twisted_cubic();
    for (const auto& v : coboundary_vectors(F, 4, 2)) {
        auto c = KoszulCocycle::from_vector(4, 2, v);
        EXPECT_TRUE(is_cocycle(I, c));
        EXPECT_TRUE(is_coboundary(F, c));
        for (const auto& q : koszul_image_quadrics(F, c))
            EXPECT_TRUE(q.is_zero());
    }
}

TEST(Cocycles, DimensionAgreesWithIdealRoute)
{
    std::vector<Ideal> ideals{twisted_cubic(), rational_normal_curve(4).ideal, scroll(ScrollSpec{{1, 2}}).ideal,
                              complete_intersection({2, 2, 2}, 5).ideal};
    for (const auto& I : ideals) {
        QuotientRing R(I);
        for (int p = 1; p <= 3; ++p)
            EXPECT_EQ(k_p1_dim_via_ideal(I, p), koszul_dim(R, p, 1)) << "p=" << p;
    }
}

TEST(Cocycles, DegenerateSchemeRejected)
{
    Ideal I = parse("x0 x1 x2", {"x0", "x1*x2"});
    EXPECT_THROW(k_p1_cocycle_basis(I, 1), InputError);
    EXPECT_THROW(k_p1_dim_via_ideal(I, 2), InputError);
}

TEST(Cocycles, RestrictionFromLargerScheme)
{
    // the twisted cubic lies on the quadric x0 x2 - x1^2
    Ideal Y = parse("x0 x1 x2 x3", {"x0*x2 - x1^2"});
    Ideal X = twisted_cubic();
    auto basis = k_p1_cocycle_basis(Y, 1);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_TRUE(is_cocycle(X, res_map(Y, X, basis[0])));
    EXPECT_THROW(res_map(X, Y, k_p1_cocycle_basis(X, 1)[0]), InputError);
}

TEST(SectionRing, MatchesQuotientInLowDegrees)
{
    // conics on a smooth plane quartic: canonical model of a genus 3 curve... in P^5 via Veronese
    Ideal curve = parse("x y z", {"x^4 + y^4 + z^4"});
    std::vector<Polynomial> conics;
    for (const auto& m : monomials_of_degree(3, 2))
        conics.push_back(Polynomial::monomial(F, m));
    SectionRing R(curve, conics);
    EXPECT_EQ(R.dim(1), 6u);
    EXPECT_EQ(R.dim(2), 15u - 1u);  // quartics modulo F
    EXPECT_THROW(R.dim(3), InputError);
    std::vector<Polynomial> dependent{conics[0], conics[0]};
    EXPECT_THROW(SectionRing(curve, dependent), InputError);
}

TEST(Resolution, TwistedCubicShape)
{
    auto res = minimal_free_resolution(twisted_cubic(), 3, 5);
    EXPECT_EQ(res.graded_rank(0, 0), 1);
    EXPECT_EQ(res.graded_rank(1, 2), 3);
    EXPECT_EQ(res.graded_rank(2, 3), 2);
    EXPECT_EQ(res.degrees[3].size(), 0u);
    auto t = res.betti_table(32003, 3, 2);
    EXPECT_EQ(t, betti_table(twisted_cubic(), 3, 2));
}

TEST(Resolution, CompleteIntersectionShape)
{
    Ideal I = complete_intersection({2, 3}, 3).ideal;
    auto res = minimal_free_resolution(I, 3, 6);
    EXPECT_EQ(res.graded_rank(1, 2), 1);
    EXPECT_EQ(res.graded_rank(1, 3), 1);
    EXPECT_EQ(res.graded_rank(2, 5), 1);
    EXPECT_EQ(res.degrees[2].size(), 1u);
    EXPECT_TRUE(res.degrees[3].empty());
}

TEST(Resolution, MapsComposeToZero)
{
    Ideal I = rational_normal_curve(4).ideal;
    auto res = minimal_free_resolution(I, 3, 5);
    // F_2 -> F_1 -> F_0 = S; the composite is zero
    std::vector<Polynomial> first(res.degrees[1].size(), Polynomial(F, 5));
    for (std::size_t g = 0; g < res.maps[1].size(); ++g)
        for (const auto& [h, poly] : res.maps[1][g])
            first[g] = first[g] + poly;
    for (const auto& img : res.maps[2]) {
        Polynomial acc(F, 5);
        for (const auto& [h, poly] : img)
            acc = acc + poly * first[h];
        EXPECT_TRUE(acc.is_zero());
    }
    for (const auto& g : first)
        EXPECT_TRUE(I.contains(g));
}

TEST(Resolution, BudgetIsEnforced)
{
    EXPECT_THROW(minimal_free_resolution(rational_normal_curve(4).ideal, 3, 6, 10), ResourceError);
    EXPECT_THROW(minimal_free_resolution(twisted_cubic(), -1, 3), InputError);
}
