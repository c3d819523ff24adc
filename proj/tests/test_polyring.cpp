#include <gtest/gtest.h>

#include "syz/ideal.hpp"
#include "syz/io.hpp"

using namespace syz;

namespace {

const Field F(32003);

Ideal parse(const std::string& ring, const std::vector<std::string>& polys)
{
    std::string text = "ring " + ring + "\nideal\n";
    for (const auto& p : polys)
        text += p + "\n";
    return parse_ideal_text(text).ideal;
}

Ideal twisted_cubic()
{
    return parse("x0 x1 x2 x3", {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
}

std::vector<std::string> as_strings(const GroebnerBasis& gb, const std::vector<std::string>& names)
{
    std::vector<std::string> out;
    for (const auto& g : gb.elements())
        out.push_back(g.to_string(names));
    return out;
}

// All S-polynomials reduce to zero.
bool buchberger_criterion(const GroebnerBasis& gb)
{
    const auto& el = gb.elements();
    const Field& f = gb.field();
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j) {
            Monomial li = gb.leading_monomial(el[i]), lj = gb.leading_monomial(el[j]);
            Monomial l = li.lcm(lj);
            Polynomial s = el[i].times_monomial(l / li, f.inv(el[i].coefficient(li))) -
                           el[j].times_monomial(l / lj, f.inv(el[j].coefficient(lj)));
            if (!gb.contains(s))
                return false;
        }
    return true;
}

}  // namespace

TEST(Parser, OptionalStarPowersCommentsAndRationals)
{
    auto a = parse("x y z", {"x y^2 - 3 z^3 # trailing", "(x+y)^2"});
    auto b = parse("x y z", {"x*y*y - 3*z*z*z", "x^2 + 2*x*y + y^2"});
    EXPECT_TRUE(ideal_equal(a, b));
    auto half = parse("x y", {"1/2 x - y"});
    EXPECT_TRUE(half.contains(parse_polynomial(F, {"x", "y"}, "x - 2y")));
}

TEST(Parser, LongestVariableMatch)
{
    std::vector<std::string> names{"x1", "x10", "x"};
    Polynomial p = parse_polynomial(F, names, "x10x1x");
    ASSERT_EQ(p.terms().size(), 1u);
    const Monomial& m = p.terms()[0].mono;
    EXPECT_EQ(m[0], 1);
    EXPECT_EQ(m[1], 1);
    EXPECT_EQ(m[2], 1);
}

TEST(Parser, Errors)
{
    EXPECT_THROW(parse("x y", {"x + q"}), InputError);
    EXPECT_THROW(parse("x y", {"x^2 + y"}), InputError);  // inhomogeneous
    EXPECT_THROW(parse_ideal_text("ideal\nx\n"), InputError);
    EXPECT_THROW(parse_ideal_text("field 32001\nring x\nideal\nx\n"), InputError);
}

TEST(Parser, FieldLineAndRoundTrip)
{
    auto file = parse_ideal_text("field 31991\nring a b c\nideal\na*c - b^2, a*b\n");
    EXPECT_TRUE(file.field_given);
    EXPECT_EQ(file.ideal.field().characteristic(), 31991u);
    EXPECT_EQ(file.ideal.generators().size(), 2u);
    auto again = parse_ideal_text(format_ideal(file.ideal, {"comment line"}));
    EXPECT_TRUE(ideal_equal(file.ideal, again.ideal));
}

TEST(Groebner, Principal)
{
    auto I = parse("x0 x1", {"x0"});
    EXPECT_EQ(as_strings(groebner_basis(I), I.names()), (std::vector<std::string>{"x0"}));
}

TEST(Groebner, TwistedCubicMinorsAreABasis)
{
    auto I = twisted_cubic();
    const auto& gb = groebner_basis(I);
    EXPECT_EQ(gb.elements().size(), 3u);
    for (const auto& g : I.generators())
        EXPECT_TRUE(gb.contains(g));
    EXPECT_TRUE(buchberger_criterion(gb));
}

TEST(Groebner, SumAndDifferenceOfSquares)
{
    auto I = parse("x0 x1", {"x0^2 - x1^2", "x0^2 + x1^2"});
    EXPECT_EQ(as_strings(groebner_basis(I), I.names()), (std::vector<std::string>{"x1^2", "x0^2"}));
}

TEST(Groebner, IdempotentAndOrderStable)
{
    auto I = parse("a b c d", {"a^2 - b*c", "a*b - c*d", "b^3 - a*d^2", "c^2*a - d^3"});
    auto g1 = compute_groebner_basis(I.generators(), F, 4, MonomialOrder::grevlex());
    auto g2 = compute_groebner_basis(g1.elements(), F, 4, MonomialOrder::grevlex());
    EXPECT_TRUE(g1 == g2);
    EXPECT_TRUE(buchberger_criterion(g1));
    auto lex = compute_groebner_basis(I.generators(), F, 4, MonomialOrder::lex());
    EXPECT_TRUE(buchberger_criterion(lex));
    for (const auto& g : lex.elements())
        EXPECT_TRUE(g1.contains(g));
    for (const auto& g : g1.elements())
        EXPECT_TRUE(lex.contains(g));
}

TEST(GradedPiece, Examples)
{
    auto zero = Ideal::zero(F, {"x0", "x1"});
    EXPECT_EQ(graded_piece_basis(zero, 2).size(), 3u);
    EXPECT_EQ(graded_piece_basis(twisted_cubic(), 2).size(), 7u);
    auto g4 = parse("x0 x1 x2 x3", {"x0*x3 - x1*x2", "x0^3 + x1^3 + x2^3 + x3^3"});
    EXPECT_EQ(hilbert_function(g4, 3), 15);
}

TEST(GradedPiece, AgreesWithSeriesAndComponent)
{
    auto I = parse("x0 x1 x2 x3", {"x0*x3 - x1*x2", "x0^3 + x1^3 + x2^3 + x3^3"});
    auto hs = hilbert_series(I);
    for (int d = 0; d <= 6; ++d) {
        auto std_monos = graded_piece_basis(I, d);
        EXPECT_EQ(static_cast<std::int64_t>(std_monos.size()), hilbert_function_from_series(hs, d));
        EXPECT_EQ(static_cast<std::int64_t>(monomials_of_degree(4, d).size() - graded_component(I, d).size()),
                  hilbert_function_from_series(hs, d));
    }
}

TEST(HilbertPolynomial, Examples)
{
    auto tc = hilbert_polynomial(twisted_cubic());
    EXPECT_EQ(tc.dimension, 1);
    EXPECT_EQ(tc.degree, 3);
    EXPECT_EQ(tc.to_string(), "3*d + 1");
    auto scroll = hilbert_polynomial(
        parse("x0 x1 x2 x3 x4", {"x0*x3 - x1*x2", "x0*x4 - x1*x3", "x2*x4 - x3^2"}));
    EXPECT_EQ(scroll.dimension, 2);
    EXPECT_EQ(scroll.degree, 3);
    auto p3 = hilbert_polynomial(Ideal::zero(F, default_names(4)));
    EXPECT_EQ(p3.dimension, 3);
    EXPECT_EQ(p3.degree, 1);
    auto g4 = hilbert_polynomial(parse("x0 x1 x2 x3", {"x0*x3 - x1*x2", "x0^3 + x1^3 + x2^3 + x3^3"}));
    EXPECT_EQ(g4.to_string(), "6*d - 3");
    EXPECT_EQ(g4.arithmetic_genus(), 4);
    auto empty = hilbert_polynomial(parse("x0 x1", {"x0", "x1"}));
    EXPECT_EQ(empty.dimension, -1);
}

TEST(Eliminate, GraphProjectionIsOnto)
{
    auto I = parse("x0 x1", {"x0 - x1"});
    Ideal J = eliminate(I, 0b1);
    EXPECT_EQ(J.nvars(), 1);
    EXPECT_TRUE(J.generators().empty());
}

TEST(Eliminate, TwistedCubicFromAPointIsAConic)
{
    // move [1:0:0:0] to the last coordinate, then drop it
    SquareMatrix A{{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    Ideal moved = change_coordinates(twisted_cubic(), A);
    Ideal conic = eliminate(moved, 1u << 3);
    EXPECT_EQ(conic.nvars(), 3);
    auto hp = hilbert_polynomial(conic);
    EXPECT_EQ(hp.dimension, 1);
    EXPECT_EQ(hp.degree, 2);
    EXPECT_EQ(conic.generators().size(), 1u);
}

TEST(Eliminate, ConeRoundTrip)
{
    auto conic = parse("y0 y1 y2", {"y0*y2 - y1^2"});
    for (int v = 0; v <= 3; ++v) {
        Ideal cone = cone_ideal(conic, v, "v");
        EXPECT_EQ(cone.nvars(), 4);
        Ideal back = eliminate(cone, 1u << v);
        EXPECT_TRUE(ideal_equal(back, conic));
    }
    EXPECT_TRUE(cone_ideal(Ideal::zero(F, {"a", "b"}), 2).generators().empty());
}

TEST(Saturation, Examples)
{
    auto I = parse("x0 x1", {"x0^2", "x0*x1"});
    auto expected = parse("x0 x1", {"x0"});
    for (auto method : {SaturationMethod::GenericRevLex, SaturationMethod::ColonIteration}) {
        Ideal s = saturate_irrelevant(I, method);
        EXPECT_TRUE(ideal_equal(s, expected));
        EXPECT_TRUE(ideal_equal(saturate_irrelevant(s, method), s));
        EXPECT_TRUE(ideal_equal(saturate_irrelevant(twisted_cubic(), method), twisted_cubic()));
        EXPECT_TRUE(saturate_irrelevant(parse("x0 x1", {"x0", "x1"}), method).is_unit());
    }
}

TEST(Saturation, IrrelevantComponentRemoved)
{
    // twisted cubic intersected with the cube of the irrelevant ideal
    auto tc = twisted_cubic();
    std::vector<Polynomial> cubes;
    for (const auto& m : monomials_of_degree(4, 3))
        cubes.push_back(Polynomial::monomial(F, m));
    Ideal m3(F, tc.names(), cubes);
    Ideal dirty = intersect(tc, m3);
    EXPECT_FALSE(ideal_equal(dirty, tc));
    EXPECT_TRUE(ideal_equal(saturate_irrelevant(dirty), tc));
    EXPECT_TRUE(ideal_equal(saturate_irrelevant(dirty, SaturationMethod::ColonIteration), tc));
}

TEST(SchemeEquality, Examples)
{
    auto tc = twisted_cubic();
    EXPECT_TRUE(ideal_equal_as_schemes(tc, tc));
    EXPECT_FALSE(ideal_equal_as_schemes(parse("x0 x1", {"x0^2"}), parse("x0 x1", {"x0"})));
    auto with_cubics = parse("x0 x1 x2 x3",
                             {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2", "x0^2*x3 - x1^3"});
    EXPECT_TRUE(ideal_equal_as_schemes(tc, with_cubics));
    // truncation in high degree is the same scheme
    auto trunc = parse("x0 x1", {"x0^3", "x0^2*x1"});
    EXPECT_TRUE(ideal_equal_as_schemes(trunc, parse("x0 x1", {"x0^2"})));
}

TEST(CoordinateChange, Examples)
{
    auto tc = twisted_cubic();
    EXPECT_TRUE(ideal_equal(change_coordinates(tc, identity_matrix(4)), tc));
    auto x0 = parse("x0 x1", {"x0"});
    SquareMatrix swap{{0, 1}, {1, 0}};
    EXPECT_TRUE(ideal_equal(change_coordinates(x0, swap), parse("x0 x1", {"x1"})));
    SquareMatrix singular{{1, 1}, {1, 1}};
    EXPECT_THROW(change_coordinates(x0, singular), InputError);
}

TEST(CoordinateChange, InvolutiveWithInverse)
{
    auto tc = twisted_cubic();
    std::mt19937_64 rng(42);
    for (int k = 0; k < 5; ++k) {
        SquareMatrix A = random_invertible(F, 4, rng);
        Ideal moved = change_coordinates(tc, A);
        EXPECT_TRUE(ideal_equal(change_coordinates(moved, *inverse(F, A)), tc));
        EXPECT_EQ(hilbert_polynomial(moved).to_string(), "3*d + 1");
    }
}

TEST(CoordinateChange, PointOneOneOneOneToLastCoordinate)
{
    // columns e1, e2, e3 and P = (1,1,1,1): x_i -> sum_j A_ij x_j sends P to e3
    SquareMatrix A{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
    Ideal moved = change_coordinates(twisted_cubic(), A);
    EXPECT_FALSE(contains_linear_form(moved));
    for (const auto& g : moved.generators()) {
        DenseVec e3{0, 0, 0, 1};
        EXPECT_EQ(g.evaluate(e3), 0u);
    }
}

TEST(Cone, ProjectedTwistedCubicConeContainsCubic)
{
    SquareMatrix A{{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    Ideal moved = change_coordinates(twisted_cubic(), A);
    Ideal conic = eliminate(moved, 1u << 3);
    Ideal cone = cone_ideal(conic, 3);
    for (const auto& g : cone.generators())
        EXPECT_TRUE(moved.contains(g));
    EXPECT_TRUE(scheme_contains(cone, moved));
}

TEST(Intersect, MonomialExample)
{
    auto I = parse("x y", {"x"});
    auto J = parse("x y", {"y"});
    EXPECT_TRUE(ideal_equal(intersect(I, J), parse("x y", {"x*y"})));
}

TEST(LinearForms, Detected)
{
    EXPECT_TRUE(contains_linear_form(parse("x y z", {"x*y", "x - y + z"})));
    EXPECT_FALSE(contains_linear_form(twisted_cubic()));
}
