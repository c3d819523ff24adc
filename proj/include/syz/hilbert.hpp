#ifndef SYZ_HILBERT_HPP
#define SYZ_HILBERT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "syz/polynomial.hpp"

namespace syz {

using IntPoly = std::vector<std::int64_t>;
using Rational = boost::rational<std::int64_t>;

namespace detail {

inline IntPoly int_poly_mul(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

inline IntPoly int_poly_add(IntPoly a, const IntPoly& b, std::int64_t scale = 1, std::size_t shift = 0)
{
    if (a.size() < b.size() + shift)
        a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] += scale * b[i];
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

inline void minimalize(std::vector<Monomial>& gens)
{
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return MonomialOrder::compare_grevlex(a, b) < 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(g);
    }
    gens = std::move(out);
}

/// Numerator N(t) with HS(S/(gens)) = N(t) / (1-t)^nvars, by pivot recursion.
inline IntPoly hilbert_numerator_rec(std::vector<Monomial> gens)
{
    minimalize(gens);
    if (gens.empty())
        return {1};
    for (const auto& g : gens)
        if (g.degree() == 0)
            return {};
    const int n = gens.front().nvars();
    std::vector<int> count(n, 0);
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i)
            if (g[i])
                ++count[i];
    int pivot_var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    if (count[pivot_var] <= 1) {
        // pairwise coprime generators
        IntPoly r{1};
        for (const auto& g : gens) {
            IntPoly f(g.degree() + 1, 0);
            f[0] = 1;
            f[g.degree()] = -1;
            r = int_poly_mul(r, f);
        }
        return r;
    }
    int e = 0xFFFF;
    for (const auto& g : gens)
        if (g[pivot_var])
            e = std::min(e, g[pivot_var]);
    Monomial pivot(n);
    pivot.set(pivot_var, e);

    std::vector<Monomial> with_pivot{pivot};
    for (const auto& g : gens)
        if (!pivot.divides(g))
            with_pivot.push_back(g);
    std::vector<Monomial> colon;
    for (const auto& g : gens)
        colon.push_back(g / g.gcd(pivot));

    IntPoly a = hilbert_numerator_rec(std::move(with_pivot));
    IntPoly b = hilbert_numerator_rec(std::move(colon));
    // N(I) = N(I + p) + t^deg(p) N(I : p)
    return int_poly_add(a, b, 1, static_cast<std::size_t>(e));
}

}  // namespace detail

/// Hilbert series data of S/I for a monomial (lead term) ideal.
struct HilbertSeries {
    int nvars = 0;
    IntPoly numerator;  // HS = numerator / (1-t)^nvars
};

inline HilbertSeries hilbert_series(const std::vector<Monomial>& lead_terms, int nvars)
{
    HilbertSeries hs;
    hs.nvars = nvars;
    if (lead_terms.empty()) {
        hs.numerator = {1};
        return hs;
    }
    hs.numerator = detail::hilbert_numerator_rec(lead_terms);
    return hs;
}

/// Hilbert polynomial of a projective scheme, HP(d) = sum coeffs[i] d^i.
struct HilbertPolynomial {
    int dimension = -1;         // projective dimension; -1 for the empty scheme
    std::int64_t degree = 0;
    std::vector<Rational> coeffs;
    IntPoly reduced_numerator;  // HS = reduced_numerator / (1-t)^(dimension+1)
    int regularity_index = 0;   // h(d) = HP(d) for every d >= regularity_index

    std::int64_t evaluate(std::int64_t d) const
    {
        Rational acc = 0, pw = 1;
        for (const auto& c : coeffs) {
            acc += c * pw;
            pw *= d;
        }
        if (acc.denominator() != 1)
            throw ConsistencyError("Hilbert polynomial took a non-integer value");
        return acc.numerator();
    }

    /// 1 - HP(0); the arithmetic genus for curves.
    std::int64_t arithmetic_genus() const { return 1 - evaluate(0); }

    std::string to_string() const
    {
        std::string s;
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
            if (coeffs[i] == Rational(0))
                continue;
            if (!s.empty())
                s += coeffs[i] < Rational(0) ? " - " : " + ";
            else if (coeffs[i] < Rational(0))
                s += "-";
            Rational a = abs(coeffs[i]);
            std::string num = std::to_string(a.numerator()) +
                              (a.denominator() != 1 ? "/" + std::to_string(a.denominator()) : "");
            if (i == 0)
                s += num;
            else {
                if (a != Rational(1))
                    s += num + "*";
                s += i == 1 ? "d" : "d^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }
};

/// Value of the Hilbert function of S/I at degree d from its series.
inline std::int64_t hilbert_function_from_series(const HilbertSeries& hs, int d)
{
    // coefficient of t^d in N(t) / (1-t)^n = sum_k N_k binom(d-k+n-1, n-1)
    auto binom = [](std::int64_t a, std::int64_t b) -> std::int64_t {
        if (b < 0 || a < b)
            return 0;
        std::int64_t r = 1;
        for (std::int64_t i = 1; i <= b; ++i)
            r = r * (a - b + i) / i;
        return r;
    };
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < hs.numerator.size() && static_cast<int>(k) <= d; ++k) {
        if (hs.nvars == 0)
            acc += (static_cast<int>(k) == d) ? hs.numerator[k] : 0;
        else
            acc += hs.numerator[k] * binom(d - static_cast<std::int64_t>(k) + hs.nvars - 1, hs.nvars - 1);
    }
    return acc;
}

inline HilbertPolynomial hilbert_polynomial_from_series(const HilbertSeries& hs)
{
    HilbertPolynomial hp;
    IntPoly num = hs.numerator;
    while (!num.empty() && num.back() == 0)
        num.pop_back();
    if (num.empty()) {
        hp.dimension = -1;
        hp.coeffs = {};
        return hp;
    }
    int krull = hs.nvars;
    auto value_at_one = [](const IntPoly& p) {
        std::int64_t s = 0;
        for (auto c : p)
            s += c;
        return s;
    };
    while (krull > 0 && value_at_one(num) == 0) {
        IntPoly q(num.size() - 1, 0);
        std::int64_t run = 0;
        for (std::size_t k = 0; k + 1 < num.size(); ++k) {
            run += num[k];
            q[k] = run;
        }
        num = q;
        --krull;
    }
    hp.reduced_numerator = num;
    hp.dimension = krull - 1;
    if (krull == 0) {
        // finite length: HP is zero, the projective scheme is empty
        hp.degree = 0;
        hp.regularity_index = static_cast<int>(num.size());
        return hp;
    }
    hp.degree = value_at_one(num);
    // HP(d) = sum_k h_k * prod_{j=1}^{D-1} (d - k + j) / (D-1)!
    const int D = krull;
    std::int64_t fact = 1;
    for (int j = 2; j < D; ++j)
        fact *= j;
    std::vector<Rational> coeffs(static_cast<std::size_t>(D), Rational(0));
    for (std::size_t k = 0; k < num.size(); ++k) {
        if (num[k] == 0)
            continue;
        IntPoly prod{1};
        for (int j = 1; j < D; ++j)
            prod = detail::int_poly_mul(prod, IntPoly{j - static_cast<std::int64_t>(k), 1});
        for (std::size_t i = 0; i < prod.size(); ++i)
            coeffs[i] += Rational(num[k] * prod[i], fact);
    }
    hp.coeffs = coeffs;
    hp.regularity_index = std::max(0, static_cast<int>(num.size()) - 1 - D + 1);
    return hp;
}

}  // namespace syz

#endif
