#ifndef SYZ_IDEAL_HPP
#define SYZ_IDEAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "syz/groebner.hpp"
#include "syz/hilbert.hpp"
#include "syz/linalg.hpp"
#include "syz/polynomial.hpp"

namespace syz {

/// Homogeneous ideal in a polynomial ring with named variables.
///
/// Immutable; copies share a write-once Gröbner basis cache keyed by order.
class Ideal {
public:
    Ideal(Field f, std::vector<std::string> names, std::vector<Polynomial> gens)
        : field_(f), names_(std::move(names)), cache_(std::make_shared<Cache>())
    {
        if (names_.size() > static_cast<std::size_t>(kMaxVars))
            throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
        for (auto& g : gens) {
            if (g.nvars() != nvars())
                throw InputError("generator has " + std::to_string(g.nvars()) + " variables, ring has " +
                                 std::to_string(nvars()));
            if (g.field() != field_)
                throw InputError("generator defined over a different field");
            if (!g.is_homogeneous())
                throw InputError("ideal generators must be homogeneous");
            if (!g.is_zero())
                gens_.push_back(std::move(g));
        }
    }

    /// The zero ideal.
    static Ideal zero(Field f, std::vector<std::string> names) { return Ideal(f, std::move(names), {}); }

    const Field& field() const { return field_; }
    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const GroebnerBasis& groebner(const MonomialOrder& ord = MonomialOrder::grevlex()) const
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->bases.find(ord.key());
        if (it != cache_->bases.end())
            return *it->second;
        auto gb = std::make_shared<const GroebnerBasis>(compute_groebner_basis(gens_, field_, nvars(), ord));
        return *cache_->bases.emplace(ord.key(), std::move(gb)).first->second;
    }

    Polynomial normal_form(const Polynomial& p) const { return groebner().normal_form(p); }
    bool contains(const Polynomial& p) const { return groebner().contains(p); }
    bool is_unit() const { return groebner().is_unit(); }

    Polynomial variable(int i) const { return Polynomial::variable(field_, nvars(), i); }

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
    };

    Field field_;
    std::vector<std::string> names_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

inline GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex())
{
    return I.groebner(ord);
}

/// Standard monomials of degree d (descending grevlex); a basis of (S/I)_d.
inline std::vector<Monomial> graded_piece_basis(const Ideal& I, int d)
{
    const auto& gb = I.groebner();
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(I.nvars(), d))
        if (gb.is_standard(m))
            out.push_back(m);
    return out;
}

inline std::int64_t hilbert_function(const Ideal& I, int d)
{
    return static_cast<std::int64_t>(graded_piece_basis(I, d).size());
}

inline HilbertSeries hilbert_series(const Ideal& I)
{
    return hilbert_series(I.groebner().leading_monomials(), I.nvars());
}

inline HilbertPolynomial hilbert_polynomial(const Ideal& I)
{
    return hilbert_polynomial_from_series(hilbert_series(I));
}

/// J ⊆ I as ideals.
inline bool ideal_contains(const Ideal& I, const Ideal& J)
{
    for (const auto& g : J.generators())
        if (!I.contains(g))
            return false;
    return true;
}

/// Equality as ideals (identical reduced grevlex bases).
inline bool ideal_equal(const Ideal& I, const Ideal& J)
{
    if (I.nvars() != J.nvars() || I.field() != J.field())
        return false;
    return I.groebner().elements() == J.groebner().elements();
}

/// True if I contains a nonzero linear form.
inline bool contains_linear_form(const Ideal& I)
{
    for (const auto& g : I.groebner().elements())
        if (g.degree() == 1)
            return true;
    return false;
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J)
{
    if (I.nvars() != J.nvars() || I.field() != J.field())
        throw InputError("ideal_sum: ring mismatch");
    std::vector<Polynomial> g = I.generators();
    g.insert(g.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.field(), I.names(), std::move(g));
}

/// Ideal with the reduced grevlex basis as generators.
inline Ideal with_groebner_generators(const Ideal& I)
{
    return Ideal(I.field(), I.names(), I.groebner().elements());
}

/// Basis of the degree-d part I_d, as coefficient vectors over monomials_of_degree(n, d).
inline std::vector<SparseVec> graded_component(const Ideal& I, int d)
{
    auto monos = monomials_of_degree(I.nvars(), d);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    for (std::uint32_t i = 0; i < monos.size(); ++i)
        index.emplace(monos[i], i);
    auto std_basis = graded_piece_basis(I, d);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> std_index;
    for (std::uint32_t i = 0; i < std_basis.size(); ++i)
        std_index.emplace(std_basis[i], i);
    // kernel of Sym_d -> (S/I)_d, m -> NF(m)
    Matrix nf(I.field(), std_basis.size(), monos.size());
    for (std::uint32_t c = 0; c < monos.size(); ++c) {
        Polynomial r = I.normal_form(Polynomial::monomial(I.field(), monos[c]));
        for (const auto& t : r.terms())
            nf.add_to(std_index.at(t.mono), c, t.coeff);
    }
    return kernel_basis(nf);
}

/// Polynomial from coordinates over monomials_of_degree(n, d).
inline Polynomial polynomial_from_coordinates(const Field& f, int nvars, int d, const SparseVec& v)
{
    auto monos = monomials_of_degree(nvars, d);
    std::vector<Term> ts;
    for (const auto& e : v)
        ts.push_back({monos.at(e.index), e.value});
    return Polynomial::from_terms(f, nvars, std::move(ts));
}

/// I ∩ k[remaining variables], computed with an elimination order.
/// Variables in `drop_mask` are removed from the returned ring.
inline Ideal eliminate(const Ideal& I, std::uint32_t drop_mask)
{
    const int n = I.nvars();
    const auto& gb = I.groebner(MonomialOrder::elimination(drop_mask));
    std::vector<int> map(n, -1);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        if (!(drop_mask & (1u << i))) {
            map[i] = static_cast<int>(names.size());
            names.push_back(I.names()[i]);
        }
    std::vector<Polynomial> kept;
    for (const auto& g : gb.elements()) {
        bool uses_dropped = false;
        for (const auto& t : g.terms())
            if (t.mono.support() & drop_mask) {
                uses_dropped = true;
                break;
            }
        if (!uses_dropped)
            kept.push_back(g.remap(static_cast<int>(names.size()), map));
    }
    return Ideal(I.field(), std::move(names), std::move(kept));
}

using SquareMatrix = std::vector<DenseVec>;

inline SquareMatrix identity_matrix(int n)
{
    SquareMatrix a(n, DenseVec(n, 0));
    for (int i = 0; i < n; ++i)
        a[i][i] = 1;
    return a;
}

/// Images of the variables under x_i -> sum_j A[i][j] x_j.
inline std::vector<Polynomial> linear_substitution(const Field& f, const SquareMatrix& A)
{
    const int n = static_cast<int>(A.size());
    std::vector<Polynomial> images;
    for (int i = 0; i < n; ++i) {
        std::vector<Term> ts;
        for (int j = 0; j < n; ++j)
            if (A[i][j])
                ts.push_back({Monomial::variable(n, j), A[i][j]});
        images.push_back(Polynomial::from_terms(f, n, std::move(ts)));
    }
    return images;
}

/// Substitutes x_i -> sum_j A[i][j] x_j in every generator; V(result) = A^{-1} V(I).
inline Ideal change_coordinates(const Ideal& I, const SquareMatrix& A)
{
    const int n = I.nvars();
    if (static_cast<int>(A.size()) != n)
        throw InputError("change_coordinates: matrix size does not match the ring");
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != n)
            throw InputError("change_coordinates: matrix is not square");
    if (!inverse(I.field(), A))
        throw InputError("change_coordinates: matrix is singular");
    auto images = linear_substitution(I.field(), A);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        gens.push_back(g.substitute(images));
    return Ideal(I.field(), I.names(), std::move(gens));
}

/// Ideal generated by J in a ring with one more variable, inserted at
/// `vertex_var`. Its scheme is the cone over V(J) with vertex the
/// coordinate point of the new variable.
inline Ideal cone_ideal(const Ideal& J, int vertex_var, const std::string& vertex_name = "")
{
    const int n = J.nvars();
    if (vertex_var < 0 || vertex_var > n)
        throw InputError("cone_ideal: vertex position out of range");
    std::vector<int> map(n);
    std::vector<std::string> names;
    for (int i = 0, k = 0; i <= n; ++i) {
        if (i == vertex_var) {
            names.push_back(vertex_name.empty() ? "v" + std::to_string(i) : vertex_name);
            continue;
        }
        map[k++] = i;
        names.push_back(J.names()[k - 1]);
    }
    std::vector<Polynomial> gens;
    for (const auto& g : J.generators())
        gens.push_back(g.remap(n + 1, map));
    return Ideal(J.field(), std::move(names), std::move(gens));
}

/// Random invertible matrix drawn from the generator.
inline SquareMatrix random_invertible(const Field& f, int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> dist(0, f.characteristic() - 1);
    for (;;) {
        SquareMatrix a(n, DenseVec(n));
        for (auto& row : a)
            for (auto& x : row)
                x = dist(rng);
        if (inverse(f, a))
            return a;
    }
}

/// (I : x_var), using grevlex with x_var as the smallest variable.
inline Ideal colon_by_variable(const Ideal& I, int var, bool infinite = false)
{
    const int n = I.nvars();
    // permutation moving `var` to the last position
    std::vector<int> to_last(n), back(n);
    for (int i = 0, k = 0; i < n; ++i)
        if (i != var)
            to_last[i] = k++;
    to_last[var] = n - 1;
    for (int i = 0; i < n; ++i)
        back[to_last[i]] = i;
    std::vector<Polynomial> moved;
    for (const auto& g : I.generators())
        moved.push_back(g.remap(n, to_last));
    GroebnerBasis gb = compute_groebner_basis(moved, I.field(), n, MonomialOrder::grevlex());
    std::vector<Polynomial> out;
    for (const auto& g : gb.elements()) {
        int k = 0xFFFF;
        for (const auto& t : g.terms())
            k = std::min(k, t.mono[n - 1]);
        if (!infinite)
            k = std::min(k, 1);
        Monomial div(n);
        div.set(n - 1, k);
        std::vector<Term> ts;
        for (const auto& t : g.terms())
            ts.push_back({t.mono / div, t.coeff});
        out.push_back(Polynomial::from_terms(I.field(), n, std::move(ts)).remap(n, back));
    }
    return Ideal(I.field(), I.names(), std::move(out));
}

/// I ∩ J via elimination of t from t·I + (1-t)·J.
inline Ideal intersect(const Ideal& I, const Ideal& J)
{
    if (I.nvars() != J.nvars() || I.field() != J.field())
        throw InputError("intersect: ring mismatch");
    const int n = I.nvars();
    const Field& f = I.field();
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i)
        map[i] = i;
    Polynomial t = Polynomial::variable(f, n + 1, n);
    Polynomial one_minus_t = Polynomial::constant(f, n + 1, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        gens.push_back(t * g.remap(n + 1, map));
    for (const auto& g : J.generators())
        gens.push_back(one_minus_t * g.remap(n + 1, map));
    GroebnerBasis gb = compute_groebner_basis(gens, f, n + 1, MonomialOrder::elimination(1u << n));
    std::vector<int> drop(n + 1);
    for (int i = 0; i < n; ++i)
        drop[i] = i;
    drop[n] = -1;
    std::vector<Polynomial> out;
    for (const auto& g : gb.elements()) {
        bool has_t = false;
        for (const auto& term : g.terms())
            if (term.mono[n]) {
                has_t = true;
                break;
            }
        if (!has_t)
            out.push_back(g.remap(n, drop));
    }
    return Ideal(f, I.names(), std::move(out));
}

enum class SaturationMethod {
    /// I' : ℓ^∞ for a generic linear form ℓ moved to the last grevlex variable.
    GenericRevLex,
    /// Iterates I <- I : m with I : m the intersection of the colons by each variable.
    ColonIteration,
};

inline constexpr std::uint64_t kSaturationSeed = 0x5a7c0de5ull;

/// (I : m^∞) for m the irrelevant ideal. The result is presented by its
/// reduced grevlex basis.
inline Ideal saturate_irrelevant(const Ideal& I, SaturationMethod method = SaturationMethod::GenericRevLex)
{
    const int n = I.nvars();
    const Field& f = I.field();
    if (I.generators().empty())
        return I;
    if (method == SaturationMethod::ColonIteration) {
        Ideal cur = with_groebner_generators(I);
        for (;;) {
            Ideal next = colon_by_variable(cur, 0);
            for (int v = 1; v < n; ++v)
                next = intersect(next, colon_by_variable(cur, v));
            next = with_groebner_generators(next);
            if (ideal_equal(next, cur))
                return next;
            cur = next;
        }
    }
    std::mt19937_64 rng(kSaturationSeed ^ (static_cast<std::uint64_t>(n) << 32) ^ f.characteristic());
    SquareMatrix A = random_invertible(f, n, rng);
    Ideal moved = change_coordinates(I, A);
    Ideal sat = colon_by_variable(moved, n - 1, /*infinite=*/true);
    return with_groebner_generators(change_coordinates(sat, *inverse(f, A)));
}

/// Equality of the closed subschemes cut out by I and J.
inline bool ideal_equal_as_schemes(const Ideal& I, const Ideal& J)
{
    if (I.nvars() != J.nvars())
        throw InputError("ideal_equal_as_schemes: ambient rings differ");
    Ideal a = saturate_irrelevant(I), b = saturate_irrelevant(J);
    return ideal_contains(a, b) && ideal_contains(b, a);
}

/// V(small) ⊆ V(big) as schemes, i.e. big ⊆ small^sat.
inline bool scheme_contains(const Ideal& big, const Ideal& small)
{
    Ideal sat = saturate_irrelevant(small);
    for (const auto& g : big.generators())
        if (!sat.contains(g))
            return false;
    return true;
}

}  // namespace syz

#endif
