#ifndef SYZ_BUILDERS_HPP
#define SYZ_BUILDERS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "syz/ideal.hpp"
#include "syz/io.hpp"
#include "syz/koszul.hpp"
#include "syz/syzgeo.hpp"

namespace syz {

/// Deterministic point source attached by builders: returns the k-th
/// candidate point, or nothing when candidate k is unusable.
using PointSampler = std::function<std::optional<std::vector<Elem>>(std::uint64_t)>;

/// A nondegenerate closed subscheme X ⊆ P^n with its ideal.
struct EmbeddedScheme {
    Ideal ideal;
    std::string label;
    PointSampler sampler;
    std::vector<std::string> assumptions;
    std::vector<std::string> warnings;

    EmbeddedScheme(Ideal I, std::string lbl, PointSampler s = {}) : ideal(std::move(I)), label(std::move(lbl)), sampler(std::move(s))
    {
        if (contains_linear_form(ideal))
            throw InputError("scheme '" + label + "' is degenerate: its ideal contains a linear form");
    }

    int ambient_dim() const { return ideal.nvars() - 1; }
    const Field& field() const { return ideal.field(); }
};

namespace detail {

inline Elem random_element(const Field& f, std::mt19937_64& rng) { return static_cast<Elem>(rng() % f.characteristic()); }

inline Elem random_nonzero(const Field& f, std::mt19937_64& rng)
{
    return static_cast<Elem>(1 + rng() % (f.characteristic() - 1));
}

/// 0, ∞, 1, 2, 3, ...: nullopt stands for ∞.
inline std::optional<Elem> parameter_value(const Field& f, std::uint64_t k)
{
    if (k == 0)
        return Elem{0};
    if (k == 1)
        return std::nullopt;
    return f.from_int(static_cast<std::int64_t>((k - 1) % f.characteristic()));
}

/// λ (1, t, ..., t^e), or λ e_e at t = ∞.
inline void append_block(const Field& f, std::vector<Elem>& out, int e, std::optional<Elem> t, Elem lambda)
{
    Elem pw = 1;
    for (int j = 0; j <= e; ++j) {
        if (t)
            out.push_back(f.mul(lambda, pw));
        else
            out.push_back(j == e ? lambda : 0);
        if (t)
            pw = f.mul(pw, *t);
    }
}

inline Polynomial partial_derivative(const Polynomial& p, int var)
{
    const Field& f = p.field();
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
        int e = t.mono[var];
        if (!e)
            continue;
        Monomial m = t.mono / Monomial::variable(p.nvars(), var);
        Elem c = f.mul(t.coeff, f.from_int(e));
        if (c)
            ts.push_back({m, c});
    }
    return Polynomial::from_terms(f, p.nvars(), std::move(ts));
}

/// All partial derivatives of order exactly k.
inline std::vector<Polynomial> derivatives_of_order(const Polynomial& p, int k)
{
    std::vector<Polynomial> cur{p};
    for (int step = 0; step < k; ++step) {
        std::vector<Polynomial> next;
        for (const auto& q : cur)
            for (int v = 0; v < p.nvars(); ++v)
                next.push_back(partial_derivative(q, v));
        cur = std::move(next);
    }
    return cur;
}

/// Largest m such that every derivative of order < m vanishes at the point.
inline int multiplicity_at(const Polynomial& F, const std::vector<Elem>& P)
{
    if (F.is_zero())
        throw InputError("multiplicity of the zero polynomial");
    for (int k = 0; k <= F.degree(); ++k)
        for (const auto& d : derivatives_of_order(F, k))
            if (d.evaluate(P) != 0)
                return k;
    return F.degree() + 1;
}

inline Ideal minors_ideal(const Field& f, int nvars, const std::vector<std::pair<int, int>>& columns)
{
    std::vector<Polynomial> gens;
    for (std::size_t a = 0; a < columns.size(); ++a)
        for (std::size_t b = a + 1; b < columns.size(); ++b) {
            auto x = [&](int i) { return Polynomial::variable(f, nvars, i); };
            gens.push_back(x(columns[a].first) * x(columns[b].second) - x(columns[b].first) * x(columns[a].second));
        }
    return Ideal(f, default_names(nvars), std::move(gens));
}

}  // namespace detail

/// p · binom(f, p+1): b_{p,1} of a rational normal scroll of degree f.
inline std::int64_t en_betti(std::int64_t f, std::int64_t p)
{
    if (f < 1 || p < 0)
        throw InputError("en_betti: needs f >= 1 and p >= 0");
    return p * binomial(f, p + 1);
}

inline EmbeddedScheme rational_normal_curve(int n, const Field& f = Field(kDefaultCharacteristic))
{
    if (n < 2)
        throw InputError("rational normal curve needs n >= 2");
    std::vector<std::pair<int, int>> cols;
    for (int i = 0; i < n; ++i)
        cols.push_back({i, i + 1});
    PointSampler sampler = [f, n](std::uint64_t k) -> std::optional<std::vector<Elem>> {
        if (k >= f.characteristic() + 1ull)
            return std::nullopt;
        std::vector<Elem> pt;
        detail::append_block(f, pt, n, detail::parameter_value(f, k), 1);
        return pt;
    };
    EmbeddedScheme X(detail::minors_ideal(f, n + 1, cols), "rnc " + std::to_string(n), sampler);
    return X;
}

struct ScrollSpec {
    std::vector<int> e;

    int degree() const
    {
        int s = 0;
        for (int x : e)
            s += x;
        return s;
    }
    int dimension() const { return static_cast<int>(e.size()); }
    int ambient_dim() const { return degree() + dimension() - 1; }

    std::string to_string() const
    {
        std::string s = "scroll";
        for (int x : e)
            s += " " + std::to_string(x);
        return s;
    }
};

/// S(e_1..e_d): 2x2 minors of the concatenated 2 x e_i catalecticant blocks.
/// Sampled points are λ_i (1, t, ..., t^{e_i}) on block i.
inline EmbeddedScheme scroll(const ScrollSpec& spec, const Field& f = Field(kDefaultCharacteristic))
{
    if (spec.e.empty())
        throw InputError("scroll needs at least one block");
    for (int x : spec.e)
        if (x <= 0)
            throw InputError("scroll blocks must be positive");
    const int nvars = spec.ambient_dim() + 1;
    if (nvars > kMaxVars)
        throw InputError("scroll is too large");
    std::vector<std::pair<int, int>> cols;
    int start = 0;
    for (int x : spec.e) {
        for (int j = 0; j < x; ++j)
            cols.push_back({start + j, start + j + 1});
        start += x + 1;
    }
    std::vector<int> blocks = spec.e;
    PointSampler sampler = [f, blocks](std::uint64_t k) -> std::optional<std::vector<Elem>> {
        std::mt19937_64 rng(0x5c7011ull + k * 0x9e3779b97f4a7c15ull);
        std::vector<Elem> pt;
        auto t = detail::parameter_value(f, k);
        for (int x : blocks)
            detail::append_block(f, pt, x, t, blocks.size() == 1 ? 1 : detail::random_nonzero(f, rng));
        return pt;
    };
    return EmbeddedScheme(detail::minors_ideal(f, nvars, cols), spec.to_string(), sampler);
}

/// All scrolls with sum e_i <= fmax and at most dmax blocks, blocks nondecreasing.
inline std::vector<ScrollSpec> scroll_catalog(int fmax, int dmax)
{
    std::vector<ScrollSpec> out;
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& cur, int min_e, int left) {
        if (!cur.empty())
            out.push_back({cur});
        if (static_cast<int>(cur.size()) == dmax)
            return;
        for (int x = min_e; x <= left; ++x) {
            cur.push_back(x);
            rec(cur, x, left - x);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(cur, 1, fmax);
    std::stable_sort(out.begin(), out.end(), [](const ScrollSpec& a, const ScrollSpec& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a.dimension() < b.dimension();
    });
    return out;
}

struct QuadricHull {
    Ideal ideal;
    HilbertPolynomial hilbert;
    std::vector<std::string> warnings;
};

/// The scheme cut out by all quadrics containing X.
inline QuadricHull quadric_hull(const Ideal& I_X)
{
    const Field& f = I_X.field();
    std::vector<Polynomial> gens;
    for (const auto& v : graded_component(I_X, 2))
        gens.push_back(polynomial_from_coordinates(f, I_X.nvars(), 2, v));
    QuadricHull h{Ideal(f, I_X.names(), std::move(gens)), {}, {}};
    if (h.ideal.generators().empty())
        h.warnings.push_back("no quadrics contain X; the hull is the ambient space");
    h.hilbert = hilbert_polynomial(h.ideal);
    return h;
}

/// Canonical curve cut out by forms of the given degrees in P^{r+1} (r = number
/// of forms); requires sum of degrees = r + 3 so that ω = O(1).
inline EmbeddedScheme complete_intersection(const std::vector<int>& degrees, std::uint64_t seed,
                                            const Field& f = Field(kDefaultCharacteristic), int max_retries = 8)
{
    const int nvars = static_cast<int>(degrees.size()) + 2;
    int sum = 0;
    for (int d : degrees) {
        if (d < 2)
            throw InputError("complete intersection degrees must be at least 2");
        sum += d;
    }
    if (sum != nvars + 1)
        throw InputError("degrees do not give a canonical complete intersection curve");
    std::int64_t expected_degree = 1;
    for (int d : degrees)
        expected_degree *= d;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
        std::mt19937_64 rng(s);
        std::vector<Polynomial> gens;
        for (int d : degrees) {
            std::vector<Term> ts;
            for (const auto& m : monomials_of_degree(nvars, d))
                ts.push_back({m, detail::random_element(f, rng)});
            gens.push_back(Polynomial::from_terms(f, nvars, std::move(ts)));
        }
        Ideal I(f, default_names(nvars), std::move(gens));
        auto hp = hilbert_polynomial(I);
        if (hp.dimension != 1 || hp.degree != expected_degree || contains_linear_form(I))
            continue;
        std::string label = "ci";
        for (int d : degrees)
            label += " " + std::to_string(d);
        EmbeddedScheme X(I, label + " seed=" + std::to_string(s));
        X.assumptions.push_back("smoothness of the random complete intersection is not certified");
        if (attempt)
            X.warnings.push_back("seed " + std::to_string(seed) + " gave a degenerate draw; used seed " +
                                 std::to_string(s));
        return X;
    }
    throw InputError("complete_intersection: no valid draw within the retry budget");
}

// ---------------------------------------------------------------------------
// Plane models

struct AssignedPoint {
    std::vector<Elem> point;  // plane coordinates
    int multiplicity = 2;
};

/// A plane curve F = 0 with assigned singular points and the degree of the
/// linear system of curves through them (with multiplicity m - 1 at an m-fold point).
struct PlaneModel {
    Polynomial F;
    std::vector<AssignedPoint> assigned;
    int system_degree = 0;
    std::vector<std::string> names{"x", "y", "z"};
};

/// Checks the plane model: F nonzero and reduced (finite singular locus),
/// assigned points of the stated multiplicity.
inline void validate_plane_model(const PlaneModel& m)
{
    const Polynomial& F = m.F;
    if (F.nvars() != 3 || F.is_zero() || !F.is_homogeneous())
        throw InputError("plane model: F must be a nonzero form in three variables");
    if (m.system_degree < 1)
        throw InputError("plane model: system degree must be positive");
    std::vector<Polynomial> jac{F};
    for (int v = 0; v < 3; ++v)
        jac.push_back(detail::partial_derivative(F, v));
    Ideal J(F.field(), m.names, jac);
    if (hilbert_polynomial(J).dimension > 0)
        throw InputError("plane model: F is not reduced (its singular locus is a curve)");
    for (const auto& a : m.assigned) {
        if (a.point.size() != 3)
            throw InputError("plane model: assigned points need three coordinates");
        int mult = detail::multiplicity_at(F, a.point);
        if (mult != a.multiplicity)
            throw InputError("plane model: assigned point has multiplicity " + std::to_string(mult) +
                             ", expected " + std::to_string(a.multiplicity));
    }
}

/// Number of singular points counted with Tjurina number: degree of the
/// singular scheme of F = 0.
inline std::int64_t singular_scheme_degree(const Polynomial& F)
{
    std::vector<Polynomial> jac{F};
    for (int v = 0; v < 3; ++v)
        jac.push_back(detail::partial_derivative(F, v));
    auto hp = hilbert_polynomial(Ideal(F.field(), {"x", "y", "z"}, jac));
    return hp.dimension == 0 ? hp.degree : (hp.dimension < 0 ? 0 : -1);
}

/// Sections of the adjoint-type linear system: forms of the system degree with
/// all derivatives of order <= m-2 vanishing at each assigned m-fold point,
/// taken modulo F.
inline std::vector<Polynomial> plane_linear_system(const PlaneModel& m)
{
    const Field& f = m.F.field();
    const int e = m.system_degree;
    auto monos = monomials_of_degree(3, e);
    // conditions: rows = (point, derivative), columns = monomials
    std::vector<SparseVec> rows;
    for (const auto& a : m.assigned)
        for (int k = 0; k <= a.multiplicity - 2; ++k) {
            // derivatives of each monomial of order k, evaluated at the point
            std::size_t count = detail::derivatives_of_order(Polynomial::monomial(f, monos[0]), k).size();
            std::vector<SparseVec> per(count);
            for (std::uint32_t c = 0; c < monos.size(); ++c) {
                auto ds = detail::derivatives_of_order(Polynomial::monomial(f, monos[c]), k);
                for (std::size_t r = 0; r < ds.size(); ++r) {
                    Elem v = ds[r].is_zero() ? 0 : ds[r].evaluate(a.point);
                    if (v)
                        per[r].push_back({c, v});
                }
            }
            for (auto& r : per)
                rows.push_back(std::move(r));
        }
    Matrix cond(f, rows.size(), monos.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        cond.set_row(r, rows[r]);
    auto kernel = kernel_basis(cond);
    // remove multiples of F
    Ideal curve(f, m.names, {m.F});
    QuotientRing plane(curve);
    RowEchelon seen(f, plane.dim(e));
    std::vector<Polynomial> out;
    for (const auto& v : kernel) {
        Polynomial s = polynomial_from_coordinates(f, 3, e, v);
        if (seen.insert(plane.coordinates(s, e)))
            out.push_back(s);
    }
    return out;
}

/// Expected number of sections and image degree of the linear system.
inline std::int64_t plane_system_expected_dim(const PlaneModel& m)
{
    const int e = m.system_degree, d = m.F.degree();
    std::int64_t dim = binomial(e + 2, 2) - binomial(e - d + 2, 2);
    for (const auto& a : m.assigned)
        dim -= binomial(a.multiplicity, 2);
    return dim;
}

inline std::int64_t plane_system_expected_degree(const PlaneModel& m)
{
    std::int64_t deg = static_cast<std::int64_t>(m.system_degree) * m.F.degree();
    for (const auto& a : m.assigned)
        deg -= static_cast<std::int64_t>(a.multiplicity) * (a.multiplicity - 1);
    return deg;
}

struct ImplicitizationResult {
    EmbeddedScheme scheme;
    std::vector<Polynomial> sections;
    std::int64_t expected_degree = 0;
    HilbertPolynomial hilbert;
    int degree_bound = 0;
    bool degree_matches = false;
};

namespace detail {

/// Points of F = 0 over the prime field, found by solving F(a, y, 1) = 0
/// for y with a = 0, 1, 2, ... . Smooth points only.
class PlanePointSearch {
public:
    explicit PlanePointSearch(Polynomial F) : F_(std::move(F))
    {
        for (int v = 0; v < 3; ++v)
            grad_.push_back(partial_derivative(F_, v));
    }

    std::optional<std::vector<Elem>> nth(std::uint64_t k)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const Field& f = F_.field();
        while (found_.size() <= k && next_a_ < f.characteristic()) {
            Elem a = static_cast<Elem>(next_a_++);
            for (std::uint64_t y = 0; y < f.characteristic(); ++y) {
                std::vector<Elem> P{a, static_cast<Elem>(y), 1};
                if (F_.evaluate(P) != 0)
                    continue;
                bool smooth = false;
                for (const auto& g : grad_)
                    if (g.evaluate(P) != 0)
                        smooth = true;
                if (smooth)
                    found_.push_back(P);
            }
        }
        if (k < found_.size())
            return found_[k];
        return std::nullopt;
    }

private:
    Polynomial F_;
    std::vector<Polynomial> grad_;
    std::vector<std::vector<Elem>> found_;
    std::uint64_t next_a_ = 0;
    std::mutex mutex_;
};

}  // namespace detail

/// Ideal of the image of the plane curve under its linear system, computed
/// degree by degree as the kernel of Sym_d(sections) -> (k[x,y,z]/F)_{d e}.
inline ImplicitizationResult implicitize_plane_model(const PlaneModel& m, const std::string& label = "plane model")
{
    validate_plane_model(m);
    const Field& f = m.F.field();
    auto sections = plane_linear_system(m);
    std::int64_t expected = plane_system_expected_dim(m);
    if (static_cast<std::int64_t>(sections.size()) != expected)
        throw InputError("plane model: the linear system has dimension " + std::to_string(sections.size()) +
                         ", expected " + std::to_string(expected));
    const int r = static_cast<int>(sections.size()) - 1;
    if (r < 2)
        throw InputError("plane model: the linear system maps to a line or a point");
    if (r + 1 > kMaxVars)
        throw InputError("plane model: too many sections");
    const int e = m.system_degree;
    const std::int64_t deg_image = plane_system_expected_degree(m);
    const int bound = static_cast<int>(std::max<std::int64_t>(2, deg_image - r + 2));
    const int nv = r + 1;
    Ideal curve(f, m.names, {m.F});
    QuotientRing plane(curve);
    std::vector<std::string> names = default_names(nv, "y");

    // products of sections for all monomials of degree d, reduced mod F
    std::unordered_map<Monomial, Polynomial, MonomialHash> prev;
    prev.emplace(Monomial(nv), Polynomial::constant(f, 3, 1));
    std::vector<Polynomial> gens;
    std::vector<SparseVec> prev_kernel;
    std::size_t prev_dim = 0;
    for (int d = 1; d <= bound + 1; ++d) {
        auto monos = monomials_of_degree(nv, d);
        std::unordered_map<Monomial, Polynomial, MonomialHash> cur;
        std::vector<SparseVec> cols;
        for (const auto& mono : monos) {
            int v = 0;
            while (mono[v] == 0)
                ++v;
            Polynomial pr = curve.normal_form(prev.at(mono / Monomial::variable(nv, v)) * sections[v]);
            cols.push_back(plane.coordinates(pr, d * e));
            cur.emplace(mono, std::move(pr));
        }
        auto kernel = kernel_basis(Matrix::from_columns(f, plane.dim(d * e), cols));
        std::unordered_map<Monomial, std::uint32_t, MonomialHash> idx;
        for (std::uint32_t i = 0; i < monos.size(); ++i)
            idx.emplace(monos[i], i);
        RowEchelon generated(f, monos.size());
        auto prev_monos = monomials_of_degree(nv, d - 1);
        for (const auto& v : prev_kernel)
            for (int x = 0; x < nv; ++x) {
                SparseVec w;
                for (const auto& en : v)
                    w.push_back({idx.at(prev_monos[en.index] * Monomial::variable(nv, x)), en.value});
                canonicalize(f, w);
                generated.insert(w);
            }
        if (d == bound + 1) {
            // all of I_{bound+1} must come from lower degrees
            if (generated.rank() != kernel.size())
                throw ConsistencyError("plane model image needs generators beyond degree " + std::to_string(bound));
            break;
        }
        for (const auto& v : kernel)
            if (generated.insert(v))
                gens.push_back(polynomial_from_coordinates(f, nv, d, v));
        prev_kernel = std::move(kernel);
        prev_dim = monos.size();
        prev = std::move(cur);
    }
    (void)prev_dim;
    Ideal I(f, names, std::move(gens));
    auto search = std::make_shared<detail::PlanePointSearch>(m.F);
    PointSampler sampler = [search, sections](std::uint64_t k) -> std::optional<std::vector<Elem>> {
        auto P = search->nth(k);
        if (!P)
            return std::nullopt;
        std::vector<Elem> img;
        bool nonzero = false;
        for (const auto& s : sections) {
            img.push_back(s.evaluate(*P));
            nonzero = nonzero || img.back() != 0;
        }
        if (!nonzero)
            return std::nullopt;
        return img;
    };
    ImplicitizationResult res{EmbeddedScheme(I, label, sampler), sections, deg_image, hilbert_polynomial(I), bound,
                              false};
    res.degree_matches = res.hilbert.dimension == 1 && res.hilbert.degree == deg_image;
    if (!res.degree_matches)
        res.scheme.warnings.push_back("image degree " + std::to_string(res.hilbert.degree) + " differs from the expected " +
                                      std::to_string(deg_image));
    res.scheme.assumptions.push_back("the linear system is assumed to be the adjoint series of the normalization");
    return res;
}

/// A plane quintic with ordinary nodes at [0:0:1] (and [0:1:0] when nodes = 2)
/// and random coefficients otherwise; redrawn until the singular scheme has
/// degree equal to the number of nodes.
inline Polynomial nodal_plane_quintic(int nodes, std::uint64_t seed, const Field& f = Field(kDefaultCharacteristic),
                                      int max_retries = 16)
{
    if (nodes < 1 || nodes > 2)
        throw InputError("nodal_plane_quintic: supports one or two nodes");
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
        std::vector<Term> ts;
        for (const auto& m : monomials_of_degree(3, 5)) {
            if (m[2] >= 4 || (nodes == 2 && m[1] >= 4))
                continue;
            ts.push_back({m, detail::random_nonzero(f, rng)});
        }
        Polynomial F = Polynomial::from_terms(f, 3, std::move(ts));
        if (singular_scheme_degree(F) != nodes)
            continue;
        if (detail::multiplicity_at(F, {0, 0, 1}) != 2)
            continue;
        if (nodes == 2 && detail::multiplicity_at(F, {0, 1, 0}) != 2)
            continue;
        return F;
    }
    throw InputError("nodal_plane_quintic: no valid draw within the retry budget");
}

inline const std::vector<Elem>& node_point(int i)
{
    static const std::vector<std::vector<Elem>> pts{{0, 0, 1}, {0, 1, 0}};
    return pts.at(i);
}

/// Image of a nodal quintic under conics through its first `assign` nodes.
inline ImplicitizationResult nodal_quintic_model(int nodes, int assign, std::uint64_t seed,
                                                 const Field& f = Field(kDefaultCharacteristic))
{
    if (assign < 0 || assign > nodes)
        throw InputError("nodal_quintic_model: cannot assign more nodes than the curve has");
    PlaneModel m{nodal_plane_quintic(nodes, seed, f), {}, 2};
    for (int i = 0; i < assign; ++i)
        m.assigned.push_back({node_point(i), 2});
    return implicitize_plane_model(m, "nodal-quintic nodes=" + std::to_string(nodes) + " assign=" +
                                          std::to_string(assign) + " seed=" + std::to_string(seed));
}

// ---------------------------------------------------------------------------
// Point sampling

namespace detail {

/// F_p-rational points of a zero-dimensional projective scheme, assuming
/// no point has u_0 = 0 and distinct points have distinct u_1/u_0.
inline std::vector<std::vector<Elem>> rational_points_zero_dim(const Ideal& J)
{
    const Field& f = J.field();
    const int m = J.nvars();
    if (J.is_unit())
        return {};
    if (m == 1)
        return {{1}};
    // project to the (u_0, u_1) line
    std::uint32_t drop = 0;
    for (int i = 2; i < m; ++i)
        drop |= 1u << i;
    Ideal line = eliminate(J, drop);
    std::vector<Polynomial> binary = line.generators();
    std::vector<Elem> roots;
    if (binary.empty())
        return {};  // positive dimensional: not handled
    for (std::uint64_t t = 0; t < f.characteristic(); ++t) {
        std::vector<Elem> P{1, static_cast<Elem>(t)};
        bool zero = true;
        for (const auto& g : binary)
            if (g.evaluate(P) != 0) {
                zero = false;
                break;
            }
        if (zero)
            roots.push_back(static_cast<Elem>(t));
    }
    std::vector<std::vector<Elem>> out;
    for (Elem t : roots) {
        // substitute u_1 = t u_0 and drop u_1
        std::vector<Polynomial> images;
        for (int i = 0; i < m; ++i) {
            if (i == 0)
                images.push_back(Polynomial::variable(f, m - 1, 0));
            else if (i == 1)
                images.push_back(Polynomial::variable(f, m - 1, 0).scaled(t));
            else
                images.push_back(Polynomial::variable(f, m - 1, i - 1));
        }
        std::vector<Polynomial> gens;
        for (const auto& g : J.generators())
            gens.push_back(g.substitute(images));
        std::vector<std::string> names(J.names());
        names.erase(names.begin() + 1);
        for (auto& rest : rational_points_zero_dim(Ideal(f, names, std::move(gens)))) {
            std::vector<Elem> P{rest[0], f.mul(t, rest[0])};
            P.insert(P.end(), rest.begin() + 1, rest.end());
            out.push_back(std::move(P));
        }
    }
    return out;
}

}  // namespace detail

/// Rational points of X found by intersecting with random linear subspaces of
/// complementary dimension and solving the resulting zero-dimensional systems.
inline std::vector<ProjectivePoint> search_points(const Ideal& I, std::size_t count, std::uint64_t seed,
                                                  int max_sections = 200)
{
    const Field& f = I.field();
    const int N = I.nvars();
    auto hp = hilbert_polynomial(I);
    if (hp.dimension < 0)
        return {};
    const int m = N - hp.dimension;  // coordinates on the linear section
    std::mt19937_64 rng(seed);
    std::vector<ProjectivePoint> out;
    for (int trial = 0; trial < max_sections && out.size() < count; ++trial) {
        std::vector<DenseVec> M(N, DenseVec(m));
        for (auto& row : M)
            for (auto& x : row)
                x = detail::random_element(f, rng);
        std::vector<Polynomial> images;
        for (int i = 0; i < N; ++i) {
            std::vector<Term> ts;
            for (int j = 0; j < m; ++j)
                if (M[i][j])
                    ts.push_back({Monomial::variable(m, j), M[i][j]});
            images.push_back(Polynomial::from_terms(f, m, std::move(ts)));
        }
        std::vector<Polynomial> gens;
        for (const auto& g : I.generators())
            gens.push_back(g.substitute(images));
        Ideal J(f, default_names(m, "u"), std::move(gens));
        if (hilbert_polynomial(J).dimension != 0)
            continue;
        for (const auto& u : detail::rational_points_zero_dim(J)) {
            std::vector<Elem> x(N, 0);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < m; ++j)
                    x[i] = f.add(x[i], f.mul(M[i][j], u[j]));
            bool nonzero = false;
            for (Elem c : x)
                nonzero = nonzero || c;
            if (!nonzero)
                continue;
            ProjectivePoint P(f, x);
            if (!P.lies_on(I))
                continue;
            if (std::find(out.begin(), out.end(), P) == out.end())
                out.push_back(P);
            if (out.size() >= count)
                break;
        }
    }
    return out;
}

/// Distinct points of X; when count >= dim V the selection spans the ambient space.
inline std::vector<ProjectivePoint> sample_points(const EmbeddedScheme& X, std::size_t count, std::uint64_t seed = 0,
                                                  std::uint64_t budget = 4096)
{
    const Field& f = X.field();
    const std::size_t N = static_cast<std::size_t>(X.ideal.nvars());
    std::vector<ProjectivePoint> pool;
    const std::size_t want_pool = std::max<std::size_t>(count * 2, count + N);
    if (X.sampler) {
        for (std::uint64_t k = 0; k < budget && pool.size() < want_pool; ++k) {
            auto c = X.sampler(k);
            if (!c)
                continue;
            ProjectivePoint P(f, *c);
            if (!P.lies_on(X.ideal))
                throw ConsistencyError("sampler produced a point off " + X.label);
            if (std::find(pool.begin(), pool.end(), P) == pool.end())
                pool.push_back(P);
        }
    } else {
        pool = search_points(X.ideal, want_pool, seed);
    }
    // spanning points first, then the rest in order
    std::vector<ProjectivePoint> out;
    std::vector<bool> taken(pool.size(), false);
    if (count >= N) {
        RowEchelon span(f, N);
        for (std::size_t i = 0; i < pool.size() && span.rank() < N; ++i)
            if (span.insert(to_sparse(pool[i].coords()))) {
                taken[i] = true;
                out.push_back(pool[i]);
            }
        if (span.rank() < N)
            throw InputError("sample_points: found points do not span the ambient space of " + X.label);
    }
    for (std::size_t i = 0; i < pool.size() && out.size() < count; ++i)
        if (!taken[i])
            out.push_back(pool[i]);
    if (out.size() < count)
        throw InputError("sample_points: found " + std::to_string(out.size()) + " of " + std::to_string(count) +
                         " points on " + X.label + " within a budget of " + std::to_string(budget) + " candidates");
    return out;
}

// ---------------------------------------------------------------------------
// Recipes

/// Builds a scheme from a recipe line such as "rnc 4", "scroll 1 2",
/// "ci 2 3 seed=7", "nodal-quintic nodes=2 assign=1 seed=3" or
/// "plane-model file=quintic.txt adjoints=2 node=0,0,1".
inline EmbeddedScheme build_from_recipe(const std::string& recipe, const Field& f = Field(kDefaultCharacteristic))
{
    std::istringstream in(recipe);
    std::string kind;
    in >> kind;
    if (kind == "build")
        in >> kind;
    std::vector<int> numbers;
    std::map<std::string, std::vector<std::string>> kv;
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            try {
                numbers.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw InputError("recipe: unexpected token '" + tok + "'");
            }
        } else {
            kv[tok.substr(0, eq)].push_back(tok.substr(eq + 1));
        }
    }
    auto integer = [&](const std::string& key, std::int64_t dflt) -> std::int64_t {
        auto it = kv.find(key);
        if (it == kv.end())
            return dflt;
        try {
            return std::stoll(it->second.back());
        } catch (const std::exception&) {
            throw InputError("recipe: " + key + " needs an integer");
        }
    };
    if (kind == "rnc") {
        if (numbers.size() != 1)
            throw InputError("recipe: rnc takes one integer");
        return rational_normal_curve(numbers[0], f);
    }
    if (kind == "scroll") {
        if (numbers.empty())
            throw InputError("recipe: scroll takes block sizes");
        return scroll(ScrollSpec{numbers}, f);
    }
    if (kind == "ci")
        return complete_intersection(numbers, static_cast<std::uint64_t>(integer("seed", 1)), f);
    if (kind == "nodal-quintic")
        return nodal_quintic_model(static_cast<int>(integer("nodes", 1)), static_cast<int>(integer("assign", 1)),
                                   static_cast<std::uint64_t>(integer("seed", 1)), f)
            .scheme;
    if (kind == "plane-model") {
        auto it = kv.find("file");
        if (it == kv.end())
            throw InputError("recipe: plane-model needs file=");
        IdealFile pf = read_ideal_file(it->second.back(), f.characteristic());
        if (pf.ideal.nvars() != 3 || pf.ideal.generators().size() != 1)
            throw InputError("recipe: plane-model file must hold one form in three variables");
        PlaneModel m{pf.ideal.generators()[0], {}, static_cast<int>(integer("adjoints", 0)), pf.ideal.names()};
        for (const auto& node : kv["node"]) {
            std::vector<Elem> P;
            std::stringstream ss(node);
            std::string c;
            while (std::getline(ss, c, ','))
                P.push_back(pf.ideal.field().from_int(std::stoll(c)));
            m.assigned.push_back({P, 2});
        }
        return implicitize_plane_model(m, recipe).scheme;
    }
    throw InputError("recipe: unknown kind '" + kind + "'");
}

}  // namespace syz

#endif
