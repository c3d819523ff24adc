#ifndef SYZ_SYZGEO_HPP
#define SYZ_SYZGEO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syz/exterior.hpp"
#include "syz/ideal.hpp"
#include "syz/koszul.hpp"

namespace syz {

/// A point of P(V^∨), normalized so that its first nonzero coordinate is 1.
class ProjectivePoint {
public:
    ProjectivePoint(const Field& f, std::vector<Elem> coords) : coords_(std::move(coords))
    {
        std::size_t k = 0;
        while (k < coords_.size() && coords_[k] == 0)
            ++k;
        if (k == coords_.size())
            throw InputError("a projective point needs a nonzero coordinate");
        Elem inv = f.inv(coords_[k]);
        for (auto& c : coords_)
            c = f.mul(c, inv);
    }

    const std::vector<Elem>& coords() const { return coords_; }
    int size() const { return static_cast<int>(coords_.size()); }
    Elem operator[](int i) const { return coords_[i]; }

    bool lies_on(const Ideal& I) const
    {
        if (I.nvars() != size())
            throw InputError("point and ideal live in different ambient spaces");
        for (const auto& g : I.generators())
            if (g.evaluate(coords_) != 0)
                return false;
        return true;
    }

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < coords_.size(); ++i)
            s += (i ? ":" : "") + std::to_string(coords_[i]);
        return s + "]";
    }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    std::vector<Elem> coords_;
};

/// Linear forms vanishing at x, i.e. a basis of W_x ⊆ V as coefficient vectors.
inline std::vector<DenseVec> hyperplane_basis(const Field& f, const ProjectivePoint& x)
{
    const int n = x.size();
    int k = n - 1;
    while (x[k] == 0)
        --k;
    std::vector<DenseVec> out;
    for (int j = 0; j < n; ++j) {
        if (j == k)
            continue;
        DenseVec v(n, 0);
        v[j] = 1;
        v[k] = f.neg(f.mul(x[j], f.inv(x[k])));
        out.push_back(v);
    }
    return out;
}

inline Wedge contract(const Field& f, const ProjectivePoint& x, const Wedge& w) { return contract(f, x.coords(), w); }

/// Coordinates y with x = A y and A e_n = P: the point is moved to [0:...:0:1].
struct PointFrame {
    SquareMatrix A;
    SquareMatrix A_inv;
};

inline PointFrame frame_for_point(const Field& f, const ProjectivePoint& P)
{
    const int n = P.size();
    int k = n - 1;
    while (P[k] == 0)
        --k;
    SquareMatrix A(n, DenseVec(n, 0));
    int col = 0;
    for (int j = 0; j < n; ++j) {
        if (j == k)
            continue;
        A[j][col++] = 1;
    }
    for (int i = 0; i < n; ++i)
        A[i][n - 1] = P[i];
    auto inv = inverse(f, A);
    if (!inv)
        throw ConsistencyError("point frame is singular");
    return {A, *inv};
}

/// (∧^p A ⊗ A)(ᾱ) for the substitution x_i = sum_j A_ij y_j, so that the
/// quadrics of the result are those of ᾱ written in the y coordinates.
inline KoszulCocycle transform_cocycle(const Field& f, const KoszulCocycle& a, const SquareMatrix& A)
{
    const int n = a.nvars;
    if (static_cast<int>(A.size()) != n)
        throw InputError("transform_cocycle: matrix size differs from the number of variables");
    ExteriorBasis eb(n, a.p);
    std::map<std::uint32_t, std::vector<Elem>> minors;  // S -> det A[S, T] over T
    auto minors_of = [&](std::uint32_t S) -> const std::vector<Elem>& {
        auto it = minors.find(S);
        if (it != minors.end())
            return it->second;
        auto rows = subset_elements(S);
        std::vector<Elem> out(eb.size());
        for (std::size_t ti = 0; ti < eb.size(); ++ti) {
            auto cols = subset_elements(eb[ti]);
            std::vector<DenseVec> sub(rows.size(), DenseVec(cols.size()));
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c)
                    sub[r][c] = A[rows[r]][cols[c]];
            out[ti] = determinant(f, sub);
        }
        return minors.emplace(S, std::move(out)).first->second;
    };
    SparseVec acc;
    DenseVec dense(eb.size() * n, 0);
    for (const auto& t : a.terms) {
        const auto& m = minors_of(t.wedge);
        for (std::size_t ti = 0; ti < eb.size(); ++ti) {
            if (m[ti] == 0)
                continue;
            Elem c = f.mul(t.coeff, m[ti]);
            for (int j = 0; j < n; ++j)
                if (A[t.var][j])
                    dense[ti * n + j] = f.add(dense[ti * n + j], f.mul(c, A[t.var][j]));
        }
    }
    return KoszulCocycle::from_vector(n, a.p, to_sparse(dense));
}

/// The quadric ideal of Syz(α), generated by the coordinates of x -> i_x(ᾱ(x)).
struct SyzygySchemeResult {
    Ideal ideal;
    KoszulCocycle representative;
    std::size_t quadric_count = 0;  // binom(n+1, p-1), zero quadrics included
};

inline SyzygySchemeResult syzygy_scheme(const Ideal& I_X, const KoszulCocycle& a)
{
    const Field& f = I_X.field();
    if (a.nvars != I_X.nvars())
        throw InputError("syzygy_scheme: cocycle and ideal live in different rings");
    if (a.p < 1)
        throw InputError("syzygy_scheme: the class must have homological index p >= 1");
    if (is_coboundary(f, a))
        throw InputError("syzygy scheme of 0 is the ambient space by convention; rejected");
    auto quadrics = koszul_image_quadrics(f, a);
    std::size_t count = quadrics.size();
    std::vector<Polynomial> gens;
    for (auto& q : quadrics) {
        if (q.is_zero())
            continue;
        if (!I_X.contains(q))
            throw InputError("syzygy_scheme: input is not a cocycle (a quadric is not in the ideal)");
        gens.push_back(q.monic());
    }
    return {Ideal(f, I_X.names(), std::move(gens)), a, count};
}

/// pr_x(α): the class moved to the frame of x, contracted with x, and read
/// over W_x = span(y_0..y_{n-1}) as a class for Y = pr_x(X).
struct ProjectionResult {
    PointFrame frame;
    Ideal moved;         // I_X in the y coordinates
    Ideal image;         // I_Y in y_0..y_{n-1}
    KoszulCocycle moved_class;
    KoszulCocycle projected;
    bool zero_class = false;
};

namespace detail {

/// (i_x ⊗ id) at x = e_last, with the V factor kept in all n+1 coordinates.
inline KoszulCocycle contract_last(const Field& f, const KoszulCocycle& b)
{
    const int n = b.nvars - 1;
    KoszulCocycle out{b.p - 1, b.nvars, {}};
    const std::uint32_t last = 1u << n;
    Elem sign = removal_sign(f, b.p - 1);  // the last index sits at position p-1
    for (const auto& t : b.terms)
        if (t.wedge & last)
            out.terms.push_back({t.wedge & ~last, t.var, f.mul(sign, t.coeff)});
    out.normalize();
    return out;
}

inline std::vector<std::string> drop_last(std::vector<std::string> names)
{
    names.pop_back();
    return names;
}

}  // namespace detail

inline ProjectionResult project_class(const Ideal& I_X, const ProjectivePoint& x, const KoszulCocycle& a)
{
    const Field& f = I_X.field();
    const int N = I_X.nvars();
    if (x.size() != N || a.nvars != N)
        throw InputError("project_class: dimensions differ");
    if (!x.lies_on(I_X))
        throw InputError("project_class: the point " + x.to_string() + " does not lie on X");
    if (a.p < 1)
        throw InputError("project_class: the class must have p >= 1");
    PointFrame frame = frame_for_point(f, x);
    Ideal moved = change_coordinates(I_X, frame.A);
    KoszulCocycle b = transform_cocycle(f, a, frame.A);
    KoszulCocycle c = detail::contract_last(f, b);
    KoszulCocycle proj{c.p, N - 1, {}};
    for (const auto& t : c.terms) {
        if (t.var == N - 1)
            throw ConsistencyError("projected class has a component along the centre of projection");
        proj.terms.push_back(t);
    }
    Ideal image = eliminate(moved, 1u << (N - 1));
    image = Ideal(f, detail::drop_last(moved.names()), image.generators());
    if (proj.p >= 1 && !is_cocycle(image, proj))
        throw ConsistencyError("projected class is not a cocycle for the projected scheme");
    bool zero = proj.p == 0 ? proj.is_zero() : is_coboundary(f, proj);
    return {frame, moved, image, b, proj, zero};
}

/// Both sides of the membership criterion for a point x of the ambient space:
/// route A evaluates the quadrics of Syz(α) at x; route B tests whether the
/// contracted class lies in the Koszul cycle space of the projection of X
/// from x, inside ∧^{p-1} W_x ⊗ V.
struct MembershipResult {
    bool route_a = false;
    bool route_b = false;
};

inline MembershipResult syz_membership(const Ideal& I_X, const ProjectivePoint& x, const KoszulCocycle& a,
                                       std::uint64_t budget = kDefaultEntryBudget)
{
    const Field& f = I_X.field();
    const int N = I_X.nvars();
    if (x.size() != N || a.nvars != N)
        throw InputError("syz_membership: dimensions differ");
    MembershipResult r;
    r.route_a = true;
    for (const auto& q : koszul_image_quadrics(f, a))
        if (q.evaluate(x.coords()) != 0) {
            r.route_a = false;
            break;
        }

    PointFrame frame = frame_for_point(f, x);
    Ideal moved = change_coordinates(I_X, frame.A);
    KoszulCocycle c = detail::contract_last(f, transform_cocycle(f, a, frame.A));
    bool off_w = false;
    KoszulCocycle w{c.p, N - 1, {}};
    for (const auto& t : c.terms) {
        if (t.var == N - 1)
            off_w = true;
        else
            w.terms.push_back(t);
    }
    if (off_w) {
        r.route_b = false;
    } else if (c.p == 0) {
        r.route_b = true;
    } else {
        Ideal image = eliminate(moved, 1u << (N - 1));
        QuotientRing Y(Ideal(f, detail::drop_last(moved.names()), image.generators()));
        detail::require_nondegenerate(Y);
        auto kernel = kernel_basis(koszul_matrix(Y, c.p, 1, budget));
        RowEchelon cycles(f, static_cast<std::size_t>(binomial(N - 1, c.p) * (N - 1)));
        for (const auto& v : kernel)
            cycles.insert(v);
        r.route_b = cycles.contains(w.to_vector());
    }
    if (r.route_a != r.route_b)
        throw ConsistencyError("membership routes disagree at " + x.to_string());
    return r;
}

/// The ideal sum over x in Z of Cone_x(Syz(pr_x α)), pulled back to the
/// original coordinates.
struct ReconstructionResult {
    Ideal ideal;
    std::vector<Ideal> cones;         // one per used point, original coordinates
    std::vector<std::size_t> used;    // indices into Z
    std::vector<std::size_t> skipped; // pr_x(α) = 0
    std::vector<std::string> warnings;
};

inline Ideal pulled_back_cone(const Ideal& I_X, const ProjectionResult& pr)
{
    const Field& f = I_X.field();
    const int N = I_X.nvars();
    SyzygySchemeResult s = syzygy_scheme(pr.image, pr.projected);
    Ideal cone = cone_ideal(s.ideal, N - 1, pr.moved.names().back());
    Ideal back = change_coordinates(cone, pr.frame.A_inv);
    return Ideal(f, I_X.names(), back.generators());
}

inline ReconstructionResult reconstruct_from_projections(const Ideal& I_X, const KoszulCocycle& a,
                                                         const std::vector<ProjectivePoint>& Z, unsigned jobs = 1)
{
    const Field& f = I_X.field();
    const int N = I_X.nvars();
    if (a.p < 2)
        throw InputError("reconstruct_from_projections: needs a class with p >= 2");
    std::vector<SparseVec> cols;
    for (const auto& z : Z) {
        if (z.size() != N)
            throw InputError("reconstruct_from_projections: point dimension differs");
        cols.push_back(to_sparse(z.coords()));
    }
    if (rank(Matrix::from_columns(f, N, cols)) != static_cast<std::size_t>(N))
        throw InputError("reconstruct_from_projections: the points do not span the ambient space");

    std::vector<std::optional<Ideal>> cones(Z.size());
    detail::parallel_for(Z.size(), jobs, [&](std::size_t i) {
        ProjectionResult pr = project_class(I_X, Z[i], a);
        if (!pr.zero_class)
            cones[i] = pulled_back_cone(I_X, pr);
    });
    ReconstructionResult r{Ideal::zero(f, I_X.names()), {}, {}, {}, {}};
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < Z.size(); ++i) {
        if (!cones[i]) {
            r.skipped.push_back(i);
            r.warnings.push_back("skipped point " + Z[i].to_string() + ": the projected class is zero");
            continue;
        }
        r.used.push_back(i);
        for (const auto& g : cones[i]->generators())
            gens.push_back(g);
        r.cones.push_back(*cones[i]);
    }
    r.ideal = Ideal(f, I_X.names(), std::move(gens));
    return r;
}

}  // namespace syz

#endif
