#ifndef SYZ_KOSZUL_HPP
#define SYZ_KOSZUL_HPP

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "syz/exterior.hpp"
#include "syz/ideal.hpp"
#include "syz/linalg.hpp"

namespace syz {

inline constexpr std::uint64_t kDefaultEntryBudget = 50'000'000;
inline constexpr int kDefaultQmax = 3;

/// A graded algebra S generated in degree 1 by V = S_1, as seen by the
/// Koszul complex: bases of the pieces S_q and multiplication by the
/// generators of V.
class GradedAlgebra {
public:
    virtual ~GradedAlgebra() = default;

    virtual const Field& field() const = 0;
    /// dim V.
    virtual int nvars() const = 0;
    /// Highest q for which dim(q) is exact. Multiplication out of that degree
    /// may land in a larger ambient space, which leaves kernels unchanged.
    virtual int exact_degree_bound() const = 0;
    virtual std::size_t dim(int q) const = 0;
    /// Coordinates of x_var * b_i in S_{q+1}, b_i the i-th basis element of S_q.
    virtual const SparseVec& multiply(int q, std::size_t i, int var) const = 0;
    /// Makes degrees 0..q available for concurrent readers.
    virtual void prepare(int q) const = 0;
    /// Index of the generator x_var in the basis of S_1.
    virtual std::size_t linear_index(int var) const = 0;
};

/// S = k[x_0..x_n]/I, with standard monomials of a grevlex basis as the
/// basis of each graded piece.
class QuotientRing : public GradedAlgebra {
public:
    explicit QuotientRing(Ideal I) : ideal_(std::move(I)) {}

    const Ideal& ideal() const { return ideal_; }
    const Field& field() const override { return ideal_.field(); }
    int nvars() const override { return ideal_.nvars(); }
    int exact_degree_bound() const override { return kMaxDegree - 2; }

    std::size_t dim(int q) const override
    {
        if (q < 0)
            return 0;
        return piece(q).basis.size();
    }

    const std::vector<Monomial>& basis(int q) const { return piece(q).basis; }

    const SparseVec& multiply(int q, std::size_t i, int var) const override
    {
        const Piece& pc = piece_with_products(q);
        return pc.products[i * nvars() + var];
    }

    void prepare(int q) const override
    {
        if (q >= 0)
            piece_with_products(q);
    }

    std::size_t linear_index(int var) const override
    {
        const Piece& pc = piece(1);
        auto it = pc.index.find(Monomial::variable(nvars(), var));
        if (it == pc.index.end())
            throw InputError("the ideal contains a linear form involving " + ideal_.names()[var]);
        return it->second;
    }

    bool nondegenerate() const { return dim(1) == static_cast<std::size_t>(nvars()); }

    /// Coordinates of a form of degree q in the basis of S_q.
    SparseVec coordinates(const Polynomial& f, int q) const
    {
        Polynomial r = ideal_.normal_form(f);
        const Piece& pc = piece(q);
        SparseVec v;
        for (const auto& t : r.terms()) {
            if (t.mono.degree() != q)
                throw InputError("coordinates: form has the wrong degree");
            v.push_back({pc.index.at(t.mono), t.coeff});
        }
        canonicalize(field(), v);
        return v;
    }

private:
    static constexpr int kMaxDegree = 48;

    struct Piece {
        std::vector<Monomial> basis;
        std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
        std::vector<SparseVec> products;
        std::atomic<bool> has_products{false};
    };

    const Piece& piece(int q) const
    {
        if (q < 0 || q >= kMaxDegree)
            throw InputError("graded piece degree out of range");
        if (auto* p = ready_[q].load(std::memory_order_acquire))
            return *p;
        std::lock_guard<std::mutex> lock(mutex_);
        return build_piece(q);
    }

    Piece& build_piece(int q) const
    {
        if (auto* p = ready_[q].load(std::memory_order_acquire))
            return *p;
        auto pc = std::make_unique<Piece>();
        pc->basis = graded_piece_basis(ideal_, q);
        for (std::uint32_t i = 0; i < pc->basis.size(); ++i)
            pc->index.emplace(pc->basis[i], i);
        Piece* raw = pc.get();
        storage_[q] = std::move(pc);
        ready_[q].store(raw, std::memory_order_release);
        return *raw;
    }

    const Piece& piece_with_products(int q) const
    {
        const Piece& pc = piece(q);
        if (pc.has_products.load(std::memory_order_acquire))
            return pc;
        std::lock_guard<std::mutex> lock(mutex_);
        Piece& self = build_piece(q);
        if (self.has_products.load(std::memory_order_relaxed))
            return self;
        Piece& next = build_piece(q + 1);
        const int n = nvars();
        const GroebnerBasis& gb = ideal_.groebner();
        self.products.assign(self.basis.size() * n, {});
        for (std::size_t i = 0; i < self.basis.size(); ++i)
            for (int v = 0; v < n; ++v) {
                Monomial m = self.basis[i] * Monomial::variable(n, v);
                SparseVec& out = self.products[i * n + v];
                auto it = next.index.find(m);
                if (it != next.index.end()) {
                    out.push_back({it->second, 1});
                    continue;
                }
                Polynomial r = gb.normal_form(Polynomial::monomial(field(), m));
                for (const auto& t : r.terms())
                    out.push_back({next.index.at(t.mono), t.coeff});
                canonicalize(field(), out);
            }
        self.has_products.store(true, std::memory_order_release);
        return self;
    }

    Ideal ideal_;
    mutable std::mutex mutex_;
    mutable std::array<std::unique_ptr<Piece>, kMaxDegree> storage_{};
    mutable std::array<std::atomic<Piece*>, kMaxDegree> ready_{};
};

/// The algebra generated by sections s_0..s_r of a linear system on a plane
/// curve V(F): S_0 = k, S_1 = span(s_i), and S_2 is represented inside the
/// forms of degree 2e modulo F. Only degrees 0 and 1 are exact.
class SectionRing : public GradedAlgebra {
public:
    SectionRing(Ideal curve, std::vector<Polynomial> sections) : curve_(std::move(curve)), sections_(std::move(sections))
    {
        if (sections_.empty())
            throw InputError("linear system has no sections");
        const int e = sections_.front().degree();
        for (const auto& s : sections_)
            if (s.is_zero() || s.degree() != e || !s.is_homogeneous() || s.nvars() != curve_.nvars())
                throw InputError("sections must be nonzero forms of one degree in the plane ring");
        QuotientRing plane(curve_);
        // sections must stay independent on the curve
        std::vector<SparseVec> cols;
        for (const auto& s : sections_)
            cols.push_back(plane.coordinates(s, e));
        Matrix m = Matrix::from_columns(curve_.field(), plane.dim(e), cols);
        if (rank(m) != sections_.size())
            throw InputError("sections are dependent modulo the curve equation");
        const int n = nvars();
        std::size_t d2 = plane.dim(2 * e);
        ambient2_ = d2;
        products_.assign(static_cast<std::size_t>(n) * n, {});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                products_[i * n + j] = plane.coordinates(sections_[i] * sections_[j], 2 * e);
        for (int j = 0; j < n; ++j)
            units_.push_back(SparseVec{{static_cast<std::uint32_t>(j), 1}});
    }

    const Field& field() const override { return curve_.field(); }
    int nvars() const override { return static_cast<int>(sections_.size()); }
    int exact_degree_bound() const override { return 1; }

    std::size_t dim(int q) const override
    {
        if (q < 0)
            return 0;
        if (q == 0)
            return 1;
        if (q == 1)
            return sections_.size();
        if (q == 2)
            return ambient2_;
        throw InputError("section ring: degree " + std::to_string(q) + " is not represented");
    }

    const SparseVec& multiply(int q, std::size_t i, int var) const override
    {
        if (q == 0)
            return units_.at(var);
        if (q == 1)
            return products_.at(i * nvars() + var);
        throw InputError("section ring: multiplication out of degree " + std::to_string(q));
    }

    void prepare(int) const override {}
    std::size_t linear_index(int var) const override { return static_cast<std::size_t>(var); }

private:
    Ideal curve_;
    std::vector<Polynomial> sections_;
    std::size_t ambient2_ = 0;
    std::vector<SparseVec> products_;
    std::vector<SparseVec> units_;
};

namespace detail {

inline void check_budget(std::uint64_t rows, std::uint64_t cols, std::uint64_t budget, int p, int q)
{
    if (rows * cols > budget)
        throw ResourceError("Koszul matrix for (p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ") has " +
                            std::to_string(rows) + " x " + std::to_string(cols) + " = " +
                            std::to_string(rows * cols) + " entries, over the budget of " + std::to_string(budget));
}

}  // namespace detail

/// Matrix of δ: ∧^p V ⊗ S_q -> ∧^{p-1} V ⊗ S_{q+1},
///
///     δ(e_S ⊗ f) = sum_k (-1)^(k+1) e_{S \ s_k} ⊗ x_{s_k} f.
///
/// Column (row) index = subset index * dim S_q (S_{q+1}) + basis index.
inline Matrix koszul_matrix(const GradedAlgebra& R, int p, int q, std::uint64_t budget = kDefaultEntryBudget)
{
    const int n = R.nvars();
    const Field& f = R.field();
    ExteriorBasis src(n, p), dst(n, p - 1);
    std::size_t dq = R.dim(q);
    std::size_t dq1 = (p >= 1 && src.size() && dq) ? R.dim(q + 1) : 0;
    std::uint64_t rows = static_cast<std::uint64_t>(dst.size()) * dq1;
    std::uint64_t cols = static_cast<std::uint64_t>(src.size()) * dq;
    detail::check_budget(rows, cols, budget, p, q);
    if (p < 1 || rows == 0)
        return Matrix(f, rows, cols);
    R.prepare(q);
    std::vector<SparseVec> columns;
    columns.reserve(cols);
    for (std::size_t si = 0; si < src.size(); ++si) {
        auto els = subset_elements(src[si]);
        std::vector<std::size_t> targets(els.size());
        for (std::size_t k = 0; k < els.size(); ++k)
            targets[k] = dst.index(src[si] & ~(1u << els[k]));
        for (std::size_t bi = 0; bi < dq; ++bi) {
            SparseVec col;
            for (std::size_t k = 0; k < els.size(); ++k) {
                Elem sign = removal_sign(f, static_cast<int>(k));
                for (const auto& e : R.multiply(q, bi, els[k]))
                    col.push_back({static_cast<std::uint32_t>(targets[k] * dq1 + e.index), f.mul(sign, e.value)});
            }
            canonicalize(f, col);
            columns.push_back(std::move(col));
        }
    }
    return Matrix::from_columns(f, rows, columns);
}

/// Rank of δ_{p,q}; zero when source or target vanishes.
inline std::size_t koszul_rank(const GradedAlgebra& R, int p, int q, std::uint64_t budget = kDefaultEntryBudget)
{
    if (p < 1 || p > R.nvars() || q < 0)
        return 0;
    return rank(koszul_matrix(R, p, q, budget));
}

/// dim ∧^p V ⊗ S_q.
inline std::int64_t koszul_term_dim(const GradedAlgebra& R, int p, int q)
{
    if (q < 0)
        return 0;
    return binomial(R.nvars(), p) * static_cast<std::int64_t>(R.dim(q));
}

/// dim K_{p,q} = dim ker δ_{p,q} - rank δ_{p+1,q-1}.
inline std::int64_t koszul_dim(const GradedAlgebra& R, int p, int q, std::uint64_t budget = kDefaultEntryBudget)
{
    if (p < 0 || q < 0 || p > R.nvars())
        return 0;
    if (q > R.exact_degree_bound())
        throw InputError("K_{p,q} is not available in degree q=" + std::to_string(q) + " for this algebra");
    std::int64_t d = koszul_term_dim(R, p, q);
    d -= static_cast<std::int64_t>(koszul_rank(R, p, q, budget));
    d -= static_cast<std::int64_t>(koszul_rank(R, p + 1, q - 1, budget));
    return d;
}

/// Graded Betti numbers b_{p,q} = dim K_{p,q} over 0 <= p <= pmax, 0 <= q <= qmax.
struct BettiTable {
    std::uint32_t characteristic = 0;
    int pmax = 0;
    int qmax = 0;
    std::map<std::pair<int, int>, std::int64_t> entries;

    std::optional<std::int64_t> at(int p, int q) const
    {
        auto it = entries.find({p, q});
        if (it == entries.end())
            return std::nullopt;
        return it->second;
    }

    /// Rows q, columns p; zero entries print as '.'.
    std::string to_text() const
    {
        std::string out = "     ";
        auto cell = [](const std::string& s) { return std::string(s.size() < 5 ? 5 - s.size() : 0, ' ') + s; };
        for (int p = 0; p <= pmax; ++p)
            out += cell(std::to_string(p));
        out += "\n";
        for (int q = 0; q <= qmax; ++q) {
            std::string label = std::to_string(q) + ":";
            out += std::string(label.size() < 5 ? 5 - label.size() : 0, ' ') + label;
            for (int p = 0; p <= pmax; ++p) {
                auto v = at(p, q);
                out += cell(!v ? "-" : (*v == 0 ? "." : std::to_string(*v)));
            }
            out += "\n";
        }
        return out;
    }

    friend bool operator==(const BettiTable& a, const BettiTable& b)
    {
        return a.pmax == b.pmax && a.qmax == b.qmax && a.entries == b.entries;
    }
};

struct KoszulOptions {
    std::uint64_t entry_budget = kDefaultEntryBudget;
    unsigned jobs = 1;
};

namespace detail {

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn)
{
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t)
        workers.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (auto& w : workers)
        w.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace detail

inline BettiTable betti_table(const GradedAlgebra& R, int pmax, int qmax, const KoszulOptions& opt = {})
{
    if (pmax < 0 || qmax < 0)
        throw InputError("betti_table: negative range");
    if (qmax > R.exact_degree_bound())
        throw InputError("betti_table: qmax exceeds the degrees this algebra represents");
    const int n = R.nvars();
    R.prepare(qmax + 1);
    // every cell uses rank δ_{p,q} and rank δ_{p+1,q-1}
    std::vector<std::pair<int, int>> needed;
    for (int p = 1; p <= std::min(pmax + 1, n); ++p)
        for (int q = 0; q <= qmax; ++q)
            if (!(p == pmax + 1 && q == qmax))
                needed.push_back({p, q});
    std::vector<std::size_t> ranks(needed.size(), 0);
    // large matrices first for better balance
    std::vector<std::size_t> order(needed.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return koszul_term_dim(R, needed[a].first, needed[a].second) >
               koszul_term_dim(R, needed[b].first, needed[b].second);
    });
    for (auto [p, q] : needed) {
        std::uint64_t rows = static_cast<std::uint64_t>(binomial(n, p - 1)) * R.dim(q + 1);
        detail::check_budget(rows, static_cast<std::uint64_t>(koszul_term_dim(R, p, q)), opt.entry_budget, p, q);
    }
    detail::parallel_for(order.size(), opt.jobs, [&](std::size_t k) {
        auto [p, q] = needed[order[k]];
        ranks[order[k]] = koszul_rank(R, p, q, opt.entry_budget);
    });
    std::map<std::pair<int, int>, std::size_t> rank_of;
    for (std::size_t i = 0; i < needed.size(); ++i)
        rank_of[needed[i]] = ranks[i];
    auto r = [&](int p, int q) -> std::int64_t {
        auto it = rank_of.find({p, q});
        return it == rank_of.end() ? 0 : static_cast<std::int64_t>(it->second);
    };
    BettiTable t;
    t.characteristic = R.field().characteristic();
    t.pmax = pmax;
    t.qmax = qmax;
    for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q <= qmax; ++q)
            t.entries[{p, q}] = p > n ? 0 : koszul_term_dim(R, p, q) - r(p, q) - r(p + 1, q - 1);
    return t;
}

inline BettiTable betti_table(const Ideal& I, int pmax, int qmax, const KoszulOptions& opt = {})
{
    QuotientRing R(I);
    return betti_table(R, pmax, qmax, opt);
}

// ---------------------------------------------------------------------------
// Cocycles in ∧^p V ⊗ V

struct CocycleTerm {
    std::uint32_t wedge;
    int var;
    Elem coeff;

    friend bool operator==(const CocycleTerm&, const CocycleTerm&) = default;
};

/// An element ᾱ of ∧^p V ⊗ V, the representative of a class in K_{p,1}.
/// Terms are sorted by (subset in lexicographic order, variable).
struct KoszulCocycle {
    int p = 0;
    int nvars = 0;
    std::vector<CocycleTerm> terms;

    bool is_zero() const { return terms.empty(); }

    /// Coordinates with index = (subset index in ExteriorBasis(nvars, p)) * nvars + var.
    SparseVec to_vector() const
    {
        ExteriorBasis eb(nvars, p);
        SparseVec v;
        for (const auto& t : terms)
            v.push_back({static_cast<std::uint32_t>(eb.index(t.wedge) * nvars + t.var), t.coeff});
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
        return v;
    }

    static KoszulCocycle from_vector(int nvars, int p, const SparseVec& v)
    {
        ExteriorBasis eb(nvars, p);
        KoszulCocycle c{p, nvars, {}};
        for (const auto& e : v)
            if (e.value)
                c.terms.push_back({eb[e.index / nvars], static_cast<int>(e.index % nvars), e.value});
        c.normalize();
        return c;
    }

    void normalize()
    {
        std::sort(terms.begin(), terms.end(), [](const CocycleTerm& a, const CocycleTerm& b) {
            if (a.wedge != b.wedge)
                return SubsetLess{}(a.wedge, b.wedge);
            return a.var < b.var;
        });
        terms.erase(std::remove_if(terms.begin(), terms.end(), [](const CocycleTerm& t) { return t.coeff == 0; }),
                    terms.end());
    }

    friend bool operator==(const KoszulCocycle&, const KoszulCocycle&) = default;
};

inline KoszulCocycle linear_combination(const Field& f, const std::vector<KoszulCocycle>& cs,
                                        const std::vector<Elem>& coeffs)
{
    if (cs.empty() || cs.size() != coeffs.size())
        throw InputError("linear_combination: size mismatch");
    SparseVec acc;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].p != cs[0].p || cs[i].nvars != cs[0].nvars)
            throw InputError("linear_combination: cocycles live in different spaces");
        acc = axpy(f, acc, coeffs[i], cs[i].to_vector());
    }
    return KoszulCocycle::from_vector(cs[0].nvars, cs[0].p, acc);
}

/// A pseudorandom nonzero combination of basis classes.
template <class Rng>
KoszulCocycle random_class(const Field& f, const std::vector<KoszulCocycle>& basis, Rng& rng)
{
    if (basis.empty())
        throw InputError("random_class: the cohomology group is zero");
    std::vector<Elem> c(basis.size());
    for (;;) {
        bool nonzero = false;
        for (auto& x : c) {
            x = static_cast<Elem>(rng() % f.characteristic());
            nonzero = nonzero || x;
        }
        if (nonzero)
            return linear_combination(f, basis, c);
    }
}

/// δ(ᾱ) computed in the polynomial ring: one quadric per (p-1)-subset, in
/// lexicographic subset order. These are the ∧^{p-1}V-coordinates of the
/// quadratic map x -> i_x(ᾱ(x)).
inline std::vector<Polynomial> koszul_image_quadrics(const Field& f, const KoszulCocycle& a)
{
    const int n = a.nvars;
    ExteriorBasis dst(n, a.p - 1);
    std::vector<Polynomial> out(dst.size(), Polynomial(f, n));
    std::vector<std::vector<Term>> acc(dst.size());
    for (const auto& t : a.terms) {
        auto els = subset_elements(t.wedge);
        for (std::size_t k = 0; k < els.size(); ++k) {
            Monomial m = Monomial::variable(n, els[k]) * Monomial::variable(n, t.var);
            acc[dst.index(t.wedge & ~(1u << els[k]))].push_back(
                {m, f.mul(removal_sign(f, static_cast<int>(k)), t.coeff)});
        }
    }
    for (std::size_t i = 0; i < dst.size(); ++i)
        out[i] = Polynomial::from_terms(f, n, std::move(acc[i]));
    return out;
}

/// Cocycle condition: every coordinate of δ(ᾱ) lies in (I_X)_2.
inline bool is_cocycle(const Ideal& I, const KoszulCocycle& a)
{
    if (a.nvars != I.nvars())
        throw InputError("is_cocycle: ring mismatch");
    for (const auto& q : koszul_image_quadrics(I.field(), a))
        if (!I.contains(q))
            return false;
    return true;
}

/// δ(e_T ⊗ 1) for all (p+1)-subsets T: the coboundaries in ∧^p V ⊗ V, in
/// KoszulCocycle::to_vector coordinates.
inline std::vector<SparseVec> coboundary_vectors(const Field& f, int nvars, int p)
{
    std::vector<SparseVec> out;
    if (p < 0 || p + 1 > nvars)
        return out;
    ExteriorBasis src(nvars, p + 1), dst(nvars, p);
    for (std::size_t ti = 0; ti < src.size(); ++ti) {
        auto els = subset_elements(src[ti]);
        SparseVec v;
        for (std::size_t k = 0; k < els.size(); ++k)
            v.push_back({static_cast<std::uint32_t>(dst.index(src[ti] & ~(1u << els[k])) * nvars + els[k]),
                         removal_sign(f, static_cast<int>(k))});
        canonicalize(f, v);
        out.push_back(std::move(v));
    }
    return out;
}

inline RowEchelon coboundary_space(const Field& f, int nvars, int p)
{
    RowEchelon e(f, static_cast<std::size_t>(binomial(nvars, p) * nvars));
    for (const auto& v : coboundary_vectors(f, nvars, p))
        e.insert(v);
    e.make_reduced();
    return e;
}

inline bool is_coboundary(const Field& f, const KoszulCocycle& a)
{
    return coboundary_space(f, a.nvars, a.p).contains(a.to_vector());
}

namespace detail {

inline void require_nondegenerate(const QuotientRing& R)
{
    if (!R.nondegenerate())
        throw InputError("the scheme is degenerate: its ideal contains a linear form");
    for (int v = 0; v < R.nvars(); ++v)
        if (R.linear_index(v) != static_cast<std::size_t>(v))
            throw ConsistencyError("unexpected ordering of the degree-one basis");
}

}  // namespace detail

/// Canonical basis of cocycle representatives for K_{p,1}: the kernel of
/// δ_{p,1} projected away from the pivot coordinates of the coboundaries, in
/// reduced row echelon form.
inline std::vector<KoszulCocycle> k_p1_cocycle_basis(const QuotientRing& R, int p,
                                                     std::uint64_t budget = kDefaultEntryBudget)
{
    detail::require_nondegenerate(R);
    const int n = R.nvars();
    const Field& f = R.field();
    if (p < 1 || p > n)
        return {};
    auto kernel = kernel_basis(koszul_matrix(R, p, 1, budget));
    RowEchelon boundaries = coboundary_space(f, n, p);
    RowEchelon classes(f, static_cast<std::size_t>(binomial(n, p) * n));
    for (const auto& v : kernel)
        classes.insert(boundaries.reduce(v));
    classes.make_reduced();
    std::vector<KoszulCocycle> out;
    for (const auto& v : classes.basis())
        out.push_back(KoszulCocycle::from_vector(n, p, v));
    std::int64_t expected = static_cast<std::int64_t>(kernel.size()) - static_cast<std::int64_t>(boundaries.rank());
    if (static_cast<std::int64_t>(out.size()) != expected)
        throw ConsistencyError("cocycle basis size differs from dim K_{p,1}");
    return out;
}

inline std::vector<KoszulCocycle> k_p1_cocycle_basis(const Ideal& I, int p, std::uint64_t budget = kDefaultEntryBudget)
{
    QuotientRing R(I);
    return k_p1_cocycle_basis(R, p, budget);
}

/// Number of independent classes among the given cocycles in K_{p,1}.
inline std::size_t class_rank(const Field& f, const std::vector<KoszulCocycle>& cs)
{
    if (cs.empty())
        return 0;
    RowEchelon e = coboundary_space(f, cs[0].nvars, cs[0].p);
    std::size_t base = e.rank();
    for (const auto& c : cs)
        e.insert(c.to_vector());
    return e.rank() - base;
}

/// dim K_{p,1} through K_{p-1,2}(I_X, V) = ker(∧^{p-1}V ⊗ (I_X)_2 -> ∧^{p-2}V ⊗ Sym_3 V).
inline std::int64_t k_p1_dim_via_ideal(const Ideal& I, int p, std::uint64_t budget = kDefaultEntryBudget)
{
    const int n = I.nvars();
    const Field& f = I.field();
    if (p < 1 || p > n)
        return 0;
    if (contains_linear_form(I))
        throw InputError("the scheme is degenerate: its ideal contains a linear form");
    auto quadrics = graded_component(I, 2);
    if (p == 1)
        return static_cast<std::int64_t>(quadrics.size());
    auto sym2 = monomials_of_degree(n, 2);
    auto sym3 = monomials_of_degree(n, 3);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> idx3;
    for (std::uint32_t i = 0; i < sym3.size(); ++i)
        idx3.emplace(sym3[i], i);
    ExteriorBasis src(n, p - 1), dst(n, p - 2);
    std::uint64_t rows = dst.size() * sym3.size(), cols = src.size() * quadrics.size();
    detail::check_budget(rows, cols, budget, p - 1, 2);
    std::vector<Polynomial> qpolys;
    for (const auto& v : quadrics)
        qpolys.push_back(polynomial_from_coordinates(f, n, 2, v));
    std::vector<SparseVec> columns;
    for (std::size_t si = 0; si < src.size(); ++si) {
        auto els = subset_elements(src[si]);
        for (const auto& q : qpolys) {
            SparseVec col;
            for (std::size_t k = 0; k < els.size(); ++k) {
                std::size_t ti = dst.index(src[si] & ~(1u << els[k]));
                Elem sign = removal_sign(f, static_cast<int>(k));
                Monomial xv = Monomial::variable(n, els[k]);
                for (const auto& t : q.terms())
                    col.push_back({static_cast<std::uint32_t>(ti * sym3.size() + idx3.at(t.mono * xv)),
                                   f.mul(sign, t.coeff)});
            }
            canonicalize(f, col);
            columns.push_back(std::move(col));
        }
    }
    Matrix m = Matrix::from_columns(f, rows, columns);
    return static_cast<std::int64_t>(cols) - static_cast<std::int64_t>(rank(m));
}

/// res^Y_X: a cocycle for Y with I_Y ⊆ I_X, read as a cocycle for X.
inline KoszulCocycle res_map(const Ideal& I_Y, const Ideal& I_X, const KoszulCocycle& a)
{
    if (I_Y.nvars() != I_X.nvars() || a.nvars != I_X.nvars())
        throw InputError("res_map: ambient spaces differ");
    if (!ideal_contains(I_X, I_Y))
        throw InputError("res_map: the ideal of Y is not contained in the ideal of X");
    if (!is_cocycle(I_Y, a))
        throw InputError("res_map: input is not a cocycle for Y");
    return a;
}

}  // namespace syz

#endif
