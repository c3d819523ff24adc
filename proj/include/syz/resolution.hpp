#ifndef SYZ_RESOLUTION_HPP
#define SYZ_RESOLUTION_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syz/ideal.hpp"
#include "syz/koszul.hpp"
#include "syz/linalg.hpp"

namespace syz {

/// Graded minimal free resolution of S/I, truncated at the given bounds.
///
/// F_0 = S with one generator of degree 0. maps[i] describes F_i -> F_{i-1}
/// for i >= 1: maps[i][g] lists (h, f) with f the coefficient of generator h
/// of F_{i-1} in the image of generator g of F_i.
struct Resolution {
    std::vector<std::vector<int>> degrees;
    std::vector<std::vector<std::vector<std::pair<int, Polynomial>>>> maps;
    int length_bound = 0;
    int degree_bound = 0;

    /// Number of generators of F_i in degree d.
    std::int64_t graded_rank(int i, int d) const
    {
        if (i < 0 || i >= static_cast<int>(degrees.size()))
            return 0;
        std::int64_t c = 0;
        for (int g : degrees[i])
            c += g == d;
        return c;
    }

    /// b_{p,q} = graded_rank(p, p+q), defined for p <= length_bound and p+q <= degree_bound.
    bool covers(int p, int q) const { return p >= 0 && q >= 0 && p <= length_bound && p + q <= degree_bound; }

    BettiTable betti_table(std::uint32_t characteristic, int pmax, int qmax) const
    {
        BettiTable t;
        t.characteristic = characteristic;
        t.pmax = pmax;
        t.qmax = qmax;
        for (int p = 0; p <= pmax; ++p)
            for (int q = 0; q <= qmax; ++q)
                if (covers(p, q))
                    t.entries[{p, q}] = graded_rank(p, p + q);
        return t;
    }

    std::string truncation_note() const
    {
        return "resolution computed through homological degree " + std::to_string(length_bound) +
               " and internal degree " + std::to_string(degree_bound);
    }
};

namespace detail {

/// Coordinates of the degree-D part of a free module with generators of the given degrees.
class FreeModuleDegree {
public:
    FreeModuleDegree(int nvars, const std::vector<int>& gen_degrees, int D)
    {
        for (std::size_t g = 0; g < gen_degrees.size(); ++g) {
            offset_.push_back(size_);
            monos_.push_back(monomials_of_degree(nvars, D - gen_degrees[g]));
            std::unordered_map<Monomial, std::uint32_t, MonomialHash> idx;
            for (std::uint32_t i = 0; i < monos_.back().size(); ++i)
                idx.emplace(monos_.back()[i], i);
            index_.push_back(std::move(idx));
            size_ += monos_.back().size();
        }
    }

    std::size_t size() const { return size_; }
    std::size_t generators() const { return monos_.size(); }
    const std::vector<Monomial>& monomials(std::size_t g) const { return monos_[g]; }
    std::uint32_t coordinate(std::size_t g, const Monomial& m) const
    {
        return static_cast<std::uint32_t>(offset_[g] + index_[g].at(m));
    }

    /// (generator, monomial) for a coordinate.
    std::pair<std::size_t, Monomial> decode(std::uint32_t c) const
    {
        std::size_t g = std::upper_bound(offset_.begin(), offset_.end(), c) - offset_.begin() - 1;
        return {g, monos_[g][c - offset_[g]]};
    }

private:
    std::size_t size_ = 0;
    std::vector<std::size_t> offset_;
    std::vector<std::vector<Monomial>> monos_;
    std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index_;
};

}  // namespace detail

/// Minimal free resolution by linear algebra in each degree. Only the given
/// generators of I are used (no Gröbner basis): I_D is spanned by the
/// products μ·g.
inline Resolution minimal_free_resolution(const Ideal& I, int length_bound, int degree_bound,
                                          std::uint64_t budget = kDefaultEntryBudget)
{
    if (length_bound < 0 || degree_bound < 0)
        throw InputError("minimal_free_resolution: negative bounds");
    const Field& f = I.field();
    const int n = I.nvars();
    Resolution res;
    res.length_bound = length_bound;
    res.degree_bound = degree_bound;
    res.degrees.push_back({0});
    res.maps.push_back({});

    for (int i = 0; i < length_bound; ++i) {
        const std::vector<int>& gdeg = res.degrees[i];
        std::vector<int> new_degrees;
        std::vector<std::vector<std::pair<int, Polynomial>>> new_images;
        std::vector<SparseVec> prev_kernel;  // kernel in degree D-1
        std::unique_ptr<detail::FreeModuleDegree> prev_space;
        for (int D = 0; D <= degree_bound; ++D) {
            detail::FreeModuleDegree space(n, gdeg, D);
            std::vector<SparseVec> kernel;
            if (i == 0) {
                // I_D inside S_D
                RowEchelon span(f, space.size());
                for (const auto& g : I.generators()) {
                    if (g.degree() > D)
                        continue;
                    for (const auto& mu : monomials_of_degree(n, D - g.degree())) {
                        SparseVec v;
                        for (const auto& t : g.terms())
                            v.push_back({space.coordinate(0, t.mono * mu), t.coeff});
                        canonicalize(f, v);
                        span.insert(v);
                    }
                }
                span.make_reduced();
                kernel = span.basis();
            } else {
                // ker(F_i -> F_{i-1}) in degree D
                detail::FreeModuleDegree target(n, res.degrees[i - 1], D);
                std::uint64_t rows = target.size(), cols = space.size();
                if (rows * cols > budget)
                    throw ResourceError("resolution step " + std::to_string(i) + " in degree " + std::to_string(D) +
                                        " needs a " + std::to_string(rows) + " x " + std::to_string(cols) +
                                        " matrix, over the budget of " + std::to_string(budget));
                std::vector<SparseVec> columns;
                columns.reserve(cols);
                for (std::size_t g = 0; g < space.generators(); ++g)
                    for (const auto& mu : space.monomials(g)) {
                        SparseVec col;
                        for (const auto& [h, poly] : res.maps[i][g])
                            for (const auto& t : poly.terms())
                                col.push_back({target.coordinate(h, t.mono * mu), t.coeff});
                        canonicalize(f, col);
                        columns.push_back(std::move(col));
                    }
                kernel = kernel_basis(Matrix::from_columns(f, rows, columns));
            }
            // new minimal generators: complement of S_1 · ker_{D-1}
            RowEchelon generated(f, space.size());
            if (prev_space)
                for (const auto& v : prev_kernel)
                    for (int x = 0; x < n; ++x) {
                        Monomial xm = Monomial::variable(n, x);
                        SparseVec w;
                        for (const auto& e : v) {
                            auto [g, m] = prev_space->decode(e.index);
                            w.push_back({space.coordinate(g, m * xm), e.value});
                        }
                        canonicalize(f, w);
                        generated.insert(w);
                    }
            for (const auto& v : kernel) {
                if (!generated.insert(v))
                    continue;
                new_degrees.push_back(D);
                std::vector<std::vector<Term>> parts(space.generators());
                for (const auto& e : v) {
                    auto [g, m] = space.decode(e.index);
                    parts[g].push_back({m, e.value});
                }
                std::vector<std::pair<int, Polynomial>> image;
                for (std::size_t g = 0; g < parts.size(); ++g)
                    if (!parts[g].empty())
                        image.push_back({static_cast<int>(g), Polynomial::from_terms(f, n, std::move(parts[g]))});
                new_images.push_back(std::move(image));
            }
            prev_kernel = std::move(kernel);
            prev_space = std::make_unique<detail::FreeModuleDegree>(std::move(space));
        }
        res.degrees.push_back(std::move(new_degrees));
        res.maps.push_back(std::move(new_images));
        if (res.degrees.back().empty())
            break;
    }
    while (static_cast<int>(res.degrees.size()) <= length_bound) {
        res.degrees.push_back({});
        res.maps.push_back({});
    }
    return res;
}

}  // namespace syz

#endif
