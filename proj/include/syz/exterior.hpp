#ifndef SYZ_EXTERIOR_HPP
#define SYZ_EXTERIOR_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "syz/errors.hpp"
#include "syz/field.hpp"

namespace syz {

/// Sign attached to removing the k-th (0-based) factor of a wedge monomial in
/// both the contraction i_x and the Koszul differential:
///
///     i_x(v_0 ∧ ... ∧ v_{p-1}) = sum_k (-1)^(k+1) x(v_k) v_0 ∧ ... v̂_k ... ∧ v_{p-1}
///
/// so i_x(e_0 ∧ e_1) = -e_1 for x dual to e_0.
inline Elem removal_sign(const Field& f, int k) { return (k % 2 == 0) ? f.neg(1) : 1; }

/// Subsets of {0..n-1} are bitmasks; the first index of a subset is its lowest bit.
inline std::vector<int> subset_elements(std::uint32_t mask)
{
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

/// Lexicographic order on increasing index tuples of equal size.
struct SubsetLess {
    bool operator()(std::uint32_t a, std::uint32_t b) const
    {
        if (a == b)
            return false;
        std::uint32_t low = (a ^ b) & (~(a ^ b) + 1);
        return (a & low) != 0;
    }
};

/// Position of element i inside the subset (number of smaller elements).
inline int subset_position(std::uint32_t mask, int i) { return std::popcount(mask & ((1u << i) - 1)); }

/// The canonical basis e_S of ∧^p k^n, subsets in lexicographic order.
class ExteriorBasis {
public:
    ExteriorBasis(int n, int p) : n_(n), p_(p)
    {
        if (n < 0 || n > 30)
            throw InputError("exterior basis: bad dimension");
        if (p >= 0 && p <= n) {
            std::vector<int> cur;
            build(0, cur);
        }
        for (std::size_t i = 0; i < masks_.size(); ++i)
            index_.emplace(masks_[i], i);
    }

    int n() const { return n_; }
    int p() const { return p_; }
    std::size_t size() const { return masks_.size(); }
    std::uint32_t operator[](std::size_t i) const { return masks_[i]; }
    const std::vector<std::uint32_t>& masks() const { return masks_; }

    std::size_t index(std::uint32_t mask) const
    {
        auto it = index_.find(mask);
        if (it == index_.end())
            throw InputError("subset is not part of this exterior basis");
        return it->second;
    }

private:
    void build(int start, std::vector<int>& cur)
    {
        if (static_cast<int>(cur.size()) == p_) {
            std::uint32_t m = 0;
            for (int i : cur)
                m |= 1u << i;
            masks_.push_back(m);
            return;
        }
        for (int i = start; i < n_; ++i) {
            cur.push_back(i);
            build(i + 1, cur);
            cur.pop_back();
        }
    }

    int n_, p_;
    std::vector<std::uint32_t> masks_;
    std::map<std::uint32_t, std::size_t> index_;
};

inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// Element of ∧^p k^n; keys are subsets of size p.
struct Wedge {
    int n = 0;
    int p = 0;
    std::map<std::uint32_t, Elem, SubsetLess> terms;

    bool is_zero() const { return terms.empty(); }

    void add(const Field& f, std::uint32_t mask, Elem c)
    {
        if (std::popcount(mask) != p)
            throw InputError("wedge term has the wrong degree");
        if (c == 0)
            return;
        auto [it, fresh] = terms.emplace(mask, c);
        if (!fresh) {
            it->second = f.add(it->second, c);
            if (it->second == 0)
                terms.erase(it);
        }
    }

    std::string to_string(const std::vector<std::string>& names) const
    {
        if (terms.empty())
            return "0";
        std::string s;
        for (const auto& [mask, c] : terms) {
            if (!s.empty())
                s += " + ";
            s += std::to_string(c) + "*";
            auto els = subset_elements(mask);
            if (els.empty())
                s += "1";
            for (std::size_t k = 0; k < els.size(); ++k)
                s += (k ? "^" : "") + std::string("e_") + names.at(els[k]);
        }
        return s;
    }
};

/// i_x(w) for a dual vector x given by its values x(e_i).
inline Wedge contract(const Field& f, const std::vector<Elem>& x, const Wedge& w)
{
    if (static_cast<int>(x.size()) != w.n)
        throw InputError("contract: point and wedge dimensions differ");
    Wedge out{w.n, w.p - 1, {}};
    if (w.p == 0)
        return out;
    for (const auto& [mask, c] : w.terms) {
        auto els = subset_elements(mask);
        for (int k = 0; k < static_cast<int>(els.size()); ++k) {
            Elem xv = x[els[k]];
            if (xv == 0)
                continue;
            out.add(f, mask & ~(1u << els[k]), f.mul(removal_sign(f, k), f.mul(xv, c)));
        }
    }
    return out;
}

}  // namespace syz

#endif
