#ifndef SYZ_GROEBNER_HPP
#define SYZ_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "syz/polynomial.hpp"

namespace syz {

namespace detail {

/// Terms sorted descending in a specific monomial order.
struct OrderedPoly {
    std::vector<Term> terms;
    int sugar = 0;

    const Monomial& lead() const { return terms.front().mono; }
    bool empty() const { return terms.empty(); }
};

inline OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& ord)
{
    OrderedPoly out;
    out.terms = p.terms();
    if (ord.kind() != MonomialOrder::Kind::GRevLex)
        std::sort(out.terms.begin(), out.terms.end(),
                  [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    out.sugar = p.degree();
    return out;
}

inline void make_monic(const Field& f, OrderedPoly& p)
{
    if (p.empty() || p.terms.front().coeff == 1)
        return;
    Elem inv = f.inv(p.terms.front().coeff);
    for (auto& t : p.terms)
        t.coeff = f.mul(t.coeff, inv);
}

struct LeadIndex {
    std::vector<Monomial> leads;
    std::vector<std::uint32_t> masks;

    void push(const Monomial& m)
    {
        leads.push_back(m);
        masks.push_back(m.support());
    }

    /// Position (among `active`) of the first element whose lead divides m.
    template <class Active>
    std::int64_t find_divisor(const Monomial& m, const Active& active) const
    {
        std::uint32_t ms = m.support();
        for (std::size_t k = 0; k < active.size(); ++k) {
            std::size_t i = active[k];
            if ((masks[i] & ~ms) == 0 && leads[i].divides(m))
                return static_cast<std::int64_t>(i);
        }
        return -1;
    }
};

class Reducer {
public:
    Reducer(const Field& f, const MonomialOrder& ord) : f_(f), ord_(ord) {}

    /// Full reduction of p modulo the polynomials at indices `active`.
    template <class Active>
    OrderedPoly reduce(OrderedPoly p, const std::vector<OrderedPoly>& basis, const LeadIndex& idx,
                       const Active& active, bool tail = true) const
    {
        auto cmp = [this](const Monomial& a, const Monomial& b) { return ord_.compare(a, b) > 0; };
        std::map<Monomial, Elem, decltype(cmp)> work(cmp);
        for (const auto& t : p.terms)
            work.emplace(t.mono, t.coeff);
        OrderedPoly out;
        out.sugar = p.sugar;
        while (!work.empty()) {
            auto it = work.begin();
            Monomial m = it->first;
            Elem c = it->second;
            std::int64_t d = idx.find_divisor(m, active);
            if (d < 0) {
                out.terms.push_back({m, c});
                work.erase(it);
                if (!tail) {
                    for (auto& kv : work)
                        out.terms.push_back({kv.first, kv.second});
                    break;
                }
                continue;
            }
            const OrderedPoly& g = basis[d];
            Monomial q = m / g.lead();
            // g is monic: subtract c * q * g
            work.erase(it);
            for (std::size_t k = 1; k < g.terms.size(); ++k) {
                Monomial mm = g.terms[k].mono * q;
                Elem v = f_.mul(c, g.terms[k].coeff);
                auto [pos, inserted] = work.emplace(mm, f_.neg(v));
                if (!inserted) {
                    pos->second = f_.sub(pos->second, v);
                    if (pos->second == 0)
                        work.erase(pos);
                }
            }
            out.sugar = std::max(out.sugar, g.sugar + q.degree());
        }
        return out;
    }

private:
    Field f_;
    MonomialOrder ord_;
};

}  // namespace detail

/// Reduced Gröbner basis for one monomial order.
class GroebnerBasis {
public:
    GroebnerBasis(Field f, int nvars, MonomialOrder ord) : field_(f), nvars_(nvars), order_(ord) {}

    const Field& field() const { return field_; }
    int nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    std::size_t size() const { return ordered_.size(); }

    /// Elements as polynomials (terms in grevlex storage order), sorted by
    /// ascending leading monomial in this basis' order.
    const std::vector<Polynomial>& elements() const { return elements_; }

    const std::vector<Monomial>& leading_monomials() const { return index_.leads; }

    bool is_unit() const { return ordered_.size() == 1 && ordered_.front().lead().degree() == 0; }

    Polynomial normal_form(const Polynomial& p) const
    {
        if (p.nvars() != nvars_)
            throw InputError("normal_form: polynomial ring mismatch");
        detail::Reducer red(field_, order_);
        auto r = red.reduce(detail::to_ordered(p, order_), ordered_, index_, active_);
        return Polynomial::from_terms(field_, nvars_, std::move(r.terms));
    }

    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

    /// Leading monomial of p in this basis' order.
    Monomial leading_monomial(const Polynomial& p) const
    {
        const auto& ts = p.terms();
        Monomial best = ts.front().mono;
        for (const auto& t : ts)
            if (order_.compare(t.mono, best) > 0)
                best = t.mono;
        return best;
    }

    bool is_standard(const Monomial& m) const { return index_.find_divisor(m, active_) < 0; }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b)
    {
        return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.elements_ == b.elements_;
    }

    /// Used by the engine below; elements must form a reduced basis.
    void assign(std::vector<detail::OrderedPoly> polys)
    {
        std::sort(polys.begin(), polys.end(), [this](const detail::OrderedPoly& a, const detail::OrderedPoly& b) {
            return order_.compare(a.lead(), b.lead()) < 0;
        });
        ordered_ = std::move(polys);
        index_ = {};
        active_.clear();
        elements_.clear();
        for (std::size_t i = 0; i < ordered_.size(); ++i) {
            index_.push(ordered_[i].lead());
            active_.push_back(i);
            elements_.push_back(Polynomial::from_terms(field_, nvars_, ordered_[i].terms));
        }
    }

private:
    Field field_;
    int nvars_;
    MonomialOrder order_;
    std::vector<detail::OrderedPoly> ordered_;
    detail::LeadIndex index_;
    std::vector<std::size_t> active_;
    std::vector<Polynomial> elements_;
};

namespace detail {

struct CriticalPair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
};

}  // namespace detail

/// Buchberger's algorithm with the Gebauer–Möller pair criteria and the
/// normal selection strategy (minimal sugar, then minimal lcm).
inline GroebnerBasis compute_groebner_basis(const std::vector<Polynomial>& gens, const Field& f, int nvars,
                                            const MonomialOrder& ord)
{
    using detail::CriticalPair;
    using detail::OrderedPoly;
    std::vector<OrderedPoly> polys;
    detail::LeadIndex index;
    std::vector<std::size_t> active;
    std::vector<CriticalPair> pairs;
    detail::Reducer red(f, ord);

    auto add = [&](OrderedPoly h) {
        detail::make_monic(f, h);
        const std::size_t hi = polys.size();
        const Monomial hl = h.lead();
        polys.push_back(std::move(h));
        index.push(hl);

        auto make_pair = [&](std::size_t g) {
            Monomial l = hl.lcm(polys[g].lead());
            int s = std::max(polys[hi].sugar + l.degree() - hl.degree(),
                             polys[g].sugar + l.degree() - polys[g].lead().degree());
            return CriticalPair{g, hi, l, s};
        };

        // Gebauer–Möller update
        std::vector<CriticalPair> c;
        for (std::size_t g : active)
            c.push_back(make_pair(g));
        std::vector<CriticalPair> d;
        for (std::size_t a = 0; a < c.size(); ++a) {
            const auto& p = c[a];
            bool keep = hl.coprime(polys[p.i].lead());
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < c.size() && keep; ++b)
                    if (c[b].lcm.divides(p.lcm))
                        keep = false;
                for (std::size_t b = 0; b < d.size() && keep; ++b)
                    if (d[b].lcm.divides(p.lcm))
                        keep = false;
            }
            if (keep)
                d.push_back(p);
        }
        std::vector<CriticalPair> kept;
        for (const auto& p : pairs) {
            bool drop = hl.divides(p.lcm) && !(hl.lcm(polys[p.i].lead()) == p.lcm) &&
                        !(hl.lcm(polys[p.j].lead()) == p.lcm);
            if (!drop)
                kept.push_back(p);
        }
        for (const auto& p : d)
            if (!hl.coprime(polys[p.i].lead()))
                kept.push_back(p);
        pairs = std::move(kept);

        std::vector<std::size_t> next;
        for (std::size_t g : active)
            if (!hl.divides(polys[g].lead()))
                next.push_back(g);
        next.push_back(hi);
        active = std::move(next);
    };

    // feed generators in increasing degree, each reduced against what is present
    std::vector<OrderedPoly> inputs;
    for (const auto& g : gens) {
        if (g.nvars() != nvars)
            throw InputError("generator ring mismatch in Gröbner basis computation");
        if (!g.is_zero())
            inputs.push_back(detail::to_ordered(g, ord));
    }
    std::stable_sort(inputs.begin(), inputs.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
        if (a.sugar != b.sugar)
            return a.sugar < b.sugar;
        return ord.compare(a.lead(), b.lead()) < 0;
    });
    for (auto& g : inputs) {
        auto r = red.reduce(std::move(g), polys, index, active);
        if (!r.empty())
            add(std::move(r));
    }

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto& a = pairs[k];
            const auto& b = pairs[best];
            if (a.sugar < b.sugar || (a.sugar == b.sugar && ord.compare(a.lcm, b.lcm) < 0))
                best = k;
        }
        CriticalPair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        const OrderedPoly& gi = polys[p.i];
        const OrderedPoly& gj = polys[p.j];
        Monomial qi = p.lcm / gi.lead();
        Monomial qj = p.lcm / gj.lead();
        OrderedPoly s;
        s.sugar = p.sugar;
        {
            // merge qi*gi - qj*gj skipping the cancelled leads
            std::size_t a = 1, b = 1;
            while (a < gi.terms.size() || b < gj.terms.size()) {
                int cmp;
                if (a == gi.terms.size())
                    cmp = -1;
                else if (b == gj.terms.size())
                    cmp = 1;
                else
                    cmp = ord.compare(gi.terms[a].mono * qi, gj.terms[b].mono * qj);
                if (cmp > 0) {
                    s.terms.push_back({gi.terms[a].mono * qi, gi.terms[a].coeff});
                    ++a;
                } else if (cmp < 0) {
                    s.terms.push_back({gj.terms[b].mono * qj, f.neg(gj.terms[b].coeff)});
                    ++b;
                } else {
                    Elem v = f.sub(gi.terms[a].coeff, gj.terms[b].coeff);
                    if (v)
                        s.terms.push_back({gi.terms[a].mono * qi, v});
                    ++a;
                    ++b;
                }
            }
        }
        if (s.empty())
            continue;
        auto r = red.reduce(std::move(s), polys, index, active);
        if (!r.empty())
            add(std::move(r));
    }

    // reduced basis: tail-reduce every active element against the others
    std::vector<OrderedPoly> out;
    for (std::size_t k = 0; k < active.size(); ++k) {
        std::vector<std::size_t> others;
        for (std::size_t o = 0; o < active.size(); ++o)
            if (o != k)
                others.push_back(active[o]);
        OrderedPoly g = polys[active[k]];
        OrderedPoly tail;
        tail.terms.assign(g.terms.begin() + 1, g.terms.end());
        tail.sugar = g.sugar;
        auto r = red.reduce(std::move(tail), polys, index, others);
        OrderedPoly h;
        h.sugar = g.sugar;
        h.terms.push_back(g.terms.front());
        h.terms.insert(h.terms.end(), r.terms.begin(), r.terms.end());
        detail::make_monic(f, h);
        out.push_back(std::move(h));
    }
    GroebnerBasis gb(f, nvars, ord);
    gb.assign(std::move(out));
    return gb;
}

}  // namespace syz

#endif
