#ifndef SYZ_POLYNOMIAL_HPP
#define SYZ_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "syz/errors.hpp"
#include "syz/field.hpp"
#include "syz/linalg.hpp"

namespace syz {

inline constexpr int kMaxVars = 16;

/// Exponent vector in at most kMaxVars variables.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(int nvars) : n_(static_cast<std::uint8_t>(nvars))
    {
        if (nvars < 0 || nvars > kMaxVars)
            throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
    }

    Monomial(std::initializer_list<int> exps) : Monomial(static_cast<int>(exps.size()))
    {
        int i = 0;
        for (int e : exps)
            set(i++, e);
    }

    static Monomial variable(int nvars, int i)
    {
        Monomial m(nvars);
        m.set(i, 1);
        return m;
    }

    int nvars() const { return n_; }
    int degree() const { return deg_; }
    int operator[](int i) const { return e_[i]; }

    void set(int i, int e)
    {
        if (i < 0 || i >= n_)
            throw InputError("variable index out of range");
        if (e < 0 || e > 0xFFFF)
            throw InputError("exponent out of range");
        deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + e);
        e_[i] = static_cast<std::uint16_t>(e);
    }

    Monomial operator*(const Monomial& o) const
    {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i)
            r.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
        r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
        return r;
    }

    /// Assumes o divides *this.
    Monomial operator/(const Monomial& o) const
    {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i)
            r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
        r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
        return r;
    }

    bool divides(const Monomial& o) const
    {
        if (deg_ > o.deg_)
            return false;
        for (int i = 0; i < n_; ++i)
            if (e_[i] > o.e_[i])
                return false;
        return true;
    }

    Monomial lcm(const Monomial& o) const
    {
        Monomial r(n_);
        int d = 0;
        for (int i = 0; i < n_; ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            d += r.e_[i];
        }
        r.deg_ = static_cast<std::uint16_t>(d);
        return r;
    }

    Monomial gcd(const Monomial& o) const
    {
        Monomial r(n_);
        int d = 0;
        for (int i = 0; i < n_; ++i) {
            r.e_[i] = std::min(e_[i], o.e_[i]);
            d += r.e_[i];
        }
        r.deg_ = static_cast<std::uint16_t>(d);
        return r;
    }

    bool coprime(const Monomial& o) const
    {
        for (int i = 0; i < n_; ++i)
            if (e_[i] && o.e_[i])
                return false;
        return true;
    }

    /// Bitmask of variables with positive exponent.
    std::uint32_t support() const
    {
        std::uint32_t s = 0;
        for (int i = 0; i < n_; ++i)
            if (e_[i])
                s |= 1u << i;
        return s;
    }

    int degree_in(std::uint32_t mask) const
    {
        int d = 0;
        for (int i = 0; i < n_; ++i)
            if (mask & (1u << i))
                d += e_[i];
        return d;
    }

    /// Same exponents in a ring with more or fewer variables. The variable
    /// `map[i]` of the target receives exponent i of this monomial.
    Monomial remap(int new_nvars, std::span<const int> map) const
    {
        Monomial r(new_nvars);
        for (int i = 0; i < n_; ++i) {
            if (e_[i] == 0)
                continue;
            if (map[i] < 0)
                throw InputError("remap drops a variable that occurs");
            r.set(map[i], r[map[i]] + e_[i]);
        }
        return r;
    }

    std::size_t hash() const
    {
        std::size_t h = n_;
        for (int i = 0; i < n_; ++i)
            h = h * 1000003u + e_[i];
        return h;
    }

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    std::string to_string(std::span<const std::string> names) const
    {
        std::string s;
        for (int i = 0; i < n_; ++i) {
            if (!e_[i])
                continue;
            if (!s.empty())
                s += '*';
            s += names[i];
            if (e_[i] > 1)
                s += '^' + std::to_string(e_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint16_t deg_ = 0;
    std::uint8_t n_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of degree d in n variables, in descending graded reverse lex order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d);

/// Monomial orders. Elimination orders compare the degree in the eliminated
/// block first and break ties by graded reverse lex on all variables.
class MonomialOrder {
public:
    enum class Kind { GRevLex, Lex, Elimination };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::GRevLex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder elimination(std::uint32_t block) { return MonomialOrder(Kind::Elimination, block); }

    Kind kind() const { return kind_; }
    std::uint32_t block() const { return block_; }

    /// >0 if a > b, <0 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const
    {
        switch (kind_) {
        case Kind::Lex:
            for (int i = 0; i < a.nvars(); ++i)
                if (a[i] != b[i])
                    return a[i] > b[i] ? 1 : -1;
            return 0;
        case Kind::Elimination: {
            int da = a.degree_in(block_), db = b.degree_in(block_);
            if (da != db)
                return da > db ? 1 : -1;
            return compare_grevlex(a, b);
        }
        case Kind::GRevLex:
        default:
            return compare_grevlex(a, b);
        }
    }

    static int compare_grevlex(const Monomial& a, const Monomial& b)
    {
        if (a.degree() != b.degree())
            return a.degree() > b.degree() ? 1 : -1;
        for (int i = a.nvars() - 1; i >= 0; --i)
            if (a[i] != b[i])
                return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    std::string key() const
    {
        switch (kind_) {
        case Kind::Lex:
            return "lex";
        case Kind::Elimination:
            return "elim:" + std::to_string(block_);
        default:
            return "grevlex";
        }
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b)
    {
        return a.kind_ == b.kind_ && a.block_ == b.block_;
    }

private:
    MonomialOrder(Kind k, std::uint32_t block) : kind_(k), block_(block) {}
    Kind kind_;
    std::uint32_t block_;
};

inline std::vector<Monomial> monomials_of_degree(int nvars, int d)
{
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    if (nvars == 0) {
        if (d == 0)
            out.emplace_back(0);
        return out;
    }
    Monomial m(nvars);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            m.set(var, left);
            out.push_back(m);
            m.set(var, 0);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.set(var, e);
            rec(var + 1, left - e);
        }
        m.set(var, 0);
    };
    rec(0, d);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return MonomialOrder::compare_grevlex(a, b) > 0; });
    return out;
}

struct Term {
    Monomial mono;
    Elem coeff;
};

/// Polynomial over a prime field with terms sorted in descending grevlex order.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Field f, int nvars) : field_(f), n_(nvars) {}

    static Polynomial constant(Field f, int nvars, std::int64_t c)
    {
        Polynomial p(f, nvars);
        Elem v = f.from_int(c);
        if (v != 0)
            p.terms_.push_back({Monomial(nvars), v});
        return p;
    }

    static Polynomial variable(Field f, int nvars, int i)
    {
        Polynomial p(f, nvars);
        p.terms_.push_back({Monomial::variable(nvars, i), 1});
        return p;
    }

    static Polynomial monomial(Field f, const Monomial& m, Elem c = 1)
    {
        Polynomial p(f, m.nvars());
        if (c != 0)
            p.terms_.push_back({m, c});
        return p;
    }

    /// Builds from arbitrary terms (sorted and combined here).
    static Polynomial from_terms(Field f, int nvars, std::vector<Term> terms)
    {
        Polynomial p(f, nvars);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const Field& field() const { return field_; }
    int nvars() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Leading term in grevlex.
    const Term& leading() const { return terms_.front(); }

    int degree() const
    {
        int d = -1;
        for (const auto& t : terms_)
            d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const
    {
        if (terms_.empty())
            return true;
        int d = terms_.front().mono.degree();
        return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
    }

    Elem coefficient(const Monomial& m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
            return MonomialOrder::compare_grevlex(t.mono, x) > 0;
        });
        return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
    }

    Polynomial operator+(const Polynomial& o) const { return combine(o, 1); }
    Polynomial operator-(const Polynomial& o) const { return combine(o, field_.neg(1)); }
    Polynomial operator-() const { return scaled(field_.neg(1)); }

    Polynomial operator*(const Polynomial& o) const
    {
        check_compatible(o);
        std::vector<Term> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                acc.push_back({a.mono * b.mono, field_.mul(a.coeff, b.coeff)});
        return from_terms(field_, n_, std::move(acc));
    }

    Polynomial scaled(Elem c) const
    {
        Polynomial p(field_, n_);
        if (c == 0)
            return p;
        p.terms_ = terms_;
        for (auto& t : p.terms_)
            t.coeff = field_.mul(t.coeff, c);
        return p;
    }

    Polynomial times_monomial(const Monomial& m, Elem c = 1) const
    {
        Polynomial p(field_, n_);
        if (c == 0)
            return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            p.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
        return p;  // multiplication by a monomial preserves grevlex order
    }

    /// Leading coefficient scaled to 1 (zero stays zero).
    Polynomial monic() const
    {
        if (terms_.empty())
            return *this;
        return scaled(field_.inv(terms_.front().coeff));
    }

    Elem evaluate(std::span<const Elem> point) const
    {
        if (point.size() != static_cast<std::size_t>(n_))
            throw InputError("evaluation point has wrong length");
        Elem acc = 0;
        for (const auto& t : terms_) {
            Elem v = t.coeff;
            for (int i = 0; i < n_ && v != 0; ++i)
                if (t.mono[i])
                    v = field_.mul(v, field_.pow(point[i], t.mono[i]));
            acc = field_.add(acc, v);
        }
        return acc;
    }

    /// Substitutes variable i by images[i] (all in a common ring).
    Polynomial substitute(std::span<const Polynomial> images) const
    {
        if (images.size() != static_cast<std::size_t>(n_))
            throw InputError("substitution needs one image per variable");
        int target_n = images.empty() ? 0 : images.front().nvars();
        Polynomial out(field_, target_n);
        // cache of powers per variable
        std::vector<std::vector<Polynomial>> powers(n_);
        for (const auto& t : terms_) {
            Polynomial prod = constant(field_, target_n, 1);
            for (int i = 0; i < n_; ++i) {
                int e = t.mono[i];
                if (!e)
                    continue;
                auto& pw = powers[i];
                if (pw.empty())
                    pw.push_back(constant(field_, target_n, 1));
                while (static_cast<int>(pw.size()) <= e)
                    pw.push_back(pw.back() * images[i]);
                prod = prod * pw[e];
            }
            out = out + prod.scaled(t.coeff);
        }
        return out;
    }

    /// Reinterprets in a ring with `new_nvars` variables; map[i] is the new index of variable i.
    Polynomial remap(int new_nvars, std::span<const int> map) const
    {
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_)
            ts.push_back({t.mono.remap(new_nvars, map), t.coeff});
        return from_terms(field_, new_nvars, std::move(ts));
    }

    /// Coefficient vector of a homogeneous polynomial of degree d in the
    /// basis `monomials_of_degree(nvars, d)`, given its index lookup.
    template <class IndexFn>
    SparseVec coordinates(IndexFn&& index_of) const
    {
        SparseVec v;
        v.reserve(terms_.size());
        for (const auto& t : terms_)
            v.push_back({static_cast<std::uint32_t>(index_of(t.mono)), t.coeff});
        canonicalize(field_, v);
        return v;
    }

    std::string to_string(std::span<const std::string> names) const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            std::int64_t c = field_.to_signed(t.coeff);
            bool neg = c < 0;
            std::int64_t a = neg ? -c : c;
            if (first)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            first = false;
            bool unit_mono = t.mono.degree() == 0;
            if (a != 1 || unit_mono) {
                s += std::to_string(a);
                if (!unit_mono)
                    s += '*';
            }
            if (!unit_mono)
                s += t.mono.to_string(names);
        }
        return s;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }

private:
    void check_compatible(const Polynomial& o) const
    {
        if (o.n_ != n_)
            throw InputError("polynomials live in rings with different variable counts");
        if (o.field_ != field_)
            throw InputError("polynomials live over different fields");
    }

    Polynomial combine(const Polynomial& o, Elem c) const
    {
        if (is_zero())
            return o.scaled(c);
        if (o.is_zero())
            return *this;
        check_compatible(o);
        Polynomial out(field_, n_);
        out.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            int cmp = i == terms_.size()     ? -1
                      : j == o.terms_.size() ? 1
                                             : MonomialOrder::compare_grevlex(terms_[i].mono, o.terms_[j].mono);
            if (cmp > 0) {
                out.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                Elem v = field_.mul(c, o.terms_[j].coeff);
                if (v)
                    out.terms_.push_back({o.terms_[j].mono, v});
                ++j;
            } else {
                Elem v = field_.add(terms_[i].coeff, field_.mul(c, o.terms_[j].coeff));
                if (v)
                    out.terms_.push_back({terms_[i].mono, v});
                ++i;
                ++j;
            }
        }
        return out;
    }

    void normalize()
    {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
            return MonomialOrder::compare_grevlex(a.mono, b.mono) > 0;
        });
        std::size_t w = 0;
        for (std::size_t r = 0; r < terms_.size();) {
            Monomial m = terms_[r].mono;
            Elem acc = 0;
            while (r < terms_.size() && terms_[r].mono == m)
                acc = field_.add(acc, terms_[r++].coeff);
            if (acc)
                terms_[w++] = {m, acc};
        }
        terms_.resize(w);
    }

    Field field_;
    int n_ = 0;
    std::vector<Term> terms_;
};

/// Default variable names x0, x1, ...
inline std::vector<std::string> default_names(int n, const std::string& stem = "x")
{
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i)
        v.push_back(stem + std::to_string(i));
    return v;
}

}  // namespace syz

#endif
