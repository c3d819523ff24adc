#ifndef SYZ_IO_HPP
#define SYZ_IO_HPP

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "syz/ideal.hpp"

namespace syz {

namespace detail {

class PolyParser {
public:
    PolyParser(const Field& f, const std::vector<std::string>& names, std::string text)
        : f_(f), names_(names), s_(std::move(text))
    {
    }

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("cannot parse polynomial \"" + s_ + "\" at column " + std::to_string(pos_ + 1) + ": " +
                         what);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    int n() const { return static_cast<int>(names_.size()); }

    Polynomial expr()
    {
        Polynomial acc(f_, n());
        bool first = true;
        for (;;) {
            skip_ws();
            Elem sign = 1;
            if (peek('+')) {
                ++pos_;
            } else if (peek('-')) {
                ++pos_;
                sign = f_.neg(1);
            } else if (!first) {
                return acc;
            }
            first = false;
            acc = acc + term().scaled(sign);
            skip_ws();
            if (pos_ == s_.size() || s_[pos_] == ')')
                return acc;
            if (s_[pos_] != '+' && s_[pos_] != '-')
                fail("expected '+' or '-'");
        }
    }

    bool starts_atom()
    {
        skip_ws();
        if (pos_ >= s_.size())
            return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || match_variable() >= 0;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (peek('/')) {
                ++pos_;
                Polynomial d = factor();
                if (d.is_zero() || d.degree() != 0)
                    fail("division only by nonzero constants");
                acc = acc.scaled(f_.inv(d.leading().coeff));
            } else if (starts_atom()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor()
    {
        Polynomial base = atom();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            Polynomial r = Polynomial::constant(f_, n(), 1);
            for (int i = 0; i < e; ++i)
                r = r * base;
            return r;
        }
        return base;
    }

    int match_variable() const
    {
        int best = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < n(); ++i) {
            const auto& name = names_[i];
            if (name.size() > best_len && s_.compare(pos_, name.size(), name) == 0) {
                best = i;
                best_len = name.size();
            }
        }
        return best;
    }

    Polynomial atom()
    {
        skip_ws();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            Elem v = 0;
            for (std::size_t k = start; k < pos_; ++k)
                v = f_.add(f_.mul(v, f_.from_int(10)), f_.from_int(s_[k] - '0'));
            Polynomial p(f_, n());
            return v ? Polynomial::monomial(f_, Monomial(n()), v) : p;
        }
        int var = match_variable();
        if (var < 0)
            fail("unknown symbol");
        pos_ += names_[var].size();
        return Polynomial::variable(f_, n(), var);
    }

    Field f_;
    const std::vector<std::string>& names_;
    std::string s_;
    std::size_t pos_ = 0;
};

inline std::string strip_comment(const std::string& line)
{
    auto pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

inline Polynomial parse_polynomial(const Field& f, const std::vector<std::string>& names, const std::string& text)
{
    return detail::PolyParser(f, names, text).parse();
}

/// Parsed ideal file; `field_given` tells whether a `field` line was present.
struct IdealFile {
    Ideal ideal;
    bool field_given = false;
};

/// Reads the text ideal format:
///
///     field 32003
///     ring x0 x1 x2 x3
///     ideal
///     x0*x2 - x1^2
///
/// `#` starts a comment. Polynomials follow `ideal`, one per line or
/// separated by commas.
inline IdealFile parse_ideal_text(const std::string& text, std::uint32_t default_char = kDefaultCharacteristic)
{
    std::istringstream in(text);
    std::string raw;
    std::uint32_t p = default_char;
    bool field_given = false;
    std::vector<std::string> names;
    bool have_ring = false, in_ideal = false;
    std::vector<std::string> poly_texts;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::strip_comment(raw);
        if (line.empty())
            continue;
        if (!in_ideal) {
            std::istringstream ls(line);
            std::string kw;
            ls >> kw;
            if (kw == "field") {
                std::int64_t v = 0;
                if (!(ls >> v) || v <= 0)
                    throw InputError("line " + std::to_string(lineno) + ": bad field characteristic");
                p = static_cast<std::uint32_t>(v);
                field_given = true;
            } else if (kw == "ring") {
                std::string name;
                while (ls >> name)
                    names.push_back(name);
                if (names.empty())
                    throw InputError("line " + std::to_string(lineno) + ": ring needs variable names");
                have_ring = true;
            } else if (kw == "ideal") {
                if (!have_ring)
                    throw InputError("line " + std::to_string(lineno) + ": 'ideal' before 'ring'");
                in_ideal = true;
                std::string rest;
                std::getline(ls, rest);
                rest = detail::strip_comment(rest);
                if (!rest.empty())
                    poly_texts.push_back(rest);
            } else {
                throw InputError("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
            }
            continue;
        }
        std::stringstream parts(line);
        std::string piece;
        while (std::getline(parts, piece, ',')) {
            piece = detail::strip_comment(piece);
            if (!piece.empty())
                poly_texts.push_back(piece);
        }
    }
    if (!have_ring)
        throw InputError("ideal file has no 'ring' line");
    Field f(p);
    std::vector<Polynomial> gens;
    for (const auto& t : poly_texts)
        gens.push_back(parse_polynomial(f, names, t));
    return {Ideal(f, names, std::move(gens)), field_given};
}

inline IdealFile read_ideal_file(const std::string& path, std::uint32_t default_char = kDefaultCharacteristic)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open ideal file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ideal_text(ss.str(), default_char);
}

/// Writes the ideal format; `header` lines are emitted as comments.
inline std::string format_ideal(const Ideal& I, const std::vector<std::string>& header = {})
{
    std::string out;
    for (const auto& h : header)
        out += "# " + h + "\n";
    out += "field " + std::to_string(I.field().characteristic()) + "\n";
    out += "ring";
    for (const auto& n : I.names())
        out += " " + n;
    out += "\nideal\n";
    for (const auto& g : I.generators())
        out += g.to_string(I.names()) + "\n";
    return out;
}

}  // namespace syz

#endif
