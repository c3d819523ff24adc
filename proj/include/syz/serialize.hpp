#ifndef SYZ_SERIALIZE_HPP
#define SYZ_SERIALIZE_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "syz/exterior.hpp"
#include "syz/hilbert.hpp"
#include "syz/io.hpp"
#include "syz/koszul.hpp"
#include "syz/syzgeo.hpp"

namespace syz {

using json = nlohmann::ordered_json;

inline json to_json(const BettiTable& t)
{
    json entries = json::array();
    for (const auto& [pq, dim] : t.entries)
        entries.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", dim}});
    return {{"char", t.characteristic}, {"pmax", t.pmax}, {"qmax", t.qmax}, {"entries", entries}};
}

inline BettiTable betti_from_json(const json& j)
{
    try {
        BettiTable t;
        t.characteristic = j.at("char").get<std::uint32_t>();
        t.pmax = j.at("pmax").get<int>();
        t.qmax = j.at("qmax").get<int>();
        for (const auto& e : j.at("entries"))
            t.entries[{e.at("p").get<int>(), e.at("q").get<int>()}] = e.at("dim").get<std::int64_t>();
        return t;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed Betti table JSON: ") + e.what());
    }
}

/// {"p":2,"nvars":4,"terms":[{"wedge":[0,1],"var":3,"coeff":5}, ...]}
inline json to_json(const KoszulCocycle& a)
{
    json terms = json::array();
    for (const auto& t : a.terms)
        terms.push_back({{"wedge", subset_elements(t.wedge)}, {"var", t.var}, {"coeff", t.coeff}});
    return {{"p", a.p}, {"nvars", a.nvars}, {"terms", terms}};
}

/// Reads a cocycle; `nvars` is used when the JSON omits it. Repeated terms add up.
inline KoszulCocycle cocycle_from_json(const Field& f, const json& j, int nvars)
{
    try {
        KoszulCocycle a;
        a.p = j.at("p").get<int>();
        a.nvars = j.contains("nvars") ? j.at("nvars").get<int>() : nvars;
        if (a.nvars != nvars)
            throw InputError("cocycle has " + std::to_string(a.nvars) + " variables, the ring has " +
                             std::to_string(nvars));
        if (a.p < 0 || a.p > nvars)
            throw InputError("cocycle index p out of range");
        ExteriorBasis eb(nvars, a.p);
        DenseVec v(eb.size() * nvars, 0);
        for (const auto& t : j.at("terms")) {
            std::uint32_t mask = 0;
            auto w = t.at("wedge").get<std::vector<int>>();
            for (int i : w) {
                if (i < 0 || i >= nvars || (mask >> i) & 1u)
                    throw InputError("cocycle wedge indices must be distinct variables");
                mask |= 1u << i;
            }
            if (static_cast<int>(w.size()) != a.p)
                throw InputError("cocycle wedge has the wrong size");
            // unsorted wedges carry the sign of the sorting permutation
            int inversions = 0;
            for (std::size_t x = 0; x < w.size(); ++x)
                for (std::size_t y = x + 1; y < w.size(); ++y)
                    inversions += w[x] > w[y];
            int var = t.at("var").get<int>();
            if (var < 0 || var >= nvars)
                throw InputError("cocycle variable out of range");
            Elem c = f.from_int(t.at("coeff").get<std::int64_t>());
            if (inversions % 2)
                c = f.neg(c);
            std::size_t k = eb.index(mask) * nvars + var;
            v[k] = f.add(v[k], c);
        }
        return KoszulCocycle::from_vector(nvars, a.p, to_sparse(v));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed cocycle JSON: ") + e.what());
    }
}

inline json to_json(const HilbertPolynomial& hp)
{
    return {{"dimension", hp.dimension}, {"degree", hp.degree}, {"polynomial", hp.to_string()}};
}

inline json ideal_to_json(const Ideal& I)
{
    json gens = json::array();
    for (const auto& g : I.generators())
        gens.push_back(g.to_string(I.names()));
    return {{"ring", I.names()}, {"generators", gens}};
}

inline std::vector<std::uint64_t> point_to_json(const ProjectivePoint& P)
{
    return {P.coords().begin(), P.coords().end()};
}

/// FNV-1a, used to fingerprint inputs in reports.
inline std::string fingerprint(const std::string& data)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace syz

#endif
