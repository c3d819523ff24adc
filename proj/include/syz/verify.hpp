#ifndef SYZ_VERIFY_HPP
#define SYZ_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "syz/builders.hpp"
#include "syz/koszul.hpp"
#include "syz/resolution.hpp"
#include "syz/serialize.hpp"
#include "syz/syzgeo.hpp"

namespace syz {

struct VerifyConfig {
    std::uint32_t characteristic = kDefaultCharacteristic;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    int samples = 10;              // random classes per variety
    int points = 0;                // reconstruction points; 0 means dim V
    int membership_points = 25;    // per instance
    std::uint64_t entry_budget = kDefaultEntryBudget;
    std::vector<std::string> varieties;  // empty: the suite's own corpus
    std::optional<std::string> only_case;
};

struct CaseResult {
    std::string id;
    bool pass = false;
    json inputs = json::object();
    json expected = json::object();
    json computed = json::object();
    json betti = json::object();  // Betti numbers the case computed, for cross-prime comparison
    std::vector<std::string> warnings;
    std::string error;
    double seconds = 0;

    json to_json() const
    {
        json j{{"id", id},           {"pass", pass},         {"inputs", inputs}, {"expected", expected},
               {"computed", computed}, {"betti", betti},     {"warnings", warnings}, {"seconds", seconds}};
        if (!error.empty())
            j["error"] = error;
        return j;
    }
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<CaseResult> cases;
    std::vector<std::string> assumptions;
    std::vector<std::string> warnings;

    const CaseResult* first_failure() const
    {
        for (const auto& c : cases)
            if (!c.pass)
                return &c;
        return nullptr;
    }
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Every case draws its randomness from (seed, case id) only, so results do
/// not depend on scheduling or on which other cases run.
inline std::mt19937_64 case_rng(const VerifyConfig& cfg, const std::string& id)
{
    return std::mt19937_64(cfg.seed * 0x9e3779b97f4a7c15ull ^ fnv1a(id));
}

inline std::string pad(int k)
{
    std::string s = std::to_string(k);
    return std::string(s.size() < 2 ? 2 - s.size() : 0, '0') + s;
}

struct CaseSpec {
    std::string id;
    std::function<void(CaseResult&)> run;
};

}  // namespace detail

/// Named curves used by several suites; other recipes go to build_from_recipe.
/// Recipes with a random draw get the run seed unless they carry their own.
inline std::string expand_recipe(const std::string& recipe, std::uint64_t seed)
{
    std::string r = recipe;
    if (r == "genus4-ci")
        r = "ci 2 3";
    else if (r == "genus5-ci")
        r = "ci 2 2 2";
    else if (r == "trigonal-genus5")
        r = "nodal-quintic nodes=1 assign=1";
    else if (r == "nodal-pair-C")
        r = "nodal-quintic nodes=2 assign=2";
    else if (r == "nodal-pair-D")
        r = "nodal-quintic nodes=2 assign=1";
    std::string kind = r.substr(0, r.find(' '));
    if ((kind == "ci" || kind == "nodal-quintic") && r.find("seed=") == std::string::npos)
        r += " seed=" + std::to_string(seed);
    return r;
}

inline EmbeddedScheme corpus_variety(const std::string& recipe, const VerifyConfig& cfg)
{
    return build_from_recipe(expand_recipe(recipe, cfg.seed), Field(cfg.characteristic));
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "aprodu-proj", "contraction", "ep",          "green-small",    "inc-syz",
        "invariance",  "koszul-complex", "membership", "nodal-iso",    "oracle",
        "projection",  "reconstruct", "schreyer-converse", "scroll-betti"};
    return names;
}

namespace detail {

inline std::vector<std::string> varieties_or(const VerifyConfig& cfg, std::vector<std::string> dflt)
{
    return cfg.varieties.empty() ? dflt : cfg.varieties;
}

inline json betti_row(const BettiTable& t, int q)
{
    json row = json::object();
    for (int p = 0; p <= t.pmax; ++p)
        if (auto v = t.at(p, q))
            row[std::to_string(p)] = *v;
    return row;
}

/// Degree f of a scroll-type corpus variety and the index p = f - 1 of its extremal class.
inline int extremal_index(const EmbeddedScheme& X) { return static_cast<int>(hilbert_polynomial(X.ideal).degree) - 1; }

inline std::vector<CaseSpec> scroll_betti_cases(const VerifyConfig& cfg)
{
    std::vector<std::string> recipes;
    if (cfg.varieties.empty())
        for (const auto& s : scroll_catalog(5, 3))
            recipes.push_back(s.to_string());
    else
        recipes = cfg.varieties;
    std::vector<CaseSpec> out;
    for (const auto& r : recipes)
        out.push_back({r, [r, &cfg](CaseResult& c) {
                           ScrollSpec spec;
                           std::istringstream in(r);
                           std::string kind;
                           in >> kind;
                           int e;
                           while (in >> e)
                               spec.e.push_back(e);
                           if (!(kind == "scroll" || (kind == "rnc" && spec.e.size() == 1)))
                               throw InputError("scroll-betti takes scroll or rnc recipes");
                           auto X = scroll(spec, Field(cfg.characteristic));
                           const int f = spec.degree();
                           auto t = betti_table(X.ideal, f, 2, {cfg.entry_budget, 1});
                           c.inputs = {{"variety", r}};
                           c.pass = true;
                           for (int p = 1; p <= f; ++p) {
                               c.expected["b_" + std::to_string(p) + ",1"] = en_betti(f, p);
                               c.computed["b_" + std::to_string(p) + ",1"] = *t.at(p, 1);
                               c.pass = c.pass && *t.at(p, 1) == en_betti(f, p);
                           }
                           for (int p = 0; p <= f; ++p)
                               c.pass = c.pass && *t.at(p, 2) == 0;
                           c.expected["row_2"] = "all zero";
                           c.computed["row_2"] = betti_row(t, 2);
                           c.betti = to_json(t)["entries"];
                       }});
    return out;
}

inline std::vector<CaseSpec> ep_cases(const VerifyConfig& cfg)
{
    std::vector<CaseSpec> out;
    for (const auto& r : varieties_or(cfg, {"rnc 3", "rnc 4", "scroll 1 2", "scroll 2 2"}))
        for (int k = 0; k < cfg.samples; ++k) {
            std::string id = r + "#" + pad(k);
            out.push_back({id, [r, id, &cfg](CaseResult& c) {
                               auto X = corpus_variety(r, cfg);
                               const Field& f = X.field();
                               int p = extremal_index(X);
                               auto basis = k_p1_cocycle_basis(X.ideal, p, cfg.entry_budget);
                               auto rng = case_rng(cfg, id);
                               auto a = random_class(f, basis, rng);
                               auto syz = syzygy_scheme(X.ideal, a);
                               bool eq = ideal_equal(saturate_irrelevant(syz.ideal), saturate_irrelevant(X.ideal));
                               c.inputs = {{"variety", r}, {"p", p}, {"class", to_json(a)}};
                               c.expected = {{"sat_syz_equals_X", true}};
                               c.computed = {{"sat_syz_equals_X", eq}, {"quadrics", syz.ideal.generators().size()}};
                               c.betti = {{"K_" + std::to_string(p) + ",1", basis.size()}};
                               c.pass = eq;
                           }});
        }
    return out;
}

inline std::vector<CaseSpec> reconstruct_cases(const VerifyConfig& cfg)
{
    std::vector<CaseSpec> out;
    for (const auto& r : varieties_or(cfg, {"rnc 3", "rnc 4", "scroll 1 2"}))
        for (int k = 0; k < cfg.samples; ++k) {
            std::string id = r + "#" + pad(k);
            out.push_back({id, [r, id, &cfg](CaseResult& c) {
                               auto X = corpus_variety(r, cfg);
                               const Field& f = X.field();
                               int p = extremal_index(X);
                               auto basis = k_p1_cocycle_basis(X.ideal, p, cfg.entry_budget);
                               auto rng = case_rng(cfg, id);
                               auto a = random_class(f, basis, rng);
                               std::size_t count = cfg.points > 0 ? cfg.points : X.ideal.nvars();
                               auto Z = sample_points(X, count, cfg.seed);
                               auto rec = reconstruct_from_projections(X.ideal, a, Z);
                               Ideal syz = saturate_irrelevant(syzygy_scheme(X.ideal, a).ideal);
                               bool eq = ideal_equal(saturate_irrelevant(rec.ideal), syz);
                               bool pointwise = true;
                               for (const auto& cone : rec.cones)
                                   pointwise = pointwise && ideal_contains(syz, cone);
                               json pts = json::array();
                               for (const auto& z : Z)
                                   pts.push_back(point_to_json(z));
                               c.inputs = {{"variety", r}, {"p", p}, {"class", to_json(a)}, {"points", pts}};
                               c.expected = {{"reconstruction_equals_syz", true}, {"pointwise_inclusion", true}};
                               c.computed = {{"reconstruction_equals_syz", eq},
                                             {"pointwise_inclusion", pointwise},
                                             {"used_points", rec.used.size()},
                                             {"skipped_points", rec.skipped.size()}};
                               c.warnings = rec.warnings;
                               c.betti = {{"K_" + std::to_string(p) + ",1", basis.size()}};
                               c.pass = eq && pointwise && !rec.used.empty();
                           }});
        }
    return out;
}

inline std::vector<CaseSpec> membership_cases(const VerifyConfig& cfg)
{
    std::vector<CaseSpec> out;
    for (const auto& r : varieties_or(cfg, {"rnc 3", "rnc 4", "scroll 1 2", "scroll 2 2", "trigonal-genus5"})) {
        out.push_back({r, [r, &cfg](CaseResult& c) {
                           auto X = corpus_variety(r, cfg);
                           const Field& f = X.field();
                           const int N = X.ideal.nvars();
                           auto hull = quadric_hull(X.ideal);
                           const bool hull_differs =
                               !ideal_equal(saturate_irrelevant(hull.ideal), saturate_irrelevant(X.ideal));
                           // curves on a scroll use the scroll's classes; scrolls their extremal one
                           int p = hull_differs ? 2 : std::max(2, extremal_index(X));
                           auto basis = k_p1_cocycle_basis(X.ideal, p, cfg.entry_budget);
                           auto rng = case_rng(cfg, r);
                           auto a = random_class(f, basis, rng);
                           // on X, on the hull but off X when they differ, and random ambient points
                           std::vector<ProjectivePoint> pts;
                           const int total = cfg.membership_points;
                           for (const auto& P : sample_points(X, total / 2, cfg.seed))
                               pts.push_back(P);
                           if (hull_differs)
                               for (const auto& P : search_points(hull.ideal, total / 4, rng()))
                                   if (!P.lies_on(X.ideal))
                                       pts.push_back(P);
                           while (static_cast<int>(pts.size()) < total) {
                               std::vector<Elem> v(N);
                               for (auto& x : v)
                                   x = static_cast<Elem>(rng() % f.characteristic());
                               if (std::any_of(v.begin(), v.end(), [](Elem e) { return e != 0; }))
                                   pts.emplace_back(f, v);
                           }
                           int on = 0, off = 0, agree = 0;
                           json detail = json::array();
                           for (const auto& P : pts) {
                               MembershipResult m;
                               std::string err;
                               try {
                                   m = syz_membership(X.ideal, P, a, cfg.entry_budget);
                               } catch (const ConsistencyError& e) {
                                   err = e.what();
                               }
                               bool ok = err.empty();
                               agree += ok;
                               if (ok)
                                   (m.route_a ? on : off)++;
                               detail.push_back({{"point", point_to_json(P)},
                                                 {"route_a", ok ? json(m.route_a) : json(nullptr)},
                                                 {"route_b", ok ? json(m.route_b) : json(nullptr)}});
                           }
                           c.inputs = {{"variety", r}, {"p", p}, {"class", to_json(a)}};
                           c.expected = {{"agreement", pts.size()}};
                           c.computed = {{"agreement", agree}, {"on_syz", on}, {"off_syz", off}, {"points", detail}};
                           c.betti = {{"K_" + std::to_string(p) + ",1", basis.size()}};
                           c.pass = agree == static_cast<int>(pts.size()) && on > 0 && off > 0 &&
                                    static_cast<int>(pts.size()) >= total;
                       }});
    }
    return out;
}

inline std::vector<CaseSpec> oracle_cases(const VerifyConfig& cfg)
{
    std::vector<CaseSpec> out;
    for (const auto& r : varieties_or(cfg, {"rnc 3", "rnc 4", "scroll 1 1", "scroll 1 2", "scroll 2 2", "scroll 1 1 1",
                                           "genus4-ci", "genus5-ci", "trigonal-genus5"})) {
        out.push_back({r, [r, &cfg](CaseResult& c) {
                           auto X = corpus_variety(r, cfg);
                           const int pmax = X.ideal.nvars() - 1;
                           const int qmax = hilbert_polynomial(X.ideal).dimension == 1 &&
                                                    hilbert_polynomial(X.ideal).evaluate(0) < 0
                                                ? 3
                                                : 2;
                           auto k = betti_table(X.ideal, pmax, qmax, {cfg.entry_budget, 1});
                           auto res = minimal_free_resolution(X.ideal, pmax, pmax + qmax, cfg.entry_budget);
                           auto o = res.betti_table(X.field().characteristic(), pmax, qmax);
                           c.inputs = {{"variety", r}, {"pmax", pmax}, {"qmax", qmax}};
                           c.expected = {{"resolution", to_json(o)}};
                           c.computed = {{"koszul", to_json(k)}};
                           c.betti = to_json(k)["entries"];
                           c.pass = k.entries == o.entries;
                       }});
    }
    return out;
}

inline std::vector<CaseSpec> green_small_cases(const VerifyConfig& cfg)
{
    struct Expect {
        std::string recipe;
        std::map<std::pair<int, int>, std::int64_t> values;
    };
    std::vector<Expect> corpus{{"genus4-ci", {{{1, 1}, 1}, {{2, 1}, 0}}},
                               {"genus5-ci", {{{1, 1}, 3}, {{2, 1}, 0}}},
                               {"trigonal-genus5", {{{1, 1}, 3}, {{2, 1}, 2}}}};
    std::vector<CaseSpec> out;
    for (const auto& e : corpus) {
        if (!cfg.varieties.empty() &&
            std::find(cfg.varieties.begin(), cfg.varieties.end(), e.recipe) == cfg.varieties.end())
            continue;
        out.push_back({e.recipe, [e, &cfg](CaseResult& c) {
                           auto X = corpus_variety(e.recipe, cfg);
                           auto t = betti_table(X.ideal, 2, 1, {cfg.entry_budget, 1});
                           auto hp = hilbert_polynomial(X.ideal);
                           c.inputs = {{"variety", e.recipe}, {"recipe", expand_recipe(e.recipe, cfg.seed)}};
                           c.pass = true;
                           for (const auto& [pq, v] : e.values) {
                               std::string key = "b_" + std::to_string(pq.first) + "," + std::to_string(pq.second);
                               c.expected[key] = v;
                               c.computed[key] = *t.at(pq.first, pq.second);
                               c.pass = c.pass && *t.at(pq.first, pq.second) == v;
                           }
                           c.computed["genus"] = 1 - hp.evaluate(0);
                           c.betti = to_json(t)["entries"];
                           for (const auto& w : X.warnings)
                               c.warnings.push_back(w);
                       }});
    }
    return out;
}

inline std::vector<CaseSpec> inc_syz_cases(const VerifyConfig& cfg)
{
    std::vector<CaseSpec> out;
    for (const auto& r : varieties_or(cfg, {"trigonal-genus5"})) {
        const int n = cfg.samples;
        for (int k = 0; k < n; ++k) {
            std::string id = r + "#" + pad(k);
            out.push_back({id, [r, id, k, &cfg](CaseResult& c) {
                               auto X = corpus_variety(r, cfg);
                               const Field& f = X.field();
                               auto basis = k_p1_cocycle_basis(X.ideal, 2, cfg.entry_budget);
                               auto hull = quadric_hull(X.ideal);
                               // basis classes first, then random combinations
                               KoszulCocycle a;
                               if (k < static_cast<int>(basis.size())) {
                                   a = basis[k];
                               } else {
                                   auto rng = case_rng(cfg, id);
                                   a = random_class(f, basis, rng);
                               }
                               Ideal syz = syzygy_scheme(X.ideal, a).ideal;
                               bool contained = scheme_contains(syz, hull.ideal);
                               c.inputs = {{"variety", r}, {"recipe", expand_recipe(r, cfg.seed)}, {"class", to_json(a)}};
                               c.expected = {{"hull_in_syz", true}};
                               c.computed = {{"hull_in_syz", contained},
                                             {"hull", to_json(hull.hilbert)},
                                             {"syz_equals_hull",
                                              ideal_equal(saturate_irrelevant(syz), saturate_irrelevant(hull.ideal))}};
                               c.betti = {{"K_2,1", basis.size()}};
                               c.pass = contained;
                           }});
        }
    }
    return out;
}

struct NodalPair {
    ImplicitizationResult C;  // conics through both nodes: genus 4 canonical curve
    ImplicitizationResult D;  // conics through one node: 1-nodal genus 5 canonical curve
    Polynomial quintic;
};

inline NodalPair nodal_pair(const VerifyConfig& cfg)
{
    Field f(cfg.characteristic);
    auto C = nodal_quintic_model(2, 2, cfg.seed, f);
    auto D = nodal_quintic_model(2, 1, cfg.seed, f);
    return {C, D, nodal_plane_quintic(2, cfg.seed, f)};
}

inline std::vector<CaseSpec> nodal_iso_cases(const VerifyConfig& cfg)
{
    return {{"nodal-pair", [&cfg](CaseResult& c) {
                 auto pair = nodal_pair(cfg);
                 const Field& f = pair.D.scheme.field();
                 // ω_C(x+y) pulled back from D: the sections of D read on the plane model
                 SectionRing twisted(Ideal(f, {"x", "y", "z"}, {pair.quintic}), pair.D.sections);
                 const int pmax = twisted.nvars() - 1;
                 auto tc = betti_table(twisted, pmax, 1, {cfg.entry_budget, 1});
                 auto td = betti_table(pair.D.scheme.ideal, pmax, 1, {cfg.entry_budget, 1});
                 c.inputs = {{"recipe", expand_recipe("nodal-pair-D", cfg.seed)}};
                 c.expected = {{"b_p1(D, omega_D)", betti_row(td, 1)}};
                 c.computed = {{"b_p1(C, omega_C(x+y))", betti_row(tc, 1)}};
                 c.betti = {{"D", betti_row(td, 1)}, {"C", betti_row(tc, 1)}};
                 c.pass = betti_row(td, 1) == betti_row(tc, 1);
             }}};
}

inline std::vector<CaseSpec> aprodu_cases(const VerifyConfig& cfg)
{
    return {{"nodal-pair", [&cfg](CaseResult& c) {
                 auto pair = nodal_pair(cfg);
                 auto k21 = koszul_dim(QuotientRing(pair.C.scheme.ideal), 2, 1, cfg.entry_budget);
                 auto k31 = koszul_dim(QuotientRing(pair.D.scheme.ideal), 3, 1, cfg.entry_budget);
                 c.inputs = {{"C", expand_recipe("nodal-pair-C", cfg.seed)}, {"D", expand_recipe("nodal-pair-D", cfg.seed)}};
                 c.expected = {{"K_2,1(C)", 0}, {"K_3,1(D)", 0}};
                 c.computed = {{"K_2,1(C)", k21}, {"K_3,1(D)", k31}};
                 c.betti = c.computed;
                 c.pass = k21 == 0 && k31 == 0;
             }}};
}

inline std::vector<CaseSpec> schreyer_cases(const VerifyConfig& cfg)
{
    return {{"nodal-pair", [&cfg](CaseResult& c) {
                 auto pair = nodal_pair(cfg);
                 auto b21 = koszul_dim(QuotientRing(pair.D.scheme.ideal), 2, 1, cfg.entry_budget);
                 auto hull = quadric_hull(pair.D.scheme.ideal);
                 auto k21 = koszul_dim(QuotientRing(pair.C.scheme.ideal), 2, 1, cfg.entry_budget);
                 bool hyp = b21 == 2 && hull.hilbert.dimension == 2 && hull.hilbert.degree == 3;
                 c.inputs = {{"C", expand_recipe("nodal-pair-C", cfg.seed)}, {"D", expand_recipe("nodal-pair-D", cfg.seed)}};
                 c.expected = {{"b_2,1(D)", 2}, {"hull_dimension", 2}, {"hull_degree", 3}, {"K_2,1(C)", 0}};
                 c.computed = {{"b_2,1(D)", b21},
                               {"hull_dimension", hull.hilbert.dimension},
                               {"hull_degree", hull.hilbert.degree},
                               {"K_2,1(C)", k21}};
                 c.betti = {{"b_2,1(D)", b21}, {"K_2,1(C)", k21}};
                 c.pass = hyp && k21 == 0;
             }}};
}

inline std::vector<CaseSpec> invariance_cases(const VerifyConfig& cfg)
{
    std::vector<CaseSpec> out;
    for (const auto& r : varieties_or(cfg, {"rnc 3", "rnc 4", "scroll 1 2", "scroll 2 2", "trigonal-genus5"}))
        for (int k = 0; k < std::max(1, cfg.samples / 5); ++k) {
            std::string id = r + "#" + pad(k);
            out.push_back({id, [r, id, &cfg](CaseResult& c) {
                               auto X = corpus_variety(r, cfg);
                               const Field& f = X.field();
                               const int N = X.ideal.nvars();
                               int p = std::max(2, std::min(extremal_index(X), N - 2));
                               auto basis = k_p1_cocycle_basis(X.ideal, p, cfg.entry_budget);
                               if (basis.empty()) {
                                   p = 2;
                                   basis = k_p1_cocycle_basis(X.ideal, p, cfg.entry_budget);
                               }
                               auto rng = case_rng(cfg, id);
                               auto a = random_class(f, basis, rng);
                               auto base = syzygy_scheme(X.ideal, a).ideal;
                               Ideal base_sat = saturate_irrelevant(base);
                               auto cob = coboundary_vectors(f, N, p);
                               int ok_cob = 0, ok_scalar = 0;
                               const int trials = 20;
                               for (int t = 0; t < trials; ++t) {
                                   SparseVec v = a.to_vector();
                                   for (const auto& b : cob)
                                       v = axpy(f, v, static_cast<Elem>(rng() % f.characteristic()), b);
                                   auto moved = KoszulCocycle::from_vector(N, p, v);
                                   ok_cob += ideal_equal(saturate_irrelevant(syzygy_scheme(X.ideal, moved).ideal), base_sat);
                                   Elem lambda = static_cast<Elem>(1 + rng() % (f.characteristic() - 1));
                                   auto scaled_class = KoszulCocycle::from_vector(N, p, scaled(f, a.to_vector(), lambda));
                                   ok_scalar += ideal_equal(syzygy_scheme(X.ideal, scaled_class).ideal, base);
                               }
                               c.inputs = {{"variety", r}, {"p", p}, {"class", to_json(a)}, {"perturbations", trials}};
                               c.expected = {{"coboundary_invariant", trials}, {"scalar_invariant", trials}};
                               c.computed = {{"coboundary_invariant", ok_cob}, {"scalar_invariant", ok_scalar}};
                               c.betti = {{"K_" + std::to_string(p) + ",1", basis.size()}};
                               c.pass = ok_cob == trials && ok_scalar == trials;
                           }});
        }
    return out;
}

inline std::vector<CaseSpec> projection_cases(const VerifyConfig& cfg)
{
    std::vector<CaseSpec> out;
    for (const auto& r : varieties_or(cfg, {"rnc 3", "rnc 4", "scroll 1 2", "scroll 2 2", "trigonal-genus5"}))
        for (int k = 0; k < cfg.samples; ++k) {
            std::string id = r + "#" + pad(k);
            out.push_back({id, [r, id, k, &cfg](CaseResult& c) {
                               auto X = corpus_variety(r, cfg);
                               const Field& f = X.field();
                               const int N = X.ideal.nvars();
                               auto rng = case_rng(cfg, id);
                               json per_p = json::object();
                               c.pass = true;
                               for (int p = 1; p <= N - 1; ++p) {
                                   auto basis = k_p1_cocycle_basis(X.ideal, p, cfg.entry_budget);
                                   if (basis.empty())
                                       continue;
                                   auto a = random_class(f, basis, rng);
                                   auto Z = sample_points(X, N, cfg.seed + static_cast<std::uint64_t>(k));
                                   int nonzero = 0;
                                   for (const auto& z : Z)
                                       nonzero += !project_class(X.ideal, z, a).zero_class;
                                   per_p[std::to_string(p)] = nonzero;
                                   c.betti["K_" + std::to_string(p) + ",1"] = basis.size();
                                   c.pass = c.pass && nonzero > 0;
                               }
                               c.inputs = {{"variety", r}};
                               c.expected = {{"some_point_nonzero", true}};
                               c.computed = {{"nonzero_projections_by_p", per_p}};
                           }});
        }
    return out;
}

inline std::vector<CaseSpec> koszul_complex_cases(const VerifyConfig& cfg)
{
    std::vector<CaseSpec> out;
    for (const auto& r : varieties_or(cfg, {"rnc 3", "rnc 4", "scroll 1 2", "scroll 2 2", "genus4-ci", "genus5-ci",
                                           "trigonal-genus5"}))
        out.push_back({r, [r, &cfg](CaseResult& c) {
                           auto X = corpus_variety(r, cfg);
                           QuotientRing R(X.ideal);
                           const int N = X.ideal.nvars();
                           int checked = 0, zero = 0;
                           for (int p = 2; p <= N; ++p)
                               for (int q = 0; q <= 2; ++q) {
                                   Matrix a = koszul_matrix(R, p - 1, q + 1, cfg.entry_budget);
                                   Matrix b = koszul_matrix(R, p, q, cfg.entry_budget);
                                   ++checked;
                                   zero += (a * b).is_zero();
                               }
                           c.inputs = {{"variety", r}};
                           c.expected = {{"zero_composites", checked}};
                           c.computed = {{"zero_composites", zero}};
                           c.pass = zero == checked;
                       }});
    return out;
}

inline std::vector<CaseSpec> contraction_cases(const VerifyConfig& cfg)
{
    std::vector<CaseSpec> out;
    for (int n = 3; n <= 8; ++n) {
        std::string id = "n=" + std::to_string(n);
        out.push_back({id, [n, id, &cfg](CaseResult& c) {
                           Field f(cfg.characteristic);
                           auto rng = case_rng(cfg, id);
                           auto rand_vec = [&] {
                               std::vector<Elem> v(n);
                               for (auto& x : v)
                                   x = static_cast<Elem>(rng() % f.characteristic());
                               return v;
                           };
                           int checked = 0, ok = 0;
                           for (int p = 1; p <= n; ++p)
                               for (int t = 0; t < 5; ++t) {
                                   Wedge w{n, p, {}};
                                   ExteriorBasis eb(n, p);
                                   for (auto m : eb.masks())
                                       w.add(f, m, static_cast<Elem>(rng() % f.characteristic()));
                                   auto x = rand_vec();
                                   ++checked;
                                   ok += contract(f, x, contract(f, x, w)).is_zero();
                               }
                           c.inputs = {{"n", n}};
                           c.expected = {{"zero", checked}};
                           c.computed = {{"zero", ok}};
                           c.pass = ok == checked;
                       }});
    }
    return out;
}

inline std::vector<CaseSpec> suite_cases(const std::string& suite, const VerifyConfig& cfg)
{
    if (suite == "scroll-betti")
        return scroll_betti_cases(cfg);
    if (suite == "ep")
        return ep_cases(cfg);
    if (suite == "reconstruct")
        return reconstruct_cases(cfg);
    if (suite == "membership")
        return membership_cases(cfg);
    if (suite == "oracle")
        return oracle_cases(cfg);
    if (suite == "green-small")
        return green_small_cases(cfg);
    if (suite == "inc-syz")
        return inc_syz_cases(cfg);
    if (suite == "nodal-iso")
        return nodal_iso_cases(cfg);
    if (suite == "aprodu-proj")
        return aprodu_cases(cfg);
    if (suite == "schreyer-converse")
        return schreyer_cases(cfg);
    if (suite == "invariance")
        return invariance_cases(cfg);
    if (suite == "projection")
        return projection_cases(cfg);
    if (suite == "koszul-complex")
        return koszul_complex_cases(cfg);
    if (suite == "contraction")
        return contraction_cases(cfg);
    throw InputError("unknown verification suite '" + suite + "'");
}

inline std::vector<std::string> suite_assumptions(const std::string& suite)
{
    std::vector<std::string> a{
        "linear normality and projective normality hold by construction for the corpus varieties and are not checked",
        "Betti numbers over the prime field are taken as stand-ins for characteristic zero values"};
    if (suite == "green-small" || suite == "oracle" || suite == "membership" || suite == "koszul-complex" ||
        suite == "invariance" || suite == "projection")
        a.push_back("random complete intersections are assumed smooth (not certified)");
    if (suite == "nodal-iso" || suite == "aprodu-proj" || suite == "schreyer-converse" || suite == "inc-syz")
        a.push_back("plane-model linear systems are assumed to be the intended adjoint series");
    if (suite == "schreyer-converse")
        a.push_back("the quadric hull of D stands in for the scroll of the pencil B with h0(B^2) = 3");
    return a;
}

}  // namespace detail

inline SuiteResult run_suite(const std::string& suite, const VerifyConfig& cfg)
{
    if (cfg.samples < 1 || cfg.membership_points < 4)
        throw InputError("verify: samples must be positive and at least 4 membership points are needed");
    auto specs = detail::suite_cases(suite, cfg);
    if (cfg.only_case) {
        std::erase_if(specs, [&](const detail::CaseSpec& s) { return s.id != *cfg.only_case; });
        if (specs.empty())
            throw InputError("verify: suite " + suite + " has no case '" + *cfg.only_case + "'");
    }
    std::vector<CaseResult> results(specs.size());
    detail::parallel_for(specs.size(), cfg.jobs, [&](std::size_t i) {
        CaseResult& c = results[i];
        c.id = specs[i].id;
        auto t0 = std::chrono::steady_clock::now();
        try {
            specs[i].run(c);
        } catch (const ResourceError& e) {
            c.pass = false;
            c.error = std::string("resource limit: ") + e.what();
        } catch (const std::exception& e) {
            c.pass = false;
            c.error = e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });
    std::sort(results.begin(), results.end(), [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
    SuiteResult s;
    s.suite = suite;
    s.assumptions = detail::suite_assumptions(suite);
    for (const auto& c : results) {
        s.pass = s.pass && c.pass;
        for (const auto& w : c.warnings)
            s.warnings.push_back(c.id + ": " + w);
    }
    s.cases = std::move(results);
    return s;
}

/// Command line that reruns one case with the same inputs.
inline std::string replay_command(const std::string& suite, const VerifyConfig& cfg, const std::string& case_id)
{
    std::string cmd = "syz verify " + suite + " --case '" + case_id + "' --seed " + std::to_string(cfg.seed) +
                      " --field-char " + std::to_string(cfg.characteristic) + " --samples " +
                      std::to_string(cfg.samples) + " --entry-budget " + std::to_string(cfg.entry_budget);
    if (cfg.points)
        cmd += " --points " + std::to_string(cfg.points);
    for (const auto& v : cfg.varieties)
        cmd += " --variety '" + v + "'";
    return cmd;
}

inline json config_to_json(const VerifyConfig& cfg)
{
    return {{"field_char", cfg.characteristic}, {"seed", cfg.seed},       {"jobs", cfg.jobs},
            {"samples", cfg.samples},           {"points", cfg.points},   {"entry_budget", cfg.entry_budget},
            {"varieties", cfg.varieties},       {"case", cfg.only_case ? json(*cfg.only_case) : json(nullptr)}};
}

inline VerifyConfig config_from_json(const json& j)
{
    VerifyConfig cfg;
    try {
        cfg.characteristic = j.at("field_char").get<std::uint32_t>();
        cfg.seed = j.at("seed").get<std::uint64_t>();
        cfg.jobs = j.value("jobs", 1u);
        cfg.samples = j.at("samples").get<int>();
        cfg.points = j.value("points", 0);
        cfg.entry_budget = j.value("entry_budget", kDefaultEntryBudget);
        cfg.varieties = j.value("varieties", std::vector<std::string>{});
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed verification config: ") + e.what());
    }
    return cfg;
}

inline json suite_to_json(const SuiteResult& s, const VerifyConfig& cfg)
{
    json cases = json::array();
    for (const auto& c : s.cases)
        cases.push_back(c.to_json());
    json j{{"suite", s.suite}, {"status", s.pass ? "PASS" : "FAIL"}, {"config", config_to_json(cfg)}, {"cases", cases}};
    if (const CaseResult* f = s.first_failure()) {
        j["first_failure"] = f->to_json();
        j["replay"] = replay_command(s.suite, cfg, f->id);
    }
    return j;
}

}  // namespace syz

#endif
