// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "syz/syz.hpp"

using namespace syz;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            note += (note.empty() ? "" : "; ") + what;
        }
    }
};

std::map<std::string, SuiteResult> cache;

const SuiteResult& suite(const std::string& name, const VerifyConfig& cfg)
{
    std::string key = name + "@" + std::to_string(cfg.characteristic);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, run_suite(name, cfg)).first;
        for (const auto& c : it->second.cases)
            if (!c.pass)
                std::cerr << "  " << name << " / " << c.id << " failed: " << c.to_json().dump() << "\n";
    }
    return it->second;
}

void suite_passes(Outcome& o, const std::string& name, const VerifyConfig& cfg)
{
    const auto& s = suite(name, cfg);
    o.require(!s.cases.empty(), name + " ran no cases");
    if (const auto* f = s.first_failure())
        o.require(false, name + " failed at " + f->id + (f->error.empty() ? "" : " (" + f->error + ")"));
}

std::string variety_of(const CaseResult& c) { return c.id.substr(0, c.id.find('#')); }

void report(int n, const Outcome& o, const std::string& summary)
{
    std::printf("CRITERION %d: %s  %s%s%s\n", n, o.pass ? "PASS" : "FAIL", summary.c_str(),
                o.note.empty() ? "" : "  -- ", o.note.c_str());
    std::fflush(stdout);
}

}  // namespace

int main()
{
    VerifyConfig cfg;
    cfg.seed = 1;
    cfg.samples = 10;
    cfg.membership_points = 25;
    cfg.jobs = 1;
    bool all = true;

    {
        Outcome o;
        suite_passes(o, "scroll-betti", cfg);
        o.require(suite("scroll-betti", cfg).cases.size() == scroll_catalog(5, 3).size(),
                  "not every scroll with f <= 5, d <= 3 was checked");
        report(1, o, "scrolls f<=5, d<=3: b_p1 = p*C(f,p+1), row 2 zero (exact)");
        all = all && o.pass;
    }
    {
        Outcome o;
        suite_passes(o, "ep", cfg);
        std::map<std::string, int> per;
        for (const auto& c : suite("ep", cfg).cases)
            per[variety_of(c)] += c.pass;
        for (const std::string v : {"rnc 3", "rnc 4", "scroll 1 2", "scroll 2 2"})
            o.require(per[v] >= 10, v + " has fewer than 10 passing classes");
        report(2, o, "sat(Syz a) = sat(I_X) for >= 10 random a on rnc3, rnc4, S(1,2), S(2,2)");
        all = all && o.pass;
    }
    {
        Outcome o;
        suite_passes(o, "reconstruct", cfg);
        std::set<std::string> seen;
        for (const auto& c : suite("reconstruct", cfg).cases) {
            seen.insert(variety_of(c));
            o.require(c.inputs["points"].size() == static_cast<std::size_t>(c.inputs["class"]["nvars"].get<int>()),
                      c.id + ": |Z| differs from dim V");
        }
        o.require(seen == std::set<std::string>{"rnc 3", "rnc 4", "scroll 1 2"}, "corpus incomplete");
        report(3, o, "spanning Z, |Z| = dim V: reconstruction = Syz after saturation, pointwise inclusion");
        all = all && o.pass;
    }
    {
        Outcome o;
        suite_passes(o, "membership", cfg);
        for (const auto& c : suite("membership", cfg).cases) {
            o.require(c.computed.value("agreement", 0) >= 25, c.id + ": fewer than 25 agreeing points");
            o.require(c.computed.value("on_syz", 0) > 0 && c.computed.value("off_syz", 0) > 0,
                      c.id + ": points not both on and off Syz");
        }
        report(4, o, "routes A and B agree at >= 25 points per instance, on and off Syz");
        all = all && o.pass;
    }
    {
        Outcome o;
        suite_passes(o, "oracle", cfg);
        std::set<std::string> ids;
        for (const auto& c : suite("oracle", cfg).cases)
            ids.insert(c.id);
        for (const std::string v : {"rnc 3", "scroll 1 2", "scroll 2 2", "genus4-ci", "genus5-ci"})
            o.require(ids.count(v) == 1, v + " missing");
        report(5, o, "Koszul Betti tables = resolution tables (exact)");
        all = all && o.pass;
    }
    {
        Outcome o;
        suite_passes(o, "green-small", cfg);
        suite_passes(o, "inc-syz", cfg);
        report(6, o, "genus-4 CI b11=1 K21=0; genus-5 CI b11=3 K21=0; trigonal b21=2 and hull in Syz(a)");
        all = all && o.pass;
    }
    {
        Outcome o;
        suite_passes(o, "nodal-iso", cfg);
        suite_passes(o, "aprodu-proj", cfg);
        suite_passes(o, "schreyer-converse", cfg);
        report(7, o, "b_p1(D,w_D) = b_p1(C,w_C(x+y)); K21(C)=0, K31(D)=0; b21(D)=2, hull dim 2 deg 3");
        all = all && o.pass;
    }
    {
        Outcome o;
        for (const std::string s : {"koszul-complex", "contraction", "invariance", "projection"})
            suite_passes(o, s, cfg);
        VerifyConfig other = cfg;
        other.characteristic = 31991;
        int compared = 0;
        for (const std::string s : {"scroll-betti", "ep", "reconstruct", "membership", "oracle", "green-small",
                                    "inc-syz", "nodal-iso", "aprodu-proj", "schreyer-converse"}) {
            const auto& a = suite(s, cfg);
            const auto& b = suite(s, other);
            suite_passes(o, s, other);
            o.require(a.cases.size() == b.cases.size(), s + ": case lists differ between primes");
            for (std::size_t i = 0; i < std::min(a.cases.size(), b.cases.size()); ++i) {
                o.require(a.cases[i].id == b.cases[i].id, s + ": case ids differ");
                o.require(a.cases[i].betti == b.cases[i].betti, s + "/" + a.cases[i].id + ": Betti numbers differ");
                ++compared;
            }
        }
        report(8, o, "property suites pass; " + std::to_string(compared) +
                         " cases give identical Betti numbers at 32003 and 31991");
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
