// syz: command-line front end for the syz library.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "syz/syz.hpp"

namespace {

using namespace syz;

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kFail = 1, kInput = 2 };

struct Common {
    std::optional<std::uint32_t> field_char;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    bool json_out = false;
    std::uint64_t entry_budget = kDefaultEntryBudget;
    std::string output;
};

struct Input {
    std::string file;
    std::string variety;
};

struct ClassChoice {
    int p = 0;
    int index = 0;
    bool random = false;
    std::string cocycle_file;
};

/// Collects everything that goes into the run report.
struct Report {
    json j;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Report(int argc, char** argv)
    {
        std::vector<std::string> cmd(argv, argv + argc);
        j = {{"tool", "syz"},  {"version", kVersion},    {"command", cmd},         {"subcommand", nullptr},
             {"field_char", nullptr}, {"seed", nullptr}, {"inputs", json::array()}, {"status", "ok"},
             {"results", json::object()}, {"timings", json::object()}, {"warnings", json::array()},
             {"assumptions", json::array()}};
    }

    void warn(const std::string& w) { j["warnings"].push_back(w); }
    void assume(const std::string& a)
    {
        for (const auto& x : j["assumptions"])
            if (x == a)
                return;
        j["assumptions"].push_back(a);
    }
    void input(const std::string& name, const std::string& content)
    {
        j["inputs"].push_back({{"name", name}, {"fingerprint", fingerprint(content)}});
    }
    json& results() { return j["results"]; }

    void finish()
    {
        j["timings"]["total_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const Common& c, const std::string& text)
{
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output);
    if (!out)
        throw InputError("cannot write '" + c.output + "'");
    out << text;
}

struct Loaded {
    Ideal ideal;
    std::optional<EmbeddedScheme> scheme;
};

Loaded load(const Input& in, const Common& c, Report& rep)
{
    if (in.file.empty() == in.variety.empty())
        throw InputError("give exactly one of an ideal file or --variety");
    const std::uint32_t dflt = c.field_char.value_or(kDefaultCharacteristic);
    if (!in.variety.empty()) {
        std::string recipe = expand_recipe(in.variety, c.seed);
        auto X = build_from_recipe(recipe, Field(dflt));
        rep.input(recipe, recipe);
        for (const auto& a : X.assumptions)
            rep.assume(a);
        for (const auto& w : X.warnings)
            rep.warn(w);
        rep.assume("the variety is linearly and projectively normal by construction");
        rep.j["field_char"] = X.field().characteristic();
        Ideal I = X.ideal;
        return {I, std::move(X)};
    }
    std::string text = read_file(in.file);
    rep.input(in.file, text);
    IdealFile f = parse_ideal_text(text, dflt);
    if (f.field_given && c.field_char && *c.field_char != f.ideal.field().characteristic())
        throw InputError("--field-char " + std::to_string(*c.field_char) + " conflicts with the file's field " +
                         std::to_string(f.ideal.field().characteristic()));
    rep.j["field_char"] = f.ideal.field().characteristic();
    rep.assume("linear normality of the input scheme is assumed, not checked");
    return {f.ideal, std::nullopt};
}

EmbeddedScheme as_scheme(Loaded& l, const std::string& label)
{
    if (l.scheme)
        return *l.scheme;
    return EmbeddedScheme(l.ideal, label);
}

std::string cocycle_text(const Field& f, const KoszulCocycle& a, const std::vector<std::string>& names)
{
    if (a.terms.empty())
        return "0";
    std::string s;
    for (const auto& t : a.terms) {
        std::int64_t c = f.to_signed(t.coeff);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (std::abs(c) != 1)
            s += std::to_string(std::abs(c)) + "*";
        auto els = subset_elements(t.wedge);
        s += "(";
        if (els.empty())
            s += "1";
        for (std::size_t k = 0; k < els.size(); ++k)
            s += (k ? "^" : "") + names.at(els[k]);
        s += ")(x)" + names.at(t.var);
    }
    return s;
}

KoszulCocycle choose_class(const Ideal& I, const ClassChoice& ch, const Common& c, Report& rep)
{
    const Field& f = I.field();
    if (!ch.cocycle_file.empty()) {
        std::string text = read_file(ch.cocycle_file);
        rep.input(ch.cocycle_file, text);
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw InputError("cocycle file is not JSON: " + std::string(e.what()));
        }
        auto a = cocycle_from_json(f, j, I.nvars());
        if (!is_cocycle(I, a))
            throw InputError("the given element is not a cocycle for this ideal");
        return a;
    }
    if (ch.p < 1)
        throw InputError("--p must be at least 1");
    auto basis = k_p1_cocycle_basis(I, ch.p, c.entry_budget);
    if (basis.empty())
        throw InputError("K_{" + std::to_string(ch.p) + ",1} is zero; there is no class to use");
    if (ch.random) {
        std::mt19937_64 rng(c.seed);
        return random_class(f, basis, rng);
    }
    if (ch.index < 0 || ch.index >= static_cast<int>(basis.size()))
        throw InputError("--class must be in 0.." + std::to_string(basis.size() - 1));
    return basis[ch.index];
}

ProjectivePoint parse_point(const Field& f, const std::string& text, int n)
{
    std::vector<Elem> v;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            return;
        try {
            v.push_back(f.from_int(std::stoll(cur)));
        } catch (const std::exception&) {
            throw InputError("bad point coordinate '" + cur + "'");
        }
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ':' || ch == ',' || ch == ' ' || ch == '[' || ch == ']')
            flush();
        else
            cur += ch;
    }
    flush();
    if (static_cast<int>(v.size()) != n)
        throw InputError("point needs " + std::to_string(n) + " coordinates");
    return ProjectivePoint(f, v);
}

int run_betti(const Input& in, int pmax, int qmax, const Common& c, Report& rep)
{
    auto l = load(in, c, rep);
    if (pmax < 0)
        pmax = l.ideal.nvars() - 1;
    auto t = betti_table(l.ideal, pmax, qmax, {c.entry_budget, c.jobs});
    rep.results()["betti"] = to_json(t);
    if (!c.json_out)
        write_output(c, "# Betti table over F_" + std::to_string(t.characteristic) + "\n" + t.to_text());
    return kOk;
}

int run_cocycles(const Input& in, int p, const Common& c, Report& rep)
{
    auto l = load(in, c, rep);
    auto basis = k_p1_cocycle_basis(l.ideal, p, c.entry_budget);
    json arr = json::array();
    std::string text = "# basis of K_" + std::to_string(p) + ",1: dimension " + std::to_string(basis.size()) + "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        arr.push_back(to_json(basis[i]));
        text += "[" + std::to_string(i) + "] " + cocycle_text(l.ideal.field(), basis[i], l.ideal.names()) + "\n";
    }
    rep.results()["p"] = p;
    rep.results()["dimension"] = basis.size();
    rep.results()["cocycles"] = arr;
    if (!c.json_out)
        write_output(c, text);
    return kOk;
}

int run_syzscheme(const Input& in, const ClassChoice& ch, const Common& c, Report& rep)
{
    auto l = load(in, c, rep);
    auto a = choose_class(l.ideal, ch, c, rep);
    auto s = syzygy_scheme(l.ideal, a);
    bool equals_x = ideal_equal(saturate_irrelevant(s.ideal), saturate_irrelevant(l.ideal));
    rep.results()["cocycle"] = to_json(a);
    rep.results()["ideal"] = ideal_to_json(s.ideal);
    rep.results()["hilbert"] = to_json(hilbert_polynomial(s.ideal));
    rep.results()["equals_input_after_saturation"] = equals_x;
    if (!c.json_out)
        write_output(c, format_ideal(s.ideal, {"syzygy scheme of the class " + to_json(a).dump(),
                                               "source " + rep.j["inputs"][0]["name"].get<std::string>() +
                                                   " fingerprint " + rep.j["inputs"][0]["fingerprint"].get<std::string>(),
                                               std::string("equals the input scheme after saturation: ") +
                                                   (equals_x ? "yes" : "no")}));
    return kOk;
}

int run_project(const Input& in, const ClassChoice& ch, const std::string& point, const Common& c, Report& rep)
{
    auto l = load(in, c, rep);
    auto a = choose_class(l.ideal, ch, c, rep);
    auto x = parse_point(l.ideal.field(), point, l.ideal.nvars());
    auto pr = project_class(l.ideal, x, a);
    rep.results()["point"] = point_to_json(x);
    rep.results()["image"] = ideal_to_json(pr.image);
    rep.results()["projected_class"] = to_json(pr.projected);
    rep.results()["zero_class"] = pr.zero_class;
    if (pr.zero_class)
        rep.warn("the projected class is zero");
    if (!c.json_out) {
        std::string text = format_ideal(pr.image, {"projection from " + x.to_string()});
        text += "# projected class (p = " + std::to_string(pr.projected.p) + "): " +
                cocycle_text(pr.image.field(), pr.projected, pr.image.names()) + "\n";
        text += std::string("# projected class is ") + (pr.zero_class ? "zero" : "nonzero") + "\n";
        write_output(c, text);
    }
    return kOk;
}

int run_reconstruct(const Input& in, const ClassChoice& ch, int points, const Common& c, Report& rep)
{
    auto l = load(in, c, rep);
    auto X = as_scheme(l, in.file);
    auto a = choose_class(l.ideal, ch, c, rep);
    std::size_t count = points > 0 ? points : l.ideal.nvars();
    auto Z = sample_points(X, count, c.seed);
    auto rec = reconstruct_from_projections(l.ideal, a, Z, c.jobs);
    Ideal syz = saturate_irrelevant(syzygy_scheme(l.ideal, a).ideal);
    bool eq = ideal_equal(saturate_irrelevant(rec.ideal), syz);
    bool pointwise = true;
    for (const auto& cone : rec.cones)
        pointwise = pointwise && ideal_contains(syz, cone);
    json pts = json::array();
    for (const auto& z : Z)
        pts.push_back(point_to_json(z));
    for (const auto& w : rec.warnings)
        rep.warn(w);
    rep.results()["cocycle"] = to_json(a);
    rep.results()["points"] = pts;
    rep.results()["used_points"] = rec.used.size();
    rep.results()["skipped_points"] = rec.skipped.size();
    rep.results()["equals_syzygy_scheme"] = eq;
    rep.results()["pointwise_inclusion"] = pointwise;
    rep.results()["ideal"] = ideal_to_json(rec.ideal);
    const bool ok = eq && pointwise;
    rep.j["status"] = ok ? "pass" : "fail";
    if (!c.json_out) {
        std::string text = format_ideal(rec.ideal, {"sum of cone ideals over " + std::to_string(rec.used.size()) +
                                                    " points (" + std::to_string(rec.skipped.size()) + " skipped)"});
        text += std::string("# equals the syzygy scheme after saturation: ") + (eq ? "yes" : "no") + "\n";
        text += std::string("# every cone contains the syzygy scheme: ") + (pointwise ? "yes" : "no") + "\n";
        text += ok ? "PASS\n" : "FAIL\n";
        write_output(c, text);
    }
    return ok ? kOk : kFail;
}

int run_resolve(const Input& in, int length, int degree, int qmax, const Common& c, Report& rep)
{
    auto l = load(in, c, rep);
    if (length < 0)
        length = l.ideal.nvars() - 1;
    if (degree < 0)
        degree = length + qmax;
    auto res = minimal_free_resolution(l.ideal, length, degree, c.entry_budget);
    auto t = res.betti_table(l.ideal.field().characteristic(), length, std::min(qmax, degree));
    json degs = json::array();
    for (const auto& d : res.degrees)
        degs.push_back(d);
    rep.results()["generator_degrees"] = degs;
    rep.results()["betti"] = to_json(t);
    rep.warn(res.truncation_note());
    if (!c.json_out)
        write_output(c, "# " + res.truncation_note() + "\n" + t.to_text());
    return kOk;
}

int run_build(const std::vector<std::string>& words, const std::string& recipe_file, const Common& c, Report& rep)
{
    std::vector<std::string> recipes;
    if (!recipe_file.empty()) {
        std::istringstream in(read_file(recipe_file));
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line = line.substr(0, hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                recipes.push_back(line);
        }
    }
    if (!words.empty()) {
        std::string r;
        for (const auto& w : words)
            r += (r.empty() ? "" : " ") + w;
        recipes.push_back(r);
    }
    if (recipes.empty())
        throw InputError("build needs a recipe");
    std::string text;
    json built = json::array();
    for (const auto& raw : recipes) {
        std::string recipe = raw;
        if (recipe.rfind("build ", 0) == 0)
            recipe = recipe.substr(6);
        recipe = expand_recipe(recipe, c.seed);
        auto X = build_from_recipe(recipe, Field(c.field_char.value_or(kDefaultCharacteristic)));
        rep.input(recipe, recipe);
        rep.j["field_char"] = X.field().characteristic();
        std::vector<std::string> header{"built from: " + recipe};
        for (const auto& a : X.assumptions) {
            rep.assume(a);
            header.push_back("assumption: " + a);
        }
        for (const auto& w : X.warnings) {
            rep.warn(w);
            header.push_back("warning: " + w);
        }
        auto hp = hilbert_polynomial(X.ideal);
        header.push_back("Hilbert polynomial " + hp.to_string());
        built.push_back({{"recipe", recipe}, {"ideal", ideal_to_json(X.ideal)}, {"hilbert", to_json(hp)}});
        text += format_ideal(X.ideal, header);
    }
    rep.results()["schemes"] = built;
    if (!c.json_out)
        write_output(c, text);
    return kOk;
}

int run_verify(std::string suite, VerifyConfig cfg, const std::string& replay_file, const Common& c, Report& rep)
{
    if (!replay_file.empty()) {
        std::string text = read_file(replay_file);
        rep.input(replay_file, text);
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw InputError("replay file is not JSON: " + std::string(e.what()));
        }
        const json& r = j.contains("results") ? j["results"] : j;
        if (!r.contains("suite") || !r.contains("config"))
            throw InputError("replay file does not hold a verification report");
        suite = r["suite"].get<std::string>();
        cfg = config_from_json(r["config"]);
        cfg.jobs = c.jobs;
        if (r.contains("first_failure"))
            cfg.only_case = r["first_failure"]["id"].get<std::string>();
    }
    rep.j["field_char"] = cfg.characteristic;
    rep.j["seed"] = cfg.seed;
    auto s = run_suite(suite, cfg);
    for (const auto& a : s.assumptions)
        rep.assume(a);
    for (const auto& w : s.warnings)
        rep.warn(w);
    rep.results() = suite_to_json(s, cfg);
    rep.j["status"] = s.pass ? "pass" : "fail";
    if (!c.json_out) {
        std::string text;
        for (const auto& cs : s.cases)
            text += std::string(cs.pass ? "PASS " : "FAIL ") + cs.id + (cs.error.empty() ? "" : ": " + cs.error) + "\n";
        text += suite + ": " + (s.pass ? "PASS" : "FAIL") + " (" + std::to_string(s.cases.size()) + " cases)\n";
        if (const CaseResult* f = s.first_failure()) {
            text += "first failing case:\n" + f->to_json().dump(2) + "\n";
            text += "replay: " + replay_command(suite, cfg, f->id) + "\n";
        }
        write_output(c, text);
    }
    return s.pass ? kOk : kFail;
}

void add_input(CLI::App* sub, Input& in)
{
    sub->add_option("file", in.file, "ideal file (field/ring/ideal format)");
    sub->add_option("--variety", in.variety, "builder recipe instead of a file, e.g. \"rnc 3\"");
}

void add_class(CLI::App* sub, ClassChoice& ch)
{
    sub->add_option("--p", ch.p, "homological index of the class in K_{p,1}");
    sub->add_option("--class", ch.index, "index into the cocycle basis (default 0)");
    sub->add_flag("--random", ch.random, "use a seeded random class instead of a basis element");
    sub->add_option("--cocycle", ch.cocycle_file, "JSON file holding a cocycle");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Koszul cohomology, Betti tables and syzygy schemes over prime fields", "syz"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Common c;
    app.add_option("--field-char", c.field_char, "prime characteristic (default 32003)");
    app.add_option("--seed", c.seed, "seed for every random choice")->capture_default_str();
    app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_flag("--json", c.json_out, "print a JSON run report instead of text");
    app.add_option("--entry-budget", c.entry_budget, "largest matrix (rows x cols) allowed")->capture_default_str();
    app.add_option("-o,--output", c.output, "write text output to this file");

    Input in;
    ClassChoice ch;
    int pmax = -1, qmax = 2, points = 0, length = -1, degree = -1;
    std::string point, recipe_file, replay_file;
    std::vector<std::string> build_words;
    VerifyConfig vcfg;
    std::string suite;
    std::vector<std::string> variety_list;
    std::string case_id;

    auto* betti = app.add_subcommand("betti", "graded Betti table from Koszul cohomology");
    add_input(betti, in);
    betti->add_option("--pmax", pmax, "largest p (default: number of variables - 1)");
    betti->add_option("--qmax", qmax, "largest q")->capture_default_str();

    auto* cocycles = app.add_subcommand("cocycles", "basis of cocycle representatives for K_{p,1}");
    add_input(cocycles, in);
    cocycles->add_option("--p", ch.p, "homological index")->required();

    auto* syzscheme = app.add_subcommand("syzscheme", "syzygy scheme of a class in K_{p,1}");
    add_input(syzscheme, in);
    add_class(syzscheme, ch);

    auto* project = app.add_subcommand("project", "project a class from a point of the scheme");
    add_input(project, in);
    add_class(project, ch);
    project->add_option("--point", point, "point as a:b:c:...")->required();

    auto* reconstruct = app.add_subcommand("reconstruct", "rebuild a syzygy scheme from cones over projections");
    add_input(reconstruct, in);
    add_class(reconstruct, ch);
    reconstruct->add_option("--points", points, "number of spanning points (default: number of variables)");

    auto* resolve = app.add_subcommand("resolve", "minimal free resolution by linear algebra");
    add_input(resolve, in);
    resolve->add_option("--length", length, "homological length bound (default: number of variables - 1)");
    resolve->add_option("--degree", degree, "internal degree bound (default: length + qmax)");
    resolve->add_option("--qmax", qmax, "largest q shown")->capture_default_str();

    auto* build = app.add_subcommand("build", "build a scheme from a recipe");
    build->add_option("recipe", build_words, "recipe words, e.g. scroll 1 2");
    build->add_option("--file", recipe_file, "file of recipe lines");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name");
    verify->add_option("--variety", variety_list, "restrict the corpus (repeatable)");
    verify->add_option("--samples", vcfg.samples, "random classes per variety")->capture_default_str();
    verify->add_option("--points", vcfg.points, "reconstruction points (default: number of variables)");
    verify->add_option("--case", case_id, "run only this case id");
    verify->add_option("--replay", replay_file, "rerun the first failure of a saved JSON report");
    verify->add_flag("--list", "list suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    Report rep(argc, argv);
    int code = kOk;
    try {
        if (c.field_char && !Field::is_prime(*c.field_char))
            throw InputError("--field-char must be a prime");
        rep.j["seed"] = c.seed;
        rep.j["field_char"] = c.field_char.value_or(kDefaultCharacteristic);
        if (betti->parsed()) {
            rep.j["subcommand"] = "betti";
            code = run_betti(in, pmax, qmax, c, rep);
        } else if (cocycles->parsed()) {
            rep.j["subcommand"] = "cocycles";
            code = run_cocycles(in, ch.p, c, rep);
        } else if (syzscheme->parsed()) {
            rep.j["subcommand"] = "syzscheme";
            code = run_syzscheme(in, ch, c, rep);
        } else if (project->parsed()) {
            rep.j["subcommand"] = "project";
            code = run_project(in, ch, point, c, rep);
        } else if (reconstruct->parsed()) {
            rep.j["subcommand"] = "reconstruct";
            code = run_reconstruct(in, ch, points, c, rep);
        } else if (resolve->parsed()) {
            rep.j["subcommand"] = "resolve";
            code = run_resolve(in, length, degree, qmax, c, rep);
        } else if (build->parsed()) {
            rep.j["subcommand"] = "build";
            code = run_build(build_words, recipe_file, c, rep);
        } else if (verify->parsed()) {
            rep.j["subcommand"] = "verify";
            if (verify->count("--list")) {
                for (const auto& s : suite_names())
                    std::cout << s << "\n";
                return kOk;
            }
            if (suite.empty() && replay_file.empty())
                throw InputError("verify needs a suite name (see verify --list)");
            vcfg.characteristic = c.field_char.value_or(kDefaultCharacteristic);
            vcfg.seed = c.seed;
            vcfg.jobs = c.jobs;
            vcfg.entry_budget = c.entry_budget;
            vcfg.varieties = variety_list;
            if (!case_id.empty())
                vcfg.only_case = case_id;
            code = run_verify(suite, vcfg, replay_file, c, rep);
        }
    } catch (const ConsistencyError& e) {
        rep.j["status"] = "error";
        rep.j["error"] = std::string("internal consistency failure: ") + e.what();
        code = kFail;
    } catch (const std::exception& e) {
        rep.j["status"] = "error";
        rep.j["error"] = e.what();
        code = kInput;
    }
    rep.finish();
    if (c.json_out) {
        std::string text = rep.j.dump(2) + "\n";
        if (c.output.empty())
            std::cout << text;
        else
            write_output(c, text);
    } else if (rep.j.contains("error")) {
        std::cerr << "syz: " << rep.j["error"].get<std::string>() << "\n";
    } else {
        for (const auto& w : rep.j["warnings"])
            std::cerr << "warning: " << w.get<std::string>() << "\n";
    }
    return code;
}
