#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tracemonoid/errors.hpp"
#include "tracemonoid/independence_pair.hpp"
#include "tracemonoid/markov.hpp"
#include "tracemonoid/measures.hpp"
#include "tracemonoid/mobius.hpp"
#include "tracemonoid/trace.hpp"
#include "tracemonoid/valuation.hpp"

namespace tracemonoid::cli {

namespace {

using nlohmann::json;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

IndependencePair load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open spec file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return IndependencePair::parse(text.str());
}

Valuation resolve_valuation(const IndependencePair& m, const std::string& text) {
    if (text == "uniform") return uniform_valuation(m);
    return parse_valuation(m, text);
}

json clique_json(const IndependencePair& m, const Clique& c) {
    json arr = json::array();
    for (std::uint32_t a : c.members()) arr.push_back(m.letter_name(a));
    return arr;
}

json monoid_json(const IndependencePair& m) {
    json letters = json::array();
    for (const auto& name : m.letters()) letters.push_back(name);
    json pairs = json::array();
    for (auto [i, j] : m.independent_pairs())
        pairs.push_back(json::array({m.letter_name(i), m.letter_name(j)}));
    return json{{"letters", letters}, {"independent", pairs}};
}

void emit(bool as_json, const std::string& command, const IndependencePair& m,
          const json& result, const std::string& human) {
    if (as_json) {
        json out{{"command", command}, {"monoid", monoid_json(m)}, {"result", result}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << human;
    }
}

json valuation_json(const IndependencePair& m, const Valuation& v) {
    json out = json::object();
    for (std::uint32_t a = 0; a < m.letter_count(); ++a)
        out[m.letter_name(a)] = v.of_letter(a);
    return out;
}

struct Options {
    std::string spec;
    bool as_json = false;
    std::string valuation;
    std::string trace;
    std::string fixed;
    std::string free_letter;
    std::uint64_t seed = 0;
    std::size_t steps = 0;
    std::size_t runs = 0;
    std::size_t max_length = 0;
    unsigned threads = 1;
    bool exact = false;
    bool mc = false;
    bool certify = false;
};

int cmd_info(const Options& opt) {
    IndependencePair m = load_spec(opt.spec);
    auto cliques = m.enumerate_cliques();
    MobiusPolynomial poly = mobius_polynomial(m);
    std::optional<double> root;
    try {
        root = smallest_root(poly);
    } catch (const NoRootInUnitInterval&) {
    }
    std::size_t max_clique = cliques.empty() ? 0 : cliques.back().size();

    json result{{"letters", m.letter_count()},
                {"irreducible", m.is_irreducible()},
                {"clique_count", cliques.size()},
                {"max_clique", max_clique},
                {"polynomial", poly.str()},
                {"coefficients", poly.coeffs}};
    result["root"] = root ? json(*root) : json(nullptr);

    std::ostringstream human;
    human << "letters:";
    for (const auto& name : m.letters()) human << " " << name;
    human << " (" << m.letter_count() << ")\n";
    human << "independent pairs: " << m.independent_pairs().size() << "\n";
    human << "irreducible: " << (m.is_irreducible() ? "yes" : "no") << "\n";
    human << "cliques: " << cliques.size() << " (max size " << max_clique << ")\n";
    human << "polynomial: " << poly.str() << "\n";
    human << "smallest root: " << (root ? fmt(*root) : "none in (0, 1]") << "\n";
    emit(opt.as_json, "info", m, result, human.str());
    return 0;
}

int cmd_cliques(const Options& opt) {
    IndependencePair m = load_spec(opt.spec);
    auto cliques = m.enumerate_cliques();
    json arr = json::array();
    std::ostringstream human;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        arr.push_back(clique_json(m, cliques[i]));
        human << i << ": " << m.clique_name(cliques[i]) << "\n";
    }
    emit(opt.as_json, "cliques", m, json{{"cliques", arr}}, human.str());
    return 0;
}

int cmd_mobius(const Options& opt) {
    IndependencePair m = load_spec(opt.spec);
    MobiusPolynomial poly = mobius_polynomial(m);
    std::optional<double> root;
    try {
        root = opt.certify ? smallest_root_certified(poly) : smallest_root(poly);
    } catch (const NoRootInUnitInterval&) {
    }
    json result{{"coefficients", poly.coeffs}, {"polynomial", poly.str()}};
    result["root"] = root ? json(*root) : json(nullptr);
    std::ostringstream human;
    human << "polynomial: " << poly.str() << "\n";
    human << "coefficients:";
    for (auto c : poly.coeffs) human << " " << c;
    human << "\n";
    human << "smallest root: " << (root ? fmt(*root) : "none in (0, 1]") << "\n";
    if (opt.certify) {
        json roots = json::array();
        std::ostringstream rh;
        for (const auto& z : polynomial_roots(poly)) {
            roots.push_back(json::array({z.real(), z.imag()}));
            rh << "  " << fmt(z.real()) << (z.imag() < 0 ? " - " : " + ")
               << fmt(std::abs(z.imag())) << "i (modulus " << fmt(std::abs(z)) << ")\n";
        }
        result["roots"] = roots;
        result["certified"] = root.has_value();
        human << "all roots:\n" << rh.str();
        human << "certified: " << (root ? "yes" : "no") << "\n";
    }
    emit(opt.as_json, "mobius", m, result, human.str());
    return 0;
}

int cmd_count(const Options& opt) {
    IndependencePair m = load_spec(opt.spec);
    CountSequence seq = count_traces(m, opt.max_length);
    json counts = json::array();
    std::ostringstream human;
    for (std::size_t k = 0; k < seq.values.size(); ++k) {
        counts.push_back(seq.values[k].str());
        human << k << "\t" << seq.values[k].str() << "\n";
    }
    emit(opt.as_json, "count", m,
         json{{"max_length", opt.max_length}, {"counts", counts}}, human.str());
    return 0;
}

json report_json(const IndependencePair& m, const ValuationReport& report) {
    json h = json::object();
    for (std::size_t i = 0; i < report.h.size(); ++i)
        h[m.clique_name(report.h.clique_at(i))] = report.h[i];
    json violations = json::array();
    for (const auto& [c, value] : report.violations)
        violations.push_back(json{{"clique", clique_json(m, c)}, {"value", value}});
    return json{{"is_mobius", report.is_mobius},
                {"h0", report.h0},
                {"h", h},
                {"violations", violations}};
}

int cmd_check(const Options& opt) {
    IndependencePair m = load_spec(opt.spec);
    Valuation v = resolve_valuation(m, opt.valuation);
    ValuationReport report = classify_valuation(m, v);
    json result = report_json(m, report);
    result["valuation"] = valuation_json(m, v);
    std::ostringstream human;
    human << "valuation: " << format_valuation(m, v) << "\n";
    human << "h(ε) = " << fmt(report.h0) << "\n";
    for (std::size_t i = 0; i < report.h.size(); ++i) {
        if (report.h.clique_at(i).empty()) continue;
        human << "h(" << m.clique_name(report.h.clique_at(i)) << ") = " << fmt(report.h[i])
              << "\n";
    }
    human << "mobius valuation: " << (report.is_mobius ? "yes" : "no") << "\n";
    for (const auto& [c, value] : report.violations)
        human << "violation: h(" << m.clique_name(c) << ") = " << fmt(value) << "\n";
    emit(opt.as_json, "check", m, result, human.str());
    return report.is_mobius ? 0 : 1;
}

int cmd_complete(const Options& opt) {
    IndependencePair m = load_spec(opt.spec);
    std::uint32_t free_letter = m.index_of(opt.free_letter);

    // Parse the fixed assignment: every letter except the free one.
    std::vector<double> partial(m.letter_count(), 1.0);
    std::vector<char> seen(m.letter_count(), 0);
    std::string_view text = opt.fixed;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view item = text.substr(i, j - i);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw ValidationError("expected '<letter>=<value>', got '" + std::string(item) +
                                  "'");
        std::uint32_t a = m.index_of(std::string(item.substr(0, eq)));
        if (a == free_letter)
            throw ValidationError("free letter '" + opt.free_letter + "' cannot be fixed");
        if (seen[a])
            throw ValidationError("letter '" + m.letter_name(a) + "' assigned twice");
        std::string num(item.substr(eq + 1));
        char* end = nullptr;
        double val = std::strtod(num.c_str(), &end);
        if (end == num.c_str() || *end != '\0')
            throw ValidationError("invalid number '" + num + "'");
        partial[a] = val;
        seen[a] = 1;
        i = j + 1;
    }
    for (std::uint32_t a = 0; a < m.letter_count(); ++a)
        if (a != free_letter && !seen[a])
            throw ValidationError("letter '" + m.letter_name(a) + "' is missing a value");

    Valuation v = complete_valuation(m, partial, free_letter);
    ValuationReport report = classify_valuation(m, v);
    json result{{"free", opt.free_letter},
                {"value", v.of_letter(free_letter)},
                {"valuation", valuation_json(m, v)},
                {"is_mobius", report.is_mobius}};
    std::ostringstream human;
    human << opt.free_letter << " = " << fmt(v.of_letter(free_letter)) << "\n";
    human << "valuation: " << format_valuation(m, v) << "\n";
    human << "mobius valuation: " << (report.is_mobius ? "yes" : "no") << "\n";
    emit(opt.as_json, "complete", m, result, human.str());
    return 0;
}

int cmd_chain(const Options& opt) {
    IndependencePair m = load_spec(opt.spec);
    Valuation v = resolve_valuation(m, opt.valuation);
    ChainSpec chain = build_chain(m, v);
    json states = json::array();
    for (const Clique& c : chain.states) states.push_back(clique_json(m, c));
    json result{{"states", states},
                {"initial", chain.initial},
                {"transition", chain.transition},
                {"g", chain.g}};
    std::ostringstream human;
    human << "states:";
    for (const Clique& c : chain.states) human << " " << m.clique_name(c);
    human << "\ninitial:";
    for (double x : chain.initial) human << " " << fmt(x);
    human << "\ng:";
    for (double x : chain.g) human << " " << fmt(x);
    human << "\ntransition:\n";
    for (std::size_t r = 0; r < chain.transition.size(); ++r) {
        human << "  " << m.clique_name(chain.states[r]) << ":";
        for (double x : chain.transition[r]) human << " " << fmt(x);
        human << "\n";
    }
    emit(opt.as_json, "chain", m, result, human.str());
    return 0;
}

int cmd_sample(const Options& opt) {
    IndependencePair m = load_spec(opt.spec);
    Valuation v = resolve_valuation(m, opt.valuation);
    ChainSpec chain = build_chain(m, v);
    SampleRun run = sample_prefix(chain, opt.steps, opt.seed);
    json cliques = json::array();
    for (const Clique& c : run.cliques) cliques.push_back(clique_json(m, c));
    double ratio = run.trace.height() == 0
                       ? 1.0
                       : static_cast<double>(run.trace.length()) /
                             static_cast<double>(run.trace.height());
    json result{{"seed", run.seed},
                {"rng", run.rng},
                {"steps", run.steps},
                {"cliques", cliques},
                {"trace", format_trace(m, run.trace)},
                {"length", run.trace.length()},
                {"height", run.trace.height()},
                {"ratio", ratio}};
    emit(opt.as_json, "sample", m, result, format_sample_run(m, run));
    return 0;
}

int cmd_speedup(const Options& opt) {
    IndependencePair m = load_spec(opt.spec);
    Valuation v = resolve_valuation(m, opt.valuation);
    json result;
    std::ostringstream human;
    if (opt.exact) {
        Speedup s = speedup_exact(m, v);
        result = json{{"mode", "exact"}, {"rho", s.rho}, {"gamma", s.gamma}};
        human << "rho = " << fmt(s.rho) << "\n";
        human << "gamma = " << fmt(s.gamma) << "\n";
    } else {
        ChainSpec chain = build_chain(m, v);
        double rho = speedup_montecarlo_parallel(chain, opt.steps, opt.seed, opt.threads);
        result = json{{"mode", "mc"},
                      {"steps", opt.steps},
                      {"seed", opt.seed},
                      {"threads", opt.threads},
                      {"rho", rho},
                      {"gamma", 1.0 / rho}};
        human << "rho = " << fmt(rho) << " (" << opt.steps << " steps, seed " << opt.seed
              << ")\n";
        human << "gamma = " << fmt(1.0 / rho) << "\n";
    }
    emit(opt.as_json, "speedup", m, result, human.str());
    return 0;
}

int cmd_cylinder(const Options& opt) {
    IndependencePair m = load_spec(opt.spec);
    Valuation v = resolve_valuation(m, opt.valuation);
    Trace u = parse_word(m, opt.trace);
    json result;
    std::ostringstream human;
    if (opt.exact) {
        double p = cylinder_probability(m, v, u);
        result = json{{"mode", "exact"},
                      {"trace", format_trace(m, u)},
                      {"probability", p}};
        human << "trace: " << format_trace(m, u) << "\n";
        human << "probability = " << fmt(p) << "\n";
    } else {
        ChainSpec chain = build_chain(m, v);
        double p = empirical_cylinder(chain, m, u, opt.runs, opt.seed);
        result = json{{"mode", "mc"},
                      {"trace", format_trace(m, u)},
                      {"runs", opt.runs},
                      {"seed", opt.seed},
                      {"probability", p}};
        human << "trace: " << format_trace(m, u) << "\n";
        human << "empirical probability = " << fmt(p) << " (" << opt.runs
              << " runs, seed " << opt.seed << ")\n";
    }
    emit(opt.as_json, "cylinder", m, result, human.str());
    return 0;
}

} // namespace

int run(int argc, const char* const* argv) {
    Options opt;
    CLI::App app{"trace monoid toolkit: cliques, boundary measures, layer chains"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.as_json, "emit a single JSON object on stdout");

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("spec", opt.spec, "monoid spec file")->required();
    };

    CLI::App* info = app.add_subcommand("info", "alphabet, cliques, polynomial, root");
    add_spec(info);

    CLI::App* cliques = app.add_subcommand("cliques", "list all cliques in canonical order");
    add_spec(cliques);

    CLI::App* mobius = app.add_subcommand("mobius", "alternating clique polynomial and root");
    add_spec(mobius);
    mobius->add_flag("--certify", opt.certify,
                     "check the root against all complex roots");

    CLI::App* count = app.add_subcommand("count", "numbers of traces by length");
    add_spec(count);
    count->add_option("--max-length", opt.max_length, "largest length to count")->required();

    CLI::App* check = app.add_subcommand("check", "classify a valuation");
    add_spec(check);
    check->add_option("--valuation", opt.valuation, "letter=value,... or 'uniform'")
        ->required();

    CLI::App* complete = app.add_subcommand("complete", "solve for one free letter");
    add_spec(complete);
    complete->add_option("--fixed", opt.fixed, "fixed letters, letter=value,...")->required();
    complete->add_option("--free", opt.free_letter, "letter to solve for")->required();

    CLI::App* chain = app.add_subcommand("chain", "layer chain of a valuation");
    add_spec(chain);
    chain->add_option("--valuation", opt.valuation, "letter=value,... or 'uniform'")
        ->required();

    CLI::App* sample = app.add_subcommand("sample", "sample layers from the chain");
    add_spec(sample);
    sample->add_option("--valuation", opt.valuation, "letter=value,... or 'uniform'")
        ->required();
    sample->add_option("--steps", opt.steps, "number of layers")->required();
    sample->add_option("--seed", opt.seed, "rng seed")->required();

    CLI::App* speedup = app.add_subcommand("speedup", "asymptotic length-per-height rate");
    add_spec(speedup);
    speedup->add_option("--valuation", opt.valuation, "letter=value,... or 'uniform'")
        ->required();
    auto* sp_exact = speedup->add_flag("--exact", opt.exact, "stationary-law computation");
    auto* sp_mc = speedup->add_flag("--mc", opt.mc, "ergodic-average estimate");
    speedup->add_option("--steps", opt.steps, "chain steps for --mc");
    speedup->add_option("--seed", opt.seed, "rng seed for --mc");
    speedup->add_option("--threads", opt.threads, "independent chains for --mc");
    sp_exact->excludes(sp_mc);

    CLI::App* cylinder = app.add_subcommand("cylinder", "probability of a trace prefix");
    add_spec(cylinder);
    cylinder->add_option("--valuation", opt.valuation, "letter=value,... or 'uniform'")
        ->required();
    cylinder->add_option("--trace", opt.trace, "raw word over the alphabet")->required();
    auto* cy_exact = cylinder->add_flag("--exact", opt.exact, "closed-form probability");
    auto* cy_mc = cylinder->add_flag("--mc", opt.mc, "sampled estimate");
    cylinder->add_option("--runs", opt.runs, "sample count for --mc");
    cylinder->add_option("--seed", opt.seed, "rng seed for --mc");
    cy_exact->excludes(cy_mc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 returns 0 for --help; everything else is a usage error.
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(info)) return cmd_info(opt);
        if (app.got_subcommand(cliques)) return cmd_cliques(opt);
        if (app.got_subcommand(mobius)) return cmd_mobius(opt);
        if (app.got_subcommand(count)) return cmd_count(opt);
        if (app.got_subcommand(check)) return cmd_check(opt);
        if (app.got_subcommand(complete)) return cmd_complete(opt);
        if (app.got_subcommand(chain)) return cmd_chain(opt);
        if (app.got_subcommand(sample)) return cmd_sample(opt);
        if (app.got_subcommand(speedup)) {
            if (opt.exact == opt.mc)
                throw UsageError("choose exactly one of --exact and --mc");
            if (opt.mc && opt.steps == 0)
                throw UsageError("--mc requires --steps");
            return cmd_speedup(opt);
        }
        if (app.got_subcommand(cylinder)) {
            if (opt.exact == opt.mc)
                throw UsageError("choose exactly one of --exact and --mc");
            if (opt.mc && opt.runs == 0)
                throw UsageError("--mc requires --runs");
            return cmd_cylinder(opt);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace tracemonoid::cli
