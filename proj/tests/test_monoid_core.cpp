#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "tracemonoid/errors.hpp"
#include "tracemonoid/independence_pair.hpp"
#include "tracemonoid/trace.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace tracemonoid;

namespace {

Trace nf(const IndependencePair& m, const std::string& word) {
    return parse_word(m, word);
}

std::vector<IndependencePair> congruence_alphabets() {
    std::vector<IndependencePair> out;
    out.push_back(fixtures::m1());
    out.push_back(fixtures::free2());
    out.push_back(fixtures::indep2());
    out.push_back(oracles::random_irreducible(11, 4));
    out.push_back(oracles::random_irreducible(12, 4));
    return out;
}

} // namespace

TEST_CASE("spec file parsing") {
    IndependencePair m = IndependencePair::parse(
        "# three letters, one commuting pair\n"
        "letters a b c\n"
        "independent a b  # inline comment\n");
    CHECK(m.letter_count() == 3);
    CHECK(m.letters() == std::vector<std::string>{"a", "b", "c"});
    CHECK(m.independent(0, 1));
    CHECK(!m.independent(0, 2));
    CHECK(m.index_of("c") == 2);

    CHECK_THROWS_AS(IndependencePair::parse(""), ParseError);
    CHECK_THROWS_AS(IndependencePair::parse("independent a b\n"), ParseError);
    CHECK_THROWS_AS(IndependencePair::parse("letters a b\nletters c\n"), ParseError);
    CHECK_THROWS_AS(IndependencePair::parse("letters a b\nindependent a\n"), ParseError);
    CHECK_THROWS_AS(IndependencePair::parse("letters a b\nfoo a b\n"), ParseError);
    CHECK_THROWS_AS(IndependencePair::parse("letters a 1b\n"), ParseError);
    CHECK_THROWS_AS(IndependencePair::parse("letters a a\n"), ValidationError);
    CHECK_THROWS_AS(IndependencePair::parse("letters a b\nindependent a a\n"),
                    ValidationError);
    CHECK_THROWS_AS(IndependencePair::parse("letters a b\nindependent a c\n"),
                    ValidationError);

    // Line numbers are reported.
    try {
        IndependencePair::parse("letters a b\n\nindependent a\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("irreducibility is dependence-graph connectivity") {
    CHECK(fixtures::m1().is_irreducible());
    CHECK(fixtures::m2().is_irreducible());
    CHECK(fixtures::free2().is_irreducible());
    CHECK(fixtures::free1().is_irreducible());
    CHECK(!fixtures::indep2().is_irreducible());
    // Two commuting components of two letters each.
    IndependencePair m = IndependencePair::make(
        {"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
    CHECK(!m.is_irreducible());
}

TEST_CASE("clique enumeration matches the power-set filter") {
    std::vector<IndependencePair> alphabets{fixtures::m1(), fixtures::m2(),
                                            fixtures::free2(), fixtures::free1()};
    for (std::uint64_t seed = 21; seed < 27; ++seed)
        alphabets.push_back(oracles::random_irreducible(seed, 3 + seed % 4));
    for (const auto& m : alphabets) {
        auto got = m.enumerate_cliques();
        auto want = oracles::brute_force_cliques(m);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
        // Canonical order: size-major, then lexicographic member sequence.
        for (std::size_t i = 0; i + 1 < got.size(); ++i) {
            CHECK(got[i] < got[i + 1]);
            CHECK(got[i].size() <= got[i + 1].size());
        }
    }
    CHECK(fixtures::m1().enumerate_cliques().size() == 5);
    CHECK(fixtures::m2().enumerate_cliques().size() == 11);
}

TEST_CASE("clique enumeration cap") {
    // 24 pairwise-independent letters give 2^24 cliques, beyond the cap.
    std::vector<std::string> letters;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < 24; ++i) letters.push_back("x" + std::to_string(i));
    for (int i = 0; i < 24; ++i)
        for (int j = i + 1; j < 24; ++j) pairs.emplace_back(letters[i], letters[j]);
    IndependencePair m = IndependencePair::make(letters, pairs);
    CHECK_THROWS_AS(m.enumerate_cliques(), CombinatorialBlowup);
}

TEST_CASE("parallelism and admissibility") {
    IndependencePair m = fixtures::m1();
    Clique a = m.clique_of({"a"}), b = m.clique_of({"b"}), c = m.clique_of({"c"});
    Clique ab = m.clique_of({"a", "b"});
    Clique unit = m.empty_clique();

    CHECK(m.parallel(a, b));
    CHECK(!m.parallel(a, c));
    CHECK(m.parallel(unit, a));
    CHECK(m.parallel(unit, unit));
    CHECK(!m.parallel(a, a)); // independence is irreflexive

    CHECK(m.cf_admissible(a, a));
    CHECK(!m.cf_admissible(a, b));
    CHECK(m.cf_admissible(ab, c));
    CHECK(m.cf_admissible(c, ab));
    CHECK(!m.cf_admissible(unit, a));
    CHECK(m.cf_admissible(a, unit));
    CHECK(m.cf_admissible(unit, unit));

    CHECK_THROWS_AS(m.clique_of({"a", "c"}), ValidationError);
    CHECK_THROWS_AS(m.clique_of({"a", "a"}), ValidationError);
}

TEST_CASE("link alphabets") {
    IndependencePair m1 = fixtures::m1();
    IndependencePair la = m1.link_alphabet(m1.clique_of({"a"}));
    CHECK(la.letters() == std::vector<std::string>{"b"});
    IndependencePair lu = m1.link_alphabet(m1.empty_clique());
    CHECK(lu.letters() == m1.letters());
    IndependencePair lab = m1.link_alphabet(m1.clique_of({"a", "b"}));
    CHECK(lab.letter_count() == 0);

    // Restriction preserves the relation on the surviving letters.
    IndependencePair m = oracles::random_irreducible(31, 6);
    Clique c = m.clique_of({m.letter_name(0)});
    IndependencePair link = m.link_alphabet(c);
    for (std::uint32_t i = 0; i < link.letter_count(); ++i)
        for (std::uint32_t j = 0; j < link.letter_count(); ++j) {
            if (i == j) continue;
            std::uint32_t oi = m.index_of(link.letter_name(i));
            std::uint32_t oj = m.index_of(link.letter_name(j));
            CHECK(link.independent(i, j) == m.independent(oi, oj));
        }
}

TEST_CASE("normal form goldens") {
    IndependencePair m = fixtures::m1();
    CHECK(format_trace(m, nf(m, "acba")) == "a|c|a.b");
    CHECK(format_trace(m, nf(m, "acab")) == "a|c|a.b");
    CHECK(format_trace(m, nf(m, "ba")) == "a.b");
    CHECK(format_trace(m, nf(m, "ab")) == "a.b");
    CHECK(format_trace(m, nf(m, "aaa")) == "a|a|a");
    CHECK(format_trace(m, Trace()) == "ε");
    CHECK(nf(m, "acba").length() == 4);
    CHECK(nf(m, "acba").height() == 3);
}

TEST_CASE("congruence soundness and completeness") {
    for (const auto& m : congruence_alphabets()) {
        std::size_t n = m.letter_count();
        for (std::size_t len = 0; len <= 6; ++len) {
            if (oracles::pow_size(n, len) > 5000) continue;
            oracles::SwapClosure closure(m, len);
            // Same swap-closure component iff same normal form, and the
            // canonical word stays in the component of the original.
            std::map<std::size_t, Trace> rep;
            std::map<Trace, std::size_t> comp_of;
            for (std::size_t idx = 0; idx < closure.word_count(); ++idx) {
                oracles::Word w = oracles::word_of_index(idx, n, len);
                Trace t = normal_form(m, w);
                CHECK(t.length() == len);
                CHECK(closure.congruent(w, t.word()));
                std::size_t root = closure.find(idx);
                auto [it, fresh] = rep.emplace(root, t);
                if (!fresh) CHECK(it->second == t);
                auto [jt, fresh2] = comp_of.emplace(t, root);
                if (!fresh2) CHECK(jt->second == root);
            }
        }
    }
}

TEST_CASE("normal forms satisfy the layer invariants") {
    for (const auto& m : congruence_alphabets()) {
        oracles::SplitMix64 gen(7);
        for (int rep = 0; rep < 200; ++rep) {
            oracles::Word w(10);
            for (auto& a : w)
                a = static_cast<std::uint32_t>(gen.next() % m.letter_count());
            Trace t = normal_form(m, w);
            const auto& cf = t.cliques();
            for (std::size_t i = 0; i < cf.size(); ++i) {
                CHECK(!cf[i].empty());
                if (i > 0) CHECK(m.cf_admissible(cf[i - 1], cf[i]));
            }
            // Wrapping the sequence back validates it.
            CHECK(Trace::from_cliques(m, cf) == t);
        }
    }
}

TEST_CASE("from_cliques rejects invalid sequences") {
    IndependencePair m = fixtures::m1();
    Clique a = m.clique_of({"a"}), b = m.clique_of({"b"});
    CHECK_THROWS_AS(Trace::from_cliques(m, {a, b}), NotAdmissible);
    CHECK_THROWS_AS(Trace::from_cliques(m, {m.empty_clique()}), NotAdmissible);
    try {
        Trace::from_cliques(m, {a, a, b});
        CHECK(false);
    } catch (const NotAdmissible& e) {
        CHECK(e.index() == 2);
    }
}

TEST_CASE("concat is the monoid product") {
    IndependencePair m = fixtures::m1();
    // Against re-normalizing the concatenated words, exhaustively.
    for (std::size_t lu = 0; lu <= 3; ++lu)
        for (std::size_t lv = 0; lv <= 3; ++lv)
            for (const Trace& u : enumerate_traces(m, lu))
                for (const Trace& v : enumerate_traces(m, lv)) {
                    oracles::Word w = u.word();
                    oracles::Word wv = v.word();
                    w.insert(w.end(), wv.begin(), wv.end());
                    CHECK(concat(m, u, v) == normal_form(m, w));
                }
    // Unit and associativity.
    Trace u = nf(m, "acb"), v = nf(m, "ba"), w = nf(m, "cc");
    CHECK(concat(m, u, Trace()) == u);
    CHECK(concat(m, Trace(), u) == u);
    CHECK(concat(m, concat(m, u, v), w) == concat(m, u, concat(m, v, w)));
}

TEST_CASE("prefix order matches the product-built divisor map") {
    IndependencePair m = fixtures::m1();
    const std::size_t max_len = 5;
    auto divisors = oracles::divisor_map(m, max_len);
    std::vector<Trace> all;
    for (std::size_t k = 0; k <= max_len; ++k)
        for (const Trace& t : enumerate_traces(m, k, max_len)) all.push_back(t);
    for (const Trace& v : all) {
        const auto& dv = divisors.at(v);
        for (const Trace& u : all) {
            bool expected = dv.count(u) > 0;
            CHECK(leq(m, u, v) == expected);
        }
    }
}

TEST_CASE("order axioms and height monotonicity") {
    IndependencePair m = fixtures::m2();
    std::vector<Trace> all;
    for (std::size_t k = 0; k <= 3; ++k)
        for (const Trace& t : enumerate_traces(m, k)) all.push_back(t);
    for (const Trace& u : all) {
        CHECK(leq(m, Trace(), u));
        CHECK(leq(m, u, u));
        for (const Trace& v : all) {
            if (leq(m, u, v) && leq(m, v, u)) CHECK(u == v);
            if (leq(m, u, v)) CHECK(u.height() <= v.height());
        }
    }
}

TEST_CASE("residual inverts concat") {
    for (const auto& m : {fixtures::m1(), fixtures::m2()}) {
        for (std::size_t lu = 0; lu <= 2; ++lu)
            for (std::size_t lw = 0; lw <= 2; ++lw)
                for (const Trace& u : enumerate_traces(m, lu))
                    for (const Trace& w : enumerate_traces(m, lw)) {
                        Trace v = concat(m, u, w);
                        CHECK(residual(m, u, v) == w);
                    }
    }
    IndependencePair m = fixtures::m1();
    CHECK_THROWS_AS(residual(m, nf(m, "c"), nf(m, "ab")), NotAPrefix);
    CHECK_THROWS_AS(residual(m, nf(m, "aa"), nf(m, "a")), NotAPrefix);
}

TEST_CASE("cut truncates the normal form and decides the order") {
    IndependencePair m = fixtures::m1();
    Trace v = nf(m, "acba"); // a|c|a.b
    CHECK(cut(m, v, 0) == Trace());
    CHECK(format_trace(m, cut(m, v, 1)) == "a");
    CHECK(format_trace(m, cut(m, v, 2)) == "a|c");
    CHECK(cut(m, v, 3) == v);
    CHECK(cut(m, v, 99) == v);

    // u <= v iff u <= cut(v, height(u)).
    std::vector<Trace> all;
    for (std::size_t k = 0; k <= 4; ++k)
        for (const Trace& t : enumerate_traces(m, k)) all.push_back(t);
    for (const Trace& u : all)
        for (const Trace& w : all)
            CHECK(leq(m, u, w) == leq(m, u, cut(m, w, u.height())));
}

TEST_CASE("mirror is a length-preserving involution and anti-morphism") {
    for (const auto& m : {fixtures::m1(), fixtures::m2()}) {
        std::vector<Trace> all;
        for (std::size_t k = 0; k <= 3; ++k)
            for (const Trace& t : enumerate_traces(m, k)) all.push_back(t);
        for (const Trace& u : all) {
            Trace r = mirror(m, u);
            CHECK(r.length() == u.length());
            CHECK(r.height() == u.height());
            CHECK(mirror(m, r) == u);
            for (const Trace& v : all)
                CHECK(mirror(m, concat(m, u, v)) == concat(m, mirror(m, v), mirror(m, u)));
        }
    }
}

TEST_CASE("hat trace goldens") {
    IndependencePair m1 = fixtures::m1();
    Trace w1 = hat_trace(m1);
    CHECK(format_trace(m1, w1) == "a|c|b|c|a");
    for (const Clique& c : w1.cliques()) CHECK(c.size() == 1);

    CHECK(format_trace(fixtures::free1(), hat_trace(fixtures::free1())) == "a");
    CHECK(format_trace(fixtures::free2(), hat_trace(fixtures::free2())) == "a|b|a");
    CHECK_THROWS_AS(hat_trace(fixtures::indep2()), Reducible);

    // Covers every letter, layers are singletons, height is odd.
    for (std::uint64_t seed = 41; seed < 45; ++seed) {
        IndependencePair m = oracles::random_irreducible(seed, 5);
        Trace w = hat_trace(m);
        Clique seen(m.letter_count());
        for (const Clique& c : w.cliques()) {
            CHECK(c.size() == 1);
            seen = seen.united(c);
        }
        CHECK(seen.size() == m.letter_count());
        CHECK(w.height() % 2 == 1);
        CHECK(w.height() == w.length());
    }
}

TEST_CASE("hat trace separates equal-length traces") {
    for (const auto& m : {fixtures::m1(), fixtures::free2()}) {
        Trace w = hat_trace(m);
        for (std::size_t k = 1; k <= 2; ++k) {
            std::vector<Trace> traces = enumerate_traces(m, k);
            std::vector<Trace> extended;
            for (const Trace& u : traces) extended.push_back(concat(m, u, w));
            std::size_t big = k + w.length() + 3;
            std::vector<Trace> offers = enumerate_traces(m, big, big);
            // Each large trace dominates at most one of the extensions.
            for (const Trace& z : offers) {
                std::size_t dominated = 0;
                for (const Trace& e : extended)
                    if (leq(m, e, z)) ++dominated;
                CHECK(dominated <= 1);
            }
        }
    }
}

TEST_CASE("dominating sets") {
    IndependencePair m = fixtures::m1();
    auto ones = dominating_set(m, nf(m, "a"));
    REQUIRE(ones.size() == 2);
    CHECK(format_trace(m, ones[0]) == "a");
    CHECK(format_trace(m, ones[1]) == "a.b");

    auto only = dominating_set(m, nf(m, "c"));
    REQUIRE(only.size() == 1);
    CHECK(format_trace(m, only[0]) == "c");

    auto ca = dominating_set(m, nf(m, "ca"));
    REQUIRE(ca.size() == 2);
    CHECK(format_trace(m, ca[0]) == "c|a");
    CHECK(format_trace(m, ca[1]) == "c|a.b");

    CHECK_THROWS_AS(dominating_set(m, Trace()), EmptyTrace);

    // Characterization: same height and dominating, nothing else.
    for (const auto& mm : {fixtures::m1(), fixtures::m2()}) {
        std::size_t max_clique = mm.enumerate_cliques().back().size();
        std::vector<std::vector<Trace>> by_len(3 * max_clique + 1);
        for (std::size_t len = 0; len < by_len.size(); ++len)
            by_len[len] = enumerate_traces(mm, len, by_len.size());
        for (std::size_t k = 1; k <= 3; ++k) {
            for (const Trace& u : by_len[k]) {
                std::set<Trace> got;
                for (const Trace& t : dominating_set(mm, u)) got.insert(t);
                std::set<Trace> want;
                for (std::size_t len = u.height(); len <= u.height() * max_clique; ++len)
                    for (const Trace& t : by_len[len])
                        if (t.height() == u.height() && leq(mm, u, t)) want.insert(t);
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("trace enumeration") {
    IndependencePair m = fixtures::m1();
    CHECK(enumerate_traces(m, 0).size() == 1);
    CHECK(enumerate_traces(m, 1).size() == 3);
    CHECK(enumerate_traces(m, 2).size() == 8);
    CHECK(enumerate_traces(m, 3).size() == 21);
    auto two = enumerate_traces(m, 2);
    std::set<Trace> uniq(two.begin(), two.end());
    CHECK(uniq.size() == two.size());
    for (const Trace& t : two) CHECK(t.length() == 2);
    CHECK_THROWS_AS(enumerate_traces(m, 9), CombinatorialBlowup);
    CHECK(enumerate_traces(m, 9, 9).size() > 0);
}

TEST_CASE("word parsing") {
    IndependencePair m = fixtures::m1();
    CHECK(parse_word(m, "acba") == nf(m, "acba"));
    CHECK(parse_word(m, "a c b a") == parse_word(m, "acba"));
    CHECK(parse_word(m, "") == Trace());
    CHECK_THROWS_AS(parse_word(m, "axb"), ValidationError);

    IndependencePair multi =
        IndependencePair::make({"x1", "x2", "x12"}, {{"x1", "x2"}});
    CHECK(parse_word(multi, "x1 x2").length() == 2);
    // Greedy longest match picks x12 over x1 followed by junk.
    CHECK(parse_word(multi, "x12x1").length() == 2);
    CHECK(parse_word(multi, "x12x1").word()[0] == 2);
}

TEST_CASE("trace serialization format") {
    IndependencePair m = fixtures::m2();
    Trace t = parse_word(m, "a1 a3 a2");
    CHECK(format_trace(m, t) == "a1.a3|a2");
    CHECK(format_trace(m, Trace()) == "ε");
}
