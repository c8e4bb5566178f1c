#include "tracemonoid/independence_pair.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tracemonoid/errors.hpp"

namespace tracemonoid {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (!head(s[0])) return false;
    return std::all_of(s.begin() + 1, s.end(), tail);
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

IndependencePair IndependencePair::make(
    std::vector<std::string> letters,
    const std::vector<std::pair<std::string, std::string>>& independent) {
    // The empty alphabet is allowed here so that link alphabets of maximal
    // cliques exist; parsed inputs always declare at least one letter.
    IndependencePair m;
    for (const auto& name : letters) {
        if (!valid_name(name))
            throw ValidationError("invalid letter name '" + name + "'");
        auto [it, fresh] = m.index_.emplace(name, static_cast<std::uint32_t>(m.letters_.size()));
        if (!fresh) throw ValidationError("duplicate letter '" + name + "'");
        (void)it;
        m.letters_.push_back(name);
    }
    std::size_t n = m.letters_.size();
    m.indep_.assign(n, Clique(n));
    for (const auto& [a, b] : independent) {
        auto ia = m.index_.find(a);
        auto ib = m.index_.find(b);
        if (ia == m.index_.end())
            throw ValidationError("independent pair names undeclared letter '" + a + "'");
        if (ib == m.index_.end())
            throw ValidationError("independent pair names undeclared letter '" + b + "'");
        if (ia->second == ib->second)
            throw ValidationError("independence is irreflexive: pair (" + a + ", " + b + ")");
        m.indep_[ia->second].add(ib->second);
        m.indep_[ib->second].add(ia->second);
    }
    m.dep_.assign(n, Clique(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (!m.indep_[i].contains(j)) m.dep_[i].add(j);
    return m;
}

IndependencePair IndependencePair::parse(std::string_view text) {
    std::vector<std::string> letters;
    std::vector<std::pair<std::string, std::string>> pairs;
    bool seen_letters = false;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (!seen_letters) {
            if (toks[0] != "letters")
                throw ParseError(lineno, "expected 'letters <name>...' as the first declaration");
            if (toks.size() < 2)
                throw ParseError(lineno, "'letters' declares no letter");
            letters.assign(toks.begin() + 1, toks.end());
            for (const auto& name : letters)
                if (!valid_name(name))
                    throw ParseError(lineno, "invalid letter name '" + name + "'");
            seen_letters = true;
        } else if (toks[0] == "independent") {
            if (toks.size() != 3)
                throw ParseError(lineno, "expected 'independent <name> <name>'");
            pairs.emplace_back(toks[1], toks[2]);
        } else if (toks[0] == "letters") {
            throw ParseError(lineno, "duplicate 'letters' declaration");
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!seen_letters) throw ParseError("no 'letters' declaration found");
    return make(std::move(letters), pairs);
}

std::uint32_t IndependencePair::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw ValidationError("unknown letter '" + std::string(name) + "'");
    return it->second;
}

bool IndependencePair::has_letter(std::string_view name) const {
    return index_.find(name) != index_.end();
}

std::vector<std::pair<std::uint32_t, std::uint32_t>>
IndependencePair::independent_pairs() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t i = 0; i < letters_.size(); ++i)
        for (std::uint32_t j : indep_[i].members())
            if (i < j) out.emplace_back(i, j);
    return out;
}

bool IndependencePair::parallel(const Clique& c, const Clique& d) const {
    for (std::uint32_t a : c.members())
        if (!d.subset_of(indep_[a])) return false;
    return true;
}

bool IndependencePair::parallel_letter(std::uint32_t a, const Clique& c) const {
    return c.subset_of(indep_[a]);
}

bool IndependencePair::cf_admissible(const Clique& c, const Clique& d) const {
    for (std::uint32_t b : d.members())
        if (!c.intersects(dep_[b])) return false;
    return true;
}

bool IndependencePair::is_irreducible() const {
    std::size_t n = letters_.size();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t w : dep_[v].members()) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n;
}

std::vector<Clique> IndependencePair::enumerate_cliques(std::size_t cap) const {
    std::size_t n = letters_.size();
    std::vector<Clique> out;
    out.push_back(Clique(n));

    // Grow by letters above the current maximum that are independent of
    // every current member; the candidate set shrinks monotonically.
    struct Frame {
        Clique clique;
        Clique candidates;
        std::uint32_t from;
    };
    Clique all(n);
    for (std::uint32_t i = 0; i < n; ++i) all.add(i);
    std::vector<Frame> stack;
    stack.push_back({Clique(n), all, 0});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        for (std::uint32_t a : f.candidates.members()) {
            if (a < f.from) continue;
            Clique c = f.clique;
            c.add(a);
            if (out.size() >= cap)
                throw CombinatorialBlowup("clique enumeration exceeds cap of " +
                                          std::to_string(cap));
            out.push_back(c);
            stack.push_back({c, f.candidates.intersect(indep_[a]), a + 1});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

IndependencePair IndependencePair::link_alphabet(const Clique& c) const {
    Clique keep(letters_.size());
    for (std::uint32_t i = 0; i < letters_.size(); ++i)
        if (parallel_letter(i, c)) keep.add(i);
    std::vector<std::string> names;
    std::vector<std::uint32_t> old_of;
    for (std::uint32_t i : keep.members()) {
        names.push_back(letters_[i]);
        old_of.push_back(i);
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < old_of.size(); ++i)
        for (std::size_t j = i + 1; j < old_of.size(); ++j)
            if (independent(old_of[i], old_of[j]))
                pairs.emplace_back(names[i], names[j]);
    return make(std::move(names), pairs);
}

Clique IndependencePair::clique_of(const std::vector<std::string>& names) const {
    Clique c(letters_.size());
    for (const auto& name : names) {
        std::uint32_t i = index_of(name);
        if (c.contains(i))
            throw ValidationError("repeated letter '" + name + "' in clique");
        if (!parallel_letter(i, c))
            throw ValidationError("letters of a clique must be pairwise independent: '" +
                                  name + "' conflicts");
        c.add(i);
    }
    return c;
}

std::string IndependencePair::clique_name(const Clique& c) const {
    if (c.empty()) return "ε";
    std::string out;
    for (std::uint32_t i : c.members()) {
        if (!out.empty()) out += '.';
        out += letters_[i];
    }
    return out;
}

} // namespace tracemonoid
