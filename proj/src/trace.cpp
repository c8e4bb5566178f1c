#include "tracemonoid/trace.hpp"

#include <algorithm>
#include <cctype>

#include "tracemonoid/errors.hpp"

namespace tracemonoid {

Trace Trace::from_cliques(const IndependencePair& m, std::vector<Clique> cf) {
    for (std::size_t i = 0; i < cf.size(); ++i) {
        if (cf[i].empty())
            throw NotAdmissible(i, "normal form contains an empty clique at index " +
                                       std::to_string(i));
        if (i > 0 && !m.cf_admissible(cf[i - 1], cf[i]))
            throw NotAdmissible(i, "cliques " + m.clique_name(cf[i - 1]) + " -> " +
                                       m.clique_name(cf[i]) + " are not admissible");
    }
    Trace u;
    u.cf_ = std::move(cf);
    for (const Clique& c : u.cf_) u.length_ += c.size();
    return u;
}

std::vector<std::uint32_t> Trace::word() const {
    std::vector<std::uint32_t> w;
    w.reserve(length_);
    for (const Clique& c : cf_)
        for (std::uint32_t a : c.members()) w.push_back(a);
    return w;
}

bool Trace::operator<(const Trace& other) const {
    if (cf_.size() != other.cf_.size()) return cf_.size() < other.cf_.size();
    for (std::size_t i = 0; i < cf_.size(); ++i) {
        if (cf_[i] != other.cf_[i]) return cf_[i] < other.cf_[i];
    }
    return false;
}

namespace {

// Drop one letter onto a stack of layers: it lands just above the highest
// layer holding a letter it depends on.  Letters already placed are never
// moved, so each adjacent pair of layers keeps a dependence witness and the
// stack stays a valid normal form.
void insert_letter(const IndependencePair& m, std::vector<Clique>& layers,
                   std::uint32_t a) {
    const Clique& dep = m.dependent_set(a);
    std::size_t lvl = layers.size();
    while (lvl > 0 && !layers[lvl - 1].intersects(dep)) --lvl;
    if (lvl == layers.size()) layers.push_back(Clique(m.letter_count()));
    layers[lvl].add(a);
}

} // namespace

Trace normal_form(const IndependencePair& m, std::span<const std::uint32_t> word) {
    std::vector<Clique> layers;
    for (std::uint32_t a : word) {
        if (a >= m.letter_count())
            throw ValidationError("letter index out of range");
        insert_letter(m, layers, a);
    }
    Trace u;
    u.cf_ = std::move(layers);
    u.length_ = word.size();
    return u;
}

Trace concat(const IndependencePair& m, const Trace& u, const Trace& v) {
    std::vector<Clique> layers = u.cliques();
    for (const Clique& c : v.cliques())
        for (std::uint32_t a : c.members()) insert_letter(m, layers, a);
    Trace w;
    w.cf_ = std::move(layers);
    w.length_ = u.length() + v.length();
    return w;
}

bool leq(const IndependencePair& m, const Trace& u, const Trace& v) {
    const auto& c = u.cliques();
    const auto& d = v.cliques();
    std::size_t n = c.size();
    if (n > d.size()) return false;
    // Layer-wise criterion: each layer of v must extend the matching layer
    // of u by letters parallel to that layer and to every later layer of u.
    for (std::size_t i = 0; i < n; ++i) {
        if (!c[i].subset_of(d[i])) return false;
        Clique extra = d[i].minus(c[i]);
        if (extra.empty()) continue;
        for (std::size_t j = i; j < n; ++j)
            if (!m.parallel(extra, c[j])) return false;
    }
    return true;
}

Trace residual(const IndependencePair& m, const Trace& u, const Trace& v) {
    if (!leq(m, u, v))
        throw NotAPrefix("trace is not a prefix of the target");
    // Strip the letters of u off the front of v.  A letter divides a trace
    // exactly when it lies in the first layer; removing it re-normalizes
    // the remainder.
    Trace w = v;
    for (std::uint32_t a : u.word()) {
        std::vector<Clique> layers = w.cliques();
        // leq guarantees membership.
        layers[0].remove(a);
        std::vector<Clique> rebuilt;
        if (!layers[0].empty()) rebuilt.push_back(layers[0]);
        for (std::size_t i = 1; i < layers.size(); ++i)
            for (std::uint32_t b : layers[i].members()) insert_letter(m, rebuilt, b);
        Trace next;
        next.cf_ = std::move(rebuilt);
        next.length_ = w.length() - 1;
        std::swap(w, next);
    }
    return w;
}

Trace cut(const IndependencePair& m, const Trace& u, std::size_t p) {
    if (p >= u.height()) return u;
    // The head of a normal form is a normal form.
    std::vector<Clique> head(u.cliques().begin(), u.cliques().begin() + p);
    return Trace::from_cliques(m, std::move(head));
}

Trace mirror(const IndependencePair& m, const Trace& u) {
    std::vector<std::uint32_t> w = u.word();
    std::reverse(w.begin(), w.end());
    return normal_form(m, w);
}

Trace hat_trace(const IndependencePair& m) {
    if (!m.is_irreducible())
        throw Reducible("separating word requires a connected dependence graph");
    std::size_t n = m.letter_count();
    // Walk the dependence graph from the first letter, appending a shortest
    // detour to the nearest unvisited letter until all are covered.
    std::vector<std::uint32_t> walk{0};
    std::vector<char> visited(n, 0);
    visited[0] = 1;
    std::size_t covered = 1;
    while (covered < n) {
        std::uint32_t start = walk.back();
        // BFS for the closest unvisited letter.
        std::vector<std::int64_t> parent(n, -1);
        std::vector<std::uint32_t> queue{start};
        parent[start] = start;
        std::int64_t goal = -1;
        for (std::size_t qi = 0; qi < queue.size() && goal < 0; ++qi) {
            std::uint32_t x = queue[qi];
            for (std::uint32_t y : m.dependent_set(x).members()) {
                if (y == x || parent[y] >= 0) continue;
                parent[y] = x;
                if (!visited[y]) {
                    goal = y;
                    break;
                }
                queue.push_back(y);
            }
        }
        std::vector<std::uint32_t> path;
        for (std::uint32_t x = static_cast<std::uint32_t>(goal); x != start;
             x = static_cast<std::uint32_t>(parent[x]))
            path.push_back(x);
        std::reverse(path.begin(), path.end());
        for (std::uint32_t x : path) {
            walk.push_back(x);
            if (!visited[x]) {
                visited[x] = 1;
                ++covered;
            }
        }
    }
    // The walk followed by its reverse without the final vertex.
    std::vector<std::uint32_t> word = walk;
    for (std::size_t i = walk.size() - 1; i-- > 0;) word.push_back(walk[i]);
    return normal_form(m, word);
}

namespace {

// Cliques over a restricted letter set, in canonical order.
std::vector<Clique> cliques_within(const IndependencePair& m, const Clique& allowed) {
    std::vector<Clique> out;
    out.push_back(Clique(m.letter_count()));
    struct Frame {
        Clique clique;
        Clique candidates;
    };
    std::vector<Frame> stack;
    stack.push_back({Clique(m.letter_count()), allowed});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        for (std::uint32_t a : f.candidates.members()) {
            Clique c = f.clique;
            c.add(a);
            out.push_back(c);
            Clique rest = f.candidates.intersect(m.independent_set(a));
            Clique above(m.letter_count());
            for (std::uint32_t b : rest.members())
                if (b > a) above.add(b);
            stack.push_back({c, above});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Trace> dominating_set(const IndependencePair& m, const Trace& u) {
    if (u.empty()) throw EmptyTrace("dominating set requires a non-empty trace");
    const auto& c = u.cliques();
    std::size_t n = c.size();

    // Letters usable at layer i: parallel to layers i..n-1 of u.
    std::vector<Clique> allowed(n, Clique(m.letter_count()));
    for (std::uint32_t a = 0; a < m.letter_count(); ++a) {
        std::size_t i = n;
        while (i > 0 && m.parallel_letter(a, c[i - 1])) --i;
        // a is parallel to layers i..n-1.
        for (std::size_t j = i; j < n; ++j) allowed[j].add(a);
    }

    std::vector<std::vector<Clique>> choices(n);
    for (std::size_t i = 0; i < n; ++i) choices[i] = cliques_within(m, allowed[i]);

    std::vector<Trace> out;
    std::vector<Clique> current(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.push_back(Trace::from_cliques(m, current));
            return;
        }
        for (const Clique& g : choices[i]) {
            Clique d = c[i].united(g);
            if (i > 0 && !m.cf_admissible(current[i - 1], d)) continue;
            current[i] = d;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Trace> enumerate_traces(const IndependencePair& m, std::size_t k,
                                    std::size_t k_cap) {
    if (k > k_cap)
        throw CombinatorialBlowup("trace enumeration length " + std::to_string(k) +
                                  " exceeds cap " + std::to_string(k_cap));
    std::vector<Trace> out;
    Clique all(m.letter_count());
    for (std::uint32_t i = 0; i < m.letter_count(); ++i) all.add(i);
    std::vector<Clique> nonempty;
    for (const Clique& c : cliques_within(m, all))
        if (!c.empty()) nonempty.push_back(c);

    std::vector<Clique> current;
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(Trace::from_cliques(m, current));
            return;
        }
        for (const Clique& c : nonempty) {
            if (c.size() > remaining) continue;
            if (!current.empty() && !m.cf_admissible(current.back(), c)) continue;
            current.push_back(c);
            self(self, remaining - c.size());
            current.pop_back();
        }
    };
    rec(rec, k);
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_trace(const IndependencePair& m, const Trace& u) {
    if (u.empty()) return "ε";
    std::string out;
    for (const Clique& c : u.cliques()) {
        if (!out.empty()) out += '|';
        out += m.clique_name(c);
    }
    return out;
}

Trace parse_word(const IndependencePair& m, std::string_view text) {
    std::vector<std::uint32_t> word;
    bool has_ws = std::any_of(text.begin(), text.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c));
    });
    if (has_ws) {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            if (j > i) word.push_back(m.index_of(text.substr(i, j - i)));
            i = j;
        }
    } else {
        // Greedy longest match over the declared names.
        std::size_t i = 0;
        while (i < text.size()) {
            std::size_t best = 0;
            for (const std::string& name : m.letters()) {
                if (name.size() > best && text.size() - i >= name.size() &&
                    text.substr(i, name.size()) == name)
                    best = name.size();
            }
            if (best == 0)
                throw ValidationError("cannot tokenize word at position " +
                                      std::to_string(i) + ": '" +
                                      std::string(text.substr(i)) + "'");
            word.push_back(m.index_of(text.substr(i, best)));
            i += best;
        }
    }
    return normal_form(m, word);
}

} // namespace tracemonoid
