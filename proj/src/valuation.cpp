#include "tracemonoid/valuation.hpp"

#include <cstdio>
#include <cstdlib>

#include "tracemonoid/errors.hpp"

namespace tracemonoid {

Valuation Valuation::make(const IndependencePair& m, std::vector<double> p) {
    if (p.size() != m.letter_count())
        throw ValidationError("valuation must assign every letter exactly once");
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!(p[i] > 0.0))
            throw ValidationError("characteristic number of '" + m.letter_name(
                                      static_cast<std::uint32_t>(i)) +
                                  "' must be positive");
    Valuation v;
    v.p_ = std::move(p);
    return v;
}

double Valuation::of(const Clique& c) const {
    double w = 1.0;
    for (std::uint32_t a : c.members()) w *= p_[a];
    return w;
}

double Valuation::of(const Trace& u) const {
    double w = 1.0;
    for (const Clique& c : u.cliques()) w *= of(c);
    return w;
}

Valuation parse_valuation(const IndependencePair& m, std::string_view text) {
    if (text == "uniform")
        throw ValidationError("'uniform' is a reserved valuation token");
    std::vector<double> p(m.letter_count(), 0.0);
    std::vector<char> seen(m.letter_count(), 0);
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view item = text.substr(i, j - i);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw ValidationError("expected '<letter>=<value>', got '" +
                                  std::string(item) + "'");
        std::string name(item.substr(0, eq));
        std::string num(item.substr(eq + 1));
        std::uint32_t a = m.index_of(name);
        if (seen[a]) throw ValidationError("letter '" + name + "' assigned twice");
        char* end = nullptr;
        double val = std::strtod(num.c_str(), &end);
        if (end == num.c_str() || *end != '\0')
            throw ValidationError("invalid number '" + num + "' for letter '" + name + "'");
        seen[a] = 1;
        p[a] = val;
        i = j + 1;
        if (j == text.size()) break;
    }
    for (std::size_t a = 0; a < seen.size(); ++a)
        if (!seen[a])
            throw ValidationError("letter '" + m.letter_name(static_cast<std::uint32_t>(a)) +
                                  "' is missing a value");
    return Valuation::make(m, std::move(p));
}

std::string format_valuation(const IndependencePair& m, const Valuation& v) {
    std::string out;
    char buf[64];
    for (std::uint32_t a = 0; a < m.letter_count(); ++a) {
        if (a) out += ',';
        std::snprintf(buf, sizeof buf, "%.12g", v.of_letter(a));
        out += m.letter_name(a);
        out += '=';
        out += buf;
    }
    return out;
}

} // namespace tracemonoid
