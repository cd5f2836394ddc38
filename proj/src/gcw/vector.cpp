#include "gcw/vector.hpp"

#include <sstream>

namespace gcw {

void GraphVector::add(const Graph& g, const Rat& c) {
    if (c == 0) return;
    if (!key_allowed(g))
        throw std::invalid_argument("graph does not belong to this vector's context");
    if (trunc > 0 && g.nv > trunc) return;
    Canon cn = canonicalize(g);
    if (cn.zero) return;
    add_term(cn.graph, cn.sign > 0 ? c : -c);
}

void GraphVector::add_term(const Graph& key, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

void GraphVector::add_scaled(const GraphVector& other, const Rat& c) {
    if (c == 0) return;
    for (const auto& [k, v] : other.terms) add_term(k, v * c);
}

void GraphVector::negate() {
    for (auto& [k, v] : terms) v = -v;
}

void GraphVector::truncate(int bound) {
    trunc = bound;
    if (bound <= 0) return;
    for (auto it = terms.begin(); it != terms.end();)
        it = it->first.nv > bound ? terms.erase(it) : std::next(it);
}

Rat GraphVector::coeff(const Graph& key) const {
    auto it = terms.find(key);
    return it == terms.end() ? Rat(0) : it->second;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::vector<std::string> GraphVector::to_lines() const {
    std::vector<std::string> out;
    out.reserve(terms.size());
    for (const auto& [k, v] : terms) out.push_back(rat_str(v) + ";" + encode(k));
    return out;
}

GraphVector GraphVector::from_lines(Flavor family, int d,
                                    const std::vector<std::string>& lines) {
    GraphVector x(family, d);
    for (const std::string& line : lines) {
        auto semi = line.find(';');
        if (semi == std::string::npos)
            throw std::runtime_error("vector line missing coefficient: " + line);
        x.add(decode(line.substr(semi + 1)), parse_rat(line.substr(0, semi)));
    }
    return x;
}

} // namespace gcw
