#include "rp2braid/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rp2braid {

std::string to_string(const Generator& g) {
    switch (g.family) {
    case Family::sigma: return "s" + std::to_string(g.i);
    case Family::rho: return "r" + std::to_string(g.i);
    case Family::tau: return "t" + std::to_string(g.i);
    case Family::q: return "q" + std::to_string(g.i);
    case Family::B: return "B" + std::to_string(g.i) + "_" + std::to_string(g.j);
    }
    return "?";
}

std::int64_t Word::length() const {
    std::int64_t n = 0;
    for (const auto& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
    return n;
}

namespace {

int read_index(const std::string& tok, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("bad token '" + tok + "': expected index");
    if (tok[start] == '0') throw std::invalid_argument("bad token '" + tok + "': index must be positive without leading zeros");
    if (pos - start > 9) throw std::invalid_argument("bad token '" + tok + "': index too large");
    return std::stoi(tok.substr(start, pos - start));
}

Letter parse_token(const std::string& tok) {
    Letter l;
    std::size_t pos = 1;
    switch (tok[0]) {
    case 's': l.gen.family = Family::sigma; break;
    case 'r': l.gen.family = Family::rho; break;
    case 't': l.gen.family = Family::tau; break;
    case 'q': l.gen.family = Family::q; break;
    case 'B': l.gen.family = Family::B; break;
    default: throw std::invalid_argument("bad token '" + tok + "': unknown generator family");
    }
    l.gen.i = read_index(tok, pos);
    if (l.gen.family == Family::B) {
        if (pos >= tok.size() || tok[pos] != '_') throw std::invalid_argument("bad token '" + tok + "': B needs i_j");
        ++pos;
        l.gen.j = read_index(tok, pos);
        if (l.gen.i >= l.gen.j) throw std::invalid_argument("bad token '" + tok + "': B needs i < j");
    }
    if (pos < tok.size()) {
        if (tok[pos] != '^') throw std::invalid_argument("bad token '" + tok + "'");
        std::string e = tok.substr(pos + 1);
        std::size_t used = 0;
        try {
            l.exp = std::stoll(e, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad token '" + tok + "': bad exponent");
        }
        if (used != e.size() || e.empty() || e[0] == '+') throw std::invalid_argument("bad token '" + tok + "': bad exponent");
        if (l.exp == 0) throw std::invalid_argument("bad token '" + tok + "': zero exponent");
    }
    return l;
}

}  // namespace

Word Word::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    Word w;
    while (in >> tok) w.letters_.push_back(parse_token(tok));
    return w;
}

std::string Word::str() const {
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ' ';
        out += to_string(l.gen);
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

Word free_reduce(const Word& w) {
    std::vector<Letter> st;
    st.reserve(w.runs());
    for (const auto& l : w.letters()) {
        if (l.exp == 0) continue;
        if (!st.empty() && st.back().gen == l.gen) {
            st.back().exp += l.exp;
            if (st.back().exp == 0) st.pop_back();
        } else {
            st.push_back(l);
        }
    }
    return Word(std::move(st));
}

bool is_freely_reduced(const Word& w) {
    const auto& ls = w.letters();
    for (std::size_t k = 0; k < ls.size(); ++k) {
        if (ls[k].exp == 0) return false;
        if (k > 0 && ls[k - 1].gen == ls[k].gen) return false;
    }
    return true;
}

Word invert(const Word& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (auto& l : out) l.exp = -l.exp;
    return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.append(b);
    return free_reduce(w);
}

Word power(const Word& w, std::int64_t k) {
    Word base = k < 0 ? invert(w) : w;
    if (k < 0) k = -k;
    Word out;
    for (std::int64_t t = 0; t < k; ++t) out.append(base);
    return free_reduce(out);
}

Word commutator(const Word& a, const Word& b) {
    return product({a, b, invert(a), invert(b)});
}

Word product(const std::vector<Word>& ws) {
    Word out;
    for (const auto& w : ws) out.append(w);
    return free_reduce(out);
}

Word apply_morphism(const Word& w, const Morphism& images) {
    Word out;
    for (const auto& l : w.letters()) {
        auto it = images.find(l.gen);
        if (it == images.end()) throw std::invalid_argument("no image for generator " + to_string(l.gen));
        out.append(power(it->second, l.exp));
    }
    return free_reduce(out);
}

std::vector<std::int64_t> exponent_vector(const Word& w, const std::vector<Generator>& ordering) {
    std::map<Generator, std::size_t> pos;
    for (std::size_t k = 0; k < ordering.size(); ++k) pos.emplace(ordering[k], k);
    std::vector<std::int64_t> v(ordering.size(), 0);
    for (const auto& l : w.letters()) {
        auto it = pos.find(l.gen);
        if (it == pos.end()) throw std::invalid_argument("generator " + to_string(l.gen) + " not in ordering");
        v[it->second] += l.exp;
    }
    return v;
}

}  // namespace rp2braid
