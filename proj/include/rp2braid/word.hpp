#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rp2braid {

enum class Family : std::uint8_t { B = 0, rho = 1, sigma = 2, tau = 3, q = 4 };

// B carries the pair (i, j); the other families use i only.
struct Generator {
    Family family = Family::sigma;
    int i = 0;
    int j = 0;

    auto operator<=>(const Generator&) const = default;

    static Generator sigma(int i) { return {Family::sigma, i, 0}; }
    static Generator rho(int i) { return {Family::rho, i, 0}; }
    static Generator tau(int i) { return {Family::tau, i, 0}; }
    static Generator q(int i) { return {Family::q, i, 0}; }
    static Generator B(int i, int j) { return {Family::B, i, j}; }
};

std::string to_string(const Generator& g);

struct Letter {
    Generator gen;
    std::int64_t exp = 1;
    bool operator==(const Letter&) const = default;
};

// Exponent runs. Construction does not reduce; call free_reduce.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(Generator g, std::int64_t e = 1) { if (e != 0) letters_.push_back({g, e}); }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t runs() const { return letters_.size(); }
    // total number of letters counted with multiplicity
    std::int64_t length() const;

    void push(Generator g, std::int64_t e = 1) { if (e != 0) letters_.push_back({g, e}); }
    void append(const Word& w) { letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end()); }

    bool operator==(const Word&) const = default;

    static Word parse(const std::string& text);
    std::string str() const;

private:
    std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, std::int64_t k);
// a b a^-1 b^-1, reduced
Word commutator(const Word& a, const Word& b);

using Morphism = std::map<Generator, Word>;
Word apply_morphism(const Word& w, const Morphism& images);

std::vector<std::int64_t> exponent_vector(const Word& w, const std::vector<Generator>& ordering);

// Product of a list of words, reduced.
Word product(const std::vector<Word>& ws);

}  // namespace rp2braid
