#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace inertia {

/// Generator letters. T, S, R, R^-1 form the ambient alphabet (maps of the
/// whole (P^1)^{n+1}); I is the restricted alphabet (covering involutions of
/// X). The two alphabets never mix within one word.
enum class Gen { Tau, Sigma, Rho, RhoInv, Iota };

struct Letter {
    Gen kind;
    std::size_t axis; // 0-based; the text grammar is 1-based

    bool operator==(const Letter& o) const { return kind == o.kind && axis == o.axis; }
};

/// A composition word. The leftmost letter is applied last, matching the
/// usual composition order: "R1 R2" means (map of R1) after (map of R2).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool restricted() const; // true when made of I letters
    bool operator==(const Word& o) const { return letters_ == o.letters_; }

    std::string to_string() const;

private:
    std::vector<Letter> letters_;
};

/// Grammar: whitespace-separated tokens ('T'|'S'|'R'|'I') axis-digits
/// ('^' signed-integer)?. Exponents default to 1; powers expand letterwise
/// (R2^-3 is three R2^-1 letters). T, S, I admit only exponents 1 and -1
/// (each meaning the involution itself); R admits any nonzero exponent.
Word parse_word(std::string_view text, std::size_t n_plus_1);

/// Free reduction of a word in the R letters: adjacent mutually inverse
/// pairs on one axis cancel until none remain. The result is the unique
/// reduced form.
Word reduce_rho_free(const Word& w);

/// Reduction in the free product of order-two groups: adjacent equal I
/// letters cancel. The result is the unique reduced form.
Word uc_reduce(const Word& w);

/// Restriction of an ambient word to X: T and S letters become the covering
/// involution I on their axis, R and R^-1 letters restrict to the identity
/// and vanish; the image is then uc-reduced. For instances passing the
/// genericity proxy, an ambient word acts as the identity on X exactly when
/// the result is empty.
Word restrict_to_x(const Word& w);

} // namespace inertia
