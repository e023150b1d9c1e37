#include "inertia/words.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>

#include "inertia/error.hpp"

namespace inertia {

namespace {

bool is_iota(const Letter& l) { return l.kind == Gen::Iota; }

void check_alphabet(const std::vector<Letter>& letters) {
    bool any_iota = false, any_ambient = false;
    for (const Letter& l : letters) (is_iota(l) ? any_iota : any_ambient) = true;
    if (any_iota && any_ambient)
        throw structural_error("word mixes the restricted I alphabet with ambient letters");
}

char kind_char(Gen g) {
    switch (g) {
        case Gen::Tau: return 'T';
        case Gen::Sigma: return 'S';
        case Gen::Rho:
        case Gen::RhoInv: return 'R';
        case Gen::Iota: return 'I';
    }
    return '?';
}

bool cancels(const Letter& a, const Letter& b) {
    if (a.axis != b.axis) return false;
    if (a.kind == Gen::Rho && b.kind == Gen::RhoInv) return true;
    if (a.kind == Gen::RhoInv && b.kind == Gen::Rho) return true;
    return false;
}

Word stack_reduce(const Word& w, bool (*cancel)(const Letter&, const Letter&)) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters()) {
        if (!out.empty() && cancel(out.back(), l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(std::move(out));
}

} // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    check_alphabet(letters_);
}

bool Word::restricted() const {
    for (const Letter& l : letters_)
        if (!is_iota(l)) return false;
    return !letters_.empty();
}

std::string Word::to_string() const {
    std::string s;
    for (const Letter& l : letters_) {
        if (!s.empty()) s += " ";
        s += kind_char(l.kind);
        s += std::to_string(l.axis + 1);
        if (l.kind == Gen::RhoInv) s += "^-1";
    }
    return s;
}

Word parse_word(std::string_view text, std::size_t n_plus_1) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string_view tok = text.substr(start, pos - start);

        Gen kind;
        switch (tok[0]) {
            case 'T': kind = Gen::Tau; break;
            case 'S': kind = Gen::Sigma; break;
            case 'R': kind = Gen::Rho; break;
            case 'I': kind = Gen::Iota; break;
            default:
                throw parse_error("unknown generator token '" + std::string(tok) + "'");
        }

        std::size_t caret = tok.find('^');
        std::string_view axis_text = tok.substr(1, caret == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : caret - 1);
        std::uint64_t axis = 0;
        {
            auto [p, ec] = std::from_chars(axis_text.data(), axis_text.data() + axis_text.size(),
                                           axis);
            if (ec != std::errc{} || p != axis_text.data() + axis_text.size() ||
                axis_text.empty())
                throw parse_error("bad axis in token '" + std::string(tok) + "'");
        }
        if (axis < 1 || axis > n_plus_1)
            throw parse_error("axis " + std::to_string(axis) + " out of range 1.." +
                              std::to_string(n_plus_1) + " in token '" + std::string(tok) + "'");

        std::int64_t exp = 1;
        if (caret != std::string_view::npos) {
            std::string_view exp_text = tok.substr(caret + 1);
            auto [p, ec] =
                std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exp);
            if (ec != std::errc{} || p != exp_text.data() + exp_text.size() || exp_text.empty())
                throw parse_error("bad exponent in token '" + std::string(tok) + "'");
        }
        if (exp == 0)
            throw parse_error("zero exponent in token '" + std::string(tok) + "'");
        if (kind != Gen::Rho && (exp != 1 && exp != -1))
            throw parse_error("involution letters admit only exponent 1 or -1, got '" +
                              std::string(tok) + "'");

        Gen expanded = kind;
        std::int64_t count = exp;
        if (kind == Gen::Rho && exp < 0) {
            expanded = Gen::RhoInv;
            count = -exp;
        }
        if (kind != Gen::Rho) count = 1; // an involution equals its inverse
        for (std::int64_t i = 0; i < count; ++i)
            letters.push_back(Letter{expanded, static_cast<std::size_t>(axis - 1)});
    }
    return Word(std::move(letters));
}

Word reduce_rho_free(const Word& w) {
    for (const Letter& l : w.letters())
        if (l.kind != Gen::Rho && l.kind != Gen::RhoInv)
            throw structural_error("free rho-reduction applies only to R words");
    return stack_reduce(w, cancels);
}

Word uc_reduce(const Word& w) {
    for (const Letter& l : w.letters())
        if (l.kind != Gen::Iota)
            throw structural_error("uc reduction applies only to I words");
    return stack_reduce(w, [](const Letter& a, const Letter& b) { return a == b; });
}

Word restrict_to_x(const Word& w) {
    std::vector<Letter> mapped;
    for (const Letter& l : w.letters()) {
        switch (l.kind) {
            case Gen::Tau:
            case Gen::Sigma:
                mapped.push_back(Letter{Gen::Iota, l.axis});
                break;
            case Gen::Rho:
            case Gen::RhoInv:
                break; // identity on X
            case Gen::Iota:
                throw structural_error("restricting a word that is already restricted");
        }
    }
    return uc_reduce(Word(std::move(mapped)));
}

} // namespace inertia
