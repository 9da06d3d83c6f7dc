#include "mld/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>

#include "mld/errors.hpp"

namespace mld {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else {
                break;
            }
        }
    }

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        ++pos_;
        ++col_;
    }

    bool digits_ahead() const { return !done() && peek() >= '0' && peek() <= '9'; }

    // Arbitrary length; only small values are meaningful but overflow must
    // not decide syntax.
    Integer read_integer() {
        std::string raw;
        while (digits_ahead()) {
            raw.push_back(peek());
            advance();
        }
        return Integer(raw);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("line " + std::to_string(line_) + ", column " + std::to_string(col_) +
                         ": " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// One "xi^k" factor; k omitted means 1. Repeated variables in a term add.
void read_power(Scanner& in, std::map<long, long>& exponents) {
    in.advance(); // the 'x'
    if (!in.digits_ahead()) in.fail("expected a variable index after 'x'");
    Integer index = in.read_integer();
    if (!index.fits_slong_p()) in.fail("variable index out of range");
    long k = 1;
    in.skip_space();
    if (!in.done() && in.peek() == '^') {
        in.advance();
        in.skip_space();
        if (!in.digits_ahead()) in.fail("expected an exponent after '^'");
        Integer e = in.read_integer();
        if (!e.fits_slong_p()) in.fail("exponent out of range");
        k = e.get_si();
    }
    exponents[index.get_si()] += k;
}

// term := coefficient | coefficient '*'? power-list | power-list,
// power-list := power ('*' power)*.
std::map<long, long> read_term(Scanner& in) {
    std::map<long, long> exponents;
    bool saw_factor = false;

    in.skip_space();
    if (in.digits_ahead()) {
        Integer coefficient = in.read_integer();
        if (coefficient == 0) in.fail("zero coefficient: the monomial's presence is ambiguous");
        saw_factor = true;
        in.skip_space();
        if (!in.done() && in.peek() == '*') {
            in.advance();
            in.skip_space();
            if (in.done() || in.peek() != 'x') in.fail("expected a power after '*'");
        }
    }

    while (!in.done() && in.peek() == 'x') {
        read_power(in, exponents);
        saw_factor = true;
        in.skip_space();
        if (!in.done() && in.peek() == '*') {
            in.advance();
            in.skip_space();
            if (in.done() || in.peek() != 'x') in.fail("expected a power after '*'");
        }
    }

    in.skip_space();
    if (!in.done() && in.peek() != '+') {
        if (in.peek() == '-') in.fail("'-' is not allowed; terms are joined by '+' only");
        in.fail(std::string("unexpected character '") + in.peek() + "'");
    }
    if (!saw_factor) in.fail("empty term");
    return exponents;
}

} // namespace

ParsedPolynomial parse_polynomial(std::string_view text, std::optional<int> dimension) {
    if (dimension && *dimension <= 0) throw InputError("dimension must be positive");

    Scanner in(text);
    std::vector<std::map<long, long>> terms;
    long max_index = -1;

    in.skip_space();
    if (in.done()) in.fail("empty polynomial");
    while (true) {
        std::map<long, long> term = read_term(in);
        if (!term.empty()) max_index = std::max(max_index, term.rbegin()->first);
        terms.push_back(std::move(term));
        in.skip_space();
        if (in.done()) break;
        in.advance(); // the '+'
        in.skip_space();
        if (in.done()) in.fail("trailing '+'");
    }

    ParsedPolynomial out;
    out.dimension = dimension ? *dimension : static_cast<int>(max_index + 1);
    if (max_index >= out.dimension)
        throw InputError("inconsistent variable count: x" + std::to_string(max_index) +
                         " does not fit in dimension " + std::to_string(out.dimension));

    for (const auto& term : terms) {
        Exponent e;
        e.e.assign(out.dimension, 0);
        for (const auto& [index, k] : term) e.e[index] = k;
        out.support.push_back(std::move(e));
    }
    std::sort(out.support.begin(), out.support.end());
    out.support.erase(std::unique(out.support.begin(), out.support.end()), out.support.end());
    return out;
}

} // namespace mld
