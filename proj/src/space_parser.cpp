#include <cctype>
#include <limits>
#include <sstream>

#include "mcc/cohomology.hpp"

namespace mcc {

namespace {

// Shared cursor over the input; `base` shifts reported offsets for nested input.
class Cursor {
public:
    Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail({std::string("\"") + c + "\""});
    }
    std::size_t pos() const noexcept { return pos_; }
    void set_pos(std::size_t p) noexcept { pos_ = p; }
    std::string_view text() const noexcept { return text_; }
    std::size_t base() const noexcept { return base_; }

    std::string word() {
        skip_ws();
        std::size_t end = pos_;
        while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
        std::string w(text_.substr(pos_, end - pos_));
        pos_ = end;
        return w;
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    long unsigned_int() {
        if (!at_digit()) fail({"<int>"});
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const int d = text_[pos_] - '0';
            if (v > (std::numeric_limits<long>::max() - d) / 10) fail({"<int> in range"});
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    [[noreturn]] void fail(std::vector<std::string> expected, std::size_t at) const {
        std::string found = at < text_.size() ? "'" + std::string(1, text_[at]) + "'" : "end of input";
        throw ParseError(base_ + at, std::move(expected), found);
    }
    [[noreturn]] void fail(std::vector<std::string> expected) {
        skip_ws();
        fail(std::move(expected), pos_);
    }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

// expr := ['+'|'-'] term {('+'|'-') term}
// term := power {('*'|'/') power}
// power := atom ['^' int]
// atom := int | 't' | '(' expr ')'
class RatFunParser {
public:
    explicit RatFunParser(Cursor& c) : c_(c) {}

    RatFun expr() {
        RatFun acc;
        bool negate = false;
        if (c_.accept('-')) negate = true;
        else c_.accept('+');
        acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (c_.accept('+')) acc += term();
            else if (c_.accept('-')) acc -= term();
            else return acc;
        }
    }

private:
    RatFun term() {
        RatFun acc = power();
        for (;;) {
            if (c_.accept('*')) {
                acc *= power();
            } else if (c_.peek() == '/') {
                const std::size_t at = c_.pos();
                c_.accept('/');
                RatFun d = power();
                if (d.is_zero()) throw ParseError(c_.base() + at, {"nonzero divisor"}, "'/'");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RatFun power() {
        RatFun base = atom();
        if (c_.accept('^')) return pow(base, static_cast<unsigned>(c_.unsigned_int()));
        return base;
    }

    RatFun atom() {
        if (c_.at_digit()) return RatFun(IntPoly::constant(Integer(c_.unsigned_int())));
        if (c_.accept('t')) return RatFun::variable();
        if (c_.accept('(')) {
            RatFun inner = expr();
            c_.expect(')');
            return inner;
        }
        c_.fail({"<int>", "t", "\"(\""});
    }

    Cursor& c_;
};

class SpaceParser {
public:
    explicit SpaceParser(Cursor& c) : c_(c) {}

    SpacePtr space() {
        c_.skip_ws();
        const std::size_t start = c_.pos();
        const std::string w = c_.word();
        if (w == "pt") return point();
        if (w == "P") return proj(paren_iexpr());
        if (w == "WP") return weighted();
        if (w == "Gr") {
            c_.expect('(');
            IntExpr k = iexpr();
            c_.expect(',');
            IntExpr n = iexpr();
            c_.expect(')');
            return grass(k, n);
        }
        if (w == "prod") {
            c_.expect('(');
            SpacePtr left = space();
            c_.expect(',');
            SpacePtr right = space();
            c_.expect(')');
            return product(std::move(left), std::move(right));
        }
        if (w == "bundle") {
            c_.expect('(');
            keyword("fiber");
            SpacePtr fiber = space();
            c_.expect(',');
            keyword("base");
            SpacePtr base = space();
            c_.expect(')');
            return bundle(std::move(fiber), std::move(base));
        }
        if (w == "blowup") {
            c_.expect('(');
            SpacePtr ambient = space();
            c_.expect(',');
            keyword("center");
            SpacePtr center = space();
            c_.expect(',');
            keyword("codim");
            IntExpr codim = iexpr();
            c_.expect(')');
            return blowup(std::move(ambient), std::move(center), codim);
        }
        if (w == "contract") {
            c_.expect('(');
            SpacePtr total = space();
            c_.expect(',');
            keyword("base");
            SpacePtr base = space();
            c_.expect(',');
            keyword("fiberdim");
            IntExpr k = iexpr();
            c_.expect(')');
            return contract(std::move(total), std::move(base), k);
        }
        if (w == "lit") return lit();
        c_.fail({"pt", "P(", "WP(", "Gr(", "prod(", "bundle(", "blowup(", "contract(", "lit("}, start);
    }

private:
    void keyword(const char* name) {
        c_.skip_ws();
        const std::size_t start = c_.pos();
        if (c_.word() != name) c_.fail({std::string(name) + "="}, start);
        c_.expect('=');
    }

    IntExpr paren_iexpr() {
        c_.expect('(');
        IntExpr e = iexpr();
        c_.expect(')');
        return e;
    }

    // iexpr := [int '*'] 'r' [('+'|'-') int] | int   (a leading '-' is tolerated)
    IntExpr iexpr() {
        long sign = c_.accept('-') ? -1 : 1;
        if (c_.at_digit()) {
            const long v = sign * c_.unsigned_int();
            if (!c_.accept('*')) return IntExpr::constant(v);
            if (!c_.accept('r')) c_.fail({"r"});
            return IntExpr::of_r(v, offset());
        }
        if (c_.accept('r')) return IntExpr::of_r(sign, offset());
        c_.fail({"<int>", "r"});
    }

    long offset() {
        if (c_.accept('+')) return c_.unsigned_int();
        if (c_.accept('-')) return -c_.unsigned_int();
        return 0;
    }

    SpacePtr weighted() {
        c_.expect('(');
        std::vector<long> weights{c_.unsigned_int()};
        while (c_.accept(',')) weights.push_back(c_.unsigned_int());
        c_.expect(')');
        return wproj(std::move(weights));
    }

    SpacePtr lit() {
        c_.expect('(');
        // the rational function runs to the matching parenthesis
        const std::size_t start = c_.pos();
        const std::string_view text = c_.text();
        int depth = 1;
        std::size_t end = start;
        for (; end < text.size(); ++end) {
            if (text[end] == '(') ++depth;
            if (text[end] == ')' && --depth == 0) break;
        }
        if (end >= text.size()) c_.fail({"\")\""}, text.size());
        Cursor inner(text.substr(start, end - start), c_.base() + start);
        RatFunParser p(inner);
        RatFun value = p.expr();
        if (!inner.at_end()) inner.fail({"\"+\"", "\"-\"", "\"*\"", "\"/\"", "\")\""});
        c_.set_pos(end + 1);
        return literal(std::move(value));
    }

    Cursor& c_;
};

}  // namespace

SpacePtr parse_space(std::string_view text) {
    Cursor c(text);
    SpaceParser p(c);
    SpacePtr s = p.space();
    if (!c.at_end()) c.fail({"end of input"});
    return s;
}

SpacePtr parse_space_file(std::string_view contents) {
    std::string blanked(contents);
    bool comment = false;
    for (char& ch : blanked) {
        if (ch == '\n') comment = false;
        else if (ch == '#') comment = true;
        if (comment) ch = ' ';
    }
    return parse_space(blanked);
}

RatFun parse_ratfun(std::string_view text) {
    Cursor c(text);
    RatFunParser p(c);
    RatFun value = p.expr();
    if (!c.at_end()) c.fail({"\"+\"", "\"-\"", "\"*\"", "\"/\"", "end of input"});
    return value;
}

}  // namespace mcc
