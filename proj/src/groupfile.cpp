#include "nil2/groupfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "nil2/errors.hpp"

namespace nil2 {

namespace {

struct Token {
    std::string text;
    std::size_t line, col;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c)) || c == ';') {
            ++col;
            ++i;
            continue;
        }
        const std::size_t start = i, startcol = col;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != ';' && text[i] != '#') {
            ++i;
            ++col;
        }
        tokens.push_back({std::string(text.substr(start, i - start)), line, startcol});
    }
    return tokens;
}

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    bool done() const { return pos_ >= tokens_.size(); }
    const Token& peek() const {
        if (done()) throw SyntaxError(last_line(), last_col(), "unexpected end of input");
        return tokens_[pos_];
    }
    Token next() {
        const Token t = peek();
        ++pos_;
        return t;
    }
    void expect_keyword(const std::string& kw) {
        const Token t = next();
        if (t.text != kw)
            throw SyntaxError(t.line, t.col, "expected '" + kw + "', found '" + t.text + "'");
    }
    std::size_t expect_count(const std::string& what) {
        const Token t = next();
        try {
            std::size_t idx = 0;
            const long v = std::stol(t.text, &idx);
            if (idx != t.text.size() || v < 0) throw std::invalid_argument(what);
            return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw SyntaxError(t.line, t.col, "expected a nonnegative integer for " + what);
        }
    }
    Rational expect_rational() {
        const Token t = next();
        const auto q = parse_rational(t.text);
        if (!q) throw SyntaxError(t.line, t.col, "'" + t.text + "' is not a rational");
        return *q;
    }

private:
    std::size_t last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }
    std::size_t last_col() const {
        return tokens_.empty() ? 1 : tokens_.back().col + tokens_.back().text.size();
    }
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ClassTwoGroup parse_group_text(std::string_view text) {
    TokenStream ts(tokenize(text));
    ts.expect_keyword("group");
    const std::string name = ts.next().text;
    ts.expect_keyword("dimV");
    const std::size_t dimV = ts.expect_count("dimV");
    ts.expect_keyword("dimW");
    const std::size_t dimW = ts.expect_count("dimW");

    std::vector<RatMatrix> matrices;
    for (std::size_t t = 0; t < dimW; ++t) {
        ts.expect_keyword("bracket");
        ts.next();  // block label, informational only
        RatMatrix m(dimV, dimV);
        for (std::size_t i = 0; i < dimV; ++i)
            for (std::size_t j = 0; j < dimV; ++j) m(i, j) = ts.expect_rational();
        matrices.push_back(std::move(m));
    }
    if (!ts.done()) {
        const Token& t = ts.peek();
        throw SyntaxError(t.line, t.col, "trailing input '" + t.text + "'");
    }
    return make_group(name, dimV, dimW, matrices);
}

ClassTwoGroup parse_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_text(buf.str());
}

std::string serialize_group(const ClassTwoGroup& g) {
    std::ostringstream os;
    os << "group " << g.name() << "\n";
    os << "dimV " << g.dimV() << "\n";
    os << "dimW " << g.dimW() << "\n";
    for (std::size_t t = 0; t < g.dimW(); ++t) {
        os << "bracket w" << (t + 1) << "\n";
        os << g.pencil().coord(t).matrix().to_string();
    }
    return os.str();
}

namespace {

struct ExprParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(1, pos + 1, "element expression: " + msg);
    }
    std::size_t parse_index() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an index");
        return static_cast<std::size_t>(std::stoul(std::string(text.substr(start, pos - start))));
    }
    Rational parse_exponent() {
        skip_ws();
        const bool parens = eat('(');
        skip_ws();
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        const auto q = parse_rational(text.substr(start, pos - start));
        if (!q) fail("expected a rational exponent");
        if (parens && !eat(')')) fail("expected ')'");
        return *q;
    }
};

}  // namespace

LieElement parse_element(const ClassTwoGroup& g, std::string_view text) {
    ExprParser p{text};
    LieElement acc = g.identity();
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos >= p.text.size()) {
            if (first) p.fail("empty expression");
            break;
        }
        if (!first && !p.eat('*')) p.fail("expected '*' between terms");
        p.skip_ws();
        if (p.pos >= p.text.size()) p.fail("dangling '*'");

        const char c = p.text[p.pos];
        LieElement base = g.identity();
        if (c == 'x') {
            ++p.pos;
            const std::size_t i = p.parse_index();
            if (i < 1 || i > g.dimV()) p.fail("generator index out of range");
            base = g.basis_v(i - 1);
        } else if (c == 'c') {
            ++p.pos;
            if (!p.eat('(')) p.fail("expected '(' after c");
            const std::size_t i = p.parse_index();
            if (!p.eat(',')) p.fail("expected ',' in c(i,j)");
            const std::size_t j = p.parse_index();
            if (!p.eat(')')) p.fail("expected ')' in c(i,j)");
            if (i < 1 || j < 1 || i > g.dimV() || j > g.dimV() || i == j)
                p.fail("central pair out of range");
            RatVec ei(g.dimV()), ej(g.dimV());
            ei[i - 1] = 1;
            ej[j - 1] = 1;
            base = g.element(RatVec(g.dimV()), g.bracket(ei, ej));
        } else {
            p.fail("expected a term starting with 'x' or 'c'");
        }
        Rational exponent = 1;
        if (p.eat('^')) exponent = p.parse_exponent();
        acc = bch_mul(acc, bch_pow(base, exponent));
        first = false;
    }
    return acc;
}

}  // namespace nil2
