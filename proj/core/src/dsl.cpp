#include "legr/dsl.hpp"

#include "legr/errors.hpp"
#include "legr/json.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace legr {

namespace {

struct Token {
    enum Kind { Ident, Int, Punct, End } kind = End;
    std::string text;
    long long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip();
        Token t;
        t.line = line_;
        t.col = col_;
        if (i_ >= s_.size()) return t;
        char c = s_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Ident;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                t.text += take();
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
            t.kind = Token::Int;
            t.text += take();
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) t.text += take();
            if (t.text.size() > 10) throw SyntaxError(t.line, t.col, "integer too large: " + t.text);
            t.value = std::stoll(t.text);
            return t;
        }
        if (c == '{' || c == '}' || c == '[' || c == ']' || c == ',' || c == '+' || c == '-') {
            t.kind = Token::Punct;
            t.text += take();
            return t;
        }
        throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
    }

private:
    char take() {
        char c = s_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip() {
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (c == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { cur_ = lex_.next(); }

    FrontDiagram diagram() {
        FrontDiagram d;
        keyword("tangle");
        if (cur_.kind != Token::Ident) error("expected a tangle name");
        d.name = cur_.text;
        advance();
        punct("{");
        keyword("left");
        d.left_arity = integer();
        d.left_mu = int_list();
        while (!is_punct("}")) d.events.push_back(event());
        advance();
        if (cur_.kind != Token::End) error("trailing input after '}'");
        return d;
    }

private:
    [[noreturn]] void error(const std::string& msg) const { throw SyntaxError(cur_.line, cur_.col, msg); }
    void advance() { cur_ = lex_.next(); }
    bool is_punct(const char* p) const { return cur_.kind == Token::Punct && cur_.text == p; }
    bool is_ident(const char* p) const { return cur_.kind == Token::Ident && cur_.text == p; }

    void keyword(const char* k) {
        if (!is_ident(k)) error(std::string("expected '") + k + "'");
        advance();
    }
    void punct(const char* p) {
        if (!is_punct(p)) error(std::string("expected '") + p + "'");
        advance();
    }
    int integer() {
        if (cur_.kind != Token::Int) error("expected an integer");
        long long v = cur_.value;
        if (v < -1000000000LL || v > 1000000000LL) error("integer out of range");
        advance();
        return static_cast<int>(v);
    }
    std::vector<int> int_list() {
        punct("[");
        std::vector<int> out;
        if (is_punct("]")) {
            advance();
            return out;
        }
        out.push_back(integer());
        while (is_punct(",")) {
            advance();
            out.push_back(integer());
        }
        punct("]");
        return out;
    }

    SliceEvent event() {
        if (cur_.kind != Token::Ident) error("expected an event");
        const Token at = cur_;
        std::string k = cur_.text;
        advance();
        if (k == "L") {
            int i = integer();
            return SliceEvent::left_cusp(i, integer());
        }
        if (k == "R") {
            int i = integer();
            bool bp = is_ident("bp");
            if (bp) advance();
            return SliceEvent::right_cusp(i, bp);
        }
        if (k == "X") return SliceEvent::crossing(integer());
        if (k == "V") {
            int i = integer(), l = integer(), r = integer();
            std::vector<int> mu = int_list();
            bool lbp = is_ident("lbp");
            if (lbp) advance();
            return SliceEvent::vertex(i, l, r, std::move(mu), lbp);
        }
        if (k == "B") {
            int i = integer();
            if (is_punct("+")) {
                advance();
                return SliceEvent::base_point(i, 1);
            }
            if (is_punct("-")) {
                advance();
                return SliceEvent::base_point(i, -1);
            }
            error("expected '+' or '-'");
        }
        throw SyntaxError(at.line, at.col, "unknown event '" + k + "'");
    }

    Lexer lex_;
    Token cur_;
};

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << "]";
    return os.str();
}

}  // namespace

FrontDiagram parse(const std::string& text) {
    Parser p(text);
    return p.diagram();
}

FrontDiagram parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string serialize(const FrontDiagram& d) {
    std::ostringstream os;
    os << "tangle " << d.name << " {\n";
    os << "  left " << d.left_arity << " " << join(d.left_mu) << "\n";
    for (const auto& e : d.events) {
        os << "  ";
        switch (e.kind) {
        case EventKind::LeftCusp: os << "L " << e.pos << " " << e.mu; break;
        case EventKind::RightCusp: os << "R " << e.pos << (e.basepoint ? " bp" : ""); break;
        case EventKind::Crossing: os << "X " << e.pos; break;
        case EventKind::Vertex:
            os << "V " << e.pos << " " << e.left << " " << e.right << " " << join(e.right_mu)
               << (e.basepoint ? " lbp" : "");
            break;
        case EventKind::BasePoint: os << "B " << e.pos << (e.sign < 0 ? " -" : " +"); break;
        case EventKind::Marking: throw Error(ErrorCode::InvalidArgument, "markings cannot be serialized");
        }
        os << "\n";
    }
    os << "}\n";
    return os.str();
}

std::string polynomial_to_json(const QZPolynomial& p) { return json_of(p).dump(); }
std::string diagram_to_json(const FrontDiagram& d) { return json_of(d).dump(); }

}  // namespace legr
