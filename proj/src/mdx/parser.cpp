#include "mdx/parser.hpp"

#include "mdx/errors.hpp"

#include <cctype>
#include <set>

/*
 * Script grammar. Statements end with ';', '#' comments run to end of line.
 *
 *   script    := { statement }
 *   statement := "chart" ident { "," ident } ";"
 *              | "ambient" int ";"
 *              | "graph" expr ";"
 *              | "let" ident "=" expr ";"
 *              | "assert" expr "==" expr ";"
 *              | "print" expr ";"
 *              | expr ";"                      (implicit print)
 *   expr      := term { ("+" | "-") term }
 *   term      := factor { ["*"] factor }       (juxtaposition multiplies)
 *   factor    := atom { "^" atom }
 *   atom      := number | ident | "@" ident | "-" atom | "(" expr ")"
 *              | fname "(" expr { (","|";") expr } ")"
 *   number    := int [ "/" int ]               (exact rational literal)
 *
 * fname is one of: d i L sn pairm pairp cb phi td jac pb pair emb adm.
 */

namespace mdx {

namespace {

const std::set<std::string> kFunctions = {"d",  "i",  "L",   "sn",  "pairm",
                                          "pairp", "cb", "phi", "td",  "jac",
                                          "pb", "pair", "emb", "adm"};
const std::set<std::string> kKeywords = {"chart", "ambient", "graph",
                                         "let",   "assert",  "print"};

struct Token {
    enum class Kind {
        Ident, Number, Comma, Semi, Assign, Equal, Plus, Minus, Star, Caret,
        LParen, RParen, At, End
    };
    Kind kind;
    std::string text;
    Rational number;
    int line;
    int column;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::Kind::Ident: return "identifier";
        case Token::Kind::Number: return "number";
        case Token::Kind::Comma: return "','";
        case Token::Kind::Semi: return "';'";
        case Token::Kind::Assign: return "'='";
        case Token::Kind::Equal: return "'=='";
        case Token::Kind::Plus: return "'+'";
        case Token::Kind::Minus: return "'-'";
        case Token::Kind::Star: return "'*'";
        case Token::Kind::Caret: return "'^'";
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::At: return "'@'";
        case Token::Kind::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Token::Kind k, std::string text, int l, int c) {
        out.push_back(Token{k, std::move(text), Rational(0), l, c});
    };
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
            continue;
        }
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        int tl = line, tc = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            std::string num(src, i, j - i);
            std::string den = "1";
            if (j < src.size() && src[j] == '/' && j + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                size_t k = j + 1;
                while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
                den.assign(src, j + 1, k - j - 1);
                j = k;
            }
            Token t{Token::Kind::Number, std::string(src, i, j - i),
                    Rational(Integer(num), Integer(den)), tl, tc};
            out.push_back(std::move(t));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            push(Token::Kind::Ident, std::string(src, i, j - i), tl, tc);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        switch (ch) {
            case ',': push(Token::Kind::Comma, ",", tl, tc); break;
            case ';': push(Token::Kind::Semi, ";", tl, tc); break;
            case '+': push(Token::Kind::Plus, "+", tl, tc); break;
            case '-': push(Token::Kind::Minus, "-", tl, tc); break;
            case '*': push(Token::Kind::Star, "*", tl, tc); break;
            case '^': push(Token::Kind::Caret, "^", tl, tc); break;
            case '(': push(Token::Kind::LParen, "(", tl, tc); break;
            case ')': push(Token::Kind::RParen, ")", tl, tc); break;
            case '@': push(Token::Kind::At, "@", tl, tc); break;
            case '=':
                if (i + 1 < src.size() && src[i + 1] == '=') {
                    push(Token::Kind::Equal, "==", tl, tc);
                    ++i;
                    ++col;
                } else {
                    push(Token::Kind::Assign, "=", tl, tc);
                }
                break;
            default:
                throw parse_error(tl, tc, std::string("unexpected character '") + ch + "'");
        }
        ++i;
        ++col;
    }
    out.push_back(Token{Token::Kind::End, "", Rational(0), line, col});
    return out;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Script parse() {
        Script script;
        while (!at(Token::Kind::End)) script.push_back(statement());
        return script;
    }

  private:
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    bool at(Token::Kind k) const { return cur().kind == k; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) {
        const Token& t = cur();
        std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        throw parse_error(t.line, t.column, "expected " + expected + ", got " + got);
    }

    Token expect(Token::Kind k) {
        if (!at(k)) fail(token_name(k));
        return take();
    }

    std::string ident() {
        if (!at(Token::Kind::Ident)) fail("identifier");
        return take().text;
    }

    Statement statement() {
        const Token& t = cur();
        Statement st;
        st.line = t.line;
        st.column = t.column;
        if (t.kind == Token::Kind::Ident && kKeywords.count(t.text)) {
            take();
            if (t.text == "chart") {
                st.kind = Statement::Kind::Chart;
                st.names.push_back(ident());
                while (at(Token::Kind::Comma)) {
                    take();
                    st.names.push_back(ident());
                }
            } else if (t.text == "ambient") {
                st.kind = Statement::Kind::Ambient;
                if (!at(Token::Kind::Number)) fail("number");
                Token n = take();
                Integer den = boost::multiprecision::denominator(n.number);
                if (den != 1) throw parse_error(n.line, n.column, "ambient degree must be an integer");
                st.number = boost::multiprecision::numerator(n.number).convert_to<int>();
            } else if (t.text == "graph") {
                st.kind = Statement::Kind::Graph;
                st.a = expr();
            } else if (t.text == "let") {
                st.kind = Statement::Kind::Let;
                st.names.push_back(ident());
                expect(Token::Kind::Assign);
                st.a = expr();
            } else if (t.text == "assert") {
                st.kind = Statement::Kind::Assert;
                st.a = expr();
                expect(Token::Kind::Equal);
                st.b = expr();
            } else {
                st.kind = Statement::Kind::Print;
                st.a = expr();
            }
        } else {
            st.kind = Statement::Kind::ExprOnly;
            st.a = expr();
        }
        expect(Token::Kind::Semi);
        return st;
    }

    ExprPtr node(Expr::Kind kind, std::vector<ExprPtr> args, const Token& t) {
        Expr e;
        e.kind = kind;
        e.args = std::move(args);
        e.line = t.line;
        e.column = t.column;
        return std::make_shared<const Expr>(std::move(e));
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
            Token op = take();
            ExprPtr rhs = term();
            lhs = node(op.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub,
                       {lhs, rhs}, op);
        }
        return lhs;
    }

    bool starts_atom() const {
        switch (cur().kind) {
            case Token::Kind::Number:
            case Token::Kind::Ident:
            case Token::Kind::At:
            case Token::Kind::LParen:
                return true;
            default:
                return false;
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        for (;;) {
            if (at(Token::Kind::Star)) {
                Token op = take();
                lhs = node(Expr::Kind::Mul, {lhs, factor()}, op);
            } else if (starts_atom() &&
                       !(at(Token::Kind::Ident) && kKeywords.count(cur().text))) {
                Token op = cur();
                lhs = node(Expr::Kind::Mul, {lhs, factor()}, op);
            } else {
                break;
            }
        }
        return lhs;
    }

    ExprPtr factor() {
        ExprPtr lhs = atom();
        while (at(Token::Kind::Caret)) {
            Token op = take();
            lhs = node(Expr::Kind::Wedge, {lhs, atom()}, op);
        }
        return lhs;
    }

    ExprPtr atom() {
        Token t = cur();
        switch (t.kind) {
            case Token::Kind::Number: {
                take();
                Expr e;
                e.kind = Expr::Kind::Number;
                e.number = t.number;
                e.line = t.line;
                e.column = t.column;
                return std::make_shared<const Expr>(std::move(e));
            }
            case Token::Kind::Minus: {
                take();
                return node(Expr::Kind::Neg, {atom()}, t);
            }
            case Token::Kind::LParen: {
                take();
                ExprPtr inner = expr();
                expect(Token::Kind::RParen);
                return inner;
            }
            case Token::Kind::At: {
                take();
                Expr e;
                e.kind = Expr::Kind::Basis;
                e.name = ident();
                e.line = t.line;
                e.column = t.column;
                return std::make_shared<const Expr>(std::move(e));
            }
            case Token::Kind::Ident: {
                take();
                if (kFunctions.count(t.text) && at(Token::Kind::LParen)) {
                    take();
                    std::vector<ExprPtr> args;
                    args.push_back(expr());
                    while (at(Token::Kind::Comma) || at(Token::Kind::Semi)) {
                        take();
                        args.push_back(expr());
                    }
                    expect(Token::Kind::RParen);
                    Expr e;
                    e.kind = Expr::Kind::Call;
                    e.name = t.text;
                    e.args = std::move(args);
                    e.line = t.line;
                    e.column = t.column;
                    return std::make_shared<const Expr>(std::move(e));
                }
                Expr e;
                e.kind = Expr::Kind::Ident;
                e.name = t.text;
                e.line = t.line;
                e.column = t.column;
                return std::make_shared<const Expr>(std::move(e));
            }
            default:
                fail("an expression");
        }
    }
};

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Wedge: return 4;
        default: return 5;
    }
}

std::string expr_str_prec(const ExprPtr& e, int outer) {
    int prec = precedence(e->kind);
    std::string out;
    switch (e->kind) {
        case Expr::Kind::Number: out = rational_str(e->number); break;
        case Expr::Kind::Ident: out = e->name; break;
        case Expr::Kind::Basis: out = "@" + e->name; break;
        case Expr::Kind::Neg: out = "-" + expr_str_prec(e->args[0], prec); break;
        case Expr::Kind::Add:
            out = expr_str_prec(e->args[0], prec) + " + " + expr_str_prec(e->args[1], prec + 1);
            break;
        case Expr::Kind::Sub:
            out = expr_str_prec(e->args[0], prec) + " - " + expr_str_prec(e->args[1], prec + 1);
            break;
        case Expr::Kind::Mul:
            out = expr_str_prec(e->args[0], prec) + "*" + expr_str_prec(e->args[1], prec + 1);
            break;
        case Expr::Kind::Wedge:
            out = expr_str_prec(e->args[0], prec) + "^" + expr_str_prec(e->args[1], prec + 1);
            break;
        case Expr::Kind::Call: {
            out = e->name + "(";
            for (size_t i = 0; i < e->args.size(); ++i) {
                if (i) out += "; ";
                out += expr_str_prec(e->args[i], 0);
            }
            out += ")";
            return out;  // calls never need outer parentheses
        }
    }
    if (prec < outer) out = "(" + out + ")";
    return out;
}

}  // namespace

Script parse_script(const std::string& source) {
    Parser p(lex(source));
    return p.parse();
}

bool reserved_word(const std::string& name) {
    return kFunctions.count(name) > 0 || kKeywords.count(name) > 0;
}

std::string expr_str(const ExprPtr& e) { return expr_str_prec(e, 0); }

std::string script_str(const Script& s) {
    std::string out;
    for (const Statement& st : s) {
        switch (st.kind) {
            case Statement::Kind::Chart: {
                out += "chart ";
                for (size_t i = 0; i < st.names.size(); ++i) {
                    if (i) out += ", ";
                    out += st.names[i];
                }
                break;
            }
            case Statement::Kind::Ambient:
                out += "ambient " + std::to_string(st.number);
                break;
            case Statement::Kind::Graph: out += "graph " + expr_str(st.a); break;
            case Statement::Kind::Let:
                out += "let " + st.names[0] + " = " + expr_str(st.a);
                break;
            case Statement::Kind::Assert:
                out += "assert " + expr_str(st.a) + " == " + expr_str(st.b);
                break;
            case Statement::Kind::Print: out += "print " + expr_str(st.a); break;
            case Statement::Kind::ExprOnly: out += expr_str(st.a); break;
        }
        out += ";\n";
    }
    return out;
}

}  // namespace mdx
