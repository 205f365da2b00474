#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "qvc/errors.hpp"

namespace qvc {

// Immutable expression tree over constants, named symbols, +, -, * and
// unary negation. Circuit angles are ParamExpr; binding reduces them to
// constants. Printing and parsing round-trip structurally: constants are
// printed with 17 significant digits and unary minus never wraps a bare
// constant (the factories fold that case).
class ParamExpr {
  public:
    enum class Kind { constant, symbol, add, sub, mul, neg };

    ParamExpr() : ParamExpr(constant(0.0)) {}

    static ParamExpr constant(double value) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::constant;
        n->value = value;
        return ParamExpr(std::move(n));
    }

    static ParamExpr symbol(std::string name) {
        if (!valid_symbol_name(name)) {
            throw std::invalid_argument("invalid symbol name: '" + name + "'");
        }
        auto n = std::make_shared<Node>();
        n->kind = Kind::symbol;
        n->name = std::move(name);
        return ParamExpr(std::move(n));
    }

    static ParamExpr pi() { return constant(std::numbers::pi); }

    Kind kind() const { return node_->kind; }
    double constant_value() const { return node_->value; }
    const std::string& symbol_name() const { return node_->name; }
    ParamExpr lhs() const { return ParamExpr(node_->lhs); }
    ParamExpr rhs() const { return ParamExpr(node_->rhs); }
    bool is_constant() const { return node_->kind == Kind::constant; }

    friend ParamExpr operator+(const ParamExpr& a, const ParamExpr& b) {
        return binary(Kind::add, a, b);
    }
    friend ParamExpr operator-(const ParamExpr& a, const ParamExpr& b) {
        return binary(Kind::sub, a, b);
    }
    friend ParamExpr operator*(const ParamExpr& a, const ParamExpr& b) {
        return binary(Kind::mul, a, b);
    }
    friend ParamExpr operator-(const ParamExpr& a) {
        if (a.is_constant()) return constant(-a.constant_value());
        auto n = std::make_shared<Node>();
        n->kind = Kind::neg;
        n->lhs = a.node_;
        return ParamExpr(std::move(n));
    }

    // Evaluates against an environment; missing symbols are binding errors,
    // non-finite results numeric errors.
    double evaluate(const std::unordered_map<std::string, double>& env) const {
        const double v = eval_node(*node_, [&env](const std::string& name) {
            auto it = env.find(name);
            if (it == env.end()) throw BindingError("unbound symbol '" + name + "'");
            return it->second;
        });
        if (!std::isfinite(v)) throw NumericError("expression evaluated to a non-finite value");
        return v;
    }

    double evaluate(const std::function<double(const std::string&)>& resolve) const {
        const double v = eval_node(*node_, resolve);
        if (!std::isfinite(v)) throw NumericError("expression evaluated to a non-finite value");
        return v;
    }

    std::set<std::string> free_symbols() const {
        std::set<std::string> out;
        collect_symbols(*node_, out);
        return out;
    }

    bool operator==(const ParamExpr& other) const { return equal(*node_, *other.node_); }

    std::string to_string() const {
        std::string out;
        print(*node_, 0, out);
        return out;
    }

    // Inverse of to_string. Also accepts the literal `pi`.
    static ParamExpr parse(std::string_view text) {
        Parser p{text, 0};
        ParamExpr e = p.parse_expr();
        p.skip_ws();
        if (p.pos != text.size()) {
            throw ParseError("trailing characters in expression: '" + std::string(text) + "'");
        }
        return e;
    }

  private:
    struct Node {
        Kind kind = Kind::constant;
        double value = 0.0;
        std::string name;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };

    explicit ParamExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static ParamExpr binary(Kind k, const ParamExpr& a, const ParamExpr& b) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->lhs = a.node_;
        n->rhs = b.node_;
        return ParamExpr(std::move(n));
    }

    static bool valid_symbol_name(const std::string& name) {
        if (name.empty() || name == "pi") return false;
        if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
        for (char c : name) {
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
        }
        return true;
    }

    template <typename Resolve>
    static double eval_node(const Node& n, const Resolve& resolve) {
        switch (n.kind) {
            case Kind::constant: return n.value;
            case Kind::symbol: return resolve(n.name);
            case Kind::add: return eval_node(*n.lhs, resolve) + eval_node(*n.rhs, resolve);
            case Kind::sub: return eval_node(*n.lhs, resolve) - eval_node(*n.rhs, resolve);
            case Kind::mul: return eval_node(*n.lhs, resolve) * eval_node(*n.rhs, resolve);
            case Kind::neg: return -eval_node(*n.lhs, resolve);
        }
        throw std::logic_error("unreachable expression kind");
    }

    static void collect_symbols(const Node& n, std::set<std::string>& out) {
        switch (n.kind) {
            case Kind::symbol: out.insert(n.name); break;
            case Kind::constant: break;
            case Kind::neg: collect_symbols(*n.lhs, out); break;
            default:
                collect_symbols(*n.lhs, out);
                collect_symbols(*n.rhs, out);
        }
    }

    static bool equal(const Node& a, const Node& b) {
        if (a.kind != b.kind) return false;
        switch (a.kind) {
            case Kind::constant: return a.value == b.value;
            case Kind::symbol: return a.name == b.name;
            case Kind::neg: return equal(*a.lhs, *b.lhs);
            default: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
        }
    }

    static int precedence(Kind k) {
        switch (k) {
            case Kind::add:
            case Kind::sub: return 1;
            case Kind::mul: return 2;
            case Kind::neg: return 3;
            default: return 4;
        }
    }

    // min_prec: lowest precedence printable without parentheses at this spot.
    static void print(const Node& n, int min_prec, std::string& out) {
        const int prec = precedence(n.kind);
        const bool wrap = prec < min_prec;
        if (wrap) out += '(';
        switch (n.kind) {
            case Kind::constant: {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.17g", n.value);
                out += buf;
                break;
            }
            case Kind::symbol: out += n.name; break;
            case Kind::add:
                print(*n.lhs, 1, out);
                out += " + ";
                print(*n.rhs, 2, out);
                break;
            case Kind::sub:
                print(*n.lhs, 1, out);
                out += " - ";
                print(*n.rhs, 2, out);
                break;
            case Kind::mul:
                print(*n.lhs, 2, out);
                out += " * ";
                print(*n.rhs, 3, out);
                break;
            case Kind::neg:
                out += '-';
                print(*n.lhs, 4, out);
                break;
        }
        if (wrap) out += ')';
    }

    struct Parser {
        std::string_view text;
        std::size_t pos;

        void skip_ws() {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        }

        bool consume(char c) {
            skip_ws();
            if (pos < text.size() && text[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }

        ParamExpr parse_expr() {
            ParamExpr e = parse_term();
            for (;;) {
                if (consume('+')) {
                    e = binary(Kind::add, e, parse_term());
                } else if (consume('-')) {
                    e = binary(Kind::sub, e, parse_term());
                } else {
                    return e;
                }
            }
        }

        ParamExpr parse_term() {
            ParamExpr e = parse_factor();
            while (consume('*')) e = binary(Kind::mul, e, parse_factor());
            return e;
        }

        ParamExpr parse_factor() {
            skip_ws();
            if (pos >= text.size()) throw ParseError("unexpected end of expression");
            if (text[pos] == '-') {
                ++pos;
                return -parse_factor(); // folds -constant into a constant
            }
            if (text[pos] == '(') {
                ++pos;
                ParamExpr e = parse_expr();
                if (!consume(')')) throw ParseError("missing ')' in expression");
                return e;
            }
            const char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                return parse_number();
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                return parse_identifier();
            }
            throw ParseError(std::string("unexpected character '") + c + "' in expression");
        }

        ParamExpr parse_number() {
            const std::string rest(text.substr(pos));
            char* end = nullptr;
            const double v = std::strtod(rest.c_str(), &end);
            if (end == rest.c_str()) throw ParseError("malformed number in expression");
            pos += static_cast<std::size_t>(end - rest.c_str());
            return constant(v);
        }

        ParamExpr parse_identifier() {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                ++pos;
            }
            std::string name(text.substr(start, pos - start));
            if (name == "pi") return pi();
            return symbol(std::move(name));
        }
    };

    std::shared_ptr<const Node> node_;
};

} // namespace qvc
