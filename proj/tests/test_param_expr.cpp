#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <unordered_map>

#include <gtest/gtest.h>

#include "qvc/errors.hpp"
#include "qvc/param_expr.hpp"
#include "qvc/prng.hpp"

using qvc::ParamExpr;
using qvc::SplitMix64;

namespace {

// Independent recursive interpreter working purely off the public node
// accessors; the oracle for evaluate().
double interpret(const ParamExpr& e, const std::unordered_map<std::string, double>& env) {
    switch (e.kind()) {
        case ParamExpr::Kind::constant: return e.constant_value();
        case ParamExpr::Kind::symbol: return env.at(e.symbol_name());
        case ParamExpr::Kind::add: return interpret(e.lhs(), env) + interpret(e.rhs(), env);
        case ParamExpr::Kind::sub: return interpret(e.lhs(), env) - interpret(e.rhs(), env);
        case ParamExpr::Kind::mul: return interpret(e.lhs(), env) * interpret(e.rhs(), env);
        case ParamExpr::Kind::neg: return -interpret(e.lhs(), env);
    }
    throw std::logic_error("unreachable");
}

ParamExpr random_tree(SplitMix64& rng, int depth) {
    if (depth == 0 || rng.next_below(4) == 0) {
        if (rng.next_below(2) == 0) {
            return ParamExpr::constant(rng.next_double(-10.0, 10.0));
        }
        return ParamExpr::symbol(std::string("s") + std::to_string(rng.next_below(4)));
    }
    switch (rng.next_below(4)) {
        case 0: return random_tree(rng, depth - 1) + random_tree(rng, depth - 1);
        case 1: return random_tree(rng, depth - 1) - random_tree(rng, depth - 1);
        case 2: return random_tree(rng, depth - 1) * random_tree(rng, depth - 1);
        default: return -random_tree(rng, depth - 1);
    }
}

} // namespace

TEST(ParamExpr, ConstantAndSymbolBasics) {
    const ParamExpr c = ParamExpr::constant(2.5);
    EXPECT_TRUE(c.is_constant());
    EXPECT_DOUBLE_EQ(c.evaluate(std::unordered_map<std::string, double>{}), 2.5);

    const ParamExpr x = ParamExpr::symbol("x0");
    EXPECT_DOUBLE_EQ(x.evaluate({{"x0", 1.25}}), 1.25);
    EXPECT_EQ(x.free_symbols(), std::set<std::string>{"x0"});
}

TEST(ParamExpr, AffineDataMapShape) {
    const ParamExpr x0 = ParamExpr::symbol("x0");
    const ParamExpr x1 = ParamExpr::symbol("x1");
    const ParamExpr e = (ParamExpr::pi() - x0) * (ParamExpr::pi() - x1);
    const double pi = std::numbers::pi;
    EXPECT_DOUBLE_EQ(e.evaluate({{"x0", pi}, {"x1", pi}}), 0.0);
    EXPECT_DOUBLE_EQ(e.evaluate({{"x0", 0.0}, {"x1", 0.0}}), pi * pi);
    EXPECT_EQ(e.free_symbols(), (std::set<std::string>{"x0", "x1"}));
}

TEST(ParamExpr, UnboundSymbolIsBindingError) {
    const ParamExpr e = ParamExpr::symbol("a") + ParamExpr::constant(1.0);
    EXPECT_THROW(e.evaluate({{"b", 1.0}}), qvc::BindingError);
}

TEST(ParamExpr, RejectsBadSymbolNames) {
    EXPECT_THROW(ParamExpr::symbol(""), std::invalid_argument);
    EXPECT_THROW(ParamExpr::symbol("1x"), std::invalid_argument);
    EXPECT_THROW(ParamExpr::symbol("pi"), std::invalid_argument);
    EXPECT_THROW(ParamExpr::symbol("a b"), std::invalid_argument);
}

TEST(ParamExpr, EvaluateMatchesIndependentInterpreter) {
    SplitMix64 rng(0xe4a1);
    const std::unordered_map<std::string, double> env{
        {"s0", 0.25}, {"s1", -1.5}, {"s2", 3.0}, {"s3", 0.0}};
    for (int i = 0; i < 200; ++i) {
        const ParamExpr e = random_tree(rng, 5);
        EXPECT_DOUBLE_EQ(e.evaluate(env), interpret(e, env));
    }
}

TEST(ParamExpr, PrintParseRoundTripIsStructural) {
    SplitMix64 rng(0xbeef);
    for (int i = 0; i < 300; ++i) {
        const ParamExpr e = random_tree(rng, 5);
        const ParamExpr back = ParamExpr::parse(e.to_string());
        EXPECT_TRUE(back == e) << "round trip changed: " << e.to_string() << " vs "
                               << back.to_string();
    }
}

TEST(ParamExpr, ParseAcceptsPiLiteral) {
    const ParamExpr e = ParamExpr::parse("pi - x0");
    EXPECT_DOUBLE_EQ(e.evaluate({{"x0", 1.0}}), std::numbers::pi - 1.0);
}

TEST(ParamExpr, ParseRejectsGarbage) {
    EXPECT_THROW(ParamExpr::parse(""), qvc::ParseError);
    EXPECT_THROW(ParamExpr::parse("1 +"), qvc::ParseError);
    EXPECT_THROW(ParamExpr::parse("(1 + 2"), qvc::ParseError);
    EXPECT_THROW(ParamExpr::parse("1 2"), qvc::ParseError);
    EXPECT_THROW(ParamExpr::parse("x0 @ 2"), qvc::ParseError);
}

TEST(ParamExpr, NegationOfConstantFoldsForExactRoundTrip) {
    const ParamExpr e = -ParamExpr::constant(3.0);
    EXPECT_TRUE(e.is_constant());
    EXPECT_DOUBLE_EQ(e.constant_value(), -3.0);
    EXPECT_TRUE(ParamExpr::parse(e.to_string()) == e);
}
