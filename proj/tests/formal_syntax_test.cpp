#include "lawvere/errors.hpp"
#include "lawvere/formal/numbering.hpp"
#include "lawvere/formal/syntax.hpp"
#include "lawvere/formal/text.hpp"
#include "random_programs.hpp"

#include <gtest/gtest.h>

namespace lawvere::formal {
namespace {

TEST(Symbols, FixedTable)
{
    EXPECT_EQ(symbol_name(sym::Prov), "Prov");
    EXPECT_EQ(symbol_arity(sym::Prov), 2u);
    EXPECT_EQ(symbol_arity(sym::A), 0u);
    EXPECT_EQ(symbol_name(Natural(42)), "S42");
    EXPECT_FALSE(symbol_arity(Natural(42)).has_value());
    EXPECT_EQ(symbol_code("Prflen"), sym::Prflen);
    EXPECT_EQ(symbol_code("S42"), Natural(42));
    EXPECT_FALSE(symbol_code("Nope").has_value());
    EXPECT_EQ(var_name(var::m), "m");
    EXPECT_EQ(var_name(Natural(9)), "v9");
    EXPECT_EQ(var_code("u"), var::u);
    EXPECT_EQ(var_code("v12"), Natural(12));
}

TEST(Numbering, FrozenCodes)
{
    EXPECT_EQ(term_code(*var_t(var::x)), 0);
    EXPECT_EQ(term_code(*num(5)), 21);
    EXPECT_EQ(term_code(*diag_t(var_t(var::x))), 2);
    EXPECT_EQ(goedel_number(*not_f(pred(sym::T, {var_t(var::x)}))), 702);
    EXPECT_EQ(goedel_number(*not_f(pred(sym::T, {diag_t(var_t(var::x))}))), 2502);
    EXPECT_EQ(goedel_number(*pred(sym::A, {})), 210);
}

TEST(Numbering, EveryNaturalIsAFormula)
{
    for (unsigned n = 0; n < 100000; ++n) {
        ASSERT_EQ(goedel_number(*formula_of(n)), n) << n;
    }
    for (unsigned n = 0; n < 20000; ++n) {
        ASSERT_EQ(term_code(*term_of(n)), n) << n;
    }
}

TEST(Numbering, RandomFormulasRoundTrip)
{
    testing::Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        auto f = testing::random_formula(rng, 5, true);
        ASSERT_EQ(*formula_of(goedel_number(*f)), *f) << to_text(*f);
    }
}

TEST(Text, RoundTrip)
{
    testing::Rng rng(42);
    for (int i = 0; i < 1000; ++i) {
        auto f = testing::random_formula(rng, 5, true);
        auto text = to_text(*f);
        ASSERT_EQ(*parse_formula(text), *f) << text;
    }
}

TEST(Text, Examples)
{
    auto g = for_all(var::y, not_f(pred(sym::Prov, {var_t(var::y), var_t(var::x)})));
    EXPECT_EQ(to_text(*g), "(forall y (not (Prov y x)))");
    EXPECT_EQ(*parse_formula("(imp (unq x) A)"), *imp(unquote(var_t(var::x)), pred(sym::A, {})));
    EXPECT_EQ(*parse_formula("(less (neg 3) (diag v7))"),
              *less(neg_t(num(3)), diag_t(var_t(Natural(7)))));
    EXPECT_EQ(*parse_formula("(S40 x y z)"),
              *pred(Natural(40), {var_t(var::x), var_t(var::y), var_t(var::z)}));
}

TEST(Text, AbbreviatesLongNumerals)
{
    auto f = pred(sym::T, {num(Natural("123456789012345678901234567890"))});
    EXPECT_EQ(to_text(*f, PrintOptions{10}), "(T #<30 digits>)");
    EXPECT_EQ(to_text(*f, PrintOptions{30}), "(T 123456789012345678901234567890)");
}

TEST(Text, RejectsBadInput)
{
    for (const char* bad : {"", "(", "(Frob x)", "(Prov x)", "(T x y)", "(not)", "(forall 3 A)",
                            "(and A)", "(less x)", "(unq)", "A B", "(diag x y)"}) {
        EXPECT_THROW(parse_formula(bad), InputError) << bad;
    }
}

TEST(Text, ErrorNamesOffset)
{
    try {
        parse_formula("(and A (Frob x))");
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("offset 8"), std::string::npos) << e.what();
    }
}

TEST(FreeVars, QuantifiersBind)
{
    auto f = and_f(for_all(var::y, pred(sym::R, {var_t(var::x), var_t(var::y)})),
                   less(var_t(var::y), num(1)));
    EXPECT_EQ(free_vars(*f), (std::set<Natural>{var::x, var::y}));
    EXPECT_TRUE(is_closed(*num(3)));
    EXPECT_FALSE(is_closed(*diag_t(var_t(var::x))));
}

TEST(Substitute, ReplacesOnlyFreeOccurrences)
{
    auto f = and_f(pred(sym::T, {var_t(var::x)}), for_all(var::x, pred(sym::T, {var_t(var::x)})));
    auto s = substitute(f, var::x, num(4));
    EXPECT_EQ(*s, *and_f(pred(sym::T, {num(4)}), for_all(var::x, pred(sym::T, {var_t(var::x)}))));
    EXPECT_THROW(substitute(f, var::x, var_t(var::y)), InputError);
}

TEST(Substitute, RemovesTheVariable)
{
    testing::Rng rng(43);
    for (int i = 0; i < 500; ++i) {
        auto f = testing::random_formula(rng, 5, true);
        auto s = substitute(f, var::x, num(testing::pick(rng, 0, 99)));
        auto before = free_vars(*f);
        before.erase(var::x);
        ASSERT_EQ(free_vars(*s), before);
    }
}

TEST(Substitute, SelfSubstitutionKeepsVariable)
{
    auto f = not_f(pred(sym::T, {var_t(var::x)}));
    auto g = substitute_self(f, var::x, diag_t(var_t(var::x)));
    EXPECT_EQ(*g, *not_f(pred(sym::T, {diag_t(var_t(var::x))})));
    EXPECT_THROW(substitute_self(f, var::x, var_t(var::y)), InputError);
}

} // namespace
} // namespace lawvere::formal
