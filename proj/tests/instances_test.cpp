#include "lawvere/errors.hpp"
#include "lawvere/instances.hpp"

#include <gtest/gtest.h>

#include <random>

namespace lawvere::instances {
namespace {

using enum Truth;

TEST(Powerset, MissingSetIsTheFlippedDiagonal)
{
    SubsetFamily fam{3, {{false, false, false}, {true, false, false}, {true, true, false}}};
    auto res = powerset_instance(fam);
    EXPECT_EQ(res.diagonal_object, (std::vector<bool>{true, true, true}));
    EXPECT_TRUE(res.report.verify(res.matrix));
    for (std::size_t m = 0; m < 3; ++m) {
        EXPECT_NE(res.diagonal_object, fam.members[m]);
        EXPECT_EQ(res.report.witness[m], m);
    }
}

TEST(Powerset, EmptyFamilyAndSingleton)
{
    SubsetFamily empty{3, std::vector<std::vector<bool>>(3, std::vector<bool>(3, false))};
    EXPECT_EQ(powerset_instance(empty).diagonal_object, (std::vector<bool>{true, true, true}));

    SubsetFamily one{1, {{true}}};
    EXPECT_EQ(powerset_instance(one).diagonal_object, (std::vector<bool>{false}));
}

TEST(Powerset, RejectsInconsistentLengths)
{
    SubsetFamily bad{2, {{true, false}}};
    EXPECT_THROW(powerset_instance(bad), InputError);
}

TEST(Relation, GrellingHeterologicalWords)
{
    DescribesMatrix m{{"english", "french", "short", "polysyllabic"},
                      {{true, false, false, true},
                       {true, false, true, false},
                       {true, false, false, false},
                       {true, false, false, true}}};
    auto res = relation_instance(m);
    EXPECT_EQ(res.diagonal_object, (std::vector<bool>{false, true, true, false}));
    EXPECT_TRUE(res.report.verify(res.matrix));
    EXPECT_TRUE(diagonal::representing_columns(res.report.g, res.matrix).empty());
}

TEST(Relation, IdentityAndAllOnes)
{
    auto id = DescribesMatrix{{}, {{true, false}, {false, true}}};
    EXPECT_EQ(relation_instance(id).diagonal_object, (std::vector<bool>{false, false}));
    auto ones = DescribesMatrix{{}, {{true, true}, {true, true}}};
    auto res = relation_instance(ones);
    EXPECT_EQ(res.diagonal_object, (std::vector<bool>{false, false}));
    EXPECT_TRUE(diagonal::representing_columns(res.report.g, res.matrix).empty());
}

TEST(Relation, RejectsNonSquare)
{
    DescribesMatrix m{{}, {{true, false}, {true}}};
    EXPECT_THROW(relation_instance(m), InputError);
}

// Both routes to Cantor's set agree bit for bit.
TEST(Relation, PowersetAndRelationPathsAgree)
{
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 1 + rng() % 6;
        SubsetFamily fam{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n))};
        for (auto& s : fam.members) {
            for (std::size_t i = 0; i < n; ++i) {
                s[i] = rng() % 2 == 1;
            }
        }
        auto a = powerset_instance(fam).diagonal_object;
        auto b = relation_instance(membership_relation(fam)).diagonal_object;
        ASSERT_EQ(a, b);
        for (std::size_t i = 0; i < n; ++i) {
            ASSERT_EQ(a[i], !fam.members[i][i]);
        }
    }
}

TEST(StrongLiar, AlphaTable)
{
    auto alpha = strong_liar_alpha();
    EXPECT_EQ(alpha(0), 2u);
    EXPECT_EQ(alpha(1), 0u);
    EXPECT_EQ(alpha(2), 0u);
    EXPECT_TRUE(diagonal::fixed_points(alpha).empty());
}

TEST(StrongLiar, DiagonalFromTruthValues)
{
    TriValuedMatrix m{{"a", "b", "c"},
                      {{True, False, False}, {False, Meaningless, True}, {True, True, False}}};
    auto res = strong_liar_instance(m);
    EXPECT_EQ(res.diagonal_object, (std::vector<Truth>{False, True, True}));
    EXPECT_TRUE(res.report.verify(res.matrix));
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NE(res.diagonal_object[i], m.cells[i][i]);
    }
}

TEST(Truth, ParseAndPrintRoundTrip)
{
    for (auto v : {True, Meaningless, False}) {
        EXPECT_EQ(parse_truth(std::string(1, truth_letter(v))), v);
    }
    EXPECT_THROW(parse_truth("X"), InputError);
    EXPECT_THROW(parse_truth(""), InputError);
}

TEST(Richard, DigitRule)
{
    auto alpha = richard_alpha();
    for (Index d = 0; d < 10; ++d) {
        EXPECT_EQ(alpha(d), 9 - d);
    }
    EXPECT_TRUE(diagonal::fixed_points(alpha).empty());
}

TEST(Richard, DiagonalDigits)
{
    std::vector<std::uint8_t> diag{3, 1, 4, 1, 5};
    DigitMatrix m{{}, std::vector<std::vector<std::uint8_t>>(5, std::vector<std::uint8_t>(5, 0))};
    for (std::size_t i = 0; i < 5; ++i) {
        m.cells[i][i] = diag[i];
    }
    auto res = richard_instance(m);
    EXPECT_EQ(res.diagonal_object, (std::vector<std::uint8_t>{6, 8, 5, 8, 4}));
    EXPECT_TRUE(res.report.verify(res.matrix));
}

TEST(Richard, RejectsNonDigits)
{
    DigitMatrix m{{}, {{10}}};
    EXPECT_THROW(richard_instance(m), InputError);
}

TEST(Richard, DiagonalAvoidsEveryColumn)
{
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t n = 1 + rng() % 12;
        DigitMatrix m{{}, std::vector<std::vector<std::uint8_t>>(n, std::vector<std::uint8_t>(n))};
        for (auto& row : m.cells) {
            for (auto& c : row) {
                c = static_cast<std::uint8_t>(rng() % 10);
            }
        }
        auto res = richard_instance(m);
        for (std::size_t j = 0; j < n; ++j) {
            ASSERT_NE(res.diagonal_object[j], m.cells[j][j]);
            ASSERT_EQ(res.diagonal_object[j] + m.cells[j][j], 9);
        }
    }
}

} // namespace
} // namespace lawvere::instances
