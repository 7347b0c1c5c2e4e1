#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "divgen/constructive.hpp"

using namespace divgen;

namespace {

BinaryVector bv(const char* s) { return BinaryVector::from_string(s); }

SubvectorPair pair_of(const char* y) { return {bv(y), complement(bv(y))}; }

std::vector<std::string> texts(const Collection& c) {
    std::vector<std::string> out;
    for (const auto& v : c) out.push_back(v.to_string());
    return out;
}

bool strongly_balanced(const BinaryVector& v) {
    for (std::size_t j = 1; j + 1 <= v.size(); j += 2) {
        if (v.test(j) == v.test(j + 1)) return false;
    }
    return true;
}

} // namespace

TEST(EnumeratePairs, ThreeComponentTable) {
    const auto pairs = enumerate_pairs(3);
    const std::vector<std::string> y1{"111", "110", "101", "100", "011", "010", "001", "000"};
    ASSERT_EQ(pairs.size(), 8U);
    for (std::size_t h = 0; h < 8; ++h) {
        EXPECT_EQ(pairs[h].first.to_string(), y1[h]);
        EXPECT_EQ(pairs[h].second.to_string(), y1[7 - h]);
    }
}

TEST(EnumeratePairs, SingleComponent) {
    const auto pairs = enumerate_pairs(1);
    ASSERT_EQ(pairs.size(), 2U);
    EXPECT_EQ(pairs[0].first, bv("1"));
    EXPECT_EQ(pairs[0].second, bv("0"));
    EXPECT_EQ(pairs[1].first, bv("0"));
    EXPECT_EQ(pairs[1].second, bv("1"));
}

TEST(EnumeratePairs, CoversEveryVectorOnce) {
    for (std::size_t p = 1; p <= 10; ++p) {
        const auto pairs = enumerate_pairs(p);
        std::set<std::string> seen;
        for (const auto& [y1, y2] : pairs) {
            seen.insert(y1.to_string());
            EXPECT_EQ(y2, complement(y1));
        }
        EXPECT_EQ(seen.size(), std::size_t{1} << p);
    }
    EXPECT_THROW(enumerate_pairs(0), Error);
    EXPECT_THROW(enumerate_pairs(max_subvector_dimension + 1), Error);
}

TEST(BuildDoubled, Examples) {
    EXPECT_EQ(build_doubled(pair_of("111"), 18).to_string(), "111000111000111000");
    EXPECT_EQ(build_doubled(pair_of("101"), 14).to_string(), "10101010101010");
    EXPECT_EQ(build_doubled(pair_of("1"), 5).to_string(), "10101");
}

TEST(BuildDoubled, BalancedWhenLengthIsMultipleOfBlock) {
    for (std::size_t p = 1; p <= 6; ++p) {
        for (const auto& pair : enumerate_pairs(p)) {
            for (std::size_t reps = 1; reps <= 4; ++reps) {
                const std::size_t n = 2 * p * reps;
                EXPECT_EQ(build_doubled(pair, n).popcount(), n / 2);
            }
        }
    }
}

TEST(BuildTripled, Examples) {
    EXPECT_EQ(third_block(pair_of("1100")), bv("1111"));
    EXPECT_EQ(build_tripled(pair_of("1100"), 12).to_string(), "110000111111");
    EXPECT_EQ(third_block(pair_of("1111")), bv("1100"));
    EXPECT_EQ(build_tripled(pair_of("1111"), 12).to_string(), "111100001100");
    EXPECT_EQ(third_block(pair_of("10")), bv("11"));
    EXPECT_EQ(build_tripled(pair_of("1100"), 14).to_string(), "11000011111111");
}

TEST(GenerateSubvector, DoubledThreeComponent) {
    SubvectorParams p;
    p.p = 3;
    p.n = 12;
    const auto c = generate_subvector(p);
    ASSERT_EQ(c.size(), 8U);
    EXPECT_EQ(c[0].to_string(), "111000111000");
}

TEST(GenerateSubvector, NoReplicationGivesConcatenations) {
    SubvectorParams p;
    p.p = 3;
    p.n = 6;
    const auto pairs = enumerate_pairs(3);
    const auto c = generate_subvector(p);
    ASSERT_EQ(c.size(), 8U);
    for (std::size_t h = 0; h < 8; ++h) {
        EXPECT_EQ(c[h].to_string(), pairs[h].first.to_string() + pairs[h].second.to_string());
    }
}

TEST(GenerateSubvector, TripledAddedOnesHistogram) {
    SubvectorParams p;
    p.p = 4;
    p.n = 12;
    p.form = SubvectorForm::tripled;
    const auto c = generate_subvector(p);
    ASSERT_EQ(c.size(), 16U);
    std::map<std::size_t, std::size_t> hist;
    for (const auto& v : c) ++hist[v.popcount() - 4];  // y' and y'' together hold exactly p ones
    EXPECT_EQ(hist, (std::map<std::size_t, std::size_t>{{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}}));
}

TEST(GenerateSubvector, ClosedUnderComplement) {
    for (auto form : {SubvectorForm::doubled, SubvectorForm::tripled}) {
        for (std::size_t p = 1; p <= 5; ++p) {
            for (std::size_t n : {1, 7, 20, 33}) {
                SubvectorParams sp;
                sp.p = p;
                sp.n = n;
                sp.form = form;
                const auto c = generate_subvector(sp);
                std::set<BinaryVector> all(c.begin(), c.end());
                for (const auto& v : c) EXPECT_TRUE(all.count(complement(v))) << "p=" << p << " n=" << n;
            }
        }
    }
}

TEST(GenerateSubvector, RlimTruncates) {
    SubvectorParams p;
    p.p = 5;
    p.n = 20;
    p.rlim = 7;
    EXPECT_EQ(generate_subvector(p).size(), 7U);
    p.n = 0;
    EXPECT_THROW(generate_subvector(p), Error);
}

TEST(StronglyBalanced, LevelTwo) {
    StronglyBalancedParams p;
    p.level = 2;
    EXPECT_EQ(texts(generate_strongly_balanced(p)), (std::vector<std::string>{"1010", "1001", "0110", "0101"}));
}

TEST(StronglyBalanced, LevelThreeTable) {
    const std::vector<std::string> table{
        "10101010", "10100101", "10100110", "10101001", "01011010", "01010101", "01010110", "01011001",
        "01101010", "01100101", "01100110", "01101001", "10011010", "10010101", "10010110", "10011001",
    };
    StronglyBalancedParams p;
    p.level = 3;
    const auto c = generate_strongly_balanced(p);
    EXPECT_EQ(texts(c), table);
    EXPECT_EQ(c[11].to_string(), "01101001");
}

TEST(StronglyBalanced, LevelOneReplicated) {
    StronglyBalancedParams p;
    p.level = 1;
    p.n = 7;
    EXPECT_EQ(texts(generate_strongly_balanced(p)), (std::vector<std::string>{"1010101", "0101010"}));
}

TEST(StronglyBalanced, PairingInvariantAndClosure) {
    for (std::size_t level = 1; level <= 4; ++level) {
        for (std::size_t n : {0, 1, 8, 9, 17, 40}) {
            StronglyBalancedParams p;
            p.level = level;
            p.n = n;
            const auto c = generate_strongly_balanced(p);
            EXPECT_EQ(c.size(), std::size_t{1} << (std::size_t{1} << (level - 1)));
            std::set<BinaryVector> all(c.begin(), c.end());
            for (const auto& v : c) {
                EXPECT_TRUE(strongly_balanced(v)) << v.to_string();
                EXPECT_TRUE(all.count(complement(v)));
            }
        }
    }
}

TEST(StronglyBalanced, IncludesPreviousLevel) {
    for (std::size_t level = 1; level <= 3; ++level) {
        for (std::size_t n : {8, 9, 16, 23}) {
            StronglyBalancedParams lower{level, n, 1000};
            StronglyBalancedParams upper{level + 1, n, 1000};
            const auto a = generate_strongly_balanced(lower);
            const auto b = generate_strongly_balanced(upper);
            std::set<BinaryVector> bigger(b.begin(), b.end());
            for (const auto& v : a) EXPECT_TRUE(bigger.count(v)) << "level " << level << " n=" << n;
        }
    }
}

TEST(StronglyBalanced, CapacityError) {
    StronglyBalancedParams p;
    p.level = max_strongly_balanced_level + 1;
    try {
        generate_strongly_balanced(p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::capacity_exceeded);
        const std::string what = e.what();
        EXPECT_NE(what.find("level 6"), std::string::npos);
        EXPECT_NE(what.find("2^32"), std::string::npos);
    }
    p.level = 0;
    EXPECT_THROW(generate_strongly_balanced(p), Error);
}

TEST(StronglyBalanced, RlimTruncates) {
    StronglyBalancedParams p;
    p.level = 4;
    p.rlim = 10;
    EXPECT_EQ(generate_strongly_balanced(p).size(), 10U);
}
