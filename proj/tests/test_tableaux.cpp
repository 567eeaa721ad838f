#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cyclebetti/error.hpp"
#include "cyclebetti/tableaux.hpp"
#include "oracles.hpp"

namespace cyclebetti {
namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvariantViolation;
}

TEST(ShapeTest, HookShapes) {
  EXPECT_EQ(hook_shape(5, 2).parts(), (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(hook_shape(6, 3).parts(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(hook_shape(4, 2).parts(), (std::vector<int>{2, 2}));
  EXPECT_EQ(hook_shape(9, 4).size(), 9);
  EXPECT_EQ(kind_of([] { hook_shape(3, 1); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { hook_shape(6, 5); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { hook_shape(6, 1); }), ErrorKind::Domain);
}

TEST(ShapeTest, RejectsNonPartitions) {
  EXPECT_EQ(kind_of([] { Shape({1, 2}); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { Shape({2, 0}); }), ErrorKind::Domain);
  const std::vector<int> bad{3, -1};
  EXPECT_EQ(kind_of([&] { count_syt_hook_length(std::span<const int>(bad)); }), ErrorKind::Domain);
}

TEST(ShapeTest, ConjugateOfHookShape) {
  for (int n = 4; n <= 12; ++n) {
    for (int j = 2; j <= n - 2; ++j) EXPECT_EQ(hook_shape(n, j).conjugate(), hook_shape(n, n - j));
  }
  EXPECT_EQ(Shape({4, 2, 1}).conjugate(), Shape({3, 2, 1, 1}));
}

TEST(ShapeTest, PartitionCounts) {
  // p(n) for n = 0..12
  const std::vector<std::size_t> expected{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(partitions(n).size(), expected[static_cast<std::size_t>(n)]);
}

TEST(Enumerate, FiveBoxExampleIsExactlyTheFiveFillings) {
  const auto all = enumerate_syt(Shape({2, 2, 1}));
  std::vector<std::string> text;
  for (const auto& t : all) text.push_back(format_tableau(t));
  EXPECT_EQ(text, (std::vector<std::string>{"1,2;3,4;5", "1,2;3,5;4", "1,3;2,4;5", "1,3;2,5;4", "1,4;2,5;3"}));
}

TEST(Enumerate, SmallCases) {
  const auto single = enumerate_syt(Shape({1}));
  ASSERT_EQ(single.size(), 1U);
  EXPECT_EQ(format_tableau(single.front()), "1");
  EXPECT_EQ(enumerate_syt(Shape({3, 2, 1})).size(), 16U);
  EXPECT_EQ(enumerate_syt(Shape({5})).size(), 1U);
}

TEST(HookLength, Examples) {
  EXPECT_EQ(count_syt_hook_length(Shape({2, 2, 1})), 5U);
  EXPECT_EQ(count_syt_hook_length(Shape({3, 2, 1})), 16U);
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(count_syt_hook_length(Shape({n})), 1U);
}

TEST(HookLength, AgreesWithPermutationBruteForce) {
  for (int n = 1; n <= 8; ++n) {
    for (const Shape& s : partitions(n)) {
      EXPECT_EQ(count_syt_hook_length(s), oracle::count_syt_by_permutations(s.parts()));
    }
  }
}

TEST(Enumerate, MatchesHookLengthForAllPartitionsUpToTwelve) {
  // Total standard tableaux of size n equals the number of involutions of n.
  const std::vector<std::size_t> involutions{1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152};
  for (int n = 1; n <= 12; ++n) {
    std::size_t total = 0;
    for (const Shape& s : partitions(n)) {
      const auto all = enumerate_syt(s);
      EXPECT_EQ(all.size(), count_syt_hook_length(s));
      total += all.size();
    }
    EXPECT_EQ(total, involutions[static_cast<std::size_t>(n)]) << n;
  }
}

TEST(Enumerate, SortedDistinctAndValid) {
  for (int n = 4; n <= 10; ++n) {
    for (int j = 2; j <= n - 2; ++j) {
      const auto all = enumerate_syt(hook_shape(n, j));
      std::set<std::vector<int>> words;
      for (std::size_t k = 0; k < all.size(); ++k) {
        words.insert(all[k].reading_word());
        if (k > 0) EXPECT_LT(all[k - 1].reading_word(), all[k].reading_word());
        EXPECT_EQ(all[k].at(1, 1), 1);
        EXPECT_EQ(parse_tableau(format_tableau(all[k])), all[k]);
      }
      EXPECT_EQ(words.size(), all.size());
    }
  }
}

TEST(Transpose, Examples) {
  const Tableau t1 = parse_tableau("1,2;3,4;5");
  EXPECT_EQ(format_tableau(transpose(t1)), "1,3,5;2,4");
  EXPECT_EQ(transpose(transpose(t1)), t1);
}

TEST(Transpose, BijectsHookShapeOntoItsConjugate) {
  for (int n = 4; n <= 10; ++n) {
    for (int j = 2; j <= n - 2; ++j) {
      std::set<std::string> image;
      for (const auto& t : enumerate_syt(hook_shape(n, j))) {
        const Tableau star = transpose(t);
        EXPECT_EQ(star.shape(), hook_shape(n, n - j));
        EXPECT_EQ(transpose(star), t);
        image.insert(format_tableau(star));
      }
      std::set<std::string> target;
      for (const auto& t : enumerate_syt(hook_shape(n, n - j))) target.insert(format_tableau(t));
      EXPECT_EQ(image, target);
    }
  }
}

TEST(ParseTableau, Examples) {
  const Tableau t1 = parse_tableau("1,2;3,4;5");
  EXPECT_EQ(t1.rows(), (std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5}}));
  EXPECT_EQ(t1.at(2, 2), 4);
  EXPECT_EQ(t1.position_of(5), (std::pair<int, int>{3, 1}));
  const Tableau right = parse_tableau("1,2,4;3,6;5");
  EXPECT_EQ(right.shape(), hook_shape(6, 3));
  EXPECT_EQ(right.at(2, 2), 6);
  EXPECT_EQ(parse_tableau(" 1, 2 ; 3,4;\n5 "), t1);
}

TEST(ParseTableau, ValidationErrorsNameTheInvariant) {
  auto message = [](const char* text) -> std::string {
    try {
      parse_tableau(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Validation) << text;
      return e.what();
    }
    ADD_FAILURE() << text;
    return {};
  };
  EXPECT_NE(message("2,1;3,4;5").find("row-increase"), std::string::npos);
  EXPECT_NE(message("1,2;4,3;5").find("row-increase"), std::string::npos);
  EXPECT_NE(message("1,3;2,4,5;6").find("shape"), std::string::npos);
  EXPECT_NE(message("1,4;2,3;5").find("column-increase"), std::string::npos);
  EXPECT_NE(message("1,2;3,4;6").find("entries"), std::string::npos);
  EXPECT_NE(message("1,2;2,4;5").find("entries"), std::string::npos);
}

TEST(ParseTableau, MalformedTextIsAParseError) {
  for (const char* text : {"", "1,,2", "1;;2", "1,2;", "a,b", "1,2;3,x"}) {
    EXPECT_EQ(kind_of([&] { parse_tableau(text); }), ErrorKind::Parse) << text;
  }
}

TEST(ParseTableau, RandomRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto shapes = partitions(n);
    const auto all = enumerate_syt(shapes[rng() % shapes.size()]);
    const Tableau& t = all[rng() % all.size()];
    EXPECT_EQ(parse_tableau(format_tableau(t)), t);
  }
}

}  // namespace
}  // namespace cyclebetti
