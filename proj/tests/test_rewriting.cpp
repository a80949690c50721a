#include "bcgim/rewriting.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace bcgim;

TEST_CASE("recursive path order on words") {
  CHECK(recursive_path_less({0}, {1}));
  CHECK(recursive_path_less({}, {0}));
  // A larger first letter dominates any word of smaller letters.
  CHECK(recursive_path_less({0, 0, 0, 1}, {2}));
  CHECK_FALSE(recursive_path_less({2}, {0, 0, 0, 1}));
  CHECK(recursive_path_less({4, 0}, {0, 4, 1}));
  CHECK_FALSE(recursive_path_less({1, 2}, {1, 2}));
  CHECK(shortlex_less({2}, {0, 0}));
  CHECK(word_less(WordOrdering::ShortLex, {2}, {0, 0}));
  CHECK(word_less(WordOrdering::RecursivePath, {0, 0}, {2}));
}

TEST_CASE("recursive path order is a strict total order on short words") {
  std::vector<Word> words{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<Word> next;
    for (const Word& w : words) {
      if (static_cast<int>(w.size()) != len - 1) continue;
      for (LetterId l = 0; l < 3; ++l) {
        Word v = w;
        v.push_back(l);
        next.push_back(v);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const Word& a : words) {
    CHECK_FALSE(recursive_path_less(a, a));
    for (const Word& b : words) {
      if (a == b) continue;
      CHECK(recursive_path_less(a, b) != recursive_path_less(b, a));
      for (const Word& c : words) {
        if (recursive_path_less(a, b) && recursive_path_less(b, c)) {
          CHECK(recursive_path_less(a, c));
        }
      }
    }
  }
}

TEST_CASE("completion of a free group with one conjugation relation") {
  // letters: a=0 A=1 b=2 B=3 c=4 C=5; relation c a = a b
  std::vector<std::pair<Word, Word>> eqs = {
      {{0, 1}, {}}, {{1, 0}, {}}, {{2, 3}, {}}, {{3, 2}, {}}, {{4, 5}, {}}, {{5, 4}, {}},
      {{4, 0}, {0, 2}}};
  RewriteSystem sys = RewriteSystem::complete(eqs, {});
  CHECK(sys.normal_form({4, 0}) == Word{0, 2});
  CHECK(sys.normal_form({4}) == Word{0, 2, 1});
  CHECK(sys.normal_form({1, 4, 0}) == Word{2});
  CHECK(sys.normal_form({0, 1, 2, 3}).empty());
  for (const RewriteRule& r : sys.rules()) CHECK(recursive_path_less(r.rhs, r.lhs));

  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    Word w;
    for (int k = 0; k < 10; ++k) w.push_back(static_cast<LetterId>(rng() % 6));
    const Word nf = sys.normal_form(w);
    CHECK(sys.is_irreducible(nf));
    CHECK(sys.normal_form(nf) == nf);
  }
  CHECK(sys.stats().rules == sys.size());
}

TEST_CASE("completion bounds are hard errors") {
  std::vector<std::pair<Word, Word>> eqs = {{{0, 1}, {}}, {{1, 0}, {}}, {{0, 0}, {1}}};
  CompletionOptions tight;
  tight.pair_budget = 0;
  CHECK(test::error_code([&] { RewriteSystem::complete(eqs, tight); }) == ErrorCode::Completion);
  CompletionOptions few;
  few.max_rules = 1;
  CHECK(test::error_code([&] { RewriteSystem::complete(eqs, few); }) == ErrorCode::Completion);
}
