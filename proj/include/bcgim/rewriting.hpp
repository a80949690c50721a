#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bcgim {

/// Letters are dense integer ids; the integer order is the letter order used
/// for orienting rules.
using LetterId = std::uint16_t;
using Word = std::vector<LetterId>;

/// Length first, then lexicographic on letter ids.
bool shortlex_less(const Word& a, const Word& b);

/// Recursive path ordering on words read as monadic terms (first letter
/// outermost), with the integer order on letters as precedence. A well-order
/// compatible with concatenation, so it orients rules for completion.
bool recursive_path_less(const Word& a, const Word& b);

enum class WordOrdering { RecursivePath, ShortLex };

struct ShortLexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

struct RewriteRule {
  Word lhs;
  Word rhs;
};

struct CompletionOptions {
  WordOrdering ordering = WordOrdering::RecursivePath;
  /// Maximum number of critical pairs examined before giving up.
  std::size_t pair_budget = 10000;
  /// Maximum number of live rules before giving up.
  std::size_t max_rules = 2000;
  /// 0 means unbounded.
  std::size_t max_lhs_length = 0;
};

struct CompletionStats {
  std::size_t pairs_examined = 0;
  std::size_t rules = 0;
  std::size_t max_lhs_length = 0;
};

/// A string rewriting system. Every rule has rhs < lhs in the reduction
/// ordering it was completed with, so reduction terminates.
class RewriteSystem {
public:
  RewriteSystem() = default;

  /// Knuth-Bendix completion of the given equations. Throws Error(Completion)
  /// naming the offending critical pair if a budget or the lhs length bound
  /// is exceeded.
  static RewriteSystem complete(const std::vector<std::pair<Word, Word>>& equations,
                                const CompletionOptions& options = {},
                                const std::function<std::string(const Word&)>& render = {});

  /// Irreducible descendant of w. With a confluent system this is the unique
  /// normal form of w's class.
  Word normal_form(const Word& w) const;
  bool is_irreducible(const Word& w) const;

  /// Rules in shortlex order of lhs.
  std::vector<RewriteRule> rules() const;
  std::size_t size() const { return table_.size(); }
  WordOrdering ordering() const { return ordering_; }
  const CompletionStats& stats() const { return stats_; }

  /// Number of single rewrite steps taken by the last normal_form call on
  /// this thread; exposed for the termination property tests.
  static std::size_t last_step_count();

private:
  void insert(Word lhs, Word rhs);
  void erase(const Word& lhs);

  std::unordered_map<Word, Word, WordHash> table_;
  std::vector<std::size_t> lengths_;  // distinct lhs lengths, ascending
  CompletionStats stats_;
  WordOrdering ordering_ = WordOrdering::RecursivePath;
};

/// a < b in the given ordering.
bool word_less(WordOrdering ordering, const Word& a, const Word& b);

}  // namespace bcgim
