#include "bcgim/rewriting.hpp"

#include "bcgim/error.hpp"

#include <algorithm>
#include <deque>

namespace bcgim {

namespace {

thread_local std::size_t g_last_steps = 0;

bool contains_factor(const Word& haystack, const Word& needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

std::string default_render(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

}  // namespace

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool recursive_path_less(const Word& a, const Word& b) {
  // gt[i][j]: b[i..] > a[j..]; eq[i][j]: b[i..] == a[j..]. Filled from the ends.
  const std::size_t nb = b.size();
  const std::size_t na = a.size();
  const std::size_t stride = na + 1;
  std::vector<char> gt((nb + 1) * stride, 0);
  std::vector<char> eq((nb + 1) * stride, 0);
  auto at = [stride](std::size_t i, std::size_t j) { return i * stride + j; };
  for (std::size_t i = nb + 1; i-- > 0;) {
    for (std::size_t j = na + 1; j-- > 0;) {
      if (i == nb || j == na) {
        eq[at(i, j)] = (i == nb && j == na);
        gt[at(i, j)] = (i < nb && j == na);
        continue;
      }
      eq[at(i, j)] = nb - i == na - j && b[i] == a[j] && eq[at(i + 1, j + 1)];
      gt[at(i, j)] = eq[at(i + 1, j)] || gt[at(i + 1, j)] ||
                     (b[i] > a[j] && gt[at(i, j + 1)]) ||
                     (b[i] == a[j] && gt[at(i + 1, j + 1)]);
    }
  }
  return gt[at(0, 0)];
}

bool word_less(WordOrdering ordering, const Word& a, const Word& b) {
  return ordering == WordOrdering::ShortLex ? shortlex_less(a, b) : recursive_path_less(a, b);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (LetterId c : w) {
    h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t RewriteSystem::last_step_count() { return g_last_steps; }

void RewriteSystem::insert(Word lhs, Word rhs) {
  std::size_t len = lhs.size();
  table_[std::move(lhs)] = std::move(rhs);
  if (std::find(lengths_.begin(), lengths_.end(), len) == lengths_.end()) {
    lengths_.push_back(len);
    std::sort(lengths_.begin(), lengths_.end());
  }
}

void RewriteSystem::erase(const Word& lhs) {
  table_.erase(lhs);
  std::size_t len = lhs.size();
  bool still_used = std::any_of(table_.begin(), table_.end(),
                                [len](const auto& kv) { return kv.first.size() == len; });
  if (!still_used) lengths_.erase(std::find(lengths_.begin(), lengths_.end(), len));
}

Word RewriteSystem::normal_form(const Word& w) const {
  std::size_t steps = 0;
  Word out;
  out.reserve(w.size());
  // Pending input kept reversed so the next letter is at the back.
  Word input(w.rbegin(), w.rend());
  Word probe;
  while (!input.empty()) {
    out.push_back(input.back());
    input.pop_back();
    // out minus its last letter is irreducible, so any redex is a suffix.
    for (std::size_t len : lengths_) {
      if (len > out.size()) break;
      probe.assign(out.end() - static_cast<std::ptrdiff_t>(len), out.end());
      auto it = table_.find(probe);
      if (it == table_.end()) continue;
      out.resize(out.size() - len);
      input.insert(input.end(), it->second.rbegin(), it->second.rend());
      ++steps;
      break;
    }
  }
  g_last_steps = steps;
  return out;
}

bool RewriteSystem::is_irreducible(const Word& w) const {
  for (std::size_t len : lengths_) {
    if (len > w.size()) break;
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      Word probe(w.begin() + static_cast<std::ptrdiff_t>(i),
                 w.begin() + static_cast<std::ptrdiff_t>(i + len));
      if (table_.count(probe)) return false;
    }
  }
  return true;
}

std::vector<RewriteRule> RewriteSystem::rules() const {
  std::vector<RewriteRule> out;
  out.reserve(table_.size());
  for (const auto& [lhs, rhs] : table_) out.push_back({lhs, rhs});
  std::sort(out.begin(), out.end(),
            [](const RewriteRule& a, const RewriteRule& b) { return shortlex_less(a.lhs, b.lhs); });
  return out;
}

RewriteSystem RewriteSystem::complete(const std::vector<std::pair<Word, Word>>& equations,
                                      const CompletionOptions& options,
                                      const std::function<std::string(const Word&)>& render) {
  auto show = [&](const Word& w) { return render ? render(w) : default_render(w); };
  RewriteSystem sys;
  sys.ordering_ = options.ordering;
  std::deque<std::pair<Word, Word>> pending(equations.begin(), equations.end());
  std::size_t pairs = 0;

  auto overlaps = [&](const RewriteRule& a, const RewriteRule& b) {
    // Proper overlaps: a nonempty proper suffix of a.lhs equals a prefix of b.lhs.
    const std::size_t max_k = std::min(a.lhs.size(), b.lhs.size());
    for (std::size_t k = 1; k < max_k; ++k) {
      if (!std::equal(a.lhs.end() - static_cast<std::ptrdiff_t>(k), a.lhs.end(), b.lhs.begin())) {
        continue;
      }
      Word left = a.rhs;
      left.insert(left.end(), b.lhs.begin() + static_cast<std::ptrdiff_t>(k), b.lhs.end());
      Word right(a.lhs.begin(), a.lhs.end() - static_cast<std::ptrdiff_t>(k));
      right.insert(right.end(), b.rhs.begin(), b.rhs.end());
      if (++pairs > options.pair_budget) {
        Word overlap = a.lhs;
        overlap.insert(overlap.end(), b.lhs.begin() + static_cast<std::ptrdiff_t>(k), b.lhs.end());
        throw Error(ErrorCode::Completion,
                    "completion budget of " + std::to_string(options.pair_budget) +
                        " critical pairs exceeded at overlap " + show(overlap) + " of rules " +
                        show(a.lhs) + " -> " + show(a.rhs) + " and " + show(b.lhs) + " -> " +
                        show(b.rhs));
      }
      pending.emplace_back(std::move(left), std::move(right));
    }
  };

  while (!pending.empty()) {
    auto [u, v] = std::move(pending.front());
    pending.pop_front();
    u = sys.normal_form(u);
    v = sys.normal_form(v);
    if (u == v) continue;
    if (word_less(options.ordering, u, v)) std::swap(u, v);
    if (options.max_lhs_length != 0 && u.size() > options.max_lhs_length) {
      throw Error(ErrorCode::Completion,
                  "completion produced rule " + show(u) + " -> " + show(v) +
                      " whose left side exceeds the length bound " +
                      std::to_string(options.max_lhs_length));
    }

    std::vector<Word> obsolete;
    for (const auto& [lhs, rhs] : sys.table_) {
      if (contains_factor(lhs, u)) obsolete.push_back(lhs);
    }
    for (const Word& lhs : obsolete) {
      pending.emplace_back(lhs, sys.table_.at(lhs));
      sys.erase(lhs);
    }
    sys.insert(u, v);
    if (sys.table_.size() > options.max_rules) {
      throw Error(ErrorCode::Completion,
                  "completion exceeded " + std::to_string(options.max_rules) +
                      " rules while adding " + show(u) + " -> " + show(v));
    }
    for (auto& [lhs, rhs] : sys.table_) rhs = sys.normal_form(rhs);

    RewriteRule fresh{u, sys.table_.at(u)};
    for (const RewriteRule& other : sys.rules()) {
      overlaps(fresh, other);
      if (other.lhs != fresh.lhs) overlaps(other, fresh);
    }
  }

  sys.stats_.pairs_examined = pairs;
  sys.stats_.rules = sys.table_.size();
  for (const auto& [lhs, rhs] : sys.table_) {
    sys.stats_.max_lhs_length = std::max(sys.stats_.max_lhs_length, lhs.size());
  }
  return sys;
}

}  // namespace bcgim
