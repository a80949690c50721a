#pragma once

#include "bcgim/rewriting.hpp"
#include "bcgim/rootsys.hpp"
#include "bcgim/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace bcgim {

/// Declaration order is the letter order used for orienting rules.
enum class GenKind { X, Z, Y };

char gen_kind_char(GenKind kind);

struct GenId {
  GenKind kind = GenKind::X;
  int adjoined_index = 0;  // position of the root in spec.adjoined()
  int copy = 1;            // 1-based
  friend bool operator==(const GenId&, const GenId&) = default;
};

struct Letter {
  GenId gen;
  int exp = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// One of the four mixing relations, kept for reporting and for the
/// eta-stability check.
struct MixingRelation {
  int family = 0;  // 1..4
  Word lhs;
  Word rhs;
};

/// Generator table plus completed rewriting system for the coordinate
/// algebra b of one spec. Immutable after construction.
class CoordinateAlgebra {
public:
  CoordinateAlgebra(AffinizationSpec spec, const CompletionOptions& options);

  const AffinizationSpec& spec() const { return spec_; }
  std::size_t letter_count() const { return letters_.size(); }
  std::size_t generator_count() const { return letters_.size() / 2; }

  const Letter& letter(LetterId id) const { return letters_.at(id); }
  /// Throws Error(UnknownGenerator) if the spec has no such generator.
  LetterId id(const Letter& l) const;
  LetterId id(GenKind kind, int adjoined_index, int copy, int exp = 1) const;
  /// The letter of coordinate x (Omega) or y (Theta) for an adjoined copy.
  LetterId primary_letter(int adjoined_index, int copy, int exp = 1) const;

  LetterId inverse(LetterId l) const { return static_cast<LetterId>(l ^ 1U); }
  LetterId eta(LetterId l) const { return eta_.at(l); }

  Word normal_form(const Word& w) const { return rules_.normal_form(w); }
  const RewriteSystem& rewriting() const { return rules_; }
  const std::vector<MixingRelation>& mixing_relations() const { return mixing_; }

  /// `x[1,1,0;1]`, `y[1,0,-1;2]^-1`
  std::string render(LetterId l) const;
  /// Letters joined by `·`; the empty word renders as `1`.
  std::string render(const Word& w) const;
  /// Inverse of render(Word). Separators `·`, `*` and blanks are accepted.
  /// Throws Error(UnknownGenerator) or Error(MalformedDocument).
  Word parse_word(const std::string& text) const;

private:
  AffinizationSpec spec_;
  std::vector<Letter> letters_;
  std::vector<LetterId> eta_;
  std::vector<MixingRelation> mixing_;
  RewriteSystem rules_;
};

/// Throws Error(Completion) if completion exceeds the options' bounds.
std::shared_ptr<const CoordinateAlgebra> make_coordinate_algebra(
    const AffinizationSpec& spec, const CompletionOptions& options = {});

/// Finite linear combination of normal-form words with Q(sqrt 2) scalars.
/// A null context means the element is a pure scalar and combines with any
/// context.
class NCElement {
public:
  using Terms = std::map<Word, Scalar, ShortLexLess>;

  NCElement() = default;
  NCElement(const Scalar& s);  // NOLINT(google-explicit-constructor)
  NCElement(long s) : NCElement(Scalar(s)) {}  // NOLINT(google-explicit-constructor)

  /// c · normal_form(w)
  static NCElement monomial(const CoordinateAlgebra& ctx, const Word& w, const Scalar& c = 1);
  static NCElement letter(const CoordinateAlgebra& ctx, LetterId l) {
    return monomial(ctx, Word{l});
  }

  const Terms& terms() const { return terms_; }
  const CoordinateAlgebra* context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the empty word.
  Scalar constant_term() const;
  /// True iff the element is c·w for a single word.
  bool is_monomial() const { return terms_.size() == 1; }

  std::string str() const;

  NCElement operator-() const;
  friend NCElement operator+(const NCElement& a, const NCElement& b);
  friend NCElement operator-(const NCElement& a, const NCElement& b);
  friend NCElement operator*(const NCElement& a, const NCElement& b);
  friend NCElement operator*(const Scalar& s, const NCElement& a);
  NCElement& operator+=(const NCElement& b) { return *this = *this + b; }
  friend bool operator==(const NCElement& a, const NCElement& b);

private:
  friend NCElement involution(const NCElement& a);
  void add_term(const Word& w, const Scalar& c);

  const CoordinateAlgebra* ctx_ = nullptr;
  Terms terms_;
};

NCElement nc_add(const NCElement& a, const NCElement& b);
NCElement nc_mul(const NCElement& a, const NCElement& b);
NCElement nc_scale(const Scalar& s, const NCElement& a);
/// eta: reverses words, x -> x, y <-> z, exponents kept.
NCElement involution(const NCElement& a);
bool is_equal(const NCElement& a, const NCElement& b);

/// Context shared by a and b; throws Error(ContextMismatch) if they differ.
const CoordinateAlgebra* common_context(const NCElement& a, const NCElement& b);

struct SoundnessFailure {
  std::string check;  // rule-order, normal-form, step-bound, eta-involution, ...
  std::string detail;
};

struct CoordinateSoundnessReport {
  std::size_t rules = 0;
  std::size_t words = 0;
  std::size_t max_steps = 0;
  std::size_t max_normal_length = 0;
  std::size_t eta_pairs = 0;
  std::size_t mixing_relations = 0;
  std::vector<SoundnessFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Every rule decreases in the rewriting order; `words` random words of
/// length <= max_len reach an irreducible, idempotent normal form within
/// `step_bound` rewrites (0: 64 per input letter), unchanged by inserting a
/// cancelling pair. Then eta is checked to be an involutive anti-automorphism
/// on random pairs and to map each side of every mixing relation to equal
/// elements.
CoordinateSoundnessReport verify_coordinate_algebra(const CoordinateAlgebra& ctx,
                                                    std::size_t words = 1000, int max_len = 12,
                                                    std::uint64_t seed = 1,
                                                    std::size_t step_bound = 0);

}  // namespace bcgim
