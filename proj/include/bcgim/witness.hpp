#pragma once

#include "bcgim/coordalg.hpp"
#include "bcgim/homsuite.hpp"
#include "bcgim/liealg.hpp"

#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace bcgim {

/// Bracket/scale/sum tree over generator symbols. Nodes are immutable and
/// may be shared between trees.
class BracketExpr {
public:
  enum class Kind { Leaf, Scale, Bracket, Sum };
  using Ptr = std::shared_ptr<const BracketExpr>;

  static Ptr leaf(const GeneratorSymbol& sym);
  static Ptr scale(const Scalar& s, Ptr child);
  static Ptr bracket(Ptr a, Ptr b);
  static Ptr sum(std::vector<Ptr> terms);

  Kind kind() const { return kind_; }
  const GeneratorSymbol& symbol() const { return symbol_; }
  const Scalar& factor() const { return factor_; }
  const std::vector<Ptr>& children() const { return children_; }

  /// Longest root-to-leaf path; a leaf has depth 1.
  std::size_t depth() const;
  /// Node count of the unfolded tree.
  std::size_t size() const;

private:
  Kind kind_ = Kind::Leaf;
  GeneratorSymbol symbol_;
  Scalar factor_ = 1;
  std::vector<Ptr> children_;
};

/// `[e2, (1/2√2)·e3]`, sums as `(a + b)`.
std::string render(const BracketExpr& expr, const AffinizationSpec& spec);

enum class TargetShape { Vert, Hort, Ul, Ur, Bl };

/// "VERT", "HORT", "UL", "UR", "BL"
std::string shape_name(TargetShape shape);
/// Case-insensitive inverse of shape_name. Throws Error(UnsupportedTarget).
TargetShape parse_shape(const std::string& text);

/// scale · E_shape(i, j; monomial). j is ignored for VERT and HORT.
struct TargetSpec {
  TargetShape shape = TargetShape::Vert;
  int i = 1;
  int j = 1;
  Word monomial;
  Scalar scale = 1;
};

/// `UL(1,2; y[1,0,-1;1]·x[1,1,0;1]^-1)`, with a `(s)·` prefix when scale != 1.
std::string target_name(const TargetSpec& target, const CoordinateAlgebra& ctx);

/// Throws Error(IndexRange), Error(UnsupportedTarget) for a monomial not in
/// normal form or a diagonal UL whose monomial is not eta-fixed, and
/// Error(UnknownGenerator) for foreign letters.
SoElement construct(const TargetSpec& target, const CoordinateAlgebra& ctx);

/// Every intermediate element is evaluated and compared with the element it
/// is meant to be; a sign flip is absorbed by Scale(-1), anything else throws
/// Error(ConstructionBug).
BracketExpr::Ptr witness(const TargetSpec& target, const ImageTable& table);

SoElement evaluate(const BracketExpr& expr, const ImageTable& table);

struct WitnessReport {
  std::string target;
  std::string expression;
  std::size_t depth = 0;
  std::size_t size = 0;
  bool passed = false;
  /// Failure only: error message or both renderings.
  std::string detail;
};

/// Builds the witness and re-evaluates it independently against construct().
WitnessReport verify_witness(const TargetSpec& target, const ImageTable& table);

/// Uniform letters, normal form of a word of length <= max_len; indices
/// uniform with i != j for UL.
TargetSpec random_target(const CoordinateAlgebra& ctx, TargetShape shape, int max_len,
                         std::mt19937_64& rng);

}  // namespace bcgim
