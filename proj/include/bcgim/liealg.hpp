#pragma once

#include "bcgim/coordalg.hpp"
#include "bcgim/rootsys.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bcgim {

/// Sparse (2r+1) x (2r+1) matrix over the coordinate algebra, 1-based.
/// Absent entries are zero; stored entries are nonzero.
class CoordMatrix {
public:
  using Position = std::pair<int, int>;
  using Entries = std::map<Position, NCElement>;

  CoordMatrix() = default;
  explicit CoordMatrix(int rank) : rank_(rank) {}

  /// E_{i,j}(a)
  static CoordMatrix unit(int rank, int i, int j, const NCElement& a);

  int rank() const { return rank_; }
  int dim() const { return 2 * rank_ + 1; }
  const Entries& entries() const { return entries_; }
  const CoordinateAlgebra* context() const { return ctx_; }
  bool is_zero() const { return entries_.empty(); }

  NCElement at(int i, int j) const;
  /// Adds a to entry (i, j). Throws Error(IndexRange).
  void add(int i, int j, const NCElement& a);

  /// (row, col, element rendering), row-major.
  std::vector<std::tuple<int, int, std::string>> triples() const;
  /// `{(1,2): (1)·x[1,1,0;1]; (6,7): ...}`, `0` when empty.
  std::string str() const;

  CoordMatrix operator-() const;
  friend CoordMatrix operator+(const CoordMatrix& a, const CoordMatrix& b);
  friend CoordMatrix operator-(const CoordMatrix& a, const CoordMatrix& b);
  friend CoordMatrix operator*(const Scalar& s, const CoordMatrix& a);
  CoordMatrix& operator+=(const CoordMatrix& b) { return *this = *this + b; }
  friend bool operator==(const CoordMatrix& a, const CoordMatrix& b);

private:
  void check_compatible(const CoordMatrix& other) const;

  int rank_ = 0;
  const CoordinateAlgebra* ctx_ = nullptr;
  Entries entries_;
};

/// Elements of so_{2r+1}(b, eta) share the representation; the membership
/// condition is checked by membership_check and asserted by mat_bracket.
using SoElement = CoordMatrix;

/// Ordinary matrix product.
CoordMatrix mat_product(const CoordMatrix& a, const CoordMatrix& b);
/// a·b - b·a. Throws Error(ConstructionBug) if the result fails membership,
/// which cannot happen for member inputs.
SoElement mat_bracket(const SoElement& a, const SoElement& b);
/// (M^eta)^t G + G M = 0 with G the anti-diagonal ones matrix.
bool membership_check(const CoordMatrix& m);

SoElement e_vert(int k, const NCElement& a, int rank);
SoElement e_hort(int k, const NCElement& a, int rank);
SoElement e_ul(int p, int q, const NCElement& a, int rank);
SoElement e_ur(int p, int q, const NCElement& a, int rank);
SoElement e_bl(int p, int q, const NCElement& a, int rank);
/// e_ul(p, p, s)
SoElement h_diag(int p, const Scalar& s, int rank);

struct HomogeneousDecomposition {
  std::map<GradingDegree, SoElement> parts;

  /// Zero counts as homogeneous.
  bool homogeneous() const { return parts.size() <= 1; }
  /// Degree of the single part; throws Error(Dimension) otherwise.
  GradingDegree degree() const;
};

HomogeneousDecomposition decompose(const SoElement& m);

enum class LemmaId {
  VertVert, VertHort, VertUl, VertUr, VertBl,
  HortHort, HortUl, HortUr, HortBl,
  UlUl, UlUr, UlBl, UrUr, UrBl, BlBl,
};

/// "[vert,vert]" and so on.
std::string lemma_name(LemmaId id);
std::vector<LemmaId> all_lemmas();
/// Number of free indices (2, 3 or 4).
int lemma_arity(LemmaId id);

/// Both sides of one bracket formula for given indices and coordinates.
std::pair<SoElement, SoElement> lemma_sides(LemmaId id, const std::vector<int>& indices,
                                            const NCElement& a, const NCElement& b, int rank);

struct LemmaFailure {
  std::vector<int> indices;
  std::string a;
  std::string b;
  std::string lhs;
  std::string rhs;
};

struct LemmaRecord {
  LemmaId id = LemmaId::VertVert;
  std::size_t tuples = 0;
  std::size_t tuples_passed = 0;
  std::size_t evaluations = 0;
  std::vector<std::vector<int>> failed_tuples;
  /// First few failing evaluations with both sides rendered.
  std::vector<LemmaFailure> failures;
  bool passed() const { return failures.empty(); }
};

struct BracketLemmaReport {
  int rank = 0;
  std::size_t trials = 0;
  std::vector<LemmaRecord> lemmas;
  bool passed() const;
};

/// Random coordinate: scalar times a random word of length <= max_len, or a
/// sum of two such terms.
NCElement random_coordinate(const CoordinateAlgebra& ctx, std::mt19937_64& rng, int max_len = 3);
/// Nonzero a + b·sqrt2 with small numerators and denominators.
Scalar random_scalar(std::mt19937_64& rng);

/// For every lemma and every index tuple in 1..r, `trials` random coordinate
/// pairs (the first pair is a = b = 0) are checked exactly.
BracketLemmaReport verify_bracket_lemmas(int rank, const CoordinateAlgebra& ctx,
                                         std::size_t trials, std::uint64_t seed);

struct LieAxiomFailure {
  std::string axiom;  // membership, antisymmetry, jacobi
  std::string detail;
};

struct LieAxiomReport {
  std::size_t triples = 0;
  std::size_t brackets = 0;
  std::vector<LieAxiomFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Random homogeneous element: one of the five shapes (ul possibly
/// diagonal) with coordinate scalar times a word of length <= max_len.
SoElement random_homogeneous(const CoordinateAlgebra& ctx, std::mt19937_64& rng, int max_len = 3);

/// Antisymmetry and Jacobi on `triples` random homogeneous triples; every
/// bracket evaluated must satisfy membership_check.
LieAxiomReport verify_lie_axioms(const CoordinateAlgebra& ctx, std::size_t triples,
                                 std::uint64_t seed);

}  // namespace bcgim
