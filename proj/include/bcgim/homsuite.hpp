#pragma once

#include "bcgim/coordalg.hpp"
#include "bcgim/liealg.hpp"
#include "bcgim/rootsys.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bcgim {

enum class Role { E, F, H };

/// A Chevalley-type generator of gim(A^[d]); index is 0-based in the
/// generator ordering of build_affinized_matrix.
struct GeneratorSymbol {
  Role role = Role::E;
  int index = 0;
  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// `e2`, `f3`, `h[1,1,0;2]`
std::string symbol_name(const AffinizationSpec& spec, const GeneratorSymbol& sym);
/// Inverse of symbol_name. Throws Error(UnknownGenerator).
GeneratorSymbol parse_symbol(const AffinizationSpec& spec, const std::string& text);

/// Images of all r+d generator triples under phi, with their degrees.
class ImageTable {
public:
  struct Triple {
    SoElement e;
    SoElement f;
    SoElement h;
  };

  ImageTable(const AffinizationSpec& spec, const CoordinateAlgebra& ctx,
             std::vector<Triple> images);

  const AffinizationSpec& spec() const { return spec_; }
  const CoordinateAlgebra& context() const { return *ctx_; }
  int rank() const { return spec_.rank(); }
  int size() const { return static_cast<int>(images_.size()); }

  /// Throws Error(UnknownGenerator) for an index out of range.
  const SoElement& image(const GeneratorSymbol& sym) const;
  /// deg e = root, deg f = -root, deg h = 0.
  GradingDegree degree(const GeneratorSymbol& sym) const;

  /// Copy with one image replaced; used for negative controls.
  ImageTable with_override(const GeneratorSymbol& sym, const SoElement& value) const;

private:
  AffinizationSpec spec_;
  const CoordinateAlgebra* ctx_;
  std::vector<Triple> images_;
};

/// Throws Error(SpecMismatch) if ctx was built from a different spec, and
/// Error(ConstructionBug) if an image is not homogeneous of its degree.
ImageTable build_image_table(const AffinizationSpec& spec, const CoordinateAlgebra& ctx);

/// ad(x)^n y
SoElement ad_power(const SoElement& x, const SoElement& y, int n);

struct RelationRecord {
  std::string relation;  // R1.he, R2.ade, ...
  int i = 0;             // 1-based generator indices
  int j = 0;
  bool passed = true;
  std::string lhs;  // rendered only on failure
  std::string rhs;
};

/// [e_{mu,k}, f_{mu,l}] for distinct copies k != l: reported, not asserted.
struct CopyObservation {
  int i = 0;
  int j = 0;
  std::string value;
};

struct RelationReport {
  std::vector<RelationRecord> records;
  std::vector<CopyObservation> observations;
  std::size_t passed() const;
  std::size_t failed() const;
};

RelationReport verify_gim_relations(const AffinizationSpec& spec, const ImageTable& table,
                                    const GimMatrix& a);

struct GradednessFailure {
  std::string check;  // image-degree, radical, word-degree
  std::string subject;
  std::string detail;
};

struct GradednessReport {
  std::size_t images_checked = 0;
  std::size_t words_sampled = 0;
  /// Sampled words whose degree lies outside Delta ∪ {0}.
  std::size_t radical_words = 0;
  std::vector<GradednessFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Each image homogeneous of its degree; then `samples` random left-normed
/// bracket words of length 2..max_length: words whose degree leaves
/// Delta ∪ {0} must vanish, the rest must be homogeneous of that degree.
GradednessReport verify_gradedness(const ImageTable& table, std::size_t samples = 500,
                                   int max_length = 4, std::uint64_t seed = 1);

struct ConsequenceRecord {
  std::string proposition;  // inverse, eta-fixed, mixing
  std::string subject;
  bool passed = true;
  std::string detail;
};

struct ConsequenceReport {
  std::vector<ConsequenceRecord> records;
  std::size_t failed() const;
};

/// Inverse coordinates, eta-fixed Omega coordinates, and for each adjoined
/// e_p - e_q in Theta with a co-adjoined +-(e_p + e_q) partner: with s, t the
/// coordinates read in the (p,q) orientation, s·eta(t) = t·eta(s) for the
/// plus partner and eta(s)·t = eta(t)·s for the minus partner.
ConsequenceReport verify_coordinate_consequences(const AffinizationSpec& spec,
                                                 const ImageTable& table);

}  // namespace bcgim
