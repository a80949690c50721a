#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bcgim {

/// Integer vector in epsilon-coordinates; the lattice spanned by BC_r.
using LatticeVector = Eigen::VectorXi;

enum class RootKind { Long, Short, ExtraLong };

/// A root of BC_r, coordinates in the epsilon basis. Patterns accepted:
/// ±e_i ± e_j (i != j), ±e_i, ±2e_i.
class Root {
public:
  Root() = default;
  /// Throws Error(InvalidRoot) if coeffs is not a BC_r root.
  explicit Root(LatticeVector coeffs);
  Root(std::initializer_list<int> coeffs);

  static Root from_vector(const std::vector<int>& coeffs);
  static Root epsilon(int rank, int i, int sign = 1);

  const LatticeVector& coeffs() const { return coeffs_; }
  int rank() const { return static_cast<int>(coeffs_.size()); }
  RootKind kind() const { return kind_; }
  int operator[](int i) const { return coeffs_(i); }

  std::vector<int> to_vector() const;
  /// "[1,1,0]"
  std::string str() const;

  friend bool operator==(const Root& a, const Root& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const Root& a, const Root& b);

private:
  LatticeVector coeffs_;
  RootKind kind_ = RootKind::Long;
};

/// True iff v is a BC_r root.
bool is_bc_root(const LatticeVector& v);
/// True iff v is zero or a BC_r root.
bool in_delta_or_zero(const LatticeVector& v);

/// The three long-root patterns, with 1-based indices. For Difference the root
/// is e_p - e_q; for Sum and NegSum p < q.
struct LongRootShape {
  enum class Pattern { Difference, Sum, NegSum };
  Pattern pattern;
  int p;
  int q;
};

/// Throws Error(UnsupportedRoot) for non-long roots.
LongRootShape long_root_shape(const Root& root);

/// Member of Omega: ±(e_i + e_{i+1}).
bool is_omega_root(const Root& root);

struct AdjoinedRoot {
  Root root;
  int copies = 1;
};

/// Rank r plus the ordered list of adjoined long roots with multiplicities.
class AffinizationSpec {
public:
  AffinizationSpec() = default;
  /// Validates: r >= 3, every root LONG of rank r, copies >= 1, no root
  /// listed twice.
  AffinizationSpec(int rank, std::vector<AdjoinedRoot> adjoined);

  int rank() const { return rank_; }
  const std::vector<AdjoinedRoot>& adjoined() const { return adjoined_; }
  /// d = total number of adjoined copies.
  int d() const { return d_; }
  /// r + d
  int generator_count() const { return rank_ + d_; }

  /// Root of 0-based generator index g under the ordering base roots first,
  /// then adjoined roots in spec order with copies consecutive.
  Root generator_root(int g) const;
  /// For g >= rank: (index into adjoined(), 1-based copy).
  std::pair<int, int> adjoined_slot(int g) const;
  /// Inverse of adjoined_slot.
  int generator_index(int adjoined_index, int copy) const;

  friend bool operator==(const AffinizationSpec& a, const AffinizationSpec& b);

private:
  int rank_ = 0;
  std::vector<AdjoinedRoot> adjoined_;
  int d_ = 0;
};

/// Square integer matrix with M_ii = 2 and sign-symmetric off-diagonal.
class GimMatrix {
public:
  /// Throws Error(Dimension) if non-square, Error(InvalidConfig) if the
  /// GIM axioms fail.
  explicit GimMatrix(Eigen::MatrixXi entries);

  int size() const { return static_cast<int>(entries_.rows()); }
  int operator()(int i, int j) const { return entries_(i, j); }
  const Eigen::MatrixXi& entries() const { return entries_; }

  std::vector<std::vector<int>> rows() const;

private:
  Eigen::MatrixXi entries_;
};

/// Throws Error(Dimension) for non-square input.
bool is_gim(const Eigen::MatrixXi& m);

/// 2 (a,b) / (a,a) with the epsilon dot product. Throws Error(InvalidRoot)
/// if the quotient is not integral.
int cartan_pairing(const Root& a, const Root& b);

/// e_1 - e_2, ..., e_{r-1} - e_r, e_r. Throws Error(Rank) for r < 3.
std::vector<Root> base_roots(int rank);

/// The r x r Cartan matrix of B_r.
Eigen::MatrixXi cartan_matrix_b(int rank);

GimMatrix build_affinized_matrix(const AffinizationSpec& spec);

struct OmegaTheta {
  std::vector<Root> omega;
  std::vector<Root> theta;
};
OmegaTheta classify_omega_theta(const AffinizationSpec& spec);

/// Degree label of a homogeneous element: a lattice vector, zero meaning the
/// zero label.
struct GradingDegree {
  LatticeVector value;

  bool is_zero() const { return value.isZero(); }
  /// In Delta ∪ {0}.
  bool admissible() const { return in_delta_or_zero(value); }
  std::string str() const;

  friend bool operator==(const GradingDegree& a, const GradingDegree& b) {
    return a.value == b.value;
  }
  friend bool operator<(const GradingDegree& a, const GradingDegree& b);
  GradingDegree operator-() const { return {-value}; }
  friend GradingDegree operator+(const GradingDegree& a, const GradingDegree& b) {
    return {a.value + b.value};
  }
};

GradingDegree zero_degree(int rank);
GradingDegree degree_of(const Root& root);

/// lambda_i - lambda_j with lambda = (e_1, ..., e_r, 0, -e_r, ..., -e_1).
/// Indices are 1-based in 1..2r+1; throws Error(IndexRange) otherwise.
GradingDegree root_of_position(int i, int j, int rank);

/// 2r + 2 - i, the mirror position.
inline int mirror(int i, int rank) { return 2 * rank + 2 - i; }

}  // namespace bcgim
