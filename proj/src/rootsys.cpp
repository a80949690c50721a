#include "bcgim/rootsys.hpp"

#include "bcgim/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace bcgim {

namespace {

std::string vector_str(const LatticeVector& v) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v(i);
  }
  os << ']';
  return os.str();
}

// Returns the kind, or false if v is not a BC root.
bool classify(const LatticeVector& v, RootKind& kind) {
  int nonzero = 0;
  int ones = 0;
  int twos = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    int c = std::abs(v(i));
    if (c == 0) continue;
    ++nonzero;
    if (c == 1) {
      ++ones;
    } else if (c == 2) {
      ++twos;
    } else {
      return false;
    }
  }
  if (nonzero == 2 && ones == 2) {
    kind = RootKind::Long;
    return true;
  }
  if (nonzero == 1 && ones == 1) {
    kind = RootKind::Short;
    return true;
  }
  if (nonzero == 1 && twos == 1) {
    kind = RootKind::ExtraLong;
    return true;
  }
  return false;
}

bool lex_less(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

}  // namespace

Root::Root(LatticeVector coeffs) : coeffs_(std::move(coeffs)) {
  if (!classify(coeffs_, kind_)) {
    throw Error(ErrorCode::InvalidRoot, "not a BC_r root: " + vector_str(coeffs_));
  }
}

Root::Root(std::initializer_list<int> coeffs)
    : Root(from_vector(std::vector<int>(coeffs))) {}

Root Root::from_vector(const std::vector<int>& coeffs) {
  LatticeVector v(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) v(static_cast<Eigen::Index>(i)) = coeffs[i];
  return Root(std::move(v));
}

Root Root::epsilon(int rank, int i, int sign) {
  LatticeVector v = LatticeVector::Zero(rank);
  v(i - 1) = sign;
  return Root(std::move(v));
}

std::vector<int> Root::to_vector() const {
  return std::vector<int>(coeffs_.data(), coeffs_.data() + coeffs_.size());
}

std::string Root::str() const { return vector_str(coeffs_); }

bool operator<(const Root& a, const Root& b) { return lex_less(a.coeffs_, b.coeffs_); }

bool is_bc_root(const LatticeVector& v) {
  RootKind k;
  return classify(v, k);
}

bool in_delta_or_zero(const LatticeVector& v) { return v.isZero() || is_bc_root(v); }

LongRootShape long_root_shape(const Root& root) {
  if (root.kind() != RootKind::Long) {
    throw Error(ErrorCode::UnsupportedRoot,
                "only long roots can be adjoined, got " + root.str());
  }
  int first = -1;
  int second = -1;
  for (int i = 0; i < root.rank(); ++i) {
    if (root[i] == 0) continue;
    (first < 0 ? first : second) = i;
  }
  int a = root[first];
  int b = root[second];
  if (a > 0 && b > 0) return {LongRootShape::Pattern::Sum, first + 1, second + 1};
  if (a < 0 && b < 0) return {LongRootShape::Pattern::NegSum, first + 1, second + 1};
  if (a > 0) return {LongRootShape::Pattern::Difference, first + 1, second + 1};
  return {LongRootShape::Pattern::Difference, second + 1, first + 1};
}

bool is_omega_root(const Root& root) {
  if (root.kind() != RootKind::Long) return false;
  LongRootShape s = long_root_shape(root);
  return s.pattern != LongRootShape::Pattern::Difference && s.q == s.p + 1;
}

AffinizationSpec::AffinizationSpec(int rank, std::vector<AdjoinedRoot> adjoined)
    : rank_(rank), adjoined_(std::move(adjoined)) {
  if (rank_ < 3) {
    throw Error(ErrorCode::Rank, "rank must be at least 3, got " + std::to_string(rank_));
  }
  for (std::size_t m = 0; m < adjoined_.size(); ++m) {
    const AdjoinedRoot& a = adjoined_[m];
    if (a.root.rank() != rank_) {
      throw Error(ErrorCode::InvalidRoot, "adjoined root " + a.root.str() +
                                              " does not have rank " + std::to_string(rank_));
    }
    if (a.root.kind() != RootKind::Long) {
      throw Error(ErrorCode::UnsupportedRoot,
                  "adjoined root " + a.root.str() + " is not long; only long roots are supported");
    }
    if (a.copies < 1) {
      throw Error(ErrorCode::InvalidConfig,
                  "adjoined root " + a.root.str() + " needs copies >= 1");
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (adjoined_[k].root == a.root) {
        throw Error(ErrorCode::InvalidConfig,
                    "root " + a.root.str() + " listed twice; use the copies field");
      }
    }
    d_ += a.copies;
  }
}

Root AffinizationSpec::generator_root(int g) const {
  if (g < 0 || g >= generator_count()) {
    throw Error(ErrorCode::IndexRange, "generator index out of range");
  }
  if (g < rank_) return base_roots(rank_)[static_cast<std::size_t>(g)];
  return adjoined_[static_cast<std::size_t>(adjoined_slot(g).first)].root;
}

std::pair<int, int> AffinizationSpec::adjoined_slot(int g) const {
  if (g < rank_ || g >= generator_count()) {
    throw Error(ErrorCode::IndexRange, "not an adjoined generator index");
  }
  int offset = g - rank_;
  for (std::size_t m = 0; m < adjoined_.size(); ++m) {
    if (offset < adjoined_[m].copies) return {static_cast<int>(m), offset + 1};
    offset -= adjoined_[m].copies;
  }
  throw Error(ErrorCode::IndexRange, "not an adjoined generator index");
}

int AffinizationSpec::generator_index(int adjoined_index, int copy) const {
  int g = rank_;
  for (int m = 0; m < adjoined_index; ++m) g += adjoined_[static_cast<std::size_t>(m)].copies;
  if (adjoined_index < 0 || adjoined_index >= static_cast<int>(adjoined_.size()) || copy < 1 ||
      copy > adjoined_[static_cast<std::size_t>(adjoined_index)].copies) {
    throw Error(ErrorCode::IndexRange, "no such adjoined copy");
  }
  return g + copy - 1;
}

bool operator==(const AffinizationSpec& a, const AffinizationSpec& b) {
  if (a.rank_ != b.rank_ || a.adjoined_.size() != b.adjoined_.size()) return false;
  for (std::size_t m = 0; m < a.adjoined_.size(); ++m) {
    if (!(a.adjoined_[m].root == b.adjoined_[m].root) ||
        a.adjoined_[m].copies != b.adjoined_[m].copies) {
      return false;
    }
  }
  return true;
}

bool is_gim(const Eigen::MatrixXi& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::Dimension, "GIM check needs a square matrix");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 2) return false;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i == j) continue;
      if ((m(i, j) < 0) != (m(j, i) < 0)) return false;
      if ((m(i, j) > 0) != (m(j, i) > 0)) return false;
    }
  }
  return true;
}

GimMatrix::GimMatrix(Eigen::MatrixXi entries) : entries_(std::move(entries)) {
  if (!is_gim(entries_)) {
    throw Error(ErrorCode::InvalidConfig, "matrix violates the GIM sign axioms");
  }
}

std::vector<std::vector<int>> GimMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(entries_.rows()));
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      out[static_cast<std::size_t>(i)].push_back(entries_(i, j));
    }
  }
  return out;
}

int cartan_pairing(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::InvalidRoot, "pairing of roots with different ranks");
  }
  int num = 2 * a.coeffs().dot(b.coeffs());
  int den = a.coeffs().squaredNorm();
  if (den == 0 || num % den != 0) {
    throw Error(ErrorCode::InvalidRoot,
                "non-integral pairing of " + a.str() + " with " + b.str());
  }
  return num / den;
}

std::vector<Root> base_roots(int rank) {
  if (rank < 3) {
    throw Error(ErrorCode::Rank, "rank must be at least 3, got " + std::to_string(rank));
  }
  std::vector<Root> out;
  out.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i < rank; ++i) {
    LatticeVector v = LatticeVector::Zero(rank);
    v(i - 1) = 1;
    v(i) = -1;
    out.emplace_back(std::move(v));
  }
  out.push_back(Root::epsilon(rank, rank));
  return out;
}

Eigen::MatrixXi cartan_matrix_b(int rank) {
  std::vector<Root> base = base_roots(rank);
  Eigen::MatrixXi m(rank, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      m(i, j) = cartan_pairing(base[static_cast<std::size_t>(i)], base[static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

GimMatrix build_affinized_matrix(const AffinizationSpec& spec) {
  const int n = spec.generator_count();
  std::vector<Root> roots = base_roots(spec.rank());
  for (const AdjoinedRoot& a : spec.adjoined()) {
    if (a.root.kind() != RootKind::Long) {
      throw Error(ErrorCode::UnsupportedRoot, "adjoined root " + a.root.str() + " is not long");
    }
    for (int k = 0; k < a.copies; ++k) roots.push_back(a.root);
  }
  Eigen::MatrixXi m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = cartan_pairing(roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)]);
    }
  }
  return GimMatrix(std::move(m));
}

OmegaTheta classify_omega_theta(const AffinizationSpec& spec) {
  OmegaTheta out;
  for (const AdjoinedRoot& a : spec.adjoined()) {
    (is_omega_root(a.root) ? out.omega : out.theta).push_back(a.root);
  }
  return out;
}

std::string GradingDegree::str() const { return is_zero() ? "0" : vector_str(value); }

bool operator<(const GradingDegree& a, const GradingDegree& b) { return lex_less(a.value, b.value); }

GradingDegree zero_degree(int rank) { return {LatticeVector::Zero(rank)}; }

GradingDegree degree_of(const Root& root) { return {root.coeffs()}; }

GradingDegree root_of_position(int i, int j, int rank) {
  const int n = 2 * rank + 1;
  if (i < 1 || i > n || j < 1 || j > n) {
    throw Error(ErrorCode::IndexRange, "matrix position (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") outside 1.." + std::to_string(n));
  }
  auto weight = [rank](int k) {
    LatticeVector w = LatticeVector::Zero(rank);
    if (k <= rank) {
      w(k - 1) = 1;
    } else if (k > rank + 1) {
      w(2 * rank + 2 - k - 1) = -1;
    }
    return w;
  };
  return {weight(i) - weight(j)};
}

}  // namespace bcgim
