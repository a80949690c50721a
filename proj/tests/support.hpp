#pragma once

#include "bcgim/coordalg.hpp"
#include "bcgim/error.hpp"
#include "bcgim/rootsys.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace test {

/// Code of the bcgim::Error thrown by f, or nullopt.
template <class F>
std::optional<bcgim::ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const bcgim::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Eigen::MatrixXi matrix(const std::vector<std::vector<int>>& rows) {
  Eigen::MatrixXi m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

/// All long roots +-e_i +- e_j of rank r.
inline std::vector<bcgim::Root> long_roots(int r) {
  std::vector<bcgim::Root> out;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      for (int a : {1, -1}) {
        for (int b : {1, -1}) {
          bcgim::LatticeVector v = bcgim::LatticeVector::Zero(r);
          v(i) = a;
          v(j) = b;
          out.emplace_back(v);
        }
      }
    }
  }
  return out;
}

/// Letter of kind k for adjoined root m, copy c.
inline bcgim::NCElement letter(const bcgim::CoordinateAlgebra& ctx, bcgim::GenKind k, int m,
                               int c = 1, int exp = 1) {
  return bcgim::NCElement::letter(ctx, ctx.id(k, m, c, exp));
}

}  // namespace test
