#include "bcgim/liealg.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace bcgim;
using test::letter;

namespace {

// Omega = {e1+e2} at slot 0, Theta = {e1-e3} at slot 1.
const CoordinateAlgebra& ctx3() {
  static const auto ctx =
      make_coordinate_algebra(AffinizationSpec(3, {{Root{1, 1, 0}, 1}, {Root{1, 0, -1}, 1}}));
  return *ctx;
}

}  // namespace

TEST_CASE("constructor entries") {
  const int r = 3;
  const SoElement v = e_vert(r, Scalar::sqrt2(), r);
  CHECK(v.entries().size() == 2);
  CHECK(v.at(3, 4) == NCElement(Scalar::sqrt2()));
  CHECK(v.at(4, 5) == NCElement(-Scalar::sqrt2()));

  const SoElement d = e_ul(2, 2, 1, r);
  CHECK(d == SoElement::unit(r, 2, 2, 1) + SoElement::unit(r, 6, 6, -1));
  CHECK(h_diag(2, 1, r) == d);

  const NCElement y = letter(ctx3(), GenKind::Y, 1);
  const SoElement u = e_ur(1, 1, y, r);
  CHECK(u.entries().size() == 1);
  CHECK(u.at(1, 7) == y - involution(y));
  CHECK(e_ur(1, 1, letter(ctx3(), GenKind::X, 0), r).is_zero());

  CHECK(test::error_code([] { e_vert(4, 1, 3); }) == ErrorCode::IndexRange);
  CHECK(test::error_code([] { e_ul(0, 1, 1, 3); }) == ErrorCode::IndexRange);
}

TEST_CASE("rendering") {
  CHECK(SoElement(3).str() == "0");
  CHECK(e_ul(1, 2, 1, 3).str() == "{(1,2): (1); (6,7): -(1)}");
}

TEST_CASE("membership") {
  CHECK(membership_check(SoElement(3)));
  CHECK_FALSE(membership_check(SoElement::unit(3, 1, 2, 1)));
  const NCElement a = letter(ctx3(), GenKind::Y, 1) + NCElement(2);
  for (int p = 1; p <= 3; ++p) {
    CHECK(membership_check(e_vert(p, a, 3)));
    CHECK(membership_check(e_hort(p, a, 3)));
    for (int q = 1; q <= 3; ++q) {
      CHECK(membership_check(e_ul(p, q, a, 3)));
      CHECK(membership_check(e_ur(p, q, a, 3)));
      CHECK(membership_check(e_bl(p, q, a, 3)));
    }
  }
}

TEST_CASE("brackets of single elements") {
  const NCElement a = letter(ctx3(), GenKind::Y, 1);
  const NCElement b = letter(ctx3(), GenKind::X, 0, 1, -1);
  const SoElement v = e_vert(2, a, 3);
  CHECK(mat_bracket(v, v).is_zero());
  CHECK(mat_bracket(e_vert(1, a, 3), e_vert(2, b, 3)) == e_ur(1, 2, -(a * involution(b)), 3));
  CHECK(mat_bracket(e_ur(1, 2, a, 3), e_ur(2, 3, b, 3)).is_zero());
  CHECK(test::error_code([&] { mat_bracket(v, e_vert(1, a, 4)); }) == ErrorCode::Dimension);
}

TEST_CASE("homogeneous decomposition") {
  const NCElement a = letter(ctx3(), GenKind::Y, 1);
  const HomogeneousDecomposition ul = decompose(e_ul(1, 2, a, 3));
  CHECK(ul.homogeneous());
  CHECK(ul.degree() == degree_of(Root{1, -1, 0}));
  CHECK(decompose(e_vert(2, a, 3)).degree() == degree_of(Root{0, 1, 0}));
  const HomogeneousDecomposition two = decompose(e_ul(1, 2, a, 3) + e_vert(1, a, 3));
  CHECK(two.parts.size() == 2);
  CHECK(test::error_code([&] { two.degree(); }) == ErrorCode::Dimension);
  CHECK(decompose(SoElement(3)).homogeneous());
}

TEST_CASE("bracket formula sides") {
  const NCElement a = letter(ctx3(), GenKind::Y, 1);
  const NCElement b = letter(ctx3(), GenKind::X, 0);
  // [vert_k(a), hort_k(b)] carries E_{r+1,r+1}(-ba + eta(a) eta(b)).
  auto [lhs, rhs] = lemma_sides(LemmaId::VertHort, {2, 2}, a, b, 3);
  CHECK(lhs == rhs);
  CHECK(lhs.at(4, 4) == involution(a) * involution(b) - b * a);
  for (int k = 1; k <= 3; ++k) {
    for (int p = 1; p <= 3; ++p) {
      for (int q = 1; q <= 3; ++q) {
        auto [l, r] = lemma_sides(LemmaId::VertUr, {k, p, q}, a, b, 3);
        CHECK(l.is_zero());
        CHECK(r.is_zero());
      }
    }
  }
  for (LemmaId id : all_lemmas()) {
    std::vector<int> ix(static_cast<std::size_t>(lemma_arity(id)), 1);
    auto [l, r] = lemma_sides(id, ix, NCElement(), NCElement(), 3);
    CHECK(l.is_zero());
    CHECK(r.is_zero());
  }
  CHECK(all_lemmas().size() == 15);
  CHECK(lemma_name(LemmaId::UlBl) == "[ul,bl]");
}

TEST_CASE("all fifteen formulas at r = 3") {
  const BracketLemmaReport rep = verify_bracket_lemmas(3, ctx3(), 4, 1);
  CHECK(rep.passed());
  CHECK(rep.lemmas.size() == 15);
  for (const LemmaRecord& rec : rep.lemmas) CHECK(rec.tuples == rec.tuples_passed);
  CHECK(test::error_code([] { verify_bracket_lemmas(2, ctx3(), 1, 1); }) == ErrorCode::Rank);
}

TEST_CASE("Lie axioms") {
  const LieAxiomReport rep = verify_lie_axioms(ctx3(), 60, 4);
  CHECK(rep.passed());
  CHECK(rep.triples == 60);
}
