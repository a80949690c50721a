#include "bcgim/coordalg.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace bcgim;
using test::letter;

namespace {

// Omega = {e1+e2} at slot 0, Theta = {e1-e2} at slot 1.
const CoordinateAlgebra& mixed() {
  static const auto ctx =
      make_coordinate_algebra(AffinizationSpec(3, {{Root{1, 1, 0}, 1}, {Root{1, -1, 0}, 1}}));
  return *ctx;
}

}  // namespace

TEST_CASE("an Omega root alone gives x, x^-1 and cancellation") {
  auto ctx = make_coordinate_algebra(AffinizationSpec(3, {{Root{1, 1, 0}, 1}}));
  CHECK(ctx->letter_count() == 2);
  CHECK(ctx->render(ctx->primary_letter(0, 1)) == "x[1,1,0;1]");
  CHECK(ctx->render(ctx->primary_letter(0, 1, -1)) == "x[1,1,0;1]^-1");
  CHECK(ctx->rewriting().size() == 2);
  CHECK(ctx->mixing_relations().empty());
}

TEST_CASE("d = 0 gives the scalar field") {
  auto ctx = make_coordinate_algebra(AffinizationSpec(3, {}));
  CHECK(ctx->letter_count() == 0);
  CHECK(ctx->rewriting().size() == 0);
  CHECK(ctx->render(Word{}) == "1");
}

TEST_CASE("letter ids follow kind, slot, copy, exponent") {
  const CoordinateAlgebra& ctx = mixed();
  CHECK(ctx.letter_count() == 6);
  const LetterId x = ctx.id(GenKind::X, 0, 1);
  const LetterId z = ctx.id(GenKind::Z, 1, 1);
  const LetterId y = ctx.id(GenKind::Y, 1, 1);
  CHECK(x < z);
  CHECK(z < y);
  CHECK(ctx.inverse(y) == ctx.id(GenKind::Y, 1, 1, -1));
  CHECK(ctx.eta(y) == z);
  CHECK(ctx.eta(x) == x);
  CHECK(ctx.eta(ctx.inverse(y)) == ctx.inverse(z));
  CHECK(test::error_code([&] { ctx.id(GenKind::Y, 0, 1); }) == ErrorCode::UnknownGenerator);
}

TEST_CASE("normal forms from the mixing relations") {
  const CoordinateAlgebra& ctx = mixed();
  const NCElement x = letter(ctx, GenKind::X, 0);
  const NCElement xi = letter(ctx, GenKind::X, 0, 1, -1);
  const NCElement y = letter(ctx, GenKind::Y, 1);
  const NCElement yi = letter(ctx, GenKind::Y, 1, 1, -1);
  const NCElement z = letter(ctx, GenKind::Z, 1);
  CHECK(y * x == x * z);
  CHECK((y * yi).str() == "(1)");
  CHECK(y * yi == NCElement(1));
  CHECK(yi * y == NCElement(1));
  CHECK(xi * y == z * xi);
  CHECK((y + NCElement(1)) * x == x * z + x);
  CHECK(nc_scale(0, y * x).is_zero());
  CHECK(is_equal(y * x, x * z));
  CHECK_FALSE(is_equal(y, z));
  CHECK(is_equal(y, y));
  REQUIRE(ctx.mixing_relations().size() == 1);
  CHECK(ctx.mixing_relations()[0].family == 1);
}

TEST_CASE("eta") {
  const CoordinateAlgebra& ctx = mixed();
  const NCElement x = letter(ctx, GenKind::X, 0);
  const NCElement y = letter(ctx, GenKind::Y, 1);
  const NCElement z = letter(ctx, GenKind::Z, 1);
  CHECK(involution(y) == z);
  CHECK(involution(NCElement(1)) == NCElement(1));
  CHECK(involution(x * y) == z * x);
  CHECK(involution(Scalar::sqrt2() * y) == Scalar::sqrt2() * z);
}

TEST_CASE("rendering and parsing words") {
  const CoordinateAlgebra& ctx = mixed();
  const Word w = {ctx.id(GenKind::X, 0, 1), ctx.id(GenKind::Z, 1, 1, -1)};
  CHECK(ctx.render(w) == "x[1,1,0;1]·z[1,-1,0;1]^-1");
  CHECK(ctx.parse_word(ctx.render(w)) == w);
  CHECK(ctx.parse_word("x[1,1,0;1] * z[1,-1,0;1]^-1") == w);
  CHECK(ctx.parse_word("1").empty());
  CHECK(test::error_code([&] { ctx.parse_word("q[1,1,0;1]"); }).has_value());
  CHECK(test::error_code([&] { ctx.parse_word("x[1,0,1;1]"); }) == ErrorCode::UnknownGenerator);
  const NCElement e = NCElement::monomial(ctx, w, Scalar(-2));
  CHECK(e.str() == "-(2)·x[1,1,0;1]·z[1,-1,0;1]^-1");
}

TEST_CASE("ring axioms on random elements") {
  const CoordinateAlgebra& ctx = mixed();
  std::mt19937_64 rng(5);
  auto random = [&] {
    NCElement out;
    for (int t = 0; t < 2; ++t) {
      Word w;
      for (std::size_t k = rng() % 4; k > 0; --k) w.push_back(static_cast<LetterId>(rng() % 6));
      out += NCElement::monomial(ctx, w, Scalar(static_cast<long>(rng() % 5) - 2));
    }
    return out;
  };
  for (int n = 0; n < 100; ++n) {
    const NCElement a = random();
    const NCElement b = random();
    const NCElement c = random();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    CHECK(NCElement(1) * a == a);
    CHECK(involution(a * b) == involution(b) * involution(a));
    CHECK(involution(involution(a)) == a);
  }
}

TEST_CASE("contexts do not mix") {
  auto other = make_coordinate_algebra(AffinizationSpec(3, {{Root{1, 1, 0}, 1}}));
  const NCElement a = letter(mixed(), GenKind::X, 0);
  const NCElement b = letter(*other, GenKind::X, 0);
  CHECK(test::error_code([&] { (void)(a + b); }) == ErrorCode::ContextMismatch);
  CHECK(common_context(a, NCElement(3)) == &mixed());
}

TEST_CASE("soundness suite across co-adjoined triples") {
  for (int r : {3, 4}) {
    const std::vector<Root> longs = test::long_roots(r);
    std::mt19937_64 rng(static_cast<std::uint64_t>(r));
    for (int n = 0; n < 10; ++n) {
      std::vector<AdjoinedRoot> adj;
      for (int k = 0; k < 3; ++k) {
        const Root& root = longs[rng() % longs.size()];
        bool seen = false;
        for (AdjoinedRoot& a : adj) {
          if (a.root == root) {
            ++a.copies;
            seen = true;
          }
        }
        if (!seen) adj.push_back({root, 1});
      }
      auto ctx = make_coordinate_algebra(AffinizationSpec(r, adj));
      const CoordinateSoundnessReport rep = verify_coordinate_algebra(*ctx, 300, 12, 9);
      CHECK(rep.passed());
      CHECK(rep.words == 300);
    }
  }
}
