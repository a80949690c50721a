#include "bcgim/homsuite.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace bcgim;
using test::letter;

namespace {

struct Fixture {
  AffinizationSpec spec;
  std::shared_ptr<const CoordinateAlgebra> ctx;
  ImageTable table;
  GimMatrix a;

  explicit Fixture(AffinizationSpec s)
      : spec(s),
        ctx(make_coordinate_algebra(s)),
        table(build_image_table(s, *ctx)),
        a(build_affinized_matrix(s)) {}
};

}  // namespace

TEST_CASE("generator symbols") {
  AffinizationSpec spec(3, {{Root{1, 0, -1}, 2}});
  CHECK(symbol_name(spec, {Role::E, 1}) == "e2");
  CHECK(symbol_name(spec, {Role::F, 4}) == "f[1,0,-1;2]");
  CHECK(parse_symbol(spec, "h[1,0,-1;1]") == GeneratorSymbol{Role::H, 3});
  CHECK(test::error_code([&] { parse_symbol(spec, "e9"); }) == ErrorCode::UnknownGenerator);
}

TEST_CASE("image table entries") {
  Fixture f(AffinizationSpec(3, {{Root{0, 1, 1}, 1}, {Root{1, 0, -1}, 1}, {Root{1, 0, 1}, 1}}));
  const int r = 3;
  const ImageTable& t = f.table;
  // omega = e2+e3
  CHECK(t.image({Role::H, 3}) == e_ul(2, 2, 1, r) + e_ul(3, 3, 1, r));
  // theta = e1-e3
  CHECK(t.image({Role::E, 4}) == e_ul(1, 3, letter(*f.ctx, GenKind::Y, 1), r));
  // theta = e1+e3, a Theta sum root
  CHECK(t.image({Role::F, 5}) == e_bl(3, 1, letter(*f.ctx, GenKind::Y, 2, 1, -1), r));
  CHECK(t.image({Role::E, 2}) == e_vert(3, Scalar::sqrt2(), r));
  CHECK(t.degree({Role::E, 4}) == degree_of(Root{1, 0, -1}));
  CHECK(t.degree({Role::F, 4}) == -degree_of(Root{1, 0, -1}));
  CHECK(t.degree({Role::H, 4}).is_zero());
  CHECK(test::error_code([&] { t.image({Role::E, 6}); }) == ErrorCode::UnknownGenerator);
}

TEST_CASE("a coordinate algebra from another spec is rejected") {
  auto other = make_coordinate_algebra(AffinizationSpec(3, {}));
  CHECK(test::error_code([&] {
          build_image_table(AffinizationSpec(3, {{Root{1, 1, 0}, 1}}), *other);
        }) == ErrorCode::SpecMismatch);
}

TEST_CASE("ad_power") {
  Fixture f(AffinizationSpec(3, {{Root{1, -1, 0}, 1}, {Root{-1, 1, 0}, 1}}));
  const SoElement& e3 = f.table.image({Role::E, 3});
  const SoElement& e4 = f.table.image({Role::E, 4});
  CHECK(ad_power(e3, e4, 0) == e4);
  CHECK(f.a(3, 4) == -2);
  CHECK(ad_power(e3, e4, 3).is_zero());
  for (int i = 0; i < f.table.size(); ++i) {
    for (int j = 0; j < f.table.size(); ++j) {
      CHECK(ad_power(f.table.image({Role::H, i}), f.table.image({Role::E, j}), 1) ==
            Scalar(f.a(i, j)) * f.table.image({Role::E, j}));
    }
  }
}

TEST_CASE("orthogonal co-adjoined roots commute") {
  Fixture f(AffinizationSpec(3, {{Root{1, 1, 0}, 2}, {Root{1, -1, 0}, 1}}));
  CHECK(f.a(3, 5) == 0);
  CHECK(mat_bracket(f.table.image({Role::E, 5}), f.table.image({Role::E, 3})).is_zero());
  // two copies of one root
  CHECK(f.a(3, 4) == 2);
  CHECK(mat_bracket(f.table.image({Role::E, 3}), f.table.image({Role::E, 4})).is_zero());
}

TEST_CASE("B_r relations without adjoined roots") {
  for (int r : {3, 4, 5}) {
    Fixture f(AffinizationSpec(r, {}));
    const RelationReport rep = verify_gim_relations(f.spec, f.table, f.a);
    CHECK(rep.failed() == 0);
    CHECK(rep.passed() > 0);
  }
}

TEST_CASE("relations for the affine B_3") {
  Fixture f(AffinizationSpec(3, {{Root{-1, -1, 0}, 1}}));
  const RelationReport rep = verify_gim_relations(f.spec, f.table, f.a);
  CHECK(rep.failed() == 0);
  const GradednessReport g = verify_gradedness(f.table, 200, 4, 2);
  CHECK(g.passed());
  CHECK(g.images_checked == 12);
}

TEST_CASE("co-adjoined triples, adjacent and distant") {
  for (auto [p, q] : {std::pair{1, 2}, std::pair{1, 3}}) {
    LatticeVector d = LatticeVector::Zero(3);
    d(p - 1) = 1;
    d(q - 1) = -1;
    LatticeVector s = LatticeVector::Zero(3);
    s(p - 1) = 1;
    s(q - 1) = 1;
    Fixture f(AffinizationSpec(3, {{Root(d), 2}, {Root(s), 1}, {Root(LatticeVector(-s)), 1}}));
    const RelationReport rep = verify_gim_relations(f.spec, f.table, f.a);
    CHECK(rep.failed() == 0);
    CHECK_FALSE(rep.observations.empty());
    const ConsequenceReport cons = verify_coordinate_consequences(f.spec, f.table);
    CHECK(cons.failed() == 0);
    std::size_t mixing = 0;
    for (const ConsequenceRecord& rec : cons.records) mixing += rec.proposition.rfind("mixing", 0) == 0;
    CHECK(mixing >= 2);
  }
}

TEST_CASE("a corrupted image breaks the relations") {
  Fixture f(AffinizationSpec(3, {{Root{-1, -1, 0}, 1}}));
  const GeneratorSymbol e1{Role::E, 0};
  const ImageTable bad = f.table.with_override(e1, Scalar(2) * f.table.image(e1));
  const RelationReport rep = verify_gim_relations(f.spec, bad, f.a);
  CHECK(rep.failed() > 0);
  bool rendered = false;
  for (const RelationRecord& rec : rep.records) rendered = rendered || (!rec.passed && !rec.lhs.empty());
  CHECK(rendered);
}

TEST_CASE("gradedness and the radical") {
  Fixture f(AffinizationSpec(3, {{Root{1, 1, 0}, 1}, {Root{1, 0, 1}, 1}}));
  const SoElement& e1 = f.table.image({Role::E, 0});
  CHECK(mat_bracket(e1, e1).is_zero());
  CHECK(mat_bracket(f.table.image({Role::E, 3}), f.table.image({Role::E, 4})).is_zero());
  CHECK(f.table.degree({Role::E, 3}) == degree_of(Root{1, 1, 0}));
  const GradednessReport rep = verify_gradedness(f.table, 300, 4, 7);
  CHECK(rep.passed());
  CHECK(rep.words_sampled == 300);
  CHECK(rep.radical_words > 0);
}

TEST_CASE("coordinate consequences") {
  Fixture f(AffinizationSpec(3, {{Root{1, 1, 0}, 1}, {Root{1, -1, 0}, 1}}));
  const ConsequenceReport rep = verify_coordinate_consequences(f.spec, f.table);
  CHECK(rep.failed() == 0);
  bool inverse = false;
  bool fixed = false;
  bool mixing = false;
  for (const ConsequenceRecord& rec : rep.records) {
    inverse = inverse || rec.proposition == "inverse";
    fixed = fixed || rec.proposition == "eta-fixed";
    mixing = mixing || rec.proposition == "mixing-1";
  }
  CHECK(inverse);
  CHECK(fixed);
  CHECK(mixing);
}
