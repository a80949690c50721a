// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "bcgim/cli.hpp"
#include "bcgim/coordalg.hpp"
#include "bcgim/homsuite.hpp"
#include "bcgim/liealg.hpp"
#include "bcgim/rootsys.hpp"
#include "bcgim/witness.hpp"

#include "support.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace bcgim;

namespace {

struct Outcome {
  bool passed = true;
  std::string note;
};

using Clock = std::chrono::steady_clock;

/// Random spec: up to max_d copies in total, copies <= 2, distinct roots.
AffinizationSpec random_spec(int r, int max_d, std::mt19937_64& rng) {
  const std::vector<Root> longs = test::long_roots(r);
  std::vector<AdjoinedRoot> adj;
  int budget = static_cast<int>(rng() % static_cast<std::uint64_t>(max_d + 1));
  while (budget > 0) {
    const Root& root = longs[rng() % longs.size()];
    bool seen = false;
    for (const AdjoinedRoot& a : adj) seen = seen || a.root == root;
    if (seen) continue;
    const int copies = budget >= 2 && rng() % 3 == 0 ? 2 : 1;
    adj.push_back({root, copies});
    budget -= copies;
  }
  return AffinizationSpec(r, adj);
}

Root signed_pair(int r, int p, int sp, int q, int sq) {
  LatticeVector v = LatticeVector::Zero(r);
  v(p - 1) = sp;
  v(q - 1) = sq;
  return Root(v);
}

std::string describe(const AffinizationSpec& s) {
  std::ostringstream os;
  os << "r=" << s.rank() << " {";
  for (std::size_t k = 0; k < s.adjoined().size(); ++k) {
    os << (k ? " " : "") << s.adjoined()[k].root.str() << "x" << s.adjoined()[k].copies;
  }
  return os.str() + "}";
}

/// Specs of criteria 4 to 6: d = 0 at r = 3,4,5, the affine B_3, fixed
/// co-adjoined triples and duplicates, then random fill to 20 at r = 3,4.
std::vector<AffinizationSpec> homomorphism_specs() {
  std::vector<AffinizationSpec> out;
  for (int r : {3, 4, 5}) out.emplace_back(r, std::vector<AdjoinedRoot>{});
  out.emplace_back(3, std::vector<AdjoinedRoot>{{Root{-1, -1, 0}, 1}});
  std::vector<AffinizationSpec> random_part;
  for (auto [r, p, q] : {std::tuple{3, 1, 2}, std::tuple{3, 1, 3}, std::tuple{4, 2, 3},
                         std::tuple{4, 1, 4}, std::tuple{4, 3, 1}}) {
    random_part.emplace_back(r, std::vector<AdjoinedRoot>{{signed_pair(r, p, 1, q, -1), 1},
                                                          {signed_pair(r, p, 1, q, 1), 1},
                                                          {signed_pair(r, p, -1, q, -1), 1}});
  }
  random_part.emplace_back(3, std::vector<AdjoinedRoot>{{Root{1, 0, -1}, 2}, {Root{1, 0, 1}, 1}});
  random_part.emplace_back(4, std::vector<AdjoinedRoot>{{Root{0, 1, 1, 0}, 2},
                                                        {Root{0, 1, -1, 0}, 1}});
  random_part.emplace_back(4, std::vector<AdjoinedRoot>{{Root{-1, 0, 0, 1}, 2},
                                                        {Root{-1, 0, 0, -1}, 1}});
  std::mt19937_64 rng(2024);
  while (random_part.size() < 20) {
    const int r = rng() % 2 == 0 ? 3 : 4;
    AffinizationSpec s = random_spec(r, 3, rng);
    if (s.d() > 0) random_part.push_back(s);
  }
  out.insert(out.end(), random_part.begin(), random_part.end());
  return out;
}

struct Built {
  AffinizationSpec spec;
  std::shared_ptr<const CoordinateAlgebra> ctx;
  std::shared_ptr<const ImageTable> table;
};

const std::vector<Built>& built_specs() {
  static const std::vector<Built> all = [] {
    std::vector<Built> out;
    for (const AffinizationSpec& s : homomorphism_specs()) {
      auto ctx = make_coordinate_algebra(s);
      auto table = std::make_shared<const ImageTable>(build_image_table(s, *ctx));
      out.push_back({s, ctx, table});
    }
    return out;
  }();
  return all;
}

Outcome criterion1() {
  std::mt19937_64 rng(1);
  std::size_t specs = 0;
  for (int r : {3, 4, 5}) {
    for (int n = 0; n < 200; ++n) {
      const AffinizationSpec s = random_spec(r, 3, rng);
      const GimMatrix a = build_affinized_matrix(s);
      ++specs;
      if (!is_gim(a.entries()) || a.entries().topLeftCorner(r, r) != cartan_matrix_b(r)) {
        return {false, "not a GIM or wrong base block for " + describe(s)};
      }
    }
  }
  const GimMatrix b31 = build_affinized_matrix(AffinizationSpec(3, {{Root{-1, -1, 0}, 1}}));
  const Eigen::MatrixXi want =
      test::matrix({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -2, 2, 0}, {0, -1, 0, 2}});
  if (b31.entries() != want) return {false, "affine B_3 matrix differs"};
  return {true, std::to_string(specs) + " random specs, affine B_3 exact"};
}

Outcome criterion2() {
  std::size_t evaluations = 0;
  for (int r : {3, 4}) {
    const AffinizationSpec s(r, {{signed_pair(r, 1, 1, 2, 1), 1}, {signed_pair(r, 1, 1, 3, -1), 1}});
    const auto ctx = make_coordinate_algebra(s);
    const BracketLemmaReport rep = verify_bracket_lemmas(r, *ctx, 100, 17);
    for (const LemmaRecord& rec : rep.lemmas) {
      evaluations += rec.evaluations;
      if (!rec.passed()) {
        return {false, lemma_name(rec.id) + " fails at r=" + std::to_string(r) + ": " +
                           rec.failures.front().lhs + " vs " + rec.failures.front().rhs};
      }
    }
  }
  return {true, std::to_string(evaluations) + " exact evaluations over 15 formulas, r=3,4"};
}

Outcome criterion3() {
  const AffinizationSpec s(3, {{Root{1, 1, 0}, 1}, {Root{1, 0, -1}, 1}, {Root{0, -1, -1}, 1}});
  const auto ctx = make_coordinate_algebra(s);
  const LieAxiomReport rep = verify_lie_axioms(*ctx, 200, 3);
  if (!rep.passed()) return {false, rep.failures.front().axiom + ": " + rep.failures.front().detail};
  return {true, "200 triples, " + std::to_string(rep.brackets) + " brackets in so_7"};
}

Outcome criterion4() {
  std::size_t relations = 0;
  for (const Built& b : built_specs()) {
    const RelationReport rep =
        verify_gim_relations(b.spec, *b.table, build_affinized_matrix(b.spec));
    relations += rep.records.size();
    for (const RelationRecord& rec : rep.records) {
      if (!rec.passed) {
        return {false, describe(b.spec) + " " + rec.relation + " (" + std::to_string(rec.i) +
                           "," + std::to_string(rec.j) + ")"};
      }
    }
  }
  return {true, std::to_string(built_specs().size()) + " specs, " + std::to_string(relations) +
                    " relation instances"};
}

Outcome criterion5() {
  std::size_t records = 0;
  bool family[5] = {};
  for (const Built& b : built_specs()) {
    for (const ConsequenceRecord& rec : verify_coordinate_consequences(b.spec, *b.table).records) {
      ++records;
      if (!rec.passed) return {false, describe(b.spec) + " " + rec.proposition + " " + rec.subject};
      if (rec.proposition.rfind("mixing-", 0) == 0) family[rec.proposition.back() - '0'] = true;
    }
  }
  for (int f = 1; f <= 4; ++f) {
    if (!family[f]) return {false, "mixing family " + std::to_string(f) + " never exercised"};
  }
  return {true, std::to_string(records) + " consequences, all four mixing families"};
}

Outcome criterion6() {
  std::size_t words = 0;
  std::size_t radical = 0;
  for (const Built& b : built_specs()) {
    const GradednessReport rep = verify_gradedness(*b.table, 500, 4, 6);
    words += rep.words_sampled;
    radical += rep.radical_words;
    if (!rep.passed()) {
      return {false, describe(b.spec) + " " + rep.failures.front().check + " " +
                         rep.failures.front().subject};
    }
  }
  return {true, std::to_string(words) + " bracket words, " + std::to_string(radical) +
                    " outside Delta vanish"};
}

Outcome criterion7() {
  const AffinizationSpec s(3, {{Root{1, 1, 0}, 1}, {Root{1, 0, -1}, 1}});
  const auto ctx = make_coordinate_algebra(s);
  const ImageTable table = build_image_table(s, *ctx);
  std::mt19937_64 rng(7);
  std::size_t targets = 0;
  std::size_t with_z = 0;
  std::size_t with_inverse = 0;
  for (TargetShape shape : {TargetShape::Vert, TargetShape::Hort, TargetShape::Ul, TargetShape::Ur,
                            TargetShape::Bl}) {
    for (int n = 0; n < 50; ++n) {
      const TargetSpec t = random_target(*ctx, shape, 4, rng);
      const WitnessReport rep = verify_witness(t, table);
      ++targets;
      if (!rep.passed) return {false, rep.target + ": " + rep.detail};
      bool z = false;
      bool inv = false;
      for (LetterId l : t.monomial) {
        z = z || ctx->letter(l).gen.kind == GenKind::Z;
        inv = inv || ctx->letter(l).exp < 0;
      }
      with_z += z;
      with_inverse += inv;
    }
  }
  if (with_z == 0 || with_inverse == 0) return {false, "no z-letter or negative-power target drawn"};
  return {true, std::to_string(targets) + " targets, " + std::to_string(with_z) + " with z, " +
                    std::to_string(with_inverse) + " with inverses"};
}

Outcome criterion8() {
  std::size_t words = 0;
  std::size_t steps = 0;
  for (const Built& b : built_specs()) {
    const CoordinateSoundnessReport rep = verify_coordinate_algebra(*b.ctx, 1000, 12, 8);
    words += rep.words;
    steps = std::max(steps, rep.max_steps);
    if (!rep.passed()) {
      return {false, describe(b.spec) + " " + rep.failures.front().check + " " +
                         rep.failures.front().detail};
    }
  }
  return {true, std::to_string(words) + " words, at most " + std::to_string(steps) +
                    " rewrites, eta laws and stability exact"};
}

Outcome criterion9() {
  const RunConfig cfg = parse_config_text(
      R"({"rank":3, "adjoined":[{"root":[1,1,0]},{"root":[1,0,-1],"copies":2}], "trials":4, "seed":31})");
  const std::string a = format_report(run(cfg), Format::Json, false);
  const std::string b = format_report(run(cfg), Format::Json, false);
  if (a != b) return {false, "reports differ"};
  return {true, "two runs, " + std::to_string(a.size()) + " identical bytes"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 GIM construction", criterion1},
      {"2 bracket formulas", criterion2},
      {"3 Lie axioms", criterion3},
      {"4 homomorphism relations", criterion4},
      {"5 coordinate consequences", criterion5},
      {"6 gradedness and radical", criterion6},
      {"7 surjectivity witnesses", criterion7},
      {"8 coordinate algebra soundness", criterion8},
      {"9 determinism", criterion9},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = check();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    failed += out.passed ? 0 : 1;
    std::cout << (out.passed ? "[PASS] " : "[FAIL] ") << name << ": " << out.note << " ("
              << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
