#include "bcgim/homsuite.hpp"

#include "bcgim/error.hpp"

#include <random>

namespace bcgim {

namespace {

char role_char(Role role) {
  switch (role) {
    case Role::E: return 'e';
    case Role::F: return 'f';
    case Role::H: return 'h';
  }
  return '?';
}

SoElement sum(SoElement a, const SoElement& b) { return a += b; }

struct Coordinates {
  NCElement e;
  NCElement f;
};

// Coordinates of an adjoined generator, read off the defining positions of
// its e and f images.
Coordinates read_coordinates(const ImageTable& table, int g) {
  const int r = table.rank();
  const Root root = table.spec().generator_root(g);
  const LongRootShape s = long_root_shape(root);
  const SoElement& e = table.image({Role::E, g});
  const SoElement& f = table.image({Role::F, g});
  switch (s.pattern) {
    case LongRootShape::Pattern::Difference:
      return {e.at(s.p, s.q), f.at(s.q, s.p)};
    case LongRootShape::Pattern::Sum:
      return {e.at(s.p, mirror(s.q, r)), f.at(mirror(s.q, r), s.p)};
    case LongRootShape::Pattern::NegSum:
      return {e.at(mirror(s.p, r), s.q), f.at(s.q, mirror(s.p, r))};
  }
  return {};
}

NCElement bar(const NCElement& a) { return a.is_zero() ? a : involution(a); }

}  // namespace

std::string symbol_name(const AffinizationSpec& spec, const GeneratorSymbol& sym) {
  std::string out(1, role_char(sym.role));
  if (sym.index < spec.rank()) return out + std::to_string(sym.index + 1);
  auto [m, k] = spec.adjoined_slot(sym.index);
  std::string root = spec.adjoined()[static_cast<std::size_t>(m)].root.str();
  root.pop_back();
  return out + root + ";" + std::to_string(k) + "]";
}

GeneratorSymbol parse_symbol(const AffinizationSpec& spec, const std::string& text) {
  for (int g = 0; g < spec.generator_count(); ++g) {
    for (Role role : {Role::E, Role::F, Role::H}) {
      if (symbol_name(spec, {role, g}) == text) return {role, g};
    }
  }
  throw Error(ErrorCode::UnknownGenerator, "no generator named '" + text + "'");
}

ImageTable::ImageTable(const AffinizationSpec& spec, const CoordinateAlgebra& ctx,
                       std::vector<Triple> images)
    : spec_(spec), ctx_(&ctx), images_(std::move(images)) {}

const SoElement& ImageTable::image(const GeneratorSymbol& sym) const {
  if (sym.index < 0 || sym.index >= size()) {
    throw Error(ErrorCode::UnknownGenerator,
                "generator index " + std::to_string(sym.index + 1) + " out of range");
  }
  const Triple& t = images_[static_cast<std::size_t>(sym.index)];
  switch (sym.role) {
    case Role::E: return t.e;
    case Role::F: return t.f;
    case Role::H: return t.h;
  }
  return t.h;
}

GradingDegree ImageTable::degree(const GeneratorSymbol& sym) const {
  GradingDegree root = degree_of(spec_.generator_root(sym.index));
  switch (sym.role) {
    case Role::E: return root;
    case Role::F: return -root;
    case Role::H: return zero_degree(rank());
  }
  return root;
}

ImageTable ImageTable::with_override(const GeneratorSymbol& sym, const SoElement& value) const {
  ImageTable out = *this;
  image(sym);  // range check
  Triple& t = out.images_[static_cast<std::size_t>(sym.index)];
  (sym.role == Role::E ? t.e : sym.role == Role::F ? t.f : t.h) = value;
  return out;
}

ImageTable build_image_table(const AffinizationSpec& spec, const CoordinateAlgebra& ctx) {
  if (!(ctx.spec() == spec)) {
    throw Error(ErrorCode::SpecMismatch, "coordinate algebra was built from a different spec");
  }
  const int r = spec.rank();
  const NCElement one(1);
  std::vector<ImageTable::Triple> images;
  for (int i = 1; i < r; ++i) {
    images.push_back({e_ul(i, i + 1, one, r), e_ul(i + 1, i, one, r),
                      sum(h_diag(i, 1, r), h_diag(i + 1, -1, r))});
  }
  images.push_back({e_vert(r, Scalar::sqrt2(), r), e_hort(r, Scalar::sqrt2(), r), h_diag(r, 2, r)});

  for (int g = r; g < spec.generator_count(); ++g) {
    auto [m, k] = spec.adjoined_slot(g);
    const NCElement t = NCElement::letter(ctx, ctx.primary_letter(m, k, 1));
    const NCElement ti = NCElement::letter(ctx, ctx.primary_letter(m, k, -1));
    const LongRootShape s = long_root_shape(spec.generator_root(g));
    const int p = s.p;
    const int q = s.q;
    switch (s.pattern) {
      case LongRootShape::Pattern::Difference:
        images.push_back({e_ul(p, q, t, r), e_ul(q, p, ti, r),
                          sum(h_diag(p, 1, r), h_diag(q, -1, r))});
        break;
      case LongRootShape::Pattern::Sum:
        images.push_back({e_ur(p, q, t, r), e_bl(q, p, ti, r),
                          sum(h_diag(p, 1, r), h_diag(q, 1, r))});
        break;
      case LongRootShape::Pattern::NegSum:
        images.push_back({e_bl(p, q, t, r), e_ur(q, p, ti, r),
                          sum(h_diag(p, -1, r), h_diag(q, -1, r))});
        break;
    }
  }

  ImageTable table(spec, ctx, std::move(images));
  for (int g = 0; g < table.size(); ++g) {
    for (Role role : {Role::E, Role::F, Role::H}) {
      HomogeneousDecomposition d = decompose(table.image({role, g}));
      if (!d.homogeneous() || d.parts.empty() || !(d.degree() == table.degree({role, g}))) {
        throw Error(ErrorCode::ConstructionBug,
                    "image of " + symbol_name(spec, {role, g}) + " is not homogeneous of degree " +
                        table.degree({role, g}).str());
      }
    }
  }
  return table;
}

SoElement ad_power(const SoElement& x, const SoElement& y, int n) {
  SoElement out = y;
  for (int k = 0; k < n && !out.is_zero(); ++k) out = mat_bracket(x, out);
  return out;
}

std::size_t RelationReport::passed() const {
  std::size_t n = 0;
  for (const RelationRecord& rec : records) n += rec.passed ? 1 : 0;
  return n;
}

std::size_t RelationReport::failed() const { return records.size() - passed(); }

RelationReport verify_gim_relations(const AffinizationSpec& spec, const ImageTable& table,
                                    const GimMatrix& a) {
  if (a.size() != table.size() || !(table.spec() == spec)) {
    throw Error(ErrorCode::SpecMismatch, "matrix, table and spec disagree");
  }
  RelationReport report;
  auto check = [&](const std::string& relation, int i, int j, const SoElement& lhs,
                   const SoElement& rhs) {
    RelationRecord rec{relation, i + 1, j + 1, lhs == rhs, {}, {}};
    if (!rec.passed) {
      rec.lhs = lhs.str();
      rec.rhs = rhs.str();
    }
    report.records.push_back(std::move(rec));
  };
  const int n = table.size();
  const SoElement zero(table.rank());
  for (int i = 0; i < n; ++i) {
    const SoElement& ei = table.image({Role::E, i});
    const SoElement& fi = table.image({Role::F, i});
    const SoElement& hi = table.image({Role::H, i});
    for (int j = 0; j < n; ++j) {
      const SoElement& ej = table.image({Role::E, j});
      const SoElement& fj = table.image({Role::F, j});
      const int aij = a(i, j);
      check("R1.he", i, j, mat_bracket(hi, ej), Scalar(aij) * ej);
      check("R1.hf", i, j, mat_bracket(hi, fj), Scalar(-aij) * fj);
      if (i == j) check("R1.ef", i, j, mat_bracket(ei, fi), hi);
      if (aij <= 0) {
        check("R2.ef", i, j, mat_bracket(ei, fj), zero);
        check("R2.fe", i, j, mat_bracket(fi, ej), zero);
        check("R2.ade", i, j, ad_power(ei, ej, -aij + 1), zero);
        check("R2.adf", i, j, ad_power(fi, fj, -aij + 1), zero);
      } else if (i != j) {
        check("R3.ee", i, j, mat_bracket(ei, ej), zero);
        check("R3.ff", i, j, mat_bracket(fi, fj), zero);
        check("R3.adef", i, j, ad_power(ei, fj, aij + 1), zero);
        check("R3.adfe", i, j, ad_power(fi, ej, aij + 1), zero);
        if (i >= spec.rank() && j >= spec.rank() &&
            spec.adjoined_slot(i).first == spec.adjoined_slot(j).first) {
          report.observations.push_back({i + 1, j + 1, mat_bracket(ei, fj).str()});
        }
      }
    }
  }
  return report;
}

GradednessReport verify_gradedness(const ImageTable& table, std::size_t samples, int max_length,
                                   std::uint64_t seed) {
  GradednessReport report;
  const AffinizationSpec& spec = table.spec();
  for (int g = 0; g < table.size(); ++g) {
    for (Role role : {Role::E, Role::F, Role::H}) {
      ++report.images_checked;
      const GeneratorSymbol sym{role, g};
      HomogeneousDecomposition d = decompose(table.image(sym));
      if (!d.homogeneous() || d.parts.empty() || !(d.degree() == table.degree(sym))) {
        report.failures.push_back({"image-degree", symbol_name(spec, sym),
                                   "expected degree " + table.degree(sym).str()});
      }
    }
  }

  std::mt19937_64 rng(seed);
  const std::size_t n = static_cast<std::size_t>(table.size());
  for (std::size_t s = 0; s < samples; ++s) {
    const int len = 2 + static_cast<int>(rng() % static_cast<std::size_t>(max_length - 1));
    std::vector<GeneratorSymbol> word;
    for (int k = 0; k < len; ++k) {
      const std::uint64_t pick = rng() % 20;
      const Role role = pick < 9 ? Role::E : pick < 18 ? Role::F : Role::H;
      word.push_back({role, static_cast<int>(rng() % n)});
    }
    // Left-normed: [w1, [w2, [..., wL]]].
    SoElement value = table.image(word.back());
    GradingDegree deg = table.degree(word.back());
    for (int k = len - 2; k >= 0; --k) {
      value = mat_bracket(table.image(word[static_cast<std::size_t>(k)]), value);
      deg = deg + table.degree(word[static_cast<std::size_t>(k)]);
    }
    ++report.words_sampled;
    std::string subject;
    for (int k = 0; k < len; ++k) {
      subject += (k ? " " : "") + symbol_name(spec, word[static_cast<std::size_t>(k)]);
    }
    if (!deg.admissible()) {
      ++report.radical_words;
      if (!value.is_zero()) {
        report.failures.push_back({"radical", subject,
                                   "degree " + deg.str() + " outside Delta but value " +
                                       value.str()});
      }
      continue;
    }
    HomogeneousDecomposition d = decompose(value);
    if (!d.homogeneous() || (!d.parts.empty() && !(d.degree() == deg))) {
      report.failures.push_back({"word-degree", subject, "expected degree " + deg.str()});
    }
  }
  return report;
}

std::size_t ConsequenceReport::failed() const {
  std::size_t n = 0;
  for (const ConsequenceRecord& rec : records) n += rec.passed ? 0 : 1;
  return n;
}

ConsequenceReport verify_coordinate_consequences(const AffinizationSpec& spec,
                                                 const ImageTable& table) {
  ConsequenceReport report;
  const int r = spec.rank();
  const NCElement one(1);
  auto record = [&](const std::string& prop, const std::string& subject, const NCElement& lhs,
                    const NCElement& rhs) {
    bool ok = is_equal(lhs, rhs);
    report.records.push_back(
        {prop, subject, ok, ok ? std::string() : lhs.str() + " != " + rhs.str()});
  };

  for (int g = r; g < spec.generator_count(); ++g) {
    const std::string name = symbol_name(spec, {Role::E, g});
    const Coordinates c = read_coordinates(table, g);
    record("inverse", name + " f·e", c.f * c.e, one);
    record("inverse", name + " e·f", c.e * c.f, one);
    if (is_omega_root(spec.generator_root(g))) {
      record("eta-fixed", name, bar(c.e), c.e);
      record("eta-fixed", name + " inverse", bar(c.f), c.f);
    }
  }

  for (int g = r; g < spec.generator_count(); ++g) {
    const Root theta = spec.generator_root(g);
    if (is_omega_root(theta)) continue;
    const LongRootShape s = long_root_shape(theta);
    if (s.pattern != LongRootShape::Pattern::Difference) continue;
    const int p = s.p;
    const int q = s.q;
    const NCElement sc = table.image({Role::E, g}).at(p, q);
    for (int h = r; h < spec.generator_count(); ++h) {
      const Root partner = spec.generator_root(h);
      const LongRootShape ps = long_root_shape(partner);
      if (ps.pattern == LongRootShape::Pattern::Difference) continue;
      if (!((ps.p == p && ps.q == q) || (ps.p == q && ps.q == p))) continue;
      const bool omega = is_omega_root(partner);
      const std::string subject =
          symbol_name(spec, {Role::E, g}) + " with " + symbol_name(spec, {Role::E, h});
      const SoElement& e = table.image({Role::E, h});
      if (ps.pattern == LongRootShape::Pattern::Sum) {
        const NCElement t = e.at(p, mirror(q, r));
        record(omega ? "mixing-1" : "mixing-2", subject, sc * bar(t), t * bar(sc));
      } else {
        const NCElement t = e.at(mirror(p, r), q);
        record(omega ? "mixing-3" : "mixing-4", subject, bar(sc) * t, bar(t) * sc);
      }
    }
  }
  return report;
}

}  // namespace bcgim
