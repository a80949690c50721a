#include "bcgim/liealg.hpp"

#include "bcgim/error.hpp"

#include <set>

namespace bcgim {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

}  // namespace

CoordMatrix CoordMatrix::unit(int rank, int i, int j, const NCElement& a) {
  CoordMatrix m(rank);
  m.add(i, j, a);
  return m;
}

NCElement CoordMatrix::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? NCElement() : it->second;
}

void CoordMatrix::add(int i, int j, const NCElement& a) {
  if (i < 1 || i > dim() || j < 1 || j > dim()) {
    throw Error(ErrorCode::IndexRange, "matrix position (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") outside 1.." +
                                           std::to_string(dim()));
  }
  if (a.is_zero()) return;
  if (ctx_ && a.context() && ctx_ != a.context()) {
    throw Error(ErrorCode::ContextMismatch, "matrix entries from different coordinate algebras");
  }
  if (!ctx_) ctx_ = a.context();
  auto [it, inserted] = entries_.emplace(Position{i, j}, a);
  if (inserted) return;
  it->second += a;
  if (it->second.is_zero()) entries_.erase(it);
}

std::vector<std::tuple<int, int, std::string>> CoordMatrix::triples() const {
  std::vector<std::tuple<int, int, std::string>> out;
  out.reserve(entries_.size());
  for (const auto& [pos, a] : entries_) out.emplace_back(pos.first, pos.second, a.str());
  return out;
}

std::string CoordMatrix::str() const {
  if (entries_.empty()) return "0";
  std::string out = "{";
  bool first = true;
  for (const auto& [pos, a] : entries_) {
    if (!first) out += "; ";
    first = false;
    out += "(" + std::to_string(pos.first) + "," + std::to_string(pos.second) + "): " + a.str();
  }
  return out + "}";
}

void CoordMatrix::check_compatible(const CoordMatrix& other) const {
  if (rank_ != other.rank_) {
    throw Error(ErrorCode::Dimension, "matrices of dimension " + std::to_string(dim()) + " and " +
                                          std::to_string(other.dim()));
  }
  if (ctx_ && other.ctx_ && ctx_ != other.ctx_) {
    throw Error(ErrorCode::ContextMismatch, "matrices over different coordinate algebras");
  }
}

CoordMatrix CoordMatrix::operator-() const { return Scalar(-1) * *this; }

CoordMatrix operator+(const CoordMatrix& a, const CoordMatrix& b) {
  a.check_compatible(b);
  CoordMatrix out = a;
  for (const auto& [pos, e] : b.entries_) out.add(pos.first, pos.second, e);
  return out;
}

CoordMatrix operator-(const CoordMatrix& a, const CoordMatrix& b) { return a + (-b); }

CoordMatrix operator*(const Scalar& s, const CoordMatrix& a) {
  CoordMatrix out(a.rank_);
  for (const auto& [pos, e] : a.entries_) out.add(pos.first, pos.second, s * e);
  return out;
}

bool operator==(const CoordMatrix& a, const CoordMatrix& b) {
  a.check_compatible(b);
  return a.entries_ == b.entries_;
}

CoordMatrix mat_product(const CoordMatrix& a, const CoordMatrix& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::Dimension, "matrix product of mismatched dimensions");
  }
  CoordMatrix out(a.rank());
  for (const auto& [pa, x] : a.entries()) {
    auto it = b.entries().lower_bound({pa.second, 0});
    for (; it != b.entries().end() && it->first.first == pa.second; ++it) {
      out.add(pa.first, it->first.second, x * it->second);
    }
  }
  return out;
}

SoElement mat_bracket(const SoElement& a, const SoElement& b) {
  SoElement out = mat_product(a, b) - mat_product(b, a);
  if (!membership_check(out)) {
    throw Error(ErrorCode::ConstructionBug,
                "bracket left so_{2r+1}: [" + a.str() + ", " + b.str() + "] = " + out.str());
  }
  return out;
}

bool membership_check(const CoordMatrix& m) {
  const int n = m.dim();
  std::set<CoordMatrix::Position> positions;
  for (const auto& [pos, e] : m.entries()) {
    positions.insert(pos);
    positions.insert({n + 1 - pos.second, n + 1 - pos.first});
  }
  // M_{p,q} = -eta(M_{n+1-q, n+1-p}) entrywise.
  for (const auto& [p, q] : positions) {
    NCElement here = m.at(p, q);
    NCElement there = m.at(n + 1 - q, n + 1 - p);
    if (!(here + (there.is_zero() ? there : involution(there))).is_zero()) return false;
  }
  return true;
}

namespace {

void check_index(int k, int rank) {
  if (k < 1 || k > rank) {
    throw Error(ErrorCode::IndexRange,
                "index " + std::to_string(k) + " outside 1.." + std::to_string(rank));
  }
}

NCElement bar(const NCElement& a) { return a.is_zero() ? a : involution(a); }

}  // namespace

SoElement e_vert(int k, const NCElement& a, int rank) {
  check_index(k, rank);
  SoElement m(rank);
  const int c = rank + 1;
  m.add(k, c, a);
  m.add(c, mirror(k, rank), -bar(a));
  return m;
}

SoElement e_hort(int k, const NCElement& a, int rank) {
  check_index(k, rank);
  SoElement m(rank);
  const int c = rank + 1;
  m.add(c, k, a);
  m.add(mirror(k, rank), c, -bar(a));
  return m;
}

SoElement e_ul(int p, int q, const NCElement& a, int rank) {
  check_index(p, rank);
  check_index(q, rank);
  SoElement m(rank);
  m.add(p, q, a);
  m.add(mirror(q, rank), mirror(p, rank), -bar(a));
  return m;
}

SoElement e_ur(int p, int q, const NCElement& a, int rank) {
  check_index(p, rank);
  check_index(q, rank);
  SoElement m(rank);
  m.add(p, mirror(q, rank), a);
  m.add(q, mirror(p, rank), -bar(a));
  return m;
}

SoElement e_bl(int p, int q, const NCElement& a, int rank) {
  check_index(p, rank);
  check_index(q, rank);
  SoElement m(rank);
  m.add(mirror(p, rank), q, a);
  m.add(mirror(q, rank), p, -bar(a));
  return m;
}

SoElement h_diag(int p, const Scalar& s, int rank) { return e_ul(p, p, NCElement(s), rank); }

GradingDegree HomogeneousDecomposition::degree() const {
  if (parts.size() != 1) {
    throw Error(ErrorCode::Dimension, "element has " + std::to_string(parts.size()) +
                                          " homogeneous parts, not exactly one");
  }
  return parts.begin()->first;
}

HomogeneousDecomposition decompose(const SoElement& m) {
  HomogeneousDecomposition out;
  for (const auto& [pos, e] : m.entries()) {
    GradingDegree deg = root_of_position(pos.first, pos.second, m.rank());
    auto it = out.parts.try_emplace(deg, m.rank()).first;
    it->second.add(pos.first, pos.second, e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bracket formulas

std::string lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::VertVert: return "[vert,vert]";
    case LemmaId::VertHort: return "[vert,hort]";
    case LemmaId::VertUl: return "[vert,ul]";
    case LemmaId::VertUr: return "[vert,ur]";
    case LemmaId::VertBl: return "[vert,bl]";
    case LemmaId::HortHort: return "[hort,hort]";
    case LemmaId::HortUl: return "[hort,ul]";
    case LemmaId::HortUr: return "[hort,ur]";
    case LemmaId::HortBl: return "[hort,bl]";
    case LemmaId::UlUl: return "[ul,ul]";
    case LemmaId::UlUr: return "[ul,ur]";
    case LemmaId::UlBl: return "[ul,bl]";
    case LemmaId::UrUr: return "[ur,ur]";
    case LemmaId::UrBl: return "[ur,bl]";
    case LemmaId::BlBl: return "[bl,bl]";
  }
  return "?";
}

std::vector<LemmaId> all_lemmas() {
  std::vector<LemmaId> out;
  for (int i = 0; i <= static_cast<int>(LemmaId::BlBl); ++i) out.push_back(static_cast<LemmaId>(i));
  return out;
}

int lemma_arity(LemmaId id) {
  switch (id) {
    case LemmaId::VertVert:
    case LemmaId::VertHort:
    case LemmaId::HortHort:
      return 2;
    case LemmaId::VertUl:
    case LemmaId::VertUr:
    case LemmaId::VertBl:
    case LemmaId::HortUl:
    case LemmaId::HortUr:
    case LemmaId::HortBl:
      return 3;
    default:
      return 4;
  }
}

std::pair<SoElement, SoElement> lemma_sides(LemmaId id, const std::vector<int>& ix,
                                            const NCElement& a, const NCElement& b, int r) {
  if (static_cast<int>(ix.size()) != lemma_arity(id)) {
    throw Error(ErrorCode::Dimension, lemma_name(id) + " takes " +
                                          std::to_string(lemma_arity(id)) + " indices");
  }
  auto delta = [](int i, int j) { return i == j; };
  const NCElement ab = a * b;
  const NCElement ba = b * a;
  const NCElement abar = bar(a);
  const NCElement bbar = bar(b);
  SoElement rhs(r);
  switch (id) {
    case LemmaId::VertVert: {
      const int k = ix[0], p = ix[1];
      rhs = e_ur(k, p, -(a * bbar), r);
      return {mat_bracket(e_vert(k, a, r), e_vert(p, b, r)), rhs};
    }
    case LemmaId::VertHort: {
      const int k = ix[0], p = ix[1];
      rhs = e_ul(k, p, ab, r);
      if (delta(k, p)) rhs.add(r + 1, r + 1, -ba + abar * bbar);
      return {mat_bracket(e_vert(k, a, r), e_hort(p, b, r)), rhs};
    }
    case LemmaId::VertUl: {
      const int k = ix[0], p = ix[1], q = ix[2];
      if (delta(k, q)) rhs = e_vert(p, -ba, r);
      return {mat_bracket(e_vert(k, a, r), e_ul(p, q, b, r)), rhs};
    }
    case LemmaId::VertUr: {
      const int k = ix[0], p = ix[1], q = ix[2];
      return {mat_bracket(e_vert(k, a, r), e_ur(p, q, b, r)), rhs};
    }
    case LemmaId::VertBl: {
      const int k = ix[0], p = ix[1], q = ix[2];
      if (delta(k, p)) rhs += e_hort(q, -(abar * b), r);
      if (delta(k, q)) rhs += e_hort(p, abar * bbar, r);
      return {mat_bracket(e_vert(k, a, r), e_bl(p, q, b, r)), rhs};
    }
    case LemmaId::HortHort: {
      const int k = ix[0], p = ix[1];
      rhs = e_bl(k, p, -(abar * b), r);
      return {mat_bracket(e_hort(k, a, r), e_hort(p, b, r)), rhs};
    }
    case LemmaId::HortUl: {
      const int k = ix[0], p = ix[1], q = ix[2];
      if (delta(k, p)) rhs = e_hort(q, ab, r);
      return {mat_bracket(e_hort(k, a, r), e_ul(p, q, b, r)), rhs};
    }
    case LemmaId::HortUr: {
      const int k = ix[0], p = ix[1], q = ix[2];
      if (delta(k, p)) rhs += e_vert(q, -(bbar * abar), r);
      if (delta(k, q)) rhs += e_vert(p, b * abar, r);
      return {mat_bracket(e_hort(k, a, r), e_ur(p, q, b, r)), rhs};
    }
    case LemmaId::HortBl: {
      const int k = ix[0], p = ix[1], q = ix[2];
      return {mat_bracket(e_hort(k, a, r), e_bl(p, q, b, r)), rhs};
    }
    case LemmaId::UlUl: {
      const int p = ix[0], q = ix[1], k = ix[2], l = ix[3];
      if (delta(q, k)) rhs += e_ul(p, l, ab, r);
      if (delta(l, p)) rhs += e_ul(k, q, -ba, r);
      return {mat_bracket(e_ul(p, q, a, r), e_ul(k, l, b, r)), rhs};
    }
    case LemmaId::UlUr: {
      const int p = ix[0], q = ix[1], k = ix[2], l = ix[3];
      if (delta(q, k)) rhs += e_ur(p, l, ab, r);
      if (delta(q, l)) rhs += e_ur(p, k, -(a * bbar), r);
      return {mat_bracket(e_ul(p, q, a, r), e_ur(k, l, b, r)), rhs};
    }
    case LemmaId::UlBl: {
      const int p = ix[0], q = ix[1], k = ix[2], l = ix[3];
      if (delta(p, k)) rhs += e_bl(q, l, -(abar * b), r);
      if (delta(p, l)) rhs += e_bl(q, k, abar * bbar, r);
      return {mat_bracket(e_ul(p, q, a, r), e_bl(k, l, b, r)), rhs};
    }
    case LemmaId::UrUr: {
      const int p = ix[0], q = ix[1], k = ix[2], l = ix[3];
      return {mat_bracket(e_ur(p, q, a, r), e_ur(k, l, b, r)), rhs};
    }
    case LemmaId::UrBl: {
      const int p = ix[0], q = ix[1], k = ix[2], l = ix[3];
      if (delta(p, k)) rhs += e_ul(q, l, -(abar * b), r);
      if (delta(p, l)) rhs += e_ul(q, k, abar * bbar, r);
      if (delta(q, k)) rhs += e_ul(p, l, ab, r);
      if (delta(q, l)) rhs += e_ul(p, k, -(a * bbar), r);
      return {mat_bracket(e_ur(p, q, a, r), e_bl(k, l, b, r)), rhs};
    }
    case LemmaId::BlBl: {
      const int p = ix[0], q = ix[1], k = ix[2], l = ix[3];
      return {mat_bracket(e_bl(p, q, a, r), e_bl(k, l, b, r)), rhs};
    }
  }
  throw Error(ErrorCode::ConstructionBug, "unknown lemma");
}

bool BracketLemmaReport::passed() const {
  for (const LemmaRecord& rec : lemmas) {
    if (!rec.passed()) return false;
  }
  return true;
}

Scalar random_scalar(std::mt19937_64& rng) {
  for (;;) {
    auto component = [&rng] {
      long num = static_cast<long>(rng() % 7) - 3;
      long den = static_cast<long>(rng() % 3) + 1;
      return mpq_class(num, den);
    };
    mpq_class a = component();
    mpq_class b = rng() % 2 == 0 ? mpq_class(0) : component();
    a.canonicalize();
    b.canonicalize();
    Scalar s(a, b);
    if (!s.is_zero()) return s;
  }
}

NCElement random_coordinate(const CoordinateAlgebra& ctx, std::mt19937_64& rng, int max_len) {
  const std::size_t terms = rng() % 4 == 0 ? 2 : 1;
  NCElement out;
  for (std::size_t t = 0; t < terms; ++t) {
    Scalar c = random_scalar(rng);
    if (ctx.letter_count() == 0) {
      out += NCElement(c);
      continue;
    }
    const std::size_t len = rng() % static_cast<std::size_t>(max_len + 1);
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(static_cast<LetterId>(rng() % ctx.letter_count()));
    }
    out += NCElement::monomial(ctx, w, c);
  }
  return out;
}

BracketLemmaReport verify_bracket_lemmas(int rank, const CoordinateAlgebra& ctx,
                                         std::size_t trials, std::uint64_t seed) {
  if (rank < 3) {
    throw Error(ErrorCode::Rank, "rank must be at least 3, got " + std::to_string(rank));
  }
  BracketLemmaReport report;
  report.rank = rank;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  for (LemmaId id : all_lemmas()) {
    LemmaRecord rec;
    rec.id = id;
    const int arity = lemma_arity(id);
    std::vector<int> ix(static_cast<std::size_t>(arity), 1);
    for (;;) {
      ++rec.tuples;
      bool ok = true;
      for (std::size_t t = 0; t < trials; ++t) {
        NCElement a = t == 0 ? NCElement() : random_coordinate(ctx, rng);
        NCElement b = t == 0 ? NCElement() : random_coordinate(ctx, rng);
        auto [lhs, rhs] = lemma_sides(id, ix, a, b, rank);
        ++rec.evaluations;
        if (lhs == rhs) continue;
        ok = false;
        if (rec.failures.size() < kMaxRecordedFailures) {
          rec.failures.push_back({ix, a.str(), b.str(), lhs.str(), rhs.str()});
        }
      }
      if (ok) {
        ++rec.tuples_passed;
      } else {
        rec.failed_tuples.push_back(ix);
      }
      // Odometer over 1..rank.
      int pos = arity - 1;
      while (pos >= 0 && ix[static_cast<std::size_t>(pos)] == rank) {
        ix[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++ix[static_cast<std::size_t>(pos)];
    }
    report.lemmas.push_back(std::move(rec));
  }
  return report;
}

SoElement random_homogeneous(const CoordinateAlgebra& ctx, std::mt19937_64& rng, int max_len) {
  const int r = ctx.spec().rank();
  auto index = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(r)) + 1; };
  Word w;
  const std::size_t len = rng() % static_cast<std::size_t>(max_len + 1);
  for (std::size_t i = 0; i < len && ctx.letter_count() > 0; ++i) {
    w.push_back(static_cast<LetterId>(rng() % ctx.letter_count()));
  }
  const NCElement a = NCElement::monomial(ctx, w, random_scalar(rng));
  const int p = index();
  const int q = index();
  switch (rng() % 5) {
    case 0: return e_vert(p, a, r);
    case 1: return e_hort(p, a, r);
    case 2: return e_ul(p, q, a, r);
    case 3: return e_ur(p, q, a, r);
    default: return e_bl(p, q, a, r);
  }
}

LieAxiomReport verify_lie_axioms(const CoordinateAlgebra& ctx, std::size_t triples,
                                 std::uint64_t seed) {
  LieAxiomReport rep;
  std::mt19937_64 rng(seed);
  auto bracket = [&](const SoElement& a, const SoElement& b) {
    ++rep.brackets;
    try {
      return mat_bracket(a, b);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConstructionBug) throw;
      rep.failures.push_back({"membership", "[" + a.str() + ", " + b.str() + "]"});
      return SoElement(a.rank());
    }
  };
  for (std::size_t n = 0; n < triples; ++n) {
    const SoElement x = random_homogeneous(ctx, rng);
    const SoElement y = random_homogeneous(ctx, rng);
    const SoElement z = random_homogeneous(ctx, rng);
    ++rep.triples;
    for (const SoElement* m : {&x, &y, &z}) {
      if (!membership_check(*m)) rep.failures.push_back({"membership", m->str()});
    }
    const SoElement xy = bracket(x, y);
    if (!(xy == -bracket(y, x))) {
      rep.failures.push_back({"antisymmetry", x.str() + " ; " + y.str()});
    }
    const SoElement jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                          bracket(z, xy);
    if (!jac.is_zero()) {
      rep.failures.push_back({"jacobi", x.str() + " ; " + y.str() + " ; " + z.str()});
    }
  }
  return rep;
}

}  // namespace bcgim
