#include "bcgim/witness.hpp"

#include "bcgim/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>
#include <unordered_map>

namespace bcgim {

BracketExpr::Ptr BracketExpr::leaf(const GeneratorSymbol& sym) {
  auto e = std::make_shared<BracketExpr>();
  e->kind_ = Kind::Leaf;
  e->symbol_ = sym;
  return e;
}

BracketExpr::Ptr BracketExpr::scale(const Scalar& s, Ptr child) {
  auto e = std::make_shared<BracketExpr>();
  e->kind_ = Kind::Scale;
  e->factor_ = s;
  e->children_.push_back(std::move(child));
  return e;
}

BracketExpr::Ptr BracketExpr::bracket(Ptr a, Ptr b) {
  auto e = std::make_shared<BracketExpr>();
  e->kind_ = Kind::Bracket;
  e->children_ = {std::move(a), std::move(b)};
  return e;
}

BracketExpr::Ptr BracketExpr::sum(std::vector<Ptr> terms) {
  auto e = std::make_shared<BracketExpr>();
  e->kind_ = Kind::Sum;
  e->children_ = std::move(terms);
  return e;
}

std::size_t BracketExpr::depth() const {
  std::size_t d = 0;
  for (const Ptr& c : children_) d = std::max(d, c->depth());
  return d + 1;
}

std::size_t BracketExpr::size() const {
  std::size_t n = 1;
  for (const Ptr& c : children_) n += c->size();
  return n;
}

std::string render(const BracketExpr& expr, const AffinizationSpec& spec) {
  const auto& ch = expr.children();
  switch (expr.kind()) {
    case BracketExpr::Kind::Leaf:
      return symbol_name(spec, expr.symbol());
    case BracketExpr::Kind::Scale:
      return "(" + expr.factor().str() + ")·" + render(*ch[0], spec);
    case BracketExpr::Kind::Bracket:
      return "[" + render(*ch[0], spec) + ", " + render(*ch[1], spec) + "]";
    case BracketExpr::Kind::Sum: {
      if (ch.empty()) return "0";
      std::string out = "(";
      for (std::size_t k = 0; k < ch.size(); ++k) {
        if (k) out += " + ";
        out += render(*ch[k], spec);
      }
      return out + ")";
    }
  }
  return {};
}

std::string shape_name(TargetShape shape) {
  switch (shape) {
    case TargetShape::Vert: return "VERT";
    case TargetShape::Hort: return "HORT";
    case TargetShape::Ul: return "UL";
    case TargetShape::Ur: return "UR";
    case TargetShape::Bl: return "BL";
  }
  return {};
}

TargetShape parse_shape(const std::string& text) {
  std::string up = text;
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (TargetShape s : {TargetShape::Vert, TargetShape::Hort, TargetShape::Ul, TargetShape::Ur,
                        TargetShape::Bl}) {
    if (shape_name(s) == up) return s;
  }
  throw Error(ErrorCode::UnsupportedTarget, "unknown target shape '" + text + "'");
}

namespace {

bool two_index(TargetShape s) { return s != TargetShape::Vert && s != TargetShape::Hort; }

SoElement shape_element(TargetShape shape, int i, int j, const NCElement& a, int r) {
  switch (shape) {
    case TargetShape::Vert: return e_vert(i, a, r);
    case TargetShape::Hort: return e_hort(i, a, r);
    case TargetShape::Ul: return e_ul(i, j, a, r);
    case TargetShape::Ur: return e_ur(i, j, a, r);
    case TargetShape::Bl: return e_bl(i, j, a, r);
  }
  return SoElement(r);
}

}  // namespace

std::string target_name(const TargetSpec& target, const CoordinateAlgebra& ctx) {
  std::string out;
  if (!(target.scale == Scalar(1))) out = "(" + target.scale.str() + ")·";
  out += shape_name(target.shape) + "(" + std::to_string(target.i);
  if (two_index(target.shape)) out += "," + std::to_string(target.j);
  return out + "; " + ctx.render(target.monomial) + ")";
}

SoElement construct(const TargetSpec& target, const CoordinateAlgebra& ctx) {
  const int r = ctx.spec().rank();
  for (LetterId l : target.monomial) {
    if (l >= ctx.letter_count()) {
      throw Error(ErrorCode::UnknownGenerator, "letter id " + std::to_string(l) + " not in spec");
    }
  }
  if (ctx.normal_form(target.monomial) != target.monomial) {
    throw Error(ErrorCode::UnsupportedTarget,
                "monomial " + ctx.render(target.monomial) + " is not in normal form");
  }
  const NCElement a = NCElement::monomial(ctx, target.monomial);
  // [vert_i(a), hort_i(1)] = ul(i,i; a) + E_{c,c}(eta(a) - a)
  if (target.shape == TargetShape::Ul && target.i == target.j && !(involution(a) == a)) {
    throw Error(ErrorCode::UnsupportedTarget,
                "diagonal UL target needs an eta-fixed monomial, got " + ctx.render(target.monomial));
  }
  const int j = two_index(target.shape) ? target.j : target.i;
  return target.scale * shape_element(target.shape, target.i, j, a, r);
}

namespace {

/// An expression together with its (already checked) value.
struct Built {
  BracketExpr::Ptr expr;
  SoElement value;
};

class Builder {
public:
  explicit Builder(const ImageTable& table)
      : table_(table), ctx_(table.context()), r_(table.rank()) {}

  /// vert_i(w)
  Built vert(int i, const Word& w) { return cached('V', i, w, [&] { return make_vert(i, w); }); }
  /// hort_i(w)
  Built hort(int i, const Word& w) { return cached('H', i, w, [&] { return make_hort(i, w); }); }

  Built target(TargetShape shape, int i, int j, const Word& w) {
    if (w.size() == 1 && shape != TargetShape::Vert && shape != TargetShape::Hort) {
      const Source s = source(w[0]);
      if (s.shape == shape && s.p == i && s.q == j) return s.built;
    }
    switch (shape) {
      case TargetShape::Vert: return vert(i, w);
      case TargetShape::Hort: return hort(i, w);
      case TargetShape::Ul: return ul(i, j, w);
      case TargetShape::Ur:
        return check(bracket(vert(j, {}), vert(i, w)), e_ur(i, j, coord(w), r_));
      case TargetShape::Bl:
        return check(bracket(hort(j, w), hort(i, {})), e_bl(i, j, coord(w), r_));
    }
    return vert(i, w);
  }

private:
  template <class F>
  Built cached(char kind, int i, const Word& w, F make) {
    auto key = std::make_tuple(kind, i, w);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Built b = make();
    cache_.emplace(std::move(key), b);
    return b;
  }

  NCElement coord(const Word& w) const { return NCElement::monomial(ctx_, w); }

  Built leaf(Role role, int g) {
    return {BracketExpr::leaf({role, g}), table_.image({role, g})};
  }

  static Built bracket(const Built& a, const Built& b) {
    return {BracketExpr::bracket(a.expr, b.expr), mat_bracket(a.value, b.value)};
  }

  static Built scaled(const Scalar& s, const Built& a) {
    return {BracketExpr::scale(s, a.expr), s * a.value};
  }

  Built check(const Built& got, const SoElement& want) const {
    if (got.value == want) return got;
    if (got.value == -want) return scaled(Scalar(-1), got);
    throw Error(ErrorCode::ConstructionBug,
                "witness step " + render(*got.expr, table_.spec()) + " evaluates to " +
                    got.value.str() + ", expected ±" + want.str());
  }

  int partner(int i) const { return i == 1 ? 2 : i - 1; }

  /// ul(i,j; w); on the diagonal only exact for eta-fixed w.
  Built ul(int i, int j, const Word& w) {
    return check(bracket(vert(i, w), hort(j, {})), e_ul(i, j, coord(w), r_));
  }

  Built make_vert(int i, const Word& w) {
    const SoElement want = e_vert(i, coord(w), r_);
    if (w.empty()) {
      if (i == r_) {
        return check(scaled(Scalar(0, mpq_class(1, 2)), leaf(Role::E, r_ - 1)), want);
      }
      return check(bracket(leaf(Role::E, i - 1), vert(i + 1, {})), want);
    }
    if (w.size() == 1) {
      const Seed s = seed(w[0]);
      if (s.is_vert) {
        if (s.index == i) return s.built;
        // One adjacent step towards the seed's index.
        if (i < s.index) return check(bracket(leaf(Role::E, i - 1), vert(i + 1, w)), want);
        return check(bracket(leaf(Role::F, i - 2), vert(i - 1, w)), want);
      }
      const int j = i == s.index ? partner(i) : s.index;
      const Built u = check(bracket(vert(i, {}), hort(j, w)), e_ul(i, j, coord(w), r_));
      return check(bracket(u, vert(j, {})), want);
    }
    // vert_i(u·t) = [ul(i,j; u), vert_j(t)]
    const Word prefix(w.begin(), w.end() - 1);
    const int j = partner(i);
    return check(bracket(ul(i, j, prefix), vert(j, {w.back()})), want);
  }

  Built make_hort(int i, const Word& w) {
    const SoElement want = e_hort(i, coord(w), r_);
    if (w.empty()) {
      if (i == r_) {
        return check(scaled(Scalar(0, mpq_class(1, 2)), leaf(Role::F, r_ - 1)), want);
      }
      return check(bracket(hort(i + 1, {}), leaf(Role::F, i - 1)), want);
    }
    if (w.size() == 1) {
      const Seed s = seed(w[0]);
      if (!s.is_vert) {
        if (s.index == i) return s.built;
        if (i < s.index) return check(bracket(hort(i + 1, w), leaf(Role::F, i - 1)), want);
        return check(bracket(hort(i - 1, w), leaf(Role::E, i - 2)), want);
      }
      const int k = i == s.index ? partner(i) : s.index;
      return check(bracket(hort(k, {}), ul(k, i, w)), want);
    }
    // hort_i(u·t) = [hort_k(u), ul(k,i; t)]
    const Word prefix(w.begin(), w.end() - 1);
    const int k = partner(i);
    return check(bracket(hort(k, prefix), ul(k, i, {w.back()})), want);
  }

  /// A single letter first appears as vert_index(l) or hort_index(l).
  struct Seed {
    bool is_vert = true;
    int index = 0;
    Built built;
  };

  /// The generator image carrying the letter (or, for z-letters, the y-letter
  /// carried before conjugation), as shape (p, q; coefficient).
  struct Source {
    TargetShape shape = TargetShape::Ul;
    int p = 0;
    int q = 0;
    Built built;
  };

  Source source(LetterId l) {
    const Letter& letter = ctx_.letter(l);
    const int m = letter.gen.adjoined_index;
    const int k = letter.gen.copy;
    const int g = table_.spec().generator_index(m, k);
    const LongRootShape rs = long_root_shape(table_.spec().generator_root(g));
    const bool e = letter.exp > 0;
    Source s;
    s.built = leaf(e ? Role::E : Role::F, g);
    switch (rs.pattern) {
      case LongRootShape::Pattern::Difference:
        s.shape = TargetShape::Ul;
        break;
      case LongRootShape::Pattern::Sum:
        s.shape = e ? TargetShape::Ur : TargetShape::Bl;
        break;
      case LongRootShape::Pattern::NegSum:
        s.shape = e ? TargetShape::Bl : TargetShape::Ur;
        break;
    }
    s.p = e ? rs.p : rs.q;
    s.q = e ? rs.q : rs.p;
    const LetterId carried = ctx_.primary_letter(m, k, letter.exp);
    check(s.built, shape_element(s.shape, s.p, s.q, NCElement::letter(ctx_, carried), r_));
    if (letter.gen.kind == GenKind::Z) s.built = conjugate(s, carried);
    return s;
  }

  /// The three nested bracket chains turning coefficient c into eta(c).
  Built conjugate(const Source& s, LetterId carried) {
    const int p = s.p;
    const int q = s.q;
    const NCElement cbar = NCElement::letter(ctx_, ctx_.eta(carried));
    const Built v = vert(p, {});
    switch (s.shape) {
      case TargetShape::Ul: {
        Built x = bracket(scaled(Scalar(-1), vert(q, {})), s.built);
        x = bracket(target(TargetShape::Bl, p, q, {}), x);
        return check(bracket(v, x), e_ul(p, q, cbar, r_));
      }
      case TargetShape::Ur: {
        Built x = bracket(scaled(Scalar(-1), hort(q, {})), s.built);
        x = bracket(target(TargetShape::Bl, p, q, {}), x);
        x = bracket(v, x);
        x = bracket(vert(q, {}), x);
        x = bracket(vert(q, {}), x);
        return check(x, e_ur(p, q, cbar, r_));
      }
      case TargetShape::Bl: {
        Built x = bracket(v, s.built);
        x = bracket(target(TargetShape::Ur, p, q, {}), x);
        x = bracket(hort(q, {}), x);
        x = bracket(hort(p, {}), x);
        x = bracket(hort(p, {}), x);
        return check(x, e_bl(p, q, cbar, r_));
      }
      default:
        break;
    }
    throw Error(ErrorCode::ConstructionBug, "no conjugation chain for " + shape_name(s.shape));
  }

  Seed seed(LetterId l) {
    const Source s = source(l);
    const NCElement c = NCElement::letter(ctx_, l);
    switch (s.shape) {
      case TargetShape::Ul:
        return {true, s.p, check(bracket(s.built, vert(s.q, {})), e_vert(s.p, c, r_))};
      case TargetShape::Ur:
        return {true, s.p, check(bracket(hort(s.q, {}), s.built), e_vert(s.p, c, r_))};
      case TargetShape::Bl:
        return {false, s.q, check(bracket(s.built, vert(s.p, {})), e_hort(s.q, c, r_))};
      default:
        break;
    }
    throw Error(ErrorCode::ConstructionBug, "generator image of unexpected shape");
  }

  const ImageTable& table_;
  const CoordinateAlgebra& ctx_;
  int r_;
  std::map<std::tuple<char, int, Word>, Built> cache_;
};

}  // namespace

BracketExpr::Ptr witness(const TargetSpec& target, const ImageTable& table) {
  const SoElement want = construct(target, table.context());
  Builder b(table);
  const int j = two_index(target.shape) ? target.j : target.i;
  Built got = b.target(target.shape, target.i, j, target.monomial);
  BracketExpr::Ptr expr = got.expr;
  SoElement value = got.value;
  if (!(target.scale == Scalar(1))) {
    expr = BracketExpr::scale(target.scale, expr);
    value = target.scale * value;
  }
  if (!(value == want)) {
    throw Error(ErrorCode::ConstructionBug, "witness for " + target_name(target, table.context()) +
                                                " evaluates to " + value.str());
  }
  return expr;
}

namespace {

SoElement evaluate_memo(const BracketExpr& e, const ImageTable& table,
                        std::unordered_map<const BracketExpr*, SoElement>& memo) {
  auto it = memo.find(&e);
  if (it != memo.end()) return it->second;
  SoElement out(table.rank());
  const auto& ch = e.children();
  switch (e.kind()) {
    case BracketExpr::Kind::Leaf:
      out = table.image(e.symbol());
      break;
    case BracketExpr::Kind::Scale:
      out = e.factor() * evaluate_memo(*ch[0], table, memo);
      break;
    case BracketExpr::Kind::Bracket:
      out = mat_bracket(evaluate_memo(*ch[0], table, memo), evaluate_memo(*ch[1], table, memo));
      break;
    case BracketExpr::Kind::Sum:
      for (const auto& c : ch) out += evaluate_memo(*c, table, memo);
      break;
  }
  memo.emplace(&e, out);
  return out;
}

}  // namespace

SoElement evaluate(const BracketExpr& expr, const ImageTable& table) {
  std::unordered_map<const BracketExpr*, SoElement> memo;
  return evaluate_memo(expr, table, memo);
}

WitnessReport verify_witness(const TargetSpec& target, const ImageTable& table) {
  WitnessReport rep;
  const CoordinateAlgebra& ctx = table.context();
  rep.target = target_name(target, ctx);
  const SoElement want = construct(target, ctx);
  BracketExpr::Ptr expr;
  try {
    expr = witness(target, table);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConstructionBug) throw;
    rep.detail = e.what();
    return rep;
  }
  rep.expression = render(*expr, table.spec());
  rep.depth = expr->depth();
  rep.size = expr->size();
  const SoElement got = evaluate(*expr, table);
  rep.passed = got == want;
  if (!rep.passed) rep.detail = "evaluates to " + got.str() + ", target " + want.str();
  return rep;
}

TargetSpec random_target(const CoordinateAlgebra& ctx, TargetShape shape, int max_len,
                         std::mt19937_64& rng) {
  const int r = ctx.spec().rank();
  TargetSpec t;
  t.shape = shape;
  t.i = static_cast<int>(rng() % static_cast<std::uint64_t>(r)) + 1;
  t.j = static_cast<int>(rng() % static_cast<std::uint64_t>(r)) + 1;
  if (shape == TargetShape::Ul) {
    while (t.j == t.i) t.j = static_cast<int>(rng() % static_cast<std::uint64_t>(r)) + 1;
  }
  if (!two_index(shape)) t.j = t.i;
  const std::size_t letters = ctx.letter_count();
  if (letters > 0) {
    const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(static_cast<LetterId>(rng() % letters));
    t.monomial = ctx.normal_form(w);
  }
  return t;
}

}  // namespace bcgim
