#include "bcgim/coordalg.hpp"

#include "bcgim/error.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace bcgim {

namespace {

constexpr GenKind kKindOrder[] = {GenKind::X, GenKind::Z, GenKind::Y};

LetterId encode(std::size_t generator, int exp) {
  return static_cast<LetterId>(2 * generator + (exp < 0 ? 1 : 0));
}

}  // namespace

char gen_kind_char(GenKind kind) {
  switch (kind) {
    case GenKind::X: return 'x';
    case GenKind::Y: return 'y';
    case GenKind::Z: return 'z';
  }
  return '?';
}

CoordinateAlgebra::CoordinateAlgebra(AffinizationSpec spec, const CompletionOptions& options)
    : spec_(std::move(spec)) {
  const auto& adjoined = spec_.adjoined();
  for (GenKind kind : kKindOrder) {
    for (std::size_t m = 0; m < adjoined.size(); ++m) {
      bool omega = is_omega_root(adjoined[m].root);
      if (omega != (kind == GenKind::X)) continue;
      for (int k = 1; k <= adjoined[m].copies; ++k) {
        for (int exp : {1, -1}) letters_.push_back({{kind, static_cast<int>(m), k}, exp});
      }
    }
  }
  eta_.resize(letters_.size());
  for (std::size_t l = 0; l < letters_.size(); ++l) {
    Letter image = letters_[l];
    if (image.gen.kind == GenKind::Y) {
      image.gen.kind = GenKind::Z;
    } else if (image.gen.kind == GenKind::Z) {
      image.gen.kind = GenKind::Y;
    }
    eta_[l] = id(image);
  }

  std::vector<std::pair<Word, Word>> seeds;
  for (std::size_t g = 0; g < generator_count(); ++g) {
    LetterId t = encode(g, 1);
    LetterId ti = encode(g, -1);
    seeds.push_back({{t, ti}, {}});
    seeds.push_back({{ti, t}, {}});
  }

  // Partner lookup: adjoined index of a root, or -1.
  auto find_root = [&](const LatticeVector& v) {
    for (std::size_t m = 0; m < adjoined.size(); ++m) {
      if (adjoined[m].root.coeffs() == v) return static_cast<int>(m);
    }
    return -1;
  };

  for (std::size_t m = 0; m < adjoined.size(); ++m) {
    const Root& theta = adjoined[m].root;
    if (is_omega_root(theta)) continue;
    LongRootShape shape = long_root_shape(theta);
    if (shape.pattern != LongRootShape::Pattern::Difference) continue;
    const int p = shape.p;
    const int q = shape.q;
    LatticeVector sum = LatticeVector::Zero(spec_.rank());
    sum(p - 1) = 1;
    sum(q - 1) = 1;
    const int pos = find_root(sum);
    const int neg = find_root(-sum);
    // Sum/NegSum Theta roots are stored with their lower index first; a
    // Difference root with p > q sees its partner in the flipped orientation,
    // which conjugates the partner's coordinate in the relation.
    const bool flipped = p > q;
    const int mi = static_cast<int>(m);
    for (int i = 1; i <= adjoined[m].copies; ++i) {
      const LetterId y = id(GenKind::Y, mi, i);
      const LetterId z = id(GenKind::Z, mi, i);
      if (pos >= 0) {
        for (int j = 1; j <= adjoined[static_cast<std::size_t>(pos)].copies; ++j) {
          if (is_omega_root(adjoined[static_cast<std::size_t>(pos)].root)) {
            const LetterId x = id(GenKind::X, pos, j);
            mixing_.push_back({1, {y, x}, {x, z}});
          } else {
            const LetterId ys = id(GenKind::Y, pos, j);
            const LetterId zs = id(GenKind::Z, pos, j);
            mixing_.push_back(flipped ? MixingRelation{2, {y, ys}, {zs, z}}
                                      : MixingRelation{2, {y, zs}, {ys, z}});
          }
        }
      }
      if (neg >= 0) {
        for (int k = 1; k <= adjoined[static_cast<std::size_t>(neg)].copies; ++k) {
          if (is_omega_root(adjoined[static_cast<std::size_t>(neg)].root)) {
            const LetterId x = id(GenKind::X, neg, k);
            mixing_.push_back({3, {z, x}, {x, y}});
          } else {
            const LetterId yn = id(GenKind::Y, neg, k);
            const LetterId zn = id(GenKind::Z, neg, k);
            mixing_.push_back(flipped ? MixingRelation{4, {z, zn}, {yn, y}}
                                      : MixingRelation{4, {z, yn}, {zn, y}});
          }
        }
      }
    }
  }
  for (const MixingRelation& rel : mixing_) seeds.emplace_back(rel.lhs, rel.rhs);

  rules_ = RewriteSystem::complete(seeds, options,
                                   [this](const Word& w) { return render(w); });
}

LetterId CoordinateAlgebra::id(const Letter& l) const {
  for (std::size_t i = 0; i < letters_.size(); i += 2) {
    if (letters_[i].gen == l.gen) return encode(i / 2, l.exp);
  }
  throw Error(ErrorCode::UnknownGenerator,
              std::string("no coordinate generator ") + gen_kind_char(l.gen.kind) +
                  " for adjoined root #" + std::to_string(l.gen.adjoined_index + 1) + " copy " +
                  std::to_string(l.gen.copy));
}

LetterId CoordinateAlgebra::id(GenKind kind, int adjoined_index, int copy, int exp) const {
  return id(Letter{{kind, adjoined_index, copy}, exp});
}

LetterId CoordinateAlgebra::primary_letter(int adjoined_index, int copy, int exp) const {
  if (adjoined_index < 0 || adjoined_index >= static_cast<int>(spec_.adjoined().size())) {
    throw Error(ErrorCode::UnknownGenerator, "adjoined root index out of range");
  }
  const Root& root = spec_.adjoined()[static_cast<std::size_t>(adjoined_index)].root;
  return id(is_omega_root(root) ? GenKind::X : GenKind::Y, adjoined_index, copy, exp);
}

std::string CoordinateAlgebra::render(LetterId l) const {
  const Letter& letter = letters_.at(l);
  std::string root = spec_.adjoined()[static_cast<std::size_t>(letter.gen.adjoined_index)].root.str();
  root.pop_back();
  std::string out = std::string(1, gen_kind_char(letter.gen.kind)) + root + ";" +
                    std::to_string(letter.gen.copy) + "]";
  if (letter.exp < 0) out += "^-1";
  return out;
}

std::string CoordinateAlgebra::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "·";
    out += render(w[i]);
  }
  return out;
}

Word CoordinateAlgebra::parse_word(const std::string& text) const {
  Word out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::MalformedDocument,
                "cannot parse monomial '" + text + "' at offset " + std::to_string(i) + ": " + why);
  };
  auto skip_separators = [&] {
    while (i < text.size()) {
      if (text[i] == ' ' || text[i] == '*') {
        ++i;
      } else if (text.compare(i, 2, "·") == 0) {
        i += 2;
      } else {
        break;
      }
    }
  };
  skip_separators();
  if (text.substr(i) == "1") return out;
  while (skip_separators(), i < text.size()) {
    GenKind kind;
    switch (text[i]) {
      case 'x': kind = GenKind::X; break;
      case 'y': kind = GenKind::Y; break;
      case 'z': kind = GenKind::Z; break;
      default: fail("expected x, y or z");
    }
    ++i;
    if (i >= text.size() || text[i] != '[') fail("expected '['");
    std::size_t close = text.find(']', i);
    if (close == std::string::npos) fail("missing ']'");
    std::string body = text.substr(i + 1, close - i - 1);
    std::size_t semi = body.find(';');
    if (semi == std::string::npos) fail("missing ';' before the copy index");
    std::vector<int> coeffs;
    int copy = 0;
    try {
      std::stringstream ss(body.substr(0, semi));
      std::string item;
      while (std::getline(ss, item, ',')) coeffs.push_back(std::stoi(item));
      copy = std::stoi(body.substr(semi + 1));
    } catch (const std::logic_error&) {
      fail("bad integer");
    }
    i = close + 1;
    int exp = 1;
    if (text.compare(i, 3, "^-1") == 0) {
      exp = -1;
      i += 3;
    } else if (text.compare(i, 2, "^1") == 0) {
      i += 2;
    }
    int index = -1;
    const auto& adjoined = spec_.adjoined();
    for (std::size_t m = 0; m < adjoined.size(); ++m) {
      if (adjoined[m].root.to_vector() == coeffs) index = static_cast<int>(m);
    }
    if (index < 0) {
      throw Error(ErrorCode::UnknownGenerator,
                  "monomial '" + text + "' uses a root that is not adjoined");
    }
    out.push_back(id(kind, index, copy, exp));
  }
  return out;
}

std::shared_ptr<const CoordinateAlgebra> make_coordinate_algebra(const AffinizationSpec& spec,
                                                                 const CompletionOptions& options) {
  return std::make_shared<const CoordinateAlgebra>(spec, options);
}

// ---------------------------------------------------------------------------

NCElement::NCElement(const Scalar& s) {
  if (!s.is_zero()) terms_.emplace(Word{}, s);
}

NCElement NCElement::monomial(const CoordinateAlgebra& ctx, const Word& w, const Scalar& c) {
  NCElement out;
  out.ctx_ = &ctx;
  out.add_term(ctx.normal_form(w), c);
  return out;
}

void NCElement::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar NCElement::constant_term() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::string NCElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += "(" + (negative ? -c : c).str() + ")";
    if (!w.empty()) out += "·" + ctx_->render(w);
  }
  return out;
}

const CoordinateAlgebra* common_context(const NCElement& a, const NCElement& b) {
  if (a.context() && b.context() && a.context() != b.context()) {
    throw Error(ErrorCode::ContextMismatch, "elements belong to different coordinate algebras");
  }
  return a.context() ? a.context() : b.context();
}

NCElement NCElement::operator-() const { return nc_scale(Scalar(-1), *this); }

NCElement operator+(const NCElement& a, const NCElement& b) {
  NCElement out = a;
  out.ctx_ = common_context(a, b);
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

NCElement operator-(const NCElement& a, const NCElement& b) { return a + (-b); }

NCElement operator*(const NCElement& a, const NCElement& b) {
  NCElement out;
  out.ctx_ = common_context(a, b);
  Word buffer;
  for (const auto& [u, c] : a.terms_) {
    for (const auto& [v, d] : b.terms_) {
      if (u.empty() || v.empty()) {
        out.add_term(u.empty() ? v : u, c * d);
        continue;
      }
      buffer = u;
      buffer.insert(buffer.end(), v.begin(), v.end());
      out.add_term(out.ctx_->normal_form(buffer), c * d);
    }
  }
  return out;
}

NCElement operator*(const Scalar& s, const NCElement& a) {
  NCElement out;
  out.ctx_ = a.ctx_;
  if (s.is_zero()) return out;
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, s * c);
  return out;
}

bool operator==(const NCElement& a, const NCElement& b) {
  common_context(a, b);
  return a.terms_ == b.terms_;
}

NCElement nc_add(const NCElement& a, const NCElement& b) { return a + b; }
NCElement nc_mul(const NCElement& a, const NCElement& b) { return a * b; }
NCElement nc_scale(const Scalar& s, const NCElement& a) { return s * a; }

NCElement involution(const NCElement& a) {
  NCElement out;
  out.ctx_ = a.ctx_;
  for (const auto& [w, c] : a.terms_) {
    Word image(w.rbegin(), w.rend());
    for (LetterId& l : image) l = a.ctx_->eta(l);
    out.add_term(a.ctx_->normal_form(image), c);
  }
  return out;
}

bool is_equal(const NCElement& a, const NCElement& b) { return (a - b).is_zero(); }

CoordinateSoundnessReport verify_coordinate_algebra(const CoordinateAlgebra& ctx,
                                                    std::size_t words, int max_len,
                                                    std::uint64_t seed, std::size_t step_bound) {
  CoordinateSoundnessReport rep;
  const RewriteSystem& sys = ctx.rewriting();
  for (const RewriteRule& rule : sys.rules()) {
    ++rep.rules;
    if (!word_less(sys.ordering(), rule.rhs, rule.lhs)) {
      rep.failures.push_back({"rule-order", ctx.render(rule.lhs) + " -> " + ctx.render(rule.rhs)});
    }
  }

  std::mt19937_64 rng(seed);
  const std::size_t letters = ctx.letter_count();
  auto random_word = [&](int len) {
    Word w;
    for (int k = 0; k < len && letters > 0; ++k) {
      w.push_back(static_cast<LetterId>(rng() % letters));
    }
    return w;
  };

  for (std::size_t n = 0; n < words; ++n) {
    const Word w = random_word(static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1)));
    const std::size_t bound = step_bound != 0 ? step_bound : 64 * (w.size() + 1);
    const Word nf = ctx.normal_form(w);
    const std::size_t steps = RewriteSystem::last_step_count();
    ++rep.words;
    rep.max_steps = std::max(rep.max_steps, steps);
    rep.max_normal_length = std::max(rep.max_normal_length, nf.size());
    if (steps > bound) {
      rep.failures.push_back({"step-bound", ctx.render(w) + " took " + std::to_string(steps) +
                                                " rewrites, bound " + std::to_string(bound)});
    }
    if (!sys.is_irreducible(nf) || ctx.normal_form(nf) != nf) {
      rep.failures.push_back({"normal-form", ctx.render(w) + " -> " + ctx.render(nf)});
    }
    if (letters > 0) {
      Word padded = w;
      const LetterId l = static_cast<LetterId>(rng() % letters);
      const auto at = static_cast<std::ptrdiff_t>(rng() % (w.size() + 1));
      padded.insert(padded.begin() + at, {l, ctx.inverse(l)});
      if (ctx.normal_form(padded) != nf) {
        rep.failures.push_back({"cancellation", ctx.render(padded) + " vs " + ctx.render(w)});
      }
    }
  }

  auto random_element = [&] {
    NCElement out;
    const int terms = 1 + static_cast<int>(rng() % 2);
    for (int t = 0; t < terms; ++t) {
      const Scalar c(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) - 1);
      out += letters > 0 ? NCElement::monomial(ctx, random_word(static_cast<int>(rng() % 5)), c)
                         : NCElement(c);
    }
    return out;
  };
  const std::size_t pairs = std::max<std::size_t>(1, words / 10);
  for (std::size_t n = 0; n < pairs; ++n) {
    const NCElement a = random_element();
    const NCElement b = random_element();
    ++rep.eta_pairs;
    if (!is_equal(involution(involution(a)), a)) {
      rep.failures.push_back({"eta-involution", a.str()});
    }
    if (!is_equal(involution(a * b), involution(b) * involution(a))) {
      rep.failures.push_back({"eta-anti-automorphism", a.str() + " ; " + b.str()});
    }
    if (!is_equal(involution(a + b), involution(a) + involution(b))) {
      rep.failures.push_back({"eta-additive", a.str() + " ; " + b.str()});
    }
  }

  for (const MixingRelation& rel : ctx.mixing_relations()) {
    ++rep.mixing_relations;
    const NCElement l = involution(NCElement::monomial(ctx, rel.lhs));
    const NCElement r = involution(NCElement::monomial(ctx, rel.rhs));
    if (!is_equal(l, r)) {
      rep.failures.push_back({"eta-stability", "family " + std::to_string(rel.family) + ": " +
                                                   ctx.render(rel.lhs) + " = " +
                                                   ctx.render(rel.rhs)});
    }
  }
  return rep;
}

}  // namespace bcgim
