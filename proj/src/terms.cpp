#include "frobcalc/terms.hpp"

#include <cctype>
#include <vector>

#include "frobcalc/error.hpp"

namespace frobcalc {

std::string to_string(ArrowType t) {
  return std::to_string(t.src) + " -> " + std::to_string(t.tgt);
}

// ---------------------------------------------------------------------------
// Typing rules

std::optional<ArrowType> FrobLang::gen_type(Gen g, unsigned n) {
  switch (g) {
    case Gen::eps_box:
      return ArrowType{n + 1, n};
    case Gen::eps_dia:
      return ArrowType{n, n + 1};
    case Gen::delta_box:
      return ArrowType{n + 1, n + 2};
    case Gen::delta_dia:
      return ArrowType{n + 2, n + 1};
  }
  return std::nullopt;
}

std::optional<ArrowType> FrobLang::apply_type(Functor, ArrowType t) {
  return ArrowType{t.src + 1, t.tgt + 1};
}

std::optional<ArrowType> MonadLang::gen_type(Gen g, unsigned n) {
  if (g == Gen::eps_dia) {
    return ArrowType{n, n + 1};
  }
  return ArrowType{n + 2, n + 1};
}

std::optional<ArrowType> MonadLang::apply_type(Functor, ArrowType t) {
  return ArrowType{t.src + 1, t.tgt + 1};
}

std::optional<ArrowType> SelfAdjLang::gen_type(Gen g, unsigned n) {
  if (g == Gen::gamma) {
    return ArrowType{n, n + 2};
  }
  return ArrowType{n + 2, n};
}

std::optional<ArrowType> SelfAdjLang::apply_type(Functor, ArrowType t) {
  return ArrowType{t.src + 1, t.tgt + 1};
}

std::optional<ArrowType> AdjLang::gen_type(Gen g, unsigned n) {
  // The unit lives on the B side (even), the counit on the A side (odd).
  if (g == Gen::gamma) {
    if (n % 2 != 0) {
      return std::nullopt;
    }
    return ArrowType{n, n + 2};
  }
  if (n % 2 != 1) {
    return std::nullopt;
  }
  return ArrowType{n + 2, n};
}

std::optional<ArrowType> AdjLang::apply_type(Functor f, ArrowType t) {
  unsigned want = f == Functor::F ? 0 : 1;
  if (t.src % 2 != want || t.tgt % 2 != want) {
    return std::nullopt;
  }
  return ArrowType{t.src + 1, t.tgt + 1};
}

std::optional<ArrowType> BijLang::gen_type(Gen g, unsigned n) {
  bool a_side = g == Gen::gamma_a || g == Gen::phi_a;
  if ((n % 2 == 0) != a_side) {
    return std::nullopt;
  }
  if (g == Gen::gamma_a || g == Gen::gamma_b) {
    return ArrowType{n, n + 2};
  }
  return ArrowType{n + 2, n};
}

std::optional<ArrowType> BijLang::apply_type(Functor f, ArrowType t) {
  // P : B -> A takes odd objects, U : A -> B takes even ones.
  unsigned want = f == Functor::P ? 1 : 0;
  if (t.src % 2 != want || t.tgt % 2 != want) {
    return std::nullopt;
  }
  return ArrowType{t.src + 1, t.tgt + 1};
}

// ---------------------------------------------------------------------------
// Term

template <class Lang>
Term<Lang> Term<Lang>::identity(unsigned n) {
  return Term(std::make_shared<const Node>(Node{TermKind::id, 0, n, {}, {}}));
}

template <class Lang>
Term<Lang> Term<Lang>::generator(Gen g, unsigned n) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::gen, static_cast<std::uint8_t>(g), n, {}, {}}));
}

template <class Lang>
Term<Lang> Term<Lang>::compose(Term g, Term f) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::compose, 0, 0, std::make_shared<const Term>(std::move(g)),
           std::make_shared<const Term>(std::move(f))}));
}

template <class Lang>
Term<Lang> Term<Lang>::apply(Functor functor, Term f) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::apply, static_cast<std::uint8_t>(functor), 0, {},
           std::make_shared<const Term>(std::move(f))}));
}

template <class Lang>
bool Term<Lang>::equals(const Term& other) const noexcept {
  if (node_ == other.node_) {
    return true;
  }
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind || a.tag != b.tag || a.index != b.index) {
    return false;
  }
  switch (a.kind) {
    case TermKind::compose:
      return a.left->equals(*b.left) && a.right->equals(*b.right);
    case TermKind::apply:
      return a.right->equals(*b.right);
    default:
      return true;
  }
}

template <class Lang>
ArrowType type_of(const Term<Lang>& t) {
  switch (t.kind()) {
    case TermKind::id:
      return {t.index(), t.index()};
    case TermKind::gen: {
      auto ty = Lang::gen_type(t.gen(), t.index());
      if (!ty) {
        throw TypeError("ill-sorted generator " + to_string(t) + " in " +
                        std::string(Lang::name) + " terms");
      }
      return *ty;
    }
    case TermKind::compose: {
      ArrowType f = type_of(t.inner());
      ArrowType g = type_of(t.outer());
      if (f.tgt != g.src) {
        throw TypeError("cannot compose " + to_string(t.outer()) + " : " +
                        to_string(g) + " after " + to_string(t.inner()) +
                        " : " + to_string(f));
      }
      return {f.src, g.tgt};
    }
    case TermKind::apply: {
      ArrowType f = type_of(t.inner());
      auto ty = Lang::apply_type(t.functor(), f);
      if (!ty) {
        throw TypeError(
            "functor " +
            std::string(Lang::functor_keywords[static_cast<std::size_t>(
                t.functor())]) +
            " cannot be applied to " + to_string(t.inner()) + " : " +
            to_string(f));
      }
      return *ty;
    }
  }
  throw TypeError("corrupt term");
}

template <class Lang>
std::size_t generator_count(const Term<Lang>& t) {
  switch (t.kind()) {
    case TermKind::gen:
      return 1;
    case TermKind::compose:
      return generator_count(t.outer()) + generator_count(t.inner());
    case TermKind::apply:
      return generator_count(t.inner());
    default:
      return 0;
  }
}

template <class Lang>
std::string to_string(const Term<Lang>& t) {
  switch (t.kind()) {
    case TermKind::id:
      return "id " + std::to_string(t.index());
    case TermKind::gen:
      return std::string(
                 Lang::gen_keywords[static_cast<std::size_t>(t.gen())]) +
             " " + std::to_string(t.index());
    case TermKind::compose:
      return "(" + to_string(t.outer()) + " . " + to_string(t.inner()) + ")";
    case TermKind::apply: {
      std::string body = to_string(t.inner());
      if (t.inner().kind() != TermKind::compose) {
        body = "(" + body + ")";
      }
      return std::string(Lang::functor_keywords[static_cast<std::size_t>(
                 t.functor())]) +
             " " + body;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum Kind { word, number, dot, lparen, rparen, end } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c)) {
      std::size_t start = i;
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
      out.push_back({Token::word, std::string(s.substr(start, i - start)),
                     start});
    } else if (std::isdigit(c)) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
      out.push_back({Token::number, std::string(s.substr(start, i - start)),
                     start});
    } else if (c == '.') {
      out.push_back({Token::dot, ".", i++});
    } else if (c == '(') {
      out.push_back({Token::lparen, "(", i++});
    } else if (c == ')') {
      out.push_back({Token::rparen, ")", i++});
    } else {
      throw ParseError(i, std::string("unexpected character '") + s[i] + "'");
    }
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

template <class L>
bool in_keywords(std::string_view w) {
  if (w == "id") {
    return true;
  }
  for (auto k : L::gen_keywords) {
    if (k == w) {
      return true;
    }
  }
  for (auto k : L::functor_keywords) {
    if (k == w) {
      return true;
    }
  }
  return false;
}

std::optional<std::string_view> owning_language(std::string_view w) {
  if (in_keywords<FrobLang>(w) || w == "x") {
    return FrobLang::name;
  }
  if (in_keywords<SelfAdjLang>(w)) {
    return SelfAdjLang::name;
  }
  if (in_keywords<AdjLang>(w)) {
    return AdjLang::name;
  }
  if (in_keywords<BijLang>(w)) {
    return BijLang::name;
  }
  return std::nullopt;
}

template <class Lang>
class TermParser {
 public:
  using T = Term<Lang>;
  explicit TermParser(std::string_view text) : tokens_(tokenize(text)) {}

  T parse_all() {
    T t = composition();
    if (peek().kind != Token::end) {
      throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    }
    return t;
  }

 private:
  static constexpr bool kHasTensor = std::is_same_v<Lang, FrobLang>;

  T composition() {
    T left = tensor();
    if (peek().kind == Token::dot) {
      std::size_t at = peek().pos;
      ++pos_;
      T right = composition();
      return typed(T::compose(std::move(left), std::move(right)), at);
    }
    return left;
  }

  // Types a freshly built node so that errors point into the source text.
  static T typed(T t, std::size_t at) {
    try {
      type_of(t);
    } catch (const TypeError& e) {
      throw TypeError("at position " + std::to_string(at) + ": " + e.what());
    }
    return t;
  }

  T tensor() {
    T left = unary();
    while (peek().kind == Token::word && peek().text == "x") {
      if constexpr (kHasTensor) {
        std::size_t at = peek().pos;
        ++pos_;
        T right = unary();
        try {
          left = tensor_term(left, right);
        } catch (const TypeError& e) {
          throw TypeError("at position " + std::to_string(at) + ": " +
                          e.what());
        }
      } else {
        throw ParseError(peek().pos, "tensor 'x' is only defined for frob terms");
      }
    }
    return left;
  }

  T unary() {
    const Token& tok = peek();
    if (tok.kind == Token::lparen) {
      ++pos_;
      T inner = composition();
      if (peek().kind != Token::rparen) {
        throw ParseError(peek().pos, "expected ')'");
      }
      ++pos_;
      return inner;
    }
    if (tok.kind != Token::word) {
      if (tok.kind == Token::end) {
        throw ParseError(tok.pos, "unexpected end of term");
      }
      throw ParseError(tok.pos, "unexpected '" + tok.text + "'");
    }
    ++pos_;
    for (std::size_t i = 0; i < Lang::functor_keywords.size(); ++i) {
      if (tok.text == Lang::functor_keywords[i]) {
        return typed(T::apply(static_cast<typename Lang::Functor>(i), unary()),
                     tok.pos);
      }
    }
    if (tok.text == "id") {
      return T::identity(number());
    }
    for (std::size_t i = 0; i < Lang::gen_keywords.size(); ++i) {
      if (tok.text == Lang::gen_keywords[i]) {
        return typed(T::generator(static_cast<typename Lang::Gen>(i), number()),
                     tok.pos);
      }
    }
    auto owner = owning_language(tok.text);
    if (owner) {
      throw ParseError(tok.pos, "constructor '" + tok.text +
                                    "' belongs to the " + std::string(*owner) +
                                    " language, not " +
                                    std::string(Lang::name));
    }
    throw ParseError(tok.pos, "unknown constructor '" + tok.text + "'");
  }

  unsigned number() {
    const Token& tok = peek();
    if (tok.kind != Token::number) {
      throw ParseError(tok.pos, "expected a subscript");
    }
    if (tok.text.size() > 6) {
      throw ParseError(tok.pos, "subscript too large");
    }
    ++pos_;
    return static_cast<unsigned>(std::stoul(tok.text));
  }

  const Token& peek() const { return tokens_[pos_]; }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class Lang>
Term<Lang> parse_term(std::string_view text) {
  return TermParser<Lang>(text).parse_all();
}

#define FROBCALC_INSTANTIATE(L)                                   \
  template class Term<L>;                                         \
  template ArrowType type_of<L>(const Term<L>&);                  \
  template std::size_t generator_count<L>(const Term<L>&);        \
  template Term<L> parse_term<L>(std::string_view);               \
  template std::string to_string<L>(const Term<L>&);

FROBCALC_INSTANTIATE(FrobLang)
FROBCALC_INSTANTIATE(MonadLang)
FROBCALC_INSTANTIATE(SelfAdjLang)
FROBCALC_INSTANTIATE(AdjLang)
FROBCALC_INSTANTIATE(BijLang)

#undef FROBCALC_INSTANTIATE

// ---------------------------------------------------------------------------
// Frob builders

namespace frob {

using G = FrobLang::Gen;

FrobTerm id(unsigned n) { return FrobTerm::identity(n); }
FrobTerm eps_box(unsigned n) { return FrobTerm::generator(G::eps_box, n); }
FrobTerm eps_dia(unsigned n) { return FrobTerm::generator(G::eps_dia, n); }
FrobTerm delta_box(unsigned n) { return FrobTerm::generator(G::delta_box, n); }
FrobTerm delta_dia(unsigned n) { return FrobTerm::generator(G::delta_dia, n); }

FrobTerm lift(FrobTerm f) {
  return FrobTerm::apply(FrobLang::Functor::M, std::move(f));
}

FrobTerm lift(FrobTerm f, unsigned times) {
  for (unsigned i = 0; i < times; ++i) {
    f = lift(std::move(f));
  }
  return f;
}

FrobTerm compose(FrobTerm g, FrobTerm f) {
  return FrobTerm::compose(std::move(g), std::move(f));
}

}  // namespace frob

FrobTerm subscript_shift(const FrobTerm& f, unsigned n) {
  if (n == 0) {
    return f;
  }
  switch (f.kind()) {
    case TermKind::id:
      return FrobTerm::identity(f.index() + n);
    case TermKind::gen:
      return FrobTerm::generator(f.gen(), f.index() + n);
    case TermKind::compose:
      return FrobTerm::compose(subscript_shift(f.outer(), n),
                               subscript_shift(f.inner(), n));
    case TermKind::apply:
      return FrobTerm::apply(f.functor(), subscript_shift(f.inner(), n));
  }
  return f;
}

FrobTerm tensor_term(const FrobTerm& f1, const FrobTerm& f2) {
  ArrowType t1 = type_of(f1);
  ArrowType t2 = type_of(f2);
  FrobTerm left = subscript_shift(f1, t2.tgt);
  if (f2.is_identity()) {
    return left;
  }
  FrobTerm right = frob::lift(f2, t1.src);
  if (f1.is_identity()) {
    return right;
  }
  return frob::compose(std::move(left), std::move(right));
}

FrobTerm phi_term(unsigned n, unsigned k) {
  // Application order: eps_dia_n, delta_box_n .. delta_box_{n+k-1},
  // delta_dia_{n+k-1} .. delta_dia_n, eps_box_n.
  FrobTerm t = frob::eps_dia(n);
  for (unsigned i = 0; i < k; ++i) {
    t = frob::compose(frob::delta_box(n + i), t);
  }
  for (unsigned i = k; i-- > 0;) {
    t = frob::compose(frob::delta_dia(n + i), t);
  }
  return frob::compose(frob::eps_box(n), t);
}

SelfAdjTerm kappa_term(unsigned n, unsigned k) {
  using SG = SelfAdjLang::Gen;
  unsigned obj = 2 * n + 1;
  if (k == 0) {
    return SelfAdjTerm::identity(obj);
  }
  SelfAdjTerm loop = SelfAdjTerm::compose(SelfAdjTerm::generator(SG::phi, obj),
                                          SelfAdjTerm::generator(SG::gamma, obj));
  SelfAdjTerm t = loop;
  for (unsigned i = 1; i < k; ++i) {
    t = SelfAdjTerm::compose(t, loop);
  }
  return t;
}

}  // namespace frobcalc
