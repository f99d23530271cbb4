#include "coxeter/word_algebra.hpp"

#include <array>
#include <cctype>
#include <deque>

namespace coxeter {

std::strong_ordering operator<=>(const AffineElement& a, const AffineElement& b) {
  if (auto c = a.type <=> b.type; c != 0) return c;
  if (auto c = a.w.id <=> b.w.id; c != 0) return c;
  return a.lambda <=> b.lambda;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters.size());
  for (auto l : letters) s.push_back(static_cast<char>('0' + l));
  return s;
}

ParseError::ParseError(Code code, std::size_t offset, const std::string& message)
    : std::invalid_argument(message + " at offset " + std::to_string(offset)), code_(code), offset_(offset) {}

std::string_view to_string(ParseError::Code code) {
  switch (code) {
    case ParseError::Code::malformed:
      return "malformed";
    case ParseError::Code::letter_out_of_range:
      return "letter_out_of_range";
    case ParseError::Code::affine_letter_in_spherical_word:
      return "affine_letter_in_spherical_word";
    case ParseError::Code::wrong_arity:
      return "wrong_arity";
  }
  return "unknown";
}

AffineWeylGroup::AffineWeylGroup(const RootDatum& datum) : datum_(&datum) {
  const std::size_t n = datum.rank;

  // breadth-first closure under right multiplication by s_1..s_n
  auto add = [&](const IntMatrix& m, Word word) {
    auto [it, inserted] = index_.emplace(m, elements_.size());
    if (!inserted) return;
    elements_.push_back(FiniteWeylElement{datum.type, m, elements_.size()});
    bfs_words_.push_back(std::move(word));
  };
  add(IntMatrix::identity(n), Word{});
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t label : datum.spherical_generators) {
      const auto& s = datum.simple_reflection_matrices[datum.generators[label].simple_index];
      Word w = bfs_words_[head];
      w.letters.push_back(label);
      add(elements_[head].matrix * s, std::move(w));
    }
  }

  const std::size_t order = elements_.size();
  mult_.resize(order * order);
  inv_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t ab = index_.at(elements_[a].matrix * elements_[b].matrix);
      mult_[a * order + b] = ab;
      if (ab == 0) inv_[a] = b;
    }
  }

  for (std::size_t label = 0; label < datum.generators.size(); ++label) {
    const auto& g = datum.generators[label];
    generators_.push_back(AffineElement{datum.type, g.translation_part(), lookup(g.linear_part())});
  }
}

const AffineWeylGroup& AffineWeylGroup::of(CoxeterType type) {
  static const std::vector<AffineWeylGroup> groups = [] {
    std::vector<AffineWeylGroup> g;
    for (auto t : kAllTypes) g.emplace_back(root_datum(t));
    return g;
  }();
  return groups[static_cast<std::size_t>(type)];
}

void AffineWeylGroup::require_type(CoxeterType t) const {
  if (t != datum_->type) throw std::invalid_argument("element type does not match group type");
}

const FiniteWeylElement& AffineWeylGroup::lookup(const IntMatrix& matrix) const {
  auto it = index_.find(matrix);
  if (it == index_.end()) throw std::invalid_argument("matrix is not in the finite Weyl group");
  return elements_[it->second];
}

FiniteWeylElement AffineWeylGroup::multiply(const FiniteWeylElement& a, const FiniteWeylElement& b) const {
  require_type(a.type);
  require_type(b.type);
  return elements_[mult_[a.id * elements_.size() + b.id]];
}

FiniteWeylElement AffineWeylGroup::inverse(const FiniteWeylElement& a) const {
  require_type(a.type);
  return elements_[inv_[a.id]];
}

FiniteWeylElement AffineWeylGroup::conjugate(const FiniteWeylElement& u, const FiniteWeylElement& w) const {
  return multiply(multiply(u, w), inverse(u));
}

AffineElement AffineWeylGroup::identity() const {
  return AffineElement{datum_->type, IntVector(rank()), elements_[0]};
}

AffineElement AffineWeylGroup::generator(std::size_t label) const { return generators_.at(label); }

AffineElement AffineWeylGroup::make(const IntVector& lambda, const FiniteWeylElement& w) const {
  require_type(w.type);
  if (lambda.size() != rank()) throw std::invalid_argument("translation has wrong rank");
  return AffineElement{datum_->type, lambda, w};
}

AffineElement AffineWeylGroup::translation(const IntVector& lambda) const { return make(lambda, elements_[0]); }

AffineElement AffineWeylGroup::multiply(const AffineElement& x, const AffineElement& y) const {
  require_type(x.type);
  require_type(y.type);
  return AffineElement{datum_->type, x.lambda + x.w.matrix * y.lambda, multiply(x.w, y.w)};
}

AffineElement AffineWeylGroup::inverse(const AffineElement& x) const {
  require_type(x.type);
  FiniteWeylElement wi = inverse(x.w);
  return AffineElement{datum_->type, -(wi.matrix * x.lambda), wi};
}

AffineElement AffineWeylGroup::conjugate(const AffineElement& z, const AffineElement& x) const {
  return multiply(multiply(z, x), inverse(z));
}

bool AffineWeylGroup::is_identity(const AffineElement& x) const { return x.w.id == 0 && is_zero(x.lambda); }

RatVector AffineWeylGroup::act(const AffineElement& x, const RatVector& point) const {
  return to_rational(x.lambda) + x.w.matrix * point;
}

AffineElement AffineWeylGroup::word_to_element(const Word& word) const {
  AffineElement x = identity();
  for (auto l : word.letters) {
    if (l >= generators_.size()) throw std::invalid_argument("invalid generator letter " + std::to_string(l));
    x = multiply(x, generators_[l]);
  }
  return x;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class Cursor {
 public:
  Cursor(std::string_view s, std::size_t pos, std::size_t end) : s_(s), pos_(pos), end_(end) {}

  bool done() const { return pos_ >= end_; }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  void skip_spaces() {
    while (!done() && is_space(s_[pos_])) ++pos_;
  }

  void expect(std::string_view lit) {
    for (char c : lit) {
      if (peek() != c)
        throw ParseError(ParseError::Code::malformed, pos_, std::string("expected '") + c + "'");
      ++pos_;
    }
  }

  Int integer() {
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(ParseError::Code::malformed, pos_, "expected integer");
    Int v = 0;
    try {
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = checked::add(checked::mul(v, 10), s_[pos_] - '0');
        ++pos_;
      }
    } catch (const OverflowError&) {
      throw ParseError(ParseError::Code::malformed, start, "integer out of range");
    }
    return negative ? -v : v;
  }

 private:
  std::string_view s_;
  std::size_t pos_;
  std::size_t end_;
};

}  // namespace

AffineElement AffineWeylGroup::parse_element(std::string_view input) const {
  std::size_t begin = 0, end = input.size();
  while (begin < end && is_space(input[begin])) ++begin;
  while (end > begin && is_space(input[end - 1])) --end;
  const std::size_t gens = generators_.size();

  auto read_letters = [&](Cursor& cur, bool spherical_only) {
    Word w;
    while (!cur.done()) {
      char c = cur.peek();
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(ParseError::Code::malformed, cur.pos(), std::string("unexpected character '") + c + "'");
      auto l = static_cast<std::size_t>(c - '0');
      if (l >= gens)
        throw ParseError(ParseError::Code::letter_out_of_range, cur.pos(),
                         "generator " + std::string(1, c) + " does not exist in type " +
                             std::string(to_string(type())));
      if (spherical_only && !datum_->is_spherical_generator(l))
        throw ParseError(ParseError::Code::affine_letter_in_spherical_word, cur.pos(),
                         "generator " + std::string(1, c) + " is not in the finite Weyl group");
      w.letters.push_back(l);
      cur.advance();
    }
    return w;
  };

  if (input.substr(begin, end - begin) == "e") return identity();
  Cursor cur(input, begin, end);
  if (cur.peek() != 't') return word_to_element(read_letters(cur, false));

  cur.expect("t_(");
  IntVector lambda(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    cur.skip_spaces();
    if (cur.peek() == ')')
      throw ParseError(ParseError::Code::wrong_arity, cur.pos(),
                       "expected " + std::to_string(rank()) + " coefficients");
    lambda[i] = cur.integer();
    cur.skip_spaces();
    if (i + 1 < rank()) {
      if (cur.peek() == ')')
        throw ParseError(ParseError::Code::wrong_arity, cur.pos(),
                         "expected " + std::to_string(rank()) + " coefficients");
      cur.expect(",");
    }
  }
  if (cur.peek() == ',')
    throw ParseError(ParseError::Code::wrong_arity, cur.pos(), "expected " + std::to_string(rank()) + " coefficients");
  cur.expect(")");
  AffineElement t = translation(lambda);
  if (cur.done()) return t;
  cur.expect("*s_");
  Word spherical = read_letters(cur, true);
  return multiply(t, word_to_element(spherical));
}

Word AffineWeylGroup::lex_first_reduced_word(const AffineElement& x) const {
  require_type(x.type);
  Word word;
  AffineElement y = x;
  RatVector q = act(y, datum_->alcove_barycenter);
  const std::size_t gens = generators_.size();
  while (!is_identity(y)) {
    std::size_t descent = gens;
    for (std::size_t g = 0; g < gens; ++g) {
      if (wall_pairing(*datum_, g, q) < Rational(0)) {
        descent = g;
        break;
      }
    }
    if (descent == gens) throw std::logic_error("non-identity element without a left descent");
    word.letters.push_back(descent);
    y = multiply(generators_[descent], y);
    q = act(generators_[descent], q);
  }
  return word;
}

std::size_t AffineWeylGroup::length(const AffineElement& x) const { return lex_first_reduced_word(x).size(); }

std::string AffineWeylGroup::label(const AffineElement& x) const {
  Word w = lex_first_reduced_word(x);
  return w.empty() ? "e" : "s_" + w.to_string();
}

std::string AffineWeylGroup::format_semidirect(const AffineElement& x) const {
  require_type(x.type);
  std::string s = "t_(";
  for (std::size_t i = 0; i < x.lambda.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.lambda[i]);
  }
  s += ")";
  if (x.w.id != 0) s += "*s_" + lex_first_reduced_word(make(IntVector(rank()), x.w)).to_string();
  return s;
}

}  // namespace coxeter
