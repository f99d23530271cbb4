#pragma once

// The affine Weyl group as the semidirect product L x| W0.
//
// An element t^lambda w acts on points by p -> lambda + w p (coroot
// coordinates). Products follow t^a u * t^b v = t^(a + u b) (u v).

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/linalg.hpp"
#include "coxeter/root_data.hpp"

namespace coxeter {

struct FiniteWeylElement {
  CoxeterType type = CoxeterType::A2;
  IntMatrix matrix;
  std::size_t id = 0;  // position in AffineWeylGroup::finite_weyl_elements()

  friend bool operator==(const FiniteWeylElement& a, const FiniteWeylElement& b) {
    return a.type == b.type && a.matrix == b.matrix;
  }
};

struct AffineElement {
  CoxeterType type = CoxeterType::A2;
  IntVector lambda;
  FiniteWeylElement w;

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.type == b.type && a.lambda == b.lambda && a.w == b.w;
  }
  // (type, direction id, translation) lexicographic
  friend std::strong_ordering operator<=>(const AffineElement& a, const AffineElement& b);
};

struct Word {
  std::vector<std::size_t> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  // Digit string; empty for the identity.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  enum class Code { malformed, letter_out_of_range, affine_letter_in_spherical_word, wrong_arity };

  ParseError(Code code, std::size_t offset, const std::string& message);

  Code code() const { return code_; }
  std::size_t offset() const { return offset_; }

 private:
  Code code_;
  std::size_t offset_;
};

std::string_view to_string(ParseError::Code code);

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(const RootDatum& datum);

  // Shared immutable instance per type.
  static const AffineWeylGroup& of(CoxeterType type);

  const RootDatum& datum() const { return *datum_; }
  CoxeterType type() const { return datum_->type; }
  std::size_t rank() const { return datum_->rank; }

  // All of W0 in breadth-first order from the identity; element 0 is e.
  std::span<const FiniteWeylElement> finite_weyl_elements() const { return elements_; }
  const FiniteWeylElement& finite_element(std::size_t id) const { return elements_.at(id); }
  std::size_t finite_order() const { return elements_.size(); }
  // Throws std::invalid_argument if the matrix is not in W0.
  const FiniteWeylElement& lookup(const IntMatrix& matrix) const;
  // The word over S0 by which breadth-first enumeration reached an element.
  const Word& bfs_word(std::size_t id) const { return bfs_words_.at(id); }

  FiniteWeylElement multiply(const FiniteWeylElement& a, const FiniteWeylElement& b) const;
  FiniteWeylElement inverse(const FiniteWeylElement& a) const;
  FiniteWeylElement conjugate(const FiniteWeylElement& u, const FiniteWeylElement& w) const;

  AffineElement identity() const;
  AffineElement generator(std::size_t label) const;
  AffineElement make(const IntVector& lambda, const FiniteWeylElement& w) const;
  AffineElement translation(const IntVector& lambda) const;

  AffineElement multiply(const AffineElement& x, const AffineElement& y) const;
  AffineElement inverse(const AffineElement& x) const;
  // z x z^-1
  AffineElement conjugate(const AffineElement& z, const AffineElement& x) const;

  bool is_identity(const AffineElement& x) const;

  // Affine action on a point in coroot coordinates.
  RatVector act(const AffineElement& x, const RatVector& point) const;

  AffineElement word_to_element(const Word& word) const;
  // A generator word ("0120102", "" or "e" for the identity) or the
  // semidirect form "t_(2,2)*s_1". Throws ParseError with an offset into input.
  AffineElement parse_element(std::string_view input) const;

  Word lex_first_reduced_word(const AffineElement& x) const;
  std::size_t length(const AffineElement& x) const;

  // "s_<word>" or "e".
  std::string label(const AffineElement& x) const;
  // Canonical semidirect form "t_(c1,..,cn)*s_<word>"; the "*s_" part is
  // omitted when the spherical direction is trivial.
  std::string format_semidirect(const AffineElement& x) const;

 private:
  void require_type(CoxeterType t) const;

  const RootDatum* datum_;
  std::vector<FiniteWeylElement> elements_;
  std::vector<Word> bfs_words_;
  std::map<IntMatrix, std::size_t> index_;
  std::vector<std::size_t> mult_;  // mult_[a * N + b] = id of a*b
  std::vector<std::size_t> inv_;
  std::vector<AffineElement> generators_;
};

}  // namespace coxeter
