#pragma once

// Noncommutative polynomials over Q in generator letters: the tensor-algebra
// carrier into which all graded Lie elements are embedded. Words are
// sequences of 0-based generator indices; a polynomial maps words to
// nonzero rational coefficients.

#include "hiconn/qmatrix.hpp"
#include "hiconn/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hiconn {

// Enumeration guardrails: word length and total word-count per computation.
struct Caps {
  int max_word_len = 10;
  std::int64_t max_words = 5'000'000;
};

// Checks that weight-r words over n letters fit the caps; throws
// ResourceLimitError naming the violated cap.
void check_caps(int n, int r, const Caps& caps);

struct GeneratorSpec {
  int n;           // number of generators, >= 1
  int gen_degree;  // homological degree of every generator (= d-1), >= 1

  GeneratorSpec(int n_, int gen_degree_);

  int parity() const { return gen_degree & 1; }
  // parity of the homological degree weight*gen_degree
  int weight_parity(int weight) const { return (weight * gen_degree) & 1; }
};

using Word = std::vector<std::uint8_t>;

class NCPoly {
 public:
  NCPoly() = default;

  static NCPoly generator(int index);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Rat>& terms() const { return terms_; }

  bool is_homogeneous() const;
  // Common word length; throws DimensionError when inhomogeneous or zero.
  int weight() const;

  Rat coeff(const Word& w) const;
  void add_term(const Word& w, const Rat& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& axpy(const Rat& c, const NCPoly& o);  // *this += c * o
  NCPoly operator*(const NCPoly& o) const;      // concatenation product
  NCPoly operator*(const Rat& c) const;
  NCPoly operator-() const;

  bool operator==(const NCPoly& o) const = default;

  std::string to_string(const std::string& letter = "a") const;

 private:
  std::map<Word, Rat> terms_;
};

// [x,y] = xy - (-1)^{|x||y|} yx for homogeneous x, y (degrees taken from
// their weights via spec). Zero inputs give zero; inhomogeneous inputs are
// rejected.
NCPoly graded_bracket(const NCPoly& x, const NCPoly& y,
                      const GeneratorSpec& spec);

// Dense column index of a weight-|w| word, base-n positional encoding.
std::int64_t word_index(const Word& w, int n);
Word word_from_index(std::int64_t idx, int n, int weight);

// Conversions for homogeneous polynomials at a fixed weight.
SparseVec ncpoly_to_sparse(const NCPoly& p, int n);
NCPoly sparse_to_ncpoly(const SparseVec& v, int n, int weight);

}  // namespace hiconn
