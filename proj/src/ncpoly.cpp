#include "hiconn/ncpoly.hpp"

#include <algorithm>

namespace hiconn {

void check_caps(int n, int r, const Caps& caps) {
  if (r > caps.max_word_len)
    throw ResourceLimitError("weight " + std::to_string(r) +
                             " exceeds the word-length cap of " +
                             std::to_string(caps.max_word_len));
  Int words = int_pow(Int(n), static_cast<unsigned long>(r));
  if (words > caps.max_words)
    throw ResourceLimitError(
        "n^r = " + words.get_str() + " words exceeds the word-count cap of " +
        std::to_string(caps.max_words));
}

GeneratorSpec::GeneratorSpec(int n_, int gen_degree_)
    : n(n_), gen_degree(gen_degree_) {
  if (n < 1) throw DimensionError("GeneratorSpec: n >= 1 required");
  if (gen_degree < 1)
    throw DimensionError("GeneratorSpec: gen_degree >= 1 required");
}

NCPoly NCPoly::generator(int index) {
  NCPoly p;
  p.terms_[{static_cast<std::uint8_t>(index)}] = 1;
  return p;
}

bool NCPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::size_t len = terms_.begin()->first.size();
  return std::all_of(terms_.begin(), terms_.end(),
                     [len](const auto& t) { return t.first.size() == len; });
}

int NCPoly::weight() const {
  if (terms_.empty())
    throw DimensionError("weight of the zero polynomial is undefined");
  if (!is_homogeneous())
    throw DimensionError("weight of an inhomogeneous polynomial");
  return static_cast<int>(terms_.begin()->first.size());
}

Rat NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::axpy(const Rat& c, const NCPoly& o) {
  if (c == 0) return *this;
  for (const auto& [w, x] : o.terms_) add_term(w, c * x);
  return *this;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly p;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      p.add_term(w, c1 * c2);
    }
  return p;
}

NCPoly NCPoly::operator*(const Rat& c) const {
  NCPoly p;
  if (c == 0) return p;
  for (const auto& [w, x] : terms_) p.terms_[w] = c * x;
  return p;
}

NCPoly NCPoly::operator-() const { return *this * Rat(-1); }

std::string NCPoly::to_string(const std::string& letter) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += c.get_str();
    for (auto g : w) s += "*" + letter + std::to_string(g + 1);
  }
  return s;
}

NCPoly graded_bracket(const NCPoly& x, const NCPoly& y,
                      const GeneratorSpec& spec) {
  if (x.is_zero() || y.is_zero()) return NCPoly();
  const int wx = x.weight();
  const int wy = y.weight();
  const int sign_exp = spec.weight_parity(wx) & spec.weight_parity(wy);
  NCPoly p = x * y;
  p.axpy(sign_exp ? Rat(1) : Rat(-1), y * x);
  return p;
}

std::int64_t word_index(const Word& w, int n) {
  std::int64_t idx = 0;
  for (auto g : w) idx = idx * n + g;
  return idx;
}

Word word_from_index(std::int64_t idx, int n, int weight) {
  Word w(weight);
  for (int i = weight - 1; i >= 0; --i) {
    w[i] = static_cast<std::uint8_t>(idx % n);
    idx /= n;
  }
  return w;
}

SparseVec ncpoly_to_sparse(const NCPoly& p, int n) {
  SparseVec v;
  v.reserve(p.term_count());
  for (const auto& [w, c] : p.terms()) v.emplace_back(word_index(w, n), c);
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

NCPoly sparse_to_ncpoly(const SparseVec& v, int n, int weight) {
  NCPoly p;
  for (const auto& [idx, c] : v) p.add_term(word_from_index(idx, n, weight), c);
  return p;
}

}  // namespace hiconn
