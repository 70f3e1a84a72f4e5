#pragma once

// Free group words (stored freely reduced), the integral group ring ZF_n,
// endomorphisms of F_n, partial Fox derivatives and Jacobian matrices, and
// abelianization maps onto the Laurent polynomial ring. Also builds the
// abelianized Alexander matrix of the relator presentation attached to an
// endomorphism (generators x_i, y_i with relations x_i^-1 y_i).

#include "braidinv/laurent.hpp"
#include "braidinv/matrix.hpp"

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidinv {

struct IndexOutOfRank : std::out_of_range {
  explicit IndexOutOfRank(const std::string& what) : std::out_of_range(what) {}
};

struct RankMismatch : std::invalid_argument {
  explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A freely reduced word in F_n. Letters are signed 1-based generator indices;
// a negative letter is the inverse generator. Reduction happens on
// construction and multiplication, so equality is plain sequence equality.
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<int> raw) {
    for (int x : raw) push(x);
  }
  explicit FreeWord(const std::vector<int>& raw) {
    for (int x : raw) push(x);
  }

  static FreeWord generator(int i) { return FreeWord{i}; }

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  int max_index() const {
    int m = 0;
    for (int x : letters_) m = std::max(m, x < 0 ? -x : x);
    return m;
  }

  FreeWord inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
    return w;
  }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord w = a;
    for (int x : b.letters_) w.push(x);
    return w;
  }
  FreeWord& operator*=(const FreeWord& b) { return *this = *this * b; }

  friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }
  friend bool operator<(const FreeWord& a, const FreeWord& b) { return a.letters_ < b.letters_; }

 private:
  void push(int x) {
    if (x == 0) throw std::invalid_argument("letter 0 is not a generator index");
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }

  std::vector<int> letters_;
};

inline std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(x < 0 ? -x : x);
    if (x < 0) out += "^-1";
  }
  return out;
}

// A finite integer combination of free-group words: an element of ZF_n.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(int c) {
    if (c != 0) terms_[FreeWord()] = c;
  }
  GroupRingElement(Int c) {
    if (c != 0) terms_[FreeWord()] = std::move(c);
  }

  static GroupRingElement word(FreeWord w, Int c = 1) {
    GroupRingElement e;
    if (c != 0) e.terms_.emplace(std::move(w), std::move(c));
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<FreeWord, Int>& terms() const { return terms_; }

  GroupRingElement& operator+=(const GroupRingElement& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
  }
  GroupRingElement& operator*=(const Int& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [w, v] : terms_) v *= c;
    }
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(const GroupRingElement& a) {
    GroupRingElement r = a;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
  }
  friend GroupRingElement operator*(GroupRingElement a, const Int& c) { return a *= c; }
  friend GroupRingElement operator*(const Int& c, GroupRingElement a) { return a *= c; }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) { return !(a == b); }

 private:
  void add_term(const FreeWord& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<FreeWord, Int> terms_;  // invariant: no zero coefficients
};

inline std::string to_string(const GroupRingElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Int a = boost::multiprecision::abs(c);
    if (a != 1 || w.empty()) {
      out += a.str();
      if (!w.empty()) out += ' ';
    }
    if (!w.empty()) out += to_string(w);
  }
  return out;
}

// An endomorphism of F_n given by the images of the generators.
class Endomorphism {
 public:
  Endomorphism(int rank, std::vector<FreeWord> images) : rank_(rank), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != rank_)
      throw RankMismatch("expected one image per generator");
    for (const FreeWord& w : images_)
      if (w.max_index() > rank_) throw IndexOutOfRank("image uses a generator beyond the rank");
  }

  static Endomorphism identity(int rank) {
    std::vector<FreeWord> images;
    images.reserve(rank);
    for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(i));
    return Endomorphism(rank, std::move(images));
  }

  int rank() const { return rank_; }

  const FreeWord& image(int j) const {
    if (j < 1 || j > rank_) throw IndexOutOfRank("generator index out of rank");
    return images_[static_cast<std::size_t>(j) - 1];
  }

  FreeWord apply(const FreeWord& w) const {
    FreeWord out;
    for (int x : w.letters()) {
      const int i = x < 0 ? -x : x;
      if (i > rank_) throw IndexOutOfRank("word uses a generator beyond the rank");
      out *= x > 0 ? images_[i - 1] : images_[i - 1].inverse();
    }
    return out;
  }

  GroupRingElement apply(const GroupRingElement& e) const {
    GroupRingElement out;
    for (const auto& [w, c] : e.terms()) out += GroupRingElement::word(apply(w), c);
    return out;
  }

  bool is_identity() const {
    for (int i = 1; i <= rank_; ++i)
      if (image(i) != FreeWord::generator(i)) return false;
    return true;
  }

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }
  friend bool operator!=(const Endomorphism& a, const Endomorphism& b) { return !(a == b); }

 private:
  int rank_;
  std::vector<FreeWord> images_;
};

// compose(phi, psi) maps x to psi(phi(x)): phi acts first. Under this
// convention the chain rule below reads J_{compose(phi,psi)} = J_phi^psi J_psi.
inline Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  if (phi.rank() != psi.rank()) throw RankMismatch("cannot compose endomorphisms of different ranks");
  std::vector<FreeWord> images;
  images.reserve(phi.rank());
  for (int i = 1; i <= phi.rank(); ++i) images.push_back(psi.apply(phi.image(i)));
  return Endomorphism(phi.rank(), std::move(images));
}

// ---------------------------------------------------------------------------
// Fox derivatives. On a reduced word, each positive letter x_i at some
// position contributes the prefix before it to d_i, and each negative letter
// x_i^-1 contributes minus the prefix including it.

inline std::vector<GroupRingElement> fox_derivatives(const FreeWord& w, int rank) {
  if (w.max_index() > rank) throw IndexOutOfRank("word uses a generator beyond the rank");
  std::vector<GroupRingElement> out(static_cast<std::size_t>(rank));
  std::vector<int> prefix;
  prefix.reserve(w.size());
  for (int x : w.letters()) {
    if (x > 0) {
      out[x - 1] += GroupRingElement::word(FreeWord(prefix));
      prefix.push_back(x);
    } else {
      prefix.push_back(x);
      out[-x - 1] -= GroupRingElement::word(FreeWord(prefix));
    }
  }
  return out;
}

inline GroupRingElement fox_derivative(int i, const FreeWord& w) {
  if (i < 1) throw IndexOutOfRank("derivative index must be positive");
  const int rank = std::max(i, w.max_index());
  return fox_derivatives(w, rank)[static_cast<std::size_t>(i) - 1];
}

inline GroupRingElement fox_derivative(int i, const GroupRingElement& e) {
  GroupRingElement out;
  for (const auto& [w, c] : e.terms()) out += fox_derivative(i, w) * c;
  return out;
}

// Jacobian of an endomorphism: entry (i, j) is d_j applied to the image of
// x_i. Rows are indexed by the image, so a braid generator produces exactly
// its representation's 2 x 2 generator cell, and the induced matrix
// map is multiplicative along a braid word read left to right.
inline RingMatrix<GroupRingElement> jacobian(const Endomorphism& phi) {
  const int n = phi.rank();
  RingMatrix<GroupRingElement> j(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<GroupRingElement> row = fox_derivatives(phi.image(i), n);
    for (int col = 1; col <= n; ++col)
      j.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(col) - 1) =
          std::move(row[static_cast<std::size_t>(col) - 1]);
  }
  return j;
}

// A ring homomorphism ZF_n -> Z[t^-1, t] sending each generator to a unit
// +-t^k (in practice t or t^-1).
class Abelianization {
 public:
  explicit Abelianization(const std::vector<LaurentPoly>& images) {
    units_.reserve(images.size());
    for (const LaurentPoly& u : images) {
      if (u.term_count() != 1) throw std::invalid_argument("abelianization image must be a unit");
      const auto& [e, c] = *u.terms().begin();
      if (c != 1 && c != -1) throw std::invalid_argument("abelianization image must be a unit");
      units_.push_back({e, c < 0});
    }
  }

  // Burau abelianization: every generator to t.
  static Abelianization all_t(int rank) {
    return Abelianization(std::vector<LaurentPoly>(static_cast<std::size_t>(rank), t_power(1)));
  }

  // Wada abelianization: odd-index generators to t, even-index to t^-1.
  static Abelianization alternating(int rank) {
    std::vector<LaurentPoly> images;
    images.reserve(rank);
    for (int i = 1; i <= rank; ++i) images.push_back(t_power(i % 2 == 1 ? 1 : -1));
    return Abelianization(std::move(images));
  }

  int rank() const { return static_cast<int>(units_.size()); }

  LaurentPoly operator()(const FreeWord& w) const {
    std::int64_t exp = 0;
    bool negative = false;
    for (int x : w.letters()) {
      const int i = x < 0 ? -x : x;
      if (i > rank()) throw IndexOutOfRank("word uses a generator beyond the rank");
      const Unit& u = units_[static_cast<std::size_t>(i) - 1];
      exp += x > 0 ? u.exponent : -u.exponent;
      negative ^= u.negative;
    }
    return LaurentPoly::term(negative ? -1 : 1, exp);
  }

  LaurentPoly operator()(const GroupRingElement& e) const {
    LaurentPoly out;
    for (const auto& [w, c] : e.terms()) out += (*this)(w) * c;
    return out;
  }

  RingMatrix<LaurentPoly> operator()(const RingMatrix<GroupRingElement>& m) const {
    return map_entries(m, [this](const GroupRingElement& e) { return (*this)(e); });
  }

 private:
  struct Unit {
    std::int64_t exponent;
    bool negative;
  };
  std::vector<Unit> units_;
};

// True when abelianizing J_phi after applying psi to every entry gives the
// same matrix as abelianizing J_phi directly. When this holds for all phi,
// psi in the image of a braid representation, phi -> J_phi^alpha is a
// homomorphism to matrices over Z[t^-1, t].
inline bool check_representation_condition(const Endomorphism& phi, const Endomorphism& psi,
                                           const Abelianization& alpha) {
  if (phi.rank() != psi.rank()) throw RankMismatch("rank mismatch");
  const RingMatrix<GroupRingElement> j = jacobian(phi);
  const RingMatrix<LaurentPoly> direct = alpha(j);
  const RingMatrix<LaurentPoly> twisted =
      alpha(map_entries(j, [&psi](const GroupRingElement& e) { return psi.apply(e); }));
  return direct == twisted;
}

// Abelianized Alexander matrix of the presentation
//   < x_1..x_n, y_1..y_n | x_1^-1 y_1, ..., x_n^-1 y_n >,  y_i = phi(x_i):
// row i of J_phi multiplied by x_i^-1 on the left, minus the diagonal x_i^-1.
// With the all-t abelianization this equals t^-1 (J_phi^alpha - I).
inline RingMatrix<LaurentPoly> alexander_matrix_of_endomorphism(const Endomorphism& phi,
                                                                const Abelianization& alpha) {
  const int n = phi.rank();
  RingMatrix<GroupRingElement> a = jacobian(phi);
  for (int i = 1; i <= n; ++i) {
    const GroupRingElement xi_inv =
        GroupRingElement::word(FreeWord::generator(i).inverse());
    for (int j = 1; j <= n; ++j) {
      auto& entry = a.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1);
      entry = xi_inv * entry;
    }
    a.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(i) - 1) -= xi_inv;
  }
  return alpha(a);
}

}  // namespace braidinv
