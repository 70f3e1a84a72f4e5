#pragma once

// Square matrices over an exact coefficient ring, with determinants and
// minor enumeration by memoized cofactor expansion, elementary ideal chains
// (univariate / PID case) and the leading ideal generators in the bivariate
// case. The memo is shared across the whole minor enumeration, so computing
// every k x k minor of a matrix costs little more than one determinant.

#include "braidinv/laurent.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace braidinv {

struct SizeMismatch : std::invalid_argument {
  explicit SizeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct SizeOutOfRange : std::out_of_range {
  explicit SizeOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

template <class R>
class RingMatrix {
 public:
  using ring_type = R;

  RingMatrix() = default;
  explicit RingMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static RingMatrix identity(std::size_t n) {
    RingMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = R(1);
    return m;
  }

  static RingMatrix from_rows(std::vector<std::vector<R>> rows) {
    RingMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw SizeMismatch("matrix rows must all have the same length as the row count");
      for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
  }

  std::size_t size() const { return n_; }

  R& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const R& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  RingMatrix sub_identity() const {
    RingMatrix m = *this;
    for (std::size_t i = 0; i < n_; ++i) m.at(i, i) -= R(1);
    return m;
  }

  // Adds a bottom row and right column (0 ... 0 1).
  RingMatrix augment() const {
    RingMatrix m(n_ + 1);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = at(i, j);
    m.at(n_, n_) = R(1);
    return m;
  }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.n_ != b.n_) throw SizeMismatch("matrix sizes differ in product");
    RingMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const R& aik = a.at(i, k);
        for (std::size_t j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const RingMatrix& a, const RingMatrix& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::vector<R> entries_;
};

template <class R, class F>
auto map_entries(const RingMatrix<R>& m, F f) {
  using R2 = decltype(f(m.at(0, 0)));
  RingMatrix<R2> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out.at(i, j) = f(m.at(i, j));
  return out;
}

// Cofactor expansion over row/column index subsets, memoized so that the
// all-minors enumeration shares subdeterminants.
template <class R>
class MinorTable {
 public:
  explicit MinorTable(const RingMatrix<R>& m) : m_(&m) {
    if (m.size() > 30) throw SizeOutOfRange("minor enumeration supports sizes up to 30");
  }

  const R& minor(std::uint32_t rows, std::uint32_t cols) {
    const std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    R det;
    if (rows == 0) {
      det = R(1);
    } else {
      const int r0 = std::countr_zero(rows);
      const std::uint32_t sub_rows = rows & (rows - 1);
      bool negative = false;
      for (std::uint32_t rest = cols; rest != 0; rest &= rest - 1) {
        const int c = std::countr_zero(rest);
        const R& entry = m_->at(static_cast<std::size_t>(r0), static_cast<std::size_t>(c));
        const R sub = minor(sub_rows, cols & ~(std::uint32_t{1} << c));
        det += negative ? -(entry * sub) : entry * sub;
        negative = !negative;
      }
    }
    return memo_.emplace(key, std::move(det)).first->second;
  }

  R determinant() {
    const std::uint32_t full =
        m_->size() == 0 ? 0 : (m_->size() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m_->size()) - 1);
    return minor(full, full);
  }

  // All k x k minors, row subsets outer and column subsets inner, both in
  // lexicographic order.
  std::vector<R> minors(std::size_t k) {
    if (k < 1 || k > m_->size()) throw SizeOutOfRange("minor size out of range");
    const std::vector<std::uint32_t> subsets = k_subsets(m_->size(), k);
    std::vector<R> out;
    out.reserve(subsets.size() * subsets.size());
    for (std::uint32_t rows : subsets)
      for (std::uint32_t cols : subsets) out.push_back(minor(rows, cols));
    return out;
  }

 private:
  static std::vector<std::uint32_t> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::uint32_t> out;
    std::vector<int> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    while (true) {
      std::uint32_t mask = 0;
      for (int i : idx) mask |= std::uint32_t{1} << i;
      out.push_back(mask);
      int pos = static_cast<int>(k) - 1;
      while (pos >= 0 && idx[pos] == static_cast<int>(n - k + pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
  }

  const RingMatrix<R>* m_;
  std::unordered_map<std::uint64_t, R> memo_;
};

template <class R>
R determinant(const RingMatrix<R>& m) {
  return MinorTable<R>(m).determinant();
}

template <class R>
std::vector<R> minors(const RingMatrix<R>& m, std::size_t k) {
  return MinorTable<R>(m).minors(k);
}

// The chain E_0 <= E_1 <= ... <= E_n of elementary ideals of an n x n matrix
// over Z[t^-1, t], each represented by its gcd generator in normalized form.
// E_k is generated by the minors of size n - k; E_n and beyond are the whole
// ring, so generators.back() is always 1.
struct IdealChain {
  std::vector<LaurentPoly> generators;

  std::size_t first_nonzero_index() const {
    std::size_t k = 0;
    while (generators[k].is_zero()) ++k;
    return k;
  }
  const LaurentPoly& first_nonzero() const { return generators[first_nonzero_index()]; }

  // Equality as chains of ideals: entries beyond the stored range are the
  // whole ring, so a shorter chain is padded with 1.
  friend bool same_ideals(const IdealChain& a, const IdealChain& b) {
    const std::size_t n = std::max(a.generators.size(), b.generators.size());
    for (std::size_t k = 0; k < n; ++k) {
      const LaurentPoly& ga = k < a.generators.size() ? a.generators[k] : LaurentPoly(1);
      const LaurentPoly& gb = k < b.generators.size() ? b.generators[k] : LaurentPoly(1);
      if (ga != gb) return false;
    }
    return true;
  }

  friend bool operator==(const IdealChain& a, const IdealChain& b) {
    return a.generators == b.generators;
  }
};

inline IdealChain ideal_chain(const RingMatrix<LaurentPoly>& m) {
  const std::size_t n = m.size();
  IdealChain chain;
  chain.generators.assign(n + 1, LaurentPoly());
  chain.generators[n] = LaurentPoly(1);
  MinorTable<LaurentPoly> table(m);
  for (std::size_t k = 0; k < n; ++k) {
    LaurentPoly g;
    for (const LaurentPoly& d : table.minors(n - k)) {
      g = gcd(g, d);
      if (g.is_one()) break;
    }
    chain.generators[k] = g;
  }
  return chain;
}

// Generators of the first nonzero elementary ideal of a matrix over
// Z[s^-1, s, t^-1, t]. The ring is not a PID, so the full minor list is
// reported next to the UFD gcd; whether the gcd itself lies in the ideal is
// left to the caller.
struct BivariateIdealGenerators {
  BiLaurentPoly gcd_generator;              // normalized; zero for the zero matrix
  std::vector<BiLaurentPoly> generators;    // the nonzero minors, as computed
  std::size_t minor_size = 0;               // 0 when every minor vanishes
};

inline BivariateIdealGenerators ideal_generators_bivariate(const RingMatrix<BiLaurentPoly>& m) {
  BivariateIdealGenerators out;
  MinorTable<BiLaurentPoly> table(m);
  for (std::size_t size = m.size(); size >= 1; --size) {
    std::vector<BiLaurentPoly> nonzero;
    for (const BiLaurentPoly& d : table.minors(size))
      if (!d.is_zero()) nonzero.push_back(d);
    if (nonzero.empty()) continue;
    BiLaurentPoly g;
    for (const BiLaurentPoly& d : nonzero) g = gcd(g, d);
    out.gcd_generator = std::move(g);
    out.generators = std::move(nonzero);
    out.minor_size = size;
    return out;
  }
  return out;
}

template <class R>
std::string to_string(const RingMatrix<R>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += "\n ";
    out += "[";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out += ", ";
      out += to_string(m.at(i, j));
    }
    out += "]";
    if (i + 1 < m.size()) out += ",";
  }
  out += "]";
  return out;
}

}  // namespace braidinv
