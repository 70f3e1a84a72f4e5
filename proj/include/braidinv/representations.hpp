#pragma once

// Matrix representations of braid words. The Burau and Wada representations
// come in two independent routes that must agree: the direct product of
// generator cells, and abelianizing the Fox Jacobian of the word's
// automorphism. The two-variable representation has cells only; it does not
// arise from an automorphism of the free group.

#include "braidinv/braid.hpp"
#include "braidinv/free_group.hpp"
#include "braidinv/matrix.hpp"

#include <stdexcept>
#include <string>

namespace braidinv {

enum class RepKind { burau, wada };

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

namespace detail {

inline void check_cell_index(int i, int n) {
  if (i < 1 || i > n - 1)
    throw IndexOutOfRange("generator index " + std::to_string(i) + " out of range for " +
                          std::to_string(n) + " strands");
}

template <class R>
RingMatrix<R> embed_cell(int n, int i, const R& a, const R& b, const R& c, const R& d) {
  RingMatrix<R> m = RingMatrix<R>::identity(static_cast<std::size_t>(n));
  const std::size_t k = static_cast<std::size_t>(i) - 1;
  m.at(k, k) = a;
  m.at(k, k + 1) = b;
  m.at(k + 1, k) = c;
  m.at(k + 1, k + 1) = d;
  return m;
}

}  // namespace detail

// The n x n matrix of sigma_i^{+-1}: identity except for the 2 x 2 cell at
// rows/columns (i, i+1).
//   Burau +: [[1-t, t], [1, 0]]          -: [[0, 1], [t^-1, 1-t^-1]]
//   Wada, odd i, +: [[1+t, t^2], [-1, 1-t]]   -: [[1-t, -t^2], [1, 1+t]]
//   Wada, even i: the same with t replaced by t^-1.
inline RingMatrix<LaurentPoly> generator_matrix(RepKind kind, int i, int sign, int n) {
  detail::check_cell_index(i, n);
  const auto P = [](const char* text) { return parse_laurent(text); };
  if (kind == RepKind::burau) {
    return sign > 0 ? detail::embed_cell(n, i, P("1 - t"), P("t"), P("1"), P("0"))
                    : detail::embed_cell(n, i, P("0"), P("1"), P("t^-1"), P("1 - t^-1"));
  }
  const std::int64_t e = i % 2 == 1 ? 1 : -1;  // alternating abelianization
  const LaurentPoly t = t_power(e);
  const LaurentPoly t2 = t_power(2 * e);
  const LaurentPoly one(1);
  return sign > 0 ? detail::embed_cell(n, i, one + t, t2, -one, one - t)
                  : detail::embed_cell(n, i, one - t, -t2, one, one + t);
}

// Two-variable cell: [[1-st, t], [s, 0]]. Its determinant is the unit -st;
// the inverse cell below is the exact 2 x 2 inverse, checked by the
// product-equals-identity test.
inline RingMatrix<BiLaurentPoly> twovar_generator_matrix(int i, int sign, int n) {
  detail::check_cell_index(i, n);
  const BiLaurentPoly one(1);
  const BiLaurentPoly s = st_term(1, 1, 0);
  const BiLaurentPoly t = st_term(1, 0, 1);
  if (sign > 0) return detail::embed_cell(n, i, one - s * t, t, s, BiLaurentPoly());
  const BiLaurentPoly s_inv = st_term(1, -1, 0);
  const BiLaurentPoly t_inv = st_term(1, 0, -1);
  return detail::embed_cell(n, i, BiLaurentPoly(), s_inv, t_inv, one - s_inv * t_inv);
}

// Product of generator matrices along the word, left to right; the empty
// braid gives the identity. Agrees with jacobian_matrix_oracle.
inline RingMatrix<LaurentPoly> braid_matrix(RepKind kind, const BraidWord& beta) {
  RingMatrix<LaurentPoly> m = RingMatrix<LaurentPoly>::identity(static_cast<std::size_t>(beta.strands));
  for (int x : beta.letters)
    m = m * generator_matrix(kind, x < 0 ? -x : x, x < 0 ? -1 : 1, beta.strands);
  return m;
}

inline RingMatrix<BiLaurentPoly> twovar_braid_matrix(const BraidWord& beta) {
  RingMatrix<BiLaurentPoly> m =
      RingMatrix<BiLaurentPoly>::identity(static_cast<std::size_t>(beta.strands));
  for (int x : beta.letters)
    m = m * twovar_generator_matrix(x < 0 ? -x : x, x < 0 ? -1 : 1, beta.strands);
  return m;
}

inline Abelianization representation_abelianization(RepKind kind, int n) {
  return kind == RepKind::burau ? Abelianization::all_t(n) : Abelianization::alternating(n);
}

// The independent route: abelianize the Fox Jacobian of the braid word's
// automorphism.
inline RingMatrix<LaurentPoly> jacobian_matrix_oracle(RepKind kind, const BraidWord& beta) {
  const Endomorphism phi =
      kind == RepKind::burau ? artin_automorphism(beta) : wada_automorphism(beta);
  return representation_abelianization(kind, beta.strands)(jacobian(phi));
}

inline LaurentPoly specialize_s1(const BiLaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out += LaurentPoly::term(c, e.t);
  return out;
}

// Substituting s = 1 entrywise turns the two-variable representation into
// the Burau representation.
inline RingMatrix<LaurentPoly> specialize_s1(const RingMatrix<BiLaurentPoly>& m) {
  return map_entries(m, [](const BiLaurentPoly& p) { return specialize_s1(p); });
}

// Substitutes t -> s t, turning a univariate invariant into the bivariate
// candidate it is compared against.
inline BiLaurentPoly substitute_st(const LaurentPoly& p) {
  BiLaurentPoly out;
  for (const auto& [e, c] : p.terms()) out += st_term(c, e, e);
  return out;
}

inline std::string to_string(RepKind kind) { return kind == RepKind::burau ? "burau" : "wada"; }

}  // namespace braidinv
