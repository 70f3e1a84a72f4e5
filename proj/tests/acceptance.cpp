// Acceptance suite: one self-contained check per criterion, each printing a
// single PASS/FAIL line. Run with no arguments for the whole suite or with a
// criterion number for a single check. Exit code 0 only when everything that
// ran passed.

#include "braidinv/braidinv.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace braidinv;

namespace {

LaurentPoly P(const char* text) { return parse_laurent(text); }
BiLaurentPoly BP(const char* text) { return parse_bilaurent(text); }

using Mat = RingMatrix<LaurentPoly>;

Mat M(std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<LaurentPoly>> parsed;
  for (auto& row : rows) {
    parsed.emplace_back();
    for (const char* cell : row) parsed.back().push_back(parse_laurent(cell));
  }
  return Mat::from_rows(std::move(parsed));
}

BraidWord random_braid(std::mt19937_64& rng, int max_strands, std::size_t max_len) {
  const int n = 2 + static_cast<int>(rng() % (max_strands - 1));
  std::vector<int> letters;
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % (n - 1));
    letters.push_back(rng() % 2 == 0 ? g : -g);
  }
  return BraidWord(n, letters);
}

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 3) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % (max_terms + 1));
  for (int i = 0; i < terms; ++i)
    p += LaurentPoly::term(static_cast<std::int64_t>(rng() % 7) - 3,
                           static_cast<std::int64_t>(rng() % 5) - 2);
  return p;
}

struct Check {
  std::ostringstream detail;
  bool ok = true;

  void expect(bool condition, const std::string& message) {
    if (!condition) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << message;
    }
  }
};

// The worked-example corpus: name, braid, Wada constant, Alexander polynomial
// in its customary form, compared up to units.
struct Fixture {
  const char* name;
  const char* braid;
  int wada;
  const char* alexander;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> rows = {
      {"unknot", "1", 1, "1"},
      {"hopf", "1^2", 2, "1 - t"},
      {"trefoil", "1^3", 3, "1 - t + t^2"},
      {"torus(2,4)", "1^4", 4, "1 - t + t^2 - t^3"},
      {"torus(2,5)", "1^5", 5, "1 - t + t^2 - t^3 + t^4"},
      {"torus(2,6)", "1^6", 6, "1 - t + t^2 - t^3 + t^4 - t^5"},
      {"figure-eight", "1 -2 1 -2", 5, "t^2 - 3*t + 1"},
      {"square", "1^3 2^3", 9, "1 - 2*t + 3*t^2 - 2*t^3 + t^4"},
      {"granny", "1^3 2^-3", 9, "1 - 2*t + 3*t^2 - 2*t^3 + t^4"},
  };
  return rows;
}

// 1. Wada polynomials of the fixture table, exact integer equality.
bool criterion1(Check& check) {
  for (const Fixture& row : fixtures()) {
    const LaurentPoly wada = wada_polynomial(parse_braid(row.braid));
    check.expect(wada == LaurentPoly(row.wada),
                 std::string(row.name) + ": wada " + to_string(wada) + " != " +
                     std::to_string(row.wada));
  }
  return check.ok;
}

// 2. Alexander polynomials up to units; square and granny agree exactly.
bool criterion2(Check& check) {
  for (const Fixture& row : fixtures()) {
    const LaurentPoly alex = alexander_polynomial(parse_braid(row.braid));
    check.expect(unit_equal(alex, parse_laurent(row.alexander)),
                 std::string(row.name) + ": alexander " + to_string(alex));
  }
  check.expect(alexander_polynomial(parse_braid("1^3 2^3")) ==
                   alexander_polynomial(parse_braid("1^3 2^-3")),
               "square and granny alexander polynomials differ");
  check.expect(unit_equal(alexander_polynomial(parse_braid("1^3 2^3")),
                          P("1 - t + t^2") * P("1 - t + t^2")),
               "square knot alexander is not the trefoil square");
  return check.ok;
}

// 3. Fixture matrices reproduced entry-exactly.
bool criterion3(Check& check) {
  check.expect(braid_matrix(RepKind::burau, parse_braid("1^3")).sub_identity() ==
                   M({{"-t^3 + t^2 - t", "t^3 - t^2 + t"}, {"t^2 - t + 1", "-t^2 + t - 1"}}),
               "burau right trefoil matrix");
  check.expect(braid_matrix(RepKind::burau, parse_braid("1^-3")).sub_identity() ==
                   M({{"-t^-2 + t^-1 - 1", "t^-2 - t^-1 + 1"},
                      {"t^-3 - t^-2 + t^-1", "-t^-3 + t^-2 - t^-1"}}),
               "burau left trefoil matrix");
  check.expect(braid_matrix(RepKind::wada, parse_braid("1^3")).sub_identity() ==
                   M({{"3*t", "3*t^2"}, {"-3", "-3*t"}}),
               "wada trefoil matrix");
  check.expect(braid_matrix(RepKind::wada, parse_braid("1 -2 1 -2")).sub_identity() ==
                   M({{"3*t", "3*t^2 - 4*t", "-4"},
                      {"-3 + t^-1", "5 - 3*t - 3*t^-1", "-3*t^-2 + 4*t^-1"},
                      {"-1", "3 - t", "3*t^-1"}}),
               "wada figure-eight matrix");
  check.expect(braid_matrix(RepKind::wada, parse_braid("1^3 2^3")).sub_identity() ==
                   M({{"3*t", "9*t + 3*t^2", "9"},
                      {"-3", "3*t^-1 - 3*t - 9", "3*t^-2 - 9*t^-1"},
                      {"0", "-3", "-3*t^-1"}}),
               "wada square knot matrix");
  check.expect(braid_matrix(RepKind::wada, parse_braid("1^3 2^-3")).sub_identity() ==
                   M({{"3*t", "-9*t + 3*t^2", "-9"},
                      {"-3", "-3*t^-1 - 3*t + 9", "-3*t^-2 + 9*t^-1"},
                      {"0", "3", "3*t^-1"}}),
               "wada granny knot matrix");
  return check.ok;
}

// 4. Stabilization determinant identities on 100 random braids.
bool criterion4(Check& check) {
  std::mt19937_64 rng(9104);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord beta = random_braid(rng, 4, 8);
    const int n = beta.strands;

    const LaurentPoly burau = determinant(braid_matrix(RepKind::burau, beta).sub_identity());
    check.expect(determinant(braid_matrix(RepKind::burau, stabilize(beta, +1)).sub_identity()) ==
                     -burau,
                 "burau positive stabilization, trial " + std::to_string(trial));
    check.expect(determinant(braid_matrix(RepKind::burau, stabilize(beta, -1)).sub_identity()) ==
                     burau.shifted(-1),
                 "burau negative stabilization, trial " + std::to_string(trial));

    const LaurentPoly wada = determinant(braid_matrix(RepKind::wada, beta).sub_identity());
    const std::int64_t e = n % 2 == 1 ? 1 : -1;
    check.expect(determinant(braid_matrix(RepKind::wada, stabilize(beta, +1)).sub_identity()) ==
                     -wada.shifted(e),
                 "wada positive stabilization, trial " + std::to_string(trial));
    check.expect(determinant(braid_matrix(RepKind::wada, stabilize(beta, -1)).sub_identity()) ==
                     wada.shifted(e),
                 "wada negative stabilization, trial " + std::to_string(trial));
    if (!check.ok) return false;
  }
  return check.ok;
}

// 5. Cell products equal abelianized Fox Jacobians on 200 random words.
bool criterion5(Check& check) {
  std::mt19937_64 rng(9105);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord beta = random_braid(rng, 5, 8);
    for (RepKind kind : {RepKind::burau, RepKind::wada}) {
      check.expect(jacobian_matrix_oracle(kind, beta) == braid_matrix(kind, beta),
                   to_string(kind) + " oracle mismatch, trial " + std::to_string(trial) +
                       ", braid " + to_string(beta));
      if (!check.ok) return false;
    }
  }
  return check.ok;
}

// 6. Fox calculus: the worked derivative and the fundamental identity.
bool criterion6(Check& check) {
  const GroupRingElement d1 = fox_derivative(1, FreeWord({1, 2, -1, 2}));
  check.expect(d1 == GroupRingElement(1) - GroupRingElement::word(FreeWord({1, 2, -1})),
               "worked fox derivative");

  std::mt19937_64 rng(9106);
  for (int trial = 0; trial < 100; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    std::vector<int> letters;
    for (std::size_t i = rng() % 13; i > 0; --i) {
      const int g = 1 + static_cast<int>(rng() % rank);
      letters.push_back(rng() % 2 == 0 ? g : -g);
    }
    const FreeWord w(letters);
    GroupRingElement sum;
    const auto derivatives = fox_derivatives(w, rank);
    for (int g = 1; g <= rank; ++g)
      sum += derivatives[g - 1] *
             (GroupRingElement::word(FreeWord::generator(g)) - GroupRingElement(1));
    check.expect(sum == GroupRingElement::word(w) - GroupRingElement(1),
                 "fundamental identity, trial " + std::to_string(trial));
    if (!check.ok) return false;
  }
  return check.ok;
}

// 7. Wada and Alexander polynomials constant along 50 random Markov orbits.
bool criterion7(Check& check) {
  std::mt19937_64 rng(9107);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord beta = random_braid(rng, 4, 8);
    const std::uint64_t seed = rng();
    const LaurentPoly wada = wada_polynomial(beta);
    const LaurentPoly alexander = alexander_polynomial(beta);
    for (const OrbitStep& step : random_markov_orbit(beta, 4, seed)) {
      check.expect(wada_polynomial(step.word) == wada,
                   "wada drift, trial " + std::to_string(trial) + ", move " + to_string(step.move));
      check.expect(alexander_polynomial(step.word) == alexander,
                   "alexander drift, trial " + std::to_string(trial));
      if (!check.ok) return false;
    }
  }
  return check.ok;
}

// 8. The relator-presentation Alexander matrix equals t^-1 (J - I), with the
// same ideal chain.
bool criterion8(Check& check) {
  std::mt19937_64 rng(9108);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord beta = random_braid(rng, 4, 8);
    const Abelianization alpha = Abelianization::all_t(beta.strands);
    const Mat a = alexander_matrix_of_endomorphism(artin_automorphism(beta), alpha);
    const Mat jmi = braid_matrix(RepKind::burau, beta).sub_identity();
    const Mat scaled = map_entries(jmi, [](const LaurentPoly& p) { return p.shifted(-1); });
    check.expect(a == scaled, "matrix identity, trial " + std::to_string(trial));
    check.expect(same_ideals(ideal_chain(a), ideal_chain(jmi)),
                 "ideal chain mismatch, trial " + std::to_string(trial));
    if (!check.ok) return false;
  }
  return check.ok;
}

// 9. Two-variable representation: s = 1 specialization, the fixture gcd
// invariants, and the Alexander-at-st observation across the fixtures.
bool criterion9(Check& check) {
  std::mt19937_64 rng(9109);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord beta = random_braid(rng, 4, 8);
    check.expect(specialize_s1(twovar_braid_matrix(beta)) == braid_matrix(RepKind::burau, beta),
                 "specialization mismatch, trial " + std::to_string(trial));
    if (!check.ok) return false;
  }
  check.expect(unit_equal(twovar_invariant(parse_braid("1^2")).value, BP("1 - s*t")),
               "hopf bivariate invariant");
  check.expect(unit_equal(twovar_invariant(parse_braid("1^3")).value, BP("1 - s*t + s^2*t^2")),
               "right trefoil bivariate invariant");
  check.expect(unit_equal(twovar_invariant(parse_braid("1^-3")).value, BP("1 - s*t + s^2*t^2")),
               "left trefoil bivariate invariant");
  for (const Fixture& row : fixtures())
    check.expect(check_alst_observation(parse_braid(row.braid)),
                 std::string(row.name) + ": alexander(st) observation");
  return check.ok;
}

// 10. Conjecture checker consistent on every fixture row.
bool criterion10(Check& check) {
  for (const Fixture& row : fixtures()) {
    const ConjectureReport report = check_wada_conjecture(parse_braid(row.braid));
    check.expect(report.consistent, std::string(row.name) + ": conjecture check");
    check.expect(boost::multiprecision::abs(report.alexander_at_minus1) == row.wada,
                 std::string(row.name) + ": |alexander(-1)| value");
  }
  return check.ok;
}

// 11. Ideal chains are stable under random elementary operations and under
// augmentation, on 20 random 3x3 and 4x4 matrices.
bool criterion11(Check& check) {
  std::mt19937_64 rng(9111);
  for (int matrix_index = 0; matrix_index < 20; ++matrix_index) {
    const std::size_t n = matrix_index % 2 == 0 ? 3 : 4;
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_poly(rng);
    const IdealChain reference = ideal_chain(m);

    check.expect(same_ideals(ideal_chain(m.augment()), reference),
                 "augmentation, matrix " + std::to_string(matrix_index));

    for (int sequence = 0; sequence < 20; ++sequence) {
      Mat altered = m;
      const int ops = 1 + static_cast<int>(rng() % 5);
      for (int op = 0; op < ops; ++op) {
        const std::size_t a = rng() % n;
        std::size_t b = rng() % n;
        while (b == a) b = rng() % n;
        const LaurentPoly unit =
            LaurentPoly::term(rng() % 2 ? 1 : -1, static_cast<std::int64_t>(rng() % 5) - 2);
        switch (rng() % 6) {
          case 0:
            for (std::size_t j = 0; j < n; ++j) std::swap(altered.at(a, j), altered.at(b, j));
            break;
          case 1:
            for (std::size_t i = 0; i < n; ++i) std::swap(altered.at(i, a), altered.at(i, b));
            break;
          case 2:
            for (std::size_t j = 0; j < n; ++j) altered.at(a, j) *= unit;
            break;
          case 3:
            for (std::size_t i = 0; i < n; ++i) altered.at(i, a) *= unit;
            break;
          case 4: {
            const LaurentPoly f = random_poly(rng);
            for (std::size_t j = 0; j < n; ++j) altered.at(a, j) += f * altered.at(b, j);
            break;
          }
          default: {
            const LaurentPoly f = random_poly(rng);
            for (std::size_t i = 0; i < n; ++i) altered.at(i, a) += f * altered.at(i, b);
            break;
          }
        }
      }
      check.expect(ideal_chain(altered) == reference,
                   "elementary ops, matrix " + std::to_string(matrix_index) + ", sequence " +
                       std::to_string(sequence));
      if (!check.ok) return false;
    }
  }
  return check.ok;
}

// 12. Markov search: a certificate path from sigma_1^-2 to sigma_1^2 within
// the configured bounds, and the one-move destabilization of sigma_1.
bool criterion12(Check& check) {
  const SearchLimits limits{.max_strands = 4, .max_length = 10, .max_depth = 5,
                            .max_nodes = 400000};
  const SearchResult hopf_pair =
      search_markov_path(parse_braid("1^-2"), parse_braid("1^2"), limits);
  if (hopf_pair.status == SearchResult::Status::found) {
    std::string path;
    for (const MarkovMove& move : hopf_pair.path) path += to_string(move) + "; ";
    check.detail << "path found at depth " << hopf_pair.path.size() << ": " << path;
  }
  check.expect(hopf_pair.status == SearchResult::Status::found,
               std::string("no certificate path sigma_1^-2 -> sigma_1^2 within bounds "
                           "(strands <= 4, length <= 10, depth <= 5): ") +
                   (hopf_pair.status == SearchResult::Status::not_found_within_bounds
                        ? "bounded graph exhausted after " +
                              std::to_string(hopf_pair.nodes_explored) + " braid classes"
                        : "node budget exceeded"));

  const SearchResult unknot =
      search_markov_path(parse_braid("1"), BraidWord(1, {}),
                         {.max_strands = 2, .max_length = 4, .max_depth = 3, .max_nodes = 1000});
  check.expect(unknot.status == SearchResult::Status::found &&
                   unknot.path == std::vector<MarkovMove>{MarkovMove::destabilization()},
               "sigma_1 does not destabilize to the unknot");
  return check.ok;
}

struct Criterion {
  int number;
  const char* summary;
  bool (*run)(Check&);
};

const Criterion kCriteria[] = {
    {1, "fixture table Wada polynomials", criterion1},
    {2, "fixture table Alexander polynomials", criterion2},
    {3, "fixture matrix conformance", criterion3},
    {4, "stabilization determinant identities (100 random braids)", criterion4},
    {5, "Jacobian oracle equals cell product (200 random words)", criterion5},
    {6, "Fox calculus worked example and fundamental identity", criterion6},
    {7, "Markov-orbit invariance (50 orbits, depth 4)", criterion7},
    {8, "relator-presentation Alexander matrix identity (50 braids)", criterion8},
    {9, "two-variable representation and Alexander(st) observation", criterion9},
    {10, "Wada conjecture on the fixture table", criterion10},
    {11, "ideal-chain stability under elementary operations and augmentation", criterion11},
    {12, "Markov search certificates", criterion12},
};

bool run_criterion(const Criterion& criterion) {
  Check check;
  bool ok = false;
  try {
    ok = criterion.run(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  std::cout << "criterion " << std::setw(2) << criterion.number << "  "
            << (ok ? "PASS" : "FAIL") << "  " << criterion.summary;
  const std::string detail = check.detail.str();
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  bool all_ok = true;
  if (argc > 1) {
    const int wanted = std::atoi(argv[1]);
    bool found = false;
    for (const Criterion& criterion : kCriteria) {
      if (criterion.number == wanted) {
        found = true;
        all_ok = run_criterion(criterion) && all_ok;
      }
    }
    if (!found) {
      std::cerr << "unknown criterion " << argv[1] << "\n";
      return 2;
    }
  } else {
    for (const Criterion& criterion : kCriteria) all_ok = run_criterion(criterion) && all_ok;
  }
  return all_ok ? 0 : 1;
}
