#pragma once

// Braid words, the braid grammar, Markov moves (conjugation, stabilization,
// destabilization), the Artin and Wada automorphisms of a braid word, the
// word problem via the faithful Artin action, bounded breadth-first search
// over the Markov move graph, and deterministic random Markov orbits.

#include "braidinv/free_group.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace braidinv {

struct StrandBoundError : std::invalid_argument {
  explicit StrandBoundError(const std::string& what) : std::invalid_argument(what) {}
};

struct StrandMismatch : std::invalid_argument {
  explicit StrandMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotDestabilizable : std::invalid_argument {
  explicit NotDestabilizable(const std::string& what) : std::invalid_argument(what) {}
};

// A word in the generators sigma_1 .. sigma_{n-1} of the braid group B_n.
// Letters are signed generator indices. No simplification is applied: two
// BraidWords are equal as values only when they are letter-for-letter equal;
// braid_equal decides equality in the group.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) {
    if (strands < 1) throw StrandBoundError("strand count must be at least 1");
    for (int x : letters) {
      const int i = x < 0 ? -x : x;
      if (i == 0 || i > strands - 1)
        throw StrandBoundError("generator sigma_" + std::to_string(i) + " needs at least " +
                               std::to_string(i + 1) + " strands");
    }
  }

  std::size_t length() const { return letters.size(); }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
  friend bool operator!=(const BraidWord& a, const BraidWord& b) { return !(a == b); }
};

// Grammar: whitespace-separated tokens, each `k` or `k^m` with k a signed
// generator index and m a (possibly negative) repetition count.
// Examples: "1^3", "1 -2 1 -2", "1^3 2^-3". Empty input is the empty braid.
// Without an explicit strand count, the count is inferred as max|k| + 1.
inline BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt) {
  std::vector<int> letters;
  int max_index = 0;
  std::size_t pos = 0;
  const auto read_int = [&](bool allow_sign) {
    const std::size_t start = pos;
    std::int64_t sign = 1;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw SyntaxError("expected an integer", start);
    std::int64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw SyntaxError("number too large", start);
      ++pos;
    }
    return sign * value;
  };

  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t token_start = pos;
    const std::int64_t base = read_int(true);
    if (base == 0) throw SyntaxError("generator index must be nonzero", token_start);
    std::int64_t reps = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      reps = read_int(true);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw SyntaxError(std::string("unexpected character '") + text[pos] + "' in token", pos);
    const int index = static_cast<int>(base < 0 ? -base : base);
    const int letter = (base < 0) == (reps < 0) ? index : -index;
    max_index = std::max(max_index, index);
    for (std::int64_t r = reps < 0 ? -reps : reps; r > 0; --r) letters.push_back(letter);
  }

  const int n = strands.value_or(max_index + 1);
  if (max_index > n - 1)
    throw StrandBoundError("generator sigma_" + std::to_string(max_index) + " exceeds " +
                           std::to_string(n) + " strands");
  return BraidWord(n, std::move(letters));
}

inline std::string to_string(const BraidWord& b) {
  std::string out;
  for (int x : b.letters) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

inline BraidWord inverse(const BraidWord& b) {
  std::vector<int> letters;
  letters.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) letters.push_back(-*it);
  return BraidWord(b.strands, std::move(letters));
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw StrandMismatch("cannot concatenate braids on different strand counts");
  std::vector<int> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return BraidWord(a.strands, std::move(letters));
}

// Markov move 1: the literal word gamma^-1 beta gamma, no simplification.
inline BraidWord conjugate(const BraidWord& beta, const BraidWord& gamma) {
  if (beta.strands != gamma.strands) throw StrandMismatch("conjugator must live in the same braid group");
  return concat(concat(inverse(gamma), beta), gamma);
}

// Markov move 2: append sigma_n^{+-1}, moving from B_n to B_{n+1}.
inline BraidWord stabilize(const BraidWord& beta, int sign) {
  std::vector<int> letters = beta.letters;
  letters.push_back(sign > 0 ? beta.strands : -beta.strands);
  return BraidWord(beta.strands + 1, std::move(letters));
}

// Markov move 3: inverse of stabilization. The word must literally end in
// sigma_{n-1}^{+-1} and use that generator nowhere else.
inline BraidWord destabilize(const BraidWord& beta) {
  const int top = beta.strands - 1;
  if (beta.letters.empty() || std::abs(beta.letters.back()) != top)
    throw NotDestabilizable("word does not end in the top generator");
  for (std::size_t i = 0; i + 1 < beta.letters.size(); ++i)
    if (std::abs(beta.letters[i]) == top)
      throw NotDestabilizable("top generator occurs before the final letter");
  return BraidWord(beta.strands - 1,
                   std::vector<int>(beta.letters.begin(), beta.letters.end() - 1));
}

// ---------------------------------------------------------------------------
// The Artin and Wada representations by automorphisms of F_n.
//
// Artin sigma_i:  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i.
// Wada  sigma_i:  x_i -> x_i^2 x_{i+1},        x_{i+1} -> x_{i+1}^-1 x_i^-1 x_{i+1}.
// The Wada inverse images are derived by solving those substitutions:
//   x_i -> x_i x_{i+1}^-1 x_i^-1,  x_{i+1} -> x_i x_{i+1}^2;
// the round-trip identity and the inverse-cell fixture pin them down.

inline Endomorphism artin_generator(int n, int i, int sign) {
  if (i < 1 || i > n - 1) throw IndexOutOfRank("generator index out of range");
  std::vector<FreeWord> images;
  images.reserve(n);
  for (int j = 1; j <= n; ++j) images.push_back(FreeWord::generator(j));
  if (sign > 0) {
    images[i - 1] = FreeWord{i, i + 1, -i};
    images[i] = FreeWord{i};
  } else {
    images[i - 1] = FreeWord{i + 1};
    images[i] = FreeWord{-(i + 1), i, i + 1};
  }
  return Endomorphism(n, std::move(images));
}

inline Endomorphism wada_generator(int n, int i, int sign) {
  if (i < 1 || i > n - 1) throw IndexOutOfRank("generator index out of range");
  std::vector<FreeWord> images;
  images.reserve(n);
  for (int j = 1; j <= n; ++j) images.push_back(FreeWord::generator(j));
  if (sign > 0) {
    images[i - 1] = FreeWord{i, i, i + 1};
    images[i] = FreeWord{-(i + 1), -i, i + 1};
  } else {
    images[i - 1] = FreeWord{i, -(i + 1), -i};
    images[i] = FreeWord{i, i + 1, i + 1};
  }
  return Endomorphism(n, std::move(images));
}

namespace detail {

template <class GeneratorFn>
Endomorphism braid_automorphism(const BraidWord& beta, GeneratorFn gen) {
  Endomorphism phi = Endomorphism::identity(beta.strands);
  for (int x : beta.letters) phi = compose(phi, gen(beta.strands, x < 0 ? -x : x, x < 0 ? -1 : 1));
  return phi;
}

}  // namespace detail

inline Endomorphism artin_automorphism(const BraidWord& beta) {
  return detail::braid_automorphism(beta, artin_generator);
}

inline Endomorphism wada_automorphism(const BraidWord& beta) {
  return detail::braid_automorphism(beta, wada_generator);
}

// The braid-group word problem: the Artin representation is faithful, so two
// words represent the same braid exactly when their automorphisms agree.
inline bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw StrandMismatch("cannot compare braids on different strand counts");
  return artin_automorphism(a) == artin_automorphism(b);
}

// ---------------------------------------------------------------------------
// Markov moves as values, bounded search, random orbits.

struct MarkovMove {
  enum class Kind { conjugate, stabilize, destabilize };
  Kind kind = Kind::destabilize;
  int arg = 0;  // conjugate: signed generator index of gamma; stabilize: sign

  static MarkovMove conjugation(int signed_generator) {
    return {Kind::conjugate, signed_generator};
  }
  static MarkovMove stabilization(int sign) { return {Kind::stabilize, sign < 0 ? -1 : 1}; }
  static MarkovMove destabilization() { return {Kind::destabilize, 0}; }

  friend bool operator==(const MarkovMove& a, const MarkovMove& b) {
    return a.kind == b.kind && a.arg == b.arg;
  }
};

inline std::string to_string(const MarkovMove& m) {
  switch (m.kind) {
    case MarkovMove::Kind::conjugate:
      return "conjugate " + std::to_string(m.arg);
    case MarkovMove::Kind::stabilize:
      return m.arg > 0 ? "stabilize +" : "stabilize -";
    default:
      return "destabilize";
  }
}

inline BraidWord apply_move(const BraidWord& beta, const MarkovMove& move) {
  switch (move.kind) {
    case MarkovMove::Kind::conjugate: {
      const int i = move.arg < 0 ? -move.arg : move.arg;
      if (i < 1 || i > beta.strands - 1) throw StrandBoundError("conjugating generator out of range");
      return conjugate(beta, BraidWord(beta.strands, {move.arg}));
    }
    case MarkovMove::Kind::stabilize:
      return stabilize(beta, move.arg);
    default:
      return destabilize(beta);
  }
}

struct SearchLimits {
  int max_strands = 4;
  std::size_t max_length = 16;
  std::size_t max_depth = 6;
  std::size_t max_nodes = 1u << 20;
  // Signed generator indices usable as conjugators; empty means every
  // sigma_i^{+-1} available at the node's strand count. Any conjugation is a
  // product of these, so restricting the set only stretches paths.
  std::vector<int> conjugators;
};

struct SearchResult {
  enum class Status { found, not_found_within_bounds, limit_exceeded };
  Status status = Status::not_found_within_bounds;
  std::vector<MarkovMove> path;  // meaningful only when status == found
  std::size_t nodes_explored = 0;
};

namespace detail {

// Canonical key of a braid modulo word-problem equality: the strand count
// together with the reduced Artin images. Braid-relation detours collapse to
// one node under this key.
inline std::string braid_key(const BraidWord& beta) {
  const Endomorphism phi = artin_automorphism(beta);
  std::string key = std::to_string(beta.strands);
  for (int i = 1; i <= phi.rank(); ++i) {
    key += '|';
    for (int x : phi.image(i).letters()) {
      key += std::to_string(x);
      key += ',';
    }
  }
  return key;
}

}  // namespace detail

// Breadth-first search from `start` to `goal` over conjugations by single
// generators, stabilizations and destabilizations, all within the limits.
// Nodes are canonicalized with braid_key, each keeping the first word that
// reached it; the syntactic destabilization test applies to that word.
// Status not_found_within_bounds certifies exhaustion of the bounded graph;
// limit_exceeded means the node budget ran out first and certifies nothing.
inline SearchResult search_markov_path(const BraidWord& start, const BraidWord& goal,
                                       const SearchLimits& limits) {
  SearchResult result;
  const std::string goal_key = detail::braid_key(goal);

  struct Node {
    BraidWord word;
    std::size_t parent;
    MarkovMove move;
    std::size_t depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> visited;
  std::deque<std::size_t> frontier;

  std::string start_key = detail::braid_key(start);
  if (start_key == goal_key) {
    result.status = SearchResult::Status::found;
    result.nodes_explored = 1;
    return result;
  }
  nodes.push_back({start, 0, MarkovMove::destabilization(), 0});
  visited.emplace(std::move(start_key), 0);
  frontier.push_back(0);

  const auto reconstruct = [&](std::size_t index) {
    std::vector<MarkovMove> path;
    while (index != 0) {
      path.push_back(nodes[index].move);
      index = nodes[index].parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  while (!frontier.empty()) {
    const std::size_t index = frontier.front();
    frontier.pop_front();
    ++result.nodes_explored;
    const BraidWord word = nodes[index].word;
    const std::size_t depth = nodes[index].depth;
    if (depth >= limits.max_depth) continue;

    std::vector<std::pair<MarkovMove, BraidWord>> steps;
    if (word.length() + 2 <= limits.max_length) {
      if (limits.conjugators.empty()) {
        for (int i = 1; i <= word.strands - 1; ++i)
          for (int sign : {1, -1}) {
            const MarkovMove move = MarkovMove::conjugation(sign * i);
            steps.emplace_back(move, apply_move(word, move));
          }
      } else {
        for (int g : limits.conjugators) {
          if (std::abs(g) < 1 || std::abs(g) > word.strands - 1) continue;
          const MarkovMove move = MarkovMove::conjugation(g);
          steps.emplace_back(move, apply_move(word, move));
        }
      }
    }
    if (word.strands + 1 <= limits.max_strands && word.length() + 1 <= limits.max_length) {
      for (int sign : {1, -1}) {
        const MarkovMove move = MarkovMove::stabilization(sign);
        steps.emplace_back(move, apply_move(word, move));
      }
    }
    {
      const int top = word.strands - 1;
      bool legal = !word.letters.empty() && std::abs(word.letters.back()) == top;
      for (std::size_t i = 0; legal && i + 1 < word.letters.size(); ++i)
        if (std::abs(word.letters[i]) == top) legal = false;
      if (legal) steps.emplace_back(MarkovMove::destabilization(), destabilize(word));
    }

    for (auto& [move, next] : steps) {
      std::string key = detail::braid_key(next);
      if (visited.count(key)) continue;
      if (nodes.size() >= limits.max_nodes) {
        result.status = SearchResult::Status::limit_exceeded;
        return result;
      }
      const bool is_goal = key == goal_key;
      nodes.push_back({std::move(next), index, move, depth + 1});
      const std::size_t new_index = nodes.size() - 1;
      visited.emplace(std::move(key), new_index);
      if (is_goal) {
        result.status = SearchResult::Status::found;
        result.path = reconstruct(new_index);
        return result;
      }
      frontier.push_back(new_index);
    }
  }
  result.status = SearchResult::Status::not_found_within_bounds;
  return result;
}

struct OrbitOptions {
  int max_strands = 6;
  std::size_t max_length = 64;
};

struct OrbitStep {
  MarkovMove move;
  BraidWord word;
};

// A pseudo-random walk in the Markov move graph, deterministic for a given
// seed: at each step one of {conjugate by a random signed generator,
// stabilize with a random sign, destabilize when legal} is chosen uniformly
// among the applicable kinds. Raw rng() draws keep the walk reproducible
// across standard library implementations.
inline std::vector<OrbitStep> random_markov_orbit(const BraidWord& start, std::size_t depth,
                                                  std::uint64_t seed,
                                                  const OrbitOptions& options = {}) {
  std::mt19937_64 rng(seed);
  std::vector<OrbitStep> orbit;
  BraidWord current = start;
  for (std::size_t step = 0; step < depth; ++step) {
    std::vector<MarkovMove::Kind> kinds;
    if (current.strands >= 2 && current.length() + 2 <= options.max_length)
      kinds.push_back(MarkovMove::Kind::conjugate);
    if (current.strands + 1 <= options.max_strands && current.length() + 1 <= options.max_length)
      kinds.push_back(MarkovMove::Kind::stabilize);
    {
      const int top = current.strands - 1;
      bool legal = !current.letters.empty() && std::abs(current.letters.back()) == top;
      for (std::size_t i = 0; legal && i + 1 < current.letters.size(); ++i)
        if (std::abs(current.letters[i]) == top) legal = false;
      if (legal) kinds.push_back(MarkovMove::Kind::destabilize);
    }
    if (kinds.empty()) break;
    const MarkovMove::Kind kind = kinds[rng() % kinds.size()];
    MarkovMove move = MarkovMove::destabilization();
    if (kind == MarkovMove::Kind::conjugate) {
      const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(current.strands - 1)) + 1;
      move = MarkovMove::conjugation(rng() % 2 == 0 ? i : -i);
    } else if (kind == MarkovMove::Kind::stabilize) {
      move = MarkovMove::stabilization(rng() % 2 == 0 ? 1 : -1);
    }
    current = apply_move(current, move);
    orbit.push_back({move, current});
  }
  return orbit;
}

}  // namespace braidinv
