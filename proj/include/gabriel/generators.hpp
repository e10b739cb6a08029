#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gabriel/lattice.hpp"

namespace gabriel {

enum class GeneratorKind { chain, boolean, divisor, diamond, subspace, downset };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::chain;
  /// chain: n; boolean: n; divisor: m; diamond: k; subspace: q; downset: poset size.
  std::size_t parameter = 1;
  /// downset only.
  std::uint64_t seed = 0;
};

inline std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::chain: return "chain";
    case GeneratorKind::boolean: return "boolean";
    case GeneratorKind::divisor: return "divisor";
    case GeneratorKind::diamond: return "diamond";
    case GeneratorKind::subspace: return "subspace";
    case GeneratorKind::downset: return "downset";
  }
  return "unknown";
}

inline GeneratorKind parse_generator_kind(const std::string& text) {
  for (auto k : {GeneratorKind::chain, GeneratorKind::boolean, GeneratorKind::divisor,
                 GeneratorKind::diamond, GeneratorKind::subspace, GeneratorKind::downset}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorKind::invalid_argument, "unknown generator kind '" + text + "'");
}

/// Default document name for a generated lattice, e.g. "divisor_60".
inline std::string generated_name(const GeneratorSpec& spec) {
  auto name = to_string(spec.kind) + "_" + std::to_string(spec.parameter);
  if (spec.kind == GeneratorKind::downset) name += "_seed" + std::to_string(spec.seed);
  return name;
}

/// Strict order of a pseudo-random poset on `size` points, as the covers of
/// its transitive reduction. Each pair i < j becomes a relation i < j with
/// probability 1/2, drawn from the top bit of a seeded mt19937_64.
inline std::vector<Cover> random_poset(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<bool>> less(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) less[i][j] = (rng() >> 63) != 0;
  }
  // Indices already form a linear extension, so one forward pass closes it.
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!less[i][k]) continue;
      for (std::size_t j = k + 1; j < size; ++j) {
        if (less[k][j]) less[i][j] = true;
      }
    }
  }
  std::vector<Cover> reduction;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (!less[i][j]) continue;
      bool direct = true;
      for (std::size_t k = i + 1; k < j && direct; ++k) direct = !(less[i][k] && less[k][j]);
      if (direct) reduction.emplace_back(i, j);
    }
  }
  return reduction;
}

namespace detail {

[[noreturn]] inline void out_of_bounds(const GeneratorSpec& spec, const std::string& bound) {
  throw Error(ErrorKind::out_of_bounds,
              to_string(spec.kind) + "(" + std::to_string(spec.parameter) + ") outside " + bound);
}

inline Lattice diamond_lattice(std::vector<std::string> atoms) {
  const auto k = atoms.size();
  std::vector<std::string> names{"0"};
  names.insert(names.end(), atoms.begin(), atoms.end());
  names.push_back("1");
  std::vector<Cover> covers;
  for (std::size_t i = 1; i <= k; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, k + 1);
  }
  if (k == 0) covers.emplace_back(0, 1);
  return build_lattice(k + 2, covers, std::move(names));
}

}  // namespace detail

inline Lattice generate(const GeneratorSpec& spec) {
  const auto p = spec.parameter;
  switch (spec.kind) {
    case GeneratorKind::chain: {
      if (p < 1 || p > 64) detail::out_of_bounds(spec, "1 <= n <= 64");
      std::vector<Cover> covers;
      for (Element i = 0; i + 1 < p; ++i) covers.emplace_back(i, i + 1);
      return build_lattice(p, covers);
    }
    case GeneratorKind::boolean: {
      if (p > 5) detail::out_of_bounds(spec, "0 <= n <= 5");
      const std::size_t n = std::size_t{1} << p;
      std::vector<Cover> covers;
      for (Element m = 0; m < n; ++m) {
        for (std::size_t bit = 0; bit < p; ++bit) {
          if (!(m >> bit & 1U)) covers.emplace_back(m, m | (Element{1} << bit));
        }
      }
      return build_lattice(n, covers);
    }
    case GeneratorKind::divisor: {
      if (p < 1 || p > 10000) detail::out_of_bounds(spec, "1 <= m <= 10000");
      std::vector<std::size_t> divisors;
      for (std::size_t d = 1; d <= p; ++d) {
        if (p % d == 0) divisors.push_back(d);
      }
      std::vector<std::string> names;
      for (auto d : divisors) names.push_back(std::to_string(d));
      std::vector<Cover> covers;
      for (Element i = 0; i < divisors.size(); ++i) {
        for (Element j = i + 1; j < divisors.size(); ++j) {
          if (divisors[j] % divisors[i] != 0) continue;
          auto q = divisors[j] / divisors[i];
          bool prime = q > 1;
          for (std::size_t f = 2; f * f <= q && prime; ++f) prime = q % f != 0;
          if (prime) covers.emplace_back(i, j);
        }
      }
      return build_lattice(divisors.size(), covers, std::move(names));
    }
    case GeneratorKind::diamond: {
      if (p > 20) detail::out_of_bounds(spec, "0 <= k <= 20");
      std::vector<std::string> atoms;
      for (std::size_t i = 0; i < p; ++i) atoms.emplace_back(1, static_cast<char>('a' + i));
      return detail::diamond_lattice(std::move(atoms));
    }
    case GeneratorKind::subspace: {
      if (p < 2 || p > 5) detail::out_of_bounds(spec, "q in {2, 3, 4, 5}");
      // The lines of F_q^2: span(1, t) for each field element t, and span(0, 1).
      std::vector<std::string> lines;
      for (std::size_t t = 0; t < p; ++t) lines.push_back("l" + std::to_string(t));
      lines.emplace_back("linf");
      return detail::diamond_lattice(std::move(lines));
    }
    case GeneratorKind::downset: {
      if (p > 7) detail::out_of_bounds(spec, "0 <= size <= 7");
      auto order = random_poset(p, spec.seed);
      // below[j]: bitmask of points strictly below j.
      std::vector<std::uint32_t> below(p, 0);
      for (auto [i, j] : order) below[j] |= (1U << i) | below[i];
      for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          if (below[j] >> i & 1U) below[j] |= below[i];
        }
      }
      std::vector<std::uint32_t> downsets;
      for (std::uint32_t m = 0; m < (1U << p); ++m) {
        bool closed = true;
        for (std::size_t j = 0; j < p && closed; ++j) {
          if (m >> j & 1U) closed = (below[j] & ~m) == 0;
        }
        if (closed) downsets.push_back(m);
      }
      std::vector<std::string> names;
      std::vector<Cover> covers;
      for (Element i = 0; i < downsets.size(); ++i) {
        names.push_back("d" + std::to_string(downsets[i]));
        for (Element j = i + 1; j < downsets.size(); ++j) {
          auto extra = downsets[j] & ~downsets[i];
          if ((downsets[i] & ~downsets[j]) == 0 && extra != 0 && (extra & (extra - 1)) == 0) {
            covers.emplace_back(i, j);
          }
        }
      }
      return build_lattice(downsets.size(), covers, std::move(names));
    }
  }
  throw Error(ErrorKind::invalid_argument, "unknown generator kind");
}

}  // namespace gabriel
