#pragma once

#include "hultman/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hultman {

/// Perfect matching on {0..2m-1}, stored as a fixed-point-free involution.
class PerfectMatching {
 public:
  PerfectMatching() = default;

  static PerfectMatching from_partners(std::vector<int> partner) {
    const int size = static_cast<int>(partner.size());
    if (size % 2 != 0) throw std::invalid_argument("perfect matching needs an even vertex count");
    for (int v = 0; v < size; ++v) {
      const int w = partner[v];
      if (w < 0 || w >= size) throw std::invalid_argument("partner of " + std::to_string(v) + " out of range");
      if (w == v) throw std::invalid_argument("vertex " + std::to_string(v) + " matched to itself");
      if (partner[w] != v) throw std::invalid_argument("partner map is not an involution at " + std::to_string(v));
    }
    return PerfectMatching(std::move(partner));
  }

  static PerfectMatching from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> partner(static_cast<std::size_t>(vertex_count), -1);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
        throw std::invalid_argument("edge endpoint out of range");
      if (partner[u] != -1 || partner[v] != -1) throw std::invalid_argument("vertex covered twice");
      partner[u] = v;
      partner[v] = u;
    }
    for (int p : partner)
      if (p == -1) throw std::invalid_argument("matching leaves a vertex uncovered");
    return from_partners(std::move(partner));
  }

  int edge_count() const { return static_cast<int>(partner_.size()) / 2; }
  int vertex_count() const { return static_cast<int>(partner_.size()); }
  int partner(int v) const { return partner_[static_cast<std::size_t>(v)]; }
  std::span<const int> partners() const { return partner_; }

  // Edges {u, v} with u < v, sorted by u.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < vertex_count(); ++v)
      if (v < partner_[v]) out.emplace_back(v, partner_[v]);
    return out;
  }

  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;

 private:
  explicit PerfectMatching(std::vector<int> partner) : partner_(std::move(partner)) {}

  std::vector<int> partner_;
};

// delta_G = {{2i, 2i+1} : 0 <= i <= n}
inline PerfectMatching grey_matching(int n) {
  std::vector<int> p(static_cast<std::size_t>(2 * n + 2));
  for (int v = 0; v < 2 * n + 2; ++v) p[v] = v ^ 1;
  return PerfectMatching::from_partners(std::move(p));
}

// {{2i-1, 2i} : 1 <= i <= n} U {{0, 2n+1}}
inline PerfectMatching complement_grey_matching(int n) {
  const int last = 2 * n + 1;
  std::vector<int> p(static_cast<std::size_t>(last) + 1);
  p[0] = last;
  p[last] = 0;
  for (int v = 1; v < last; ++v) p[v] = (v % 2 == 1) ? v + 1 : v - 1;
  return PerfectMatching::from_partners(std::move(p));
}

/// Lengths of the alternating cycles of a union of two perfect matchings.
///
/// Length is half the number of edges, i.e. the number of edges from `first`.
inline std::vector<int> union_cycle_lengths(const PerfectMatching& first, const PerfectMatching& second) {
  if (first.vertex_count() != second.vertex_count()) throw std::invalid_argument("matchings on different vertex sets");
  const int size = first.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(size), 0);
  std::vector<int> lengths;
  for (int s = 0; s < size; ++s) {
    if (seen[s]) continue;
    int len = 0;
    int v = s;
    do {
      seen[v] = 1;
      const int w = first.partner(v);
      seen[w] = 1;
      ++len;
      v = second.partner(w);
    } while (v != s);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

inline int union_cycle_count(const PerfectMatching& first, const PerfectMatching& second) {
  return static_cast<int>(union_cycle_lengths(first, second).size());
}

struct CycleProfile {
  std::vector<int> lengths;  // sorted ascending, breakpoint-graph units

  int cycles() const { return static_cast<int>(lengths.size()); }
  int odd_cycles() const {
    return static_cast<int>(std::count_if(lengths.begin(), lengths.end(), [](int l) { return l % 2 == 1; }));
  }
  int unit_cycles() const { return static_cast<int>(std::count(lengths.begin(), lengths.end(), 1)); }
  int total_length() const {
    int s = 0;
    for (int l : lengths) s += l;
    return s;
  }
};

/// Black perfect matching on {0..2n+1} together with the implicit grey matching.
class Configuration {
 public:
  Configuration(int n, PerfectMatching black) : n_(n), black_(std::move(black)) {
    if (n < 0) throw std::invalid_argument("Configuration: n must be nonnegative");
    if (black_.vertex_count() != 2 * n + 2)
      throw std::invalid_argument("Configuration: black matching must cover 0.." + std::to_string(2 * n + 1));
  }

  int n() const { return n_; }
  const PerfectMatching& black() const { return black_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int n_;
  PerfectMatching black_;
};

/// Two matchings on the same vertex set, e.g. a configuration's complement.
struct MatchingUnion {
  PerfectMatching first;
  PerfectMatching second;

  std::vector<int> cycle_lengths() const { return union_cycle_lengths(first, second); }
  int cycle_count() const { return static_cast<int>(cycle_lengths().size()); }
  bool is_hamiltonian() const { return cycle_count() == 1; }
};

inline CycleProfile cycle_profile(const Configuration& config) {
  return {union_cycle_lengths(config.black(), grey_matching(config.n()))};
}

inline MatchingUnion complement(const Configuration& config) {
  return {config.black(), complement_grey_matching(config.n())};
}

inline bool is_valid_breakpoint_graph(const Configuration& config) { return complement(config).is_hamiltonian(); }

/// (0, pi'_1, ..., pi'_2n, 2n+1); +v becomes (2v-1, 2v) and -v becomes (2v, 2v-1).
inline std::vector<int> double_permutation(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(2 * n + 2));
  d.push_back(0);
  for (int v : images) {
    const int a = std::abs(v);
    if (v > 0) {
      d.push_back(2 * a - 1);
      d.push_back(2 * a);
    } else {
      d.push_back(2 * a);
      d.push_back(2 * a - 1);
    }
  }
  d.push_back(2 * n + 1);
  return d;
}

inline std::vector<int> double_permutation(const SignedPermutation& pi) { return double_permutation(pi.images()); }

struct BreakpointGraph {
  Configuration config;
  SignedPermutation source;
  std::vector<int> doubled;
};

inline BreakpointGraph breakpoint_graph(const SignedPermutation& pi) {
  const int n = pi.size();
  auto doubled = double_permutation(pi);
  std::vector<int> partner(doubled.size());
  for (int i = 0; i <= n; ++i) {
    const int u = doubled[2 * i];
    const int v = doubled[2 * i + 1];
    partner[u] = v;
    partner[v] = u;
  }
  return {Configuration(n, PerfectMatching::from_partners(std::move(partner))), pi, std::move(doubled)};
}

class InvalidConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inverse of breakpoint_graph: walks the hamiltonian complement from 0.
inline SignedPermutation recover_permutation(const Configuration& config) {
  const int n = config.n();
  const auto comp = complement(config);
  if (!comp.is_hamiltonian()) {
    throw InvalidConfiguration("configuration is not a breakpoint graph: its complement has " +
                               std::to_string(comp.cycle_count()) + " cycles");
  }
  std::vector<int> walk;
  walk.reserve(static_cast<std::size_t>(2 * n + 2));
  int v = 0;
  for (int i = 0; i <= n; ++i) {
    walk.push_back(v);
    v = config.black().partner(v);
    walk.push_back(v);
    v = comp.second.partner(v);
  }
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int x = walk[2 * i + 1];
    const int y = walk[2 * i + 2];
    if (x % 2 == 1 && y == x + 1) images.push_back((x + 1) / 2);
    else if (x % 2 == 0 && y == x - 1) images.push_back(-(x / 2));
    else throw InternalError("recover_permutation: walk pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return SignedPermutation::validate(std::move(images));
}

/// Line-based edge list: "B u v" for black edges, "G u v" for grey edges.
inline std::string to_edge_list(const Configuration& config) {
  std::ostringstream os;
  for (auto [u, v] : config.black().edges()) os << "B " << u << ' ' << v << '\n';
  for (auto [u, v] : grey_matching(config.n()).edges()) os << "G " << u << ' ' << v << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Allocation-light breakpoint graph statistics for census loops.

struct CycleStats {
  int cycles = 0;
  int odd = 0;
  int unit = 0;
};

class BreakpointScratch {
 public:
  CycleStats stats(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    const auto size = static_cast<std::size_t>(2 * n + 2);
    black_.resize(size);
    seen_.assign(size, 0);
    int prev = 0;  // pi'_{2i}
    for (int i = 0; i < n; ++i) {
      const int v = images[i];
      const int a = v < 0 ? -v : v;
      const int left = v > 0 ? 2 * a - 1 : 2 * a;
      const int right = v > 0 ? 2 * a : 2 * a - 1;
      black_[prev] = left;
      black_[left] = prev;
      prev = right;
    }
    black_[prev] = 2 * n + 1;
    black_[2 * n + 1] = prev;

    CycleStats s;
    for (int start = 0; start < 2 * n + 2; ++start) {
      if (seen_[start]) continue;
      int len = 0;
      int v = start;
      do {
        seen_[v] = 1;
        const int w = black_[v];
        seen_[w] = 1;
        ++len;
        v = w ^ 1;
      } while (v != start);
      ++s.cycles;
      if (len % 2 == 1) ++s.odd;
      if (len == 1) ++s.unit;
    }
    return s;
  }

 private:
  std::vector<int> black_;
  std::vector<char> seen_;
};

inline CycleStats cycle_stats(std::span<const int> images) {
  BreakpointScratch scratch;
  return scratch.stats(images);
}

inline CycleStats cycle_stats(const SignedPermutation& pi) { return cycle_stats(pi.images()); }

// ---------------------------------------------------------------------------
// Perfect matchings of {0..2m-1}.

struct MatchingGuard {
  static constexpr int kEdges = 8;
};

inline std::uint64_t double_factorial_odd(int m) {
  std::uint64_t r = 1;
  for (int k = 2 * m - 1; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

namespace detail {

template <class Visitor>
void extend_matching(std::vector<int>& partner, Visitor& visit) {
  int v = 0;
  const int size = static_cast<int>(partner.size());
  while (v < size && partner[v] != -1) ++v;
  if (v == size) {
    visit(std::span<const int>(partner));
    return;
  }
  for (int w = v + 1; w < size; ++w) {
    if (partner[w] != -1) continue;
    partner[v] = w;
    partner[w] = v;
    extend_matching(partner, visit);
    partner[v] = -1;
    partner[w] = -1;
  }
}

}  // namespace detail

/// Visits every perfect matching of {0..2m-1} whose edge at vertex 0 is {0, first_partner},
/// pairing the smallest unmatched vertex first. These 2m-1 branches partition the family.
template <class Visitor>
void for_each_matching_branch(int m, int first_partner, Visitor&& visit) {
  if (m < 1) throw std::invalid_argument("matchings need m >= 1");
  if (first_partner < 1 || first_partner >= 2 * m) throw std::invalid_argument("first partner out of range");
  std::vector<int> partner(static_cast<std::size_t>(2 * m), -1);
  partner[0] = first_partner;
  partner[first_partner] = 0;
  detail::extend_matching(partner, visit);
}

template <class Visitor>
void for_each_matching(int m, Visitor&& visit) {
  for (int w = 1; w < 2 * m; ++w) for_each_matching_branch(m, w, visit);
}

inline std::vector<PerfectMatching> enumerate_matchings(int m, bool force = false, int guard = MatchingGuard::kEdges) {
  check_guard(m, guard, force, "enumerate_matchings");
  std::vector<PerfectMatching> out;
  out.reserve(double_factorial_odd(m));
  for_each_matching(m, [&](std::span<const int> p) {
    out.push_back(PerfectMatching::from_partners(std::vector<int>(p.begin(), p.end())));
  });
  return out;
}

/// sigma o phi o sigma^-1 for a vertex relabeling sigma (sigma[v] is the new name of v).
inline PerfectMatching conjugate_matching(const PerfectMatching& phi, std::span<const int> sigma) {
  const int size = phi.vertex_count();
  if (static_cast<int>(sigma.size()) != size) throw std::invalid_argument("relabeling size mismatch");
  std::vector<char> hit(static_cast<std::size_t>(size), 0);
  for (int s : sigma) {
    if (s < 0 || s >= size || hit[s]) throw std::invalid_argument("relabeling is not a bijection");
    hit[s] = 1;
  }
  std::vector<int> partner(static_cast<std::size_t>(size));
  for (int v = 0; v < size; ++v) partner[sigma[v]] = sigma[phi.partner(v)];
  return PerfectMatching::from_partners(std::move(partner));
}

/// i -> i/2 for even i, (i+2n+1)/2 for odd i, on {0..2n+1}.
inline std::vector<int> renaming_map(int n) {
  std::vector<int> mu(static_cast<std::size_t>(2 * n + 2));
  for (int i = 0; i < 2 * n + 2; ++i) mu[i] = (i % 2 == 0) ? i / 2 : (i + 2 * n + 1) / 2;
  return mu;
}

// {{i, m+i} : 0 <= i < m}
inline PerfectMatching identity_matching(int m) {
  std::vector<int> p(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < m; ++i) {
    p[i] = m + i;
    p[m + i] = i;
  }
  return PerfectMatching::from_partners(std::move(p));
}

}  // namespace hultman
