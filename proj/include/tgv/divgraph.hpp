#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tgv/factored.hpp"
#include "tgv/parallel.hpp"

namespace tgv {

namespace detail {

/// Divisibility oracle over a fixed vertex list. Every vertex is divided by
/// the gcd of all vertices (a | b iff a/g | b/g) and stored as a dense row of
/// exponents over the primes that remain, plus a 64-bit support signature
/// that rejects most non-divisible pairs before the row comparison.
class ReducedPoset {
public:
  explicit ReducedPoset(std::span<const FactoredNat> vertices)
  {
    const std::size_t count = vertices.size();
    weight_.resize(count);
    if (count == 0)
      return;

    FactoredNat common = vertices.front();
    for (const auto& v : vertices)
      common = gcd(common, v);

    std::map<std::uint64_t, std::size_t> column;
    std::vector<FactoredNat> reduced;
    reduced.reserve(count);
    for (const auto& v : vertices) {
      reduced.push_back(divide_exact(v, common));
      for (const auto& term : reduced.back().terms())
        column.emplace(term.first, 0);
    }
    std::size_t next = 0;
    for (auto& entry : column)
      entry.second = next++;

    width_ = column.size();
    rows_.assign(count * width_, 0);
    mask_.assign(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
      for (const auto& [p, e] : reduced[i].terms()) {
        const std::size_t c = column.at(p);
        rows_[i * width_ + c] = e;
        mask_[i] |= std::uint64_t{1} << (c % 64);
      }
      weight_[i] = vertices[i].exponent_sum();
    }
  }

  /// vertex a divides vertex b
  bool divides(std::size_t a, std::size_t b) const noexcept
  {
    if (weight_[a] > weight_[b] || (mask_[a] & ~mask_[b]) != 0)
      return false;
    const std::uint32_t* ra = rows_.data() + a * width_;
    const std::uint32_t* rb = rows_.data() + b * width_;
    for (std::size_t c = 0; c < width_; ++c)
      if (ra[c] > rb[c])
        return false;
    return true;
  }

  /// a properly divides b
  bool properly_divides(std::size_t a, std::size_t b) const noexcept
  {
    return weight_[a] < weight_[b] && divides(a, b);
  }

  std::uint64_t weight(std::size_t i) const noexcept { return weight_[i]; }

private:
  std::size_t width_ = 0;
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::uint64_t> weight_;
};

inline std::vector<FactoredNat> canonical_vertices(std::span<const FactoredNat> theta)
{
  std::vector<FactoredNat> vertices(theta.begin(), theta.end());
  sort_values(vertices);
  return vertices;
}

} // namespace detail

/// Gamma(Theta): vertices in ValueLess order, an edge u -> v whenever u is a
/// proper divisor of v. Adjacency lists are ascending.
struct DivGraph {
  std::vector<FactoredNat> vertices;
  std::vector<std::vector<std::size_t>> out_edges;

  std::size_t edge_count() const noexcept
  {
    std::size_t total = 0;
    for (const auto& adj : out_edges)
      total += adj.size();
    return total;
  }
};

inline DivGraph build_graph(std::span<const FactoredNat> theta, unsigned jobs = 1)
{
  DivGraph graph;
  graph.vertices = detail::canonical_vertices(theta);
  const std::size_t count = graph.vertices.size();
  graph.out_edges.resize(count);
  const detail::ReducedPoset poset(graph.vertices);
  parallel_for(count, jobs, [&](std::size_t u) {
    for (std::size_t v = 0; v < count; ++v)
      if (poset.properly_divides(u, v))
        graph.out_edges[u].push_back(v);
  });
  return graph;
}

struct HeightResult {
  std::size_t h = 0;
  std::vector<FactoredNat> witness; // ascending chain, each dividing the next
};

/// h(Theta): the number of vertices on a longest path of Gamma(Theta), i.e.
/// the length of a longest divisibility chain. 0 for the empty set, 1 for an
/// antichain. The witness is the lexicographically least longest chain under
/// ValueLess.
///
/// chain[v] (longest chain starting at v) is filled in order of decreasing
/// exponent sum, which is a topological order of proper divisibility. Done
/// vertices are bucketed by chain length so the scan for v can stop at the
/// first multiple found in the highest bucket.
inline HeightResult height(std::span<const FactoredNat> theta)
{
  HeightResult result;
  const std::vector<FactoredNat> vertices = detail::canonical_vertices(theta);
  const std::size_t count = vertices.size();
  if (count == 0)
    return result;
  const detail::ReducedPoset poset(vertices);

  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return poset.weight(a) > poset.weight(b); });

  std::vector<std::size_t> chain(count, 0);
  std::vector<std::vector<std::size_t>> by_length(2);
  for (std::size_t v : order) {
    std::size_t best = 1;
    for (std::size_t len = by_length.size() - 1; len >= 1 && best == 1; --len) {
      for (std::size_t w : by_length[len]) {
        if (poset.properly_divides(v, w)) {
          best = len + 1;
          break;
        }
      }
    }
    chain[v] = best;
    if (best >= by_length.size())
      by_length.resize(best + 1);
    by_length[best].push_back(v);
  }

  result.h = by_length.size() - 1;
  std::size_t current = 0;
  while (chain[current] != result.h)
    ++current;
  result.witness.push_back(vertices[current]);
  while (chain[current] > 1) {
    std::size_t next = 0;
    while (!(chain[next] + 1 == chain[current] && poset.properly_divides(current, next)))
      ++next;
    current = next;
    result.witness.push_back(vertices[current]);
  }
  return result;
}

/// DOT rendering with decimal labels; node and edge order follow the vertex
/// order, so equal inputs give identical text.
inline std::string export_dot(const DivGraph& graph)
{
  std::string out = "digraph divisibility {\n";
  std::vector<std::string> labels;
  labels.reserve(graph.vertices.size());
  for (const auto& v : graph.vertices) {
    labels.push_back(to_decimal(v));
    out += "  \"" + labels.back() + "\";\n";
  }
  for (std::size_t u = 0; u < graph.out_edges.size(); ++u)
    for (std::size_t v : graph.out_edges[u])
      out += "  \"" + labels[u] + "\" -> \"" + labels[v] + "\";\n";
  out += "}\n";
  return out;
}

} // namespace tgv
