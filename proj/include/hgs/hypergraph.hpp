#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/vertex_set.hpp"

namespace hgs
{

/// A hypergraph g = {V, E} on vertices 1..n.
///
/// Edges are nonempty vertex subsets of any order 1..n, stored as masks in
/// increasing numeric order with no duplicates. An order-1 edge is a local Z.
class Hypergraph
{
public:
  explicit Hypergraph( int num_vertices );
  Hypergraph( int num_vertices, std::vector<VertexSet> edges );

  int num_vertices() const noexcept { return n_; }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  bool contains( VertexSet edge ) const noexcept;

  /// Inserts a new edge; throws on a duplicate or invalid edge.
  void add_edge( VertexSet edge );

  /// Throws invalid_input unless `edge` is a nonempty subset of 1..n.
  void check_edge( VertexSet edge ) const;

  friend bool operator==( const Hypergraph&, const Hypergraph& ) = default;

private:
  int n_;
  std::vector<VertexSet> edges_;
};

Hypergraph parse_hypergraph( std::string_view text );
std::string format_hypergraph( const Hypergraph& h );

/// Symmetric difference with a single edge.
Hypergraph toggle_edge( const Hypergraph& h, VertexSet edge );

struct UniformityClass
{
  enum class Kind
  {
    Empty,
    Uniform,
    Mixed
  };

  Kind kind = Kind::Empty;
  /// Edge orders present; exactly one entry for Uniform.
  std::set<int> orders;

  int uniform_order() const { return kind == Kind::Uniform ? *orders.begin() : 0; }
  std::string to_string() const;

  friend bool operator==( const UniformityClass&, const UniformityClass& ) = default;
};

UniformityClass classify_uniformity( const Hypergraph& h );

/// N(i) = { e \ {i} : i in e }. Contains the empty set (0) when {i} is an edge.
std::vector<VertexSet> neighbourhood( const Hypergraph& h, int vertex );

/// The number of hypergraph states, always a power of two.
struct StateCount
{
  std::uint64_t exponent = 0;

  /// Exact decimal digits; throws invalid_input when the exponent exceeds
  /// `max_decimal_exponent`.
  std::string to_decimal() const;
  /// Decimal when feasible, otherwise "2^<exponent>".
  std::string to_string() const;

  static constexpr std::uint64_t max_decimal_exponent = 65536;
};

std::uint64_t binomial( int n, int k );

/// All hypergraphs on n vertices: 2^(2^n - 1).
StateCount count_all_states( int n );
/// k-uniform hypergraphs on n vertices: 2^C(n,k).
StateCount count_uniform_states( int n, int k );

std::string to_dot( const Hypergraph& h );

} // namespace hgs
