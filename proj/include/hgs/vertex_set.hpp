#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgs
{

/// Thrown for malformed input: bad files, out-of-range vertices, size limits.
class invalid_input : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A set of vertices (or qubits) packed as a bitmask. Vertex i (1-based) lives
/// at bit i-1, so the mask of a hyperedge is also the basis label of the
/// computational state in which exactly its qubits are excited.
using VertexSet = std::uint64_t;

inline constexpr int max_vertices = 64;

inline constexpr VertexSet vertex_bit( int vertex ) noexcept
{
  return VertexSet{ 1 } << ( vertex - 1 );
}

inline constexpr VertexSet full_set( int n ) noexcept
{
  return n >= 64 ? ~VertexSet{ 0 } : ( VertexSet{ 1 } << n ) - 1u;
}

inline constexpr int set_size( VertexSet s ) noexcept
{
  return std::popcount( s );
}

inline constexpr bool is_subset( VertexSet sub, VertexSet of ) noexcept
{
  return ( sub & ~of ) == 0;
}

VertexSet make_set( const std::vector<int>& vertices );

/// 1-based vertex indices in increasing order.
std::vector<int> set_members( VertexSet s );

/// "{1,2,3}" style rendering, "{}" for the empty set.
std::string format_set( VertexSet s );

} // namespace hgs
