#include "hgs/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "text_util.hpp"

namespace hgs
{

Hypergraph::Hypergraph( int num_vertices )
    : n_( num_vertices )
{
  if ( n_ < 1 || n_ > max_vertices )
    throw invalid_input( "vertex count " + std::to_string( n_ ) + " outside 1.." + std::to_string( max_vertices ) );
}

Hypergraph::Hypergraph( int num_vertices, std::vector<VertexSet> edges )
    : Hypergraph( num_vertices )
{
  for ( auto e : edges )
    add_edge( e );
}

bool Hypergraph::contains( VertexSet edge ) const noexcept
{
  return std::binary_search( edges_.begin(), edges_.end(), edge );
}

void Hypergraph::check_edge( VertexSet edge ) const
{
  if ( edge == 0 )
    throw invalid_input( "empty hyperedge" );
  if ( !is_subset( edge, full_set( n_ ) ) )
    throw invalid_input( "hyperedge " + format_set( edge ) + " has a vertex outside 1.." + std::to_string( n_ ) );
}

void Hypergraph::add_edge( VertexSet edge )
{
  check_edge( edge );
  auto it = std::lower_bound( edges_.begin(), edges_.end(), edge );
  if ( it != edges_.end() && *it == edge )
    throw invalid_input( "duplicate hyperedge " + format_set( edge ) );
  edges_.insert( it, edge );
}

Hypergraph parse_hypergraph( std::string_view text )
{
  auto lines = detail::tokenize( text );
  if ( lines.empty() )
    throw invalid_input( "missing header 'n <int>'" );
  if ( lines[0].tokens.size() != 2 )
    throw invalid_input( "line " + std::to_string( lines[0].number ) + ": malformed header" );

  Hypergraph h( detail::parse_header( lines[0] ) );
  for ( std::size_t li = 1; li < lines.size(); ++li )
  {
    const auto& line = lines[li];
    const auto where = "line " + std::to_string( line.number ) + ": ";
    if ( line.tokens[0] != "e" )
      throw invalid_input( where + "expected 'e v1 ... vk'" );
    if ( line.tokens.size() < 2 )
      throw invalid_input( where + "empty hyperedge" );

    VertexSet edge = 0;
    int previous = 0;
    for ( std::size_t t = 1; t < line.tokens.size(); ++t )
    {
      const int v = detail::parse_int<int>( line.tokens[t], line.number );
      if ( v < 1 || v > h.num_vertices() )
        throw invalid_input( where + "vertex " + std::to_string( v ) + " out of range" );
      if ( v <= previous )
        throw invalid_input( where + "vertex indices must be strictly increasing" );
      edge |= vertex_bit( v );
      previous = v;
    }
    try
    {
      h.add_edge( edge );
    }
    catch ( const invalid_input& e )
    {
      throw invalid_input( where + e.what() );
    }
  }
  return h;
}

std::string format_hypergraph( const Hypergraph& h )
{
  std::string out = "n " + std::to_string( h.num_vertices() ) + "\n";
  for ( auto e : h.edges() )
  {
    out += 'e';
    for ( auto v : set_members( e ) )
      out += ' ' + std::to_string( v );
    out += '\n';
  }
  return out;
}

Hypergraph toggle_edge( const Hypergraph& h, VertexSet edge )
{
  h.check_edge( edge );
  auto edges = h.edges();
  if ( auto it = std::lower_bound( edges.begin(), edges.end(), edge ); it != edges.end() && *it == edge )
    edges.erase( it );
  else
    edges.push_back( edge );
  return Hypergraph( h.num_vertices(), std::move( edges ) );
}

std::string UniformityClass::to_string() const
{
  switch ( kind )
  {
  case Kind::Empty:
    return "Empty";
  case Kind::Uniform:
    return "Uniform(" + std::to_string( uniform_order() ) + ")";
  case Kind::Mixed:
    break;
  }
  std::string out = "Mixed(";
  bool first = true;
  for ( auto k : orders )
  {
    out += ( first ? "" : "," ) + std::to_string( k );
    first = false;
  }
  return out + ")";
}

UniformityClass classify_uniformity( const Hypergraph& h )
{
  UniformityClass c;
  for ( auto e : h.edges() )
    c.orders.insert( set_size( e ) );
  if ( c.orders.empty() )
    c.kind = UniformityClass::Kind::Empty;
  else
    c.kind = c.orders.size() == 1 ? UniformityClass::Kind::Uniform : UniformityClass::Kind::Mixed;
  return c;
}

std::vector<VertexSet> neighbourhood( const Hypergraph& h, int vertex )
{
  if ( vertex < 1 || vertex > h.num_vertices() )
    throw invalid_input( "vertex " + std::to_string( vertex ) + " out of range" );
  const auto bit = vertex_bit( vertex );
  std::vector<VertexSet> tuples;
  for ( auto e : h.edges() )
    if ( e & bit )
      tuples.push_back( e & ~bit );
  std::sort( tuples.begin(), tuples.end() );
  return tuples;
}

std::string StateCount::to_decimal() const
{
  if ( exponent > max_decimal_exponent )
    throw invalid_input( "2^" + std::to_string( exponent ) + " is too large to expand in decimal" );
  boost::multiprecision::cpp_int value = 1;
  value <<= static_cast<unsigned>( exponent );
  return value.str();
}

std::string StateCount::to_string() const
{
  return exponent > max_decimal_exponent ? "2^" + std::to_string( exponent ) : to_decimal();
}

std::uint64_t binomial( int n, int k )
{
  if ( k < 0 || k > n )
    return 0;
  k = std::min( k, n - k );
  // Multiplicative form stays exact: each partial product is C(n-k+i, i).
  unsigned __int128 value = 1;
  for ( int i = 1; i <= k; ++i )
    value = value * static_cast<unsigned>( n - k + i ) / static_cast<unsigned>( i );
  return static_cast<std::uint64_t>( value );
}

StateCount count_all_states( int n )
{
  if ( n < 1 || n > max_vertices )
    throw invalid_input( "n must lie in 1.." + std::to_string( max_vertices ) );
  return { full_set( n ) };
}

StateCount count_uniform_states( int n, int k )
{
  if ( n < 1 || n > max_vertices )
    throw invalid_input( "n must lie in 1.." + std::to_string( max_vertices ) );
  if ( k < 1 || k > n )
    throw invalid_input( "k must lie in 1..n" );
  return { binomial( n, k ) };
}

std::string to_dot( const Hypergraph& h )
{
  std::ostringstream out;
  out << "graph hypergraph {\n";
  out << "  node [shape=circle];\n";
  for ( int v = 1; v <= h.num_vertices(); ++v )
  {
    out << "  " << v;
    if ( h.contains( vertex_bit( v ) ) )
      out << " [peripheries=2]";
    out << ";\n";
  }
  int hub = 0;
  for ( auto e : h.edges() )
  {
    const auto members = set_members( e );
    if ( members.size() == 2 )
      out << "  " << members[0] << " -- " << members[1] << ";\n";
    else if ( members.size() >= 3 )
    {
      ++hub;
      out << "  h" << hub << " [shape=point, label=\"\"];\n";
      for ( auto v : members )
        out << "  h" << hub << " -- " << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

} // namespace hgs
