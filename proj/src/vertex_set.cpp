#include "hgs/vertex_set.hpp"

namespace hgs
{

VertexSet make_set( const std::vector<int>& vertices )
{
  VertexSet s = 0;
  for ( auto v : vertices )
  {
    if ( v < 1 || v > max_vertices )
      throw invalid_input( "vertex " + std::to_string( v ) + " out of range" );
    s |= vertex_bit( v );
  }
  return s;
}

std::vector<int> set_members( VertexSet s )
{
  std::vector<int> out;
  while ( s )
  {
    out.push_back( std::countr_zero( s ) + 1 );
    s &= s - 1;
  }
  return out;
}

std::string format_set( VertexSet s )
{
  std::string out = "{";
  bool first = true;
  for ( auto v : set_members( s ) )
  {
    if ( !first )
      out += ',';
    out += std::to_string( v );
    first = false;
  }
  return out + "}";
}

} // namespace hgs
