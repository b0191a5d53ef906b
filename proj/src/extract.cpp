#include "hgs/extract.hpp"

#include <bit>

namespace hgs
{

namespace
{

void require_normalized( const TruthTable& tt )
{
  if ( tt.get( 0 ) )
    throw invalid_input( "table has f(0) = 1; factor out the global sign before extraction" );
}

} // namespace

Hypergraph extract_layered( const TruthTable& tt )
{
  require_normalized( tt );
  const int n = tt.num_vars();
  const std::uint64_t dim = tt.num_bits();

  auto working = tt;
  std::vector<VertexSet> edges;
  for ( int k = 1; k <= n; ++k )
  {
    for ( std::uint64_t x = 1; x < dim; ++x )
    {
      if ( std::popcount( x ) != k || !working.get( x ) )
        continue;
      edges.push_back( x );
      // C^kZ on support(x); never touches labels with <= k excitations other than x
      for ( std::uint64_t y = x; y < dim; y = ( y + 1 ) | x )
        working.flip( y );
    }
  }
  return Hypergraph( n, std::move( edges ) );
}

Hypergraph extract_fast( const TruthTable& tt )
{
  require_normalized( tt );
  auto anf = mobius_transform( tt );
  return Hypergraph( tt.num_vars(), std::move( anf.monomials ) );
}

std::string to_string( Balance b )
{
  switch ( b )
  {
  case Balance::Constant:
    return "Constant";
  case Balance::Balanced:
    return "Balanced";
  case Balance::Unbalanced:
    return "Unbalanced";
  }
  return "?";
}

BalanceReport classify_balance( const TruthTable& tt )
{
  BalanceReport report;
  report.minus_signs = tt.count_ones();
  if ( report.minus_signs == 0 || report.minus_signs == tt.num_bits() )
    report.balance = Balance::Constant;
  else if ( report.minus_signs == tt.num_bits() / 2 )
    report.balance = Balance::Balanced;
  else
    report.balance = Balance::Unbalanced;

  auto coeffs = tt;
  mobius_inplace( coeffs.words(), coeffs.num_vars() );
  report.full_edge = coeffs.get( tt.num_bits() - 1 );
  return report;
}

} // namespace hgs
