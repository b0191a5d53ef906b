#include "hgs/orbits.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hgs
{

namespace
{

void check_orbit_size( int n )
{
  if ( n < 1 || n > max_orbit_qubits )
    throw invalid_input( "orbit enumeration supports 1.." + std::to_string( max_orbit_qubits ) + " qubits" );
}

} // namespace

OrbitKey orbit_key( const SignState& s )
{
  check_orbit_size( s.num_qubits() );
  auto bits = static_cast<std::uint32_t>( s.signs().words()[0] );
  if ( bits & 1u )
    bits ^= static_cast<std::uint32_t>( ( std::uint64_t{ 1 } << s.dimension() ) - 1u );
  return { bits };
}

std::set<OrbitKey> local_pauli_orbit( const SignState& s )
{
  check_orbit_size( s.num_qubits() );
  const int n = s.num_qubits();
  constexpr Pauli paulis[] = { Pauli::I, Pauli::X, Pauli::Y, Pauli::Z };

  std::set<OrbitKey> orbit;
  const std::uint32_t products = 1u << ( 2 * n );
  for ( std::uint32_t code = 0; code < products; ++code )
  {
    auto image = s;
    for ( int q = 1; q <= n; ++q )
    {
      const auto p = paulis[( code >> ( 2 * ( q - 1 ) ) ) & 3u];
      if ( p != Pauli::I )
        image = apply_local_pauli_up_to_phase( image, q, p );
    }
    orbit.insert( orbit_key( image ) );
  }
  return orbit;
}

std::vector<Hypergraph> uniform_hypergraphs( int n, int k )
{
  if ( n < 1 || n > max_orbit_qubits || k < 1 || k > n )
    throw invalid_input( "uniform hypergraph enumeration needs 1 <= k <= n <= " + std::to_string( max_orbit_qubits ) );
  std::vector<VertexSet> candidates;
  for ( VertexSet e = 1; e <= full_set( n ); ++e )
    if ( set_size( e ) == k )
      candidates.push_back( e );

  std::vector<Hypergraph> graphs;
  const std::uint64_t subsets = std::uint64_t{ 1 } << candidates.size();
  for ( std::uint64_t choice = 1; choice < subsets; ++choice )
  {
    std::vector<VertexSet> edges;
    for ( std::size_t c = 0; c < candidates.size(); ++c )
      if ( ( choice >> c ) & 1u )
        edges.push_back( candidates[c] );
    graphs.emplace_back( n, std::move( edges ) );
  }
  return graphs;
}

std::string InequivalenceReport::to_string() const
{
  std::ostringstream out;
  out << "n " << num_qubits << "\n";
  for ( const auto& c : classes )
    out << "class k " << c.k << " states " << c.states << " orbit_min " << c.min_orbit << " orbit_max " << c.max_orbit << "\n";
  for ( const auto& p : pairs )
    out << "pair " << p.k << " " << p.k_other << " states " << p.states << " targets " << p.targets << " violations " << p.violations << "\n";
  for ( const auto& v : violations )
  {
    out << "violation";
    for ( auto e : v.source.edges() )
      out << " " << format_set( e );
    out << " ->";
    for ( auto e : v.target.edges() )
      out << " " << format_set( e );
    out << "\n";
  }
  out << "violations " << violations.size() << "\n";
  return out.str();
}

InequivalenceReport class_inequivalence_report( int n )
{
  if ( n < 3 || n > max_orbit_qubits )
    throw invalid_input( "class inequivalence report is defined for n = 3 or 4" );

  InequivalenceReport report;
  report.num_qubits = n;

  std::vector<std::vector<Hypergraph>> classes( n + 1 );
  // key -> (k, index) for every nonempty uniform state
  std::multimap<OrbitKey, std::pair<int, std::size_t>> members;
  for ( int k = 1; k <= n; ++k )
  {
    classes[k] = uniform_hypergraphs( n, k );
    for ( std::size_t i = 0; i < classes[k].size(); ++i )
      members.emplace( orbit_key( build_state( classes[k][i] ) ), std::pair{ k, i } );
  }

  std::vector<std::vector<std::uint64_t>> violations( n + 1, std::vector<std::uint64_t>( n + 1, 0 ) );
  for ( int k = 1; k <= n; ++k )
  {
    OrbitClassStats stats{ k, classes[k].size(), ~std::uint64_t{ 0 }, 0 };
    for ( const auto& g : classes[k] )
    {
      const auto orbit = local_pauli_orbit( build_state( g ) );
      stats.min_orbit = std::min<std::uint64_t>( stats.min_orbit, orbit.size() );
      stats.max_orbit = std::max<std::uint64_t>( stats.max_orbit, orbit.size() );
      for ( const auto& key : orbit )
      {
        auto [first, last] = members.equal_range( key );
        for ( auto it = first; it != last; ++it )
        {
          const auto [k_other, index] = it->second;
          if ( k_other == k )
            continue;
          ++violations[k][k_other];
          report.violations.push_back( { g, classes[k_other][index] } );
        }
      }
    }
    report.classes.push_back( stats );
  }

  for ( int k = 1; k <= n; ++k )
    for ( int k_other = 1; k_other <= n; ++k_other )
      if ( k != k_other )
        report.pairs.push_back( { k, k_other, classes[k].size(), classes[k_other].size(), violations[k][k_other] } );
  return report;
}

} // namespace hgs
