#include "hgs/statesim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "text_util.hpp"

namespace hgs
{

namespace
{

void check_qubit( int num_qubits, int qubit )
{
  if ( qubit < 1 || qubit > num_qubits )
    throw invalid_input( "qubit " + std::to_string( qubit ) + " out of range 1.." + std::to_string( num_qubits ) );
}

void check_gate_edge( int num_qubits, VertexSet edge )
{
  if ( edge == 0 || !is_subset( edge, full_set( num_qubits ) ) )
    throw invalid_input( "invalid gate support " + format_set( edge ) );
}

void check_same_size( std::uint64_t a, std::uint64_t b )
{
  if ( a != b )
    throw invalid_input( "dimension mismatch" );
}

/// Calls f(x) for every x < 2^n with edge subset of x, in increasing order.
template<typename F>
void for_each_superset( int num_qubits, VertexSet edge, F&& f )
{
  const std::uint64_t dim = std::uint64_t{ 1 } << num_qubits;
  for ( std::uint64_t x = edge; x < dim; x = ( x + 1 ) | edge )
    f( x );
}

void negate_supersets( TruthTable& signs, VertexSet edge )
{
  for_each_superset( signs.num_vars(), edge, [&]( auto x ) { signs.flip( x ); } );
}

void negate_supersets( std::vector<Amplitude>& amps, int num_qubits, VertexSet edge )
{
  for_each_superset( num_qubits, edge, [&]( auto x ) { amps[x] = -amps[x]; } );
}

// sign at x is the parity of the number of listed sets contained in x
TruthTable superset_parity( int num_vars, const std::vector<VertexSet>& sets )
{
  TruthTable tt( num_vars );
  for ( auto e : sets )
    tt.flip( e );
  mobius_inplace( tt.words(), num_vars );
  return tt;
}

void check_stabilizer( int num_qubits, const StabilizerOperator& k )
{
  check_qubit( num_qubits, k.vertex );
  for ( auto t : k.tuples )
    if ( ( t & vertex_bit( k.vertex ) ) || !is_subset( t, full_set( num_qubits ) ) )
      throw invalid_input( "stabilizer tuple " + format_set( t ) + " incompatible with K_" + std::to_string( k.vertex ) );
}

std::vector<VertexSet> nonempty_tuples( const StabilizerOperator& k )
{
  std::vector<VertexSet> tuples;
  for ( auto t : k.tuples )
    if ( t != 0 )
      tuples.push_back( t );
  return tuples;
}

} // namespace

double SignState::magnitude() const noexcept
{
  return std::ldexp( 1.0, -num_qubits() / 2 ) * ( num_qubits() % 2 ? std::sqrt( 0.5 ) : 1.0 );
}

ComplexState::ComplexState( int num_qubits, std::vector<Amplitude> amplitudes )
    : n_( num_qubits ), amps_( std::move( amplitudes ) )
{
  if ( n_ < 1 || n_ > max_table_vars )
    throw invalid_input( "qubit count out of range" );
  if ( amps_.size() != ( std::uint64_t{ 1 } << n_ ) )
    throw invalid_input( "amplitude vector length must be 2^n" );
}

double ComplexState::squared_norm() const noexcept
{
  double total = 0;
  for ( const auto& a : amps_ )
    total += std::norm( a );
  return total;
}

SignState plus_state( int num_qubits )
{
  return SignState( TruthTable( num_qubits ) );
}

ComplexState to_complex( const SignState& s )
{
  std::vector<Amplitude> amps( s.dimension() );
  for ( std::uint64_t x = 0; x < amps.size(); ++x )
    amps[x] = s.amplitude( x );
  return ComplexState( s.num_qubits(), std::move( amps ) );
}

SignState build_state( const Hypergraph& h )
{
  if ( h.num_vertices() > max_table_vars )
    throw invalid_input( "state simulation supports at most " + std::to_string( max_table_vars ) + " qubits" );
  return SignState( superset_parity( h.num_vertices(), h.edges() ) );
}

SignState apply_ckz( const SignState& s, VertexSet edge )
{
  check_gate_edge( s.num_qubits(), edge );
  auto out = s;
  negate_supersets( out.signs(), edge );
  return out;
}

ComplexState apply_ckz( const ComplexState& s, VertexSet edge )
{
  check_gate_edge( s.num_qubits(), edge );
  auto out = s;
  negate_supersets( out.amplitudes(), s.num_qubits(), edge );
  return out;
}

char pauli_name( Pauli p ) noexcept
{
  switch ( p )
  {
  case Pauli::I:
    return 'I';
  case Pauli::X:
    return 'X';
  case Pauli::Y:
    return 'Y';
  case Pauli::Z:
    return 'Z';
  }
  return '?';
}

ComplexState apply_local_pauli( const ComplexState& s, int qubit, Pauli p )
{
  check_qubit( s.num_qubits(), qubit );
  const auto bit = vertex_bit( qubit );
  const Amplitude i_unit{ 0.0, 1.0 };
  auto out = s;
  for ( std::uint64_t x = 0; x < s.dimension(); ++x )
  {
    const bool excited = x & bit;
    switch ( p )
    {
    case Pauli::I:
      break;
    case Pauli::X:
      out[x] = s[x ^ bit];
      break;
    case Pauli::Y:
      // Y|0> = i|1>, Y|1> = -i|0>
      out[x] = ( excited ? i_unit : -i_unit ) * s[x ^ bit];
      break;
    case Pauli::Z:
      out[x] = excited ? -s[x] : s[x];
      break;
    }
  }
  return out;
}

SignState apply_local_pauli( const SignState& s, int qubit, Pauli p )
{
  if ( p == Pauli::Y )
    throw invalid_input( "Y introduces a factor i; use the complex backend or apply_local_pauli_up_to_phase" );
  return apply_local_pauli_up_to_phase( s, qubit, p );
}

SignState apply_local_pauli_up_to_phase( const SignState& s, int qubit, Pauli p )
{
  check_qubit( s.num_qubits(), qubit );
  const auto bit = vertex_bit( qubit );
  auto out = s;
  if ( p == Pauli::Z || p == Pauli::Y )
    for ( std::uint64_t x = bit; x < s.dimension(); x = ( x + 1 ) | bit )
      out.signs().flip( x );
  if ( p == Pauli::X || p == Pauli::Y )
  {
    const auto before = out;
    for ( std::uint64_t x = 0; x < s.dimension(); ++x )
      out.signs().set( x, before.signs().get( x ^ bit ) );
  }
  return out;
}

bool StabilizerOperator::has_global_sign() const noexcept
{
  return std::find( tuples.begin(), tuples.end(), VertexSet{ 0 } ) != tuples.end();
}

std::string StabilizerOperator::to_string() const
{
  std::string out = "K_" + std::to_string( vertex ) + " = ";
  if ( has_global_sign() )
    out += "-";
  out += "X_" + std::to_string( vertex );
  for ( auto t : tuples )
  {
    if ( t == 0 )
      continue;
    const auto members = set_members( t );
    std::string label;
    for ( auto v : members )
      label += ( label.empty() ? "" : "," ) + std::to_string( v );
    if ( members.size() == 1 )
      out += " Z_" + label;
    else
      out += " C^" + std::to_string( members.size() ) + "Z_{" + label + "}";
  }
  return out;
}

StabilizerOperator stabilizer( const Hypergraph& h, int vertex )
{
  return { vertex, neighbourhood( h, vertex ) };
}

SignState apply_stabilizer( const SignState& s, const StabilizerOperator& k )
{
  check_stabilizer( s.num_qubits(), k );
  auto out = s;
  const auto diagonal = superset_parity( s.num_qubits(), nonempty_tuples( k ) );
  for ( std::size_t w = 0; w < diagonal.words().size(); ++w )
    out.signs().words()[w] ^= diagonal.words()[w];
  out = apply_local_pauli( out, k.vertex, Pauli::X );
  if ( k.has_global_sign() )
    out.signs().complement();
  return out;
}

ComplexState apply_stabilizer( const ComplexState& s, const StabilizerOperator& k )
{
  check_stabilizer( s.num_qubits(), k );
  const auto diagonal = superset_parity( s.num_qubits(), nonempty_tuples( k ) );
  const auto bit = vertex_bit( k.vertex );
  const bool negate_all = k.has_global_sign();
  auto out = s;
  for ( std::uint64_t x = 0; x < out.dimension(); ++x )
  {
    const auto source = x ^ bit;
    out[x] = diagonal.get( source ) != negate_all ? -s[source] : s[source];
  }
  return out;
}

bool verify_stabilized( const Hypergraph& h )
{
  const auto state = build_state( h );
  for ( int i = 1; i <= h.num_vertices(); ++i )
    if ( apply_stabilizer( state, stabilizer( h, i ) ) != state )
      return false;
  return true;
}

double commutator_residual( const StateMap& a, const StateMap& b, const ComplexState& probe )
{
  const auto ab = a( b( probe ) );
  const auto ba = b( a( probe ) );
  check_same_size( ab.dimension(), ba.dimension() );
  double total = 0;
  for ( std::uint64_t x = 0; x < ab.dimension(); ++x )
    total += std::norm( ab[x] - ba[x] );
  return std::sqrt( total );
}

double commutator_residual( const StabilizerOperator& a, const StabilizerOperator& b, const ComplexState& probe )
{
  return commutator_residual(
      [&]( const ComplexState& s ) { return apply_stabilizer( s, a ); },
      [&]( const ComplexState& s ) { return apply_stabilizer( s, b ); },
      probe );
}

ComplexState random_state( int num_qubits, std::mt19937_64& rng )
{
  std::normal_distribution<double> gauss;
  std::vector<Amplitude> amps( std::uint64_t{ 1 } << num_qubits );
  double total = 0;
  for ( auto& a : amps )
  {
    a = { gauss( rng ), gauss( rng ) };
    total += std::norm( a );
  }
  const double scale = 1.0 / std::sqrt( total );
  for ( auto& a : amps )
    a *= scale;
  return ComplexState( num_qubits, std::move( amps ) );
}

bool uniqueness_check( const Hypergraph& h, std::mt19937_64& rng, int probes )
{
  if ( h.num_vertices() > 12 )
    throw invalid_input( "uniqueness check supports at most 12 qubits" );
  const auto target = to_complex( build_state( h ) );
  std::vector<StabilizerOperator> generators;
  for ( int i = 1; i <= h.num_vertices(); ++i )
    generators.push_back( stabilizer( h, i ) );

  int nonzero = 0;
  for ( int p = 0; p < probes; ++p )
  {
    auto image = random_state( h.num_vertices(), rng );
    for ( const auto& k : generators )
    {
      const auto flipped = apply_stabilizer( image, k );
      for ( std::uint64_t x = 0; x < image.dimension(); ++x )
        image[x] = 0.5 * ( image[x] + flipped[x] );
    }
    if ( std::sqrt( image.squared_norm() ) <= state_tolerance )
      continue;
    ++nonzero;

    Amplitude overlap = 0;
    for ( std::uint64_t x = 0; x < image.dimension(); ++x )
      overlap += std::conj( target[x] ) * image[x];
    double residual = 0;
    for ( std::uint64_t x = 0; x < image.dimension(); ++x )
      residual += std::norm( image[x] - overlap * target[x] );
    if ( std::sqrt( residual ) > state_tolerance )
      return false;
  }
  return nonzero > 0;
}

bool equal_up_to_global_phase( const ComplexState& a, const ComplexState& b )
{
  check_same_size( a.dimension(), b.dimension() );
  Amplitude overlap = 0;
  for ( std::uint64_t x = 0; x < a.dimension(); ++x )
    overlap += std::conj( b[x] ) * a[x];
  const double nb = b.squared_norm();
  if ( nb <= norm_tolerance )
    return a.squared_norm() <= norm_tolerance;
  const Amplitude scalar = overlap / nb;
  if ( std::abs( std::abs( scalar ) - 1.0 ) > state_tolerance )
    return false;
  double residual = 0;
  for ( std::uint64_t x = 0; x < a.dimension(); ++x )
    residual += std::norm( a[x] - scalar * b[x] );
  return std::sqrt( residual ) <= state_tolerance;
}

bool equal_up_to_global_phase( const SignState& a, const SignState& b )
{
  check_same_size( a.dimension(), b.dimension() );
  if ( a == b )
    return true;
  auto negated = b;
  negated.signs().complement();
  return a == negated;
}

std::string format_state( const SignState& s )
{
  std::string out = "n " + std::to_string( s.num_qubits() ) + " backend sign\n";
  for ( std::uint64_t x = 0; x < s.dimension(); ++x )
    out += std::to_string( x ) + ( s.sign( x ) > 0 ? " +1\n" : " -1\n" );
  return out;
}

std::string format_state( const ComplexState& s )
{
  std::string out = "n " + std::to_string( s.num_qubits() ) + " backend complex\n";
  char buffer[96];
  for ( std::uint64_t x = 0; x < s.dimension(); ++x )
  {
    std::snprintf( buffer, sizeof buffer, "%llu %.17g %.17g\n", static_cast<unsigned long long>( x ), s[x].real(), s[x].imag() );
    out += buffer;
  }
  return out;
}

std::variant<SignState, ComplexState> parse_state( std::string_view text )
{
  auto lines = detail::tokenize( text );
  if ( lines.empty() || lines[0].tokens.size() != 4 || lines[0].tokens[2] != "backend" )
    throw invalid_input( "expected header 'n <int> backend <sign|complex>'" );
  const int n = detail::parse_header( lines[0] );
  if ( n < 1 || n > max_table_vars )
    throw invalid_input( "qubit count out of range" );
  const auto backend = lines[0].tokens[3];
  const std::uint64_t dim = std::uint64_t{ 1 } << n;
  if ( lines.size() != dim + 1 )
    throw invalid_input( "state dump must list all 2^n basis labels" );

  auto label = [&]( const detail::Line& line, std::uint64_t expected ) {
    if ( detail::parse_int<std::uint64_t>( line.tokens[0], line.number ) != expected )
      throw invalid_input( "line " + std::to_string( line.number ) + ": basis labels must be listed in order" );
  };

  if ( backend == "sign" )
  {
    TruthTable signs( n );
    for ( std::uint64_t x = 0; x < dim; ++x )
    {
      const auto& line = lines[x + 1];
      if ( line.tokens.size() != 2 )
        throw invalid_input( "line " + std::to_string( line.number ) + ": expected 'x sign'" );
      label( line, x );
      if ( line.tokens[1] == "-1" )
        signs.set( x, true );
      else if ( line.tokens[1] != "+1" && line.tokens[1] != "1" )
        throw invalid_input( "line " + std::to_string( line.number ) + ": sign must be +1 or -1" );
    }
    return SignState( std::move( signs ) );
  }
  if ( backend == "complex" )
  {
    std::vector<Amplitude> amps( dim );
    for ( std::uint64_t x = 0; x < dim; ++x )
    {
      const auto& line = lines[x + 1];
      if ( line.tokens.size() != 3 )
        throw invalid_input( "line " + std::to_string( line.number ) + ": expected 'x re im'" );
      label( line, x );
      try
      {
        amps[x] = { std::stod( std::string( line.tokens[1] ) ), std::stod( std::string( line.tokens[2] ) ) };
      }
      catch ( const std::logic_error& )
      {
        throw invalid_input( "line " + std::to_string( line.number ) + ": malformed amplitude" );
      }
    }
    return ComplexState( n, std::move( amps ) );
  }
  throw invalid_input( "unknown backend '" + std::string( backend ) + "'" );
}

} // namespace hgs
