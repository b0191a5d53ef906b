#include <doctest.h>

#include <cmath>

#include "hgs/fixtures.hpp"
#include "hgs/statesim.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hgs;

namespace
{

bool same_vector( const ComplexState& a, const Eigen::VectorXcd& b, double tol = 1e-12 )
{
  for ( std::uint64_t x = 0; x < a.dimension(); ++x )
    if ( std::abs( a[x] - b( x ) ) > tol )
      return false;
  return true;
}

} // namespace

TEST_CASE( "build_state" )
{
  SUBCASE( "empty graph is |+++>" )
  {
    const auto s = build_state( Hypergraph( 3 ) );
    for ( std::uint64_t x = 0; x < 8; ++x )
      CHECK( s.amplitude( x ) == doctest::Approx( 1.0 / std::sqrt( 8.0 ) ).epsilon( 1e-15 ) );
    CHECK( to_complex( s ).squared_norm() == doctest::Approx( 1.0 ).epsilon( 1e-12 ) );
  }
  SUBCASE( "full 3-edge marks |111>" )
  {
    const auto s = build_state( fixtures::grover_graph() );
    for ( std::uint64_t x = 0; x < 8; ++x )
      CHECK( s.sign( x ) == ( x == 7 ? -1 : 1 ) );
  }
  SUBCASE( "mixed graph reproduces its table" )
  {
    CHECK( build_state( fixtures::mixed_graph() ).signs() == fixtures::mixed_table() );
  }
  SUBCASE( "matches the parity oracle" )
  {
    std::mt19937_64 rng( 3 );
    for ( int trial = 0; trial < 50; ++trial )
    {
      const auto h = gen::random_hypergraph( gen::uniform_int( rng, 1, 8 ), rng );
      const auto s = build_state( h );
      const auto expected = oracle::sign_vector( h );
      for ( std::uint64_t x = 0; x < s.dimension(); ++x )
        CHECK( s.sign( x ) == expected[x] );
      CHECK( s.sign( 0 ) == 1 );
    }
  }
  SUBCASE( "too many qubits" )
  {
    CHECK_THROWS_AS( build_state( Hypergraph( 21 ) ), invalid_input );
  }
}

TEST_CASE( "apply_ckz" )
{
  const auto e12 = make_set( { 1, 2 } );
  SUBCASE( "involution" )
  {
    const auto s = build_state( fixtures::mixed_graph() );
    CHECK( apply_ckz( apply_ckz( s, e12 ), e12 ) == s );
  }
  SUBCASE( "C^2Z on |++> is diag(1,1,1,-1)" )
  {
    const auto s = apply_ckz( plus_state( 2 ), e12 );
    CHECK( s.sign( 0 ) == 1 );
    CHECK( s.sign( 1 ) == 1 );
    CHECK( s.sign( 2 ) == 1 );
    CHECK( s.sign( 3 ) == -1 );
  }
  SUBCASE( "C^1Z_1 on |+++> negates odd labels" )
  {
    const auto s = apply_ckz( plus_state( 3 ), make_set( { 1 } ) );
    for ( std::uint64_t x = 0; x < 8; ++x )
      CHECK( s.sign( x ) == ( x % 2 ? -1 : 1 ) );
  }
  SUBCASE( "complex backend agrees with the dense diagonal" )
  {
    std::mt19937_64 rng( 5 );
    const auto psi = random_state( 4, rng );
    const auto e = make_set( { 2, 4 } );
    CHECK( same_vector( apply_ckz( psi, e ), oracle::ckz_operator( 4, e ) * oracle::to_vector( psi ) ) );
  }
  SUBCASE( "invalid support" )
  {
    CHECK_THROWS_AS( apply_ckz( plus_state( 2 ), 0 ), invalid_input );
    CHECK_THROWS_AS( apply_ckz( plus_state( 2 ), make_set( { 3 } ) ), invalid_input );
  }
}

TEST_CASE( "apply_local_pauli" )
{
  std::mt19937_64 rng( 11 );
  const auto psi = random_state( 3, rng );

  SUBCASE( "Z twice is the identity" )
  {
    const auto twice = apply_local_pauli( apply_local_pauli( psi, 2, Pauli::Z ), 2, Pauli::Z );
    CHECK( same_vector( twice, oracle::to_vector( psi ), 0.0 ) );
  }
  SUBCASE( "each Pauli matches its Kronecker product" )
  {
    for ( auto p : { Pauli::I, Pauli::X, Pauli::Y, Pauli::Z } )
      for ( int q = 1; q <= 3; ++q )
        CHECK( same_vector( apply_local_pauli( psi, q, p ), oracle::local_operator( 3, q, p ) * oracle::to_vector( psi ) ) );
  }
  SUBCASE( "Y = i X Z" )
  {
    auto xz = apply_local_pauli( apply_local_pauli( psi, 1, Pauli::Z ), 1, Pauli::X );
    for ( auto& a : xz.amplitudes() )
      a *= Amplitude( 0, 1 );
    CHECK( same_vector( apply_local_pauli( psi, 1, Pauli::Y ), oracle::to_vector( xz ) ) );
  }
  SUBCASE( "X_1 on the single-edge graph state gives edges {1,2},{2}" )
  {
    const auto e12 = make_set( { 1, 2 } );
    const auto moved = apply_local_pauli( to_complex( build_state( Hypergraph( 2, { e12 } ) ) ), 1, Pauli::X );
    const auto expected = to_complex( build_state( Hypergraph( 2, { e12, make_set( { 2 } ) } ) ) );
    CHECK( equal_up_to_global_phase( moved, expected ) );
    // dense oracle agrees
    const Eigen::VectorXcd dense = oracle::local_operator( 2, 1, Pauli::X ) * oracle::to_vector( build_state( Hypergraph( 2, { e12 } ) ) );
    CHECK( same_vector( moved, dense ) );
    // sign backend gives the same result exactly
    const auto exact = apply_local_pauli( build_state( Hypergraph( 2, { e12 } ) ), 1, Pauli::X );
    CHECK( equal_up_to_global_phase( exact, build_state( Hypergraph( 2, { e12, make_set( { 2 } ) } ) ) ) );
  }
  SUBCASE( "sign backend refuses Y" )
  {
    CHECK_THROWS_AS( apply_local_pauli( plus_state( 2 ), 1, Pauli::Y ), invalid_input );
    const auto y = apply_local_pauli_up_to_phase( build_state( fixtures::mixed_graph() ), 2, Pauli::Y );
    const auto dense = apply_local_pauli( to_complex( build_state( fixtures::mixed_graph() ) ), 2, Pauli::Y );
    CHECK( equal_up_to_global_phase( to_complex( y ), dense ) );
  }
  SUBCASE( "invalid qubit" )
  {
    CHECK_THROWS_AS( apply_local_pauli( psi, 0, Pauli::X ), invalid_input );
    CHECK_THROWS_AS( apply_local_pauli( psi, 4, Pauli::X ), invalid_input );
  }
}

TEST_CASE( "stabilizer construction" )
{
  CHECK( stabilizer( Hypergraph( 3 ), 2 ).tuples.empty() );
  CHECK( stabilizer( Hypergraph( 3 ), 2 ).to_string() == "K_2 = X_2" );

  const auto k1 = stabilizer( fixtures::triangle_graph(), 1 );
  CHECK( k1.tuples == std::vector<VertexSet>{ make_set( { 2 } ), make_set( { 3 } ) } );
  CHECK( k1.to_string() == "K_1 = X_1 Z_2 Z_3" );

  const auto k4 = stabilizer( fixtures::seven_vertex_graph(), 4 );
  CHECK( k4.to_string() == "K_4 = X_4 Z_1 C^3Z_{2,3,5} C^6Z_{1,2,3,5,6,7}" );

  CHECK( stabilizer( fixtures::mixed_graph(), 1 ).to_string() == "K_1 = -X_1 C^2Z_{2,3}" );
  CHECK_THROWS_AS( stabilizer( fixtures::triangle_graph(), 4 ), invalid_input );
}

TEST_CASE( "apply_stabilizer" )
{
  SUBCASE( "fixes its own state" )
  {
    for ( const auto& h : { fixtures::mixed_graph(), fixtures::seven_vertex_graph(), fixtures::triangle_graph() } )
    {
      const auto s = build_state( h );
      for ( int i = 1; i <= h.num_vertices(); ++i )
        CHECK( apply_stabilizer( s, stabilizer( h, i ) ) == s );
    }
  }
  SUBCASE( "bare X squared" )
  {
    std::mt19937_64 rng( 1 );
    const auto psi = random_state( 3, rng );
    const auto k = stabilizer( Hypergraph( 3 ), 2 );
    CHECK( same_vector( apply_stabilizer( apply_stabilizer( psi, k ), k ), oracle::to_vector( psi ), 0.0 ) );
  }
  SUBCASE( "the empty tuple contributes -1" )
  {
    const Hypergraph h( 1, { make_set( { 1 } ) } );
    const auto minus = build_state( h ); // |->
    CHECK( minus.sign( 0 ) == 1 );
    CHECK( minus.sign( 1 ) == -1 );
    const auto k = stabilizer( h, 1 );
    CHECK( k.has_global_sign() );
    CHECK( apply_stabilizer( minus, k ) == minus );
    // without the -1 the state would flip sign
    CHECK( apply_local_pauli( minus, 1, Pauli::X ) != minus );
  }
  SUBCASE( "matches the dense operator" )
  {
    std::mt19937_64 rng( 9 );
    for ( int trial = 0; trial < 20; ++trial )
    {
      const int n = gen::uniform_int( rng, 1, 5 );
      const auto h = gen::random_hypergraph( n, rng );
      const auto psi = random_state( n, rng );
      for ( int i = 1; i <= n; ++i )
      {
        const auto k = stabilizer( h, i );
        CHECK( same_vector( apply_stabilizer( psi, k ), oracle::stabilizer_operator( n, k ) * oracle::to_vector( psi ) ) );
      }
    }
  }
  SUBCASE( "dimension mismatch" )
  {
    CHECK_THROWS_AS( apply_stabilizer( plus_state( 2 ), stabilizer( fixtures::mixed_graph(), 3 ) ), invalid_input );
  }
}

TEST_CASE( "verify_stabilized" )
{
  for ( std::uint64_t choice = 0; choice < 128; ++choice )
    CHECK( verify_stabilized( gen::hypergraph_from_index( 3, choice ) ) );
  CHECK( verify_stabilized( fixtures::seven_vertex_graph() ) );

  // neighbourhoods taken from a different graph must fail
  const auto state = build_state( fixtures::mixed_graph() );
  bool all_fixed = true;
  for ( int i = 1; i <= 3; ++i )
    all_fixed = all_fixed && apply_stabilizer( state, stabilizer( fixtures::triangle_graph(), i ) ) == state;
  CHECK_FALSE( all_fixed );
}

TEST_CASE( "commutator_residual" )
{
  std::mt19937_64 rng( 21 );
  SUBCASE( "triangle stabilizers commute" )
  {
    const auto probe = random_state( 3, rng );
    for ( int a = 1; a <= 3; ++a )
      for ( int b = 1; b <= 3; ++b )
        CHECK( commutator_residual( stabilizer( fixtures::triangle_graph(), a ), stabilizer( fixtures::triangle_graph(), b ), probe ) == 0.0 );
  }
  SUBCASE( "seven-vertex stabilizers commute on 100 probes" )
  {
    const auto h = fixtures::seven_vertex_graph();
    for ( int p = 0; p < 100; ++p )
    {
      const auto probe = random_state( 7, rng );
      for ( int a = 1; a <= 7; ++a )
        for ( int b = a + 1; b <= 7; ++b )
          REQUIRE( commutator_residual( stabilizer( h, a ), stabilizer( h, b ), probe ) == 0.0 );
    }
  }
  SUBCASE( "X and Z anticommute" )
  {
    ComplexState zero( 1, { 1.0, 0.0 } );
    const StateMap x = []( const ComplexState& s ) { return apply_local_pauli( s, 1, Pauli::X ); };
    const StateMap z = []( const ComplexState& s ) { return apply_local_pauli( s, 1, Pauli::Z ); };
    // (XZ - ZX)|0> = 2|1>
    CHECK( commutator_residual( x, z, zero ) == doctest::Approx( 2.0 ) );
  }
}

TEST_CASE( "uniqueness_check" )
{
  std::mt19937_64 rng( 17 );
  CHECK( uniqueness_check( Hypergraph( 2 ), rng ) );
  for ( std::uint64_t choice = 0; choice < 128; ++choice )
    CHECK( uniqueness_check( gen::hypergraph_from_index( 3, choice ), rng ) );
  CHECK( uniqueness_check( fixtures::mixed_graph(), rng ) );
  CHECK_THROWS_AS( uniqueness_check( Hypergraph( 13 ), rng ), invalid_input );
}

TEST_CASE( "equal_up_to_global_phase" )
{
  std::mt19937_64 rng( 2 );
  const auto s = random_state( 3, rng );
  auto negated = s;
  auto rotated = s;
  for ( auto& a : negated.amplitudes() )
    a = -a;
  for ( auto& a : rotated.amplitudes() )
    a *= Amplitude( 0, 1 );
  CHECK( equal_up_to_global_phase( s, negated ) );
  CHECK( equal_up_to_global_phase( s, rotated ) );

  const auto grover = build_state( fixtures::grover_graph() );
  const auto mixed = build_state( fixtures::mixed_graph() );
  CHECK_FALSE( equal_up_to_global_phase( grover, mixed ) );
  CHECK_FALSE( equal_up_to_global_phase( to_complex( grover ), to_complex( mixed ) ) );
  auto flipped = grover;
  flipped.signs().complement();
  CHECK( equal_up_to_global_phase( grover, flipped ) );

  CHECK_THROWS_AS( equal_up_to_global_phase( plus_state( 2 ), plus_state( 3 ) ), invalid_input );
}

TEST_CASE( "state dump format" )
{
  const auto s = build_state( fixtures::grover_graph() );
  const auto text = format_state( s );
  CHECK( text.rfind( "n 3 backend sign\n0 +1\n", 0 ) == 0 );
  CHECK( text.find( "7 -1\n" ) != std::string::npos );
  CHECK( std::get<SignState>( parse_state( text ) ) == s );

  std::mt19937_64 rng( 4 );
  const auto c = random_state( 2, rng );
  const auto back = std::get<ComplexState>( parse_state( format_state( c ) ) );
  CHECK( same_vector( back, oracle::to_vector( c ), 0.0 ) );

  CHECK_THROWS_AS( parse_state( "n 1 backend sign\n0 +1\n" ), invalid_input );
  CHECK_THROWS_AS( parse_state( "n 1 backend sign\n1 +1\n0 +1\n" ), invalid_input );
  CHECK_THROWS_AS( parse_state( "n 1 backend qubit\n0 +1\n1 +1\n" ), invalid_input );
  CHECK_THROWS_AS( parse_state( "n 1 backend sign\n0 +1\n1 2\n" ), invalid_input );
}
