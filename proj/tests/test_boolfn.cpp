#include <doctest.h>

#include "hgs/boolfn.hpp"
#include "hgs/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hgs;

TEST_CASE( "hex parsing places bit x at nibble x/4 from the right" )
{
  SUBCASE( "zero function" )
  {
    const auto tt = truth_table_from_hex( "00", 3 );
    CHECK( tt.is_zero() );
  }
  SUBCASE( "single marked label" )
  {
    const auto tt = truth_table_from_hex( "80", 3 );
    for ( std::uint64_t x = 0; x < 8; ++x )
      CHECK( tt.get( x ) == ( x == 7 ) );
  }
  SUBCASE( "F8 sets labels 3..7" )
  {
    const auto tt = truth_table_from_hex( "F8", 3 );
    for ( std::uint64_t x = 0; x < 8; ++x )
      CHECK( tt.get( x ) == ( x >= 3 ) );
  }
  SUBCASE( "the mixed example has minus signs on 1,3,5,6,7" )
  {
    const auto tt = fixtures::mixed_table();
    const std::set<std::uint64_t> minus{ 1, 3, 5, 6, 7 };
    for ( std::uint64_t x = 0; x < 8; ++x )
      CHECK( tt.get( x ) == ( minus.count( x ) == 1 ) );
  }
  SUBCASE( "lower case digits and multi-word tables" )
  {
    std::string hex( 32, '0' );
    hex[0] = 'a'; // labels 125 and 127
    const auto tt = truth_table_from_hex( hex, 7 );
    CHECK( tt.count_ones() == 2 );
    CHECK( tt.get( 125 ) );
    CHECK( tt.get( 127 ) );
    CHECK( to_hex( tt ) == "A" + std::string( 31, '0' ) );
  }
}

TEST_CASE( "hex parsing errors" )
{
  CHECK_THROWS_AS( truth_table_from_hex( "0", 3 ), invalid_input );
  CHECK_THROWS_AS( truth_table_from_hex( "000", 3 ), invalid_input );
  CHECK_THROWS_AS( truth_table_from_hex( "0G", 3 ), invalid_input );
  CHECK_THROWS_AS( truth_table_from_hex( "0", 0 ), invalid_input );
  CHECK_THROWS_AS( truth_table_from_hex( "0", 21 ), invalid_input );
  CHECK_THROWS_AS( truth_table_from_hex( "4", 1 ), invalid_input );
  CHECK( truth_table_from_hex( "3", 1 ).count_ones() == 2 );
}

TEST_CASE( "table text format" )
{
  const auto tt = parse_truth_table( "n 3\nEA\n" );
  CHECK( tt == fixtures::mixed_table() );
  CHECK( format_truth_table( tt ) == "n 3\nEA\n" );
  CHECK( parse_truth_table( "# comment\nn 3  \n  80 # marked\n" ) == fixtures::grover_table() );
  CHECK_THROWS_AS( parse_truth_table( "n 3\n" ), invalid_input );
  CHECK_THROWS_AS( parse_truth_table( "m 3\n80\n" ), invalid_input );
  CHECK_THROWS_AS( parse_truth_table( "n 3\n80\n80\n" ), invalid_input );
}

TEST_CASE( "mobius transform" )
{
  SUBCASE( "zero function has no monomials" )
  {
    const auto ms = mobius_transform( TruthTable( 3 ) );
    CHECK( ms.monomials.empty() );
    CHECK_FALSE( ms.constant );
  }
  SUBCASE( "single marked label is the top monomial" )
  {
    const auto tt = fixtures::grover_table();
    const auto coeffs = oracle::mobius_by_subset_sums( tt );
    for ( std::uint64_t s = 0; s < 7; ++s )
      CHECK_FALSE( coeffs[s] );
    CHECK( coeffs[7] );

    const auto ms = mobius_transform( tt );
    CHECK( ms.monomials == std::vector<VertexSet>{ make_set( { 1, 2, 3 } ) } );
    CHECK_FALSE( ms.constant );
  }
  SUBCASE( "mixed example" )
  {
    const auto ms = mobius_transform( fixtures::mixed_table() );
    CHECK( ms.monomials == fixtures::mixed_graph().edges() );
    CHECK_FALSE( ms.constant );
  }
  SUBCASE( "constant term" )
  {
    auto tt = fixtures::mixed_table();
    tt.complement();
    const auto ms = mobius_transform( tt );
    CHECK( ms.constant );
    CHECK( ms.monomials == fixtures::mixed_graph().edges() );
  }
  SUBCASE( "F8 under the least-significant-qubit-1 convention" )
  {
    const auto ms = mobius_transform( truth_table_from_hex( "F8", 3 ) );
    CHECK( ms.monomials == std::vector<VertexSet>{ make_set( { 1, 2 } ), make_set( { 3 } ), make_set( { 1, 2, 3 } ) } );
  }
  SUBCASE( "agrees with subset sums on every 3-variable table" )
  {
    for ( std::uint64_t bits = 0; bits < 256; ++bits )
    {
      const auto tt = gen::table_from_bits( 3, bits );
      const auto coeffs = oracle::mobius_by_subset_sums( tt );
      const auto ms = mobius_transform( tt );
      CHECK( ms.constant == coeffs[0] );
      std::vector<VertexSet> expected;
      for ( VertexSet s = 1; s < 8; ++s )
        if ( coeffs[s] )
          expected.push_back( s );
      CHECK( ms.monomials == expected );
    }
  }
  SUBCASE( "word-level butterfly stages at n=8" )
  {
    std::mt19937_64 rng( 7 );
    const auto tt = gen::random_table( 8, rng );
    const auto coeffs = oracle::mobius_by_subset_sums( tt );
    auto words = tt;
    mobius_inplace( words.words(), 8 );
    for ( std::uint64_t s = 0; s < 256; ++s )
      CHECK( words.get( s ) == coeffs[s] );
  }
}

TEST_CASE( "evaluate_anf" )
{
  const MonomialSet empty{ 3, {}, false };
  for ( std::uint64_t x = 0; x < 8; ++x )
    CHECK_FALSE( evaluate_anf( empty, x ) );

  const MonomialSet top{ 3, { make_set( { 1, 2, 3 } ) }, false };
  CHECK( evaluate_anf( top, 7 ) );
  CHECK_FALSE( evaluate_anf( top, 6 ) );

  const MonomialSet mixed{ 3, fixtures::mixed_graph().edges(), false };
  // x = 5: qubits 1 and 3; only {1} is contained
  CHECK( evaluate_anf( mixed, 5 ) );

  CHECK_THROWS_AS( evaluate_anf( mixed, 8 ), invalid_input );
}
