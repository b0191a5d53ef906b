#pragma once

#include "hgs/boolfn.hpp"
#include "hgs/hypergraph.hpp"

/// Reference states used by the self test, the unit tests and the
/// acceptance suite.
namespace hgs::fixtures
{

/// Three-qubit Grover state: a single minus sign on |111>.
inline TruthTable grover_table()
{
  return truth_table_from_hex( "80", 3 );
}

inline Hypergraph grover_graph()
{
  return Hypergraph( 3, { make_set( { 1, 2, 3 } ) } );
}

/// Minus signs on the kets 011, 100, 101, 110, 111 written with qubit 1
/// leftmost. With qubit 1 as the least significant bit of the label these
/// are x = 6, 1, 5, 3, 7.
inline TruthTable mixed_table()
{
  return truth_table_from_hex( "EA", 3 );
}

/// Hypergraph of `mixed_table`: Z_1, C^2Z_23 and C^3Z_123.
inline Hypergraph mixed_graph()
{
  return Hypergraph( 3, { make_set( { 1 } ), make_set( { 2, 3 } ), make_set( { 1, 2, 3 } ) } );
}

/// `mixed_table` with the sign of |111> flipped to plus: balanced.
inline TruthTable balanced_table()
{
  return truth_table_from_hex( "6A", 3 );
}

/// Seven vertices with edges of order 1, 2, 4 and 7; vertex 4 has the
/// neighbourhood {1}, {2,3,5}, {1,2,3,5,6,7}.
inline Hypergraph seven_vertex_graph()
{
  return Hypergraph( 7, { make_set( { 6 } ), make_set( { 1, 4 } ), make_set( { 2, 3, 4, 5 } ),
                          make_set( { 1, 2, 3, 4, 5, 6, 7 } ) } );
}

inline Hypergraph triangle_graph()
{
  return Hypergraph( 3, { make_set( { 1, 2 } ), make_set( { 2, 3 } ), make_set( { 1, 3 } ) } );
}

} // namespace hgs::fixtures
