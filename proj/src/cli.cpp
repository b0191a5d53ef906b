#include "hgs/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hgs/boolfn.hpp"
#include "hgs/entanglement.hpp"
#include "hgs/extract.hpp"
#include "hgs/fixtures.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/orbits.hpp"
#include "hgs/statesim.hpp"

namespace hgs
{

namespace
{

std::string read_input( const std::string& path )
{
  std::ostringstream buffer;
  if ( path == "-" )
  {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in( path );
  if ( !in )
    throw invalid_input( "cannot open '" + path + "'" );
  buffer << in.rdbuf();
  return buffer.str();
}

/// A truth table, or the signs of a sign-backend state dump.
TruthTable read_table( const std::string& text )
{
  if ( text.find( "backend" ) != std::string::npos )
  {
    auto state = parse_state( text );
    if ( auto* s = std::get_if<SignState>( &state ) )
      return s->signs();
    throw invalid_input( "only sign-backend state dumps can be read as tables" );
  }
  return parse_truth_table( text );
}

std::string format_double( double value )
{
  char buffer[64];
  std::snprintf( buffer, sizeof buffer, "%.12g", std::abs( value ) < 1e-15 ? 0.0 : value );
  return buffer;
}

int cmd_build( const std::string& path, std::ostream& out )
{
  out << format_state( build_state( parse_hypergraph( read_input( path ) ) ) );
  return exit_ok;
}

int cmd_extract( const std::string& path, const std::string& method, std::ostream& out, std::ostream& err )
{
  const auto tt = read_table( read_input( path ) );
  if ( method == "layered" )
  {
    out << format_hypergraph( extract_layered( tt ) );
    return exit_ok;
  }
  if ( method == "fast" )
  {
    out << format_hypergraph( extract_fast( tt ) );
    return exit_ok;
  }
  const auto layered = extract_layered( tt );
  if ( layered != extract_fast( tt ) )
  {
    err << "error: layered and fast extraction disagree\n";
    return exit_failure;
  }
  out << format_hypergraph( layered );
  return exit_ok;
}

int cmd_verify( const std::string& path, std::uint64_t seed, std::ostream& out )
{
  const auto h = parse_hypergraph( read_input( path ) );
  const auto state = build_state( h );
  std::mt19937_64 rng( seed );
  bool ok = true;

  std::vector<StabilizerOperator> generators;
  for ( int i = 1; i <= h.num_vertices(); ++i )
  {
    generators.push_back( stabilizer( h, i ) );
    const bool pass = apply_stabilizer( state, generators.back() ) == state;
    ok = ok && pass;
    out << generators.back().to_string() << "  " << ( pass ? "pass" : "FAIL" ) << "\n";
  }

  constexpr int probes = 10;
  double worst = 0;
  for ( int p = 0; p < probes; ++p )
  {
    const auto probe = random_state( h.num_vertices(), rng );
    for ( std::size_t a = 0; a < generators.size(); ++a )
      for ( std::size_t b = a + 1; b < generators.size(); ++b )
        worst = std::max( worst, commutator_residual( generators[a], generators[b], probe ) );
  }
  ok = ok && worst == 0.0;
  out << "commutator max_residual " << format_double( worst ) << " probes " << probes << "\n";

  if ( h.num_vertices() <= 12 )
  {
    const bool unique = uniqueness_check( h, rng );
    ok = ok && unique;
    out << "uniqueness " << ( unique ? "pass" : "FAIL" ) << "\n";
  }
  else
    out << "uniqueness skipped (n > 12)\n";
  return ok ? exit_ok : exit_failure;
}

int cmd_classify( const std::string& graph_path, const std::string& table_path, std::ostream& out )
{
  if ( !table_path.empty() )
  {
    const auto report = classify_balance( read_table( read_input( table_path ) ) );
    out << to_string( report.balance ) << "\n";
    out << "minus_signs " << report.minus_signs << " parity " << ( report.minus_signs % 2 ? "odd" : "even" ) << "\n";
    out << "full_edge " << ( report.full_edge ? "present" : "absent" ) << "\n";
    return exit_ok;
  }
  if ( graph_path.empty() )
    throw invalid_input( "classify needs a graph file or --table <file>" );
  out << classify_uniformity( parse_hypergraph( read_input( graph_path ) ) ).to_string() << "\n";
  return exit_ok;
}

SignState read_any_state( const std::string& text )
{
  try
  {
    return build_state( parse_hypergraph( text ) );
  }
  catch ( const invalid_input& graph_error )
  {
    try
    {
      return SignState( read_table( text ) );
    }
    catch ( const invalid_input& )
    {
      throw invalid_input( std::string( "not a hypergraph or truth table file: " ) + graph_error.what() );
    }
  }
}

int cmd_entangle( const std::string& path, bool product, int restarts, int sweeps, std::uint64_t seed, std::ostream& out )
{
  const auto state = read_any_state( read_input( path ) );
  const auto report = genuine_multipartite_geometric( state );
  std::string text = report.to_string();
  if ( product )
  {
    std::mt19937_64 rng( seed );
    ProductOverlapOptions options;
    options.restarts = restarts;
    options.sweeps = sweeps;
    const double overlap = product_overlap( to_complex( state ), rng, options );
    const auto e2_line = text.rfind( "E2 " );
    text.insert( e2_line, "product " + format_double( overlap ) + "\n" );
  }
  out << text;
  return exit_ok;
}

int cmd_orbit( int n, std::ostream& out )
{
  const auto report = class_inequivalence_report( n );
  out << report.to_string();
  return report.violations.empty() ? exit_ok : exit_failure;
}

int cmd_count( int n, int k, std::ostream& out )
{
  out << ( k == 0 ? count_all_states( n ) : count_uniform_states( n, k ) ).to_string() << "\n";
  return exit_ok;
}

int cmd_dot( const std::string& path, std::ostream& out )
{
  out << to_dot( parse_hypergraph( read_input( path ) ) );
  return exit_ok;
}

} // namespace

int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Exact simulator and analysis toolkit for quantum hypergraph states", "hgs" };
  app.require_subcommand( 1 );
  std::uint64_t seed = default_seed;
  app.add_option( "--seed", seed, "Seed for every randomized check" );

  std::string graph_path, table_path, method = "both";
  int n = 0, k = 0, restarts = 32, sweeps = 200;
  bool product = false;

  auto* build = app.add_subcommand( "build", "Print the state vector of a hypergraph" );
  build->add_option( "graph", graph_path, "Hypergraph file ('-' for stdin)" )->required();

  auto* extract = app.add_subcommand( "extract", "Recover the hypergraph of a truth table or sign-state dump" );
  extract->add_option( "table", table_path, "Truth table or state dump ('-' for stdin)" )->required();
  extract->add_option( "--method", method, "layered, fast or both" )->check( CLI::IsMember( { "layered", "fast", "both" } ) );

  auto* verify = app.add_subcommand( "verify", "Check stabilizers, commutators and uniqueness" );
  verify->add_option( "graph", graph_path, "Hypergraph file" )->required();

  auto* classify = app.add_subcommand( "classify", "Uniformity class of a hypergraph, or balance of a table" );
  classify->add_option( "graph", graph_path, "Hypergraph file" );
  classify->add_option( "--table", table_path, "Truth table file" );

  auto* entangle = app.add_subcommand( "entangle", "Bipartition report and E2" );
  entangle->add_option( "file", graph_path, "Hypergraph or truth table file" )->required();
  entangle->add_flag( "--product", product, "Also run the product-state overlap optimizer" );
  entangle->add_option( "--restarts", restarts, "Optimizer restarts" )->check( CLI::PositiveNumber );
  entangle->add_option( "--sweeps", sweeps, "Optimizer sweeps per restart" )->check( CLI::PositiveNumber );

  auto* orbit = app.add_subcommand( "orbit", "Local Pauli class inequivalence report" );
  orbit->add_option( "--n", n, "Qubit count (3 or 4)" )->required();

  auto* count = app.add_subcommand( "count", "Number of hypergraph states" );
  count->add_option( "--n", n, "Vertex count" )->required();
  count->add_option( "--k", k, "Restrict to k-uniform hypergraphs" );

  auto* dot = app.add_subcommand( "dot", "Render a hypergraph as Graphviz DOT" );
  dot->add_option( "graph", graph_path, "Hypergraph file" )->required();

  auto* selftest = app.add_subcommand( "selftest", "Run the golden reference suite" );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( build->parsed() )
      return cmd_build( graph_path, out );
    if ( extract->parsed() )
      return cmd_extract( table_path, method, out, err );
    if ( verify->parsed() )
      return cmd_verify( graph_path, seed, out );
    if ( classify->parsed() )
      return cmd_classify( graph_path, table_path, out );
    if ( entangle->parsed() )
      return cmd_entangle( graph_path, product, restarts, sweeps, seed, out );
    if ( orbit->parsed() )
      return cmd_orbit( n, out );
    if ( count->parsed() )
    {
      if ( count->count( "--k" ) && k < 1 )
        throw invalid_input( "k must lie in 1..n" );
      return cmd_count( n, k, out );
    }
    if ( dot->parsed() )
      return cmd_dot( graph_path, out );
    if ( selftest->parsed() )
      return run_selftest( seed, out ) ? exit_ok : exit_failure;
  }
  catch ( const invalid_input& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

bool run_selftest( std::uint64_t seed, std::ostream& out )
{
  std::mt19937_64 rng( seed );
  bool all = true;
  auto check = [&]( const std::string& name, auto&& body ) {
    bool pass = false;
    try
    {
      pass = body();
    }
    catch ( const std::exception& )
    {
      pass = false;
    }
    all = all && pass;
    out << ( pass ? "PASS " : "FAIL " ) << name << "\n";
  };

  check( "grover-extract", [] {
    const auto tt = fixtures::grover_table();
    return extract_layered( tt ) == fixtures::grover_graph() && extract_fast( tt ) == fixtures::grover_graph();
  } );
  check( "grover-build", [] { return build_state( fixtures::grover_graph() ).signs() == fixtures::grover_table(); } );
  check( "grover-e2", [] {
    const auto report = genuine_multipartite_geometric( build_state( fixtures::grover_graph() ) );
    bool ok = report.cuts.size() == 3 && std::abs( report.e2 - 0.25 ) <= 1e-9;
    for ( const auto& cut : report.cuts )
      ok = ok && std::abs( cut.lambda_max - 0.75 ) <= 1e-10;
    return ok;
  } );
  check( "mixed-extract", [] {
    const auto tt = fixtures::mixed_table();
    return extract_layered( tt ) == fixtures::mixed_graph() && extract_fast( tt ) == fixtures::mixed_graph();
  } );
  check( "mixed-rebuild", [] { return build_state( fixtures::mixed_graph() ).signs() == fixtures::mixed_table(); } );
  check( "mixed-classify", [] {
    const auto c = classify_uniformity( fixtures::mixed_graph() );
    return c.kind == UniformityClass::Kind::Mixed && c.orders == std::set<int>{ 1, 2, 3 };
  } );
  check( "mixed-stabilizers", [&] { return verify_stabilized( fixtures::mixed_graph() ) && uniqueness_check( fixtures::mixed_graph(), rng ); } );
  check( "balanced-variant", [] {
    const auto report = classify_balance( fixtures::balanced_table() );
    return report.balance == Balance::Balanced && !report.full_edge &&
           extract_fast( fixtures::balanced_table() ) == toggle_edge( fixtures::mixed_graph(), full_set( 3 ) );
  } );
  check( "seven-vertex-neighbourhood", [] {
    const std::vector<VertexSet> expected{ make_set( { 1 } ), make_set( { 2, 3, 5 } ), make_set( { 1, 2, 3, 5, 6, 7 } ) };
    auto got = neighbourhood( fixtures::seven_vertex_graph(), 4 );
    return got == expected;
  } );
  check( "seven-vertex-stabilizers", [&] {
    const auto h = fixtures::seven_vertex_graph();
    if ( !verify_stabilized( h ) )
      return false;
    for ( int p = 0; p < 10; ++p )
    {
      const auto probe = random_state( h.num_vertices(), rng );
      for ( int a = 1; a <= 7; ++a )
        for ( int b = a + 1; b <= 7; ++b )
          if ( commutator_residual( stabilizer( h, a ), stabilizer( h, b ), probe ) != 0.0 )
            return false;
    }
    return true;
  } );
  check( "count-formulas", [] {
    return count_all_states( 3 ).to_string() == "128" && count_uniform_states( 3, 2 ).to_string() == "8" &&
           count_all_states( 4 ).to_string() == "32768";
  } );
  check( "count-enumeration", [] {
    std::set<std::vector<std::uint64_t>> distinct;
    for ( std::uint32_t choice = 0; choice < 128; ++choice )
    {
      std::vector<VertexSet> edges;
      for ( VertexSet e = 1; e < 8; ++e )
        if ( ( choice >> ( e - 1 ) ) & 1u )
          edges.push_back( e );
      const auto s = build_state( Hypergraph( 3, edges ) );
      distinct.insert( { s.signs().words().begin(), s.signs().words().end() } );
    }
    return distinct.size() == 128;
  } );
  check( "orbit-inequivalence-n3", [] { return class_inequivalence_report( 3 ).violations.empty(); } );
  return all;
}

} // namespace hgs
