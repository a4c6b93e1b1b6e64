#include "support/oracle.hpp"

#include <cli.hpp>
#include <revclone/map_io.hpp>

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace revclone;

namespace
{

struct outcome
{
  int code;
  std::string out;
  std::string err;
};

outcome run_cli( std::vector<std::string> const& args, std::string const& input = {} )
{
  std::istringstream in( input );
  std::ostringstream out, err;
  auto const code = cli::run( args, in, out, err );
  return { code, out.str(), err.str() };
}

struct scratch_dir
{
  std::filesystem::path path;
  scratch_dir()
  {
    path = std::filesystem::temp_directory_path() /
           ( "revclone-cli-" + std::to_string( std::random_device{}() ) );
    std::filesystem::create_directories( path );
  }
  ~scratch_dir() { std::filesystem::remove_all( path ); }
  std::string write( std::string const& name, std::string const& text ) const
  {
    std::ofstream( path / name ) << text;
    return ( path / name ).string();
  }
};

/// Body of a .map file without comment lines.
std::string strip_comments( std::string const& text )
{
  std::istringstream in( text );
  std::string line, out;
  while ( std::getline( in, line ) )
  {
    if ( !line.empty() && line[0] == '#' )
    {
      continue;
    }
    out += line + "\n";
  }
  return out;
}

} // namespace

TEST_CASE( "eval prints the canonical map" )
{
  auto const r = run_cli( { "eval", "-", "--alphabet", "3" }, "(tg 2 (p 1 2 3) 1)\n" );
  REQUIRE( r.code == 0 );
  CHECK( parse_map( r.out ) == oracle::tg( 3, 2, alphabet_permutation::full_cycle( 3 ), 1 ) );
}

TEST_CASE( "eval resolves names from a directory" )
{
  scratch_dir dir;
  auto const swap = oracle::pi( 2, wire_permutation::transposition( 2, 1, 2 ) );
  dir.write( "S.map", format_map( swap ) );
  auto const circ = dir.write( "p.circ", "(alphabet 2)\n(bullet S S)\n" );
  auto const r = run_cli( { "eval", circ, "--maps", dir.path.string() } );
  REQUIRE( r.code == 0 );
  CHECK( parse_map( r.out ) == map::identity( alphabet( 2 ), 2 ) );
  auto const missing = run_cli( { "eval", "-", "--alphabet", "2" }, "(oplus Nowhere (id 1))" );
  CHECK( missing.code == 2 );
  CHECK_FALSE( missing.err.empty() );
}

TEST_CASE( "eval of a netlist" )
{
  auto const r = run_cli( { "eval", "-", "--alphabet", "2" }, "wires 2\ntg 2 (1 2) 1 @ 2 1\n" );
  REQUIRE( r.code == 0 );
  auto const expected = oracle::tabulate( 2, 2, 2, []( tuple const& x ) {
    return x[1] == 1 ? tuple{ static_cast<letter>( 3 - x[0] ), x[1] } : x;
  } );
  CHECK( parse_map( r.out ) == expected );
}

TEST_CASE( "syntax errors exit with usage code and position" )
{
  auto const r = run_cli( { "eval", "-", "--alphabet", "2" }, "(oplus (id 1)\n  (id 1) (tg 2 (p 1 1) 1))" );
  CHECK( r.code == 2 );
  CHECK( r.err.find( "2:21" ) != std::string::npos );
  // letters are checked against the alphabet at evaluation, naming the node
  auto const range = run_cli( { "eval", "-", "--alphabet", "2" }, "(oplus (id 1) (id 1) (tg 2 (p 1 9) 1))" );
  CHECK( range.code == 2 );
  CHECK( range.err.find( "(tg)" ) != std::string::npos );
  CHECK( run_cli( { "no-such-command" } ).code == 2 );
  CHECK( run_cli( { "--help" } ).code == 0 );
}

TEST_CASE( "check" )
{
  auto const fan = format_map( oracle::tabulate( 2, 1, 2, []( tuple const& x ) { return tuple{ x[0], x[0] }; } ) );
  auto const r = run_cli( { "check", "-" }, fan );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "bijective no" ) != std::string::npos );
  CHECK( run_cli( { "check", "-", "--bijective" }, fan ).code == 1 );
  auto const id = format_map( map::identity( alphabet( 2 ), 2 ) );
  CHECK( run_cli( { "check", "-", "--bijective", "--balanced" }, id ).code == 0 );
  auto const j = nlohmann::json::parse( run_cli( { "--json", "check", "-" }, id ).out );
  CHECK( j["bijective"] == true );
  CHECK( j["arity"] == 2 );
}

TEST_CASE( "closure order" )
{
  scratch_dir dir;
  auto const flip = dir.write( "not.map", format_map( oracle::tg( 2, 1, alphabet_permutation::transposition( 2, 1, 2 ), 1 ) ) );
  auto const r = run_cli( { "closure-order", "--alphabet", "2", "--arity", "2", "--gen", flip } );
  REQUIRE( r.code == 0 );
  CHECK( r.out == "8\n" );
  auto const std4 = run_cli( { "closure-order", "--alphabet", "3", "--arity", "2", "--gen", "std4" } );
  CHECK( std4.out == "362880\n" );
  auto const j = nlohmann::json::parse( run_cli( { "--json", "closure-order", "--alphabet", "2", "--arity", "2", "--gen", flip } ).out );
  CHECK( j["order"] == "8" );
}

TEST_CASE( "membership" )
{
  scratch_dir dir;
  auto const toffoli = dir.write( "tof.map", format_map( oracle::tg( 2, 3, alphabet_permutation::transposition( 2, 1, 2 ), 1 ) ) );
  auto const no = run_cli( { "member", toffoli, "--gen", "tg-family-lt3", "--alphabet", "2" } );
  CHECK( no.code == 1 );
  CHECK( no.out == "not a member\n" );
  auto const cnot = dir.write( "cnot.map", format_map( oracle::tg( 2, 2, alphabet_permutation::transposition( 2, 1, 2 ), 1 ) ) );
  auto const yes = run_cli( { "member", cnot, "--gen", "tg-family-lt3", "--alphabet", "2", "--witness" } );
  CHECK( yes.code == 0 );
  CHECK( yes.out.rfind( "member\n", 0 ) == 0 );
  CHECK( yes.out.find( "witness" ) != std::string::npos );
}

TEST_CASE( "membership of non-bijective targets reports cap overflow" )
{
  scratch_dir dir;
  auto const fan = dir.write( "fan.map", format_map( oracle::tabulate( 2, 1, 2, []( tuple const& x ) { return tuple{ x[0], x[0] }; } ) ) );
  auto const r = run_cli( { "member", fan, "--gen", "tg-family-lt3", "--alphabet", "2", "--max-elements", "5" } );
  CHECK( r.code == 3 );
}

TEST_CASE( "embed" )
{
  auto const conjunction = oracle::tabulate( 2, 2, 1, []( tuple const& x ) { return tuple{ std::min( x[0], x[1] ) }; } );
  auto const r = run_cli( { "embed", "-" }, format_map( conjunction ) );
  REQUIRE( r.code == 0 );
  CHECK( r.out.rfind( "# r 3", 0 ) == 0 );
  auto const f = parse_map( strip_comments( r.out ) );
  CHECK( f.arity() == 3 );
  CHECK( oracle::is_permutation_table( f ) );
  for ( auto const& x : oracle::all_tuples( 2, 2 ) )
  {
    CHECK( f( oracle::join( x, tuple{ 1 } ) )[0] == conjunction( x )[0] );
  }
}

TEST_CASE( "synth" )
{
  std::mt19937_64 rng( 1 );
  for ( auto const* policy : { "tg-n", "odd-small" } )
  {
    auto const f = oracle::random_permutation_map( rng, 3, 2 );
    auto const r = run_cli( { "synth", "-", "--policy", policy }, format_map( f ) );
    REQUIRE( r.code == 0 );
    CHECK( r.out.rfind( "# stages ", 0 ) == 0 );
    auto const back = run_cli( { "eval", "-", "--alphabet", "3" }, r.out );
    REQUIRE( back.code == 0 );
    CHECK( parse_map( back.out ) == f );
  }
  auto const even = format_map( oracle::random_permutation_map( rng, 2, 2 ) );
  CHECK( run_cli( { "synth", "-", "--policy", "odd-small" }, even ).code == 2 );
  CHECK( run_cli( { "synth", "-", "--policy", "bogus" }, even ).code == 2 );
}

TEST_CASE( "lift-odd output evaluates to the gate" )
{
  auto const lifted = run_cli( { "lift-odd", "--alphabet", "3", "--n", "3", "--cycle" } );
  REQUIRE( lifted.code == 0 );
  auto const r = run_cli( { "eval", "-" }, lifted.out );
  REQUIRE( r.code == 0 );
  CHECK( parse_map( r.out ) == oracle::tg( 3, 3, alphabet_permutation::full_cycle( 3 ), 1 ) );
  auto const nl = run_cli( { "lift-odd", "--alphabet", "3", "--n", "3", "--perm", "(1 3)", "--netlist" } );
  REQUIRE( nl.code == 0 );
  auto const r2 = run_cli( { "eval", "-", "--alphabet", "3" }, nl.out );
  CHECK( parse_map( r2.out ) == oracle::tg( 3, 3, alphabet_permutation::from_cycles( 3, { { 1, 3 } } ), 1 ) );
  auto const even = run_cli( { "lift-odd", "--alphabet", "2", "--n", "3", "--swap" } );
  CHECK( even.code == 2 );
  CHECK( even.err.find( "even permutations" ) != std::string::npos );
}

TEST_CASE( "lift-ts" )
{
  auto const r = run_cli( { "lift-ts", "--alphabet", "2", "--n", "4", "--perm", "(1 2)", "--o", "1", "--p", "2" } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "# ancillas 1 initialised to 2" ) != std::string::npos );
  auto const j = nlohmann::json::parse( run_cli( { "--json", "lift-ts", "--alphabet", "3", "--n", "5", "--perm", "(1 2 3)" } ).out );
  CHECK( j["storage"] == "strong" );
  CHECK( run_cli( { "lift-ts", "--alphabet", "2", "--n", "4", "--perm", "(1 2)", "--o", "1", "--p", "1" } ).code == 2 );
}

TEST_CASE( "identities" )
{
  auto const r = run_cli( { "identities", "--alphabet", "3", "--trials", "50", "--seed", "4" } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "all laws hold" ) != std::string::npos );
  auto const j = nlohmann::json::parse( run_cli( { "--json", "identities", "--trials", "10", "--law", "select" } ).out );
  CHECK( j["failed_laws"] == 0 );
  CHECK_FALSE( j["laws"].empty() );
}

TEST_CASE( "scan-conjectures" )
{
  auto const j = nlohmann::json::parse( run_cli( { "--json", "scan-conjectures", "--alphabet", "2", "--n", "3" } ).out );
  // |B_3| = 8!
  CHECK( j["full_order"] == "40320" );
  CHECK( j.contains( "lower_toffoli" ) );
  auto const text = run_cli( { "scan-conjectures", "--alphabet", "3", "--n", "2" } );
  CHECK( text.code == 0 );
  CHECK( text.out.find( "not scanned" ) != std::string::npos );
}

TEST_CASE( "builtins" )
{
  auto const r = run_cli( { "builtins" } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "std4" ) != std::string::npos );
}
