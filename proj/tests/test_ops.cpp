#include "support/oracle.hpp"

#include <revclone/error.hpp>
#include <revclone/gates.hpp>
#include <revclone/ops.hpp>

#include <doctest.h>

using namespace revclone;

namespace
{

map z7_sum_difference()
{
  return oracle::tabulate( 7, 2, 2, []( tuple const& x ) {
    int const a = x[0] - 1, b = x[1] - 1;
    return tuple{ static_cast<letter>( ( a + b ) % 7 + 1 ), static_cast<letter>( ( ( a - b ) % 7 + 7 ) % 7 + 1 ) };
  } );
}

map z7_shift( int c )
{
  return oracle::tabulate( 7, 1, 1, [c]( tuple const& x ) { return tuple{ static_cast<letter>( ( x[0] - 1 + c ) % 7 + 1 ) }; } );
}

unsigned pick( std::mt19937_64& rng, unsigned lo, unsigned hi )
{
  return std::uniform_int_distribution<unsigned>( lo, hi )( rng );
}

} // namespace

TEST_CASE( "wire permutations multiply left to right" )
{
  auto const alpha = wire_permutation::from_cycles( 3, { { 1, 2, 3 } } );
  auto const beta = wire_permutation::from_cycles( 3, { { 1, 2 } } );
  CHECK( ( alpha * beta )( 1 ) == 1 );
  // alpha after beta, read right to left
  CHECK( alpha( beta( 1 ) ) == 3 );
  CHECK( ( alpha * beta ).to_string() == "(2 3)" );
}

TEST_CASE( "oplus" )
{
  alphabet const a( 3 );
  CHECK( oplus( map::identity( a, 1 ), map::identity( a, 1 ) ) == map::identity( a, 2 ) );
  std::mt19937_64 rng( 1 );
  auto const f = oracle::random_table( rng, 3, 2, 1 );
  auto const g = oracle::random_table( rng, 3, 1, 3 );
  auto const fg = oplus( f, g );
  CHECK( fg.arity() == 3 );
  CHECK( fg.coarity() == 4 );
  for ( int t = 0; t < 50; ++t )
  {
    auto const f1 = oracle::random_table( rng, 3, pick( rng, 0, 2 ), pick( rng, 0, 2 ) );
    auto const g1 = oracle::random_table( rng, 3, pick( rng, 0, 2 ), pick( rng, 0, 2 ) );
    REQUIRE( oplus( f1, g1 ) == oracle::oplus( f1, g1 ) );
  }
  CHECK_THROWS_AS( oplus( map::identity( a, 1 ), map::identity( alphabet( 2 ), 1 ) ), shape_error );
}

TEST_CASE( "compose_k matches the definition" )
{
  std::mt19937_64 rng( 2 );
  for ( unsigned k : { 2u, 3u } )
  {
    for ( int t = 0; t < 100; ++t )
    {
      auto const kk = pick( rng, 1, 2 );
      auto const f = oracle::random_table( rng, k, pick( rng, kk, 3 ), pick( rng, 0, 2 ) );
      auto const g = oracle::random_table( rng, k, pick( rng, 0, 2 ), pick( rng, kk, 3 ) );
      REQUIRE( compose_k( f, g, kk ) == oracle::compose( f, g, kk ) );
    }
  }
}

TEST_CASE( "compose_k special cases and precondition" )
{
  alphabet const a( 2 );
  std::mt19937_64 rng( 3 );
  auto const f = oracle::random_table( rng, 2, 3, 2 );
  auto const g = oracle::random_table( rng, 2, 2, 3 );
  // full composition: f after g
  auto const fg = compose_k( f, g, 3 );
  for ( auto const& x : oracle::all_tuples( 2, 2 ) )
  {
    CHECK( fg( x ) == f( g( x ) ) );
  }
  CHECK( compose_k( f, map::identity( a, 2 ), 2 ) == f );
  CHECK_THROWS_AS( compose_k( f, g, 4 ), shape_error );
  CHECK_THROWS_AS( compose_k( map::identity( a, 1 ), g, 2 ), shape_error );
}

TEST_CASE( "bullet" )
{
  alphabet const a( 3 );
  std::mt19937_64 rng( 4 );
  for ( int t = 0; t < 50; ++t )
  {
    auto const f = oracle::random_table( rng, 3, pick( rng, 1, 3 ), pick( rng, 1, 2 ) );
    auto const g = oracle::random_table( rng, 3, pick( rng, 1, 2 ), pick( rng, 1, 3 ) );
    REQUIRE( bullet( f, g ) == oracle::bullet( f, g ) );
    REQUIRE( bullet( map::identity( a, g.coarity() ), g ) == g );
  }
  for ( int t = 0; t < 30; ++t )
  {
    auto const f = oracle::random_permutation_map( rng, 3, 2 );
    auto const g = oracle::random_permutation_map( rng, 3, 2 );
    REQUIRE( inverse( bullet( f, g ) ) == bullet( inverse( g ), inverse( f ) ) );
    // g narrower than f: f . g = f . (g (+) i_s)
    auto const h = oracle::random_permutation_map( rng, 3, 1 );
    REQUIRE( bullet( f, h ) == bullet( f, oplus( h, map::identity( a, 1 ) ) ) );
  }
}

TEST_CASE( "unary operations" )
{
  std::mt19937_64 rng( 6 );
  for ( int t = 0; t < 50; ++t )
  {
    auto const f = oracle::random_table( rng, 3, pick( rng, 0, 3 ), pick( rng, 0, 3 ) );
    REQUIRE( tau( f ) == oracle::tau( f ) );
    REQUIRE( zeta( f ) == oracle::zeta( f ) );
    REQUIRE( bar_tau( f ) == oracle::bar_tau( f ) );
    REQUIRE( bar_zeta( f ) == oracle::bar_zeta( f ) );
    REQUIRE( delta( f ) == oracle::delta( f ) );
    REQUIRE( nabla( f ) == oracle::nabla( f ) );
    REQUIRE( tau( tau( f ) ) == f );
    auto z = f;
    for ( unsigned i = 0; i < f.arity(); ++i )
    {
      z = zeta( z );
    }
    REQUIRE( z == f );
  }
}

TEST_CASE( "unary operations are identities in degenerate cases" )
{
  std::mt19937_64 rng( 7 );
  auto const f = oracle::random_table( rng, 2, 1, 1 );
  CHECK( tau( f ) == f );
  CHECK( zeta( f ) == f );
  CHECK( bar_tau( f ) == f );
  CHECK( bar_zeta( f ) == f );
  CHECK( delta( f ) == f );
}

TEST_CASE( "bar_tau as composition with tau i_n" )
{
  std::mt19937_64 rng( 8 );
  alphabet const a( 2 );
  auto const f = oracle::random_table( rng, 2, 2, 3 );
  CHECK( bar_tau( f ) == compose_k( pi( a, wire_permutation::transposition( 3, 1, 2 ) ), f, 3 ) );
  CHECK( bar_tau( f ) == compose_k( tau( map::identity( a, 3 ) ), f, 3 ) );
}

TEST_CASE( "delta and nabla" )
{
  alphabet const a( 3 );
  CHECK( delta( map::identity( a, 2 ) ) == fanout( a, 2 ) );
  // nabla i_1 is the second projection
  auto const proj = oracle::tabulate( 3, 2, 1, []( tuple const& x ) { return tuple{ x[1] }; } );
  CHECK( nabla( map::identity( a, 1 ) ) == proj );
  std::mt19937_64 rng( 9 );
  for ( unsigned k : { 2u, 3u } )
  {
    for ( unsigned n = 0; n <= 3; ++n )
    {
      auto const f = oracle::random_table( rng, k, n, 2 );
      CHECK( delta( nabla( f ) ) == ( n == 0 ? nabla( f ) : f ) );
      auto const nf = nabla( f );
      CHECK( nf.arity() == n + 1 );
      CHECK( nf.coarity() == 2 );
    }
  }
}

TEST_CASE( "pi" )
{
  alphabet const a( 3 );
  CHECK( pi( a, wire_permutation( 3 ) ) == map::identity( a, 3 ) );
  auto const swap = pi( a, wire_permutation::transposition( 2, 1, 2 ) );
  for ( auto const& x : oracle::all_tuples( 3, 2 ) )
  {
    CHECK( swap( x ) == tuple{ x[1], x[0] } );
  }
  auto const alpha = wire_permutation::from_cycles( 3, { { 1, 2, 3 } } );
  auto const beta = wire_permutation::from_cycles( 3, { { 1, 2 } } );
  CHECK( pi( a, alpha ) == oracle::pi( 3, alpha ) );
  // pi_beta . pi_alpha applies alpha first, so it is pi_{alpha beta}
  CHECK( bullet( pi( a, beta ), pi( a, alpha ) ) == pi( a, alpha * beta ) );
  CHECK( is_bijective( pi( a, alpha ) ) );
}

TEST_CASE( "select" )
{
  std::mt19937_64 rng( 10 );
  auto const f = oracle::random_table( rng, 2, 2, 3 );
  std::vector<unsigned> const all{ 1, 2, 3 };
  CHECK( select( all, f ) == f );
  std::vector<unsigned> const tail{ 2, 3 };
  CHECK( select( tail, f ) == oracle::select( { 2, 3 }, f ) );
  std::vector<unsigned> const second{ 2 };
  auto const difference = oracle::tabulate( 7, 2, 1, []( tuple const& x ) {
    return tuple{ static_cast<letter>( ( ( x[0] - x[1] ) % 7 + 7 ) % 7 + 1 ) };
  } );
  CHECK( select( second, z7_sum_difference() ) == difference );
  std::vector<unsigned> const repeat{ 1, 1 };
  std::vector<unsigned> const out_of_range{ 4 };
  CHECK_THROWS_AS( select( repeat, f ), domain_error );
  CHECK_THROWS_AS( select( out_of_range, f ), domain_error );
  for ( int t = 0; t < 30; ++t )
  {
    std::vector<unsigned> theta{ 3, 1 };
    REQUIRE( select( theta, f ) == oracle::select( theta, f ) );
  }
}

TEST_CASE( "select with repetitions" )
{
  alphabet const a( 3 );
  std::vector<unsigned> const twice{ 1, 1 };
  CHECK( select_multi( twice, map::identity( a, 1 ) ) == fanout( a, 2 ) );
  std::vector<unsigned> const second{ 2 };
  CHECK( select_multi( second, map::identity( a, 2 ) ) == oracle::tabulate( 3, 2, 1, []( tuple const& x ) { return tuple{ x[1] }; } ) );
  std::mt19937_64 rng( 12 );
  auto const f = oracle::random_table( rng, 3, 2, 3 );
  std::vector<unsigned> const distinct{ 3, 1 };
  CHECK( select_multi( distinct, f ) == select( distinct, f ) );
}

TEST_CASE( "insert" )
{
  std::mt19937_64 rng( 13 );
  auto const f = oracle::random_table( rng, 3, 3, 2 );
  CHECK( insert( {}, {}, f ) == f );
  std::vector<unsigned> const one{ 1 }, two{ 2 };
  tuple const five{ 6 };
  // z + 5 from the sum/difference map
  CHECK( select( one, insert( two, five, z7_sum_difference() ) ) == z7_shift( 5 ) );
  std::vector<unsigned> const all{ 1, 2, 3 };
  tuple const a{ 2, 3, 1 };
  auto const constant = insert( all, a, f );
  CHECK( constant.arity() == 0 );
  CHECK( constant( tuple{} ) == f( a ) );
  for ( int t = 0; t < 50; ++t )
  {
    std::vector<unsigned> positions;
    tuple constants;
    for ( unsigned i = 1; i <= 3; ++i )
    {
      if ( pick( rng, 0, 1 ) )
      {
        positions.push_back( i );
        constants.push_back( static_cast<letter>( pick( rng, 1, 3 ) ) );
      }
    }
    REQUIRE( insert( positions, constants, f ) == oracle::insert( positions, constants, f ) );
  }
  std::vector<unsigned> const descending{ 2, 1 };
  tuple const two_letters{ 1, 1 };
  CHECK_THROWS_AS( insert( descending, two_letters, f ), domain_error );
  CHECK_THROWS_AS( insert( one, two_letters, f ), shape_error );
  std::vector<unsigned> const four{ 4 };
  CHECK_THROWS_AS( insert( four, five, f ), domain_error );
}

TEST_CASE( "reduct" )
{
  std::vector<unsigned> const theta_prime{ 2 }, theta{ 1 };
  CHECK( reduct( z7_sum_difference(), theta_prime, theta, 6 ) == z7_shift( 5 ) );
  std::mt19937_64 rng( 14 );
  auto const f = oracle::random_table( rng, 2, 2, 2 );
  std::vector<unsigned> const all{ 1, 2 };
  CHECK( reduct( f, {}, all, 1 ) == f );
  for ( unsigned k : { 2u, 3u } )
  {
    for ( unsigned n : { 2u, 3u } )
    {
      auto const alpha = alphabet_permutation::full_cycle( k );
      auto const big = tg( alphabet( k ), n + 1, alpha, 1 );
      std::vector<unsigned> const first{ 1 };
      std::vector<unsigned> rest;
      for ( unsigned i = 2; i <= n + 1; ++i )
      {
        rest.push_back( i );
      }
      CHECK( reduct( big, first, rest, 1 ) == tg( alphabet( k ), n, alpha, 1 ) );
    }
  }
}

TEST_CASE( "bijective inputs stay bijective" )
{
  std::mt19937_64 rng( 15 );
  for ( int t = 0; t < 40; ++t )
  {
    auto const f = oracle::random_permutation_map( rng, 2, 2 );
    auto const g = oracle::random_permutation_map( rng, 2, 3 );
    REQUIRE( is_bijective( oplus( f, g ) ) );
    REQUIRE( is_bijective( compose_k( g, f, 1 ) ) );
    REQUIRE( is_bijective( compose_k( g, f, 2 ) ) );
    REQUIRE( is_bijective( bullet( g, f ) ) );
    REQUIRE( is_bijective( tau( g ) ) );
    REQUIRE( is_bijective( zeta( g ) ) );
    REQUIRE( is_bijective( bar_tau( g ) ) );
    REQUIRE( is_bijective( bar_zeta( g ) ) );
  }
  auto const f = oracle::random_permutation_map( rng, 2, 2 );
  CHECK_FALSE( is_bijective( delta( f ) ) );
  CHECK_FALSE( is_bijective( nabla( f ) ) );
}
