#include "support/oracle.hpp"

#include <revclone/closure.hpp>
#include <revclone/error.hpp>
#include <revclone/gates.hpp>
#include <revclone/ops.hpp>

#include <doctest.h>

#include <set>

using namespace revclone;

namespace
{

std::set<std::vector<letter>> tables( std::vector<map> const& maps )
{
  std::set<std::vector<letter>> out;
  for ( auto const& m : maps )
  {
    auto t = std::vector<letter>( m.table().begin(), m.table().end() );
    t.insert( t.begin(), { static_cast<letter>( m.arity() ), static_cast<letter>( m.coarity() ) } );
    out.insert( std::move( t ) );
  }
  return out;
}

std::vector<named_map> named( std::vector<map> const& maps )
{
  std::vector<named_map> out;
  for ( auto const& m : maps )
  {
    out.push_back( { "g" + std::to_string( out.size() ), m } );
  }
  return out;
}

big_int factorial( unsigned n )
{
  big_int r = 1;
  for ( unsigned i = 2; i <= n; ++i )
  {
    r *= i;
  }
  return r;
}

search_caps tight( unsigned n )
{
  search_caps caps;
  caps.max_arity = n;
  caps.max_coarity = n;
  return caps;
}

/// Every wire permutation of {1..n} as a map.
std::set<std::vector<letter>> wire_permutation_tables( unsigned k, unsigned n )
{
  std::vector<unsigned> images( n );
  std::iota( images.begin(), images.end(), 1u );
  std::vector<map> maps;
  do
  {
    maps.push_back( oracle::pi( k, wire_permutation::from_images( images ) ) );
  } while ( std::next_permutation( images.begin(), images.end() ) );
  return tables( maps );
}

} // namespace

TEST_CASE( "slice group orders" )
{
  alphabet const a2( 2 ), a3( 3 );
  auto const s2 = alphabet_permutation::transposition( 2, 1, 2 );
  CHECK( slice_group( { { "not", tg( a2, 1, s2, 1 ) } }, a2, 2 ).order() == 8 );
  CHECK( slice_group( standard_generators( a3, 2 ), a3, 2 ).order() == factorial( 9 ) );
  CHECK( slice_group( {}, a3, 3 ).order() == 6 );
  CHECK( slice_group( { { "s", unary( a3, alphabet_permutation::transposition( 3, 1, 2 ) ) } }, a3, 1 ).order() == 2 );
  CHECK( slice_group( { { "c", unary( a3, alphabet_permutation::full_cycle( 3 ) ) } }, a3, 1 ).order() == 3 );
  CHECK( slice_group( { { "c", unary( a3, alphabet_permutation::full_cycle( 3 ) ) },
                        { "s", unary( a3, alphabet_permutation::transposition( 3, 1, 2 ) ) } },
                      a3, 1 )
             .order() == 6 );
  CHECK_THROWS_AS( slice_group( { { "fan", fanout( a2, 2 ) } }, a2, 2 ), domain_error );
  CHECK_THROWS_AS( slice_group( { { "wide", tg( a2, 3, s2, 1 ) } }, a2, 2 ), domain_error );
}

TEST_CASE( "even alphabet: lower gates give only even permutations" )
{
  alphabet const a( 2 );
  auto const s = alphabet_permutation::transposition( 2, 1, 2 );
  auto const G = slice_group( { { "t1", tg( a, 1, s, 1 ) }, { "t2", tg( a, 2, s, 1 ) } }, a, 3 );
  for ( auto const& g : G.generators() )
  {
    CHECK( sign( g.perm ) == 1 );
  }
  CHECK_FALSE( G.contains( tuple_permutation::from_map( tg( a, 3, s, 1 ) ) ) );
  // NOT and CNOT over bits are affine: |AGL(3, 2)| = 8 * 168
  CHECK( G.order() == 1344 );
}

TEST_CASE( "saturation of the empty set gives the wire permutations" )
{
  for ( unsigned k : { 2u, 3u } )
  {
    auto const s = saturate( {}, alphabet( k ), tight( 3 ), false );
    CHECK( s.complete );
    for ( unsigned n = 1; n <= 3; ++n )
    {
      std::vector<map> slice;
      for ( auto const& m : s.maps )
      {
        if ( m.arity() == n )
        {
          slice.push_back( m );
        }
      }
      CHECK( tables( slice ) == wire_permutation_tables( k, n ) );
    }
  }
}

TEST_CASE( "saturation of bijections stays bijective" )
{
  alphabet const a( 3 );
  std::vector<map> F{ tg( a, 2, alphabet_permutation::full_cycle( 3 ), 1 ) };
  auto const s = saturate( F, a, tight( 2 ), false );
  CHECK( s.complete );
  for ( auto const& m : s.maps )
  {
    CHECK( oracle::is_permutation_table( m ) );
  }
}

TEST_CASE( "saturation caps" )
{
  alphabet const a( 2 );
  search_caps caps = tight( 3 );
  caps.max_elements = 20;
  auto const s = saturate( { tg( a, 2, alphabet_permutation::transposition( 2, 1, 2 ), 1 ) }, a, caps, false );
  CHECK( s.overflow );
  CHECK_FALSE( s.complete );
  search_caps bad;
  bad.max_rounds = 0;
  CHECK_THROWS_AS( validate( bad ), domain_error );
}

TEST_CASE( "fan-out and a projection make delta and nabla redundant" )
{
  alphabet const a( 2 );
  auto const projection = oracle::tabulate( 2, 2, 1, []( tuple const& x ) { return tuple{ x[1] }; } );
  std::vector<map> F{ fanout( a, 2 ), projection, tg( a, 2, alphabet_permutation::transposition( 2, 1, 2 ), 1 ) };
  auto caps = tight( 2 );
  caps.max_elements = 100000;
  auto const plain = saturate( F, a, caps, false );
  auto const full = saturate( F, a, caps, true );
  REQUIRE( plain.complete );
  REQUIRE( full.complete );
  CHECK( tables( plain.maps ) == tables( full.maps ) );
}

TEST_CASE( "closure operators on function sets" )
{
  std::mt19937_64 rng( 1 );
  for ( int trial = 0; trial < 10; ++trial )
  {
    std::vector<map> F;
    for ( int i = 0; i < 3; ++i )
    {
      F.push_back( oracle::random_table( rng, 2, std::uniform_int_distribution<unsigned>( 0, 2 )( rng ),
                                         std::uniform_int_distribution<unsigned>( 0, 2 )( rng ) ) );
    }
    auto const K = op_K( F );
    auto const S = op_S( F );
    CHECK( tables( op_K( K ) ) == tables( K ) );
    CHECK( tables( op_S( S ) ) == tables( S ) );
    CHECK( tables( op_S( K ) ) == tables( op_K( S ) ) );
    for ( auto const& f : op_R( F ) )
    {
      CHECK( oracle::is_permutation_table( f ) );
    }
  }
  alphabet const a( 3 );
  std::vector<map> bijective{ tg( a, 2, alphabet_permutation::full_cycle( 3 ), 1 ), map::identity( a, 1 ) };
  CHECK( tables( op_R( bijective ) ) == tables( bijective ) );
}

TEST_CASE( "op_S and op_K sizes" )
{
  alphabet const a( 2 );
  auto const f = tg( a, 2, alphabet_permutation::transposition( 2, 1, 2 ), 1 );
  // all ordered selections of 0, 1 or 2 outputs: 1 + 2 + 2
  CHECK( op_S( { f } ).size() <= 5 );
  CHECK( tables( op_S( { f } ) ).size() == 5 );
  // insertions: none, either input fixed to 2 letters, both fixed to 4 constant tuples
  CHECK( tables( op_K( { f } ) ).size() <= 1 + 2 * 2 + 4 );
}

TEST_CASE( "realisation verdicts" )
{
  alphabet const a( 2 );
  auto const s = alphabet_permutation::transposition( 2, 1, 2 );
  auto const lower = named( { tg( a, 1, s, 1 ), tg( a, 2, s, 1 ) } );
  auto const r = check_realisation( lower[1].value, lower, a, {} );
  CHECK( r.kind == realisation_kind::isomorphic );
  CHECK( r.constants.empty() );
  // affine gates never give the nonlinear toffoli gate
  CHECK( check_realisation( tg( a, 3, s, 1 ), lower, a, {} ).kind == realisation_kind::not_found );
  // CNOT with target fixed to 2 copies its control
  auto const fan = check_realisation( fanout( a, 2 ), lower, a, {} );
  CHECK( fan.kind == realisation_kind::no_garbage );
  REQUIRE( fan.f );
  CHECK( realises( *fan.f, fan.constants, fanout( a, 2 ) ) );
  CHECK( to_string( fan.kind ) != to_string( realisation_kind::general ) );
}

TEST_CASE( "every map is realised by a big enough symmetric group" )
{
  std::mt19937_64 rng( 2 );
  for ( unsigned k : { 2u, 3u } )
  {
    alphabet const a( k );
    for ( int trial = 0; trial < 5; ++trial )
    {
      auto const g = oracle::random_table( rng, k, 1, 1 );
      auto const F = standard_generators( a, 2 );
      auto const r = check_realisation( g, F, a, {} );
      CHECK( r.kind != realisation_kind::not_found );
      REQUIRE( r.f );
      for ( auto const& x : oracle::all_tuples( k, 1 ) )
      {
        auto const y = ( *r.f )( oracle::join( x, r.constants ) );
        CHECK( y[0] == g( x )[0] );
      }
    }
  }
}

TEST_CASE( "realises" )
{
  alphabet const a( 3 );
  auto const g = tg( a, 2, alphabet_permutation::full_cycle( 3 ), 1 );
  auto const f = oplus( g, map::identity( a, 1 ) );
  tuple const two{ 2 };
  CHECK( realises( f, two, g ) );
  CHECK_FALSE( realises( f, two, tg( a, 2, alphabet_permutation::full_cycle( 3 ), 2 ) ) );
}

TEST_CASE( "temporary storage on residues mod 5" )
{
  // letters 1..5 stand for residues 0..4
  auto const f = oracle::tabulate( 5, 2, 2, []( tuple const& x ) {
    int const u = x[0] - 1, v = x[1] - 1;
    return tuple{ static_cast<letter>( ( 2 * u + v ) % 5 + 1 ), static_cast<letter>( u * v % 5 + 1 ) };
  } );
  auto const g = oracle::tabulate( 5, 1, 1, []( tuple const& x ) { return tuple{ static_cast<letter>( 2 * ( x[0] - 1 ) % 5 + 1 ) }; } );
  tuple const zero{ 1 };
  auto const report = check_temp_storage( f, zero, g );
  CHECK( report.level == storage_level::weak );
  CHECK( report.failing_input.has_value() );
  CHECK_FALSE( report.reason.empty() );
  CHECK( to_string( report.level ) == "weak" );
}

TEST_CASE( "identity padding is strong temporary storage" )
{
  std::mt19937_64 rng( 3 );
  for ( unsigned k : { 2u, 3u } )
  {
    auto const g = oracle::random_permutation_map( rng, k, 2 );
    auto const f = oplus( g, map::identity( alphabet( k ), 2 ) );
    tuple const constants{ 1, static_cast<letter>( k ) };
    CHECK( check_temp_storage( f, constants, g ).level == storage_level::strong );
    tuple const one{ 1 };
    CHECK_THROWS_AS( check_temp_storage( f, one, g ), shape_error );
  }
}

TEST_CASE( "storage needs matching constants" )
{
  alphabet const a( 2 );
  auto const g = map::identity( a, 1 );
  auto const flip = tg( a, 1, alphabet_permutation::transposition( 2, 1, 2 ), 1 );
  tuple const one{ 1 };
  CHECK( check_temp_storage( oplus( g, flip ), one, g ).level == storage_level::none );
}

TEST_CASE( "temporary storage search over bijective sets" )
{
  alphabet const a( 2 );
  auto const s = alphabet_permutation::transposition( 2, 1, 2 );
  auto const F = named( { tg( a, 1, s, 1 ), tg( a, 2, s, 1 ) } );
  CHECK( find_temp_storage( tg( a, 2, s, 1 ), F, a, {} ) == storage_level::strong );
  // non-balanced targets never have storage realisations from bijections
  auto const constant = oracle::tabulate( 2, 1, 1, []( tuple const& ) { return tuple{ 1 }; } );
  CHECK( find_temp_storage( constant, F, a, {} ) == storage_level::none );
}

TEST_CASE( "function set of linear bijections mod 5" )
{
  auto const linear = []( int p, int q, int r, int s ) {
    return oracle::tabulate( 5, 2, 2, [=]( tuple const& x ) {
      int const u = x[0] - 1, v = x[1] - 1;
      return tuple{ static_cast<letter>( ( p * u + q * v ) % 5 + 1 ), static_cast<letter>( ( r * u + s * v ) % 5 + 1 ) };
    } );
  };
  alphabet const a( 5 );
  // generators of GL(2, 5)
  auto const G = slice_group( { { "d", linear( 2, 0, 0, 1 ) }, { "e", linear( 1, 1, 0, 1 ) } }, a, 2 );
  CHECK( G.order() == 480 );
  std::vector<map> forms;
  for ( int p = 0; p < 5; ++p )
  {
    for ( int q = 0; q < 5; ++q )
    {
      if ( p != 0 || q != 0 )
      {
        forms.push_back( oracle::tabulate( 5, 2, 1, [=]( tuple const& x ) {
          return tuple{ static_cast<letter>( ( p * ( x[0] - 1 ) + q * ( x[1] - 1 ) ) % 5 + 1 ) };
        } ) );
      }
    }
  }
  auto const fs = function_set_of_group( G, a, 2, 10000 );
  CHECK( tables( fs ) == tables( forms ) );
  for ( auto const& f : fs )
  {
    CHECK( is_balanced_function( f ) );
  }
}

TEST_CASE( "first component of a wire permutation is a projection" )
{
  alphabet const a( 3 );
  std::mt19937_64 rng( 4 );
  for ( int trial = 0; trial < 10; ++trial )
  {
    std::vector<unsigned> images{ 1, 2, 3 };
    std::shuffle( images.begin(), images.end(), rng );
    auto const alpha = wire_permutation::from_images( images );
    auto const first = select( std::vector<unsigned>{ 1 }, pi( a, alpha ) );
    auto const source = alpha.inverse()( 1 );
    CHECK( first == oracle::tabulate( 3, 3, 1, [=]( tuple const& x ) { return tuple{ x[source - 1] }; } ) );
  }
}

TEST_CASE( "balanced functions" )
{
  auto const projection = oracle::tabulate( 3, 2, 1, []( tuple const& x ) { return tuple{ x[0] }; } );
  auto const minimum = oracle::tabulate( 3, 2, 1, []( tuple const& x ) { return tuple{ std::min( x[0], x[1] ) }; } );
  CHECK( is_balanced_function( projection ) );
  CHECK_FALSE( is_balanced_function( minimum ) );
  alphabet const a( 2 );
  auto const s = alphabet_permutation::transposition( 2, 1, 2 );
  for ( auto const& f : function_set( { tg( a, 2, s, 1 ) }, a, tight( 3 ) ) )
  {
    CHECK( is_balanced_function( f ) );
  }
}

TEST_CASE( "saturation keeps growing while combining" )
{
  // enough new maps per round to force the store to grow mid-round
  for ( auto [k, top] : { std::pair{ 2u, 3u }, { 3u, 2u } } )
  {
    alphabet const a( k );
    for ( unsigned m = 1; m <= top; ++m )
    {
      std::vector<map> F{ tg( a, std::min( m, 2u ), alphabet_permutation::full_cycle( k ), 1 ) };
      auto const s = saturate( F, a, tight( m ), false );
      CHECK( s.complete );
      for ( auto const& f : s.maps )
      {
        CHECK( oracle::is_permutation_table( f ) );
      }
      CHECK( tables( s.maps ).size() == s.maps.size() );
    }
  }
}

TEST_CASE( "closure inclusions" )
{
  alphabet const a( 2 );
  auto const s = alphabet_permutation::transposition( 2, 1, 2 );
  auto const F = named( { tg( a, 1, s, 1 ), tg( a, 2, s, 1 ) } );
  std::vector<map> targets{ tg( a, 2, s, 1 ), tg( a, 3, s, 1 ), fanout( a, 2 ),
                            oracle::tabulate( 2, 2, 1, []( tuple const& x ) { return tuple{ std::min( x[0], x[1] ) }; } ) };
  for ( auto const& g : targets )
  {
    auto const p = profile( g, F, a, {} );
    CHECK( ( !p.in_C || p.in_TS ) );
    CHECK( ( !p.in_TS || p.in_T ) );
    CHECK( ( !p.in_T || p.in_SKC ) );
    CHECK( ( !p.in_C || p.in_KC ) );
    CHECK( ( !p.in_C || p.in_SC ) );
    CHECK( ( !p.in_KC || p.in_SKC ) );
    CHECK( ( !p.in_SC || p.in_SKC ) );
  }
  auto const toffoli = profile( tg( a, 3, s, 1 ), F, a, {} );
  CHECK_FALSE( toffoli.in_SKC );
  // AND from the toffoli gate needs a constant and drops two outputs
  auto const with_toffoli = named( { tg( a, 1, s, 1 ), tg( a, 2, s, 1 ), tg( a, 3, s, 1 ) } );
  auto const conjunction = profile( targets[3], with_toffoli, a, {} );
  CHECK( conjunction.in_SKC );
  CHECK_FALSE( conjunction.in_KC );
  CHECK_FALSE( conjunction.in_SC );
}

TEST_CASE( "saturation agrees with slice groups" )
{
  struct family
  {
    unsigned k;
    unsigned n;
    std::vector<std::pair<unsigned, bool>> gates; // width, full cycle or (1 2)
  };
  std::vector<family> const families{ { 2, 1, { { 1, false } } },
                                      { 2, 2, { { 1, false } } },
                                      { 2, 2, { { 1, false }, { 2, false } } },
                                      { 2, 3, { { 1, false } } },
                                      { 2, 3, { { 2, false } } },
                                      { 2, 3, { { 1, false }, { 2, false } } },
                                      { 3, 2, { { 1, true } } },
                                      { 3, 2, { { 1, false }, { 1, true } } },
                                      { 3, 2, { { 2, true } } } };
  for ( auto const& fam : families )
  {
    alphabet const a( fam.k );
    std::vector<map> F;
    for ( auto const& [width, cycle] : fam.gates )
    {
      F.push_back( tg( a, width,
                       cycle ? alphabet_permutation::full_cycle( fam.k ) : alphabet_permutation::transposition( fam.k, 1, 2 ),
                       1 ) );
    }
    auto const sat = saturate( F, a, tight( fam.n ), false );
    REQUIRE( sat.complete );
    std::vector<map> slice;
    for ( auto const& m : sat.maps )
    {
      if ( m.arity() == fam.n && m.coarity() == fam.n && oracle::is_permutation_table( m ) )
      {
        slice.push_back( m );
      }
    }
    std::vector<map> elements;
    slice_group( named( F ), a, fam.n ).for_each_element(
        [&]( tuple_permutation const& p ) { elements.push_back( p.to_map( a, fam.n ) ); }, 1u << 20 );
    CHECK( tables( slice ) == tables( elements ) );
  }
}
