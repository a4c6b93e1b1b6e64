#include "support/oracle.hpp"

#include <revclone/error.hpp>
#include <revclone/gates.hpp>
#include <revclone/group.hpp>
#include <revclone/ops.hpp>

#include <doctest.h>

#include <set>

using namespace revclone;

namespace
{

using images = std::vector<std::uint32_t>;

images compose_left_to_right( images const& a, images const& b )
{
  images r( a.size() );
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    r[i] = b[a[i]];
  }
  return r;
}

/// Closure by breadth-first search on raw image vectors.
std::set<images> bfs_group( std::vector<images> const& gens, std::size_t degree )
{
  images id( degree );
  std::iota( id.begin(), id.end(), 0u );
  std::set<images> seen{ id };
  std::vector<images> frontier{ id };
  while ( !frontier.empty() )
  {
    std::vector<images> next;
    for ( auto const& g : frontier )
    {
      for ( auto const& h : gens )
      {
        auto p = compose_left_to_right( g, h );
        if ( seen.insert( p ).second )
        {
          next.push_back( std::move( p ) );
        }
      }
    }
    frontier = std::move( next );
  }
  return seen;
}

int inversion_sign( images const& p )
{
  std::size_t inversions = 0;
  for ( std::size_t i = 0; i < p.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < p.size(); ++j )
    {
      inversions += p[i] > p[j];
    }
  }
  return inversions % 2 ? -1 : 1;
}

images random_images( std::mt19937_64& rng, std::size_t degree )
{
  images p( degree );
  std::iota( p.begin(), p.end(), 0u );
  std::shuffle( p.begin(), p.end(), rng );
  return p;
}

/// Subgroup-ish generators: random permutations supported on a random subset.
images random_sparse( std::mt19937_64& rng, std::size_t degree )
{
  auto p = random_images( rng, degree );
  images q( degree );
  std::iota( q.begin(), q.end(), 0u );
  auto const keep = std::uniform_int_distribution<std::size_t>( 2, degree )( rng );
  std::vector<std::uint32_t> support( p.begin(), p.begin() + keep );
  std::vector<std::uint32_t> sorted = support;
  std::sort( sorted.begin(), sorted.end() );
  for ( std::size_t i = 0; i < keep; ++i )
  {
    q[sorted[i]] = support[i];
  }
  return q;
}

tuple_group group_of( std::vector<map> const& maps )
{
  std::vector<tuple_group::generator> gens;
  for ( auto const& m : maps )
  {
    gens.push_back( { "g" + std::to_string( gens.size() ), tuple_permutation::from_map( m ) } );
  }
  return tuple_group::build( maps.front().alpha().size() == 0 ? 0 : tuple_permutation::from_map( maps.front() ).degree(),
                             gens );
}

tuple_permutation product( word const& w, tuple_group const& g )
{
  tuple_permutation p( g.degree() );
  for ( auto const& l : w )
  {
    auto const& q = g.generators()[l.index].perm;
    p = p * ( l.inverse ? q.inverse() : q );
  }
  return p;
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

} // namespace

TEST_CASE( "tuple permutations from maps" )
{
  alphabet const a( 2 );
  CHECK( tuple_permutation::from_map( map::identity( a, 2 ) ).is_identity() );
  // (1,2) and (2,1) have indices 1 and 2
  auto const swap = tuple_permutation::from_map( pi( a, wire_permutation::transposition( 2, 1, 2 ) ) );
  CHECK( swap.images() == images{ 0, 2, 1, 3 } );
  CHECK_THROWS_AS( tuple_permutation::from_map( fanout( a, 2 ) ), domain_error );
  std::mt19937_64 rng( 1 );
  for ( int t = 0; t < 20; ++t )
  {
    auto const f = oracle::random_permutation_map( rng, 2, 2 );
    auto const g = oracle::random_permutation_map( rng, 2, 2 );
    // f . g applies g first
    CHECK( tuple_permutation::from_map( bullet( f, g ) ) ==
           tuple_permutation::from_map( g ) * tuple_permutation::from_map( f ) );
    CHECK( tuple_permutation::from_map( f ).to_map( a, 2 ) == f );
  }
}

TEST_CASE( "sign" )
{
  CHECK( sign( tuple_permutation( 5 ) ) == 1 );
  CHECK( sign( tuple_permutation::from_images( { 1, 0, 2, 3 } ) ) == -1 );
  std::mt19937_64 rng( 2 );
  for ( int t = 0; t < 100; ++t )
  {
    auto const p = random_images( rng, 7 );
    auto const q = random_images( rng, 7 );
    auto const pp = tuple_permutation::from_images( p );
    auto const qq = tuple_permutation::from_images( q );
    REQUIRE( sign( pp ) == inversion_sign( p ) );
    REQUIRE( sign( pp * qq ) == sign( pp ) * sign( qq ) );
  }
  alphabet const a( 3 );
  tuple const x{ 1, 2 }, y{ 3, 3 };
  CHECK( sign( tuple_permutation::from_map( elementary( a, x, y ) ) ) == -1 );
}

TEST_CASE( "trivial and symmetric groups" )
{
  auto const trivial = tuple_group::build( 6, {} );
  CHECK( trivial.order() == 1 );
  CHECK( trivial.contains( tuple_permutation( 6 ) ) );
  std::vector<tuple_group::generator> sym{ { "t", tuple_permutation::from_images( { 1, 0, 2, 3, 4, 5, 6, 7, 8 } ) },
                                           { "c", tuple_permutation::from_images( { 1, 2, 3, 4, 5, 6, 7, 8, 0 } ) } };
  CHECK( tuple_group::build( 9, sym ).order() == 362880 );
  CHECK_THROWS_AS( tuple_group::build( 8, sym ), shape_error );
}

TEST_CASE( "orders agree with breadth-first enumeration" )
{
  std::mt19937_64 rng( 3 );
  for ( int trial = 0; trial < 20; ++trial )
  {
    auto const degree = std::uniform_int_distribution<std::size_t>( 3, 8 )( rng );
    auto const count = std::uniform_int_distribution<int>( 1, 3 )( rng );
    std::vector<images> raw;
    std::vector<tuple_group::generator> gens;
    for ( int i = 0; i < count; ++i )
    {
      raw.push_back( random_sparse( rng, degree ) );
      gens.push_back( { "g" + std::to_string( i ), tuple_permutation::from_images( raw.back() ) } );
    }
    auto const G = tuple_group::build( degree, gens );
    auto const elements = bfs_group( raw, degree );
    REQUIRE( G.order() == elements.size() );
    for ( auto const& e : elements )
    {
      REQUIRE( G.contains( tuple_permutation::from_images( e ) ) );
    }
    // outsiders are rejected
    for ( int i = 0; i < 20; ++i )
    {
      auto const p = random_images( rng, degree );
      REQUIRE( G.contains( tuple_permutation::from_images( p ) ) == ( elements.count( p ) == 1 ) );
    }
    auto const listed = enumerate_elements( [&] {
      std::vector<tuple_permutation> v;
      for ( auto const& g : gens )
      {
        v.push_back( g.perm );
      }
      return v;
    }(), degree, 1u << 20 );
    REQUIRE( listed.size() == elements.size() );
  }
}

TEST_CASE( "contained elements do not grow the order" )
{
  std::mt19937_64 rng( 4 );
  for ( int trial = 0; trial < 10; ++trial )
  {
    std::vector<tuple_group::generator> gens{ { "a", tuple_permutation::from_images( random_sparse( rng, 8 ) ) },
                                              { "b", tuple_permutation::from_images( random_sparse( rng, 8 ) ) } };
    auto const G = tuple_group::build( 8, gens );
    auto const h = G.random_element( rng );
    REQUIRE( G.contains( h ) );
    auto more = gens;
    more.push_back( { "h", h } );
    REQUIRE( tuple_group::build( 8, more ).order() == G.order() );
  }
}

TEST_CASE( "binary gates of width one generate a group of order eight" )
{
  alphabet const a( 2 );
  auto const flip = oplus( tg( a, 1, alphabet_permutation::transposition( 2, 1, 2 ), 1 ), map::identity( a, 1 ) );
  auto const swap = pi( a, wire_permutation::transposition( 2, 1, 2 ) );
  auto const G = group_of( { flip, swap } );
  CHECK( G.order() == 8 );
  auto const all = group_of( { flip, swap, tg( a, 2, alphabet_permutation::transposition( 2, 1, 2 ), 1 ) } );
  CHECK( all.order() == 24 );
}

TEST_CASE( "padded lower gates are even over an even alphabet" )
{
  for ( unsigned k : { 2u, 4u } )
  {
    alphabet const a( k );
    for ( unsigned n = 2; n <= ( k == 2 ? 4u : 2u ); ++n )
    {
      for ( unsigned i = 1; i < n; ++i )
      {
        for ( auto const& alpha : { alphabet_permutation::transposition( k, 1, 2 ), alphabet_permutation::full_cycle( k ) } )
        {
          for ( letter o = 1; o <= k; ++o )
          {
            auto const g = oplus( tg( a, i, alpha, o ), map::identity( a, n - i ) );
            auto const p = tuple_permutation::from_map( g );
            REQUIRE( sign( p ) == 1 );
            REQUIRE( inversion_sign( p.images() ) == 1 );
          }
        }
      }
    }
  }
  alphabet const a( 2 );
  CHECK( sign( tuple_permutation::from_map( tg( a, 3, alphabet_permutation::transposition( 2, 1, 2 ), 1 ) ) ) == -1 );
}

TEST_CASE( "witness words" )
{
  alphabet const a( 3 );
  std::vector<map> maps;
  for ( auto const& g : standard_generators( a, 2 ) )
  {
    maps.push_back( oplus( g.value, map::identity( a, 2 - g.value.arity() ) ) );
  }
  maps.push_back( pi( a, wire_permutation::transposition( 2, 1, 2 ) ) );
  auto const G = group_of( maps );
  CHECK( G.order() == 362880 );
  for ( std::size_t i = 0; i < maps.size(); ++i )
  {
    auto const w = G.witness( tuple_permutation::from_map( maps[i] ) );
    REQUIRE( w );
    CHECK( product( *w, G ) == tuple_permutation::from_map( maps[i] ) );
  }
  auto const id = G.witness( tuple_permutation( 9 ) );
  REQUIRE( id );
  CHECK( product( *id, G ).is_identity() );
  std::mt19937_64 rng( 5 );
  for ( int t = 0; t < 30; ++t )
  {
    auto const h = G.random_element( rng );
    auto const w = G.witness( h );
    REQUIRE( w );
    REQUIRE( product( *w, G ) == h );
  }
  std::vector<tuple_group::generator> even{ { "c", tuple_permutation::from_images( { 1, 2, 0, 3 } ) } };
  auto const C3 = tuple_group::build( 4, even );
  CHECK_FALSE( C3.witness( tuple_permutation::from_images( { 1, 0, 2, 3 } ) ) );
}

TEST_CASE( "generators have length one witnesses" )
{
  std::mt19937_64 rng( 6 );
  std::vector<tuple_group::generator> gens{ { "a", tuple_permutation::from_images( random_images( rng, 7 ) ) },
                                            { "b", tuple_permutation::from_images( random_images( rng, 7 ) ) } };
  auto const G = tuple_group::build( 7, gens );
  for ( std::size_t i = 0; i < gens.size(); ++i )
  {
    auto const w = G.witness( gens[i].perm );
    REQUIRE( w );
    CHECK( product( *w, G ) == gens[i].perm );
  }
}

TEST_CASE( "construction is deterministic" )
{
  std::mt19937_64 rng( 7 );
  std::vector<tuple_group::generator> gens{ { "a", tuple_permutation::from_images( random_images( rng, 9 ) ) },
                                            { "b", tuple_permutation::from_images( random_sparse( rng, 9 ) ) } };
  auto const G = tuple_group::build( 9, gens );
  auto const H = tuple_group::build( 9, gens );
  CHECK( G.base() == H.base() );
  CHECK( G.orbit_lengths() == H.orbit_lengths() );
  CHECK( G.strong_generator_count() == H.strong_generator_count() );
  auto const p = G.random_element( rng );
  CHECK( G.witness( p ) == H.witness( p ) );
}

TEST_CASE( "large symmetric group order" )
{
  alphabet const a( 3 );
  std::vector<map> maps;
  for ( auto const& g : standard_generators( a, 3 ) )
  {
    maps.push_back( oplus( g.value, map::identity( a, 3 - g.value.arity() ) ) );
  }
  maps.push_back( pi( a, wire_permutation::transposition( 3, 1, 2 ) ) );
  maps.push_back( pi( a, wire_permutation::full_cycle( 3 ) ) );
  CHECK( group_of( maps ).order() == factorial( 27 ) );
}

TEST_CASE( "element enumeration cap" )
{
  std::vector<tuple_permutation> gens{ tuple_permutation::from_images( { 1, 0, 2, 3, 4 } ),
                                       tuple_permutation::from_images( { 1, 2, 3, 4, 0 } ) };
  CHECK( enumerate_elements( gens, 5, 200 ).size() == 120 );
  CHECK_THROWS( enumerate_elements( gens, 5, 50 ) );
  auto const G = tuple_group::build( 5, { { "t", gens[0] }, { "c", gens[1] } } );
  std::size_t visited = 0;
  G.for_each_element( [&]( tuple_permutation const& ) { ++visited; }, 1000 );
  CHECK( visited == 120 );
  CHECK_THROWS( G.for_each_element( []( tuple_permutation const& ) {}, 10 ) );
}
