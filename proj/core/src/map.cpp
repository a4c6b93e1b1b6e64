#include <revclone/error.hpp>
#include <revclone/map.hpp>

#include <string>

namespace revclone
{

namespace
{

std::size_t hash_table( unsigned k, unsigned arity, unsigned coarity, std::span<letter const> table ) noexcept
{
  // FNV-1a over the shape and the packed table
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto const mix = [&h]( std::uint64_t byte ) {
    h ^= byte;
    h *= 0x100000001b3ull;
  };
  mix( k );
  mix( arity );
  mix( coarity );
  for ( auto const x : table )
  {
    mix( x );
  }
  return static_cast<std::size_t>( h );
}

} // namespace

map::map( alphabet a, unsigned arity, unsigned coarity, std::vector<letter> table )
    : alphabet_( a ), arity_( arity ), coarity_( coarity ), rows_( a.tuple_count( arity ) ), table_( std::move( table ) )
{
  if ( table_.size() != rows_ * coarity_ )
  {
    throw shape_error( "map table", std::to_string( rows_ ) + " rows of " + std::to_string( coarity_ ) + " letters",
                       std::to_string( table_.size() ) + " letters" );
  }
  for ( auto const x : table_ )
  {
    if ( !a.contains( x ) )
    {
      throw domain_error( "letter " + std::to_string( x ) + " outside alphabet of size " + std::to_string( a.size() ) );
    }
  }
  hash_ = hash_table( a.size(), arity_, coarity_, table_ );
}

map map::identity( alphabet a, unsigned n )
{
  return from_function( a, n, n, []( auto in, auto out ) { std::copy( in.begin(), in.end(), out.begin() ); } );
}

tuple map::operator()( std::span<letter const> x ) const
{
  auto const r = encode( x, alphabet_, arity_ );
  auto const out = row( r.value );
  return tuple( out.begin(), out.end() );
}

tuple evaluate( map const& f, std::span<letter const> x )
{
  return f( x );
}

bool is_balanced( map const& f ) noexcept
{
  return f.arity() == f.coarity();
}

bool is_bijective( map const& f )
{
  if ( f.arity() != f.coarity() )
  {
    return false;
  }
  std::vector<bool> hit( f.rows(), false );
  for ( std::uint64_t r = 0; r < f.rows(); ++r )
  {
    auto const image = f.image_index( r );
    if ( hit[image] )
    {
      return false;
    }
    hit[image] = true;
  }
  return true;
}

map inverse( map const& f )
{
  if ( !is_bijective( f ) || !is_balanced( f ) )
  {
    throw domain_error( "inverse: map is not a balanced bijection" );
  }
  std::vector<letter> table( f.table().size() );
  auto const n = f.arity();
  tuple input( n );
  for ( std::uint64_t r = 0; r < f.rows(); ++r )
  {
    decode_into( r, f.k(), input );
    auto const image = f.image_index( r );
    std::copy( input.begin(), input.end(), table.begin() + static_cast<std::ptrdiff_t>( image * n ) );
  }
  return map( f.alpha(), n, n, std::move( table ) );
}

map complete_bijection( alphabet a, unsigned n, std::vector<std::int64_t> const& partial )
{
  auto const rows = a.tuple_count( n );
  if ( partial.size() != rows )
  {
    throw shape_error( "partial assignment", std::to_string( rows ) + " rows", std::to_string( partial.size() ) );
  }
  std::vector<bool> used( rows, false );
  for ( auto const t : partial )
  {
    if ( t < 0 )
    {
      continue;
    }
    if ( static_cast<std::uint64_t>( t ) >= rows || used[t] )
    {
      throw domain_error( "partial assignment is not injective" );
    }
    used[t] = true;
  }
  std::vector<letter> table( rows * n );
  std::uint64_t next = 0;
  for ( std::uint64_t r = 0; r < rows; ++r )
  {
    auto target = partial[r];
    if ( target < 0 )
    {
      while ( used[next] )
      {
        ++next;
      }
      used[next] = true;
      target = static_cast<std::int64_t>( next );
    }
    decode_into( static_cast<std::uint64_t>( target ), a.size(), std::span<letter>( table.data() + r * n, n ) );
  }
  return map( a, n, n, std::move( table ) );
}

map unary_map( alphabet a, std::span<unsigned const> images )
{
  if ( images.size() != a.size() )
  {
    throw shape_error( "unary_map", "permutation of degree " + std::to_string( a.size() ),
                       "degree " + std::to_string( images.size() ) );
  }
  std::vector<letter> table;
  table.reserve( images.size() );
  for ( auto const v : images )
  {
    table.push_back( static_cast<letter>( v ) );
  }
  return map( a, 1, 1, std::move( table ) );
}

} // namespace revclone
