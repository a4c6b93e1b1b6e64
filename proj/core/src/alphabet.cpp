#include <revclone/alphabet.hpp>
#include <revclone/error.hpp>

namespace revclone
{

alphabet::alphabet( unsigned size ) : size_( size )
{
  if ( size == 0u || size > max_alphabet_size )
  {
    throw domain_error( "alphabet size must lie in [1, " + std::to_string( max_alphabet_size ) +
                        "], got " + std::to_string( size ) );
  }
}

std::uint64_t alphabet::tuple_count( unsigned n ) const
{
  std::uint64_t count = 1;
  for ( unsigned i = 0; i < n; ++i )
  {
    count *= size_;
    if ( count > max_table_rows )
    {
      throw domain_error( "table for alphabet " + std::to_string( size_ ) + " and arity " +
                          std::to_string( n ) + " exceeds the row limit" );
    }
  }
  return count;
}

tuple_index encode( std::span<letter const> t, alphabet a, unsigned n )
{
  if ( t.size() != n )
  {
    throw shape_error( "encode", "tuple of length " + std::to_string( n ),
                       "length " + std::to_string( t.size() ) );
  }
  for ( auto const x : t )
  {
    if ( !a.contains( x ) )
    {
      throw domain_error( "letter " + std::to_string( x ) + " outside alphabet of size " +
                          std::to_string( a.size() ) );
    }
  }
  return tuple_index{ encode_unchecked( t, a.size() ) };
}

tuple decode( tuple_index index, alphabet a, unsigned n )
{
  if ( index.value >= a.tuple_count( n ) )
  {
    throw domain_error( "tuple index " + std::to_string( index.value ) + " out of range" );
  }
  tuple t( n );
  decode_into( index.value, a.size(), t );
  return t;
}

tuple concat( std::span<letter const> x, std::span<letter const> y )
{
  tuple t( x.begin(), x.end() );
  t.insert( t.end(), y.begin(), y.end() );
  return t;
}

std::string to_string( std::span<letter const> t )
{
  std::string s;
  for ( auto const x : t )
  {
    if ( !s.empty() )
    {
      s += ' ';
    }
    s += std::to_string( static_cast<unsigned>( x ) );
  }
  return s;
}

} // namespace revclone
