#include <revclone/error.hpp>
#include <revclone/gates.hpp>
#include <revclone/ops.hpp>

#include <algorithm>
#include <charconv>
#include <string_view>

namespace revclone
{

map unary( alphabet a, alphabet_permutation const& alpha )
{
  if ( alpha.degree() != a.size() )
  {
    throw shape_error( "letter permutation", "degree " + std::to_string( a.size() ),
                       "degree " + std::to_string( alpha.degree() ) );
  }
  return unary_map( a, alpha.images() );
}

map tg( alphabet a, unsigned n, alphabet_permutation const& alpha, letter o )
{
  if ( n == 0 )
  {
    throw domain_error( "TG needs at least one wire" );
  }
  if ( !a.contains( o ) )
  {
    throw domain_error( "control letter " + std::to_string( o ) + " outside alphabet" );
  }
  if ( alpha.degree() != a.size() )
  {
    throw shape_error( "TG", "permutation of degree " + std::to_string( a.size() ),
                       "degree " + std::to_string( alpha.degree() ) );
  }
  return map::from_function( a, n, n, [&]( auto in, auto out ) {
    std::copy( in.begin(), in.end(), out.begin() );
    if ( std::all_of( in.begin(), in.end() - 1, [o]( letter x ) { return x == o; } ) )
    {
      out[n - 1] = static_cast<letter>( alpha( in[n - 1] ) );
    }
  } );
}

map elementary( alphabet a, std::span<letter const> x, std::span<letter const> y )
{
  if ( x.size() != y.size() )
  {
    throw shape_error( "elementary", "tuples of equal length", std::to_string( x.size() ) + " and " + std::to_string( y.size() ) );
  }
  auto const n = static_cast<unsigned>( x.size() );
  auto const xi = encode( x, a, n ).value;
  auto const yi = encode( y, a, n ).value;
  if ( xi == yi )
  {
    throw domain_error( "elementary: the two tuples must differ" );
  }
  auto f = map::identity( a, n );
  std::vector<letter> table( f.table().begin(), f.table().end() );
  std::copy( y.begin(), y.end(), table.begin() + xi * n );
  std::copy( x.begin(), x.end(), table.begin() + yi * n );
  return map( a, n, n, std::move( table ) );
}

std::optional<std::pair<tuple, tuple>> elementary_pair( map const& f )
{
  if ( !is_balanced( f ) )
  {
    return std::nullopt;
  }
  std::vector<std::uint64_t> moved;
  for ( std::uint64_t r = 0; r < f.rows(); ++r )
  {
    if ( f.image_index( r ) != r )
    {
      moved.push_back( r );
      if ( moved.size() > 2 )
      {
        return std::nullopt;
      }
    }
  }
  if ( moved.size() != 2 || f.image_index( moved[0] ) != moved[1] || f.image_index( moved[1] ) != moved[0] )
  {
    return std::nullopt;
  }
  return std::pair{ decode( { moved[0] }, f.alpha(), f.arity() ), decode( { moved[1] }, f.alpha(), f.arity() ) };
}

bool is_elementary( map const& f )
{
  return elementary_pair( f ).has_value();
}

bool is_atomic( map const& f )
{
  auto const pair = elementary_pair( f );
  if ( !pair )
  {
    return false;
  }
  std::size_t differ = 0;
  for ( std::size_t i = 0; i < pair->first.size(); ++i )
  {
    differ += pair->first[i] != pair->second[i];
  }
  return differ == 1;
}

map fanout( alphabet a, unsigned n )
{
  return map::from_function( a, 1, n, []( auto in, auto out ) { std::fill( out.begin(), out.end(), in[0] ); } );
}

namespace
{

alphabet_permutation swap12( alphabet a )
{
  return alphabet_permutation::transposition( a.size(), 1, std::min( 2u, a.size() ) );
}

std::string perm_name( alphabet_permutation const& p )
{
  return p.to_string();
}

std::string tg_name( unsigned n, alphabet_permutation const& alpha, letter o )
{
  return "TG(" + std::to_string( n ) + "," + perm_name( alpha ) + "," + std::to_string( o ) + ")";
}

/// Parses the decimal suffix of `name` after `prefix`.
std::optional<unsigned> suffix_number( std::string_view name, std::string_view prefix )
{
  if ( !name.starts_with( prefix ) || name.size() == prefix.size() )
  {
    return std::nullopt;
  }
  auto const digits = name.substr( prefix.size() );
  unsigned value = 0;
  auto const [ptr, ec] = std::from_chars( digits.data(), digits.data() + digits.size(), value );
  if ( ec != std::errc{} || ptr != digits.data() + digits.size() )
  {
    return std::nullopt;
  }
  return value;
}

/// All permutations of {1..k} in lexicographic image order.
std::vector<alphabet_permutation> symmetric_group( unsigned k )
{
  std::vector<unsigned> images( k );
  for ( unsigned i = 0; i < k; ++i )
  {
    images[i] = i + 1;
  }
  std::vector<alphabet_permutation> all;
  do
  {
    all.push_back( alphabet_permutation::from_images( images ) );
  } while ( std::next_permutation( images.begin(), images.end() ) );
  return all;
}

} // namespace

std::vector<named_map> standard_generators( alphabet a, unsigned n )
{
  if ( n == 0 )
  {
    throw domain_error( "standard generators need n >= 1" );
  }
  auto const s = swap12( a );
  auto const c = alphabet_permutation::full_cycle( a.size() );
  return {
      { perm_name( s ), unary( a, s ) },
      { perm_name( c ), unary( a, c ) },
      { tg_name( n, s, 1 ), tg( a, n, s, 1 ) },
      { tg_name( n, c, 1 ), tg( a, n, c, 1 ) },
  };
}

std::optional<std::vector<named_map>> builtin_generators( std::string const& name, alphabet a, unsigned arity )
{
  auto const s = swap12( a );
  auto const c = alphabet_permutation::full_cycle( a.size() );
  auto const one = [&]( map f ) { return std::vector<named_map>{ { name, std::move( f ) } }; };

  if ( name == "std4" )
  {
    return standard_generators( a, std::max( arity, 1u ) );
  }
  if ( name == "proj2" )
  {
    return one( nabla( map::identity( a, 1 ) ) );
  }
  if ( auto n = suffix_number( name, "tg-family-all-lt" ) )
  {
    std::vector<named_map> gens;
    for ( unsigned i = 1; i < *n; ++i )
    {
      for ( auto const& alpha : symmetric_group( a.size() ) )
      {
        if ( alpha.is_identity() )
        {
          continue;
        }
        for ( unsigned o = 1; o <= ( i == 1 ? 1u : a.size() ); ++o )
        {
          gens.push_back( { tg_name( i, alpha, static_cast<letter>( o ) ), tg( a, i, alpha, static_cast<letter>( o ) ) } );
        }
      }
    }
    return gens;
  }
  if ( auto n = suffix_number( name, "tg-family-lt" ) )
  {
    std::vector<named_map> gens;
    for ( unsigned i = 1; i < *n; ++i )
    {
      gens.push_back( { tg_name( i, s, 1 ), tg( a, i, s, 1 ) } );
      if ( c != s )
      {
        gens.push_back( { tg_name( i, c, 1 ), tg( a, i, c, 1 ) } );
      }
    }
    return gens;
  }
  for ( std::string_view tag : { "-swap", "-cycle" } )
  {
    if ( name.ends_with( tag ) )
    {
      if ( auto n = suffix_number( std::string_view( name ).substr( 0, name.size() - tag.size() ), "tg" ); n && *n >= 1 )
      {
        return one( tg( a, *n, tag == "-swap" ? s : c, 1 ) );
      }
    }
  }
  if ( auto n = suffix_number( name, "fanout" ); n && *n >= 1 )
  {
    return one( fanout( a, *n ) );
  }
  if ( auto n = suffix_number( name, "id" ) )
  {
    return one( map::identity( a, *n ) );
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> builtin_names()
{
  return {
      { "tg<N>-swap", "TG(N,(1 2),1)" },
      { "tg<N>-cycle", "TG(N,(1 ... k),1)" },
      { "tg-family-lt<N>", "TG(i,a,1) for i < N and a in {(1 2), (1 ... k)}" },
      { "tg-family-all-lt<N>", "TG(i,a,o) for i < N, every non-identity a and every control o" },
      { "std4", "(1 2), (1 ... k), TG(n,(1 2),1), TG(n,(1 ... k),1) with n = --arity" },
      { "fanout<N>", "x -> (x, ..., x) with N copies" },
      { "proj2", "(x, y) -> y" },
      { "id<N>", "identity on N wires" },
  };
}

} // namespace revclone
