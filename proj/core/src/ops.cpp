#include <revclone/error.hpp>
#include <revclone/ops.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace revclone
{

namespace
{

std::string shape( unsigned n, unsigned m )
{
  return "(" + std::to_string( n ) + "," + std::to_string( m ) + ")";
}

void same_alphabet( char const* op, map const& f, map const& g )
{
  if ( f.alpha() != g.alpha() )
  {
    throw shape_error( op, "alphabet of size " + std::to_string( f.k() ), "alphabet of size " + std::to_string( g.k() ) );
  }
}

std::uint64_t power( unsigned k, unsigned e )
{
  std::uint64_t p = 1;
  for ( unsigned i = 0; i < e; ++i )
  {
    p *= k;
  }
  return p;
}

/// Result input x is read as f's input x[source[0]], x[source[1]], ...
map rewire_inputs( map const& f, std::vector<unsigned> const& source, unsigned new_arity )
{
  std::vector<letter> fx( f.arity() );
  return map::from_function( f.alpha(), new_arity, f.coarity(), [&]( auto in, auto out ) {
    for ( std::size_t i = 0; i < fx.size(); ++i )
    {
      fx[i] = in[source[i]];
    }
    auto const r = f.row( encode_unchecked( fx, f.k() ) );
    std::copy( r.begin(), r.end(), out.begin() );
  } );
}

/// Output j of the result is output source[j] of f (0-based, repeats allowed).
map rewire_outputs( map const& f, std::vector<unsigned> const& source )
{
  auto const m = static_cast<unsigned>( source.size() );
  std::vector<letter> table( f.rows() * m );
  for ( std::uint64_t r = 0; r < f.rows(); ++r )
  {
    auto const row = f.row( r );
    for ( unsigned j = 0; j < m; ++j )
    {
      table[r * m + j] = row[source[j]];
    }
  }
  return map( f.alpha(), f.arity(), m, std::move( table ) );
}

std::vector<unsigned> checked_indices( std::span<unsigned const> theta, unsigned bound, bool distinct, char const* what )
{
  std::vector<unsigned> source;
  std::vector<bool> used( bound, false );
  for ( auto const t : theta )
  {
    if ( t == 0u || t > bound )
    {
      throw domain_error( std::string( what ) + ": index " + std::to_string( t ) + " outside {1.." +
                          std::to_string( bound ) + "}" );
    }
    if ( distinct && used[t - 1u] )
    {
      throw domain_error( std::string( what ) + ": index " + std::to_string( t ) + " repeats" );
    }
    used[t - 1u] = true;
    source.push_back( t - 1u );
  }
  return source;
}

} // namespace

map oplus( map const& f, map const& g )
{
  same_alphabet( "oplus", f, g );
  auto const s = f.coarity();
  auto const t = g.coarity();
  auto const rows = f.alpha().tuple_count( f.arity() + g.arity() );
  std::vector<letter> table( rows * ( s + t ) );
  auto* out = table.data();
  for ( std::uint64_t fi = 0; fi < f.rows(); ++fi )
  {
    auto const fr = f.row( fi );
    for ( std::uint64_t gi = 0; gi < g.rows(); ++gi )
    {
      out = std::copy( fr.begin(), fr.end(), out );
      auto const gr = g.row( gi );
      out = std::copy( gr.begin(), gr.end(), out );
    }
  }
  return map( f.alpha(), f.arity() + g.arity(), s + t, std::move( table ) );
}

map oplus( std::span<map const> maps )
{
  if ( maps.empty() )
  {
    throw domain_error( "oplus of an empty list" );
  }
  auto result = maps.front();
  for ( auto const& g : maps.subspan( 1 ) )
  {
    result = oplus( result, g );
  }
  return result;
}

map compose_k( map const& f, map const& g, unsigned k )
{
  same_alphabet( "compose", f, g );
  if ( k > f.arity() || k > g.coarity() )
  {
    throw shape_error( "compose_" + std::to_string( k ),
                       "arity(f) >= " + std::to_string( k ) + " and coarity(g) >= " + std::to_string( k ),
                       "f " + shape( f.arity(), f.coarity() ) + ", g " + shape( g.arity(), g.coarity() ) );
  }
  auto const kk = f.k();
  auto const n = f.arity();
  auto const s = f.coarity();
  auto const t = g.coarity();
  auto const arity = g.arity() + n - k;
  auto const coarity = s + t - k;
  auto const rest_rows = power( kk, n - k );
  auto const rows = f.alpha().tuple_count( arity );

  std::vector<letter> table( rows * coarity );
  auto* out = table.data();
  for ( std::uint64_t gi = 0; gi < g.rows(); ++gi )
  {
    auto const y = g.row( gi );
    auto const prefix = encode_unchecked( y.first( k ), kk ) * rest_rows;
    auto const tail = y.subspan( k );
    for ( std::uint64_t rest = 0; rest < rest_rows; ++rest )
    {
      auto const fr = f.row( prefix + rest );
      out = std::copy( fr.begin(), fr.end(), out );
      out = std::copy( tail.begin(), tail.end(), out );
    }
  }
  return map( f.alpha(), arity, coarity, std::move( table ) );
}

map bullet( map const& f, map const& g )
{
  return compose_k( f, g, std::min( f.arity(), g.coarity() ) );
}

map tau( map const& f )
{
  if ( f.arity() < 2 )
  {
    return f;
  }
  std::vector<unsigned> source( f.arity() );
  std::iota( source.begin(), source.end(), 0u );
  std::swap( source[0], source[1] );
  return rewire_inputs( f, source, f.arity() );
}

map zeta( map const& f )
{
  if ( f.arity() < 2 )
  {
    return f;
  }
  std::vector<unsigned> source( f.arity() );
  for ( unsigned i = 0; i < f.arity(); ++i )
  {
    source[i] = ( i + 1 ) % f.arity();
  }
  return rewire_inputs( f, source, f.arity() );
}

map bar_tau( map const& f )
{
  if ( f.coarity() < 2 )
  {
    return f;
  }
  std::vector<unsigned> source( f.coarity() );
  std::iota( source.begin(), source.end(), 0u );
  std::swap( source[0], source[1] );
  return rewire_outputs( f, source );
}

map bar_zeta( map const& f )
{
  if ( f.coarity() < 2 )
  {
    return f;
  }
  std::vector<unsigned> source( f.coarity() );
  for ( unsigned j = 0; j < f.coarity(); ++j )
  {
    source[j] = ( j + 1 ) % f.coarity();
  }
  return rewire_outputs( f, source );
}

map delta( map const& f )
{
  if ( f.arity() < 2 )
  {
    return f;
  }
  std::vector<unsigned> source( f.arity() );
  source[0] = 0;
  for ( unsigned i = 1; i < f.arity(); ++i )
  {
    source[i] = i - 1;
  }
  return rewire_inputs( f, source, f.arity() - 1 );
}

map nabla( map const& f )
{
  std::vector<unsigned> source( f.arity() );
  std::iota( source.begin(), source.end(), 1u );
  return rewire_inputs( f, source, f.arity() + 1 );
}

map pi( alphabet a, wire_permutation const& alpha )
{
  auto const n = alpha.degree();
  auto const inv = alpha.inverse();
  return map::from_function( a, n, n, [&]( auto in, auto out ) {
    for ( unsigned j = 1; j <= n; ++j )
    {
      out[j - 1] = in[inv( j ) - 1];
    }
  } );
}

map permute_inputs( map const& f, wire_permutation const& alpha )
{
  if ( alpha.degree() != f.arity() )
  {
    throw shape_error( "permute_inputs", "degree " + std::to_string( f.arity() ), "degree " + std::to_string( alpha.degree() ) );
  }
  // f(pi_alpha(x)): f's input j is x_{alpha^-1(j)}
  auto const inv = alpha.inverse();
  std::vector<unsigned> source( f.arity() );
  for ( unsigned j = 1; j <= f.arity(); ++j )
  {
    source[j - 1] = inv( j ) - 1;
  }
  return rewire_inputs( f, source, f.arity() );
}

map permute_outputs( map const& f, wire_permutation const& alpha )
{
  if ( alpha.degree() != f.coarity() )
  {
    throw shape_error( "permute_outputs", "degree " + std::to_string( f.coarity() ),
                       "degree " + std::to_string( alpha.degree() ) );
  }
  auto const inv = alpha.inverse();
  std::vector<unsigned> source( f.coarity() );
  for ( unsigned j = 1; j <= f.coarity(); ++j )
  {
    source[j - 1] = inv( j ) - 1;
  }
  return rewire_outputs( f, source );
}

map select( std::span<unsigned const> theta, map const& f )
{
  return rewire_outputs( f, checked_indices( theta, f.coarity(), true, "select" ) );
}

map select_multi( std::span<unsigned const> theta, map const& f )
{
  return rewire_outputs( f, checked_indices( theta, f.coarity(), false, "select" ) );
}

map insert( std::span<unsigned const> positions, std::span<letter const> constants, map const& f )
{
  if ( positions.size() != constants.size() )
  {
    throw shape_error( "insert", std::to_string( positions.size() ) + " constants", std::to_string( constants.size() ) );
  }
  for ( std::size_t j = 0; j < positions.size(); ++j )
  {
    if ( positions[j] == 0u || positions[j] > f.arity() )
    {
      throw domain_error( "insert: position " + std::to_string( positions[j] ) + " outside {1.." +
                          std::to_string( f.arity() ) + "}" );
    }
    if ( j > 0 && positions[j] <= positions[j - 1] )
    {
      throw domain_error( "insert: positions must be strictly increasing" );
    }
    if ( !f.alpha().contains( constants[j] ) )
    {
      throw domain_error( "insert: letter " + std::to_string( constants[j] ) + " outside alphabet" );
    }
  }
  auto const arity = f.arity() - static_cast<unsigned>( positions.size() );
  tuple y( f.arity() );
  std::vector<int> slot( f.arity(), -1 );
  for ( std::size_t j = 0; j < positions.size(); ++j )
  {
    y[positions[j] - 1] = constants[j];
    slot[positions[j] - 1] = -2;
  }
  int next = 0;
  for ( auto& s : slot )
  {
    if ( s == -1 )
    {
      s = next++;
    }
  }
  return map::from_function( f.alpha(), arity, f.coarity(), [&]( auto in, auto out ) {
    for ( unsigned i = 0; i < f.arity(); ++i )
    {
      if ( slot[i] >= 0 )
      {
        y[i] = in[slot[i]];
      }
    }
    auto const r = f.row( encode_unchecked( y, f.k() ) );
    std::copy( r.begin(), r.end(), out.begin() );
  } );
}

map reduct( map const& f, std::span<unsigned const> theta_prime, std::span<unsigned const> theta, letter o )
{
  std::vector<letter> constants( theta_prime.size(), o );
  return select( theta, insert( theta_prime, constants, f ) );
}

} // namespace revclone
