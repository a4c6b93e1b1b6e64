#include <revclone/identities.hpp>
#include <revclone/ops.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace revclone
{

map random_map( std::mt19937_64& rng, alphabet a, unsigned arity, unsigned coarity )
{
  std::uniform_int_distribution<unsigned> letter_dist( 1, a.size() );
  std::vector<letter> table( a.tuple_count( arity ) * coarity );
  for ( auto& v : table )
  {
    v = static_cast<letter>( letter_dist( rng ) );
  }
  return map( a, arity, coarity, std::move( table ) );
}

map random_bijection( std::mt19937_64& rng, alphabet a, unsigned n )
{
  std::vector<std::uint64_t> images( a.tuple_count( n ) );
  std::iota( images.begin(), images.end(), 0 );
  std::shuffle( images.begin(), images.end(), rng );
  return map::from_function( a, n, n, [&]( std::span<letter const> x, std::span<letter> y ) {
    decode_into( images[encode_unchecked( x, a.size() )], a.size(), y );
  } );
}

namespace
{

using indices = std::vector<unsigned>;

unsigned pick( std::mt19937_64& rng, unsigned lo, unsigned hi )
{
  return std::uniform_int_distribution<unsigned>( lo, hi )( rng );
}

letter pick_letter( std::mt19937_64& rng, alphabet a )
{
  return static_cast<letter>( pick( rng, 1, a.size() ) );
}

/// r distinct indices from {1..bound} in random order.
indices distinct( std::mt19937_64& rng, unsigned bound, unsigned r )
{
  indices all( bound );
  std::iota( all.begin(), all.end(), 1u );
  std::shuffle( all.begin(), all.end(), rng );
  all.resize( r );
  return all;
}

wire_permutation random_wires( std::mt19937_64& rng, unsigned n )
{
  return wire_permutation::from_images( distinct( rng, n, n ) );
}

std::string shape( map const& f )
{
  return "(" + std::to_string( f.arity() ) + "," + std::to_string( f.coarity() ) + ")";
}

std::string list( indices const& v )
{
  std::string s = "(";
  for ( std::size_t i = 0; i < v.size(); ++i )
  {
    s += ( i ? " " : "" ) + std::to_string( v[i] );
  }
  return s + ")";
}

std::optional<std::string> compare( map const& lhs, map const& rhs, std::string const& instance )
{
  if ( lhs == rhs )
  {
    return std::nullopt;
  }
  return instance + ": sides differ, lhs " + shape( lhs ) + " rhs " + shape( rhs );
}

map ins1( unsigned i, letter a, map const& f )
{
  indices const p{ i };
  tuple const c{ a };
  return insert( p, c, f );
}

indices concat( indices a, indices const& b )
{
  a.insert( a.end(), b.begin(), b.end() );
  return a;
}

indices range( unsigned first, unsigned last )
{
  indices r;
  for ( auto i = first; i <= last; ++i )
  {
    r.push_back( i );
  }
  return r;
}

// s(I, f (+) g) = pi_beta (s(I', f) (+) s(I'', g))
std::optional<std::string> select_oplus( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 0, 2 ), pick( rng, 1, 3 ) );
  auto const g = random_map( rng, a, pick( rng, 0, 2 ), pick( rng, 1, 3 ) );
  auto const m = f.coarity();
  auto const I = distinct( rng, m + g.coarity(), pick( rng, 1, m + g.coarity() ) );
  indices J, Jbar, I1, I2;
  for ( unsigned j = 1; j <= I.size(); ++j )
  {
    if ( I[j - 1] <= m )
    {
      J.push_back( j );
      I1.push_back( I[j - 1] );
    }
    else
    {
      Jbar.push_back( j );
      I2.push_back( I[j - 1] - m );
    }
  }
  auto const beta = wire_permutation::from_images( concat( J, Jbar ) );
  auto const lhs = select( I, oplus( f, g ) );
  auto const rhs = permute_outputs( oplus( select( I1, f ), select( I2, g ) ), beta );
  return compare( lhs, rhs, "f" + shape( f ) + " g" + shape( g ) + " I=" + list( I ) );
}

// s(I, pi_alpha f) = s(alpha^-1(I), f)
std::optional<std::string> select_pi( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 0, 3 ), pick( rng, 1, 4 ) );
  auto const alpha = random_wires( rng, f.coarity() );
  auto const I = distinct( rng, f.coarity(), pick( rng, 0, f.coarity() ) );
  auto const inv = alpha.inverse();
  indices moved;
  for ( auto i : I )
  {
    moved.push_back( inv( i ) );
  }
  return compare( select( I, permute_outputs( f, alpha ) ), select( moved, f ),
                  "f" + shape( f ) + " alpha=" + alpha.to_string() + " I=" + list( I ) );
}

struct compose_instance
{
  map f;
  map g;
  unsigned k;
};

// f : A^n -> A^m, g : A^l -> A^p with 1 <= k <= min(n, p)
compose_instance random_compose( std::mt19937_64& rng, alphabet a, unsigned min_k = 1 )
{
  auto const k = pick( rng, min_k, 2 );
  auto f = random_map( rng, a, pick( rng, k, 3 ), pick( rng, 1, 3 ) );
  auto g = random_map( rng, a, pick( rng, 0, 2 ), pick( rng, k, 3 ) );
  return { std::move( f ), std::move( g ), k };
}

std::string describe( compose_instance const& c )
{
  return "f" + shape( c.f ) + " g" + shape( c.g ) + " k=" + std::to_string( c.k );
}

// s(I, f o_k g) = s(I', f) o_k s(I'', g) for increasing I, and through a wire permutation otherwise
std::optional<std::string> select_compose( std::mt19937_64& rng, alphabet a, bool sorted )
{
  auto const c = random_compose( rng, a );
  auto const m = c.f.coarity();
  auto const total = m + c.g.coarity() - c.k;
  auto I = distinct( rng, total, pick( rng, 1, total ) );
  auto J = I;
  std::sort( J.begin(), J.end() );
  if ( sorted )
  {
    I = J;
  }
  indices I1, tail;
  for ( auto i : J )
  {
    ( i <= m ? I1 : tail ).push_back( i <= m ? i : i - m + c.k );
  }
  auto const I2 = concat( range( 1, c.k ), tail );
  auto const composed = compose_k( select( I1, c.f ), select( I2, c.g ), c.k );
  // s(I, h) = pi_{beta^-1} s(J, h) where beta^-1(i) is the position of J_i in I
  indices beta_inverse;
  for ( auto j : J )
  {
    beta_inverse.push_back( static_cast<unsigned>( std::find( I.begin(), I.end(), j ) - I.begin() ) + 1 );
  }
  auto const rhs = permute_outputs( composed, wire_permutation::from_images( beta_inverse ) );
  return compare( select( I, compose_k( c.f, c.g, c.k ) ), rhs, describe( c ) + " I=" + list( I ) );
}

// s(I', f) (+) s(I'', g) = s(I' (+) (I'' + m), f (+) g)
std::optional<std::string> oplus_select( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 0, 2 ), pick( rng, 1, 3 ) );
  auto const g = random_map( rng, a, pick( rng, 0, 2 ), pick( rng, 1, 3 ) );
  auto const I1 = distinct( rng, f.coarity(), pick( rng, 0, f.coarity() ) );
  auto const I2 = distinct( rng, g.coarity(), pick( rng, 0, g.coarity() ) );
  auto I = I1;
  for ( auto i : I2 )
  {
    I.push_back( i + f.coarity() );
  }
  return compare( oplus( select( I1, f ), select( I2, g ) ), select( I, oplus( f, g ) ),
                  "f" + shape( f ) + " g" + shape( g ) + " I'=" + list( I1 ) + " I''=" + list( I2 ) );
}

// pi_alpha s(I, f) = s(I^alpha, f) with I^alpha_i = I_{alpha^-1 i}
std::optional<std::string> pi_select( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 0, 3 ), pick( rng, 1, 4 ) );
  auto const I = distinct( rng, f.coarity(), pick( rng, 1, f.coarity() ) );
  auto const alpha = random_wires( rng, static_cast<unsigned>( I.size() ) );
  auto const inv = alpha.inverse();
  indices Ia;
  for ( unsigned i = 1; i <= I.size(); ++i )
  {
    Ia.push_back( I[inv( i ) - 1] );
  }
  return compare( permute_outputs( select( I, f ), alpha ), select( Ia, f ),
                  "f" + shape( f ) + " alpha=" + alpha.to_string() + " I=" + list( I ) );
}

// s(I', f) o_k s(I'', g) = s(I' (+) (m+1, ..., m+u-k), f o_k (pi_beta o_p g)), beta^-1(i) = I''_i
std::optional<std::string> compose_select( std::mt19937_64& rng, alphabet a )
{
  auto const c = random_compose( rng, a );
  auto const m = c.f.coarity();
  auto const p = c.g.coarity();
  auto const I1 = distinct( rng, m, pick( rng, 0, m ) );
  auto const I2 = distinct( rng, p, pick( rng, c.k, p ) );
  auto beta_inverse = I2;
  for ( unsigned i = 1; i <= p; ++i )
  {
    if ( std::find( I2.begin(), I2.end(), i ) == I2.end() )
    {
      beta_inverse.push_back( i );
    }
  }
  auto const beta = wire_permutation::from_images( beta_inverse ).inverse();
  auto const u = static_cast<unsigned>( I2.size() );
  auto const I = concat( I1, range( m + 1, m + u - c.k ) );
  auto const rhs = select( I, compose_k( c.f, permute_outputs( c.g, beta ), c.k ) );
  return compare( compose_k( select( I1, c.f ), select( I2, c.g ), c.k ), rhs,
                  describe( c ) + " I'=" + list( I1 ) + " I''=" + list( I2 ) );
}

// k(i, a, f (+) g) = k(i, a, f) (+) g for i <= n, f (+) k(i - n, a, g) otherwise
std::optional<std::string> insert_oplus( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 0, 3 ), pick( rng, 0, 2 ) );
  auto const g = random_map( rng, a, pick( rng, 0, 3 ), pick( rng, 0, 2 ) );
  auto const n = f.arity();
  if ( n + g.arity() == 0 )
  {
    return std::nullopt;
  }
  auto const i = pick( rng, 1, n + g.arity() );
  auto const c = pick_letter( rng, a );
  auto const rhs = i <= n ? oplus( ins1( i, c, f ), g ) : oplus( f, ins1( i - n, c, g ) );
  return compare( ins1( i, c, oplus( f, g ) ), rhs,
                  "f" + shape( f ) + " g" + shape( g ) + " i=" + std::to_string( i ) );
}

// k(i, a, pi_alpha f) = pi_alpha k(i, a, f)
std::optional<std::string> insert_pi( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 1, 3 ), pick( rng, 1, 3 ) );
  auto const alpha = random_wires( rng, f.coarity() );
  auto const i = pick( rng, 1, f.arity() );
  auto const c = pick_letter( rng, a );
  return compare( ins1( i, c, permute_outputs( f, alpha ) ), permute_outputs( ins1( i, c, f ), alpha ),
                  "f" + shape( f ) + " alpha=" + alpha.to_string() + " i=" + std::to_string( i ) );
}

// k(i, a, f o_k g) = f o_k k(i, a, g) for i <= arity(g), k(i - arity(g) + k, a, f) o_k g otherwise
std::optional<std::string> insert_compose( std::mt19937_64& rng, alphabet a )
{
  auto const c = random_compose( rng, a );
  auto const l = c.g.arity();
  auto const total = l + c.f.arity() - c.k;
  if ( total == 0 )
  {
    return std::nullopt;
  }
  auto const i = pick( rng, 1, total );
  auto const x = pick_letter( rng, a );
  auto const rhs = i <= l ? compose_k( c.f, ins1( i, x, c.g ), c.k ) : compose_k( ins1( i - l + c.k, x, c.f ), c.g, c.k );
  return compare( ins1( i, x, compose_k( c.f, c.g, c.k ) ), rhs, describe( c ) + " i=" + std::to_string( i ) );
}

// k(i1, a1, f) (+) g = k(i1, a1, f (+) g); f (+) k(i2, a2, g) = k(i2 + n, a2, f (+) g); both together
std::optional<std::string> oplus_insert( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 1, 3 ), pick( rng, 0, 2 ) );
  auto const g = random_map( rng, a, pick( rng, 1, 3 ), pick( rng, 0, 2 ) );
  auto const n = f.arity();
  auto const i1 = pick( rng, 1, n );
  auto const i2 = pick( rng, 1, g.arity() );
  auto const a1 = pick_letter( rng, a );
  auto const a2 = pick_letter( rng, a );
  auto const fg = oplus( f, g );
  auto const instance = "f" + shape( f ) + " g" + shape( g ) + " i1=" + std::to_string( i1 ) + " i2=" + std::to_string( i2 );
  if ( auto r = compare( oplus( ins1( i1, a1, f ), g ), ins1( i1, a1, fg ), instance + " (left)" ) )
  {
    return r;
  }
  if ( auto r = compare( oplus( f, ins1( i2, a2, g ) ), ins1( i2 + n, a2, fg ), instance + " (right)" ) )
  {
    return r;
  }
  return compare( oplus( ins1( i1, a1, f ), ins1( i2, a2, g ) ), ins1( i1, a1, ins1( i2 + n, a2, fg ) ),
                  instance + " (both)" );
}

// f o_k k(i2, a2, g) = k(i2, a2, f o_k g);
// k(i1, a1, f) o_k g = k(l+n-k, a1, (f o_n pi_beta) o_k g) for i1 <= k, beta = (i1 ... n),
//                    = k(i1+l-k, a1, f o_k g) for i1 > k
std::optional<std::string> compose_insert( std::mt19937_64& rng, alphabet a )
{
  auto const k = pick( rng, 1, 2 );
  auto const f = random_map( rng, a, pick( rng, k + 1, 3 ), pick( rng, 1, 3 ) );
  auto const g = random_map( rng, a, pick( rng, 1, 2 ), pick( rng, k, 3 ) );
  auto const n = f.arity();
  auto const l = g.arity();
  auto const i1 = pick( rng, 1, n );
  auto const i2 = pick( rng, 1, l );
  auto const a1 = pick_letter( rng, a );
  auto const a2 = pick_letter( rng, a );
  auto const instance = "f" + shape( f ) + " g" + shape( g ) + " k=" + std::to_string( k ) + " i1=" +
                        std::to_string( i1 ) + " i2=" + std::to_string( i2 );
  if ( auto r = compare( compose_k( f, ins1( i2, a2, g ), k ), ins1( i2, a2, compose_k( f, g, k ) ), instance + " (inner)" ) )
  {
    return r;
  }
  auto const outer = [&]( map const& inner ) {
    if ( i1 <= k )
    {
      indices images = range( 1, n );
      for ( auto p = i1; p < n; ++p )
      {
        images[p - 1] = p + 1;
      }
      images[n - 1] = i1;
      auto const beta = wire_permutation::from_images( images );
      return ins1( l + n - k, a1, compose_k( permute_inputs( f, beta ), inner, k ) );
    }
    return ins1( i1 + l - k, a1, compose_k( f, inner, k ) );
  };
  if ( auto r = compare( compose_k( ins1( i1, a1, f ), g, k ), outer( g ), instance + " (outer)" ) )
  {
    return r;
  }
  return compare( compose_k( ins1( i1, a1, f ), ins1( i2, a2, g ), k ), ins1( i2, a2, outer( g ) ), instance + " (both)" );
}

// s(I, k(i, a, f)) = k(i, a, s(I, f))
std::optional<std::string> select_insert( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 1, 3 ), pick( rng, 1, 3 ) );
  auto const I = distinct( rng, f.coarity(), pick( rng, 0, f.coarity() ) );
  auto const i = pick( rng, 1, f.arity() );
  auto const c = pick_letter( rng, a );
  return compare( select( I, ins1( i, c, f ) ), ins1( i, c, select( I, f ) ),
                  "f" + shape( f ) + " I=" + list( I ) + " i=" + std::to_string( i ) );
}

// s(I, delta f) = delta s(I, f) and s(I, nabla f) = nabla s(I, f)
std::optional<std::string> select_delta_nabla( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 0, 3 ), pick( rng, 1, 3 ) );
  auto const I = distinct( rng, f.coarity(), pick( rng, 0, f.coarity() ) );
  auto const instance = "f" + shape( f ) + " I=" + list( I );
  if ( auto r = compare( select( I, delta( f ) ), delta( select( I, f ) ), instance + " (delta)" ) )
  {
    return r;
  }
  return compare( select( I, nabla( f ) ), nabla( select( I, f ) ), instance + " (nabla)" );
}

// k(i, a, delta f) = k(1, a, k(1, a, f)) for i = 1, delta k(i+1, a, f) for i >= 2
std::optional<std::string> insert_delta( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 2, 4 ), pick( rng, 1, 2 ) );
  auto const i = pick( rng, 1, f.arity() - 1 );
  auto const c = pick_letter( rng, a );
  auto const rhs = i == 1 ? ins1( 1, c, ins1( 1, c, f ) ) : delta( ins1( i + 1, c, f ) );
  return compare( ins1( i, c, delta( f ) ), rhs, "f" + shape( f ) + " i=" + std::to_string( i ) );
}

// k(i, a, nabla f) = f for i = 1, nabla k(i-1, a, f) for i > 1
std::optional<std::string> insert_nabla( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 0, 3 ), pick( rng, 1, 2 ) );
  auto const i = pick( rng, 1, f.arity() + 1 );
  auto const c = pick_letter( rng, a );
  auto const rhs = i == 1 ? f : nabla( ins1( i - 1, c, f ) );
  return compare( ins1( i, c, nabla( f ) ), rhs, "f" + shape( f ) + " i=" + std::to_string( i ) );
}

// delta k(i, a, f) = k(2, a, delta(f . pi_(1 2 3))) for i = 1, k(2, a, delta(f . pi_(2 3))) for i = 2,
// k(i-1, a, delta f) for i > 2
std::optional<std::string> delta_insert( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 3, 5 ), pick( rng, 1, 2 ) );
  auto const n = f.arity();
  auto const i = pick( rng, 1, n );
  auto const c = pick_letter( rng, a );
  map rhs = f;
  if ( i <= 2 )
  {
    auto const cycle = i == 1 ? cycle_list{ { 1, 2, 3 } } : cycle_list{ { 2, 3 } };
    rhs = ins1( 2, c, delta( bullet( f, pi( a, wire_permutation::from_cycles( n, cycle ) ) ) ) );
  }
  else
  {
    rhs = ins1( i - 1, c, delta( f ) );
  }
  return compare( delta( ins1( i, c, f ) ), rhs, "f" + shape( f ) + " i=" + std::to_string( i ) );
}

// nabla k(i, a, f) = k(i+1, a, nabla f)
std::optional<std::string> nabla_insert( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 1, 3 ), pick( rng, 1, 2 ) );
  auto const i = pick( rng, 1, f.arity() );
  auto const c = pick_letter( rng, a );
  return compare( nabla( ins1( i, c, f ) ), ins1( i + 1, c, nabla( f ) ), "f" + shape( f ) + " i=" + std::to_string( i ) );
}

// f o_k g = (f (+) i_{t-k}) . pi_alpha . (g (+) i_{n-k}) for f : A^n -> A^s, g : A^m -> A^t
std::optional<std::string> compose_rewrite( std::mt19937_64& rng, alphabet a )
{
  auto const k = pick( rng, 0, 2 );
  auto const f = random_map( rng, a, pick( rng, std::max( k, 1u ), 3 ), pick( rng, 1, 2 ) );
  auto const g = random_map( rng, a, pick( rng, 0, 2 ), pick( rng, std::max( k, 1u ), 3 ) );
  auto const n = f.arity();
  auto const t = g.coarity();
  indices images = range( 1, t + n - k );
  for ( auto j = k + 1; j <= t; ++j )
  {
    images[j - 1] = n + ( j - k );
  }
  for ( auto j = t + 1; j <= t + n - k; ++j )
  {
    images[j - 1] = k + ( j - t );
  }
  auto const alpha = wire_permutation::from_images( images );
  auto const padded_f = oplus( f, map::identity( a, t - k ) );
  auto const padded_g = oplus( g, map::identity( a, n - k ) );
  auto const rhs = bullet( padded_f, bullet( pi( a, alpha ), padded_g ) );
  return compare( compose_k( f, g, k ), rhs, "f" + shape( f ) + " g" + shape( g ) + " k=" + std::to_string( k ) );
}

// tau f = f o_m pi_(1 2), zeta f = f o_m pi_(m ... 2 1),
// bar_tau f = (tau i_n) o_n f, bar_zeta f = (zeta i_n) o_n f
std::optional<std::string> unary_forms( std::mt19937_64& rng, alphabet a )
{
  auto const f = random_map( rng, a, pick( rng, 1, 4 ), pick( rng, 1, 4 ) );
  auto const m = f.arity();
  auto const n = f.coarity();
  auto const instance = "f" + shape( f );
  if ( auto r = compare( tau( f ), compose_k( f, pi( a, m < 2 ? wire_permutation( m ) : wire_permutation::transposition( m, 1, 2 ) ), m ), instance + " (tau)" ) )
  {
    return r;
  }
  auto const down = wire_permutation::full_cycle( m ).inverse();
  if ( auto r = compare( zeta( f ), compose_k( f, pi( a, down ), m ), instance + " (zeta)" ) )
  {
    return r;
  }
  if ( auto r = compare( bar_tau( f ), compose_k( tau( map::identity( a, n ) ), f, n ), instance + " (bar tau)" ) )
  {
    return r;
  }
  return compare( bar_zeta( f ), compose_k( zeta( map::identity( a, n ) ), f, n ), instance + " (bar zeta)" );
}

} // namespace

std::vector<identity_law> const& identity_laws()
{
  static std::vector<identity_law> const laws{
      { "select-oplus", "s(I, f (+) g) = pi_beta (s(I', f) (+) s(I'', g))", select_oplus },
      { "select-pi", "s(I, pi_alpha f) = s(alpha^-1(I), f)", select_pi },
      { "select-compose", "s(I, f o_k g) = s(I', f) o_k s(I'', g), I increasing",
        []( std::mt19937_64& rng, alphabet a ) { return select_compose( rng, a, true ); } },
      { "select-compose-unsorted", "s(I, f o_k g) = pi_{beta^-1} (s(I', f) o_k s(I'', g))",
        []( std::mt19937_64& rng, alphabet a ) { return select_compose( rng, a, false ); } },
      { "oplus-select", "s(I', f) (+) s(I'', g) = s(I' (+) (I'' + m), f (+) g)", oplus_select },
      { "pi-select", "pi_alpha s(I, f) = s(I^alpha, f)", pi_select },
      { "compose-select", "s(I', f) o_k s(I'', g) = s(I' (+) (m+1..m+u-k), f o_k (pi_beta o_p g))", compose_select },
      { "insert-oplus", "k(i, a, f (+) g) = k(i, a, f) (+) g | f (+) k(i-n, a, g)", insert_oplus },
      { "insert-pi", "k(i, a, pi_alpha f) = pi_alpha k(i, a, f)", insert_pi },
      { "insert-compose", "k(i, a, f o_k g) = f o_k k(i, a, g) | k(i-l+k, a, f) o_k g", insert_compose },
      { "oplus-insert", "k(i1, a1, f) (+) k(i2, a2, g) = k(i1, a1, k(i2+n, a2, f (+) g))", oplus_insert },
      { "compose-insert", "k(i1, a1, f) o_k k(i2, a2, g) = k(i2, a2, k(., a1, ...))", compose_insert },
      { "select-insert", "s(I, k(i, a, f)) = k(i, a, s(I, f))", select_insert },
      { "select-delta-nabla", "s(I, delta f) = delta s(I, f), s(I, nabla f) = nabla s(I, f)", select_delta_nabla },
      { "insert-delta", "k(i, a, delta f) = k(1, a, k(1, a, f)) | delta k(i+1, a, f)", insert_delta },
      { "insert-nabla", "k(i, a, nabla f) = f | nabla k(i-1, a, f)", insert_nabla },
      { "delta-insert", "delta k(i, a, f) = k(2, a, delta(f . pi_(1 2 3))) | k(2, a, delta(f . pi_(2 3))) | k(i-1, a, delta f)",
        delta_insert },
      { "nabla-insert", "nabla k(i, a, f) = k(i+1, a, nabla f)", nabla_insert },
      { "compose-rewrite", "f o_k g = (f (+) i_{t-k}) . pi_alpha . (g (+) i_{n-k})", compose_rewrite },
      { "unary-forms", "tau f = f o_m pi_(1 2), zeta f = f o_m pi_(m..1), bar forms via i_n", unary_forms },
  };
  return laws;
}

std::vector<law_result> check_identities( alphabet a, unsigned trials, std::uint64_t seed, std::string_view filter )
{
  std::vector<law_result> results;
  auto const& laws = identity_laws();
  for ( std::size_t i = 0; i < laws.size(); ++i )
  {
    auto const& law = laws[i];
    if ( !filter.empty() && law.name.find( filter ) == std::string::npos )
    {
      continue;
    }
    std::mt19937_64 rng( seed + i );
    law_result r{ law.name, law.statement, trials, 0, {} };
    for ( unsigned t = 0; t < trials; ++t )
    {
      std::optional<std::string> failure;
      try
      {
        failure = law.trial( rng, a );
      }
      catch ( std::exception const& e )
      {
        failure = std::string( "exception: " ) + e.what();
      }
      if ( failure )
      {
        if ( r.failures++ == 0 )
        {
          r.first_failure = "trial " + std::to_string( t ) + ": " + *failure;
        }
      }
    }
    results.push_back( std::move( r ) );
  }
  return results;
}

} // namespace revclone
