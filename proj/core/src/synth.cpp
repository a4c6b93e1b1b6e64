#include <revclone/error.hpp>
#include <revclone/gates.hpp>
#include <revclone/group.hpp>
#include <revclone/ops.hpp>
#include <revclone/synth.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace revclone
{

namespace
{

std::uint64_t power( unsigned k, unsigned e )
{
  std::uint64_t p = 1;
  for ( unsigned i = 0; i < e; ++i )
  {
    p *= k;
  }
  return p;
}

std::vector<unsigned> range( unsigned first, unsigned last )
{
  std::vector<unsigned> r;
  for ( auto i = first; i <= last; ++i )
  {
    r.push_back( i );
  }
  return r;
}

cycle_list swap_cycles( unsigned k, unsigned a, unsigned b )
{
  return alphabet_permutation::transposition( k, a, b ).cycles();
}

} // namespace

embedding embed( map const& g )
{
  auto const k = g.k();
  auto const m = g.arity();
  auto const n = g.coarity();
  std::vector<std::uint64_t> count( g.alpha().tuple_count( n ), 0 );
  for ( std::uint64_t x = 0; x < g.rows(); ++x )
  {
    ++count[g.image_index( x )];
  }
  auto const largest = *std::max_element( count.begin(), count.end() );
  unsigned extra = 0;
  while ( k > 1 && power( k, extra ) < largest )
  {
    ++extra;
  }
  auto const r = std::max( m, n + extra );

  embedding e;
  e.r = r;
  e.o = 1;
  e.theta1 = range( 1, m );
  e.constant_positions = range( m + 1, r );
  e.theta2 = range( 1, n );

  auto const K = power( k, r - m );
  auto const tags = power( k, r - n );
  std::vector<std::int64_t> partial( g.alpha().tuple_count( r ), -1 );
  std::vector<std::uint64_t> used( count.size(), 0 );
  for ( std::uint64_t x = 0; x < g.rows(); ++x )
  {
    auto const y = g.image_index( x );
    partial[x * K] = static_cast<std::int64_t>( y * tags + used[y]++ );
  }
  e.f = complete_bijection( g.alpha(), r, partial );
  return e;
}

map embedded( embedding const& e )
{
  return reduct( e.f, e.constant_positions, e.theta2, e.o );
}

std::vector<map> decompose_elementary( map const& f )
{
  if ( !is_bijective( f ) )
  {
    throw domain_error( "decompose_elementary needs a balanced bijection" );
  }
  auto const P = tuple_permutation::from_map( f );
  std::vector<map> factors;
  std::vector<bool> seen( P.degree(), false );
  for ( std::size_t start = 0; start < P.degree(); ++start )
  {
    if ( seen[start] || P[start] == start )
    {
      continue;
    }
    std::vector<std::size_t> cycle;
    for ( auto x = start; !seen[x]; x = P[x] )
    {
      seen[x] = true;
      cycle.push_back( x );
    }
    // (c1 c2 ... cL) = (c1 c2)(c1 c3)...(c1 cL), applied left to right
    auto const first = decode( { cycle[0] }, f.alpha(), f.arity() );
    for ( std::size_t j = 1; j < cycle.size(); ++j )
    {
      factors.push_back( elementary( f.alpha(), first, decode( { cycle[j] }, f.alpha(), f.arity() ) ) );
    }
  }
  return factors;
}

std::vector<map> elementary_to_atomic( map const& e )
{
  auto const pair = elementary_pair( e );
  if ( !pair )
  {
    throw domain_error( "elementary_to_atomic needs an elementary map" );
  }
  auto const& [x, y] = *pair;
  std::vector<map> path;
  auto current = x;
  for ( std::size_t i = 0; i < x.size(); ++i )
  {
    if ( x[i] == y[i] )
    {
      continue;
    }
    auto next = current;
    next[i] = y[i];
    path.push_back( elementary( e.alpha(), current, next ) );
    current = std::move( next );
  }
  std::vector<map> result = path;
  for ( auto i = path.size() - 1; i-- > 0; )
  {
    result.push_back( path[i] );
  }
  return result;
}

netlist atomic_to_gates( map const& a, letter o )
{
  if ( !is_atomic( a ) )
  {
    throw domain_error( "atomic_to_gates needs an atomic map" );
  }
  if ( !a.alpha().contains( o ) )
  {
    throw domain_error( "control letter outside alphabet" );
  }
  auto [x, y] = *elementary_pair( a );
  auto const n = a.arity();
  auto const k = a.k();
  unsigned i = 0;
  while ( x[i] == y[i] )
  {
    ++i;
  }
  netlist nl;
  nl.wires = n;
  std::vector<stage> routing;
  if ( i + 1 != n )
  {
    routing.push_back( { stage_kind::pi, { { 1, 2 } }, 1, { i + 1, n } } );
    std::swap( x[i], x[n - 1] );
    std::swap( y[i], y[n - 1] );
  }
  std::vector<stage> beta;
  for ( unsigned j = 0; j + 1 < n; ++j )
  {
    if ( x[j] != o )
    {
      beta.push_back( { stage_kind::unary, swap_cycles( k, o, x[j] ), 1, { j + 1 } } );
    }
  }
  nl.stages = routing;
  nl.stages.insert( nl.stages.end(), beta.begin(), beta.end() );
  if ( n == 1 )
  {
    nl.stages.push_back( { stage_kind::unary, swap_cycles( k, x[0], y[0] ), 1, { 1 } } );
  }
  else
  {
    nl.stages.push_back( { stage_kind::tg, swap_cycles( k, x[n - 1], y[n - 1] ), o, range( 1, n ) } );
  }
  nl.stages.insert( nl.stages.end(), beta.begin(), beta.end() );
  nl.stages.insert( nl.stages.end(), routing.begin(), routing.end() );
  return nl;
}

std::vector<bool> factor_over_swap_and_cycle( alphabet_permutation const& alpha )
{
  auto const k = alpha.degree();
  if ( k <= 1 || alpha.is_identity() )
  {
    return {};
  }
  auto const c = alphabet_permutation::full_cycle( k );
  if ( k > 2 )
  {
    auto power_of_c = alphabet_permutation( k );
    for ( unsigned j = 1; j < k; ++j )
    {
      power_of_c = power_of_c * c;
      if ( power_of_c == alpha )
      {
        return std::vector<bool>( j, true );
      }
    }
  }
  // bubble sort the image list: alpha * t_1 * ... * t_r = 1 with adjacent t's
  auto images = alpha.images();
  std::vector<unsigned> adjacent;
  for ( ;; )
  {
    std::vector<unsigned> position( k + 1 );
    for ( unsigned p = 0; p < k; ++p )
    {
      position[images[p]] = p;
    }
    unsigned i = 1;
    while ( i < k && position[i] < position[i + 1] )
    {
      ++i;
    }
    if ( i == k )
    {
      break;
    }
    std::swap( images[position[i]], images[position[i + 1]] );
    adjacent.push_back( i );
  }
  // alpha = t_r ... t_1 and (i i+1) = c^-(i-1) (1 2) c^(i-1)
  std::vector<bool> word;
  auto const push_c = [&]( unsigned times ) {
    for ( unsigned j = 0; j < times % k; ++j )
    {
      word.push_back( true );
    }
  };
  for ( auto it = adjacent.rbegin(); it != adjacent.rend(); ++it )
  {
    auto const i = *it;
    push_c( k - ( i - 1 ) % k );
    word.push_back( false );
    push_c( i - 1 );
  }
  // cancel c^k and s s
  std::vector<bool> reduced;
  for ( auto const letter_is_c : word )
  {
    reduced.push_back( letter_is_c );
    if ( !letter_is_c && reduced.size() >= 2 && !reduced[reduced.size() - 2] )
    {
      reduced.resize( reduced.size() - 2 );
    }
    else if ( letter_is_c && reduced.size() >= k &&
              std::all_of( reduced.end() - k, reduced.end(), []( bool b ) { return b; } ) )
    {
      reduced.resize( reduced.size() - k );
    }
  }
  return reduced;
}

namespace
{

using tg_builder = std::function<term( unsigned, alphabet_permutation const& )>;

term pad_right( term t, unsigned width )
{
  return terms::oplus( { std::move( t ), terms::id( width ) } );
}

term pad_left( unsigned width, term t )
{
  return terms::oplus( { terms::id( width ), std::move( t ) } );
}

term swap_step( alphabet a, unsigned n, tg_builder const& T )
{
  auto const k = a.size();
  auto const s = alphabet_permutation::transposition( k, 1, 2 );
  auto const c = alphabet_permutation::full_cycle( k );
  auto const gamma = terms::pi( wire_permutation::transposition( n + 1, n, n + 1 ) );
  auto const low = pad_left( n - 1, T( 2, s ) );
  auto const sigma1 = terms::bullet( { pad_right( T( n, c.inverse() ), 1 ), gamma, pad_right( T( n, s ), 1 ), gamma, low,
                                       pad_right( T( n, c ), 1 ) } );
  std::vector<term> sigma2;
  for ( auto m = k - 1; m >= 2; --m )
  {
    auto const swap1m = pad_right( T( n, alphabet_permutation::transposition( k, 1, m ) ), 1 );
    sigma2.push_back( terms::bullet( { swap1m, low, swap1m } ) );
  }
  if ( sigma2.empty() )
  {
    return sigma1;
  }
  auto const s2 = sigma2.size() == 1 ? sigma2.front() : terms::bullet( sigma2 );
  return terms::bullet( { s2, sigma1 } );
}

term cycle_step( alphabet a, unsigned n, tg_builder const& T )
{
  auto const k = a.size();
  auto const c = alphabet_permutation::full_cycle( k );
  auto const beta = c.pow( ( k + 1 ) / 2 );
  auto const points = beta.cycles().front();
  cycle_list reflection;
  for ( std::size_t i = 0; i + 1 < points.size() - i; ++i )
  {
    reflection.push_back( { points[i], points[points.size() - 1 - i] } );
  }
  auto const alpha = alphabet_permutation::from_cycles( k, reflection );
  auto const gamma = terms::pi( wire_permutation::transposition( n + 1, n, n + 1 ) );
  auto const top = pad_right( T( n, alpha ), 1 );
  return terms::bullet( { gamma, top, gamma, pad_left( n - 1, T( 2, beta.inverse() ) ), gamma, top, gamma,
                          pad_left( n - 1, T( 2, beta ) ) } );
}

void require_odd( alphabet a )
{
  if ( a.size() < 3 || a.size() % 2 == 0 )
  {
    throw domain_error( "the odd-alphabet lift needs an odd alphabet of size at least 3; for even alphabets the "
                        "lower-arity Toffoli gates only generate even permutations" );
  }
}

term literal( unsigned n, alphabet_permutation const& alpha )
{
  return terms::tg( n, alpha, 1 );
}

} // namespace

term lift_odd_step_swap( alphabet a, unsigned n )
{
  require_odd( a );
  if ( n < 2 )
  {
    throw domain_error( "the lift step needs n >= 2" );
  }
  return swap_step( a, n, literal );
}

term lift_odd_step_cycle( alphabet a, unsigned n )
{
  require_odd( a );
  if ( n < 2 )
  {
    throw domain_error( "the lift step needs n >= 2" );
  }
  return cycle_step( a, n, literal );
}

term lift_odd( alphabet a, unsigned n, alphabet_permutation const& alpha )
{
  require_odd( a );
  if ( n == 0 )
  {
    throw domain_error( "TG needs at least one wire" );
  }
  if ( alpha.degree() != a.size() )
  {
    throw shape_error( "lift_odd", "permutation of degree " + std::to_string( a.size() ), "degree " + std::to_string( alpha.degree() ) );
  }
  auto const k = a.size();
  auto const s = alphabet_permutation::transposition( k, 1, 2 );
  auto const c = alphabet_permutation::full_cycle( k );
  std::map<std::pair<unsigned, std::vector<unsigned>>, term> memo;
  tg_builder T = [&]( unsigned width, alphabet_permutation const& gamma ) -> term {
    if ( gamma.is_identity() )
    {
      return terms::id( width );
    }
    if ( width <= 2 )
    {
      return literal( width, gamma );
    }
    auto const key = std::pair{ width, gamma.images() };
    if ( auto it = memo.find( key ); it != memo.end() )
    {
      return it->second;
    }
    term result;
    if ( gamma == s )
    {
      result = swap_step( a, width - 1, T );
    }
    else if ( gamma == c )
    {
      result = cycle_step( a, width - 1, T );
    }
    else
    {
      // TG(n, g_1 g_2 ... g_r) applies g_1 first
      std::vector<term> chain;
      for ( auto const is_cycle : factor_over_swap_and_cycle( gamma ) )
      {
        chain.push_back( T( width, is_cycle ? c : s ) );
      }
      std::reverse( chain.begin(), chain.end() );
      result = chain.size() == 1 ? chain.front() : terms::bullet( chain );
    }
    memo.emplace( key, result );
    return result;
  };
  return T( n, alpha );
}

letter default_ancilla_letter( alphabet a, letter o )
{
  if ( a.size() < 2 )
  {
    throw domain_error( "an ancilla letter different from o needs at least two letters" );
  }
  return o == 1 ? 2 : 1;
}

term temp_storage_step( unsigned n, alphabet_permutation const& alpha, letter o, letter p )
{
  if ( n < 3 )
  {
    throw domain_error( "the temporary-storage step needs n >= 3" );
  }
  if ( o == p )
  {
    throw domain_error( "the ancilla letter must differ from the control letter" );
  }
  auto const beta = alphabet_permutation::transposition( alpha.degree(), o, p );
  auto const outer = pad_right( terms::tg( n - 1, beta, o ), 2 );
  return terms::bullet( { outer, pad_left( n - 2, terms::tg( 3, alpha, o ) ), outer } );
}

storage_lift lift_temp_storage( alphabet a, unsigned n, alphabet_permutation const& alpha, letter o, letter p )
{
  if ( n < 4 )
  {
    throw domain_error( "the temporary-storage lift needs n >= 4" );
  }
  if ( o == p )
  {
    throw domain_error( "the ancilla letter must differ from the control letter" );
  }
  if ( !a.contains( o ) || !a.contains( p ) )
  {
    throw domain_error( "control or ancilla letter outside alphabet" );
  }
  if ( alpha.degree() != a.size() )
  {
    throw shape_error( "lift_temp_storage", "permutation of degree " + std::to_string( a.size() ),
                       "degree " + std::to_string( alpha.degree() ) );
  }
  auto const levels = n - 3;
  auto const beta = alphabet_permutation::transposition( a.size(), o, p );

  storage_lift lift;
  lift.ancillas = levels;
  lift.circuit.wires = n + levels;
  std::function<void( std::vector<unsigned> const&, unsigned, alphabet_permutation const&, unsigned )> emit =
      [&]( std::vector<unsigned> const& controls, unsigned target, alphabet_permutation const& gamma, unsigned depth ) {
        if ( controls.size() <= 2 )
        {
          auto wires = controls;
          wires.push_back( target );
          lift.circuit.stages.push_back( { stage_kind::tg, gamma.cycles(), o, wires } );
          return;
        }
        auto const ancilla = n + 1 + depth;
        std::vector<unsigned> const head( controls.begin(), controls.end() - 1 );
        emit( head, ancilla, beta, depth + 1 );
        lift.circuit.stages.push_back( { stage_kind::tg, gamma.cycles(), o, { ancilla, controls.back(), target } } );
        emit( head, ancilla, beta, depth + 1 );
      };
  emit( range( 1, n - 1 ), n, alpha, 0 );

  lift.f_term = netlist_to_term( lift.circuit );
  lift.f = simulate( lift.circuit, a );
  lift.constants = tuple( levels, p );
  lift.g = select( range( 1, n ), insert( range( n + 1, n + levels ), lift.constants, lift.f ) );
  return lift;
}

namespace
{

void append_factored( std::vector<stage>& out, stage const& s, alphabet a )
{
  auto const k = a.size();
  auto const swap = alphabet_permutation::transposition( k, 1, 2 ).cycles();
  auto const cycle = alphabet_permutation::full_cycle( k ).cycles();
  auto const alpha = alphabet_permutation::from_cycle_product( k, s.perm );
  for ( auto const is_cycle : factor_over_swap_and_cycle( alpha ) )
  {
    auto part = s;
    part.perm = is_cycle ? cycle : swap;
    out.push_back( std::move( part ) );
  }
}

} // namespace

netlist synthesize( map const& f, gate_policy policy )
{
  if ( !is_bijective( f ) )
  {
    throw domain_error( "synthesis needs a balanced bijection" );
  }
  auto const a = f.alpha();
  if ( policy == gate_policy::odd_small )
  {
    require_odd( a );
  }
  netlist nl;
  nl.wires = f.arity();
  for ( auto const& e : decompose_elementary( f ) )
  {
    for ( auto const& atom : elementary_to_atomic( e ) )
    {
      auto const part = atomic_to_gates( atom, 1 );
      nl.stages.insert( nl.stages.end(), part.stages.begin(), part.stages.end() );
    }
  }
  if ( policy == gate_policy::tg_n )
  {
    return nl;
  }

  netlist small;
  small.wires = nl.wires;
  std::map<std::pair<unsigned, cycle_list>, netlist> lifted;
  for ( auto const& s : nl.stages )
  {
    if ( s.kind == stage_kind::pi )
    {
      small.stages.push_back( s );
      continue;
    }
    if ( s.kind == stage_kind::unary || s.wires.size() <= 2 )
    {
      append_factored( small.stages, s, a );
      continue;
    }
    auto const width = static_cast<unsigned>( s.wires.size() );
    auto key = std::pair{ width, s.perm };
    auto it = lifted.find( key );
    if ( it == lifted.end() )
    {
      auto const alpha = alphabet_permutation::from_cycle_product( a.size(), s.perm );
      it = lifted.emplace( key, term_to_netlist( lift_odd( a, width, alpha ) ) ).first;
    }
    for ( auto inner : it->second.stages )
    {
      for ( auto& w : inner.wires )
      {
        w = s.wires[w - 1];
      }
      if ( inner.kind == stage_kind::pi )
      {
        small.stages.push_back( std::move( inner ) );
      }
      else
      {
        append_factored( small.stages, inner, a );
      }
    }
  }
  return small;
}

} // namespace revclone
