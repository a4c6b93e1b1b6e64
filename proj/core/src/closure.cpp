#include <revclone/closure.hpp>
#include <revclone/error.hpp>
#include <revclone/ops.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <unordered_set>

namespace revclone
{

void validate( search_caps const& caps )
{
  if ( caps.max_arity == 0 || caps.max_coarity == 0 || caps.max_elements == 0 || caps.max_rounds == 0 )
  {
    throw domain_error( "search caps must all be positive" );
  }
}

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

bool all_bijective( std::vector<named_map> const& F )
{
  return std::all_of( F.begin(), F.end(), []( named_map const& f ) { return is_bijective( f.value ); } );
}

big_int factorial( std::uint64_t n )
{
  big_int f = 1;
  for ( std::uint64_t i = 2; i <= n; ++i )
  {
    f *= i;
  }
  return f;
}

class ordered_set
{
public:
  bool insert( map const& f )
  {
    if ( !seen_.insert( f ).second )
    {
      return false;
    }
    items_.push_back( f );
    return true;
  }
  std::vector<map> take() { return std::move( items_ ); }

private:
  std::unordered_set<map> seen_;
  std::vector<map> items_;
};

} // namespace

tuple_group slice_group( std::vector<named_map> const& F, alphabet a, unsigned n )
{
  std::vector<tuple_group::generator> gens;
  for ( auto const& f : F )
  {
    if ( f.value.alpha() != a )
    {
      throw shape_error( "generator '" + f.name + "'", "alphabet of size " + std::to_string( a.size() ),
                         "alphabet of size " + std::to_string( f.value.k() ) );
    }
    if ( !is_bijective( f.value ) )
    {
      throw domain_error( "generator '" + f.name + "' is not a balanced bijection" );
    }
    if ( f.value.arity() > n )
    {
      throw domain_error( "generator '" + f.name + "' has arity " + std::to_string( f.value.arity() ) + " > " + std::to_string( n ) );
    }
    auto const m = f.value.arity();
    auto padded = m < n ? oplus( f.value, map::identity( a, n - m ) ) : f.value;
    auto name = m < n ? f.name + " (+) i" + std::to_string( n - m ) : f.name;
    gens.push_back( { std::move( name ), tuple_permutation::from_map( padded ) } );
  }
  if ( n >= 2 )
  {
    auto const swap = wire_permutation::transposition( n, 1, 2 );
    gens.push_back( { "pi" + swap.to_string(), tuple_permutation::from_map( pi( a, swap ) ) } );
  }
  if ( n >= 3 )
  {
    auto const cycle = wire_permutation::full_cycle( n );
    gens.push_back( { "pi" + cycle.to_string(), tuple_permutation::from_map( pi( a, cycle ) ) } );
  }
  return tuple_group::build( a.tuple_count( n ), std::move( gens ) );
}

saturation saturate( std::vector<map> const& F, alphabet a, search_caps const& caps, bool with_delta_nabla )
{
  validate( caps );
  saturation result;
  // combine() holds references into known while add() appends, so it must not reallocate
  std::deque<map> known;
  std::unordered_set<map> seen;
  bool stop = false;

  auto const fits = [&]( unsigned arity, unsigned coarity ) {
    if ( arity > caps.max_arity || coarity > caps.max_coarity )
    {
      result.shape_pruned = true;
      return false;
    }
    return true;
  };
  auto const add = [&]( map f ) {
    if ( stop || !fits( f.arity(), f.coarity() ) || seen.contains( f ) )
    {
      return;
    }
    if ( known.size() >= caps.max_elements )
    {
      result.overflow = true;
      stop = true;
      return;
    }
    seen.insert( f );
    known.push_back( std::move( f ) );
  };
  auto const combine = [&]( map const& f, map const& g ) {
    if ( fits( f.arity() + g.arity(), f.coarity() + g.coarity() ) )
    {
      add( oplus( f, g ) );
    }
    for ( unsigned k = 1; k <= std::min( f.arity(), g.coarity() ) && !stop; ++k )
    {
      if ( fits( g.arity() + f.arity() - k, f.coarity() + g.coarity() - k ) )
      {
        add( compose_k( f, g, k ) );
      }
    }
  };

  add( map::identity( a, 1 ) );
  for ( auto const& f : F )
  {
    if ( f.alpha() != a )
    {
      throw shape_error( "saturate", "alphabet of size " + std::to_string( a.size() ),
                         "alphabet of size " + std::to_string( f.k() ) );
    }
    add( f );
  }

  std::size_t begin = 0;
  std::size_t end = known.size();
  while ( begin < end && !stop && result.rounds < caps.max_rounds )
  {
    ++result.rounds;
    for ( auto x = begin; x < end && !stop; ++x )
    {
      add( tau( known[x] ) );
      add( zeta( known[x] ) );
      if ( with_delta_nabla )
      {
        add( delta( known[x] ) );
        if ( fits( known[x].arity() + 1, known[x].coarity() ) )
        {
          add( nabla( known[x] ) );
        }
      }
      for ( std::size_t y = 0; y < end && !stop; ++y )
      {
        combine( known[x], known[y] );
        if ( y < begin )
        {
          combine( known[y], known[x] );
        }
      }
    }
    begin = end;
    end = known.size();
  }
  result.complete = !stop && begin == end;
  result.maps.assign( std::make_move_iterator( known.begin() ), std::make_move_iterator( known.end() ) );
  return result;
}

std::vector<map> op_K( std::vector<map> const& F )
{
  ordered_set out;
  for ( auto const& f : F )
  {
    auto const n = f.arity();
    auto const k = f.k();
    for ( std::uint32_t mask = 0; mask < ( 1u << n ); ++mask )
    {
      std::vector<unsigned> positions;
      for ( unsigned i = 0; i < n; ++i )
      {
        if ( mask & ( 1u << i ) )
        {
          positions.push_back( i + 1 );
        }
      }
      auto const r = static_cast<unsigned>( positions.size() );
      tuple constants( r );
      for ( std::uint64_t c = 0; c < power( k, r ); ++c )
      {
        decode_into( c, k, constants );
        out.insert( insert( positions, constants, f ) );
      }
    }
  }
  return out.take();
}

std::vector<map> op_S( std::vector<map> const& F )
{
  ordered_set out;
  for ( auto const& f : F )
  {
    auto const m = f.coarity();
    // every injective theta, by length then lexicographically
    std::vector<unsigned> theta;
    std::vector<bool> used( m, false );
    std::function<void( unsigned )> rec = [&]( unsigned length ) {
      if ( theta.size() == length )
      {
        out.insert( select( theta, f ) );
        return;
      }
      for ( unsigned j = 1; j <= m; ++j )
      {
        if ( !used[j - 1] )
        {
          used[j - 1] = true;
          theta.push_back( j );
          rec( length );
          theta.pop_back();
          used[j - 1] = false;
        }
      }
    };
    for ( unsigned length = 0; length <= m; ++length )
    {
      rec( length );
    }
  }
  return out.take();
}

std::vector<map> op_R( std::vector<map> const& F )
{
  std::vector<map> out;
  for ( auto const& f : F )
  {
    if ( is_bijective( f ) )
    {
      out.push_back( f );
    }
  }
  return out;
}

std::string to_string( realisation_kind kind )
{
  switch ( kind )
  {
  case realisation_kind::isomorphic:
    return "isomorphic";
  case realisation_kind::no_garbage:
    return "no-garbage";
  case realisation_kind::no_constants:
    return "no-constants";
  case realisation_kind::general:
    return "general";
  case realisation_kind::not_found:
    return "not-found";
  }
  return "?";
}

std::string to_string( storage_level level )
{
  switch ( level )
  {
  case storage_level::none:
    return "none";
  case storage_level::weak:
    return "weak";
  case storage_level::strong:
    return "strong";
  }
  return "?";
}

bool realises( map const& f, std::span<letter const> constants, map const& g )
{
  auto const m = g.arity();
  auto const n = g.coarity();
  if ( f.alpha() != g.alpha() || f.arity() != m + constants.size() || f.coarity() < n )
  {
    return false;
  }
  auto const k = f.k();
  auto const K = power( k, static_cast<unsigned>( constants.size() ) );
  auto const tail = encode_unchecked( constants, k );
  for ( std::uint64_t x = 0; x < g.rows(); ++x )
  {
    auto const out = f.row( x * K + tail );
    auto const want = g.row( x );
    if ( !std::equal( want.begin(), want.end(), out.begin() ) )
    {
      return false;
    }
  }
  return true;
}

namespace
{

/// Searches slices of a bijective generating set. Conditions are phrased on the tuple
/// permutation P of a candidate f in B_l and the index of the trailing constants.
class slice_search
{
public:
  slice_search( std::vector<named_map> const& F, alphabet a, search_caps const& caps ) : F_( F ), a_( a ), caps_( caps ) {}

  tuple_group const& group( unsigned l )
  {
    auto it = groups_.find( l );
    if ( it == groups_.end() )
    {
      std::vector<named_map> usable;
      for ( auto const& f : F_ )
      {
        if ( f.value.arity() <= l )
        {
          usable.push_back( f );
        }
      }
      it = groups_.emplace( l, slice_group( usable, a_, l ) ).first;
    }
    return it->second;
  }

  bool is_full( unsigned l )
  {
    return group( l ).order() == factorial( a_.tuple_count( l ) );
  }

  /// First (constants, element) in lexicographic constant order satisfying `ok`.
  std::optional<std::pair<tuple, tuple_permutation>> find(
      unsigned l, unsigned m, std::function<bool( tuple_permutation const&, std::uint64_t )> const& ok )
  {
    auto const& G = group( l );
    if ( G.order() > caps_.max_elements )
    {
      truncated = true;
      return std::nullopt;
    }
    std::vector<tuple_permutation> elements;
    G.for_each_element( [&]( tuple_permutation const& p ) { elements.push_back( p ); }, caps_.max_elements );
    auto const K = power( a_.size(), l - m );
    for ( std::uint64_t c = 0; c < K; ++c )
    {
      for ( auto const& p : elements )
      {
        if ( ok( p, c ) )
        {
          tuple constants( l - m );
          decode_into( c, a_.size(), constants );
          return std::pair{ constants, p };
        }
      }
    }
    return std::nullopt;
  }

  bool truncated = false;

private:
  std::vector<named_map> const& F_;
  alphabet a_;
  search_caps caps_;
  std::map<unsigned, tuple_group> groups_;
};

/// Condition g_i(x) = f_i(x, c) on P in B_l for g : A^m -> A^n.
bool realises_perm( tuple_permutation const& P, std::uint64_t c, map const& g, unsigned l )
{
  auto const k = g.k();
  auto const K = power( k, l - g.arity() );
  auto const drop = power( k, l - g.coarity() );
  for ( std::uint64_t x = 0; x < g.rows(); ++x )
  {
    if ( P[x * K + c] / drop != g.image_index( x ) )
    {
      return false;
    }
  }
  return true;
}

/// Weak storage for balanced g: the trailing outputs on (x, c) reproduce c.
bool weak_perm( tuple_permutation const& P, std::uint64_t c, map const& g, unsigned l )
{
  auto const K = power( g.k(), l - g.arity() );
  for ( std::uint64_t x = 0; x < g.rows(); ++x )
  {
    auto const y = P[x * K + c];
    if ( y / K != g.image_index( x ) || y % K != c )
    {
      return false;
    }
  }
  return true;
}

bool strong_perm( tuple_permutation const& P, std::uint64_t c, map const& g, unsigned l )
{
  if ( !weak_perm( P, c, g, l ) )
  {
    return false;
  }
  auto const K = power( g.k(), l - g.arity() );
  std::vector<bool> hit( K );
  for ( std::uint64_t b = 0; b < g.rows(); ++b )
  {
    std::fill( hit.begin(), hit.end(), false );
    for ( std::uint64_t z = 0; z < K; ++z )
    {
      auto const t = P[b * K + z] % K;
      if ( hit[t] )
      {
        return false;
      }
      hit[t] = true;
    }
  }
  return true;
}

/// In the full symmetric group on A^l: rows (x, 1, ..., 1) go to (g(x), tag) with
/// tags handed out in lexicographic order per image; nothing if some image has too many preimages.
std::optional<map> construct_realisation( map const& g, unsigned l )
{
  auto const k = g.k();
  auto const K = power( k, l - g.arity() );
  auto const tags = power( k, l - g.coarity() );
  std::vector<std::int64_t> partial( g.alpha().tuple_count( l ), -1 );
  std::vector<std::uint64_t> used( g.alpha().tuple_count( g.coarity() ), 0 );
  for ( std::uint64_t x = 0; x < g.rows(); ++x )
  {
    auto const y = g.image_index( x );
    if ( used[y] >= tags )
    {
      return std::nullopt;
    }
    partial[x * K] = static_cast<std::int64_t>( y * tags + used[y]++ );
  }
  return complete_bijection( g.alpha(), l, partial );
}

map to_map( tuple_permutation const& P, alphabet a, unsigned l )
{
  return P.to_map( a, l );
}

realisation search_bijective( map const& g, std::vector<named_map> const& F, alphabet a, search_caps const& caps )
{
  auto const m = g.arity();
  auto const n = g.coarity();
  slice_search search( F, a, caps );
  realisation r;

  auto const try_level = [&]( realisation_kind kind, unsigned l ) -> bool {
    if ( l < std::max( m, n ) || l > caps.max_arity )
    {
      return false;
    }
    if ( search.is_full( l ) )
    {
      if ( auto f = construct_realisation( g, l ) )
      {
        r.kind = kind;
        r.f = std::move( f );
        r.constants = tuple( l - m, 1 );
        return true;
      }
      return false;
    }
    auto const found = search.find( l, m, [&]( tuple_permutation const& P, std::uint64_t c ) { return realises_perm( P, c, g, l ); } );
    if ( found )
    {
      r.kind = kind;
      r.f = to_map( found->second, a, l );
      r.constants = found->first;
      return true;
    }
    return false;
  };

  // isomorphic: membership in the slice of arity m
  if ( m == n && is_bijective( g ) && m <= caps.max_arity )
  {
    auto const& G = search.group( m );
    auto const P = tuple_permutation::from_map( g );
    if ( G.contains( P ) )
    {
      r.kind = realisation_kind::isomorphic;
      r.f = g;
      try
      {
        r.words = G.witness( P );
      }
      catch ( error const& )
      {
      }
      return r;
    }
  }
  if ( n >= m && try_level( realisation_kind::no_garbage, n ) )
  {
    r.truncated = search.truncated;
    return r;
  }
  if ( m >= n && try_level( realisation_kind::no_constants, m ) )
  {
    r.truncated = search.truncated;
    return r;
  }
  for ( auto l = std::max( m, n ); l <= caps.max_arity; ++l )
  {
    if ( try_level( realisation_kind::general, l ) )
    {
      break;
    }
  }
  r.truncated = search.truncated;
  return r;
}

realisation search_saturated( map const& g, std::vector<named_map> const& F, alphabet a, search_caps const& caps )
{
  std::vector<map> gens;
  for ( auto const& f : F )
  {
    gens.push_back( f.value );
  }
  auto const closure = saturate( gens, a, caps, false );
  auto const m = g.arity();
  auto const n = g.coarity();
  realisation r;
  r.truncated = !closure.complete || closure.shape_pruned;

  auto const scan = [&]( realisation_kind kind, auto&& shape_ok ) {
    for ( auto const& f : closure.maps )
    {
      if ( f.arity() < m || f.coarity() < n || !shape_ok( f ) )
      {
        continue;
      }
      auto const extra = f.arity() - m;
      tuple constants( extra );
      for ( std::uint64_t c = 0; c < power( a.size(), extra ); ++c )
      {
        decode_into( c, a.size(), constants );
        if ( realises( f, constants, g ) )
        {
          r.kind = kind;
          r.f = f;
          r.constants = constants;
          return true;
        }
      }
    }
    return false;
  };
  if ( scan( realisation_kind::isomorphic, [&]( map const& f ) { return f.arity() == m && f.coarity() == n; } ) ||
       scan( realisation_kind::no_garbage, [&]( map const& f ) { return f.coarity() == n; } ) ||
       scan( realisation_kind::no_constants, [&]( map const& f ) { return f.arity() == m; } ) ||
       scan( realisation_kind::general, []( map const& ) { return true; } ) )
  {
    return r;
  }
  return r;
}

} // namespace

realisation check_realisation( map const& g, std::vector<named_map> const& F, alphabet a, search_caps const& caps )
{
  validate( caps );
  for ( auto const& f : F )
  {
    if ( f.value == g )
    {
      realisation r;
      r.kind = realisation_kind::isomorphic;
      r.f = g;
      return r;
    }
  }
  if ( all_bijective( F ) )
  {
    return search_bijective( g, F, a, caps );
  }
  return search_saturated( g, F, a, caps );
}

storage_report check_temp_storage( map const& f, std::span<letter const> constants, map const& g )
{
  auto const l = f.arity();
  auto const k = f.coarity();
  auto const m = g.arity();
  auto const n = g.coarity();
  if ( f.alpha() != g.alpha() )
  {
    throw shape_error( "temporary storage", "alphabet of size " + std::to_string( g.k() ), "alphabet of size " + std::to_string( f.k() ) );
  }
  if ( l < m || constants.size() != l - m || n + l - m != k )
  {
    throw shape_error( "temporary storage",
                       "f of arity m + |a| and coarity n + |a| for g " + std::to_string( m ) + " -> " + std::to_string( n ),
                       "f " + std::to_string( l ) + " -> " + std::to_string( k ) + ", |a| = " + std::to_string( constants.size() ) );
  }
  storage_report report;
  auto const K = power( f.k(), static_cast<unsigned>( l - m ) );
  auto const tail = encode_unchecked( constants, f.k() );
  for ( std::uint64_t x = 0; x < g.rows(); ++x )
  {
    auto const out = f.row( x * K + tail );
    auto const want = g.row( x );
    if ( !std::equal( want.begin(), want.end(), out.begin() ) )
    {
      report.failing_input = decode( { x }, g.alpha(), m );
      report.reason = "data outputs differ from g";
      return report;
    }
    if ( !std::equal( constants.begin(), constants.end(), out.begin() + n ) )
    {
      report.failing_input = decode( { x }, g.alpha(), m );
      report.reason = "storage outputs do not return the constants";
      return report;
    }
  }
  report.level = storage_level::weak;
  std::vector<bool> hit( K );
  for ( std::uint64_t b = 0; b < g.rows(); ++b )
  {
    std::fill( hit.begin(), hit.end(), false );
    for ( std::uint64_t z = 0; z < K; ++z )
    {
      auto const t = encode_unchecked( f.row( b * K + z ).subspan( n ), f.k() );
      if ( hit[t] )
      {
        report.failing_input = decode( { b }, g.alpha(), m );
        report.reason = "storage block is not a bijection for this data input";
        return report;
      }
      hit[t] = true;
    }
  }
  report.level = storage_level::strong;
  return report;
}

storage_level find_temp_storage( map const& g, std::vector<named_map> const& F, alphabet a, search_caps const& caps,
                                 bool* truncated )
{
  validate( caps );
  auto best = storage_level::none;
  auto const note = [&]( bool t ) {
    if ( truncated && t )
    {
      *truncated = true;
    }
  };
  if ( !all_bijective( F ) )
  {
    std::vector<map> gens;
    for ( auto const& f : F )
    {
      gens.push_back( f.value );
    }
    auto const closure = saturate( gens, a, caps, false );
    note( !closure.complete || closure.shape_pruned );
    for ( auto const& f : closure.maps )
    {
      if ( f.arity() < g.arity() || f.coarity() != g.coarity() + f.arity() - g.arity() )
      {
        continue;
      }
      tuple constants( f.arity() - g.arity() );
      for ( std::uint64_t c = 0; c < power( a.size(), f.arity() - g.arity() ); ++c )
      {
        decode_into( c, a.size(), constants );
        auto const level = check_temp_storage( f, constants, g ).level;
        if ( level == storage_level::strong )
        {
          return level;
        }
        best = std::max( best, level );
      }
    }
    return best;
  }
  // bijective generators: only bijective g qualifies
  if ( !is_bijective( g ) )
  {
    return storage_level::none;
  }
  slice_search search( F, a, caps );
  for ( auto l = g.arity(); l <= caps.max_arity; ++l )
  {
    if ( search.is_full( l ) )
    {
      return storage_level::strong; // g (+) i is in the slice
    }
    if ( search.find( l, g.arity(), [&]( tuple_permutation const& P, std::uint64_t c ) { return strong_perm( P, c, g, l ); } ) )
    {
      note( search.truncated );
      return storage_level::strong;
    }
    if ( best == storage_level::none &&
         search.find( l, g.arity(), [&]( tuple_permutation const& P, std::uint64_t c ) { return weak_perm( P, c, g, l ); } ) )
    {
      best = storage_level::weak;
    }
  }
  note( search.truncated );
  return best;
}

std::vector<map> function_set( std::vector<map> const& F, alphabet a, search_caps const& caps )
{
  auto const closure = saturate( F, a, caps, false );
  ordered_set out;
  unsigned const first[] = { 1 };
  for ( auto const& f : closure.maps )
  {
    if ( f.coarity() >= 1 )
    {
      out.insert( select( first, f ) );
    }
  }
  return out.take();
}

std::vector<map> function_set_of_group( tuple_group const& G, alphabet a, unsigned n, std::size_t cap )
{
  if ( G.degree() != a.tuple_count( n ) )
  {
    throw shape_error( "function set", "group of degree " + std::to_string( a.tuple_count( n ) ), "degree " + std::to_string( G.degree() ) );
  }
  if ( n == 0 )
  {
    return {};
  }
  std::vector<std::vector<letter>> orbit;
  std::unordered_set<map> seen;
  std::vector<map> result;
  auto const k = a.size();
  std::vector<letter> start( G.degree() );
  for ( std::size_t r = 0; r < G.degree(); ++r )
  {
    start[r] = static_cast<letter>( r / power( k, n - 1 ) + 1 );
  }
  auto const push = [&]( std::vector<letter> table ) {
    map f( a, n, 1, table );
    if ( seen.insert( f ).second )
    {
      if ( result.size() >= cap )
      {
        throw error( "function set exceeds " + std::to_string( cap ) + " functions" );
      }
      result.push_back( std::move( f ) );
      orbit.push_back( std::move( table ) );
    }
  };
  push( start );
  for ( std::size_t i = 0; i < orbit.size(); ++i )
  {
    for ( auto const& gen : G.generators() )
    {
      // (phi o s)(x) = phi(s(x))
      std::vector<letter> next( G.degree() );
      for ( std::size_t r = 0; r < G.degree(); ++r )
      {
        next[r] = orbit[i][gen.perm[r]];
      }
      push( std::move( next ) );
    }
  }
  return result;
}

bool is_balanced_function( map const& f )
{
  if ( f.coarity() > f.arity() )
  {
    return false;
  }
  auto const images = f.alpha().tuple_count( f.coarity() );
  std::vector<std::uint64_t> count( images, 0 );
  for ( std::uint64_t r = 0; r < f.rows(); ++r )
  {
    ++count[f.image_index( r )];
  }
  auto const want = f.rows() / images;
  return std::all_of( count.begin(), count.end(), [want]( std::uint64_t c ) { return c == want; } );
}

realisation_profile profile( map const& g, std::vector<named_map> const& F, alphabet a, search_caps const& caps )
{
  validate( caps );
  if ( !all_bijective( F ) )
  {
    throw domain_error( "realisation profiles are computed for bijective generators only" );
  }
  realisation_profile p;
  auto const m = g.arity();
  auto const n = g.coarity();
  slice_search search( F, a, caps );

  auto const exists = [&]( unsigned l ) {
    if ( l < std::max( m, n ) || l > caps.max_arity )
    {
      return false;
    }
    if ( search.is_full( l ) )
    {
      return construct_realisation( g, l ).has_value();
    }
    return search.find( l, m, [&]( tuple_permutation const& P, std::uint64_t c ) { return realises_perm( P, c, g, l ); } )
        .has_value();
  };

  if ( m == n && is_bijective( g ) && m <= caps.max_arity )
  {
    p.in_C = search.group( m ).contains( tuple_permutation::from_map( g ) );
  }
  p.in_KC = n >= m && exists( n );
  p.in_SC = m >= n && exists( m );
  for ( auto l = std::max( m, n ); l <= caps.max_arity && !p.in_SKC; ++l )
  {
    p.in_SKC = exists( l );
  }
  bool truncated = false;
  auto const storage = find_temp_storage( g, F, a, caps, &truncated );
  p.in_T = storage != storage_level::none;
  p.in_TS = storage == storage_level::strong;
  p.truncated = truncated || search.truncated;
  return p;
}

} // namespace revclone
