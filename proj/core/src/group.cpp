#include <revclone/error.hpp>
#include <revclone/group.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace revclone
{

tuple_permutation::tuple_permutation( std::size_t degree ) : images_( degree )
{
  std::iota( images_.begin(), images_.end(), 0u );
}

tuple_permutation tuple_permutation::from_images( std::vector<std::uint32_t> images )
{
  std::vector<bool> seen( images.size(), false );
  for ( auto const q : images )
  {
    if ( q >= images.size() || seen[q] )
    {
      throw domain_error( "image list is not a permutation of {0.." + std::to_string( images.size() ) + ")" );
    }
    seen[q] = true;
  }
  tuple_permutation p;
  p.images_ = std::move( images );
  return p;
}

tuple_permutation tuple_permutation::from_map( map const& f )
{
  if ( !is_balanced( f ) )
  {
    throw domain_error( "only balanced maps act on tuples" );
  }
  std::vector<std::uint32_t> images( f.rows() );
  for ( std::uint64_t r = 0; r < f.rows(); ++r )
  {
    images[r] = static_cast<std::uint32_t>( f.image_index( r ) );
  }
  try
  {
    return from_images( std::move( images ) );
  }
  catch ( domain_error const& )
  {
    throw domain_error( "map is not bijective" );
  }
}

map tuple_permutation::to_map( alphabet a, unsigned n ) const
{
  if ( a.tuple_count( n ) != degree() )
  {
    throw shape_error( "tuple permutation", "degree " + std::to_string( a.tuple_count( n ) ), "degree " + std::to_string( degree() ) );
  }
  std::vector<letter> table( degree() * n );
  for ( std::size_t p = 0; p < degree(); ++p )
  {
    decode_into( images_[p], a.size(), std::span<letter>( table.data() + p * n, n ) );
  }
  return map( a, n, n, std::move( table ) );
}

tuple_permutation tuple_permutation::inverse() const
{
  tuple_permutation q;
  q.images_.resize( images_.size() );
  for ( std::size_t p = 0; p < images_.size(); ++p )
  {
    q.images_[images_[p]] = static_cast<std::uint32_t>( p );
  }
  return q;
}

bool tuple_permutation::is_identity() const noexcept
{
  return first_moved() == degree();
}

std::size_t tuple_permutation::first_moved() const noexcept
{
  for ( std::size_t p = 0; p < images_.size(); ++p )
  {
    if ( images_[p] != p )
    {
      return p;
    }
  }
  return images_.size();
}

tuple_permutation operator*( tuple_permutation const& a, tuple_permutation const& b )
{
  if ( a.degree() != b.degree() )
  {
    throw shape_error( "tuple permutation product", "degree " + std::to_string( a.degree() ),
                       "degree " + std::to_string( b.degree() ) );
  }
  tuple_permutation c;
  c.images_.resize( a.degree() );
  for ( std::size_t p = 0; p < a.degree(); ++p )
  {
    c.images_[p] = b.images_[a.images_[p]];
  }
  return c;
}

int sign( tuple_permutation const& p )
{
  std::vector<bool> seen( p.degree(), false );
  std::size_t cycles = 0;
  for ( std::size_t x = 0; x < p.degree(); ++x )
  {
    if ( seen[x] )
    {
      continue;
    }
    ++cycles;
    for ( auto y = x; !seen[y]; y = p[y] )
    {
      seen[y] = true;
    }
  }
  return ( p.degree() - cycles ) % 2 == 0 ? 1 : -1;
}

std::size_t tuple_permutation_hash::operator()( tuple_permutation const& p ) const noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for ( auto const x : p.images() )
  {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>( h );
}

namespace
{

/// h := h * s (apply h, then s).
void multiply_into( std::vector<std::uint32_t>& h, tuple_permutation const& s )
{
  for ( auto& x : h )
  {
    x = s[x];
  }
}

} // namespace

tuple_group tuple_group::build( std::size_t degree, std::vector<generator> generators )
{
  tuple_group g;
  g.degree_ = degree;
  for ( auto const& gen : generators )
  {
    if ( gen.perm.degree() != degree )
    {
      throw shape_error( "generator '" + gen.name + "'", "degree " + std::to_string( degree ),
                         "degree " + std::to_string( gen.perm.degree() ) );
    }
  }
  g.generators_ = std::move( generators );

  for ( std::size_t i = 0; i < g.generators_.size(); ++i )
  {
    auto const& p = g.generators_[i].perm;
    if ( p.is_identity() )
    {
      continue;
    }
    g.strong_.push_back( { p, p.inverse(), i, {} } );
    auto const s = g.strong_.size() - 1;
    // a generator fixing every base point so far extends the base
    bool fixes_base = true;
    for ( auto const& l : g.levels_ )
    {
      fixes_base = fixes_base && p[l.base_point] == l.base_point;
    }
    if ( fixes_base )
    {
      level l;
      l.base_point = p.first_moved();
      l.parent_gen.assign( degree, -2 );
      l.parent.assign( degree, 0 );
      l.parent_gen[l.base_point] = -1;
      l.orbit.push_back( static_cast<std::uint32_t>( l.base_point ) );
      g.levels_.push_back( std::move( l ) );
    }
    for ( std::size_t j = 0; j < g.levels_.size(); ++j )
    {
      g.add_strong( j, s );
      if ( p[g.levels_[j].base_point] != g.levels_[j].base_point )
      {
        break;
      }
    }
  }
  g.schreier_sims();
  return g;
}

void tuple_group::add_strong( std::size_t level_index, std::size_t strong_index )
{
  auto& l = levels_[level_index];
  l.gens.push_back( strong_index );
  extend_orbit( l, 0 );
}

void tuple_group::extend_orbit( level& l, std::size_t from )
{
  for ( auto pos = from; pos < l.orbit.size(); ++pos )
  {
    auto const x = l.orbit[pos];
    for ( auto const s : l.gens )
    {
      auto const y = strong_[s].perm[x];
      if ( l.parent_gen[y] == -2 )
      {
        l.parent_gen[y] = static_cast<std::int64_t>( s );
        l.parent[y] = x;
        l.orbit.push_back( y );
      }
    }
  }
}

std::vector<tuple_group::factor> tuple_group::transversal_factors( level const& l, std::uint32_t x ) const
{
  std::vector<factor> path;
  for ( auto y = x; l.parent_gen[y] >= 0; y = l.parent[y] )
  {
    path.push_back( { static_cast<std::size_t>( l.parent_gen[y] ), false } );
  }
  std::reverse( path.begin(), path.end() );
  return path;
}

tuple_permutation tuple_group::transversal( level const& l, std::uint32_t x ) const
{
  auto images = tuple_permutation( degree_ ).images();
  for ( auto const& f : transversal_factors( l, x ) )
  {
    multiply_into( images, strong_[f.strong].perm );
  }
  return tuple_permutation::from_images( std::move( images ) );
}

void tuple_group::strip( tuple_permutation& h, level const& l, std::uint32_t x, std::vector<factor>* trace ) const
{
  auto images = h.images();
  for ( auto y = x; l.parent_gen[y] >= 0; y = l.parent[y] )
  {
    auto const s = static_cast<std::size_t>( l.parent_gen[y] );
    multiply_into( images, strong_[s].inv );
    if ( trace )
    {
      trace->push_back( { s, true } );
    }
  }
  h = tuple_permutation::from_images( std::move( images ) );
}

std::pair<tuple_permutation, std::size_t> tuple_group::sift( tuple_permutation h, std::size_t from_level,
                                                             std::vector<factor>* trace ) const
{
  for ( auto i = from_level; i < levels_.size(); ++i )
  {
    auto const& l = levels_[i];
    auto const x = h[l.base_point];
    if ( l.parent_gen[x] == -2 )
    {
      return { std::move( h ), i };
    }
    strip( h, l, x, trace );
  }
  return { std::move( h ), levels_.size() };
}

void tuple_group::schreier_sims()
{
  auto i = levels_.size();
  while ( i-- > 0 )
  {
    bool restarted = false;
    for ( std::size_t pos = 0; !restarted && pos < levels_[i].orbit.size(); ++pos )
    {
      if ( levels_[i].checked.size() <= pos )
      {
        levels_[i].checked.resize( pos + 1 );
      }
      for ( std::size_t gpos = 0; gpos < levels_[i].gens.size(); ++gpos )
      {
        auto& lv = levels_[i];
        if ( lv.checked[pos].size() <= gpos )
        {
          lv.checked[pos].resize( lv.gens.size(), false );
        }
        if ( lv.checked[pos][gpos] )
        {
          continue;
        }
        lv.checked[pos][gpos] = true;

        auto const x = lv.orbit[pos];
        auto const s = lv.gens[gpos];
        auto const y = strong_[s].perm[x];
        // u_x s u_y^{-1} fixes the base point of this level
        std::vector<factor> trace = transversal_factors( lv, x );
        trace.push_back( { s, false } );
        auto candidate = transversal( lv, x ) * strong_[s].perm;
        strip( candidate, lv, y, &trace );
        if ( candidate.is_identity() )
        {
          continue;
        }
        auto [residue, stop] = sift( std::move( candidate ), i + 1, &trace );
        if ( stop == levels_.size() && residue.is_identity() )
        {
          continue;
        }

        // residue = product of the trace, so it becomes a new strong generator
        strong_generator sg{ residue, residue.inverse(), std::nullopt, std::move( trace ) };
        strong_.push_back( std::move( sg ) );
        auto const new_strong = strong_.size() - 1;
        if ( stop == levels_.size() )
        {
          level nl;
          nl.base_point = residue.first_moved();
          nl.parent_gen.assign( degree_, -2 );
          nl.parent.assign( degree_, 0 );
          nl.parent_gen[nl.base_point] = -1;
          nl.orbit.push_back( static_cast<std::uint32_t>( nl.base_point ) );
          levels_.push_back( std::move( nl ) );
        }
        for ( auto j = i + 1; j <= stop; ++j )
        {
          add_strong( j, new_strong );
        }
        i = stop + 1;
        restarted = true;
        break;
      }
    }
  }
}

big_int tuple_group::order() const
{
  big_int n = 1;
  for ( auto const& l : levels_ )
  {
    n *= l.orbit.size();
  }
  return n;
}

std::vector<std::size_t> tuple_group::base() const
{
  std::vector<std::size_t> b;
  for ( auto const& l : levels_ )
  {
    b.push_back( l.base_point );
  }
  return b;
}

std::vector<std::size_t> tuple_group::orbit_lengths() const
{
  std::vector<std::size_t> lengths;
  for ( auto const& l : levels_ )
  {
    lengths.push_back( l.orbit.size() );
  }
  return lengths;
}

bool tuple_group::contains( tuple_permutation const& p ) const
{
  if ( p.degree() != degree_ )
  {
    throw shape_error( "membership test", "degree " + std::to_string( degree_ ), "degree " + std::to_string( p.degree() ) );
  }
  auto const [residue, stop] = sift( p, 0, nullptr );
  return stop == levels_.size() && residue.is_identity();
}

void tuple_group::expand( factor f, word& out, std::size_t max_length ) const
{
  auto const& sg = strong_[f.strong];
  if ( sg.original )
  {
    word_letter const w{ *sg.original, f.inverse };
    if ( !out.empty() && out.back().index == w.index && out.back().inverse != w.inverse )
    {
      out.pop_back();
    }
    else
    {
      out.push_back( w );
      if ( out.size() > max_length )
      {
        throw error( "witness word exceeds " + std::to_string( max_length ) + " letters" );
      }
    }
    return;
  }
  if ( !f.inverse )
  {
    for ( auto const& g : sg.factors )
    {
      expand( g, out, max_length );
    }
  }
  else
  {
    for ( auto it = sg.factors.rbegin(); it != sg.factors.rend(); ++it )
    {
      expand( { it->strong, !it->inverse }, out, max_length );
    }
  }
}

std::optional<word> tuple_group::witness( tuple_permutation const& p, std::size_t max_length ) const
{
  if ( p.degree() != degree_ )
  {
    throw shape_error( "membership test", "degree " + std::to_string( degree_ ), "degree " + std::to_string( p.degree() ) );
  }
  if ( p.is_identity() )
  {
    return word{};
  }
  for ( std::size_t i = 0; i < generators_.size(); ++i )
  {
    if ( generators_[i].perm == p )
    {
      return word{ { i, false } };
    }
  }
  std::vector<factor> trace;
  auto const [residue, stop] = sift( p, 0, &trace );
  if ( stop != levels_.size() || !residue.is_identity() )
  {
    return std::nullopt;
  }
  // p * trace = 1, so p is the inverse of the trace
  word w;
  for ( auto it = trace.rbegin(); it != trace.rend(); ++it )
  {
    expand( { it->strong, !it->inverse }, w, max_length );
  }
  return w;
}

tuple_permutation tuple_group::random_element( std::mt19937_64& rng ) const
{
  auto images = tuple_permutation( degree_ ).images();
  for ( auto i = levels_.size(); i-- > 0; )
  {
    auto const& l = levels_[i];
    std::uniform_int_distribution<std::size_t> pick( 0, l.orbit.size() - 1 );
    auto const x = l.orbit[pick( rng )];
    for ( auto const& f : transversal_factors( l, x ) )
    {
      multiply_into( images, strong_[f.strong].perm );
    }
  }
  return tuple_permutation::from_images( std::move( images ) );
}

void tuple_group::for_each_element( std::function<void( tuple_permutation const& )> const& fn, std::uint64_t cap ) const
{
  if ( order() > cap )
  {
    throw error( "group of order " + order().str() + " exceeds the enumeration cap " + std::to_string( cap ) );
  }
  std::vector<std::vector<tuple_permutation>> transversals( levels_.size() );
  for ( std::size_t i = 0; i < levels_.size(); ++i )
  {
    for ( auto const x : levels_[i].orbit )
    {
      transversals[i].push_back( transversal( levels_[i], x ) );
    }
  }
  // every element is u_L * ... * u_1 with u_i from the transversal of level i
  std::function<void( std::size_t, tuple_permutation const& )> rec = [&]( std::size_t i, tuple_permutation const& prefix ) {
    if ( i == 0 )
    {
      fn( prefix );
      return;
    }
    for ( auto const& u : transversals[i - 1] )
    {
      rec( i - 1, prefix * u );
    }
  };
  rec( levels_.size(), tuple_permutation( degree_ ) );
}

std::vector<tuple_permutation> enumerate_elements( std::vector<tuple_permutation> const& gens, std::size_t degree,
                                                   std::size_t cap )
{
  std::vector<tuple_permutation> elements{ tuple_permutation( degree ) };
  std::unordered_set<tuple_permutation, tuple_permutation_hash> seen( elements.begin(), elements.end() );
  for ( std::size_t i = 0; i < elements.size(); ++i )
  {
    for ( auto const& g : gens )
    {
      auto next = elements[i] * g;
      if ( seen.insert( next ).second )
      {
        if ( elements.size() >= cap )
        {
          throw error( "group has more than " + std::to_string( cap ) + " elements" );
        }
        elements.push_back( std::move( next ) );
      }
    }
  }
  return elements;
}

} // namespace revclone
