#include <revclone/error.hpp>
#include <revclone/netlist.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

namespace revclone
{

namespace
{

unsigned stage_width( stage const& s )
{
  return static_cast<unsigned>( s.wires.size() );
}

} // namespace

void validate( netlist const& nl, alphabet a )
{
  for ( std::size_t i = 0; i < nl.stages.size(); ++i )
  {
    auto const& s = nl.stages[i];
    auto const where = "stage " + std::to_string( i + 1 );
    std::vector<bool> used( nl.wires, false );
    for ( auto const w : s.wires )
    {
      if ( w == 0 || w > nl.wires )
      {
        throw domain_error( where + ": wire " + std::to_string( w ) + " outside {1.." + std::to_string( nl.wires ) + "}" );
      }
      if ( used[w - 1] )
      {
        throw domain_error( where + ": wire " + std::to_string( w ) + " listed twice" );
      }
      used[w - 1] = true;
    }
    if ( s.wires.empty() )
    {
      throw domain_error( where + ": no wires" );
    }
    try
    {
      switch ( s.kind )
      {
      case stage_kind::tg:
        if ( !a.contains( s.o ) )
        {
          throw domain_error( "control letter " + std::to_string( s.o ) + " outside alphabet" );
        }
        alphabet_permutation::from_cycle_product( a.size(), s.perm );
        break;
      case stage_kind::unary:
        if ( s.wires.size() != 1 )
        {
          throw domain_error( "a unary stage acts on exactly one wire" );
        }
        alphabet_permutation::from_cycle_product( a.size(), s.perm );
        break;
      case stage_kind::pi:
        wire_permutation::from_cycle_product( stage_width( s ), s.perm );
        break;
      }
    }
    catch ( domain_error const& e )
    {
      throw domain_error( where + ": " + e.what() );
    }
  }
}

map simulate( netlist const& nl, alphabet a )
{
  validate( nl, a );
  struct compiled
  {
    stage_kind kind;
    std::vector<unsigned> letter_images; // 1-based images, index 0 unused
    std::vector<unsigned> position_images;
    letter o;
    std::vector<unsigned> wires;
  };
  std::vector<compiled> program;
  for ( auto const& s : nl.stages )
  {
    compiled c{ s.kind, {}, {}, s.o, s.wires };
    if ( s.kind == stage_kind::pi )
    {
      c.position_images = wire_permutation::from_cycle_product( stage_width( s ), s.perm ).images();
    }
    else
    {
      c.letter_images = alphabet_permutation::from_cycle_product( a.size(), s.perm ).images();
      c.letter_images.insert( c.letter_images.begin(), 0u );
    }
    program.push_back( std::move( c ) );
  }

  tuple scratch;
  return map::from_function( a, nl.wires, nl.wires, [&]( auto in, auto out ) {
    std::copy( in.begin(), in.end(), out.begin() );
    for ( auto const& c : program )
    {
      switch ( c.kind )
      {
      case stage_kind::unary:
        out[c.wires[0] - 1] = static_cast<letter>( c.letter_images[out[c.wires[0] - 1]] );
        break;
      case stage_kind::tg:
      {
        bool fire = true;
        for ( std::size_t j = 0; j + 1 < c.wires.size(); ++j )
        {
          fire = fire && out[c.wires[j] - 1] == c.o;
        }
        if ( fire )
        {
          auto& target = out[c.wires.back() - 1];
          target = static_cast<letter>( c.letter_images[target] );
        }
        break;
      }
      case stage_kind::pi:
        scratch.resize( c.wires.size() );
        for ( std::size_t j = 0; j < c.wires.size(); ++j )
        {
          scratch[c.position_images[j] - 1] = out[c.wires[j] - 1];
        }
        for ( std::size_t j = 0; j < c.wires.size(); ++j )
        {
          out[c.wires[j] - 1] = scratch[j];
        }
        break;
      }
    }
  } );
}

term netlist_to_term( netlist const& nl )
{
  auto const w = nl.wires;
  if ( nl.stages.empty() )
  {
    return terms::id( w );
  }
  std::vector<term> chain;
  for ( auto const& s : nl.stages )
  {
    auto const d = stage_width( s );
    term gate;
    switch ( s.kind )
    {
    case stage_kind::tg:
      gate = terms::tg( d, s.perm, s.o );
      break;
    case stage_kind::unary:
      gate = terms::tg( 1, s.perm, 1 );
      break;
    case stage_kind::pi:
      gate = terms::pi( d, s.perm );
      break;
    }
    if ( d < w )
    {
      gate = terms::oplus( { gate, terms::id( w - d ) } );
    }
    // sigma sends wire s.wires[j] to position j + 1, the other wires follow in order
    std::vector<unsigned> images( w, 0 );
    std::vector<bool> listed( w, false );
    for ( unsigned j = 0; j < d; ++j )
    {
      images[s.wires[j] - 1] = j + 1;
      listed[s.wires[j] - 1] = true;
    }
    auto next = d + 1;
    for ( unsigned x = 0; x < w; ++x )
    {
      if ( !listed[x] )
      {
        images[x] = next++;
      }
    }
    auto const sigma = wire_permutation::from_images( images );
    if ( sigma.is_identity() )
    {
      chain.push_back( gate );
    }
    else
    {
      chain.push_back( terms::bullet( { terms::pi( sigma.inverse() ), gate, terms::pi( sigma ) } ) );
    }
  }
  if ( chain.size() == 1 )
  {
    return chain.front();
  }
  std::reverse( chain.begin(), chain.end() );
  return terms::bullet( std::move( chain ) );
}

namespace
{

class flattener
{
public:
  netlist nl;

  /// `wires[i]` is the physical wire carrying logical position i + 1; returns the
  /// physical wires carrying the outputs.
  std::vector<unsigned> flatten( term const& t, std::vector<unsigned> wires )
  {
    auto const width = wires.size();
    switch ( t->kind )
    {
    case term_kind::id:
      expect_width( t, t->n, width );
      return wires;
    case term_kind::tg:
      expect_width( t, t->n, width );
      if ( t->n == 1 )
      {
        nl.stages.push_back( { stage_kind::unary, t->cycles, 1, wires } );
      }
      else
      {
        nl.stages.push_back( { stage_kind::tg, t->cycles, t->o, wires } );
      }
      return wires;
    case term_kind::pi:
    {
      expect_width( t, t->n, width );
      auto const alpha = wire_permutation::from_cycle_product( t->n, t->cycles );
      std::vector<unsigned> out( width );
      for ( unsigned i = 1; i <= t->n; ++i )
      {
        out[alpha( i ) - 1] = wires[i - 1];
      }
      return out;
    }
    case term_kind::oplus:
    {
      std::vector<unsigned> out;
      std::size_t offset = 0;
      for ( auto const& c : t->children )
      {
        auto const n = balanced_width( c );
        if ( offset + n > width )
        {
          unsupported( t, "operands wider than the wires available" );
        }
        auto part = flatten( c, std::vector<unsigned>( wires.begin() + offset, wires.begin() + offset + n ) );
        out.insert( out.end(), part.begin(), part.end() );
        offset += n;
      }
      if ( offset != width )
      {
        unsupported( t, "operand widths do not add up" );
      }
      return out;
    }
    case term_kind::bullet:
    case term_kind::comp:
    {
      for ( auto const& c : t->children )
      {
        if ( balanced_width( c ) != width )
        {
          unsupported( t, "composition of maps of different widths" );
        }
      }
      if ( t->kind == term_kind::comp && t->n != width )
      {
        unsupported( t, "partial composition" );
      }
      for ( auto it = t->children.rbegin(); it != t->children.rend(); ++it )
      {
        wires = flatten( *it, std::move( wires ) );
      }
      return wires;
    }
    default:
      unsupported( t, "not a circuit construct" );
    }
  }

  /// Width of a balanced circuit-shaped term.
  unsigned balanced_width( term const& t )
  {
    switch ( t->kind )
    {
    case term_kind::id:
    case term_kind::tg:
    case term_kind::pi:
      return t->n;
    case term_kind::oplus:
    {
      unsigned n = 0;
      for ( auto const& c : t->children )
      {
        n += balanced_width( c );
      }
      return n;
    }
    case term_kind::bullet:
    case term_kind::comp:
      return balanced_width( t->children.back() );
    default:
      unsupported( t, "not a circuit construct" );
    }
  }

private:
  [[noreturn]] static void unsupported( term const& t, std::string const& why )
  {
    auto const head = to_string( t );
    throw error( "cannot flatten into a netlist (" + why + "): " + head.substr( 0, 60 ) + ( head.size() > 60 ? "..." : "" ) );
  }

  static void expect_width( term const& t, unsigned n, std::size_t width )
  {
    if ( n != width )
    {
      unsupported( t, "width mismatch" );
    }
  }
};

} // namespace

netlist term_to_netlist( term const& t )
{
  flattener f;
  auto const w = f.balanced_width( t );
  f.nl.wires = w;
  std::vector<unsigned> start( w );
  std::iota( start.begin(), start.end(), 1u );
  auto const out = f.flatten( t, start );
  if ( out != start )
  {
    // output position j is carried by physical wire out[j]; move it back to wire j + 1
    std::vector<unsigned> images( w );
    for ( unsigned j = 0; j < w; ++j )
    {
      images[out[j] - 1] = j + 1;
    }
    f.nl.stages.push_back( { stage_kind::pi, wire_permutation::from_images( images ).cycles(), 1, start } );
  }
  return f.nl;
}

namespace
{

std::string cycles_text( cycle_list const& cycles )
{
  if ( cycles.empty() )
  {
    return "()";
  }
  std::string s;
  for ( auto const& c : cycles )
  {
    s += '(';
    for ( std::size_t i = 0; i < c.size(); ++i )
    {
      s += ( i ? " " : "" ) + std::to_string( c[i] );
    }
    s += ')';
  }
  return s;
}

unsigned parse_unsigned( std::string_view token, std::size_t line, std::size_t column, char const* what )
{
  unsigned value = 0;
  auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
  if ( token.empty() || ec != std::errc{} || ptr != token.data() + token.size() )
  {
    throw parse_error( std::string( "expected " ) + what + ", got '" + std::string( token ) + "'", line, column );
  }
  return value;
}

} // namespace

netlist parse_netlist( std::string_view text )
{
  netlist nl;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while ( start <= text.size() )
  {
    auto end = text.find( '\n', start );
    if ( end == std::string_view::npos )
    {
      end = text.size();
    }
    auto line = text.substr( start, end - start );
    start = end + 1;
    ++line_no;
    if ( auto const hash = line.find_first_of( "#;" ); hash != std::string_view::npos )
    {
      line = line.substr( 0, hash );
    }
    auto const first = line.find_first_not_of( " \t\r" );
    if ( first == std::string_view::npos )
    {
      if ( end == text.size() )
      {
        break;
      }
      continue;
    }
    auto const col = [&]( std::string_view part ) { return static_cast<std::size_t>( part.data() - line.data() ) + 1; };
    auto const kw_end = line.find_first_of( " \t(", first );
    auto const kw = line.substr( first, kw_end == std::string_view::npos ? std::string_view::npos : kw_end - first );
    auto rest = kw_end == std::string_view::npos ? std::string_view{} : line.substr( kw_end );

    if ( kw == "wires" )
    {
      if ( have_header )
      {
        throw parse_error( "duplicate 'wires' header", line_no, col( kw ) );
      }
      auto const b = rest.find_first_not_of( " \t" );
      auto const e = rest.find_last_not_of( " \t\r" );
      if ( b == std::string_view::npos )
      {
        throw parse_error( "'wires' needs a count", line_no, col( kw ) );
      }
      auto const token = rest.substr( b, e - b + 1 );
      nl.wires = parse_unsigned( token, line_no, col( token ), "a wire count" );
      have_header = true;
      continue;
    }
    if ( !have_header )
    {
      throw parse_error( "stage before the 'wires' header", line_no, col( kw ) );
    }
    stage s;
    if ( kw == "tg" )
    {
      s.kind = stage_kind::tg;
    }
    else if ( kw == "pi" )
    {
      s.kind = stage_kind::pi;
    }
    else if ( kw == "u" )
    {
      s.kind = stage_kind::unary;
    }
    else
    {
      throw parse_error( "unknown stage '" + std::string( kw ) + "'", line_no, col( kw ) );
    }

    auto const at = rest.find( '@' );
    if ( at == std::string_view::npos )
    {
      throw parse_error( "expected '@' before the wire list", line_no, col( kw ) );
    }
    auto head = rest.substr( 0, at );
    auto const tail = rest.substr( at + 1 );

    std::optional<unsigned> declared_width;
    if ( s.kind == stage_kind::tg )
    {
      auto const b = head.find_first_not_of( " \t" );
      auto const e = b == std::string_view::npos ? b : head.find_first_of( " \t(", b );
      if ( b == std::string_view::npos || e == std::string_view::npos )
      {
        throw parse_error( "'tg' needs a gate width", line_no, col( kw ) );
      }
      auto const token = head.substr( b, e - b );
      declared_width = parse_unsigned( token, line_no, col( token ), "a gate width" );
      head = head.substr( e );
    }
    auto const open = head.find( '(' );
    auto const close = head.rfind( ')' );
    if ( open == std::string_view::npos || close == std::string_view::npos || close < open )
    {
      throw parse_error( "expected a permutation in cycle notation", line_no, col( head ) );
    }
    try
    {
      s.perm = parse_cycles( head.substr( open, close - open + 1 ) );
    }
    catch ( error const& e )
    {
      throw parse_error( e.what(), line_no, col( head.substr( open ) ) );
    }
    auto const after = head.substr( close + 1 );
    auto const b = after.find_first_not_of( " \t" );
    if ( s.kind == stage_kind::tg )
    {
      if ( b == std::string_view::npos )
      {
        throw parse_error( "'tg' needs a control letter", line_no, col( after ) );
      }
      auto const e = after.find_last_not_of( " \t" );
      auto const token = after.substr( b, e - b + 1 );
      auto const o = parse_unsigned( token, line_no, col( token ), "a control letter" );
      if ( o == 0 || o > max_alphabet_size )
      {
        throw parse_error( "control letter out of range", line_no, col( token ) );
      }
      s.o = static_cast<letter>( o );
    }
    else if ( b != std::string_view::npos )
    {
      throw parse_error( "unexpected text before '@'", line_no, col( after.substr( b ) ) );
    }

    std::size_t p = 0;
    while ( p < tail.size() )
    {
      auto const tb = tail.find_first_not_of( " \t\r", p );
      if ( tb == std::string_view::npos )
      {
        break;
      }
      auto te = tail.find_first_of( " \t\r", tb );
      if ( te == std::string_view::npos )
      {
        te = tail.size();
      }
      auto const token = tail.substr( tb, te - tb );
      auto const w = parse_unsigned( token, line_no, col( token ), "a wire number" );
      if ( w == 0 || w > nl.wires )
      {
        throw parse_error( "wire " + std::to_string( w ) + " outside 1.." + std::to_string( nl.wires ), line_no, col( token ) );
      }
      if ( std::find( s.wires.begin(), s.wires.end(), w ) != s.wires.end() )
      {
        throw parse_error( "wire " + std::to_string( w ) + " listed twice", line_no, col( token ) );
      }
      s.wires.push_back( w );
      p = te;
    }
    if ( declared_width && *declared_width != s.wires.size() )
    {
      throw parse_error( "gate width " + std::to_string( *declared_width ) + " but " + std::to_string( s.wires.size() ) +
                             " wires listed",
                         line_no, col( tail ) );
    }
    nl.stages.push_back( std::move( s ) );
    if ( end == text.size() )
    {
      break;
    }
  }
  if ( !have_header )
  {
    throw parse_error( "missing 'wires' header", line_no == 0 ? 1 : line_no, 1 );
  }
  return nl;
}

std::string format_netlist( netlist const& nl )
{
  std::ostringstream out;
  out << "wires " << nl.wires << '\n';
  for ( auto const& s : nl.stages )
  {
    switch ( s.kind )
    {
    case stage_kind::tg:
      out << "tg " << s.wires.size() << ' ' << cycles_text( s.perm ) << ' ' << unsigned( s.o ) << " @";
      break;
    case stage_kind::pi:
      out << "pi " << cycles_text( s.perm ) << " @";
      break;
    case stage_kind::unary:
      out << "u " << cycles_text( s.perm ) << " @";
      break;
    }
    for ( auto const w : s.wires )
    {
      out << ' ' << w;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::size_t> gate_histogram( netlist const& nl )
{
  std::vector<std::size_t> counts;
  for ( auto const& s : nl.stages )
  {
    if ( s.kind == stage_kind::pi )
    {
      continue;
    }
    auto const n = s.wires.size();
    if ( counts.size() <= n )
    {
      counts.resize( n + 1, 0 );
    }
    ++counts[n];
  }
  return counts;
}

} // namespace revclone
