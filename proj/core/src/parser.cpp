#include <revclone/error.hpp>
#include <revclone/term.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <string>

namespace revclone
{

namespace
{

struct sexpr
{
  bool is_list = false;
  std::string atom;
  std::vector<sexpr> items;
  std::size_t line = 1;
  std::size_t column = 1;
};

class reader
{
public:
  explicit reader( std::string_view text ) : text_( text ) {}

  std::vector<sexpr> read_all()
  {
    std::vector<sexpr> forms;
    skip();
    while ( pos_ < text_.size() )
    {
      forms.push_back( read() );
      skip();
    }
    return forms;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  void advance()
  {
    if ( text_[pos_] == '\n' )
    {
      ++line_;
      column_ = 1;
    }
    else
    {
      ++column_;
    }
    ++pos_;
  }

  void skip()
  {
    while ( pos_ < text_.size() )
    {
      auto const c = text_[pos_];
      if ( c == ';' || c == '#' )
      {
        while ( pos_ < text_.size() && text_[pos_] != '\n' )
        {
          advance();
        }
      }
      else if ( c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',' )
      {
        advance();
      }
      else
      {
        break;
      }
    }
  }

  sexpr read()
  {
    sexpr s;
    s.line = line_;
    s.column = column_;
    auto const c = text_[pos_];
    if ( c == ')' )
    {
      throw parse_error( "unexpected ')'", line_, column_ );
    }
    if ( c == '(' )
    {
      s.is_list = true;
      advance();
      skip();
      while ( pos_ < text_.size() && text_[pos_] != ')' )
      {
        s.items.push_back( read() );
        skip();
      }
      if ( pos_ >= text_.size() )
      {
        throw parse_error( "unclosed '('", s.line, s.column );
      }
      advance();
      return s;
    }
    auto const start = pos_;
    while ( pos_ < text_.size() )
    {
      auto const d = text_[pos_];
      if ( d == '(' || d == ')' || d == ' ' || d == '\t' || d == '\r' || d == '\n' || d == ';' || d == ',' )
      {
        break;
      }
      advance();
    }
    s.atom = std::string( text_.substr( start, pos_ - start ) );
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

[[noreturn]] void fail( sexpr const& s, std::string const& message )
{
  throw parse_error( message, s.line, s.column );
}

bool is_number( sexpr const& s )
{
  return !s.is_list && !s.atom.empty() && std::all_of( s.atom.begin(), s.atom.end(), []( char c ) { return c >= '0' && c <= '9'; } );
}

unsigned number( sexpr const& s, char const* what )
{
  if ( !is_number( s ) )
  {
    fail( s, std::string( "expected " ) + what );
  }
  unsigned value = 0;
  auto const [ptr, ec] = std::from_chars( s.atom.data(), s.atom.data() + s.atom.size(), value );
  if ( ec != std::errc{} )
  {
    fail( s, std::string( what ) + " out of range" );
  }
  return value;
}

letter letter_value( sexpr const& s )
{
  auto const v = number( s, "a letter" );
  if ( v == 0 || v > max_alphabet_size )
  {
    fail( s, "letter " + s.atom + " outside {1.." + std::to_string( max_alphabet_size ) + "}" );
  }
  return static_cast<letter>( v );
}

bool is_perm_literal( sexpr const& s )
{
  return s.is_list && !s.items.empty() && !s.items[0].is_list && s.items[0].atom == "p";
}

/// Reads consecutive `(p ...)` forms from items[first..] and returns the index after them.
std::size_t perm_literal( sexpr const& form, std::size_t first, cycle_list& cycles )
{
  auto i = first;
  while ( i < form.items.size() && is_perm_literal( form.items[i] ) )
  {
    auto const& lit = form.items[i];
    std::vector<unsigned> cycle;
    for ( std::size_t j = 1; j < lit.items.size(); ++j )
    {
      auto const x = number( lit.items[j], "a positive point in a permutation literal" );
      if ( x == 0 )
      {
        fail( lit.items[j], "permutation points are 1-based" );
      }
      if ( std::find( cycle.begin(), cycle.end(), x ) != cycle.end() )
      {
        fail( lit.items[j], "point " + std::to_string( x ) + " repeats within a cycle" );
      }
      cycle.push_back( x );
    }
    if ( cycle.size() >= 2 )
    {
      cycles.push_back( std::move( cycle ) );
    }
    ++i;
  }
  if ( i == first )
  {
    fail( first < form.items.size() ? form.items[first] : form, "expected a permutation literal (p ...)" );
  }
  return i;
}

void arity_check( sexpr const& s, std::size_t expected, char const* op )
{
  if ( s.items.size() != expected )
  {
    fail( s, std::string( "'" ) + op + "' takes " + std::to_string( expected - 1 ) + " argument(s)" );
  }
}

bool valid_name( std::string const& atom )
{
  if ( atom.empty() || ( atom[0] >= '0' && atom[0] <= '9' ) )
  {
    return false;
  }
  return true;
}

term to_term( sexpr const& s )
{
  if ( !s.is_list )
  {
    if ( !valid_name( s.atom ) )
    {
      fail( s, "expected a term, got '" + s.atom + "'" );
    }
    return terms::name( s.atom );
  }
  if ( s.items.empty() )
  {
    fail( s, "empty form" );
  }
  auto const& head = s.items[0];
  if ( head.is_list )
  {
    fail( head, "expected an operator name" );
  }
  auto const& op = head.atom;
  auto const sub = [&]( std::size_t i ) { return to_term( s.items[i] ); };

  if ( op == "id" )
  {
    arity_check( s, 2, "id" );
    return terms::id( number( s.items[1], "a wire count" ) );
  }
  if ( op == "tg" )
  {
    if ( s.items.size() < 4 )
    {
      fail( s, "'tg' takes a wire count, a permutation literal and a control letter" );
    }
    auto const n = number( s.items[1], "a wire count" );
    if ( n == 0 )
    {
      fail( s.items[1], "TG needs at least one wire" );
    }
    cycle_list cycles;
    auto const next = perm_literal( s, 2, cycles );
    if ( next + 1 != s.items.size() )
    {
      fail( next < s.items.size() ? s.items[next] : s, "'tg' expects exactly one control letter after the permutation" );
    }
    return terms::tg( n, std::move( cycles ), letter_value( s.items[next] ) );
  }
  if ( op == "pi" )
  {
    if ( s.items.size() < 2 )
    {
      fail( s, "'pi' takes a permutation literal" );
    }
    std::size_t first = 1;
    std::optional<unsigned> degree;
    if ( is_number( s.items[1] ) )
    {
      degree = number( s.items[1], "a degree" );
      first = 2;
    }
    cycle_list cycles;
    auto const next = perm_literal( s, first, cycles );
    if ( next != s.items.size() )
    {
      fail( s.items[next], "unexpected argument to 'pi'" );
    }
    unsigned max_point = 0;
    for ( auto const& c : cycles )
    {
      max_point = std::max( max_point, *std::max_element( c.begin(), c.end() ) );
    }
    if ( degree && *degree < max_point )
    {
      fail( s.items[1], "degree " + std::to_string( *degree ) + " smaller than the largest point " + std::to_string( max_point ) );
    }
    return terms::pi( degree.value_or( max_point ), std::move( cycles ) );
  }
  if ( op == "oplus" || op == "bullet" )
  {
    if ( s.items.size() < 2 )
    {
      fail( s, "'" + op + "' takes at least one term" );
    }
    std::vector<term> children;
    for ( std::size_t i = 1; i < s.items.size(); ++i )
    {
      children.push_back( sub( i ) );
    }
    return op == "oplus" ? terms::oplus( std::move( children ) ) : terms::bullet( std::move( children ) );
  }
  if ( op == "comp" )
  {
    arity_check( s, 4, "comp" );
    return terms::comp( number( s.items[1], "a composition index" ), sub( 2 ), sub( 3 ) );
  }
  static std::pair<char const*, term_kind> const unary_ops[] = {
      { "tau", term_kind::tau },     { "zeta", term_kind::zeta },   { "btau", term_kind::btau },
      { "bzeta", term_kind::bzeta }, { "delta", term_kind::delta }, { "nabla", term_kind::nabla },
  };
  for ( auto const& [keyword, kind] : unary_ops )
  {
    if ( op == keyword )
    {
      arity_check( s, 2, keyword );
      return terms::unary( kind, sub( 1 ) );
    }
  }
  if ( op == "sel" )
  {
    arity_check( s, 3, "sel" );
    auto const& list = s.items[1];
    if ( !list.is_list )
    {
      fail( list, "'sel' expects an index list (i ...)" );
    }
    std::vector<unsigned> theta;
    for ( auto const& x : list.items )
    {
      theta.push_back( number( x, "an output index" ) );
    }
    return terms::sel( std::move( theta ), sub( 2 ) );
  }
  if ( op == "ins" )
  {
    arity_check( s, 3, "ins" );
    auto const& list = s.items[1];
    if ( !list.is_list )
    {
      fail( list, "'ins' expects a list of (position letter) pairs" );
    }
    std::vector<unsigned> positions;
    std::vector<letter> constants;
    for ( auto const& pair : list.items )
    {
      if ( !pair.is_list || pair.items.size() != 2 )
      {
        fail( pair, "expected (position letter)" );
      }
      positions.push_back( number( pair.items[0], "an input position" ) );
      constants.push_back( letter_value( pair.items[1] ) );
    }
    return terms::ins( std::move( positions ), std::move( constants ), sub( 2 ) );
  }
  if ( op == "let" || op == "alphabet" )
  {
    fail( head, "'" + op + "' is only allowed at the top level" );
  }
  fail( head, "unknown operator '" + op + "'" );
}

bool is_form( sexpr const& s, char const* head )
{
  return s.is_list && !s.items.empty() && !s.items[0].is_list && s.items[0].atom == head;
}

} // namespace

program parse_program( std::string_view text )
{
  reader r( text );
  auto const forms = r.read_all();
  if ( forms.empty() )
  {
    throw parse_error( "no term found", r.line(), r.column() );
  }
  program p;
  for ( std::size_t i = 0; i < forms.size(); ++i )
  {
    auto const& f = forms[i];
    auto const last = i + 1 == forms.size();
    if ( is_form( f, "alphabet" ) )
    {
      arity_check( f, 2, "alphabet" );
      if ( i != 0 )
      {
        fail( f, "'alphabet' must be the first form" );
      }
      auto const k = number( f.items[1], "an alphabet size" );
      if ( k == 0 || k > max_alphabet_size )
      {
        fail( f.items[1], "alphabet size must lie in {1.." + std::to_string( max_alphabet_size ) + "}" );
      }
      p.alphabet_size = k;
      if ( last )
      {
        fail( f, "no term found after 'alphabet'" );
      }
      continue;
    }
    if ( is_form( f, "let" ) )
    {
      arity_check( f, 3, "let" );
      if ( f.items[1].is_list || !valid_name( f.items[1].atom ) )
      {
        fail( f.items[1], "expected a name" );
      }
      if ( last )
      {
        fail( f, "no term found after the last 'let'" );
      }
      p.lets.emplace_back( f.items[1].atom, to_term( f.items[2] ) );
      continue;
    }
    if ( !last )
    {
      fail( forms[i + 1], "only one main term is allowed, and it must come last" );
    }
    p.main = to_term( f );
  }
  return p;
}

term parse_term( std::string_view text )
{
  auto p = parse_program( text );
  if ( p.alphabet_size || !p.lets.empty() )
  {
    throw parse_error( "expected a single term", 1, 1 );
  }
  return p.main;
}

} // namespace revclone
