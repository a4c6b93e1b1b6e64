#include <revclone/error.hpp>
#include <revclone/map_io.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

namespace revclone
{

namespace
{

struct token
{
  std::string_view text;
  std::size_t column;
};

std::vector<token> split( std::string_view line )
{
  std::vector<token> tokens;
  std::size_t i = 0;
  while ( i < line.size() )
  {
    while ( i < line.size() && ( line[i] == ' ' || line[i] == '\t' || line[i] == '\r' ) )
    {
      ++i;
    }
    if ( i >= line.size() )
    {
      break;
    }
    auto const start = i;
    while ( i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' )
    {
      ++i;
    }
    tokens.push_back( { line.substr( start, i - start ), start + 1 } );
  }
  return tokens;
}

unsigned to_unsigned( token const& t, std::size_t line )
{
  unsigned value = 0;
  auto const* end = t.text.data() + t.text.size();
  auto const [ptr, ec] = std::from_chars( t.text.data(), end, value );
  if ( ec != std::errc{} || ptr != end )
  {
    throw parse_error( "expected a non-negative integer, got '" + std::string( t.text ) + "'", line, t.column );
  }
  return value;
}

} // namespace

map read_map( std::istream& in )
{
  std::optional<unsigned> k, arity, coarity;
  std::optional<alphabet> a;
  std::vector<letter> table;
  std::vector<bool> seen;
  std::uint64_t rows_seen = 0;

  std::string line;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    if ( auto const hash = line.find( '#' ); hash != std::string::npos )
    {
      line.erase( hash );
    }
    auto const tokens = split( line );
    if ( tokens.empty() )
    {
      continue;
    }
    last_line = line_no;

    auto const header = [&]( std::string_view key, std::optional<unsigned>& slot ) {
      if ( tokens[0].text != key )
      {
        return false;
      }
      if ( tokens.size() != 2 )
      {
        throw parse_error( "'" + std::string( key ) + "' takes exactly one value", line_no, tokens[0].column );
      }
      if ( slot )
      {
        throw parse_error( "duplicate '" + std::string( key ) + "' header", line_no, tokens[0].column );
      }
      if ( !table.empty() || rows_seen > 0 )
      {
        throw parse_error( "header after table rows", line_no, tokens[0].column );
      }
      slot = to_unsigned( tokens[1], line_no );
      return true;
    };
    if ( header( "alphabet", k ) || header( "arity", arity ) || header( "coarity", coarity ) )
    {
      continue;
    }

    if ( !k || !arity || !coarity )
    {
      throw parse_error( "table row before 'alphabet', 'arity' and 'coarity' headers", line_no, tokens[0].column );
    }
    if ( !a )
    {
      try
      {
        a.emplace( *k );
        auto const rows = a->tuple_count( *arity );
        table.assign( rows * *coarity, 1 );
        seen.assign( rows, false );
      }
      catch ( error const& e )
      {
        throw parse_error( e.what(), line_no, 1 );
      }
    }

    std::size_t arrow = tokens.size();
    for ( std::size_t i = 0; i < tokens.size(); ++i )
    {
      if ( tokens[i].text == "->" )
      {
        arrow = i;
        break;
      }
    }
    if ( arrow == tokens.size() )
    {
      throw parse_error( "expected '->' in table row", line_no, tokens.back().column );
    }
    if ( arrow != *arity || tokens.size() - arrow - 1 != *coarity )
    {
      throw parse_error( "row must have " + std::to_string( *arity ) + " inputs and " + std::to_string( *coarity ) +
                             " outputs",
                         line_no, tokens[0].column );
    }

    auto const read_letter = [&]( token const& t ) {
      auto const v = to_unsigned( t, line_no );
      if ( !a->contains( v ) )
      {
        throw parse_error( "letter " + std::to_string( v ) + " outside {1.." + std::to_string( *k ) + "}", line_no,
                           t.column );
      }
      return static_cast<letter>( v );
    };

    std::uint64_t index = 0;
    for ( std::size_t i = 0; i < arrow; ++i )
    {
      index = index * *k + ( read_letter( tokens[i] ) - 1u );
    }
    if ( seen[index] )
    {
      throw parse_error( "duplicate row for this input", line_no, tokens[0].column );
    }
    seen[index] = true;
    ++rows_seen;
    for ( std::size_t j = 0; j < *coarity; ++j )
    {
      table[index * *coarity + j] = read_letter( tokens[arrow + 1 + j] );
    }
  }

  if ( !k || !arity || !coarity )
  {
    throw parse_error( "missing 'alphabet', 'arity' or 'coarity' header", line_no + 1, 1 );
  }
  if ( !a )
  {
    a.emplace( *k );
    seen.assign( a->tuple_count( *arity ), false );
  }
  if ( rows_seen != seen.size() )
  {
    throw parse_error( "table has " + std::to_string( rows_seen ) + " rows, expected " + std::to_string( seen.size() ),
                       last_line + 1, 1 );
  }
  return map( *a, *arity, *coarity, std::move( table ) );
}

map read_map_file( std::filesystem::path const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw error( "cannot open " + path.string() );
  }
  try
  {
    return read_map( in );
  }
  catch ( parse_error const& e )
  {
    throw parse_error( path.string() + ": " + e.what(), e.line(), e.column() );
  }
}

map parse_map( std::string const& text )
{
  std::istringstream in( text );
  return read_map( in );
}

void write_map( std::ostream& out, map const& f )
{
  out << "alphabet " << f.k() << '\n';
  out << "arity " << f.arity() << '\n';
  out << "coarity " << f.coarity() << '\n';
  tuple input( f.arity() );
  for ( std::uint64_t r = 0; r < f.rows(); ++r )
  {
    decode_into( r, f.k(), input );
    auto const in_text = to_string( input );
    auto const out_text = to_string( f.row( r ) );
    out << in_text << ( in_text.empty() ? "->" : " ->" ) << ( out_text.empty() ? "" : " " ) << out_text << '\n';
  }
}

std::string format_map( map const& f )
{
  std::ostringstream out;
  write_map( out, f );
  return out.str();
}

} // namespace revclone
