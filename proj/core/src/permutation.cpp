#include <revclone/permutation.hpp>

#include <cctype>

namespace revclone
{

cycle_list parse_cycles( std::string_view text )
{
  cycle_list cycles;
  std::size_t i = 0;
  auto const skip_space = [&] {
    while ( i < text.size() && ( std::isspace( static_cast<unsigned char>( text[i] ) ) || text[i] == ',' ) )
    {
      ++i;
    }
  };

  skip_space();
  while ( i < text.size() )
  {
    if ( text[i] != '(' )
    {
      throw parse_error( "expected '(' in cycle notation", 1, i + 1 );
    }
    ++i;
    std::vector<unsigned> cycle;
    for ( ;; )
    {
      skip_space();
      if ( i >= text.size() )
      {
        throw parse_error( "unterminated cycle", 1, i + 1 );
      }
      if ( text[i] == ')' )
      {
        ++i;
        break;
      }
      if ( !std::isdigit( static_cast<unsigned char>( text[i] ) ) )
      {
        throw parse_error( std::string( "unexpected character '" ) + text[i] + "' in cycle", 1, i + 1 );
      }
      unsigned value = 0;
      while ( i < text.size() && std::isdigit( static_cast<unsigned char>( text[i] ) ) )
      {
        value = value * 10u + static_cast<unsigned>( text[i] - '0' );
        ++i;
      }
      cycle.push_back( value );
    }
    if ( cycle.size() >= 2 )
    {
      cycles.push_back( std::move( cycle ) );
    }
    skip_space();
  }
  return cycles;
}

} // namespace revclone
