#include <revclone/error.hpp>
#include <revclone/gates.hpp>
#include <revclone/ops.hpp>
#include <revclone/term.hpp>

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace revclone
{

namespace terms
{

namespace
{

term make( term_node node )
{
  return std::make_shared<term_node const>( std::move( node ) );
}

} // namespace

term name( std::string n )
{
  return make( { .kind = term_kind::name, .name = std::move( n ) } );
}

term id( unsigned n )
{
  return make( { .kind = term_kind::id, .n = n } );
}

term tg( unsigned n, cycle_list cycles, letter o )
{
  return make( { .kind = term_kind::tg, .n = n, .cycles = std::move( cycles ), .o = o } );
}

term tg( unsigned n, alphabet_permutation const& alpha, letter o )
{
  return tg( n, alpha.cycles(), o );
}

term pi( unsigned degree, cycle_list cycles )
{
  return make( { .kind = term_kind::pi, .n = degree, .cycles = std::move( cycles ) } );
}

term pi( wire_permutation const& alpha )
{
  return pi( alpha.degree(), alpha.cycles() );
}

term oplus( std::vector<term> children )
{
  return make( { .kind = term_kind::oplus, .children = std::move( children ) } );
}

term bullet( std::vector<term> children )
{
  return make( { .kind = term_kind::bullet, .children = std::move( children ) } );
}

term comp( unsigned k, term f, term g )
{
  return make( { .kind = term_kind::comp, .n = k, .children = { std::move( f ), std::move( g ) } } );
}

term unary( term_kind kind, term child )
{
  return make( { .kind = kind, .children = { std::move( child ) } } );
}

term sel( std::vector<unsigned> theta, term child )
{
  return make( { .kind = term_kind::sel, .indices = std::move( theta ), .children = { std::move( child ) } } );
}

term ins( std::vector<unsigned> positions, std::vector<letter> constants, term child )
{
  return make( { .kind = term_kind::ins,
                 .indices = std::move( positions ),
                 .constants = std::move( constants ),
                 .children = { std::move( child ) } } );
}

} // namespace terms

namespace
{

char const* keyword( term_kind kind )
{
  switch ( kind )
  {
  case term_kind::name:
    return "";
  case term_kind::id:
    return "id";
  case term_kind::tg:
    return "tg";
  case term_kind::pi:
    return "pi";
  case term_kind::oplus:
    return "oplus";
  case term_kind::bullet:
    return "bullet";
  case term_kind::comp:
    return "comp";
  case term_kind::tau:
    return "tau";
  case term_kind::zeta:
    return "zeta";
  case term_kind::btau:
    return "btau";
  case term_kind::bzeta:
    return "bzeta";
  case term_kind::delta:
    return "delta";
  case term_kind::nabla:
    return "nabla";
  case term_kind::sel:
    return "sel";
  case term_kind::ins:
    return "ins";
  }
  return "";
}

void print_cycles( std::string& out, cycle_list const& cycles )
{
  if ( cycles.empty() )
  {
    out += "(p)";
    return;
  }
  for ( auto const& c : cycles )
  {
    out += "(p";
    for ( auto const x : c )
    {
      out += ' ';
      out += std::to_string( x );
    }
    out += ')';
  }
}

void print( std::string& out, term const& t )
{
  if ( t->kind == term_kind::name )
  {
    out += t->name;
    return;
  }
  out += '(';
  out += keyword( t->kind );
  switch ( t->kind )
  {
  case term_kind::id:
    out += ' ' + std::to_string( t->n );
    break;
  case term_kind::tg:
    out += ' ' + std::to_string( t->n ) + ' ';
    print_cycles( out, t->cycles );
    out += ' ' + std::to_string( t->o );
    break;
  case term_kind::pi:
    out += ' ' + std::to_string( t->n ) + ' ';
    print_cycles( out, t->cycles );
    break;
  case term_kind::comp:
    out += ' ' + std::to_string( t->n );
    break;
  case term_kind::sel:
    out += " (";
    for ( std::size_t i = 0; i < t->indices.size(); ++i )
    {
      out += ( i ? " " : "" ) + std::to_string( t->indices[i] );
    }
    out += ')';
    break;
  case term_kind::ins:
    out += " (";
    for ( std::size_t i = 0; i < t->indices.size(); ++i )
    {
      out += ( i ? " (" : "(" ) + std::to_string( t->indices[i] ) + ' ' + std::to_string( t->constants[i] ) + ')';
    }
    out += ')';
    break;
  default:
    break;
  }
  for ( auto const& c : t->children )
  {
    out += ' ';
    print( out, c );
  }
  out += ')';
}

} // namespace

bool equal( term const& a, term const& b )
{
  if ( a == b )
  {
    return true;
  }
  if ( !a || !b || a->kind != b->kind || a->name != b->name || a->n != b->n || a->cycles != b->cycles ||
       a->o != b->o || a->indices != b->indices || a->constants != b->constants ||
       a->children.size() != b->children.size() )
  {
    return false;
  }
  for ( std::size_t i = 0; i < a->children.size(); ++i )
  {
    if ( !equal( a->children[i], b->children[i] ) )
    {
      return false;
    }
  }
  return true;
}

std::string to_string( term const& t )
{
  std::string out;
  print( out, t );
  return out;
}

std::string to_string( program const& p )
{
  std::string out;
  if ( p.alphabet_size )
  {
    out += "(alphabet " + std::to_string( *p.alphabet_size ) + ")\n";
  }
  for ( auto const& [name, t] : p.lets )
  {
    out += "(let " + name + ' ' + to_string( t ) + ")\n";
  }
  out += to_string( p.main ) + '\n';
  return out;
}

std::size_t leaf_count( term const& t )
{
  if ( t->children.empty() )
  {
    return 1;
  }
  std::size_t count = 0;
  for ( auto const& c : t->children )
  {
    count += leaf_count( c );
  }
  return count;
}

namespace
{

std::string child_path( std::string const& path, term const& parent, std::size_t i )
{
  return path + "/" + keyword( parent->kind ) + "[" + std::to_string( i + 1 ) + "]";
}

std::string where( std::string const& path, term const& t )
{
  auto const p = path.empty() ? std::string( "root" ) : path;
  return t->kind == term_kind::name ? p + " (" + t->name + ")" : p + " (" + keyword( t->kind ) + ")";
}

std::string shape_text( term_shape s )
{
  return "(" + std::to_string( s.arity ) + "," + std::to_string( s.coarity ) + ")";
}

term_shape bullet_shape( term_shape f, term_shape g )
{
  auto const k = std::min( f.arity, g.coarity );
  return { g.arity + f.arity - k, f.coarity + g.coarity - k };
}

term_shape shape_rec( term const& t, bindings const& env, std::string const& path )
{
  auto const child = [&]( std::size_t i ) { return shape_rec( t->children[i], env, child_path( path, t, i ) ); };
  switch ( t->kind )
  {
  case term_kind::name:
  {
    auto const it = env.find( t->name );
    if ( it == env.end() )
    {
      throw error( where( path, t ) + ": unbound name '" + t->name + "'" );
    }
    return { it->second.arity(), it->second.coarity() };
  }
  case term_kind::id:
  case term_kind::tg:
  case term_kind::pi:
    if ( t->kind == term_kind::tg && t->n == 0 )
    {
      throw domain_error( where( path, t ) + ": TG needs at least one wire" );
    }
    return { t->n, t->n };
  case term_kind::oplus:
  {
    term_shape s{ 0, 0 };
    for ( std::size_t i = 0; i < t->children.size(); ++i )
    {
      auto const c = child( i );
      s.arity += c.arity;
      s.coarity += c.coarity;
    }
    return s;
  }
  case term_kind::bullet:
  {
    auto s = child( 0 );
    for ( std::size_t i = 1; i < t->children.size(); ++i )
    {
      s = bullet_shape( s, child( i ) );
    }
    return s;
  }
  case term_kind::comp:
  {
    auto const f = child( 0 );
    auto const g = child( 1 );
    auto const k = t->n;
    if ( k > f.arity || k > g.coarity )
    {
      throw shape_error( where( path, t ) + ": comp " + std::to_string( k ),
                         "arity(f) >= " + std::to_string( k ) + " and coarity(g) >= " + std::to_string( k ),
                         "f " + shape_text( f ) + ", g " + shape_text( g ) );
    }
    return { g.arity + f.arity - k, f.coarity + g.coarity - k };
  }
  case term_kind::tau:
  case term_kind::zeta:
  case term_kind::btau:
  case term_kind::bzeta:
    return child( 0 );
  case term_kind::delta:
  {
    auto s = child( 0 );
    if ( s.arity >= 2 )
    {
      --s.arity;
    }
    return s;
  }
  case term_kind::nabla:
  {
    auto s = child( 0 );
    ++s.arity;
    return s;
  }
  case term_kind::sel:
  {
    auto const s = child( 0 );
    std::vector<bool> used( s.coarity, false );
    for ( auto const i : t->indices )
    {
      if ( i == 0 || i > s.coarity || used[i - 1] )
      {
        throw shape_error( where( path, t ) + ": sel", "distinct indices in {1.." + std::to_string( s.coarity ) + "}",
                           "index " + std::to_string( i ) );
      }
      used[i - 1] = true;
    }
    return { s.arity, static_cast<unsigned>( t->indices.size() ) };
  }
  case term_kind::ins:
  {
    auto const s = child( 0 );
    for ( std::size_t j = 0; j < t->indices.size(); ++j )
    {
      auto const p = t->indices[j];
      if ( p == 0 || p > s.arity || ( j > 0 && p <= t->indices[j - 1] ) )
      {
        throw shape_error( where( path, t ) + ": ins",
                           "strictly increasing positions in {1.." + std::to_string( s.arity ) + "}",
                           "position " + std::to_string( p ) );
      }
    }
    return { s.arity - static_cast<unsigned>( t->indices.size() ), s.coarity };
  }
  }
  throw error( "unknown term kind" );
}

class evaluator
{
public:
  evaluator( bindings const& env, alphabet a ) : env_( env ), alpha_( a ) {}

  map eval( term const& t, std::string const& path )
  {
    if ( auto const it = memo_.find( t.get() ); it != memo_.end() )
    {
      return it->second;
    }
    auto result = compute( t, path );
    memo_.emplace( t.get(), result );
    return result;
  }

private:
  map compute( term const& t, std::string const& path )
  {
    auto const child = [&]( std::size_t i ) { return eval( t->children[i], child_path( path, t, i ) ); };
    try
    {
      switch ( t->kind )
      {
      case term_kind::name:
      {
        auto const& f = env_.at( t->name );
        if ( f.alpha() != alpha_ )
        {
          throw shape_error( "binding '" + t->name + "'", "alphabet of size " + std::to_string( alpha_.size() ),
                             "alphabet of size " + std::to_string( f.k() ) );
        }
        return f;
      }
      case term_kind::id:
        return map::identity( alpha_, t->n );
      case term_kind::tg:
        return tg_map( t );
      case term_kind::pi:
        return pi( alpha_, wire_permutation::from_cycle_product( t->n, t->cycles ) );
      case term_kind::oplus:
      {
        auto result = child( 0 );
        for ( std::size_t i = 1; i < t->children.size(); ++i )
        {
          result = oplus( result, child( i ) );
        }
        return result;
      }
      case term_kind::bullet:
      {
        auto result = child( 0 );
        for ( std::size_t i = 1; i < t->children.size(); ++i )
        {
          result = bullet( result, child( i ) );
        }
        return result;
      }
      case term_kind::comp:
        return compose_k( child( 0 ), child( 1 ), t->n );
      case term_kind::tau:
        return tau( child( 0 ) );
      case term_kind::zeta:
        return zeta( child( 0 ) );
      case term_kind::btau:
        return bar_tau( child( 0 ) );
      case term_kind::bzeta:
        return bar_zeta( child( 0 ) );
      case term_kind::delta:
        return delta( child( 0 ) );
      case term_kind::nabla:
        return nabla( child( 0 ) );
      case term_kind::sel:
        return select( t->indices, child( 0 ) );
      case term_kind::ins:
        return insert( t->indices, t->constants, child( 0 ) );
      }
    }
    catch ( shape_error const& e )
    {
      if ( t->children.empty() || t->kind == term_kind::comp )
      {
        throw shape_error( where( path, t ) + ": " + e.what(), e.expected(), e.actual() );
      }
      throw;
    }
    catch ( domain_error const& e )
    {
      if ( t->children.empty() || t->kind == term_kind::sel || t->kind == term_kind::ins )
      {
        throw domain_error( where( path, t ) + ": " + e.what() );
      }
      throw;
    }
    throw error( "unknown term kind" );
  }

  map tg_map( term const& t )
  {
    auto const alpha = alphabet_permutation::from_cycle_product( alpha_.size(), t->cycles );
    return tg( alpha_, t->n, alpha, t->o );
  }

  bindings const& env_;
  alphabet alpha_;
  std::unordered_map<term_node const*, map> memo_;
};

} // namespace

term_shape shape_of( term const& t, bindings const& env )
{
  return shape_rec( t, env, "" );
}

map evaluate_term( term const& t, bindings const& env, alphabet a )
{
  shape_of( t, env );
  evaluator ev( env, a );
  return ev.eval( t, "" );
}

map evaluate_program( program const& p, bindings const& env, alphabet a )
{
  auto scope = env;
  for ( auto const& [name, t] : p.lets )
  {
    try
    {
      scope.insert_or_assign( name, evaluate_term( t, scope, a ) );
    }
    catch ( error const& e )
    {
      throw error( "in let '" + name + "': " + e.what() );
    }
  }
  return evaluate_term( p.main, scope, a );
}

std::set<std::string> free_names( term const& t )
{
  std::set<std::string> names;
  std::function<void( term const& )> walk = [&]( term const& u ) {
    if ( u->kind == term_kind::name )
    {
      names.insert( u->name );
    }
    for ( auto const& c : u->children )
    {
      walk( c );
    }
  };
  walk( t );
  return names;
}

std::set<std::string> free_names( program const& p )
{
  std::set<std::string> bound;
  std::set<std::string> names;
  auto const add = [&]( term const& t ) {
    for ( auto const& n : free_names( t ) )
    {
      if ( !bound.contains( n ) )
      {
        names.insert( n );
      }
    }
  };
  for ( auto const& [name, t] : p.lets )
  {
    add( t );
    bound.insert( name );
  }
  add( p.main );
  return names;
}

} // namespace revclone
