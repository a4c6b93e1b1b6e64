#include "cli.hpp"

#include <revclone/closure.hpp>
#include <revclone/error.hpp>
#include <revclone/gates.hpp>
#include <revclone/group.hpp>
#include <revclone/identities.hpp>
#include <revclone/map_io.hpp>
#include <revclone/netlist.hpp>
#include <revclone/ops.hpp>
#include <revclone/synth.hpp>
#include <revclone/term.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace revclone::cli
{

namespace
{

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct io
{
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_all( std::istream& in )
{
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string read_input( std::string const& path, io& io )
{
  if ( path == "-" )
  {
    return read_all( io.in );
  }
  std::ifstream f( path );
  if ( !f )
  {
    throw domain_error( "cannot open " + path );
  }
  return read_all( f );
}

map read_map_arg( std::string const& path, io& io )
{
  return parse_map( read_input( path, io ) );
}

std::string big( big_int const& v )
{
  return v.str();
}

big_int factorial( std::uint64_t n )
{
  big_int r = 1;
  for ( std::uint64_t i = 2; i <= n; ++i )
  {
    r *= i;
  }
  return r;
}

json map_json( map const& f )
{
  json rows = json::array();
  for ( std::uint64_t r = 0; r < f.rows(); ++r )
  {
    auto const x = decode( { r }, f.alpha(), f.arity() );
    auto const y = f.row( r );
    json row = json::array();
    row.push_back( std::vector<unsigned>( x.begin(), x.end() ) );
    row.push_back( std::vector<unsigned>( y.begin(), y.end() ) );
    rows.push_back( std::move( row ) );
  }
  return { { "alphabet", f.k() }, { "arity", f.arity() }, { "coarity", f.coarity() }, { "rows", rows } };
}

json netlist_json( netlist const& nl )
{
  static char const* const kinds[] = { "tg", "pi", "unary" };
  json stages = json::array();
  for ( auto const& s : nl.stages )
  {
    stages.push_back( { { "kind", kinds[static_cast<int>( s.kind )] },
                        { "perm", s.perm },
                        { "o", s.o },
                        { "wires", s.wires } } );
  }
  return { { "wires", nl.wires }, { "stages", stages } };
}

/// A generator argument names a .map file if one exists, otherwise a builtin family.
std::vector<named_map> resolve_generator( std::string const& spec, std::optional<unsigned> k, unsigned arity )
{
  if ( fs::is_regular_file( spec ) )
  {
    auto f = read_map_file( spec );
    if ( k && f.k() != *k )
    {
      throw domain_error( "generator " + spec + " has alphabet " + std::to_string( f.k() ) + ", expected " + std::to_string( *k ) );
    }
    return { { fs::path( spec ).stem().string(), std::move( f ) } };
  }
  if ( !k )
  {
    throw domain_error( "builtin generator '" + spec + "' needs --alphabet" );
  }
  auto name = spec;
  if ( name.ends_with( ".map" ) )
  {
    name.resize( name.size() - 4 );
    name = fs::path( name ).filename().string();
  }
  if ( auto gens = builtin_generators( name, alphabet( *k ), arity ) )
  {
    return *gens;
  }
  throw domain_error( "unknown generator '" + spec + "' (neither a file nor a builtin name)" );
}

std::vector<named_map> resolve_generators( std::vector<std::string> const& specs, std::optional<unsigned> k, unsigned arity )
{
  std::vector<named_map> F;
  for ( auto const& s : specs )
  {
    auto gens = resolve_generator( s, k, arity );
    F.insert( F.end(), gens.begin(), gens.end() );
  }
  return F;
}

map resolve_single( std::string const& spec, std::optional<unsigned> k )
{
  auto gens = resolve_generator( spec, k, 0 );
  if ( gens.size() != 1 )
  {
    throw domain_error( "'" + spec + "' names " + std::to_string( gens.size() ) + " maps, expected one" );
  }
  return gens.front().value;
}

void add_caps( CLI::App* cmd, search_caps& caps )
{
  cmd->add_option( "--max-arity", caps.max_arity, "Arity cap for closure searches" )->capture_default_str();
  cmd->add_option( "--max-coarity", caps.max_coarity, "Coarity cap for closure searches" )->capture_default_str();
  cmd->add_option( "--max-elements", caps.max_elements, "Maps kept or group elements enumerated" )->capture_default_str();
}

std::string format_word( word const& w, tuple_group const& G )
{
  if ( w.empty() )
  {
    return "(identity)";
  }
  std::string s;
  for ( std::size_t i = 0; i < w.size(); ++i )
  {
    s += ( i ? " . " : "" ) + G.generators()[w[i].index].name + ( w[i].inverse ? "^-1" : "" );
  }
  return s;
}

bool looks_like_netlist( std::string const& text )
{
  std::istringstream lines( text );
  std::string line;
  while ( std::getline( lines, line ) )
  {
    std::istringstream tokens( line );
    std::string first;
    if ( !( tokens >> first ) || first[0] == '#' || first[0] == ';' )
    {
      continue;
    }
    return first == "wires";
  }
  return false;
}

std::string classify( big_int const& order, std::uint64_t degree )
{
  auto const full = factorial( degree );
  if ( order == full )
  {
    return "symmetric";
  }
  if ( degree >= 2 && order * 2 == full )
  {
    return "alternating";
  }
  return "proper subgroup";
}

// ---- subcommands -------------------------------------------------------------------

struct eval_args
{
  std::string input;
  std::string maps_dir;
  std::optional<unsigned> k;
};

int cmd_eval( eval_args const& args, bool as_json, io& io )
{
  auto const text = read_input( args.input, io );
  std::optional<map> result;
  if ( looks_like_netlist( text ) )
  {
    if ( !args.k )
    {
      throw domain_error( "netlist input needs --alphabet" );
    }
    result = simulate( parse_netlist( text ), alphabet( *args.k ) );
  }
  else
  {
    auto const prog = parse_program( text );
    if ( prog.alphabet_size && args.k && *prog.alphabet_size != *args.k )
    {
      throw domain_error( "--alphabet " + std::to_string( *args.k ) + " disagrees with (alphabet " +
                          std::to_string( *prog.alphabet_size ) + ")" );
    }
    auto const k = prog.alphabet_size ? prog.alphabet_size : args.k;
    if ( !k )
    {
      throw domain_error( "no alphabet: add (alphabet k) to the program or pass --alphabet" );
    }
    bindings env;
    for ( auto const& name : free_names( prog ) )
    {
      auto const file = fs::path( args.maps_dir.empty() ? "." : args.maps_dir ) / ( name + ".map" );
      env.emplace( name, fs::is_regular_file( file ) ? read_map_file( file ) : resolve_single( name, k ) );
    }
    result = evaluate_program( prog, env, alphabet( *k ) );
  }
  if ( as_json )
  {
    io.out << map_json( *result ).dump( 2 ) << "\n";
  }
  else
  {
    write_map( io.out, *result );
  }
  return ok;
}

int cmd_check( std::string const& path, bool want_bijective, bool want_balanced, bool as_json, io& io )
{
  auto const f = read_map_arg( path, io );
  auto const bij = is_bijective( f );
  auto const bal = is_balanced( f );
  if ( as_json )
  {
    io.out << json{ { "alphabet", f.k() }, { "arity", f.arity() }, { "coarity", f.coarity() }, { "balanced", bal }, { "bijective", bij } }.dump( 2 )
           << "\n";
  }
  else
  {
    io.out << "alphabet " << f.k() << "\narity " << f.arity() << "\ncoarity " << f.coarity() << "\nbalanced "
           << ( bal ? "yes" : "no" ) << "\nbijective " << ( bij ? "yes" : "no" ) << "\n";
  }
  if ( ( want_bijective && !bij ) || ( want_balanced && !bal ) )
  {
    return verdict_false;
  }
  return ok;
}

int cmd_closure_order( unsigned k, unsigned n, std::vector<std::string> const& gens, bool as_json, io& io )
{
  auto const a = alphabet( k );
  auto const F = resolve_generators( gens, k, n );
  auto const G = slice_group( F, a, n );
  auto const order = G.order();
  if ( as_json )
  {
    io.out << json{ { "alphabet", k },
                    { "arity", n },
                    { "degree", G.degree() },
                    { "generators", G.generators().size() },
                    { "order", big( order ) },
                    { "base", G.base() },
                    { "orbit_lengths", G.orbit_lengths() },
                    { "classification", classify( order, G.degree() ) } }
                  .dump( 2 )
           << "\n";
  }
  else
  {
    io.out << big( order ) << "\n";
  }
  return ok;
}

struct member_args
{
  std::string target;
  std::vector<std::string> gens;
  std::optional<unsigned> k;
  bool witness = false;
  search_caps caps;
};

int cmd_member( member_args const& args, bool as_json, io& io )
{
  auto const g = resolve_single( args.target, args.k );
  auto const a = g.alpha();
  auto const n = g.arity();
  auto const F = resolve_generators( args.gens, a.size(), n );
  json report{ { "target", args.target }, { "alphabet", a.size() }, { "arity", n } };
  bool member = false;
  bool truncated = false;
  std::string witness_text;

  auto const bijective = is_bijective( g ) && std::all_of( F.begin(), F.end(), []( named_map const& f ) { return is_bijective( f.value ); } );
  if ( bijective )
  {
    std::vector<named_map> usable;
    std::copy_if( F.begin(), F.end(), std::back_inserter( usable ), [&]( named_map const& f ) { return f.value.arity() <= n; } );
    auto const G = slice_group( usable, a, n );
    auto const p = tuple_permutation::from_map( g );
    member = G.contains( p );
    report["method"] = "slice group";
    report["group_order"] = big( G.order() );
    if ( member && args.witness )
    {
      auto const w = G.witness( p );
      witness_text = format_word( *w, G );
      report["witness"] = witness_text;
      report["witness_length"] = w->size();
    }
  }
  else
  {
    std::vector<map> maps;
    for ( auto const& f : F )
    {
      maps.push_back( f.value );
    }
    auto caps = args.caps;
    caps.max_arity = std::max( caps.max_arity, n );
    caps.max_coarity = std::max( caps.max_coarity, g.coarity() );
    auto const sat = saturate( maps, a, caps, false );
    member = std::find( sat.maps.begin(), sat.maps.end(), g ) != sat.maps.end();
    truncated = !sat.complete || sat.overflow;
    report["method"] = "saturation";
    report["maps"] = sat.maps.size();
    report["complete"] = sat.complete;
  }
  report["member"] = member;
  if ( as_json )
  {
    io.out << report.dump( 2 ) << "\n";
  }
  else
  {
    io.out << ( member ? "member" : ( truncated ? "not found within caps" : "not a member" ) ) << "\n";
    if ( !witness_text.empty() )
    {
      io.out << "witness (applied left to right): " << witness_text << "\n";
    }
  }
  if ( member )
  {
    return ok;
  }
  return truncated ? cap_overflow : verdict_false;
}

int cmd_realise( member_args const& args, bool as_json, io& io )
{
  auto const g = resolve_single( args.target, args.k );
  auto const a = g.alpha();
  auto const F = resolve_generators( args.gens, a.size(), g.arity() );
  auto const r = check_realisation( g, F, a, args.caps );
  if ( as_json )
  {
    json report{ { "target", args.target }, { "verdict", to_string( r.kind ) }, { "truncated", r.truncated } };
    report["constants"] = std::vector<unsigned>( r.constants.begin(), r.constants.end() );
    if ( r.f )
    {
      report["f"] = map_json( *r.f );
    }
    io.out << report.dump( 2 ) << "\n";
  }
  else
  {
    io.out << to_string( r.kind ) << "\n";
    if ( r.f )
    {
      io.out << "constants " << to_string( r.constants ) << "\n";
      write_map( io.out, *r.f );
    }
    if ( r.truncated )
    {
      io.out << "search truncated by caps\n";
    }
  }
  if ( r.kind != realisation_kind::not_found )
  {
    return ok;
  }
  return r.truncated ? cap_overflow : verdict_false;
}

int cmd_embed( std::string const& path, bool as_json, io& io )
{
  auto const g = read_map_arg( path, io );
  auto const e = embed( g );
  if ( embedded( e ) != g )
  {
    throw error( "internal: embedding does not reproduce the input" );
  }
  if ( as_json )
  {
    io.out << json{ { "r", e.r },
                    { "o", e.o },
                    { "theta1", e.theta1 },
                    { "constant_positions", e.constant_positions },
                    { "theta2", e.theta2 },
                    { "f", map_json( e.f ) } }
                  .dump( 2 )
           << "\n";
    return ok;
  }
  auto const list = []( std::vector<unsigned> const& v ) {
    std::string s = "(";
    for ( std::size_t i = 0; i < v.size(); ++i )
    {
      s += ( i ? " " : "" ) + std::to_string( v[i] );
    }
    return s + ")";
  };
  io.out << "# r " << e.r << " o " << static_cast<unsigned>( e.o ) << " theta1 " << list( e.theta1 ) << " constants "
         << list( e.constant_positions ) << " theta2 " << list( e.theta2 ) << "\n";
  write_map( io.out, e.f );
  return ok;
}

int cmd_synth( std::string const& path, std::string const& policy_name, bool as_json, io& io )
{
  auto const f = read_map_arg( path, io );
  gate_policy policy;
  if ( policy_name == "tg-n" )
  {
    policy = gate_policy::tg_n;
  }
  else if ( policy_name == "odd-small" )
  {
    policy = gate_policy::odd_small;
  }
  else
  {
    throw domain_error( "unknown policy '" + policy_name + "' (tg-n or odd-small)" );
  }
  auto const nl = synthesize( f, policy );
  if ( simulate( nl, f.alpha() ) != f )
  {
    throw error( "internal: synthesized netlist does not simulate to the input" );
  }
  if ( as_json )
  {
    io.out << json{ { "policy", policy_name }, { "netlist", netlist_json( nl ) } }.dump( 2 ) << "\n";
  }
  else
  {
    io.out << "# stages " << nl.stages.size() << "\n" << format_netlist( nl );
  }
  return ok;
}

struct lift_odd_args
{
  unsigned k = 0;
  unsigned n = 0;
  bool swap = false;
  bool cycle = false;
  std::string perm;
  bool step = false;
  bool as_netlist = false;
};

int cmd_lift_odd( lift_odd_args const& args, bool as_json, io& io )
{
  auto const a = alphabet( args.k );
  alphabet_permutation alpha( args.k );
  if ( args.swap + args.cycle + !args.perm.empty() != 1 )
  {
    throw domain_error( "give exactly one of --swap, --cycle, --perm" );
  }
  if ( args.swap )
  {
    alpha = alphabet_permutation::transposition( args.k, 1, 2 );
  }
  else if ( args.cycle )
  {
    alpha = alphabet_permutation::full_cycle( args.k );
  }
  else
  {
    alpha = parse_permutation<letter_tag>( args.perm, args.k );
  }
  term t;
  if ( args.step )
  {
    if ( args.perm.size() )
    {
      throw domain_error( "--step builds the swap or cycle construction only" );
    }
    if ( args.n < 3 )
    {
      throw domain_error( "--step needs --n >= 3" );
    }
    t = args.swap ? lift_odd_step_swap( a, args.n - 1 ) : lift_odd_step_cycle( a, args.n - 1 );
  }
  else
  {
    t = lift_odd( a, args.n, alpha );
  }
  if ( as_json )
  {
    auto const nl = term_to_netlist( t );
    io.out << json{ { "alphabet", args.k },
                    { "n", args.n },
                    { "perm", alpha.to_string() },
                    { "term", to_string( t ) },
                    { "leaves", leaf_count( t ) },
                    { "netlist", netlist_json( nl ) } }
                  .dump( 2 )
           << "\n";
  }
  else if ( args.as_netlist )
  {
    io.out << format_netlist( term_to_netlist( t ) );
  }
  else
  {
    io.out << "(alphabet " << args.k << ")\n" << to_string( t ) << "\n";
  }
  return ok;
}

struct lift_ts_args
{
  unsigned k = 0;
  unsigned n = 0;
  std::string perm;
  unsigned o = 1;
  std::optional<unsigned> p;
};

int cmd_lift_ts( lift_ts_args const& args, bool as_json, io& io )
{
  auto const a = alphabet( args.k );
  auto const alpha = parse_permutation<letter_tag>( args.perm, args.k );
  auto const o = static_cast<letter>( args.o );
  auto const p = args.p ? static_cast<letter>( *args.p ) : default_ancilla_letter( a, o );
  auto const lift = lift_temp_storage( a, args.n, alpha, o, p );
  auto const gate = tg( a, args.n, alpha, o );
  auto const report = check_temp_storage( lift.f, lift.constants, gate );
  auto const exact = lift.g == gate;
  if ( as_json )
  {
    io.out << json{ { "alphabet", args.k },
                    { "n", args.n },
                    { "perm", alpha.to_string() },
                    { "o", args.o },
                    { "p", static_cast<unsigned>( p ) },
                    { "ancillas", lift.ancillas },
                    { "reduct_equals_gate", exact },
                    { "storage", to_string( report.level ) },
                    { "netlist", netlist_json( lift.circuit ) } }
                  .dump( 2 )
           << "\n";
  }
  else
  {
    io.out << "# ancillas " << lift.ancillas << " initialised to " << static_cast<unsigned>( p ) << "\n"
           << "# reduct equals TG(" << args.n << "," << alpha.to_string() << "," << args.o << "): " << ( exact ? "yes" : "no" ) << "\n"
           << "# storage " << to_string( report.level ) << "\n"
           << format_netlist( lift.circuit );
  }
  return exact && report.level == storage_level::strong ? ok : verdict_false;
}

int cmd_identities( unsigned k, unsigned trials, std::uint64_t seed, std::string const& filter, bool as_json, io& io )
{
  auto const results = check_identities( alphabet( k ), trials, seed, filter );
  if ( results.empty() )
  {
    throw domain_error( "no law matches '" + filter + "'" );
  }
  std::size_t failed = 0;
  json laws = json::array();
  for ( auto const& r : results )
  {
    failed += r.failures != 0;
    laws.push_back( { { "name", r.name }, { "statement", r.statement }, { "trials", r.trials }, { "failures", r.failures }, { "first_failure", r.first_failure } } );
  }
  if ( as_json )
  {
    io.out << json{ { "alphabet", k }, { "trials", trials }, { "seed", seed }, { "laws", laws }, { "failed_laws", failed } }.dump( 2 ) << "\n";
  }
  else
  {
    for ( auto const& r : results )
    {
      io.out << r.name << " trials " << r.trials << " failures " << r.failures << "\n";
      if ( r.failures )
      {
        io.out << "  " << r.first_failure << "\n";
      }
    }
    io.out << ( failed ? std::to_string( failed ) + " laws failed" : "all laws hold" ) << "\n";
  }
  return failed ? verdict_false : ok;
}

int cmd_scan( unsigned k, unsigned n, bool as_json, io& io )
{
  auto const a = alphabet( k );
  auto const degree = a.tuple_count( n );
  auto const full = factorial( degree );
  json report{ { "alphabet", k }, { "n", n }, { "degree", degree }, { "full_order", big( full ) } };
  std::ostringstream text;
  text << "alphabet " << k << " n " << n << " degree " << degree << "\n";
  text << "|B_n| = " << big( full ) << "\n";

  auto const c = alphabet_permutation::full_cycle( k );
  std::vector<named_map> small{ { "(1..k)", unary( a, c ) }, { "TG(n,(1..k),1)", tg( a, n, c, 1 ) } };
  auto const order = slice_group( small, a, n ).order();
  auto const kind = classify( order, degree );
  std::string note;
  if ( k % 2 == 0 )
  {
    note = order == full ? "matches conjecture at this size" : "does not match conjecture at this size";
  }
  else
  {
    note = order == full ? "generates all of B_n at this size" : "proper subgroup of B_n: the two-generator set falls short for this odd alphabet";
  }
  report["cycle_pair"] = { { "order", big( order ) }, { "classification", kind }, { "observation", note } };
  text << "{(1..k), TG(n,(1..k),1)}: order " << big( order ) << ", " << kind << "; " << note << "\n";

  if ( k % 2 == 0 && n >= 3 )
  {
    auto const family = *builtin_generators( "tg-family-all-lt" + std::to_string( n ), a, n );
    auto const lower = slice_group( family, a, n ).order();
    auto const lower_kind = classify( lower, degree );
    std::string lower_note;
    if ( k == 2 && n == 3 )
    {
      lower_note = "excluded size for the alternating-group conjecture";
    }
    else
    {
      lower_note = lower_kind == "alternating" ? "matches conjecture at this size" : "does not match conjecture at this size";
    }
    report["lower_toffoli"] = { { "generators", family.size() }, { "order", big( lower ) }, { "alternating_order", big( full / 2 ) },
                                { "classification", lower_kind }, { "observation", lower_note } };
    text << "{TG(i,a,o) : i < n}: " << family.size() << " generators, order " << big( lower ) << ", " << lower_kind << " (|Alt| = "
         << big( full / 2 ) << "); " << lower_note << "\n";
  }
  else
  {
    text << "{TG(i,a,o) : i < n}: not scanned (needs an even alphabet and n >= 3)\n";
  }
  if ( as_json )
  {
    io.out << report.dump( 2 ) << "\n";
  }
  else
  {
    io.out << text.str();
  }
  return ok;
}

} // namespace

int run( std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err )
{
  io io{ in, out, err };
  CLI::App app{ "Finite multi-valued maps, reversible clones and Toffoli synthesis", "revclone" };
  app.require_subcommand( 1 );
  bool as_json = false;
  app.add_flag( "--json", as_json, "Print reports as JSON" );
  std::function<int()> action;

  eval_args ev;
  auto* eval = app.add_subcommand( "eval", "Evaluate a .circ program or netlist and print the .map" );
  eval->add_option( "circ", ev.input, "Input file, - for stdin" )->required();
  eval->add_option( "--maps", ev.maps_dir, "Directory with <name>.map bindings" );
  eval->add_option( "--alphabet", ev.k, "Alphabet size when the input does not declare one" );
  eval->callback( [&] { action = [&] { return cmd_eval( ev, as_json, io ); }; } );

  std::string check_path;
  bool want_bij = false, want_bal = false;
  auto* check = app.add_subcommand( "check", "Report shape, balance and bijectivity of a .map" );
  check->add_option( "map", check_path, "Input .map, - for stdin" )->required();
  check->add_flag( "--bijective", want_bij, "Exit 1 unless bijective" );
  check->add_flag( "--balanced", want_bal, "Exit 1 unless balanced" );
  check->callback( [&] { action = [&] { return cmd_check( check_path, want_bij, want_bal, as_json, io ); }; } );

  unsigned co_k = 0, co_n = 0;
  std::vector<std::string> co_gens;
  auto* co = app.add_subcommand( "closure-order", "Order of the arity-n slice of the revclone generated by F" );
  co->add_option( "--alphabet", co_k, "Alphabet size" )->required();
  co->add_option( "--arity", co_n, "Slice arity n" )->required();
  co->add_option( "--gen", co_gens, "Generator file or builtin name (repeatable)" );
  co->callback( [&] { action = [&] { return cmd_closure_order( co_k, co_n, co_gens, as_json, io ); }; } );

  member_args mem;
  auto* member = app.add_subcommand( "member", "Is TARGET isomorphically realised by F" );
  member->add_option( "target", mem.target, "Target .map file or builtin name" )->required();
  member->add_option( "--gen", mem.gens, "Generator file or builtin name (repeatable)" );
  member->add_option( "--alphabet", mem.k, "Alphabet size for builtin names" );
  member->add_flag( "--witness", mem.witness, "Print a generator word for members" );
  add_caps( member, mem.caps );
  member->callback( [&] { action = [&] { return cmd_member( mem, as_json, io ); }; } );

  member_args real;
  auto* realise = app.add_subcommand( "realise", "Strongest realisation of TARGET by F within caps" );
  realise->add_option( "target", real.target, "Target .map file or builtin name" )->required();
  realise->add_option( "--gen", real.gens, "Generator file or builtin name (repeatable)" );
  realise->add_option( "--alphabet", real.k, "Alphabet size for builtin names" );
  add_caps( realise, real.caps );
  realise->callback( [&] { action = [&] { return cmd_realise( real, as_json, io ); }; } );

  std::string embed_path;
  auto* emb = app.add_subcommand( "embed", "Embed a map into a bijection with constant inputs" );
  emb->add_option( "map", embed_path, "Input .map, - for stdin" )->required();
  emb->callback( [&] { action = [&] { return cmd_embed( embed_path, as_json, io ); }; } );

  std::string synth_path, policy = "tg-n";
  auto* syn = app.add_subcommand( "synth", "Synthesize a netlist for a bijection" );
  syn->add_option( "map", synth_path, "Input .map, - for stdin" )->required();
  syn->add_option( "--policy", policy, "tg-n or odd-small" )->capture_default_str();
  syn->callback( [&] { action = [&] { return cmd_synth( synth_path, policy, as_json, io ); }; } );

  lift_odd_args lo;
  auto* lift = app.add_subcommand( "lift-odd", "Term for TG(n, a, 1) over arity <= 2 gates (odd alphabets)" );
  lift->add_option( "--alphabet", lo.k, "Odd alphabet size" )->required();
  lift->add_option( "--n", lo.n, "Target arity" )->required();
  lift->add_flag( "--swap", lo.swap, "a = (1 2)" );
  lift->add_flag( "--cycle", lo.cycle, "a = (1 ... k)" );
  lift->add_option( "--perm", lo.perm, "Any a in cycle notation" );
  lift->add_flag( "--step", lo.step, "One induction step over TG(n-1, ., 1) literals" );
  lift->add_flag( "--netlist", lo.as_netlist, "Print a netlist instead of a term" );
  lift->callback( [&] { action = [&] { return cmd_lift_odd( lo, as_json, io ); }; } );

  lift_ts_args ts;
  auto* lts = app.add_subcommand( "lift-ts", "TG(n, a, o) from arity <= 3 gates with strong temporary storage" );
  lts->add_option( "--alphabet", ts.k, "Alphabet size" )->required();
  lts->add_option( "--n", ts.n, "Target arity (>= 4)" )->required();
  lts->add_option( "--perm", ts.perm, "a in cycle notation" )->required();
  lts->add_option( "--o", ts.o, "Control letter" )->capture_default_str();
  lts->add_option( "--p", ts.p, "Ancilla letter (default: smallest letter != o)" );
  lts->callback( [&] { action = [&] { return cmd_lift_ts( ts, as_json, io ); }; } );

  unsigned id_k = 2, trials = 1000;
  std::uint64_t seed = 1;
  std::string law;
  auto* ids = app.add_subcommand( "identities", "Check the closure exchange laws on seeded random maps" );
  ids->add_option( "--alphabet", id_k, "Alphabet size" )->capture_default_str();
  ids->add_option( "--trials", trials, "Instances per law" )->capture_default_str();
  ids->add_option( "--seed", seed, "Seed" )->capture_default_str();
  ids->add_option( "--law", law, "Only laws whose name contains this" );
  ids->callback( [&] { action = [&] { return cmd_identities( id_k, trials, seed, law, as_json, io ); }; } );

  unsigned sc_k = 2, sc_n = 2;
  auto* scan = app.add_subcommand( "scan-conjectures", "Observed group orders for the generating-set conjectures" );
  scan->add_option( "--alphabet", sc_k, "Alphabet size" )->required();
  scan->add_option( "--n", sc_n, "Arity" )->required();
  scan->callback( [&] { action = [&] { return cmd_scan( sc_k, sc_n, as_json, io ); }; } );

  auto* builtins = app.add_subcommand( "builtins", "List builtin generator names" );
  builtins->callback( [&] {
    action = [&] {
      for ( auto const& [name, description] : builtin_names() )
      {
        io.out << name << "  " << description << "\n";
      }
      return int( ok );
    };
  } );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( CLI::ParseError const& e )
  {
    auto const code = app.exit( e, out, err );
    return code == 0 ? ok : usage_error;
  }

  try
  {
    return action();
  }
  catch ( parse_error const& e )
  {
    err << "revclone: parse error at " << e.what() << "\n";
  }
  catch ( std::exception const& e )
  {
    err << "revclone: " << e.what() << "\n";
  }
  return usage_error;
}

} // namespace revclone::cli
