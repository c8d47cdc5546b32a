// Command-line front end: representation conversions, reference tables,
// shift/reverse calculus, generalized self-shrinking generation, and the
// property verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <gf2seq/bit_sequence.hpp>
#include <gf2seq/boolean_function.hpp>
#include <gf2seq/gssg.hpp>
#include <gf2seq/lfsr.hpp>
#include <gf2seq/representation.hpp>
#include <gf2seq/shift_reverse.hpp>
#include <gf2seq/subset_transform.hpp>
#include <gf2seq/text_tables.hpp>
#include <gf2seq/verify.hpp>

namespace
{

using namespace gf2seq;

struct usage_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct convert_args
{
  std::string from, to, input;
  std::size_t frame = 0;   // 0 = unset
  int vars = -1;           // -1 = unset
};

const std::vector<std::string> representation_names = { "seq", "tt", "anf", "ranf", "brep", "minterms" };

bool needs_vars( const std::string& rep )
{
  return rep == "anf" || rep == "tt";
}

int run_convert( const convert_args& args )
{
  std::optional<unsigned> vars;
  if ( args.vars >= 0 )
  {
    vars = static_cast<unsigned>( args.vars );
  }
  std::size_t frame = args.frame;
  if ( ( needs_vars( args.from ) || needs_vars( args.to ) ) && !vars )
  {
    throw usage_error( "--vars is required when converting from or to anf/tt" );
  }
  if ( vars )
  {
    if ( *vars > 20 )
    {
      throw usage_error( "--vars must be at most 20" );
    }
    const std::size_t implied = std::size_t{ 1 } << *vars;
    if ( frame != 0 && frame != implied )
    {
      throw usage_error( "--frame contradicts --vars (expected " + std::to_string( implied ) + ")" );
    }
    frame = implied;
  }

  // ingest into a sequence or a bare support set
  std::optional<bit_sequence> seq;
  std::optional<std::vector<std::uint32_t>> support;
  try
  {
    if ( args.from == "seq" )
    {
      seq = bit_sequence::parse( args.input );
      if ( frame != 0 )
      {
        seq = seq->repeated_to( frame );
      }
    }
    else if ( args.from == "tt" )
    {
      const auto values = bit_sequence::parse( args.input );
      if ( values.size() != frame )
      {
        throw usage_error( "truth table must have exactly 2^vars bits, got " + std::to_string( values.size() ) );
      }
      seq = moebius( values );
    }
    else if ( args.from == "anf" )
    {
      seq = parse_anf( args.input, vars ).coeffs;
    }
    else if ( args.from == "ranf" )
    {
      support = parse_ranf( args.input ).monomials;
    }
    else if ( args.from == "brep" || args.from == "minterms" )
    {
      support = parse_index_list( args.input );
    }
  }
  catch ( const parse_error& e )
  {
    throw usage_error( "input is not a valid --from=" + args.from + " value: " + e.what() );
  }

  const auto materialize = [&]() -> bit_sequence {
    if ( seq )
    {
      return *seq;
    }
    if ( frame == 0 )
    {
      throw usage_error( "--frame is required to convert " + args.from + " to " + args.to );
    }
    return sequence_from_brep( binomial_combo( frame, *support ) );
  };
  const auto to_support = [&]() -> std::vector<std::uint32_t> {
    if ( support )
    {
      return *support;
    }
    return brep_from_sequence( *seq ).support;
  };

  if ( args.to == "seq" )
  {
    std::cout << materialize().to_string() << '\n';
  }
  else if ( args.to == "tt" )
  {
    std::cout << moebius( materialize() ).to_string() << '\n';
  }
  else if ( args.to == "anf" )
  {
    std::cout << format_anf( anf_form( materialize(), *vars ) ) << '\n';
  }
  else if ( args.to == "ranf" )
  {
    std::cout << format_ranf( ranf_polynomial( to_support() ) ) << '\n';
  }
  else if ( args.to == "brep" )
  {
    const auto s = to_support();
    const std::size_t check_frame = frame != 0 ? frame : ( seq ? seq->size() : 0 );
    if ( check_frame != 0 )
    {
      std::cout << format_brep( binomial_combo( check_frame, s ) ) << '\n';
    }
    else
    {
      std::cout << format_brep( binomial_combo( std::bit_ceil<std::size_t>( s.empty() ? 1 : s.back() + 1 ), s ) ) << '\n';
    }
  }
  else
  {
    std::cout << format_minterms( to_support() ) << '\n';
  }
  return 0;
}

bit_sequence state_or_default( const std::string& text, unsigned degree )
{
  if ( text.empty() )
  {
    return all_ones_state( degree );
  }
  const auto state = bit_sequence::parse( text );
  if ( state.size() != degree )
  {
    throw usage_error( "--state must have exactly " + std::to_string( degree ) + " bits" );
  }
  return state;
}

void print_table( const text_table& table, const std::string& format )
{
  std::cout << ( format == "csv" ? render_csv( table ) : render_aligned( table ) );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Binary sequences of power-of-two period as Boolean functions: "
                "B-representation, reverse-ANF, shift/reverse calculus, and "
                "generalized self-shrinking sequence analysis" };
  app.require_subcommand( 1 );
  int exit_code = 0;

  // convert
  convert_args conv;
  auto* cmd_convert = app.add_subcommand( "convert", "Convert between sequence and Boolean-function representations" );
  cmd_convert->add_option( "--from", conv.from, "Input representation" )->required()->check( CLI::IsMember( representation_names ) );
  cmd_convert->add_option( "--to", conv.to, "Output representation" )->required()->check( CLI::IsMember( representation_names ) );
  cmd_convert->add_option( "--frame", conv.frame, "Power-of-two window length" );
  cmd_convert->add_option( "--vars", conv.vars, "Variable count for anf/tt" );
  cmd_convert->add_option( "input", conv.input, "Value in the input representation" )->required();
  cmd_convert->callback( [&]() { exit_code = run_convert( conv ); } );

  // tables
  std::string tbl_which, tbl_poly, tbl_state, tbl_g, tbl_format = "text";
  std::uint32_t tbl_count = 16;
  std::size_t tbl_window = 16;
  auto* cmd_tables = app.add_subcommand( "tables", "Reference tables: binomial sequences, reverse-ANFs, generalized families" );
  cmd_tables->add_option( "--which", tbl_which, "binomial | ranf | gss | shifts" )->required()->check( CLI::IsMember( { "binomial", "ranf", "gss", "shifts" } ) );
  cmd_tables->add_option( "--count", tbl_count, "Number of rows (binomial/ranf)" );
  cmd_tables->add_option( "--window", tbl_window, "Bit window length (binomial)" );
  cmd_tables->add_option( "--poly", tbl_poly, "Primitive polynomial, e.g. \"x^4+x+1\"" );
  cmd_tables->add_option( "--state", tbl_state, "Initial LFSR state bits (default all ones)" );
  cmd_tables->add_option( "--g", tbl_g, "Selector bits, leftmost = g_0 (shifts table)" );
  cmd_tables->add_option( "--format", tbl_format, "text | csv" )->check( CLI::IsMember( { "text", "csv" } ) );
  cmd_tables->callback( [&]() {
    if ( tbl_which == "binomial" )
    {
      print_table( binomial_table( tbl_count, tbl_window ), tbl_format );
    }
    else if ( tbl_which == "ranf" )
    {
      print_table( ranf_table( tbl_count ), tbl_format );
    }
    else
    {
      if ( tbl_poly.empty() )
      {
        throw usage_error( "--poly is required for the gss and shifts tables" );
      }
      const auto poly = char_polynomial::parse( tbl_poly );
      const auto fam = generate_gss_family( poly, state_or_default( tbl_state, poly.degree ) );
      if ( tbl_which == "gss" )
      {
        print_table( gss_table( fam ), tbl_format );
      }
      else
      {
        if ( tbl_g.empty() )
        {
          throw usage_error( "--g is required for the shifts table" );
        }
        print_table( gss_shift_table( fam, parse_selector( tbl_g, poly.degree ) ), tbl_format );
      }
    }
  } );

  // shift
  std::string shift_brep_text;
  std::size_t shift_frame = 0, shift_by = 0;
  auto* cmd_shift = app.add_subcommand( "shift", "Cyclic left shift computed directly on a B-representation" );
  cmd_shift->add_option( "--brep", shift_brep_text, "B-representation, e.g. \"(5)\"" )->required();
  cmd_shift->add_option( "--frame", shift_frame, "Power-of-two frame" )->required();
  cmd_shift->add_option( "--by", shift_by, "Shift amount" )->required();
  cmd_shift->callback( [&]() {
    const binomial_combo b( shift_frame, parse_index_list( shift_brep_text ) );
    std::cout << format_brep( shift_brep( b, shift_by ) ) << '\n';
  } );

  // reverse
  std::string rev_seq_text, rev_brep_text;
  std::size_t rev_frame = 0;
  auto* cmd_reverse = app.add_subcommand( "reverse", "Reverse a sequence, or a B-representation symbolically" );
  auto* rev_seq_opt = cmd_reverse->add_option( "--seq", rev_seq_text, "Bit string to reverse" );
  auto* rev_brep_opt = cmd_reverse->add_option( "--brep", rev_brep_text, "B-representation to reverse" );
  cmd_reverse->add_option( "--frame", rev_frame, "Power-of-two frame (with --brep)" );
  rev_seq_opt->excludes( rev_brep_opt );
  cmd_reverse->callback( [&]() {
    if ( !rev_seq_text.empty() )
    {
      std::cout << reverse_sequence( bit_sequence::parse( rev_seq_text ) ).to_string() << '\n';
    }
    else if ( !rev_brep_text.empty() )
    {
      if ( rev_frame == 0 )
      {
        throw usage_error( "--frame is required with --brep" );
      }
      std::cout << format_brep( reverse_brep( binomial_combo( rev_frame, parse_index_list( rev_brep_text ) ) ) ) << '\n';
    }
    else
    {
      throw usage_error( "reverse needs --seq or --brep" );
    }
  } );

  // sierpinski
  std::uint32_t sier_rows = 8;
  auto* cmd_sier = app.add_subcommand( "sierpinski", "Render triangle rows as '1'/'·' glyphs" );
  cmd_sier->add_option( "--rows", sier_rows, "Number of rows" );
  cmd_sier->callback( [&]() { std::cout << sierpinski_triangle( sier_rows ); } );

  // gss
  std::string gss_poly, gss_state, gss_g, gss_format = "text";
  bool gss_fam = false;
  auto* cmd_gss = app.add_subcommand( "gss", "Generalized self-shrinking sequences" );
  cmd_gss->add_option( "--poly", gss_poly, "Primitive polynomial, e.g. \"x^4+x+1\"" )->required();
  cmd_gss->add_option( "--state", gss_state, "Initial LFSR state bits (default all ones)" );
  cmd_gss->add_option( "--g", gss_g, "Selector bits, leftmost = g_0" );
  cmd_gss->add_flag( "--family", gss_fam, "Print the whole family table" );
  cmd_gss->add_option( "--format", gss_format, "text | csv" )->check( CLI::IsMember( { "text", "csv" } ) );
  cmd_gss->callback( [&]() {
    const auto poly = char_polynomial::parse( gss_poly );
    if ( !is_primitive( poly ) )
    {
      throw usage_error( "--poly must be primitive, " + poly.to_string() + " is not" );
    }
    const auto state = state_or_default( gss_state, poly.degree );
    if ( gss_fam )
    {
      print_table( gss_table( generate_gss_family( poly, state ) ), gss_format );
      return;
    }
    if ( gss_g.empty() )
    {
      throw usage_error( "gss needs --g or --family" );
    }
    const auto selector = parse_selector( gss_g, poly.degree );
    const auto pn = pn_sequence( poly, state, ( std::size_t{ 1 } << poly.degree ) - 1 );
    const auto s = gss_sequence( pn, selector, poly.degree );
    const auto b = brep_from_sequence( s );
    std::cout << "sequence " << s.to_string() << '\n';
    std::cout << "brep     " << format_brep( b ) << '\n';
    std::cout << "ranf     " << format_ranf( ranf_from_brep( b ) ) << '\n';
    if ( !is_generalized_member( selector ) )
    {
      std::cout << "note     the zero selector gives the null sequence, which is not a generalized sequence\n";
    }
  } );

  // verify
  std::string ver_suite, ver_degrees = "3..8";
  verify::verify_options ver_opts;
  auto* cmd_verify = app.add_subcommand( "verify", "Run the property suites and report pass/fail per property" );
  cmd_verify->add_option( "--suite", ver_suite, "core | repr | shift | gss | all" )->required()->check( CLI::IsMember( { "core", "repr", "shift", "gss", "all" } ) );
  cmd_verify->add_option( "--degrees", ver_degrees, "Degree range for gss, e.g. 3..8" );
  cmd_verify->add_option( "--frames", ver_opts.max_frame, "Max frame for randomized shift checks" );
  cmd_verify->add_option( "--seed", ver_opts.seed, "Random seed" );
  cmd_verify->callback( [&]() {
    const auto sep = ver_degrees.find( ".." );
    try
    {
      if ( sep == std::string::npos )
      {
        ver_opts.degree_lo = ver_opts.degree_hi = static_cast<unsigned>( std::stoul( ver_degrees ) );
      }
      else
      {
        ver_opts.degree_lo = static_cast<unsigned>( std::stoul( ver_degrees.substr( 0, sep ) ) );
        ver_opts.degree_hi = static_cast<unsigned>( std::stoul( ver_degrees.substr( sep + 2 ) ) );
      }
    }
    catch ( const std::exception& )
    {
      throw usage_error( "--degrees must look like \"4\" or \"3..8\"" );
    }
    if ( ver_opts.degree_lo < 2 || ver_opts.degree_hi > 12 || ver_opts.degree_lo > ver_opts.degree_hi )
    {
      throw usage_error( "--degrees must lie within 2..12" );
    }
    verification_report report;
    if ( ver_suite == "core" )
    {
      report = verify::run_core_suite( ver_opts );
    }
    else if ( ver_suite == "repr" )
    {
      report = verify::run_repr_suite( ver_opts );
    }
    else if ( ver_suite == "shift" )
    {
      report = verify::run_shift_suite( ver_opts );
    }
    else if ( ver_suite == "gss" )
    {
      report = verify::run_gss_suite( ver_opts );
    }
    else
    {
      report = verify::run_all( ver_opts );
    }
    print_report( std::cout, report );
    const auto failures = std::count_if( report.entries.begin(), report.entries.end(),
                                         []( const auto& e ) { return e.status == verification_entry::kind::fail; } );
    std::cout << ( report.all_passed() ? "all properties passed" : std::to_string( failures ) + " properties FAILED" ) << '\n';
    exit_code = report.all_passed() ? 0 : 1;
  } );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
