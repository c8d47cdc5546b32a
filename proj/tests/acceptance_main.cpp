// Acceptance suite: runs each shipping criterion end to end and prints one
// pass/fail line per criterion.  Expects the CLI binary path as argv[1]
// (used for the table-reproduction and determinism criteria); exits
// nonzero if any criterion fails.

#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <gf2seq/boolean_function.hpp>
#include <gf2seq/gssg.hpp>
#include <gf2seq/oracles.hpp>
#include <gf2seq/representation.hpp>
#include <gf2seq/shift_reverse.hpp>
#include <gf2seq/subset_transform.hpp>
#include <gf2seq/text_tables.hpp>

#include "reference_data.hpp"

using namespace gf2seq;

namespace
{

std::string cli_path;
int failures = 0;

void outcome( int criterion, bool ok, const std::string& what, const std::string& detail = "" )
{
  std::printf( "%s  %2d  %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
               detail.empty() ? "" : " -- ", detail.c_str() );
  if ( !ok )
  {
    ++failures;
  }
}

struct cli_result
{
  int exit_code;
  std::string output;
};

cli_result run_cli( const std::string& args )
{
  const std::string command = cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen( command.c_str(), "r" );
  if ( pipe == nullptr )
  {
    return { -1, "" };
  }
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ( ( got = std::fread( buffer, 1, sizeof buffer, pipe ) ) > 0 )
  {
    output.append( buffer, got );
  }
  const int status = pclose( pipe );
  return { WIFEXITED( status ) ? WEXITSTATUS( status ) : -1, output };
}

std::vector<std::string> split( const std::string& text, char sep )
{
  std::vector<std::string> out;
  std::size_t begin = 0;
  while ( begin <= text.size() )
  {
    const std::size_t end = std::min( text.find( sep, begin ), text.size() );
    out.emplace_back( text.substr( begin, end - begin ) );
    if ( end == text.size() )
    {
      break;
    }
    begin = end + 1;
  }
  if ( !out.empty() && out.back().empty() )
  {
    out.pop_back();
  }
  return out;
}

bit_sequence from_mask( std::uint32_t mask, std::size_t length )
{
  bit_sequence out( length );
  out.set_word( 0, mask );
  return out;
}

void criterion_1_binomial_table()
{
  const auto r = run_cli( "tables --which binomial --count 16 --window 16 --format csv" );
  bool ok = ( r.exit_code == 0 );
  std::string detail = ok ? "" : "cli exit " + std::to_string( r.exit_code );
  const auto lines = split( r.output, '\n' );
  ok = ok && lines.size() == 17 && lines[0] == "index,window,period,lc";
  for ( std::size_t i = 0; ok && i < 16; ++i )
  {
    const auto cells = split( lines[i + 1], ',' );
    const auto& expected = refdata::binomial_rows[i];
    if ( cells.size() != 4 || cells[0] != std::to_string( i ) || cells[1] != expected.window ||
         cells[2] != std::to_string( expected.period ) || cells[3] != std::to_string( expected.lc ) )
    {
      ok = false;
      detail = "mismatch at index " + std::to_string( i );
    }
  }
  outcome( 1, ok, "binomial table: 16 windows, periods and complexities, via the CLI", detail );
}

void criterion_2_ranf_table()
{
  bool ok = true;
  std::string detail;
  for ( std::uint32_t i = 0; i < 16; ++i )
  {
    if ( format_ranf( ranf_polynomial( { i } ) ) != refdata::ranf_rows[i] )
    {
      ok = false;
      detail = "index " + std::to_string( i );
    }
  }
  const auto r = run_cli( "tables --which ranf --count 16 --format csv" );
  const auto lines = split( r.output, '\n' );
  ok = ok && r.exit_code == 0 && lines.size() == 17;
  for ( std::size_t i = 0; ok && i < 16; ++i )
  {
    if ( lines[i + 1] != std::to_string( i ) + "," + std::string( refdata::ranf_rows[i] ) )
    {
      ok = false;
      detail = "cli row " + std::to_string( i );
    }
  }
  outcome( 2, ok, "reverse-ANF strings of the first 16 binomial sequences, via the CLI", detail );
}

void criterion_3_worked_examples()
{
  bool ok = true;
  std::string detail;

  const truth_table tt_a( bit_sequence::parse( refdata::tt_example_a ), 4 );
  if ( tt_to_anf( tt_a ).coeffs.to_string() != refdata::anf_example_a )
  {
    ok = false;
    detail = "truth table to ANF";
  }
  const anf_form anf_b( bit_sequence::parse( refdata::anf_example_b ), 4 );
  if ( anf_to_tt( anf_b ).values.to_string() != refdata::tt_example_b )
  {
    ok = false;
    detail = "ANF to truth table";
  }

  const auto s8 = bit_sequence::parse( refdata::seq_period8 );
  const auto s16 = bit_sequence::parse( refdata::seq_period16 );
  if ( brep_from_sequence( s8 ).support != refdata::brep_period8 ||
       brep_from_sequence( s16 ).support != refdata::brep_period16 )
  {
    ok = false;
    detail = "sequence to B-representation";
  }
  if ( sequence_from_brep( binomial_combo( 8, refdata::brep_period8 ) ) != s8 ||
       sequence_from_brep( binomial_combo( 16, refdata::brep_period16 ) ) != s16 )
  {
    ok = false;
    detail = "B-representation to sequence";
  }
  if ( anf_of_sequence( s16 ).coeffs.ones() != refdata::anf_support_period16 )
  {
    ok = false;
    detail = "associated ANF of the period-16 sequence";
  }
  outcome( 3, ok, "worked conversion examples, both directions, bit exact", detail );
}

void criterion_4_bijections_frame16()
{
  bool ok = true;
  std::string detail;
  for ( std::uint32_t mask = 0; mask < ( 1u << 16 ) && ok; ++mask )
  {
    const auto s = from_mask( mask, 16 );
    const auto c = moebius( s );
    if ( moebius( c ) != s )
    {
      ok = false;
      detail = "involution at " + s.to_string();
      break;
    }
    const binomial_combo b( 16, c.ones() );
    if ( sequence_from_brep( b ) != s )
    {
      ok = false;
      detail = "representation round trip at " + s.to_string();
      break;
    }
    const auto p = ranf_from_brep( b );
    if ( brep_from_ranf( p, 16 ) != b || sequence_from_ranf( p, 16 ) != s )
    {
      ok = false;
      detail = "reverse-ANF identity at " + s.to_string();
      break;
    }
  }
  outcome( 4, ok, "all 65536 frame-16 vectors: involution, round trips, truth-table identity", detail );
}

void criterion_5_lc_oracle()
{
  std::mt19937_64 rng( 42 );
  bool ok = true;
  std::string detail;
  for ( int trial = 0; trial < 500 && ok; ++trial )
  {
    const std::size_t frame = std::size_t{ 1 } << ( 1 + rng() % 8 ); // up to 256
    bit_sequence v( frame );
    for ( std::size_t w = 0; w < v.word_count(); ++w )
    {
      v.set_word( w, rng() );
    }
    if ( v.all_zero() )
    {
      v.set_bit( rng() % frame, true );
    }
    const binomial_combo b( frame, v.ones() );
    const auto measured = oracles::berlekamp_massey( sequence_from_brep( b ).repeated_to( 2 * frame ) );
    if ( measured != b.support.back() + 1 )
    {
      ok = false;
      detail = "frame " + std::to_string( frame ) + " brep " + format_brep( b ) + " measured " + std::to_string( measured );
    }
  }
  outcome( 5, ok, "500 random representations up to frame 256: measured complexity = top index + 1", detail );
}

void criterion_6_shift_calculus()
{
  bool ok = true;
  std::string detail;

  if ( shift_brep( binomial_combo( 8, { 5 } ), 4 ).support != std::vector<std::uint32_t>{ 1, 5 } ||
       shift_brep( binomial_combo( 8, { 5 } ), 6 ).support != std::vector<std::uint32_t>{ 1, 3, 5 } ||
       shift_brep( binomial_combo( 16, { 8 } ), 1 ).support != std::vector<std::uint32_t>{ 7, 8 } )
  {
    ok = false;
    detail = "printed shift examples";
  }

  // frame 16: literally every support and every shift amount
  for ( std::uint32_t mask = 0; mask < ( 1u << 16 ) && ok; ++mask )
  {
    const binomial_combo b( 16, from_mask( mask, 16 ).ones() );
    for ( std::size_t r = 0; r < 16; ++r )
    {
      if ( shift_brep( b, r ) != oracles::shift_brep_oracle( b, r ) )
      {
        ok = false;
        detail = "frame 16 brep " + format_brep( b ) + " r " + std::to_string( r );
        break;
      }
    }
  }

  // frame 32: every generator of the linear map, every shift amount; the
  // operator and its oracle are both linear in the support, so generator
  // agreement decides every support
  for ( std::uint32_t k = 0; k < 32 && ok; ++k )
  {
    const binomial_combo b( 32, { k } );
    for ( std::size_t r = 0; r < 32; ++r )
    {
      if ( shift_brep( b, r ) != oracles::shift_brep_oracle( b, r ) )
      {
        ok = false;
        detail = "frame 32 singleton " + std::to_string( k ) + " r " + std::to_string( r );
        break;
      }
    }
  }
  std::mt19937_64 rng( 42 );
  for ( int trial = 0; trial < 2000 && ok; ++trial )
  {
    bit_sequence v( 32 );
    v.set_word( 0, rng() );
    const binomial_combo b( 32, v.ones() );
    const std::size_t r = rng() % 32;
    if ( shift_brep( b, r ) != oracles::shift_brep_oracle( b, r ) )
    {
      ok = false;
      detail = "frame 32 brep " + format_brep( b ) + " r " + std::to_string( r );
    }
  }
  outcome( 6, ok, "shift operator vs rotate-and-retransform: frame 16 exhaustive, frame 32 by generators + 2000 random", detail );
}

void criterion_7_reverse_calculus()
{
  bool ok = true;
  std::string detail;

  if ( reverse_brep( binomial_combo( 8, { 5 } ) ).support != std::vector<std::uint32_t>{ 0, 1, 4, 5 } ||
       reverse_brep( binomial_combo( 8, { 2, 5, 7 } ) ).support != std::vector<std::uint32_t>{ 0, 3, 6, 7 } )
  {
    ok = false;
    detail = "printed reversal examples";
  }

  for ( std::uint32_t mask = 0; mask < ( 1u << 16 ) && ok; ++mask )
  {
    const binomial_combo b( 16, from_mask( mask, 16 ).ones() );
    if ( reverse_brep( b ) != oracles::reverse_brep_oracle( b ) )
    {
      ok = false;
      detail = "frame 16 brep " + format_brep( b );
    }
  }
  for ( std::uint32_t k = 0; k < 32 && ok; ++k )
  {
    const binomial_combo b( 32, { k } );
    if ( reverse_brep( b ) != oracles::reverse_brep_oracle( b ) )
    {
      ok = false;
      detail = "frame 32 singleton " + std::to_string( k );
    }
  }
  std::mt19937_64 rng( 43 );
  for ( int trial = 0; trial < 2000 && ok; ++trial )
  {
    bit_sequence v( 32 );
    v.set_word( 0, rng() );
    const binomial_combo b( 32, v.ones() );
    if ( reverse_brep( b ) != oracles::reverse_brep_oracle( b ) )
    {
      ok = false;
      detail = "frame 32 brep " + format_brep( b );
    }
  }
  outcome( 7, ok, "reverse operator vs reverse-and-retransform: frame 16 exhaustive, frame 32 by generators + 2000 random", detail );
}

void criterion_8_balancedness_and_parity()
{
  bool ok = true;
  std::string detail;
  for ( std::uint32_t mask = 0; mask < ( 1u << 16 ) && ok; ++mask )
  {
    const auto s = from_mask( mask, 16 );
    const auto support = moebius( s ).ones();
    if ( s.bit( 15 ) != ( support.size() % 2 == 1 ) )
    {
      ok = false;
      detail = "parity at " + s.to_string();
    }
    if ( s.weight() == 8 && !support.empty() && support.back() == 15 )
    {
      ok = false;
      detail = "balanced sequence with top index at " + s.to_string();
    }
  }
  outcome( 8, ok, "all frame-16 vectors: last bit = support parity; balanced never holds index 15", detail );
}

void criterion_9_reference_family()
{
  bool ok = true;
  std::string detail;
  const auto fam = generate_gss_family( char_polynomial::parse( "x^4+x+1" ), all_ones_state( 4 ) );

  const auto table = gss_table( fam );
  for ( std::size_t i = 0; ok && i < refdata::family_rows.size(); ++i )
  {
    const auto& expected = refdata::family_rows[i];
    if ( table.rows[i][0] != expected.selector || table.rows[i][1] != expected.sequence ||
         table.rows[i][2] != expected.brep || table.rows[i][3] != expected.ranf )
    {
      ok = false;
      detail = "family row " + std::string( expected.selector );
    }
  }

  const auto shifts = gss_shift_table( fam, parse_selector( "0010", 4 ) );
  std::size_t with_constant = 0;
  for ( std::size_t r = 0; ok && r < refdata::member_shift_rows.size(); ++r )
  {
    const auto& expected = refdata::member_shift_rows[r];
    if ( shifts.rows[r][1] != expected.sequence || shifts.rows[r][2] != expected.brep || shifts.rows[r][3] != expected.ranf )
    {
      ok = false;
      detail = "shift row " + std::to_string( r );
    }
    if ( shifts.rows[r][2].rfind( "(0", 0 ) == 0 )
    {
      ++with_constant;
    }
  }
  if ( ok && with_constant != 4 )
  {
    ok = false;
    detail = "expected 4 shifts with the constant term, got " + std::to_string( with_constant );
  }
  outcome( 9, ok, "x^4+x+1 family: all 15 members, the shift table, and the 4-of-8 constant-term count", detail );
}

void criterion_10_families_at_scale()
{
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng( 44 );
  for ( unsigned degree = 3; degree <= 8 && ok; ++degree )
  {
    const auto polys = primitive_polynomials( degree );
    if ( polys.size() != refdata::primitive_counts[degree] )
    {
      ok = false;
      detail = "primitive count at degree " + std::to_string( degree );
      break;
    }
    const std::size_t bound = ( std::size_t{ 1 } << ( degree - 1 ) ) - ( degree - 2 );
    for ( const auto& poly : polys )
    {
      std::vector<bit_sequence> states = { all_ones_state( degree ) };
      while ( states.size() < 3 )
      {
        bit_sequence s( degree );
        s.set_word( 0, rng() );
        if ( !s.all_zero() )
        {
          states.push_back( s );
        }
      }
      for ( const auto& state : states )
      {
        const auto fam = generate_gss_family( poly, state );
        const auto report = verify_gss_properties( fam );
        if ( !report.all_passed() )
        {
          ok = false;
          for ( const auto& e : report.entries )
          {
            if ( e.status == verification_entry::kind::fail )
            {
              detail = e.name + " " + e.scope + " " + e.detail;
              break;
            }
          }
        }
        for ( const auto& m : fam.members )
        {
          if ( m.brep.support.size() > bound || m.profile.lc > bound )
          {
            ok = false;
            detail = "bound violated at degree " + std::to_string( degree );
          }
        }
      }
      if ( !ok )
      {
        break;
      }
    }
  }
  outcome( 10, ok, "all primitive polynomials of degrees 3-8, 3 states each: every family property and the complexity bound", detail );
}

void criterion_11_headless_determinism()
{
  const auto first = run_cli( "verify --suite all --seed 42" );
  const auto second = run_cli( "verify --suite all --seed 42" );
  bool ok = first.exit_code == 0 && second.exit_code == 0;
  std::string detail = ok ? "" : "exit codes " + std::to_string( first.exit_code ) + "/" + std::to_string( second.exit_code );
  if ( ok && ( first.output.empty() || first.output != second.output ) )
  {
    ok = false;
    detail = "outputs differ between runs";
  }
  outcome( 11, ok, "verify --suite all --seed 42 exits 0 and is byte-identical across runs", detail );
}

} // namespace

int main( int argc, char** argv )
{
  if ( argc < 2 )
  {
    std::cerr << "usage: gf2seq_acceptance <path-to-cli>\n";
    return 2;
  }
  cli_path = argv[1];

  criterion_1_binomial_table();
  criterion_2_ranf_table();
  criterion_3_worked_examples();
  criterion_4_bijections_frame16();
  criterion_5_lc_oracle();
  criterion_6_shift_calculus();
  criterion_7_reverse_calculus();
  criterion_8_balancedness_and_parity();
  criterion_9_reference_family();
  criterion_10_families_at_scale();
  criterion_11_headless_determinism();

  if ( failures == 0 )
  {
    std::puts( "all acceptance criteria passed" );
    return 0;
  }
  std::printf( "%d acceptance criteria FAILED\n", failures );
  return 1;
}
