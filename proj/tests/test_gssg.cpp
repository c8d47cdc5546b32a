#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <string>

#include <gf2seq/gssg.hpp>
#include <gf2seq/text_tables.hpp>

#include "reference_data.hpp"

using namespace gf2seq;

namespace
{

gss_family reference_family()
{
  return generate_gss_family( char_polynomial::parse( "x^4+x+1" ), all_ones_state( 4 ) );
}

} // namespace

TEST_CASE( "selector text" )
{
  REQUIRE( parse_selector( "0010", 4 ) == 0b0100 ); // third char is g_2
  REQUIRE( parse_selector( "1000", 4 ) == 0b0001 );
  REQUIRE( selector_to_string( 0b0100, 4 ) == "0010" );
  REQUIRE_THROWS_AS( parse_selector( "001", 4 ), parse_error );
  REQUIRE_THROWS_AS( parse_selector( "0x10", 4 ), parse_error );
}

TEST_CASE( "decimated selector combinations" )
{
  const auto p = char_polynomial::parse( "x^4+x+1" );
  const auto u = pn_sequence( p, all_ones_state( 4 ), 15 );

  REQUIRE( gss_sequence( u, parse_selector( "0001", 4 ), 4 ).to_string() == "01010101" );
  REQUIRE( gss_sequence( u, parse_selector( "1000", 4 ), 4 ).to_string() == "11111111" );
  REQUIRE( gss_sequence( u, parse_selector( "0110", 4 ), 4 ).to_string() == "11000011" );
  REQUIRE( brep_from_sequence( gss_sequence( u, parse_selector( "0110", 4 ), 4 ) ).support == std::vector<std::uint32_t>{ 0, 2, 4 } );

  SECTION( "zero selector gives the null sequence" )
  {
    REQUIRE( gss_sequence( u, 0, 4 ).all_zero() );
    REQUIRE_FALSE( is_generalized_member( 0 ) );
    REQUIRE( is_generalized_member( 1 ) );
  }
  SECTION( "input length must be one full period" )
  {
    REQUIRE_THROWS_AS( gss_sequence( pn_sequence( p, all_ones_state( 4 ), 14 ), 1, 4 ), std::invalid_argument );
  }
}

TEST_CASE( "reference family rows" )
{
  const auto fam = reference_family();
  REQUIRE( fam.members.size() == 15 );

  const auto table = gss_table( fam );
  REQUIRE( table.rows.size() == refdata::family_rows.size() );
  for ( std::size_t i = 0; i < table.rows.size(); ++i )
  {
    INFO( "row " << i );
    REQUIRE( table.rows[i][0] == refdata::family_rows[i].selector );
    REQUIRE( table.rows[i][1] == refdata::family_rows[i].sequence );
    REQUIRE( table.rows[i][2] == refdata::family_rows[i].brep );
    REQUIRE( table.rows[i][3] == refdata::family_rows[i].ranf );
  }
}

TEST_CASE( "family members add like their selectors" )
{
  const auto fam = reference_family();
  const auto lookup = [&]( const char* text ) { return fam.member( parse_selector( text, 4 ) ).sequence; };
  REQUIRE( ( lookup( "0110" ) ^ lookup( "0111" ) ) == lookup( "0001" ) );
  REQUIRE( ( lookup( "1000" ) ^ lookup( "0001" ) ) == lookup( "1001" ) );
}

TEST_CASE( "shift table of one member" )
{
  const auto fam = reference_family();
  const auto table = gss_shift_table( fam, parse_selector( "0010", 4 ) );
  REQUIRE( table.rows.size() == 8 );
  std::size_t with_constant = 0;
  for ( std::size_t r = 0; r < 8; ++r )
  {
    INFO( "shift " << r );
    REQUIRE( table.rows[r][1] == refdata::member_shift_rows[r].sequence );
    REQUIRE( table.rows[r][2] == refdata::member_shift_rows[r].brep );
    REQUIRE( table.rows[r][3] == refdata::member_shift_rows[r].ranf );
    if ( table.rows[r][2].rfind( "(0", 0 ) == 0 )
    {
      ++with_constant;
    }
  }
  // half of the shifts carry the constant term
  REQUIRE( with_constant == 4 );
}

TEST_CASE( "family property report" )
{
  const auto report = verify_gss_properties( reference_family() );
  for ( const auto& e : report.entries )
  {
    INFO( e.name << " " << e.detail );
    REQUIRE( e.status != verification_entry::kind::fail );
  }

  SECTION( "linear complexities read off the representations are 5 and 6" )
  {
    std::set<std::size_t> lcs;
    for ( const auto& m : reference_family().members )
    {
      if ( m.sequence.min_period() > 2 )
      {
        lcs.insert( m.profile.lc );
      }
    }
    REQUIRE( lcs == std::set<std::size_t>{ 5, 6 } );
  }
}

TEST_CASE( "every degree-5 family passes the property report" )
{
  for ( const auto& poly : primitive_polynomials( 5 ) )
  {
    const auto report = verify_gss_properties( generate_gss_family( poly, all_ones_state( 5 ) ) );
    for ( const auto& e : report.entries )
    {
      INFO( poly.to_string() << ": " << e.name << " " << e.detail );
      REQUIRE( e.status != verification_entry::kind::fail );
    }
  }
}

TEST_CASE( "family generation rejects non-primitive polynomials" )
{
  REQUIRE_THROWS_AS( generate_gss_family( char_polynomial::parse( "x^4+x^2+1" ), all_ones_state( 4 ) ), std::invalid_argument );
}

TEST_CASE( "the table convention is the unique one, and is pinned on disk" )
{
  // Search every PN phase and both selector bit orders for an assignment
  // that reproduces all reference rows, then compare against the pinned
  // convention file.
  const auto p = char_polynomial::parse( "x^4+x+1" );
  const auto u = pn_sequence( p, all_ones_state( 4 ), 15 );

  std::set<std::pair<int, bool>> consistent; // (phase, g0 leftmost?)
  for ( int phase = 0; phase < 15; ++phase )
  {
    const auto shifted = u.rotated_left( phase );
    for ( bool g0_leftmost : { true, false } )
    {
      bool all = true;
      for ( const auto& row : refdata::family_rows )
      {
        std::uint32_t selector = 0;
        for ( unsigned j = 0; j < 4; ++j )
        {
          if ( row.selector[j] == '1' )
          {
            selector |= 1u << ( g0_leftmost ? j : 3 - j );
          }
        }
        if ( gss_sequence( shifted, selector, 4 ).to_string() != row.sequence )
        {
          all = false;
          break;
        }
      }
      if ( all )
      {
        consistent.insert( { phase, g0_leftmost } );
      }
    }
  }
  // the pinned convention works and no reversed-selector assignment does
  REQUIRE( consistent.contains( { 0, true } ) );
  for ( const auto& [phase, g0_leftmost] : consistent )
  {
    REQUIRE( g0_leftmost );
    // other consistent phases only rotate zero bits of the PN period across
    // the boundary, which leaves every decimated output unchanged
    for ( int b = 0; b < ( 15 - phase ) % 15; ++b )
    {
      REQUIRE_FALSE( u.bit( 14 - b ) );
    }
  }

  std::ifstream fixture( std::string( GF2SEQ_TEST_DATA_DIR ) + "/gss_reference_convention.txt" );
  REQUIRE( fixture.good() );
  std::set<std::string> lines;
  std::string line;
  while ( std::getline( fixture, line ) )
  {
    if ( !line.empty() && line[0] != '#' )
    {
      lines.insert( line );
    }
  }
  REQUIRE( lines == std::set<std::string>{ "state=all_ones", "pn_phase=0", "selector_order=g0_leftmost" } );
}
