/*!
  \file representation.hpp
  \brief Binomial representation and reverse-ANF of a sequence, the
         bijection between them, and derived sequence properties.

  A sequence of period 2^t is the XOR of a unique set of binomial sequences;
  the set of their indices is the binomial representation (B-representation).
  Reading each index i as the monomial made of x_{j+1} for every set bit j
  of i turns the same index set into a polynomial, the reverse-ANF.  Unlike
  the plain ANF convention, this monomial rule does not depend on a declared
  variable count, so the polynomial names the sequence uniquely across
  frame sizes.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "binomial.hpp"
#include "bit_sequence.hpp"
#include "boolean_function.hpp"
#include "subset_transform.hpp"

namespace gf2seq
{

/*! \brief Support of a B-representation inside a power-of-two frame. */
struct binomial_combo
{
  std::size_t frame = 1;
  std::vector<std::uint32_t> support; // strictly increasing, all < frame

  binomial_combo() = default;

  binomial_combo( std::size_t frame_length, std::vector<std::uint32_t> indices )
      : frame( frame_length ), support( std::move( indices ) )
  {
    if ( frame == 0 || !std::has_single_bit( frame ) )
    {
      throw std::domain_error( "frame must be a power of two, got " + std::to_string( frame ) );
    }
    std::sort( support.begin(), support.end() );
    if ( std::adjacent_find( support.begin(), support.end() ) != support.end() )
    {
      throw std::invalid_argument( "duplicate index in binomial representation" );
    }
    if ( !support.empty() && support.back() >= frame )
    {
      throw std::out_of_range( "index " + std::to_string( support.back() ) + " does not fit in frame " + std::to_string( frame ) );
    }
  }

  friend bool operator==( const binomial_combo&, const binomial_combo& ) = default;
};

/*! \brief Reverse-ANF: a set of monomials, each named by an integer index.

  Index i is the product of x_{j+1} over the set bits j of i; index 0 is the
  constant 1.  No variable count is carried: the monomial a given index
  denotes never changes.
*/
struct ranf_polynomial
{
  std::vector<std::uint32_t> monomials; // strictly increasing

  ranf_polynomial() = default;

  explicit ranf_polynomial( std::vector<std::uint32_t> indices ) : monomials( std::move( indices ) )
  {
    std::sort( monomials.begin(), monomials.end() );
    if ( std::adjacent_find( monomials.begin(), monomials.end() ) != monomials.end() )
    {
      throw std::invalid_argument( "duplicate monomial in reverse-ANF" );
    }
  }

  friend bool operator==( const ranf_polynomial&, const ranf_polynomial& ) = default;
};

struct sequence_profile
{
  std::size_t lc;
  std::size_t period;
  bool balanced;
  bool max_anf_degree;
  bool last_coeff_present;
};

/*! \brief B-representation of one period of a sequence.

  The coefficient vector is the subset transform of the sequence; the
  support of that vector is the representation.
*/
inline binomial_combo brep_from_sequence( const bit_sequence& s )
{
  if ( s.empty() || !std::has_single_bit( s.size() ) )
  {
    throw std::domain_error( "B-representation needs a power-of-two window of the periodic sequence, got length " + std::to_string( s.size() ) );
  }
  return binomial_combo( s.size(), moebius( s ).ones() );
}

/*! \brief First frame terms of the combination: XOR of the selected
           binomial sequences.  Inverse of brep_from_sequence. */
inline bit_sequence sequence_from_brep( const binomial_combo& b )
{
  bit_sequence out( b.frame );
  for ( auto i : b.support )
  {
    out ^= binomial_sequence( i, b.frame ).bits;
  }
  return out;
}

/*! \brief Reads a B-representation as a reverse-ANF (same index set). */
inline ranf_polynomial ranf_from_brep( const binomial_combo& b )
{
  return ranf_polynomial( b.support );
}

/*! \brief Reads a reverse-ANF as a B-representation in the given frame. */
inline binomial_combo brep_from_ranf( const ranf_polynomial& p, std::size_t frame )
{
  if ( !p.monomials.empty() && ( frame == 0 || p.monomials.back() >= frame ) )
  {
    throw std::out_of_range( "monomial index " + std::to_string( p.monomials.back() ) + " needs a frame larger than " + std::to_string( frame ) );
  }
  return binomial_combo( frame, p.monomials );
}

/*! \brief Truth table of a reverse-ANF, evaluated with x_1 as the least
           significant counter bit.

  Position t is the XOR over the monomial indices i with (i AND t) == i.
  The result equals sequence_from_brep applied to the same index set: the
  truth table of the reverse-ANF is the represented sequence itself.
*/
inline bit_sequence sequence_from_ranf( const ranf_polynomial& p, std::size_t frame )
{
  if ( frame == 0 || !std::has_single_bit( frame ) )
  {
    throw std::domain_error( "frame must be a power of two, got " + std::to_string( frame ) );
  }
  if ( !p.monomials.empty() && p.monomials.back() >= frame )
  {
    throw std::out_of_range( "monomial index " + std::to_string( p.monomials.back() ) + " needs a frame larger than " + std::to_string( frame ) );
  }
  bit_sequence out( frame );
  for ( std::size_t t = 0; t < frame; ++t )
  {
    bool value = false;
    for ( auto i : p.monomials )
    {
      value ^= ( ( i & t ) == i );
    }
    out.set_bit( t, value );
  }
  return out;
}

/*! \brief The Boolean function associated with a sequence: the sequence is
           its ANF coefficient vector over t = log2(length) variables.

  The truth table of the result is the subset transform of the sequence,
  whose one-positions are exactly the B-representation support.
*/
inline anf_form anf_of_sequence( const bit_sequence& s )
{
  if ( s.empty() || !std::has_single_bit( s.size() ) )
  {
    throw std::domain_error( "associated ANF needs a power-of-two window, got length " + std::to_string( s.size() ) );
  }
  return anf_form( s, static_cast<unsigned>( std::countr_zero( s.size() ) ) );
}

/*! \brief Period, linear complexity and degree facts read off a
           B-representation.

  The largest index i_k determines everything but balancedness: the linear
  complexity is i_k + 1, the period is the period of the i_k-th binomial
  sequence, the associated ANF has maximum degree exactly when the support
  size is odd, and the reverse-ANF has maximum degree exactly when index
  frame - 1 is present.  The empty support describes the zero sequence
  (lc 0, period 1).
*/
inline sequence_profile profile( const binomial_combo& b )
{
  sequence_profile out{};
  if ( b.support.empty() )
  {
    out.lc = 0;
    out.period = 1;
  }
  else
  {
    const auto meta = binomial_meta( b.support.back() );
    out.lc = meta.linear_complexity;
    out.period = meta.period;
  }
  out.max_anf_degree = b.support.size() % 2 == 1;
  out.last_coeff_present = !b.support.empty() && b.support.back() == b.frame - 1;
  out.balanced = seq_stats( sequence_from_brep( b ) ).balanced;
  return out;
}

inline sequence_profile profile( const bit_sequence& s )
{
  auto out = profile( brep_from_sequence( s ) );
  out.balanced = seq_stats( s ).balanced;
  return out;
}

/*! \brief Parses "(3,4,6)", "{3,4,6}" or "3,4,6" into a sorted index set. */
inline std::vector<std::uint32_t> parse_index_list( std::string_view text )
{
  std::string stripped;
  for ( char c : text )
  {
    if ( c != ' ' && c != '\t' && c != '\n' && c != '\r' )
    {
      stripped.push_back( c );
    }
  }
  if ( !stripped.empty() && ( stripped.front() == '(' || stripped.front() == '{' ) )
  {
    const char close = stripped.front() == '(' ? ')' : '}';
    if ( stripped.back() != close )
    {
      throw parse_error( "unbalanced brackets in index list '" + std::string( text ) + "'" );
    }
    stripped = stripped.substr( 1, stripped.size() - 2 );
  }
  std::vector<std::uint32_t> out;
  if ( stripped.empty() )
  {
    return out;
  }
  std::size_t begin = 0;
  while ( begin <= stripped.size() )
  {
    const std::size_t end = std::min( stripped.find( ',', begin ), stripped.size() );
    const std::string_view item( stripped.data() + begin, end - begin );
    if ( item.empty() )
    {
      throw parse_error( "empty entry in index list '" + std::string( text ) + "'" );
    }
    std::uint64_t value = 0;
    for ( char c : item )
    {
      if ( c < '0' || c > '9' )
      {
        throw parse_error( "invalid index '" + std::string( item ) + "' in list" );
      }
      value = value * 10 + static_cast<std::uint64_t>( c - '0' );
      if ( value > 0xffffffffull )
      {
        throw parse_error( "index '" + std::string( item ) + "' out of range" );
      }
    }
    out.push_back( static_cast<std::uint32_t>( value ) );
    if ( end == stripped.size() )
    {
      break;
    }
    begin = end + 1;
  }
  std::sort( out.begin(), out.end() );
  if ( std::adjacent_find( out.begin(), out.end() ) != out.end() )
  {
    throw parse_error( "duplicate index in list '" + std::string( text ) + "'" );
  }
  return out;
}

/*! \brief Canonical B-representation text: "(i1,i2,...,ik)". */
inline std::string format_brep( const binomial_combo& b )
{
  std::string out = "(";
  for ( std::size_t i = 0; i < b.support.size(); ++i )
  {
    if ( i > 0 )
    {
      out += ",";
    }
    out += std::to_string( b.support[i] );
  }
  out += ")";
  return out;
}

/*! \brief Canonical minterm-set text: "{i1,i2,...,ik}". */
inline std::string format_minterms( const minterm_set& m )
{
  std::string out = "{";
  for ( std::size_t i = 0; i < m.size(); ++i )
  {
    if ( i > 0 )
    {
      out += ",";
    }
    out += std::to_string( m[i] );
  }
  out += "}";
  return out;
}

/*! \brief Canonical reverse-ANF text.

  Terms appear by ascending index; within a monomial the variables are
  written by descending subscript, joined with '*': index 5 prints as
  "x3*x1".  The zero polynomial prints "0".
*/
inline std::string format_ranf( const ranf_polynomial& p )
{
  std::string out;
  for ( auto i : p.monomials )
  {
    if ( !out.empty() )
    {
      out += " + ";
    }
    if ( i == 0 )
    {
      out += "1";
      continue;
    }
    bool first = true;
    for ( int j = 31; j >= 0; --j )
    {
      if ( i & ( std::uint32_t{ 1 } << j ) )
      {
        if ( !first )
        {
          out += "*";
        }
        out += "x" + std::to_string( j + 1 );
        first = false;
      }
    }
  }
  return out.empty() ? "0" : out;
}

/*! \brief Parses reverse-ANF text; the monomial for subscripts {k} has the
           bit k-1 set in its index. */
inline ranf_polynomial parse_ranf( std::string_view text )
{
  const auto terms = detail::parse_poly_terms( text );
  std::vector<std::uint32_t> indices;
  for ( const auto& term : terms )
  {
    std::uint32_t index = 0;
    for ( auto k : term )
    {
      index |= std::uint32_t{ 1 } << ( k - 1 );
    }
    const auto it = std::find( indices.begin(), indices.end(), index );
    if ( it != indices.end() )
    {
      indices.erase( it ); // repeated terms cancel over GF(2)
    }
    else
    {
      indices.push_back( index );
    }
  }
  return ranf_polynomial( std::move( indices ) );
}

} // namespace gf2seq
