/*!
  \file boolean_function.hpp
  \brief Boolean-function representations: truth table, algebraic normal
         form, minterm support, and their textual encoding.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bit_sequence.hpp"
#include "subset_transform.hpp"

namespace gf2seq
{

namespace detail
{

//! upper bound on variable subscripts accepted in polynomial text
inline constexpr unsigned max_var_subscript = 30;

/*! \brief Splits polynomial text into terms of variable subscripts.

  Grammar: terms separated by '+'; a term is "1" or a product of tokens
  x<k> joined by '*' (juxtaposition such as "x2x1" is also accepted).  The
  lone text "0" denotes the zero polynomial and yields no terms.  A term is
  returned as the list of its subscripts in input order; the constant term
  is an empty list.
*/
inline std::vector<std::vector<unsigned>> parse_poly_terms( std::string_view text )
{
  const auto is_space = []( char c ) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };

  std::string stripped;
  stripped.reserve( text.size() );
  for ( char c : text )
  {
    if ( !is_space( c ) )
    {
      stripped.push_back( c );
    }
  }
  if ( stripped.empty() )
  {
    throw parse_error( "empty polynomial" );
  }
  if ( stripped == "0" )
  {
    return {};
  }

  std::vector<std::vector<unsigned>> terms;
  std::size_t begin = 0;
  while ( begin <= stripped.size() )
  {
    const std::size_t end = std::min( stripped.find( '+', begin ), stripped.size() );
    const std::string_view term( stripped.data() + begin, end - begin );
    if ( term.empty() )
    {
      throw parse_error( "empty term in polynomial" );
    }
    if ( term == "1" )
    {
      terms.emplace_back();
    }
    else
    {
      std::vector<unsigned> subscripts;
      std::size_t i = 0;
      while ( i < term.size() )
      {
        if ( term[i] != 'x' )
        {
          throw parse_error( "expected variable token in term '" + std::string( term ) + "'" );
        }
        ++i;
        std::size_t digits = 0;
        unsigned value = 0;
        while ( i + digits < term.size() && term[i + digits] >= '0' && term[i + digits] <= '9' )
        {
          value = value * 10 + static_cast<unsigned>( term[i + digits] - '0' );
          ++digits;
          if ( value > max_var_subscript )
          {
            throw parse_error( "variable subscript too large in term '" + std::string( term ) + "'" );
          }
        }
        if ( digits == 0 )
        {
          throw parse_error( "variable token without subscript in term '" + std::string( term ) + "'" );
        }
        if ( value == 0 )
        {
          throw parse_error( "variable subscripts start at 1, got x0" );
        }
        if ( std::find( subscripts.begin(), subscripts.end(), value ) != subscripts.end() )
        {
          throw parse_error( "duplicate variable x" + std::to_string( value ) + " in term '" + std::string( term ) + "'" );
        }
        subscripts.push_back( value );
        i += digits;
        if ( i < term.size() && term[i] == '*' )
        {
          ++i;
          if ( i == term.size() )
          {
            throw parse_error( "dangling '*' in term '" + std::string( term ) + "'" );
          }
        }
      }
      terms.push_back( std::move( subscripts ) );
    }
    if ( end == stripped.size() )
    {
      break;
    }
    begin = end + 1;
  }
  return terms;
}

} // namespace detail

/*! \brief Truth table of a Boolean function of `vars` inputs.

  Entry i is the function value on the input point whose binary expansion
  is i; the vector length is 2^vars.
*/
struct truth_table
{
  coeff_vector values;
  unsigned vars;

  truth_table( coeff_vector v, unsigned n ) : values( std::move( v ) ), vars( n )
  {
    if ( values.size() != ( std::size_t{ 1 } << n ) )
    {
      throw std::invalid_argument( "truth table of " + std::to_string( n ) + " variables needs 2^n entries, got " + std::to_string( values.size() ) );
    }
  }

  friend bool operator==( const truth_table&, const truth_table& ) = default;
};

/*! \brief Algebraic normal form of a Boolean function of `vars` inputs.

  Coefficient index i stands for the monomial containing x_k exactly when
  digit u_k of the vars-digit binary expansion of i is 1, with u_1 the most
  significant digit.  The same index therefore names different monomials
  for different variable counts, which is why `vars` is part of the value.
*/
struct anf_form
{
  coeff_vector coeffs;
  unsigned vars;

  anf_form( coeff_vector m, unsigned n ) : coeffs( std::move( m ) ), vars( n )
  {
    if ( coeffs.size() != ( std::size_t{ 1 } << n ) )
    {
      throw std::invalid_argument( "ANF over " + std::to_string( n ) + " variables needs 2^n coefficients, got " + std::to_string( coeffs.size() ) );
    }
  }

  friend bool operator==( const anf_form&, const anf_form& ) = default;
};

using minterm_set = std::vector<std::uint32_t>;

/*! \brief Truth table from ANF coefficients (subset transform). */
inline truth_table anf_to_tt( const anf_form& a )
{
  return truth_table( moebius( a.coeffs ), a.vars );
}

/*! \brief ANF coefficients from a truth table; inverse of anf_to_tt. */
inline anf_form tt_to_anf( const truth_table& t )
{
  return anf_form( moebius( t.values ), t.vars );
}

/*! \brief Indices of the input points mapped to 1, ascending. */
inline minterm_set minterm_support( const truth_table& t )
{
  return t.values.ones();
}

/*! \brief Largest monomial degree present in an ANF (0 for the zero function). */
inline unsigned anf_degree( const anf_form& a )
{
  unsigned degree = 0;
  for ( auto i : a.coeffs.ones() )
  {
    degree = std::max( degree, static_cast<unsigned>( std::popcount( i ) ) );
  }
  return degree;
}

/*! \brief Parses ANF text such as "x3*x4 + x2" or "1" or "0".

  When `vars` is omitted it is inferred as the largest subscript present.
  Repeated identical terms cancel, as GF(2) addition dictates.
*/
inline anf_form parse_anf( std::string_view text, std::optional<unsigned> vars = std::nullopt )
{
  const auto terms = detail::parse_poly_terms( text );

  unsigned n = vars.value_or( 0 );
  if ( !vars )
  {
    for ( const auto& term : terms )
    {
      for ( auto k : term )
      {
        n = std::max( n, k );
      }
    }
  }
  if ( n > detail::max_var_subscript )
  {
    throw parse_error( "too many variables: " + std::to_string( n ) );
  }

  coeff_vector coeffs( std::size_t{ 1 } << n );
  for ( const auto& term : terms )
  {
    std::uint32_t index = 0;
    for ( auto k : term )
    {
      if ( k > n )
      {
        throw parse_error( "variable x" + std::to_string( k ) + " exceeds the variable count " + std::to_string( n ) );
      }
      index |= std::uint32_t{ 1 } << ( n - k );
    }
    coeffs.set_bit( index, !coeffs.bit( index ) );
  }
  return anf_form( std::move( coeffs ), n );
}

/*! \brief Canonical ANF text: terms by ascending index, variables by
           ascending subscript, '*' between variables; "0" for the zero
           function. */
inline std::string format_anf( const anf_form& a )
{
  std::string out;
  for ( auto i : a.coeffs.ones() )
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
    for ( unsigned k = 1; k <= a.vars; ++k )
    {
      if ( i & ( std::uint32_t{ 1 } << ( a.vars - k ) ) )
      {
        if ( !first )
        {
          out += "*";
        }
        out += "x" + std::to_string( k );
        first = false;
      }
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace gf2seq
