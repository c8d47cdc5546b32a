/*!
  \file lfsr.hpp
  \brief Characteristic polynomials over GF(2), primitivity testing, and
         maximal-length LFSR (PN) sequences.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bit_sequence.hpp"

namespace gf2seq
{

namespace detail
{

//! carry-less product of polynomials given as bitmasks (degrees < 32)
inline std::uint64_t poly_mul( std::uint64_t a, std::uint64_t b )
{
  std::uint64_t out = 0;
  while ( b )
  {
    if ( b & 1u )
    {
      out ^= a;
    }
    a <<= 1;
    b >>= 1;
  }
  return out;
}

//! reduction modulo a polynomial given as a bitmask
inline std::uint64_t poly_mod( std::uint64_t a, std::uint64_t mod )
{
  const int mod_deg = 63 - std::countl_zero( mod );
  while ( true )
  {
    if ( a == 0 )
    {
      return 0;
    }
    const int deg = 63 - std::countl_zero( a );
    if ( deg < mod_deg )
    {
      return a;
    }
    a ^= mod << ( deg - mod_deg );
  }
}

inline std::uint64_t poly_mulmod( std::uint64_t a, std::uint64_t b, std::uint64_t mod )
{
  return poly_mod( poly_mul( a, b ), mod );
}

inline std::uint64_t poly_powmod( std::uint64_t base, std::uint64_t exponent, std::uint64_t mod )
{
  std::uint64_t result = poly_mod( 1, mod );
  base = poly_mod( base, mod );
  while ( exponent )
  {
    if ( exponent & 1u )
    {
      result = poly_mulmod( result, base, mod );
    }
    base = poly_mulmod( base, base, mod );
    exponent >>= 1;
  }
  return result;
}

inline std::uint64_t poly_gcd( std::uint64_t a, std::uint64_t b )
{
  while ( b )
  {
    a = poly_mod( a, b );
    std::swap( a, b );
  }
  return a;
}

inline std::vector<std::uint64_t> prime_factors( std::uint64_t n )
{
  std::vector<std::uint64_t> out;
  for ( std::uint64_t p = 2; p * p <= n; ++p )
  {
    if ( n % p == 0 )
    {
      out.push_back( p );
      while ( n % p == 0 )
      {
        n /= p;
      }
    }
  }
  if ( n > 1 )
  {
    out.push_back( n );
  }
  return out;
}

//! Rabin's test: x^(2^L) == x mod p, and gcd(x^(2^(L/q)) - x, p) = 1 for prime q | L
inline bool poly_irreducible( std::uint64_t p, unsigned degree )
{
  const std::uint64_t x = 2;
  std::uint64_t frob = x; // x^(2^i) mod p
  std::vector<std::uint64_t> powers( degree + 1 );
  powers[0] = poly_mod( x, p );
  for ( unsigned i = 1; i <= degree; ++i )
  {
    frob = poly_mulmod( frob, frob, p );
    powers[i] = frob;
  }
  if ( powers[degree] != poly_mod( x, p ) )
  {
    return false;
  }
  for ( auto q : prime_factors( degree ) )
  {
    if ( poly_gcd( powers[degree / q] ^ poly_mod( x, p ), p ) != 1 )
    {
      return false;
    }
  }
  return true;
}

} // namespace detail

/*! \brief Monic characteristic polynomial x^L + a_{L-1} x^{L-1} + ... + a_0.

  The lower coefficients are stored as a bitmask (bit j holds a_j); the
  leading term is implicit.
*/
struct char_polynomial
{
  unsigned degree = 0;
  std::uint32_t low_coeffs = 0;

  char_polynomial() = default;

  char_polynomial( unsigned deg, std::uint32_t coeffs ) : degree( deg ), low_coeffs( coeffs )
  {
    if ( degree == 0 || degree > 31 )
    {
      throw std::invalid_argument( "polynomial degree must lie in [1, 31], got " + std::to_string( degree ) );
    }
    if ( coeffs >> degree )
    {
      throw std::invalid_argument( "coefficient mask has bits at or above the degree" );
    }
  }

  //! full bitmask including the leading term
  std::uint64_t mask() const { return ( std::uint64_t{ 1 } << degree ) | low_coeffs; }

  /*! \brief Parses text such as "x^4+x+1" or "1 + x + x^4". */
  static char_polynomial parse( std::string_view text )
  {
    std::string stripped;
    for ( char c : text )
    {
      if ( c != ' ' && c != '\t' )
      {
        stripped.push_back( c );
      }
    }
    if ( stripped.empty() )
    {
      throw parse_error( "empty polynomial" );
    }
    std::uint64_t mask = 0;
    std::size_t begin = 0;
    while ( begin <= stripped.size() )
    {
      const std::size_t end = std::min( stripped.find( '+', begin ), stripped.size() );
      const std::string_view term( stripped.data() + begin, end - begin );
      unsigned power = 0;
      if ( term == "1" )
      {
        power = 0;
      }
      else if ( term == "x" )
      {
        power = 1;
      }
      else if ( term.size() > 2 && term[0] == 'x' && term[1] == '^' )
      {
        for ( std::size_t i = 2; i < term.size(); ++i )
        {
          if ( term[i] < '0' || term[i] > '9' )
          {
            throw parse_error( "invalid exponent in term '" + std::string( term ) + "'" );
          }
          power = power * 10 + static_cast<unsigned>( term[i] - '0' );
          if ( power > 31 )
          {
            throw parse_error( "exponent too large in term '" + std::string( term ) + "'" );
          }
        }
      }
      else
      {
        throw parse_error( "invalid term '" + std::string( term ) + "' in polynomial" );
      }
      if ( mask & ( std::uint64_t{ 1 } << power ) )
      {
        throw parse_error( "repeated term '" + std::string( term ) + "' in polynomial" );
      }
      mask |= std::uint64_t{ 1 } << power;
      if ( end == stripped.size() )
      {
        break;
      }
      begin = end + 1;
    }
    const unsigned degree = static_cast<unsigned>( 63 - std::countl_zero( mask ) );
    if ( degree == 0 )
    {
      throw parse_error( "polynomial must contain a power of x" );
    }
    return char_polynomial( degree, static_cast<std::uint32_t>( mask & ( ( std::uint64_t{ 1 } << degree ) - 1 ) ) );
  }

  std::string to_string() const
  {
    std::string out = "x^" + std::to_string( degree );
    for ( int j = static_cast<int>( degree ) - 1; j >= 0; --j )
    {
      if ( low_coeffs & ( std::uint32_t{ 1 } << j ) )
      {
        if ( j == 0 )
        {
          out += " + 1";
        }
        else if ( j == 1 )
        {
          out += " + x";
        }
        else
        {
          out += " + x^" + std::to_string( j );
        }
      }
    }
    return out;
  }

  friend bool operator==( const char_polynomial&, const char_polynomial& ) = default;
};

/*! \brief True exactly when p is irreducible over GF(2) and x has
           multiplicative order 2^L - 1 modulo p.

  The order test raises x to (2^L - 1) / q for every prime divisor q of
  2^L - 1, obtained by trial division; no probabilistic steps are involved.
  Degrees outside [2, 24] are refused.
*/
inline bool is_primitive( const char_polynomial& p )
{
  if ( p.degree < 2 || p.degree > 24 )
  {
    throw std::invalid_argument( "primitivity test supports degrees 2 to 24, got " + std::to_string( p.degree ) );
  }
  if ( ( p.low_coeffs & 1u ) == 0 )
  {
    return false; // divisible by x
  }
  const std::uint64_t mask = p.mask();
  if ( !detail::poly_irreducible( mask, p.degree ) )
  {
    return false;
  }
  const std::uint64_t group_order = ( std::uint64_t{ 1 } << p.degree ) - 1;
  if ( detail::poly_powmod( 2, group_order, mask ) != 1 )
  {
    return false;
  }
  for ( auto q : detail::prime_factors( group_order ) )
  {
    if ( detail::poly_powmod( 2, group_order / q, mask ) == 1 )
    {
      return false;
    }
  }
  return true;
}

/*! \brief All primitive polynomials of the given degree, ascending by
           coefficient mask. */
inline std::vector<char_polynomial> primitive_polynomials( unsigned degree )
{
  std::vector<char_polynomial> out;
  for ( std::uint32_t coeffs = 1; coeffs < ( std::uint32_t{ 1 } << degree ); coeffs += 2 )
  {
    const char_polynomial p( degree, coeffs );
    if ( is_primitive( p ) )
    {
      out.push_back( p );
    }
  }
  return out;
}

/*! \brief Output of the LFSR with the given characteristic polynomial.

  The state bits u_0 ... u_{L-1} are emitted first, then
  u_{t+L} = sum a_j u_{t+j} continues the stream.  With a primitive
  polynomial and a nonzero state the period is 2^L - 1.
*/
inline bit_sequence pn_sequence( const char_polynomial& p, const bit_sequence& state, std::size_t length )
{
  if ( state.size() != p.degree )
  {
    throw std::invalid_argument( "initial state must have exactly " + std::to_string( p.degree ) + " bits, got " + std::to_string( state.size() ) );
  }
  if ( state.all_zero() )
  {
    throw std::invalid_argument( "initial state must not be all zero" );
  }
  bit_sequence out( length );
  std::vector<std::uint8_t> window( p.degree );
  for ( unsigned j = 0; j < p.degree; ++j )
  {
    window[j] = state.bit( j ) ? 1 : 0;
  }
  for ( std::size_t t = 0; t < length; ++t )
  {
    out.set_bit( t, window[0] != 0 );
    std::uint8_t next = 0;
    for ( unsigned j = 0; j < p.degree; ++j )
    {
      if ( p.low_coeffs & ( std::uint32_t{ 1 } << j ) )
      {
        next ^= window[j];
      }
    }
    for ( unsigned j = 0; j + 1 < p.degree; ++j )
    {
      window[j] = window[j + 1];
    }
    window[p.degree - 1] = next;
  }
  return out;
}

} // namespace gf2seq
