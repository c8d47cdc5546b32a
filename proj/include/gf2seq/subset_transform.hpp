/*!
  \file subset_transform.hpp
  \brief Self-inverse GF(2) subset-lattice transform and the binomial matrix.
*/

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bit_sequence.hpp"

namespace gf2seq
{

/*! \brief Square GF(2) matrix of size 2^t x 2^t, stored as packed rows. */
struct bit_matrix
{
  std::size_t dim = 0;
  std::vector<bit_sequence> rows;
};

/*! \brief In-place subset-sum transform over the bit lattice.

  Output position t becomes the XOR of all input positions i with
  (i AND t) == i.  This equals multiplication by the binomial matrix on the
  right and is its own inverse over GF(2).  Runs as a butterfly in
  O(T log T) word operations: strides below the word size use mask-and-shift
  steps, larger strides XOR whole words.

  Throws std::domain_error unless the length is a power of two (length 1 is
  legal and a no-op).
*/
inline void moebius_in_place( coeff_vector& v )
{
  const std::size_t n = v.size();
  if ( n == 0 || !std::has_single_bit( n ) )
  {
    throw std::domain_error( "subset transform requires a power-of-two length, got " + std::to_string( n ) );
  }

  // positions whose stride bit is clear, per in-word stride 1,2,4,...,32
  static constexpr std::array<std::uint64_t, 6> low_masks = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };

  const std::size_t words = v.word_count();
  for ( unsigned b = 0; b < 6 && ( std::size_t{ 1 } << b ) < n; ++b )
  {
    const std::uint64_t mask = low_masks[b];
    const unsigned stride = 1u << b;
    for ( std::size_t w = 0; w < words; ++w )
    {
      const std::uint64_t x = v.word( w );
      v.set_word( w, x ^ ( ( x & mask ) << stride ) );
    }
  }
  for ( std::size_t d = 1; d * 64 < n; d <<= 1 )
  {
    for ( std::size_t w = 0; w < words; ++w )
    {
      if ( w & d )
      {
        v.set_word( w, v.word( w ) ^ v.word( w ^ d ) );
      }
    }
  }
}

/*! \brief Value-returning variant of moebius_in_place. */
inline coeff_vector moebius( coeff_vector v )
{
  moebius_in_place( v );
  return v;
}

/*! \brief Materializes the binomial matrix of size 2^t x 2^t.

  Built by the block-doubling rule: the order-0 matrix is [1], and each step
  places two copies of the previous block on the top row and a zero block
  next to the previous block on the bottom.  Entry [i][j] ends up 1 exactly
  when (i AND j) == i, and row i is the i-th binomial sequence.

  Only intended as a verification-scale object; t is capped at 12.
*/
inline bit_matrix binomial_matrix( int t )
{
  if ( t < 0 || t > 12 )
  {
    throw std::invalid_argument( "binomial matrix order must lie in [0, 12], got " + std::to_string( t ) );
  }
  bit_matrix m;
  m.dim = 1;
  m.rows.assign( 1, bit_sequence( 1 ) );
  m.rows[0].set_bit( 0, true );
  for ( int step = 0; step < t; ++step )
  {
    const std::size_t half = m.dim;
    bit_matrix next;
    next.dim = 2 * half;
    next.rows.assign( next.dim, bit_sequence( next.dim ) );
    for ( std::size_t i = 0; i < half; ++i )
    {
      for ( std::size_t j = 0; j < half; ++j )
      {
        const bool v = m.rows[i].bit( j );
        next.rows[i].set_bit( j, v );
        next.rows[i].set_bit( j + half, v );
        next.rows[i + half].set_bit( j + half, v );
      }
    }
    m = std::move( next );
  }
  return m;
}

} // namespace gf2seq
