/*!
  \file bit_sequence.hpp
  \brief Packed GF(2) bit vectors: parsing, rotation, reversal, statistics.
*/

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gf2seq
{

/*! \brief Error raised for malformed textual input.

  `position` is the byte offset of the offending character in the original
  input, or `npos` when the problem is not tied to a single character.
*/
class parse_error : public std::runtime_error
{
public:
  static constexpr std::size_t npos = static_cast<std::size_t>( -1 );

  parse_error( const std::string& message, std::size_t position = npos )
      : std::runtime_error( message ), position_( position )
  {
  }

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/*! \brief One period of a binary sequence, packed into 64-bit words.

  Position 0 is the first emitted bit and lives at the least significant end
  of word 0.  All public operations speak in bit positions; the word layout
  is only visible through `word`/`set_word`, which keep the invariant that
  bits at positions >= size() are zero.
*/
class bit_sequence
{
public:
  bit_sequence() = default;

  explicit bit_sequence( std::size_t size ) : size_( size ), words_( word_count_for( size ), 0u ) {}

  /*! \brief Parses a bit string such as "11100001", "1 1 0 1" or "0,1,0,1".

    Spaces, tabs, newlines and commas between bits are ignored.  The leftmost
    character becomes position 0.  Throws parse_error on an empty string or
    on any other character, reporting its offset.
  */
  static bit_sequence parse( std::string_view text )
  {
    bit_sequence out;
    std::vector<bool> bits;
    bits.reserve( text.size() );
    for ( std::size_t pos = 0; pos < text.size(); ++pos )
    {
      const char c = text[pos];
      if ( c == '0' || c == '1' )
      {
        bits.push_back( c == '1' );
      }
      else if ( c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r' )
      {
        continue;
      }
      else
      {
        throw parse_error( "unexpected character '" + std::string( 1, c ) + "' in bit string at position " + std::to_string( pos ), pos );
      }
    }
    if ( bits.empty() )
    {
      throw parse_error( "empty bit string" );
    }
    out = bit_sequence( bits.size() );
    for ( std::size_t i = 0; i < bits.size(); ++i )
    {
      out.set_bit( i, bits[i] );
    }
    return out;
  }

  /*! \brief Builds the indicator vector of a support set. */
  static bit_sequence from_support( std::span<const std::uint32_t> support, std::size_t size )
  {
    bit_sequence out( size );
    for ( auto i : support )
    {
      if ( i >= size )
      {
        throw std::out_of_range( "support index " + std::to_string( i ) + " does not fit in a vector of length " + std::to_string( size ) );
      }
      out.set_bit( i, true );
    }
    return out;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool bit( std::size_t pos ) const
  {
    return ( words_[pos >> 6] >> ( pos & 63u ) ) & 1u;
  }

  void set_bit( std::size_t pos, bool value )
  {
    const std::uint64_t mask = std::uint64_t{ 1 } << ( pos & 63u );
    if ( value )
      words_[pos >> 6] |= mask;
    else
      words_[pos >> 6] &= ~mask;
  }

  std::size_t word_count() const noexcept { return words_.size(); }

  std::uint64_t word( std::size_t index ) const { return words_[index]; }

  /*! \brief Writes a whole word, clearing any bits beyond size(). */
  void set_word( std::size_t index, std::uint64_t value )
  {
    if ( index + 1 == words_.size() && ( size_ & 63u ) != 0 )
    {
      value &= ( std::uint64_t{ 1 } << ( size_ & 63u ) ) - 1;
    }
    words_[index] = value;
  }

  /*! \brief Number of ones. */
  std::size_t weight() const noexcept
  {
    std::size_t w = 0;
    for ( auto word : words_ )
    {
      w += static_cast<std::size_t>( std::popcount( word ) );
    }
    return w;
  }

  bool all_zero() const noexcept { return weight() == 0; }

  /*! \brief Positions of the ones, ascending. */
  std::vector<std::uint32_t> ones() const
  {
    std::vector<std::uint32_t> out;
    out.reserve( weight() );
    for ( std::size_t i = 0; i < size_; ++i )
    {
      if ( bit( i ) )
      {
        out.push_back( static_cast<std::uint32_t>( i ) );
      }
    }
    return out;
  }

  /*! \brief Cyclic left shift: output position t holds bit (t + r) mod size. */
  bit_sequence rotated_left( std::size_t r ) const
  {
    bit_sequence out( size_ );
    if ( size_ == 0 )
    {
      return out;
    }
    r %= size_;
    for ( std::size_t i = 0; i < size_; ++i )
    {
      out.set_bit( i, bit( ( i + r ) % size_ ) );
    }
    return out;
  }

  /*! \brief Position t of the result holds bit size - 1 - t. */
  bit_sequence reversed() const
  {
    bit_sequence out( size_ );
    for ( std::size_t i = 0; i < size_; ++i )
    {
      out.set_bit( i, bit( size_ - 1 - i ) );
    }
    return out;
  }

  /*! \brief Periodic extension (or truncation) to a new length. */
  bit_sequence repeated_to( std::size_t new_size ) const
  {
    if ( size_ == 0 )
    {
      throw std::domain_error( "cannot extend an empty sequence" );
    }
    bit_sequence out( new_size );
    for ( std::size_t i = 0; i < new_size; ++i )
    {
      out.set_bit( i, bit( i % size_ ) );
    }
    return out;
  }

  /*! \brief Smallest divisor p of size() with bit((t + p) mod size) == bit(t) for all t. */
  std::size_t min_period() const
  {
    for ( std::size_t p = 1; p <= size_; ++p )
    {
      if ( size_ % p != 0 )
      {
        continue;
      }
      bool ok = true;
      for ( std::size_t i = 0; i < size_ && ok; ++i )
      {
        ok = ( bit( i ) == bit( ( i + p ) % size_ ) );
      }
      if ( ok )
      {
        return p;
      }
    }
    return size_;
  }

  std::string to_string( char separator = '\0' ) const
  {
    std::string out;
    out.reserve( separator ? 2 * size_ : size_ );
    for ( std::size_t i = 0; i < size_; ++i )
    {
      if ( separator && i > 0 )
      {
        out.push_back( separator );
      }
      out.push_back( bit( i ) ? '1' : '0' );
    }
    return out;
  }

  bit_sequence& operator^=( const bit_sequence& other )
  {
    if ( other.size_ != size_ )
    {
      throw std::invalid_argument( "XOR of sequences with different lengths" );
    }
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      words_[i] ^= other.words_[i];
    }
    return *this;
  }

  friend bit_sequence operator^( bit_sequence lhs, const bit_sequence& rhs )
  {
    lhs ^= rhs;
    return lhs;
  }

  friend bool operator==( const bit_sequence&, const bit_sequence& ) = default;

  friend std::strong_ordering operator<=>( const bit_sequence& lhs, const bit_sequence& rhs )
  {
    if ( auto c = lhs.size_ <=> rhs.size_; c != 0 )
    {
      return c;
    }
    return lhs.words_ <=> rhs.words_;
  }

private:
  static std::size_t word_count_for( std::size_t size ) { return ( size + 63 ) / 64; }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/*! \brief A GF(2) coefficient vector of length 2^t.

  The same packed vector is read as truth-table values, algebraic-normal-form
  coefficients or binomial-representation coefficients depending on context.
*/
using coeff_vector = bit_sequence;

struct sequence_stats
{
  std::size_t weight;
  std::size_t minimal_period;
  bool balanced;
};

/*! \brief Weight, minimal period and balancedness of one period of a sequence. */
inline sequence_stats seq_stats( const bit_sequence& s )
{
  const auto w = s.weight();
  return { w, s.min_period(), w == s.size() / 2 && s.size() % 2 == 0 };
}

} // namespace gf2seq
