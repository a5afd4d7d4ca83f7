#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pixhash/errors.hpp"

namespace pixhash {

enum class Algo { blockhash, colourhash, pdq, phash, wavehash, external };

/// Declared hash size in bits; 0 for external (length travels with the record).
int declared_bits(Algo algo);

const char* algo_name(Algo algo);

/// Parse one of the implemented algorithm names. Throws UnknownAlgorithm,
/// listing the supported set, for anything else.
Algo algo_from_name(std::string_view name);

bool is_builtin_algo_name(std::string_view name);

/// Fixed-length ordered bit string, most-significant bit first. `name` is the
/// canonical algorithm name, or the declared tag for externally computed
/// hashes. Trailing pad bits (when bit_length % 8 != 0) are always zero.
struct BitHash {
  Algo algo = Algo::external;
  std::string name;
  int bit_length = 0;
  std::vector<std::uint8_t> bytes;

  BitHash() = default;
  BitHash(Algo a, int bits);
  BitHash(std::string external_name, int bits);  // algo = external

  void set_bit(int i);
  bool bit(int i) const;

  /// Big-endian nibbles, zero-padded to ceil(bit_length/4) digits.
  std::string to_hex() const;
  static BitHash from_hex(Algo algo, std::string_view name, int bit_length,
                          std::string_view hex);

  bool operator==(const BitHash&) const = default;
};

}  // namespace pixhash
