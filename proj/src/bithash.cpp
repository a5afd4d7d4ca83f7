#include <array>

#include "pixhash/bithash.hpp"

namespace pixhash {

int declared_bits(Algo algo) {
  switch (algo) {
    case Algo::blockhash: return 256;
    case Algo::colourhash: return 44;
    case Algo::pdq: return 256;
    case Algo::phash: return 64;
    case Algo::wavehash: return 64;
    case Algo::external: return 0;
  }
  return 0;
}

const char* algo_name(Algo algo) {
  switch (algo) {
    case Algo::blockhash: return "blockhash";
    case Algo::colourhash: return "colourhash";
    case Algo::pdq: return "pdq";
    case Algo::phash: return "phash";
    case Algo::wavehash: return "wavehash";
    case Algo::external: return "external";
  }
  return "?";
}

Algo algo_from_name(std::string_view name) {
  if (name == "blockhash") return Algo::blockhash;
  if (name == "colourhash") return Algo::colourhash;
  if (name == "pdq") return Algo::pdq;
  if (name == "phash") return Algo::phash;
  if (name == "wavehash") return Algo::wavehash;
  throw UnknownAlgorithm("unknown algorithm '" + std::string(name) +
                         "'; supported: blockhash, colourhash, pdq, phash, wavehash");
}

bool is_builtin_algo_name(std::string_view name) {
  return name == "blockhash" || name == "colourhash" || name == "pdq" || name == "phash" ||
         name == "wavehash";
}

BitHash::BitHash(Algo a, int bits)
    : algo(a), name(algo_name(a)), bit_length(bits), bytes((bits + 7) / 8, 0) {}

BitHash::BitHash(std::string external_name, int bits)
    : algo(Algo::external),
      name(std::move(external_name)),
      bit_length(bits),
      bytes((bits + 7) / 8, 0) {}

void BitHash::set_bit(int i) {
  bytes[static_cast<std::size_t>(i) >> 3] |= static_cast<std::uint8_t>(0x80u >> (i & 7));
}

bool BitHash::bit(int i) const {
  return (bytes[static_cast<std::size_t>(i) >> 3] >> (7 - (i & 7))) & 1;
}

std::string BitHash::to_hex() const {
  static const char digits[] = "0123456789abcdef";
  const int ndigits = (bit_length + 3) / 4;
  std::string out(static_cast<std::size_t>(ndigits), '0');
  for (int d = 0; d < ndigits; ++d) {
    const std::size_t byte = static_cast<std::size_t>(d) >> 1;
    const std::uint8_t v = bytes[byte];
    out[static_cast<std::size_t>(d)] = digits[(d & 1) ? (v & 0xF) : (v >> 4)];
  }
  return out;
}

BitHash BitHash::from_hex(Algo algo, std::string_view name, int bit_length,
                          std::string_view hex) {
  const int ndigits = (bit_length + 3) / 4;
  if (static_cast<int>(hex.size()) != ndigits) {
    throw FormatError("hex width " + std::to_string(hex.size()) + " does not match " +
                      std::to_string(bit_length) + "-bit hash");
  }
  BitHash h;
  h.algo = algo;
  h.name = std::string(name);
  h.bit_length = bit_length;
  h.bytes.assign(static_cast<std::size_t>((bit_length + 7) / 8), 0);
  for (int d = 0; d < ndigits; ++d) {
    const char c = hex[static_cast<std::size_t>(d)];
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else {
      throw FormatError("invalid hex digit in hash");
    }
    h.bytes[static_cast<std::size_t>(d) >> 1] |=
        static_cast<std::uint8_t>((d & 1) ? v : (v << 4));
  }
  // Reject set bits beyond the declared length.
  for (int i = bit_length; i < ndigits * 4; ++i) {
    if (h.bit(i)) throw FormatError("pad bits beyond declared hash length must be zero");
  }
  return h;
}

}  // namespace pixhash
