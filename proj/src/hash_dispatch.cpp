#include "pixhash/hashes.hpp"

namespace pixhash {

BitHash hash_image(Algo algo, const RasterImage& img) {
  switch (algo) {
    case Algo::blockhash: return blockhash256(img);
    case Algo::colourhash: return colourhash(img);
    case Algo::pdq: return pdq256(img).hash;
    case Algo::phash: return phash64(img);
    case Algo::wavehash: return wavehash64(img);
    case Algo::external: break;
  }
  throw UnknownAlgorithm("external hashes are imported, not computed");
}

}  // namespace pixhash
