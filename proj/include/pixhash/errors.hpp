#pragma once

#include <stdexcept>
#include <string>

namespace pixhash {

// Base for everything this library throws. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PIXHASH_ERROR(Name)          \
  struct Name : Error {              \
    using Error::Error;              \
  }

// imageio
PIXHASH_ERROR(MalformedStream);
PIXHASH_ERROR(UnsupportedFormat);

// transforms
PIXHASH_ERROR(NonPow2Input);

// hashing / distance
PIXHASH_ERROR(UnknownAlgorithm);
PIXHASH_ERROR(LengthMismatch);
PIXHASH_ERROR(AlgorithmMismatch);

// modifications
PIXHASH_ERROR(ImageTooSmall);

// metrics
PIXHASH_ERROR(InsufficientSample);
PIXHASH_ERROR(DegenerateSample);
PIXHASH_ERROR(EmptySample);
PIXHASH_ERROR(MixedAlgorithms);

// harness
PIXHASH_ERROR(EmptyCorpus);
PIXHASH_ERROR(UnreadablePath);
PIXHASH_ERROR(CorpusTooSmall);
PIXHASH_ERROR(MissingHashes);
PIXHASH_ERROR(FormatError);
PIXHASH_ERROR(LengthInconsistency);

// cli / reporting
PIXHASH_ERROR(MissingGoldens);
PIXHASH_ERROR(NothingToReport);

#undef PIXHASH_ERROR

}  // namespace pixhash
