#pragma once

#include <stdexcept>
#include <string>

namespace infratag {

/// Base class for all infratag errors. Subclasses carry the condition in the
/// type so callers can catch a specific failure or the whole family.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define INFRATAG_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

// tag codecs
INFRATAG_DEFINE_ERROR(PayloadTooLong);
INFRATAG_DEFINE_ERROR(UnsupportedVersion);
INFRATAG_DEFINE_ERROR(FormatInfoUnreadable);
INFRATAG_DEFINE_ERROR(EccFailure);
INFRATAG_DEFINE_ERROR(IdOutOfRange);
INFRATAG_DEFINE_ERROR(BorderViolation);
INFRATAG_DEFINE_ERROR(NoMatch);
INFRATAG_DEFINE_ERROR(BadDictionary);

// mesh / geometry
INFRATAG_DEFINE_ERROR(MalformedStl);
INFRATAG_DEFINE_ERROR(EmptyMesh);
INFRATAG_DEFINE_ERROR(TagLargerThanFace);
INFRATAG_DEFINE_ERROR(PrismProtrudes);
INFRATAG_DEFINE_ERROR(NonWatertight);
INFRATAG_DEFINE_ERROR(InvalidPlacement);

// embedder
INFRATAG_DEFINE_ERROR(InvalidCombination);

// simulation
INFRATAG_DEFINE_ERROR(CameraInsideObject);
INFRATAG_DEFINE_ERROR(EmptyRoi);
INFRATAG_DEFINE_ERROR(NoBracket);

// detection
INFRATAG_DEFINE_ERROR(ImageSmallerThanGrid);
INFRATAG_DEFINE_ERROR(EvenKsize);
INFRATAG_DEFINE_ERROR(EvenBlockSize);
INFRATAG_DEFINE_ERROR(DegenerateQuad);

// io
INFRATAG_DEFINE_ERROR(IoError);
INFRATAG_DEFINE_ERROR(BadImageFormat);
INFRATAG_DEFINE_ERROR(BadConfig);

#undef INFRATAG_DEFINE_ERROR

}  // namespace infratag
