#ifndef THUELAB_ERRORS_HPP
#define THUELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thuelab {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// words
struct AlphabetOverlap : Error {
    using Error::Error;
};
struct NotNonrepetitive : Error {
    using Error::Error;
};
struct BadCuts : Error {
    using Error::Error;
};
struct NotRainbow : Error {
    using Error::Error;
};

// graphs
struct UnknownFamily : Error {
    using Error::Error;
};
struct BadParameter : Error {
    using Error::Error;
};
struct EmptyFactor : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};

// colouring
struct IncompleteColouring : Error {
    using Error::Error;
};
struct NotIndependent : Error {
    using Error::Error;
};
struct RepetitiveFactorColouring : Error {
    using Error::Error;
};
struct ListTooShort : Error {
    using Error::Error;
};
struct DistinctSelectionFailed : Error {
    using Error::Error;
};

// input handling
struct ParseError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace thuelab

#endif
