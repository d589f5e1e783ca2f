#pragma once

#include <stdexcept>
#include <string>

namespace covermap {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// ConfigError -> 2, data errors -> 3, check failures -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};
struct FormatError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct WindowError : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct PredictorError : Error {
    using Error::Error;
};
struct StitchError : Error {
    using Error::Error;
};
struct GeometryError : Error {
    using Error::Error;
};
struct DegenerateInput : Error {
    using Error::Error;
};
struct TrainingError : Error {
    using Error::Error;
};

}  // namespace covermap
