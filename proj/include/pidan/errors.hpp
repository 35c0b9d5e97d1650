#pragma once

#include <stdexcept>
#include <string>

namespace pidan {

// Base of all data/numeric errors. The CLI maps these to exit code 1;
// usage errors are handled by the argument parser and map to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define PIDAN_ERROR_TYPE(Name)                                          \
    class Name : public Error {                                         \
    public:                                                              \
        explicit Name(const std::string& m) : Error(#Name ": " + m) {}   \
    }

PIDAN_ERROR_TYPE(MalformedFile);
PIDAN_ERROR_TYPE(NonFiniteEntry);
PIDAN_ERROR_TYPE(DegenerateSample);
PIDAN_ERROR_TYPE(NumericalFailure);
PIDAN_ERROR_TYPE(ZeroVariance);
PIDAN_ERROR_TYPE(DegenerateObjective);
PIDAN_ERROR_TYPE(IndexOutOfRange);
PIDAN_ERROR_TYPE(TooFewSamples);
PIDAN_ERROR_TYPE(TooFewClasses);
PIDAN_ERROR_TYPE(DegenerateInput);
PIDAN_ERROR_TYPE(TooFewPoints);
PIDAN_ERROR_TYPE(Disconnected);
PIDAN_ERROR_TYPE(DegenerateDistances);
PIDAN_ERROR_TYPE(InfeasibleConfig);

#undef PIDAN_ERROR_TYPE

}  // namespace pidan
