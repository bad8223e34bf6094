#pragma once
// Exception hierarchy. Every throw in the library derives from Error so
// callers (and the CLI exit-code mapping) can catch one base type.

#include <stdexcept>
#include <string>

namespace robomendel {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Distribution or sample constructed with invalid contents.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

// relative_entropy: p puts mass where q has none.
class AbsoluteContinuityError : public Error {
public:
    using Error::Error;
};

// A model assigned zero likelihood to an observation being scored.
class ZeroLikelihoodError : public Error {
public:
    using Error::Error;
};

// Continuous sample with zero variance cannot be entropy-fitted.
class DegenerateSampleError : public Error {
public:
    using Error::Error;
};

// Every mixture component assigned zero likelihood to an outcome.
class ImpossibleOutcomeError : public Error {
public:
    using Error::Error;
};

// History record whose category matches no model id.
class UnattributableRecordError : public Error {
public:
    using Error::Error;
};

// No trait model registered for a phenotype label.
class UnknownPhenotypeError : public Error {
public:
    using Error::Error;
};

// Design id outside the standard experiment set.
class UnknownDesignError : public Error {
public:
    using Error::Error;
};

// Full-sequence statistic would enumerate more than the state cap.
class IntractableError : public Error {
public:
    using Error::Error;
};

// Efficiency requested for a zero-cost design.
class ZeroCostError : public Error {
public:
    using Error::Error;
};

// Observed experiment outcome impossible under every active model.
class InconsistentResultError : public Error {
public:
    using Error::Error;
};

// Planning loop failed to converge within the cycle budget.
class MaxCyclesExceededError : public Error {
public:
    using Error::Error;
};

// Scenario configuration failed to parse or validate.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace robomendel
