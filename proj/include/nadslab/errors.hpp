#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nadslab {

// Base class of every error thrown by this library. The CLI maps subtypes
// to exit codes: usage/parse errors -> 2, cap violations -> 3. A falsified
// verification never throws; it is reported through a failing verdict.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (words, points, cylinders, rationals, schedules).
class ParseError : public Error {
public:
    using Error::Error;
};

// A materialization request exceeded the configured symbol cap.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t requested, std::size_t cap)
        : Error("materialization cap exceeded: requested " + std::to_string(requested) +
                " symbols, cap is " + std::to_string(cap)),
          requested_(requested),
          cap_(cap)
    {
    }

    std::size_t requested() const { return requested_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t requested_;
    std::size_t cap_;
};

// A schedule block matched neither of the two admissible balanced forms.
// Reaching this means either an implementation bug or a falsified claim;
// test suites must treat it as failure, never swallow it.
class BlockMismatch : public Error {
public:
    using Error::Error;
};

// A point was given an empty period word.
class EmptyPeriod : public Error {
public:
    using Error::Error;
};

// Aperiodicity scan found no disagreement for some candidate period.
class NoWitnessFound : public Error {
public:
    explicit NoWitnessFound(std::uint64_t period)
        : Error("no disagreement witness found for period " + std::to_string(period)),
          period_(period)
    {
    }

    std::uint64_t period() const { return period_; }

private:
    std::uint64_t period_;
};

// Orbit enumeration failed to stabilize within its caps.
class OrbitNotClosed : public Error {
public:
    using Error::Error;
};

// A truncated-word simulation ran out of symbols.
class TruncationExhausted : public Error {
public:
    using Error::Error;
};

// A schedule was handed to an evaluator for a different kind of system.
class WrongSystem : public Error {
public:
    using Error::Error;
};

// An explicit finite schedule was asked for a step past its end.
class ScheduleExhausted : public Error {
public:
    using Error::Error;
};

} // namespace nadslab
