#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boostnet {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; carries the 1-based line number when known.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line_no = 0)
        : Error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    std::size_t line;
};

// Well-formed input carrying a value outside its documented range.
struct RangeError : Error {
    using Error::Error;
};

// A domain-type invariant would be violated.
struct InvariantError : Error {
    using Error::Error;
};

// Saved crawl state fails its consistency checks on load.
struct CorruptStateError : Error {
    using Error::Error;
};

// Too few samples/accounts for a statistical operation.
struct InsufficientDataError : Error {
    using Error::Error;
};

// --- provider-side failures ---

struct ProviderError : Error {
    using Error::Error;
};

// Account unknown to the provider.
struct NotFoundError : ProviderError {
    using ProviderError::ProviderError;
};

// Authorization-restricted account.
struct ProtectedError : ProviderError {
    using ProviderError::ProviderError;
};

// Account exists but has been suspended by the platform.
struct SuspendedError : ProviderError {
    using ProviderError::ProviderError;
};

// Retry after the signalled interval.
struct RateLimitedError : ProviderError {
    RateLimitedError(const std::string& msg, double retry_after)
        : ProviderError(msg), retry_after_seconds(retry_after) {}
    double retry_after_seconds;
};

// Transient I/O failure; retryable with backoff.
struct TransientError : ProviderError {
    using ProviderError::ProviderError;
};

// Unrecoverable provider failure; aborts the crawl.
struct FatalProviderError : ProviderError {
    using ProviderError::ProviderError;
};

}  // namespace boostnet
