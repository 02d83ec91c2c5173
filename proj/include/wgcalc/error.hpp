#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wgc {

enum class ErrorKind {
    invalid_argument,
    size_mismatch,
    limit_exceeded,
    singular_gram,
    unsupported_category,
    color_string,
    divisibility,
    parse,
    unknown_suite,
};

/// Machine-readable name of an error category, e.g. "singular-gram".
std::string_view error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace wgc
