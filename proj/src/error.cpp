#include "wgcalc/error.hpp"

namespace wgc {

std::string_view error_kind_name(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::size_mismatch: return "size-mismatch";
    case ErrorKind::limit_exceeded: return "limit-exceeded";
    case ErrorKind::singular_gram: return "singular-gram";
    case ErrorKind::unsupported_category: return "unsupported-category";
    case ErrorKind::color_string: return "color-string";
    case ErrorKind::divisibility: return "divisibility";
    case ErrorKind::parse: return "parse";
    case ErrorKind::unknown_suite: return "unknown-suite";
    }
    return "unknown";
}

} // namespace wgc
