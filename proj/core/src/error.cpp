#include <lda/error.hpp>

namespace lda {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::invalid_spec: return "invalid-spec";
        case ErrorKind::invalid_labeling: return "invalid-labeling";
        case ErrorKind::domain: return "domain";
        case ErrorKind::no_coloring: return "no-coloring";
        case ErrorKind::condition: return "condition";
        case ErrorKind::unsupported: return "unsupported";
        case ErrorKind::budget: return "budget";
        case ErrorKind::parse: return "parse";
    }
    return "unknown";
}

} // namespace lda
