#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lda {

enum class ErrorKind {
    invalid_spec,
    invalid_labeling,
    domain,
    no_coloring,
    condition,
    unsupported,
    budget,
    parse,
};

auto to_string(ErrorKind kind) -> std::string_view;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string & what) : std::runtime_error(what), kind_(kind) {}

    auto kind() const noexcept -> ErrorKind { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace lda
