#pragma once

#include <stdexcept>
#include <string>

namespace cet {

// Error classes map to process exit codes at the CLI boundary:
// Usage -> 2, Data -> 3, Numeric -> 4.
enum class ErrorKind { Usage, Data, Numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string category, const std::string& message)
        : std::runtime_error(category + ": " + message),
          kind_(kind),
          category_(std::move(category)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& category() const { return category_; }

private:
    ErrorKind kind_;
    std::string category_;
};

inline Error data_error(std::string category, const std::string& message) {
    return Error(ErrorKind::Data, std::move(category), message);
}

inline Error usage_error(std::string category, const std::string& message) {
    return Error(ErrorKind::Usage, std::move(category), message);
}

inline Error numeric_error(std::string category, const std::string& message) {
    return Error(ErrorKind::Numeric, std::move(category), message);
}

}  // namespace cet
