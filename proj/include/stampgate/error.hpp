#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stampgate {

enum class Errc {
    CapacityZero,
    UnknownSource,
    EmptyTransfer,
    ServiceNotPermitted,
    TicketExpired,
    UnknownClient,
    UnknownPlan,
    OverflowFragment,
    DivisorZero,
    ScenarioMismatch,
    ConfigInvalid,
    MalformedBytes,
    InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

// All contract violations in the library surface as this one exception type;
// callers switch on code() rather than catching a hierarchy.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace stampgate
