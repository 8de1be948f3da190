#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leaguestats {

// Base of all data/computation errors. what() is "<Kind>: <detail>" so the
// CLI can propagate error names verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string_view kind, std::string_view detail)
        : std::runtime_error(std::string(kind) + ": " + std::string(detail)),
          kind_(kind) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define LEAGUESTATS_ERROR_TYPE(Name)                          \
    class Name : public Error {                               \
    public:                                                   \
        explicit Name(std::string_view detail)                \
            : Error(#Name, detail) {}                         \
    }

// corpus
LEAGUESTATS_ERROR_TYPE(MalformedRow);
LEAGUESTATS_ERROR_TYPE(InvariantViolation);
LEAGUESTATS_ERROR_TYPE(WrongRowCount);
LEAGUESTATS_ERROR_TYPE(AbsentColumn);
// inequality
LEAGUESTATS_ERROR_TYPE(ZeroTotal);
LEAGUESTATS_ERROR_TYPE(NonPositiveTotal);
// density / inequality / multivariate
LEAGUESTATS_ERROR_TYPE(DegenerateRange);
LEAGUESTATS_ERROR_TYPE(GridMismatch);
// multivariate
LEAGUESTATS_ERROR_TYPE(DegenerateColumn);
LEAGUESTATS_ERROR_TYPE(NotSymmetric);
LEAGUESTATS_ERROR_TYPE(NoConvergence);
// report
LEAGUESTATS_ERROR_TYPE(EmptySeries);
LEAGUESTATS_ERROR_TYPE(UsageError);

#undef LEAGUESTATS_ERROR_TYPE

}  // namespace leaguestats
