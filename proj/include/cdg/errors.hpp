#ifndef CDG_ERRORS_HPP
#define CDG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cdg {

/* Every computational error carries a stable name so the CLI can report
 * "exit 1 with the module's error name" without string-matching what(). */
struct Error : std::runtime_error {
    std::string name;
    Error(std::string n, const std::string& msg)
        : std::runtime_error(n + ": " + msg), name(std::move(n)) {}
};

#define CDG_ERROR_TYPE(TYPE)                                            \
    struct TYPE : Error {                                               \
        explicit TYPE(const std::string& msg) : Error(#TYPE, msg) {}    \
    }

CDG_ERROR_TYPE(ZeroConstantTerm);
CDG_ERROR_TYPE(NonzeroConstantTerm);
CDG_ERROR_TYPE(NoConvergence);
CDG_ERROR_TYPE(TruncationTooLow);
CDG_ERROR_TYPE(OrderTooLow);
CDG_ERROR_TYPE(Disconnected);
CDG_ERROR_TYPE(NotConnected);
CDG_ERROR_TYPE(WrongBackboneCount);
CDG_ERROR_TYPE(CapExceeded);
CDG_ERROR_TYPE(InconsistentSystem);
CDG_ERROR_TYPE(TooFewTerms);
CDG_ERROR_TYPE(NonPositiveTail);
CDG_ERROR_TYPE(UnstableDerivative);
CDG_ERROR_TYPE(BadInput);

#undef CDG_ERROR_TYPE

}  // namespace cdg

#endif
