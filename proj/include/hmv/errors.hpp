#ifndef HMV_ERRORS_HPP
#define HMV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hmv {

// Every failure mode exposed by the library carries a stable machine-readable
// code (used verbatim in CLI error objects) plus a human detail string.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error not_irreducible(const std::string& d) { return Error("NotIrreducible", d); }
inline Error not_totally_real(const std::string& d) { return Error("NotTotallyReal", d); }
inline Error degree_too_small(const std::string& d) { return Error("DegreeTooSmall", d); }
inline Error not_a_unit(const std::string& d) { return Error("NotAUnit", d); }
inline Error wrong_count(const std::string& d) { return Error("WrongCount", d); }
inline Error invalid_m(const std::string& d) { return Error("InvalidM", d); }
inline Error invalid_discriminant(const std::string& d) { return Error("InvalidDiscriminant", d); }
inline Error inconsistent_data(const std::string& d) { return Error("InconsistentData", d); }
inline Error inconsistent_datum(const std::string& d) { return Error("InconsistentDatum", d); }
inline Error unsupported_descriptor(const std::string& d) { return Error("UnsupportedDescriptor", d); }
inline Error precision_exhausted(const std::string& d) { return Error("PrecisionExhausted", d); }
inline Error out_of_range(const std::string& d) { return Error("OutOfRange", d); }
inline Error too_large(const std::string& d) { return Error("TooLarge", d); }
inline Error not_a_subgroup(const std::string& d) { return Error("NotASubgroup", d); }
inline Error bad_transversal(const std::string& d) { return Error("BadTransversal", d); }
inline Error bad_character(const std::string& d) { return Error("BadCharacter", d); }
inline Error invariants_nonzero(const std::string& d) { return Error("InvariantsNonzero", d); }
inline Error too_short(const std::string& d) { return Error("TooShort", d); }
inline Error non_termination(const std::string& d) { return Error("NonTermination", d); }
inline Error units_required(const std::string& d) { return Error("UnitsRequired", d); }
inline Error bad_input(const std::string& d) { return Error("BadInput", d); }

} // namespace hmv

#endif
