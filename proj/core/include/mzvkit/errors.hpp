#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (index syntax, rational syntax, ...).
struct parse_error : error {
    using error::error;
};

// Input outside an operation's domain (empty index where one is required,
// non-admissible index, composite modulus, ...).
struct domain_error : error {
    using error::error;
};

// A rewrite rule was requested on a term its guard rejects.  Carries the
// text of the failed predicate.
struct rule_not_applicable : domain_error {
    explicit rule_not_applicable(const std::string& predicate)
        : domain_error("rule not applicable: " + predicate), predicate(predicate) {}
    std::string predicate;
};

// An internal invariant was breached.  Reaching this from valid inputs is a
// bug; the command-line tool maps it to exit code 3.
struct invariant_violation : error {
    using error::error;
};

// A numerically divergent object was asked for a finite value.
struct divergence_error : domain_error {
    using domain_error::domain_error;
};

// Replaying a derivation trace failed at a specific step.
struct replay_error : error {
    replay_error(std::size_t step, const std::string& what)
        : error("replay failed at step " + std::to_string(step) + ": " + what),
          step(step) {}
    std::size_t step;
};

} // namespace mzv
