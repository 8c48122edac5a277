#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace monolab {

enum class Verdict { holds, fails, unknown };

std::string to_string(Verdict v);

/// Outcome of a property check. A fails verdict always carries a concrete
/// witness that the matching verifier can re-check.
struct PropertyReport {
    std::string property;
    Verdict verdict = Verdict::unknown;
    std::string witness;
    nlohmann::json detail = nlohmann::json::object();
    long long steps = 0;
    double elapsed_ms = 0.0;

    bool holds() const { return verdict == Verdict::holds; }
    bool fails() const { return verdict == Verdict::fails; }

    nlohmann::json to_json() const;
};

/// Thrown when a configurable search/enumeration cap is exceeded. Callers
/// that aggregate verdicts map this to Verdict::unknown, never to a guess.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monolab
