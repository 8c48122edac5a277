#include "monolab/report.hpp"

namespace monolab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "unknown";
    }
}

nlohmann::json PropertyReport::to_json() const {
    return nlohmann::json{{"property", property},
                          {"verdict", to_string(verdict)},
                          {"witness", witness},
                          {"detail", detail},
                          {"steps", steps},
                          {"elapsed_ms", elapsed_ms}};
}

}  // namespace monolab
