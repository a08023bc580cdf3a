#include "qutritlab/report.hpp"

namespace qutritlab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Separable: return "SEPARABLE";
        case Verdict::Nonseparable: return "NONSEPARABLE";
        case Verdict::Boundary: return "BOUNDARY";
    }
    return "UNKNOWN";
}

} // namespace qutritlab
