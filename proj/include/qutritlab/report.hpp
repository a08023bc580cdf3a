#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qutritlab/linalg.hpp"

namespace qutritlab {

enum class Verdict { Separable, Nonseparable, Boundary };

std::string to_string(Verdict v);

// One term of an explicit separable decomposition: either a pure product
// state (|a> + z|b>)/sqrt2 (x) (|a> + z*|b>)/sqrt2, or the maximally mixed
// token standing for the product of maximally mixed marginals.
struct DecompositionEntry {
    enum class Kind { ProductPure, MaximallyMixed };
    Kind kind = Kind::MaximallyMixed;
    int a = 0;
    int b = 0;
    linalg::Complex z{};
    double weight = 0.0;
};

// Machine-readable separability verdict for one state of a named family.
struct SeparabilityReport {
    std::string family;
    double epsilon = 0.0;
    double threshold = 0.0;
    std::string threshold_exact; // e.g. "1/4"
    Verdict verdict = Verdict::Separable;
    bool separable = true; // Boundary counts as separable
    std::vector<std::pair<std::string, double>> witnesses;
    std::vector<DecompositionEntry> decomposition;
};

} // namespace qutritlab
