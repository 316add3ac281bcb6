// Computes the divisor class group of a cone given inline and prints the
// steady/splitting verdict.

#include <iostream>

#include "nccr/decision.hpp"
#include "nccr/io.hpp"

using namespace nccr;

int main() {
    // Cone over the square with vertices (+-1, +-1) at height one.
    std::vector<IntVec> rays;
    for (auto [a, b] : {std::pair{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}) {
        IntVec r;
        r.emplace_back(a);
        r.emplace_back(b);
        r.emplace_back(1);
        rays.push_back(std::move(r));
    }
    ConeData cone = validate_cone(rays, 3);
    ClassGroup cg = class_group(cone);
    std::cout << "Cl = " << format_group(cg.group) << "\n";
    DecisionReport rep = steady_splitting_decision_toric(cone);
    std::cout << "steady splitting NCCR: " << (rep.steady_splitting ? "YES" : "NO") << "\n";
    return 0;
}
