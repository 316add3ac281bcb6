// Builds the hexagonal dimer model of a cyclic quotient and checks that its
// dual quiver is the McKay quiver of the defining data.

#include <iostream>

#include "nccr/decision.hpp"
#include "nccr/io.hpp"
#include "nccr/quiver.hpp"

using namespace nccr;

int main() {
    FinAbGroup g;
    g.torsion.emplace_back(7);
    std::vector<GroupElement> weights;
    for (long long r : {1, 2, 4})
        weights.push_back(make_element(g, {}, IntVec{Int(r)}));

    DimerModel model = generate_hexagonal_dimer(g, weights);
    std::cout << "faces: " << model.num_faces() << ", hexagonal: "
              << (all_faces_hexagonal(model) ? "yes" : "no") << ", consistent: "
              << (is_consistent(model).consistent ? "yes" : "no") << "\n";

    bool iso = quiver_isomorphic(dual_quiver(model).quiver, mckay_quiver(g, weights));
    std::cout << "dual quiver is the McKay quiver: " << (iso ? "yes" : "no") << "\n";

    DimerReport rep = steady_decision_dimer(model);
    std::cout << "steady: " << (rep.steady ? "yes" : "no") << ", group "
              << format_group(rep.quotient ? rep.quotient->group : FinAbGroup{}) << "\n";
    return 0;
}
