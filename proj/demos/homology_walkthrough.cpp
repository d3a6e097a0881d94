// A short tour: build a nerve, inspect its Moore complex, compute homology
// by both routes, and run the horn-filling check.

#include <iostream>

#include "sgh/cycles.hpp"
#include "sgh/homotopy.hpp"
#include "sgh/iso.hpp"
#include "sgh/simplicial.hpp"

int main() {
    using namespace sgh;

    TruncatedSimplicialGroup bar = nerve(cyclicGroup(3), 3);
    std::cout << "levels of " << bar.label << ":";
    for (const auto& l : bar.levels) std::cout << " " << l.order;
    std::cout << "\n";

    MooreComplex m = moore(bar);
    std::cout << "Moore degrees:";
    for (const auto& o : m.complex.objects) std::cout << " " << o.order;
    std::cout << "\n";

    for (int n = 0; n <= bar.depth - 1; ++n) {
        Homology viaMoore = homologyMoore(bar, n);
        CoeqHomology viaCoeq = homologyCoequalizer(bar, n);
        std::cout << "H_" << n << " = " << groupName(viaMoore.group()) << " (order "
                  << viaMoore.group().order << "), coequalizer route order "
                  << viaCoeq.group().order << "\n";
    }

    KanReport kan = isKan(bar);
    std::cout << "horns checked: " << kan.hornsChecked << ", filled: " << kan.hornsFilled
              << "\n";

    AcyclicityReport ac = isAcyclic(bar);
    std::cout << (ac.acyclic ? "acyclic" : "not acyclic") << " (routes "
              << (ac.fault ? "DISAGREE" : "agree") << ")\n";
    return 0;
}
