// Symplectic automorphisms of prime order 23 on manifolds of K3^[7] type:
// print every row, then the manifold indices up to 60 where (23, 2, 1) is ambiguous.

#include <iostream>

#include "isoclass/isoclass.hpp"

int main()
{
    using namespace isoclass;

    for (const auto& row : ihs::classify(DeformationKind::K3n, 23, 7)) {
        std::cout << "p=" << row.p << " r=" << row.r << " a=" << row.a;
        if (row.div)
            std::cout << " div=" << *row.div;
        std::cout << " invariant=" << row.invariant_genus.to_string();
        if (row.orbits.kind == OrbitInfo::Kind::count)
            std::cout << " orbits=" << row.orbits.count;
        else if (row.orbits.kind == OrbitInfo::Kind::unknown)
            std::cout << " orbits=unknown";
        std::cout << (row.verdict.lattice_orbit_ambiguous ? " ambiguous" : "") << '\n';
    }

    std::cout << "ambiguous n:";
    for (auto n : ihs::ambiguous_n(DeformationKind::K3n, 23, 2, 1, std::nullopt, 60))
        std::cout << ' ' << n;
    std::cout << '\n';
}
