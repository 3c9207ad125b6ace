// Walks one 1-form on R^2 through the simplicial route to its exterior
// derivative and prints every intermediate object.

#include <iostream>

#include <nilform/nilform.hpp>

using namespace nilform;

int main() {
    const int n = 2;

    // w = x2 dx1 + x1^2 dx2
    DForm w(n, 1);
    w.add({1}, Poly::var(base_var(2)));
    w.add({2}, Poly::var(base_var(1)).pow(2));
    std::cout << "w                = " << to_string(w) << "\n";

    const InfElement rep = psi(w);
    std::cout << "psi(w)           = " << to_string(rep) << "\n";

    const InfElement moved = inf_map(coface(0, 1), rep);
    std::cout << "d^0 psi(w)       = " << to_string(moved) << "\n";

    const InfElement reduced = normalized_class(moved);
    std::cout << "normalized class = " << to_string(reduced) << "\n";

    const DForm via_simplices = phi(reduced);
    const DForm via_textbook = exterior_derivative(w);
    std::cout << "phi . d0 . psi   = " << to_string(via_simplices) << "\n";
    std::cout << "exterior deriv   = " << to_string(via_textbook) << "\n";
    std::cout << (via_simplices == via_textbook ? "routes agree, exactly"
                                                : "MISMATCH")
              << "\n";

    // the same comparison over the whole desk-scale grid
    const CheckReport report = theorem_check(n, 2, 2, 40, 2024);
    std::cout << "\n" << report.to_text();
    return report.pass() ? 0 : 1;
}
