// A short walk through each part of the library.

#include <iostream>

#include "nufact/divcalc_svg.hpp"
#include "nufact/json_io.hpp"

using namespace nufact;

int main() {
    auto g = make_group({3});
    auto s = text::parse_sequence(g, "1^3 2^3");
    std::cout << "atoms of B(Z/3):";
    for (const auto& a : atoms(g)) std::cout << "  [" << text::format_sequence(a) << "]";
    std::cout << "\nfactorizations of " << text::format_sequence(s) << ":\n";
    for (const auto& f : factorizations(s)) {
        std::cout << "  ";
        for (const auto& a : f) std::cout << "(" << text::format_sequence(a) << ")";
        std::cout << "\n";
    }

    std::cout << "\n8 in Z[w]:\n";
    for (const auto& f : element_factorizations({8, 0})) {
        std::cout << " ";
        for (const auto& y : f) std::cout << " [" << text::format_quad(y) << "]";
        std::cout << "\n";
    }

    auto p = text::parse_quat("1-2i+k");
    std::vector<QuatQ3> f{text::parse_quat("i+j"), text::parse_quat("-1-i-k")};
    std::cout << "\n(i+j)(-1-i-k) = 1-2i+k in S: " << std::boolalpha << verify_identity(f, p) << "\n";

    auto cs = tring::cycle_structure(3);
    auto q12 = tring::mul(tring::maximal_ideals(3)[0], tring::maximal_ideals(3)[1]);
    std::cout << "\nQ1 Q2 = " << text::format_matrix_bracket(q12) << "\n";
    std::cout << "divisor " << text::format_divisor(cs, tring::divisor_of(q12)) << ", compose(Q1, Q2) = "
              << text::format_divisor(cs, compose(cs, Divisor::indicator("Q1"), Divisor::indicator("Q2"))) << "\n";

    auto rep = oracle::run({});
    std::cout << "\noracle over " << rep.corpus_size << " ideals of T(3): " << (rep.all_passed() ? "all pass" : "FAILED")
              << "\n";
    return rep.all_passed() ? 0 : 1;
}
