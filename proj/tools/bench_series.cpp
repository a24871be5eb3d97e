// Timing harness for theta-product generating functions.
//
// Multiplication is schoolbook with the sparser operand in the outer loop and
// zero coefficients skipped. For a four-fold phi product at precision P the
// first factor has about sqrt(P/a) nonzeros, so each of the three products
// costs O(P^{3/2}) coefficient multiply-adds rather than O(P^2). Budget: a
// four-fold product at P = 10^4 must finish in under 2 s; typical runs take a
// few milliseconds.
//
// Usage: thetalab_bench [precision] [repetitions]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <vector>

#include "thetalab/theta.hpp"

int main(int argc, char** argv) {
    using namespace thetalab;
    const std::size_t precision = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 10000;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 5;

    const std::vector<FormTuple> forms{{1, 1, 1, 1}, {1, 1, 2, 4}, {1, 3, 3, 6}, {3, 5, 20, 32}};
    std::cout << "precision " << precision << ", " << reps << " repetitions, best time\n";
    for (const auto& form : forms) {
        for (const bool theta_n : {true, false}) {
            double best = 1e300;
            std::int64_t probe = 0;
            for (int r = 0; r < reps; ++r) {
                const auto t0 = std::chrono::steady_clock::now();
                const auto s = theta_n ? theta::n_genfun(form, precision)
                                       : theta::tprime_genfun(form, precision);
                const auto t1 = std::chrono::steady_clock::now();
                probe += s.coeff(precision - 1);
                best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
            }
            std::cout << (theta_n ? "N  " : "t' ") << "(" << form.to_string() << ")  " << std::fixed
                      << std::setprecision(3) << best << " ms  [checksum " << probe << "]\n";
        }
    }
    return 0;
}
