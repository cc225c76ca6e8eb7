// Prints the period decision for the Grover and Fourier walks on C_N.
//
//   period_table [N_MAX]

#include <cstdio>
#include <cstdlib>

#include "cyclowalk/period.hpp"

int main(int argc, char** argv) {
    using namespace cyclowalk;
    const unsigned n_max = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 12;

    std::printf("%4s  %-8s  %-9s  %s\n", "N", "coin", "shift", "result");
    for (unsigned n = 2; n <= n_max; ++n)
        for (const char* name : {"grover", "fourier"})
            for (auto shift : {ShiftType::Moving, ShiftType::FlipFlop}) {
                const WalkSpec spec(n, name[0] == 'g' ? grover_coin() : fourier_coin(), shift);
                const auto r = walk_period(spec, 256);
                std::printf("%4u  %-8s  %-9s  ", n, name, to_string(shift).c_str());
                if (const auto* f = std::get_if<Finite>(&r)) {
                    std::printf("T = %llu\n", static_cast<unsigned long long>(f->period));
                } else if (const auto* c = std::get_if<CertifiedInfinite>(&r)) {
                    std::printf("not periodic, k = %u: %s\n", c->certificate.k,
                                c->certificate.reduced_form.to_string().c_str());
                } else {
                    std::printf("no period up to 256\n");
                }
            }
}
