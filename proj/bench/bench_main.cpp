// Benchmark comparing the serial reference sweep against the OpenMP kernels
// on the exhaustive hyperoctahedral enumerations used by the verifier.

#include <chrono>
#include <cstdio>
#include <map>

#include "bschur/arc.hpp"
#include "bschur/descents.hpp"
#include "bschur/signed_permutation.hpp"

using namespace bschur;

namespace {

using Multiset = std::map<std::uint32_t, long long>;

Multiset descent_stats(int n, int jobs) {
    return bn_map_reduce<Multiset>(
        n, jobs, {},
        [](Multiset& acc, const SignedPermutation& pi) {
            ++acc[des_b(pi).bits];
            ++acc[des_r(pi).bits];
        },
        [](Multiset& acc, Multiset&& other) {
            for (auto& [k, v] : other) acc[k] += v;
        });
}

long long arc_descents(int n, int jobs) {
    return bn_map_reduce<long long>(
        n, jobs, 0,
        [](long long& acc, const SignedPermutation& pi) {
            if (is_signed_arc(pi)) acc += des_b(pi).bits + 1;
        },
        [](long long& acc, long long&& other) { acc += other; });
}

long long involution_checks(int n, int jobs) {
    return bn_map_reduce<long long>(
        n, jobs, 0,
        [](long long& acc, const SignedPermutation& pi) {
            acc += phi1(phi1(pi)) == pi && des_b(pi) == des_r(phi1(pi));
        },
        [](long long& acc, long long&& other) { acc += other; });
}

template <typename Fn>
double timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Fn>
void run(const char* name, int n, Fn&& kernel) {
    const double serial = timed([&] { kernel(n, 1); });
    const double parallel = timed([&] { kernel(n, 0); });
    std::printf("%-28s n=%d  serial %8.3fs  parallel %8.3fs  speedup %.2fx\n", name, n,
                serial, parallel, serial / parallel);
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 8;
    std::printf("sweep of B_n, |B_%d| = %llu\n", n,
                static_cast<unsigned long long>(signed_permutation_count(n)));
    run("descent statistics", n, [](int rank, int jobs) { descent_stats(rank, jobs); });
    run("arc filter + descents", n, [](int rank, int jobs) { arc_descents(rank, jobs); });
    run("phi1 involution sweep", n - 1,
        [](int rank, int jobs) { involution_checks(rank, jobs); });
    return 0;
}
