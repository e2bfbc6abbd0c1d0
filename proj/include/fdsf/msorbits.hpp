#ifndef FDSF_MSORBITS_HPP
#define FDSF_MSORBITS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fdsf/zp_matrix.hpp"

namespace fdsf {

// MS = SM and M^tS = SM^t, entrywise mod p.
bool check_compat(const ZpMatrix& s, const ZpMatrix& m);

// Least k >= 1 with M^k x in the S-orbit {S^i x} of x.
long long ms_orbit_length(const std::vector<std::int64_t>& x, const ZpMatrix& s, const ZpMatrix& m);

struct Orbit {
    std::int64_t representative;        // least state encoding in the class
    std::vector<std::int64_t> members;  // ascending encodings
    long long ms_length;                // ms_orbit_length of the representative
};

// Partition of Z_p^n under the joint action of the commuting pair (M, S).
// The zero orbit is always {0} and is counted in orbit_count.
struct OrbitReport {
    std::int64_t p;
    int dim;
    std::vector<Orbit> orbits;  // ascending by representative
    long long orbit_count;
};

OrbitReport enumerate_ms_orbits(const ZpMatrix& s, const ZpMatrix& m);

struct OrbitSearchResult {
    ZpMatrix best_m;
    OrbitReport report;
    bool complete;       // false when the budget cut the enumeration short
    long long examined;  // candidate encodings examined
};

// Exhaustive search over invertible compatible M minimizing the orbit count;
// ties go to the least row-major matrix encoding. Enumeration order is by
// encoding, so the result is deterministic; with an insufficient budget the
// partial best is returned with complete = false.
OrbitSearchResult search_min_orbits(const ZpMatrix& s, long long budget = 1LL << 20);

// Orbit quotient as DOT: one node per orbit, edges for the induced action of
// M on S-classes of representatives.
std::string orbit_quotient_dot(const ZpMatrix& s, const ZpMatrix& m, const OrbitReport& report);

}  // namespace fdsf

#endif
