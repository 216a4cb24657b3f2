#pragma once

#include <iosfwd>

#include "grl/grl.hpp"
#include "grl/quantum.hpp"

namespace grl::fixtures {

/// One bundled worked example with its expected outcomes.
struct WorkedExample {
    std::string name;
    std::string label;  // e.g. "[7,2,5]_9"
    GrlSpec spec;
    bool hso_expected = false;
    bool nmds_expected = false;
    int d_expected = 0;
    bool enumerate_d = true;  // false: distance certified via the NMDS criterion
};

GrlSpec example1_spec();  // [7,2,5]_9,  s=2
GrlSpec example2_spec();  // [7,3,4]_9,  s=2, Hermitian self-orthogonal
GrlSpec example3_spec();  // [6,3,3]_9,  s=3, Hermitian self-orthogonal
GrlSpec example4_spec();  // [20,4,16]_25, s=2, family-1 instance
GrlSpec example5_spec();  // [10,3,7]_25,  s=2, family-2 instance
GrlSpec example6_spec();  // [62,6,56]_81, s=2, family-1 instance

/// GF(81) presented through its subfield GF(9) = GF(3)(r), r^2 = -1, and
/// w with w^2 = r + 1, normalized into a single GF(3^4); g = r + w is a
/// primitive element. Found by deterministic search over the sign choices.
struct TowerGF81 {
    Field f81;
    Elt r = 0;   // square root of -1 spanning the GF(9) subfield
    Elt w = 0;   // square root of r + 1
    Elt g = 0;   // r + w, primitive
};

TowerGF81 example6_tower();

std::vector<WorkedExample> worked_examples();

/// Replays every bundled example, printing one PASS/FAIL line each.
/// Returns false when anything failed.
bool replay_worked_examples(std::ostream& out);

}  // namespace grl::fixtures
