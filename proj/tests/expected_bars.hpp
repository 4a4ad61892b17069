#pragma once

// Hand-checked 2x2 vertical-bars atomizations used by the golden tests.
// Atoms are written compactly: "vw1b1q1" means the segment {v, w_1, b_1, q_1}.
// Cell order is row major: (1,1)->1, (1,2)->2, (2,1)->3, (2,2)->4.

#include <vector>

namespace bars_expected {

// freest model of the structural embedding, 46 atoms
inline const std::vector<const char*> kFreest1 = {
    "g1", "g2", "g3", "g4", "h1", "h2", "h3", "h4",
    "w1g1", "w2g2", "w3g3", "w4g4",
    "b1h1", "b2h2", "b3h3", "b4h4",
    "w1b1q1", "w2b2q2", "w3b3q3", "w4b4q4",
    "b1q1g1", "b2q2g2", "b3q3g3", "b4q4g4",
    "w1q1h1", "w2q2h2", "w3q3h3", "w4q4h4",
    "w1w3n1g1g3", "w2w4n2g2g4",
    "w1w3q1n1g3h1", "w1w3b1q1n1g3", "w1w3q3n1g1h3", "w1w3b3q3n1g1",
    "w2w4b2q2n2g4", "w2w4b4q4n2g2", "w2w4q2n2g4h2", "w2w4q4n2g2h4",
    "w1w3b1q1q3n1h3", "w1w3b1b3q1q3n1", "w1w3q1q3n1h1h3", "w1w3b3q1q3n1h1",
    "w2w4b2b4q2q4n2", "w2w4b2q2q4n2h4", "w2w4b4q2q4n2h2", "w2w4q2q4n2h2h4",
};

// freest solution model for the grid b,w / b,w under the structural embedding
inline const std::vector<const char*> kSol1 = {
    "g1", "g2", "g3", "g4", "h1", "h2", "h3", "h4",
    "w1g1", "w3g3", "b2h2", "b4h4",
    "w1b1q1", "w2b2q2", "w3b3q3", "w2q2h2", "w4b4q4", "b1q1g1",
    "w4q4h4", "b3q3g3",
    "w1w3n1g1g3", "w1w3b1q1n1g3", "w1w3b3q3n1g1", "w1w3b1b3q1q3n1",
    "w2w4b2b4q2q4n2", "w2w4b2q2q4n2h4", "w2w4b4q2q4n2h2", "w2w4q2q4n2h2h4",
};

// freest model of the example-driven embedding, 68 atoms
inline const std::vector<const char*> kFreest2 = {
    "g1", "g2", "g3", "g4", "h1", "h2", "h3", "h4",
    "w1g1", "w2g2", "w3g3", "w4g4",
    "b1h1", "b2h2", "b3h3", "b4h4",
    "w1b1q1", "w2b2q2", "w3b3q3", "w4b4q4",
    "b1q1g1", "b2q2g2", "b3q3g3", "b4q4g4",
    "w1q1h1", "w2q2h2", "w3q3h3", "w4q4h4",
    "vw1b1q1", "vw2b2q2", "vw3b3q3", "vw4b4q4",
    "vb1b2q1g1h2", "vb1b2q2g2h1", "vb1b4q1g1h4", "vb1b4q4g4h1",
    "vb2b3q2g2h3", "vb2b3q3g3h2", "vb3b4q3g3h4", "vb3b4q4g4h3",
    "vb1b2q1q2g1g2", "vb1b4q1q4g1g4", "vb2b3q2q3g2g3", "vb3b4q3q4g3g4",
    "vw1w2b2q1g2h1h2", "vw2w3b2q3g2h2h3", "vw2b2b4q4g2g4h2",
    "vw2w4b2q4g2h2h4", "vw1w2b1q2g1h1h2", "vw2w3b3q2g3h2h3",
    "vw2b1b4q2h1h2h4", "vw2b3b4q2h2h3h4", "vw2w4b4q2g4h2h4",
    "vw1w3b1q3g1h1h3", "vw1b1b3q3g1g3h1", "vw1w4b1q4g1h1h4",
    "vw3b1b3q1g1g3h3", "vw3b1b2q3h1h2h3", "vw3b1b4q3h1h3h4",
    "vw4b1b2q4h1h2h4", "vw1w3b3q1g3h1h3", "vw3w4b3q4g3h3h4",
    "vw1b3b4q1h1h3h4", "vw1b2b3q1h1h2h3", "vw4b2b3q4h2h3h4",
    "vw1w4b4q1g4h1h4", "vw4b2b4q2g2g4h4", "vw3w4b4q3g4h3h4",
};

// freest solution model for the same grid under the example-driven embedding
inline const std::vector<const char*> kSol2 = {
    "g1", "g2", "g3", "g4", "h1", "h2", "h3", "h4",
    "w1g1", "w3g3", "b2h2", "b4h4",
    "w1b1q1", "w2b2q2", "w3b3q3", "w2q2h2", "w4b4q4", "b1q1g1",
    "w4q4h4", "b3q3g3",
    "vw1b1q1", "vw2b2q2", "vw3b3q3", "vw4b4q4",
    "vb1b2q1g1h2", "vb1b4q1g1h4", "vb2b3q3g3h2", "vb3b4q3g3h4",
};

// union of the freest solution models of the example-driven embedding, 44 atoms
inline const std::vector<const char*> kUnion2 = {
    "g1", "g2", "g3", "g4", "h1", "h2", "h3", "h4",
    "w1g1", "w2g2", "w3g3", "w4g4",
    "b1h1", "b2h2", "b3h3", "b4h4",
    "w1b1q1", "w2b2q2", "w3b3q3", "w4b4q4",
    "b1q1g1", "b2q2g2", "b3q3g3", "b4q4g4",
    "w1q1h1", "w2q2h2", "w3q3h3", "w4q4h4",
    "vw1b1q1", "vw2b2q2", "vw3b3q3", "vw4b4q4",
    "vb1b2q1g1h2", "vb1b2q2g2h1", "vb1b4q1g1h4", "vb1b4q4g4h1",
    "vb2b3q3g3h2", "vb2b3q2g2h3", "vb3b4q3g3h4", "vb3b4q4g4h3",
    "vb1b2q1q2g1g2", "vb1b4q1q4g1g4", "vb2b3q2q3g2g3", "vb3b4q3q4g3g4",
};

// interpretation restriction of the shared solution model, 8 atoms
inline const std::vector<const char*> kSolRestricted = {
    "w1", "w3", "b2", "b4", "w2q2", "b1q1", "w4q4", "b3q3",
};

// atom-set restriction of the structural freest model, 38 distinct segments
inline const std::vector<const char*> kSetA = {
    "w1", "w2", "w3", "w4", "b1", "b2", "b3", "b4",
    "w1q1", "w1w3", "w2w4", "w2q2", "w3q3", "b1q1", "w4q4",
    "b2q2", "b3q3", "b4q4",
    "w1b1q1", "w1w3q1", "w1w3q3", "w2w4q2", "w2w4q4", "w2b2q2",
    "w3b3q3", "w4b4q4",
    "w1w3b1q1", "w1w3q1q3", "w1w3b3q3", "w2w4b2q2", "w2w4b4q4",
    "w2w4q2q4",
    "w1w3b1q1q3", "w1w3b3q1q3", "w2w4b2q2q4", "w2w4b4q2q4",
    "w1w3b1b3q1q3", "w2w4b2b4q2q4",
};

// atom-set restriction of the example-driven union, 32 distinct segments
inline const std::vector<const char*> kSetB = {
    "w1", "w2", "w3", "w4", "b1", "b2", "b3", "b4",
    "w1q1", "w2q2", "w3q3", "b1q1", "w4q4", "b2q2", "b3q3", "b4q4",
    "w1b1q1", "w2b2q2", "w3b3q3",
    "b1b2q1", "b1b2q2", "b1b4q1", "w4b4q4", "b2b3q2", "b2b3q3",
    "b1b4q4", "b3b4q3", "b3b4q4",
    "b1b2q1q2", "b1b4q1q4", "b2b3q2q3", "b3b4q3q4",
};

inline const std::vector<const char*> kAMinusB = {
    "w1w3", "w2w4",
    "w1w3q1", "w1w3q3", "w2w4q2", "w2w4q4",
    "w1w3b1q1", "w1w3q1q3", "w1w3b3q3", "w2w4b2q2", "w2w4b4q4",
    "w2w4q2q4",
    "w1w3b1q1q3", "w1w3b3q1q3", "w2w4b2q2q4", "w2w4b4q2q4",
    "w1w3b1b3q1q3", "w2w4b2b4q2q4",
};

inline const std::vector<const char*> kBMinusA = {
    "b1b2q1", "b1b2q2", "b1b4q1", "b2b3q2", "b2b3q3", "b1b4q4",
    "b3b4q3", "b3b4q4",
    "b1b2q1q2", "b1b4q1q4", "b2b3q2q3", "b3b4q3q4",
};

inline const std::vector<const char*> kAIntersectB = {
    "w1", "w2", "w3", "w4", "b1", "b2", "b3", "b4",
    "w1q1", "w2q2", "w3q3", "b1q1", "w4q4", "b2q2", "b3q3", "b4q4",
    "w1b1q1", "w2b2q2", "w3b3q3", "w4b4q4",
};

// the 24 atoms of the example-driven freest model external to every solution
inline const std::vector<const char*> kExternal2 = {
    "vw1w2b2q1g2h1h2", "vw2w3b2q3g2h2h3", "vw2b2b4q4g2g4h2",
    "vw2w4b2q4g2h2h4", "vw1w2b1q2g1h1h2", "vw2w3b3q2g3h2h3",
    "vw2b1b4q2h1h2h4", "vw2b3b4q2h2h3h4", "vw2w4b4q2g4h2h4",
    "vw1w3b1q3g1h1h3", "vw1b1b3q3g1g3h1", "vw1w4b1q4g1h1h4",
    "vw3b1b3q1g1g3h3", "vw3b1b2q3h1h2h3", "vw3b1b4q3h1h3h4",
    "vw4b1b2q4h1h2h4", "vw1w3b3q1g3h1h3", "vw3w4b3q4g3h3h4",
    "vw1b3b4q1h1h3h4", "vw1b2b3q1h1h2h3", "vw4b2b3q4h2h3h4",
    "vw1w4b4q1g4h1h4", "vw4b2b4q2g2g4h4", "vw3w4b4q3g4h3h4",
};

// small certificate models picked out of the structural freest model
inline const std::vector<const char*> kSmallCert = {
    "b2h2", "b4h4", "w1w3n1g1g3",
};
inline const std::vector<const char*> kDistinctCert = {
    "b2h2", "b4h4", "w1b1q1", "w2b2q2", "w3b3q3", "w4b4q4",
    "w1w3n1g1g3",
};

}  // namespace bars_expected
