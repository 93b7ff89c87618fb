#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unipcert/induction.hpp"
#include "unipcert/infchar.hpp"
#include "unipcert/parabolic.hpp"
#include "unipcert/partition.hpp"
#include "unipcert/tableau.hpp"

namespace unipcert {

struct UnipotentRecord {
  RealForm realform;
  SignedTableau orbit;
  Partition shape;
  InfChar infchar;                    // chi'(O)
  std::string annihilator_tag;
  int av_multiplicity = 1;
  std::optional<Partition> dual_even;  // d(O) when it is even and d(d(O)) = O
};

// The proof object: a direct weakly fair datum, a chain of irreducible
// unitary inductions ending in one, or the nonintegral induced datum.
struct UnitarityCertificate {
  enum class Kind { Direct, Chain, Nonintegral };
  Kind kind = Kind::Direct;
  std::vector<InductionStep> steps;
  std::optional<AqDatum> terminal;
  std::optional<InducedDatum> nonintegral;
};

// One record per K-orbit of the shape.  The shape must meet p for rf.
std::vector<UnipotentRecord> unip_prime(const RealForm& rf,
                                        const Partition& shape);

// Replay of the reduction chain: repeatedly apply the unique raise to the
// highest-multiplicity offending part (largest part on ties) until the
// multiplicity bound holds, then attach the weakly fair datum.
UnitarityCertificate certify(const SignedTableau& s);

struct SpecialEntry {
  std::optional<UnipotentRecord> record;   // integral route
  std::optional<InducedDatum> datum;       // nonintegral route
  UnitarityCertificate certificate;
};

// Catalog for a dual orbit: even duals go through unip_prime + certify,
// noneven duals through special_unipotent_data.
std::vector<SpecialEntry> special_catalog(const RealForm& rf,
                                          const Partition& dual);

// Exact count of labeled domino tilings of the shape.
//
// Pinned convention: box labels weakly decrease along rows; labels
// strictly decrease down columns between boxes of distinct dominoes; for
// every value v the boxes labeled >= v form a Young diagram with all
// columns of even height; and the distinct labels in each column form a
// run of consecutive values.
long long domino_count(const Partition& shape, const InfChar& labels);

}  // namespace unipcert
