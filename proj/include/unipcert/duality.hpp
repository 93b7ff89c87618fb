#pragma once

#include <vector>

#include "unipcert/infchar.hpp"
#include "unipcert/partition.hpp"
#include "unipcert/tableau.hpp"

namespace unipcert {

enum class DualDirection { CtoB, BtoC, DtoD };

// Spaltenstein duality on Jordan types.
//   C->B: add 1 to the largest part, B-collapse, transpose.
//   B->C: subtract 1 from the largest part, transpose, C-collapse.
//   D->D: transpose, D-collapse.
Partition spaltenstein_dual(const Partition& p, DualDirection dir);

// chi'(O) in construction order: one string per column c_i = 2 d_i of the
// shape.  Sp: (1,...,d_i) for odd i, (0,...,d_i - 1) for even i; the
// parities are swapped for SO*.  Doubled entries.  Throws on odd columns.
std::vector<int> chi_prime_raw(const Partition& shape, Family family);

// chi'(O) as an infinitesimal character (always integral).
InfChar chi_prime(const Partition& shape, Family family);

// chi(O^vee) = h^vee / 2 from the Jacobson-Morozov element of the dual.
InfChar chi_of_dual(const Partition& dual, FormType t);

// The largest part k of the shape determines the part-occurrence test of
// the evenness criterion: every even (Sp) resp. odd (SO*) part <= k occurs.
bool part_occurrence_criterion(const Partition& shape, Family family);

struct IcCounterexample {
  Partition shape;
  bool chi_match = false;
  bool dual_even = false;
  bool parts_criterion = false;
};

struct IcReport {
  Family family = Family::Sp;
  int n = 0;
  long long shapes_checked = 0;
  std::vector<IcCounterexample> counterexamples;
};

// Confirms, for every even-column shape at rank n, the three-way
// equivalence between chi(d(O)) = chi'(O) mod W, evenness of d(O), and
// the part-occurrence criterion.
IcReport check_ic_equivalence(Family family, int n);

}  // namespace unipcert
