#pragma once

#include <utility>
#include <vector>

#include "unipcert/infchar.hpp"
#include "unipcert/partition.hpp"
#include "unipcert/tableau.hpp"

namespace unipcert {

// One orbit-level real parabolic induction through GL(k,H).
struct InductionStep {
  int k = 0;
  SignedTableau source;
  SignedTableau target;
  int r = 0;        // the raised part is 2r (Sp) resp. 2r+1 (SO*)
  int a = 0;        // half the multiplicity of that part
  int a_prime = 0;  // 1 <= a' <= a
  int b = 0;        // half the total multiplicity of strictly larger parts
};

// Combinatorial data of a nonintegral special unipotent representation:
// unitary induction from base_form x GL(k_1,H) x ... x GL(k_l,H).
struct InducedDatum {
  RealForm base_form;
  std::vector<int> gl_sizes;  // k_1 >= ... >= k_l
  SignedTableau base_orbit;
  InfChar infchar;
  SignedTableau induced_orbit;
};

// All valid tableaux for the grown real form obtained by adding two boxes
// to each of the 2k largest rows of some representative of s.
std::vector<SignedTableau> raise_rows(const SignedTableau& s, int k);

// The unique raise at the parameters of the irreducibility criterion:
// k = a' + b for the part 2r (Sp) resp. 2r+1 (SO*).  Raises that are not
// unique signal a consistency failure.
InductionStep unique_raise(const SignedTableau& s, int r, int a_prime);

// Infinitesimal character of det^t on GL(k,H): 2k doubled entries
// t + (2k-1)/2, t + (2k-3)/2, ..., t - (2k-1)/2.  t is doubled.
std::vector<int> det_string(int k, int t_doubled);

// Remove all even parts of the dual (they pair up as (2k_i, 2k_i)) and
// report the GL sizes k_1 >= k_2 >= ...; the core is an even orbit of the
// smaller group.
std::pair<Partition, std::vector<int>> strip_even_parts(const Partition& dual);

// The strip-and-induce data attached to a noneven dual orbit: one datum
// per K-orbit of d(core) for the smaller real form.  Empty when the real
// form does not carry these representations.
std::vector<InducedDatum> special_unipotent_data(const Partition& dual,
                                                 const RealForm& rf);

}  // namespace unipcert
