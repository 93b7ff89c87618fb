#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unipcert/duality.hpp"
#include "unipcert/infchar.hpp"
#include "unipcert/partition.hpp"
#include "unipcert/tableau.hpp"

namespace unipcert {

// The promotion S -> S_1: exempt from tableau validity, single-parity rows
// only (odd lengths for Sp, even for SO*).
class PromotedTableau {
 public:
  PromotedTableau(std::vector<Row> rows, RealForm form,
                  std::optional<SignedTableau> source = std::nullopt);

  const std::vector<Row>& rows() const { return rows_; }
  const RealForm& form() const { return form_; }
  const std::optional<SignedTableau>& source() const { return source_; }

  Partition shape() const;
  int count(int len, Sign lead) const;
  std::pair<int, int> signature() const;
  std::string str() const;

  friend bool operator==(const PromotedTableau& a, const PromotedTableau& b) {
    return a.rows_ == b.rows_ && a.form_ == b.form_;
  }

 private:
  std::vector<Row> rows_;
  RealForm form_;
  std::optional<SignedTableau> source_;
};

// The sequence (p_0,q_0),(p_1,q_1),...,(p_r,q_r) attached to a theta-stable
// parabolic with Levi Sp(p_0,q_0) x U(p_1,q_1) x ... (Sp) or
// SO*(2(p_0+q_0)) x U(p_1,q_1) x ... (SO*).
struct LeviSequence {
  Family family = Family::Sp;
  std::vector<std::pair<int, int>> pq;  // index 0 is the terminal factor

  int p_sum() const;
  int q_sum() const;
  int rank() const;  // sum of p_i + q_i

  friend bool operator==(const LeviSequence&, const LeviSequence&) = default;
};

struct AqDatum {
  LeviSequence levi;
  // One doubled scalar per Levi factor, aligned with levi.pq; entry 0 is
  // always 0 (the Sp/SO* factor carries the trivial character).
  std::vector<int> lambda_doubled;
  InfChar infchar;  // lambda + rho
  bool weakly_fair = false;
  SignedTableau dense_orbit;
  int multiplicity = 1;
};

// Pairs of even rows (m+, m-) become ((m+1)+, (m-1)-); odd rows are kept.
// Parities swap for SO*; zero-length rows are dropped.  Requires each
// even (Sp) resp. odd (SO*) part to have multiplicity at most 2.
PromotedTableau promote(const SignedTableau& s);

// Read (p_i, q_i) from the lead signs of the longest rows, trim one box
// from each end of those rows, recurse.  The terminal pair comes from the
// fully trimmed residue.
LeviSequence levi_sequence(const PromotedTableau& s1);

// Stack the signed columns c(p_r,q_r),...,c(p_1,q_1), the middle
// c(2 p_0, 2 q_0), then the mirror flank (sign-swapped for SO*), with row
// signs forced by alternation from each row's leftmost box.  Inconsistent
// sequences raise an alternation-conflict error.
PromotedTableau reconstruct_dense(const LeviSequence& levi);

// Inverse of promote: re-merge each ((m+1)+, (m-1)-) pair whose sign class
// has odd multiplicity; the output passes validate.
SignedTableau collapse_promoted(const PromotedTableau& s1);

// Shape of the complex orbit induced from the corresponding parabolic:
// unsigned column stack collapsed for the ambient type (C for Sp, D for SO*).
Partition induced_shape(const LeviSequence& levi);

// dim G.(u cap p) == dim G.u at the level of Jordan types.
bool birational_check(const SignedTableau& s);

// Determine the character scalars t_i making lambda + rho represent
// chi'(shape) and verify the weakly fair inequalities on the roots of u.
AqDatum solve_lambda(const SignedTableau& s);

// solve_lambda plus the dense-orbit round-trip assertion.
AqDatum aq_datum(const SignedTableau& s);

}  // namespace unipcert
