#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace unipcert {

// B = odd orthogonal, C = symplectic, D = even orthogonal.
enum class FormType { B, C, D };

std::string to_string(FormType t);

// Weakly decreasing positive integers; the Jordan type of a nilpotent orbit.
// The empty partition is the zero orbit of a rank-0 group.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Comma-separated decreasing integers, e.g. "5,3,1,1,1".  "" is empty.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  bool empty() const { return parts_.empty(); }
  int size() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int part) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

Partition transpose(const Partition& p);

// Multiplicity parity rule: B/D-partitions have even parts with even
// multiplicity, C-partitions have odd parts with even multiplicity.
bool is_type(const Partition& p, FormType t);

// Dominance-maximal FormType-partition <= p with the same total.
// Local box-moving procedure; the exhaustive dominance maximum is kept
// as a test oracle.
Partition collapse(const Partition& p, FormType t);

// All partial sums of a >= those of b.  Throws on unequal totals.
bool dominates(const Partition& a, const Partition& b);

// Middle element h of a Jacobson-Morozov triple for the orbit p: the
// largest floor(total/2) entries of the multiset  U_parts {m-1, m-3, ..., 1-m},
// sorted descending.  chi(O) = h/2 is produced by the callers that need it.
std::vector<int> jm_element(const Partition& p, FormType t);

// Every coordinate of jm_element is even (chi integral).
bool is_even_orbit(const Partition& p, FormType t);

// Complex dimension of the orbit via the classical Jordan-type formula.
long long orbit_dimension(const Partition& p, FormType t);

// transpose(p) satisfies the same FormType parity rule; Spaltenstein
// duality is involutive exactly on these.
bool is_special(const Partition& p, FormType t);

// Every column of the Ferrers diagram has even length (equivalently every
// part occurs with even multiplicity); the necessary condition for an
// orbit to meet p.
bool has_even_columns(const Partition& p);

// All partitions of n, deterministically ordered.
std::vector<Partition> partitions_of(int n);

// All partitions of `total` in which every part occurs with even
// multiplicity (equivalently, all columns even).  Empty for odd totals.
std::vector<Partition> even_multiplicity_partitions(int total);

}  // namespace unipcert
