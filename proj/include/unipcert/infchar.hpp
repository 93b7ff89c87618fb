#pragma once

#include <string>
#include <vector>

namespace unipcert {

// Weyl-group flavor for equivalence testing.  B and C behave identically
// (all sign changes allowed); D restricts to evenly many sign changes.
enum class WeylKind { BC, D };

// A multiset of half-integers up to Weyl-group equivalence, stored as
// doubled integers so that all arithmetic is exact.  Entries are kept in
// the dominant representative: absolute values sorted descending, and for
// kind D with no zero entry the sign parity is carried on the last entry.
class InfChar {
 public:
  InfChar() : kind_(WeylKind::BC) {}
  InfChar(std::vector<int> doubled, WeylKind kind);

  const std::vector<int>& doubled() const { return doubled_; }
  WeylKind kind() const { return kind_; }
  int size() const { return static_cast<int>(doubled_.size()); }

  // All entries integral (doubled entries even).
  bool integral() const;

  // Comma-separated, halves rendered as k/2, e.g. "1,1/2,1/2".
  std::string str() const;

  friend bool operator==(const InfChar&, const InfChar&) = default;

 private:
  std::vector<int> doubled_;
  WeylKind kind_;
};

// Same Weyl orbit.  Throws on size or kind mismatch.
bool equal_mod_w(const InfChar& a, const InfChar& b);

// Equality of absolute-value multisets only, ignoring the type D sign
// refinement.  Used where a zero-free D character is attached to a bare
// Jordan type: an all-even-parts partition labels two orbits whose
// characters differ exactly by the sign parity.
bool equal_mod_w_abs(const InfChar& a, const InfChar& b);

// a's entries together with a doubled fragment, as one infinitesimal
// character of the larger group.
InfChar concat(const InfChar& a, const std::vector<int>& doubled_fragment);

std::string doubled_to_string(int doubled);

}  // namespace unipcert
