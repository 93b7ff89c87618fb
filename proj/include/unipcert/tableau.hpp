#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unipcert/partition.hpp"

namespace unipcert {

enum class Family { Sp, SOStar };

std::string to_string(Family f);

enum class Sign { Plus, Minus };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// A group of identical rows: `mult` rows of length `len` whose leftmost
// box carries `lead`; the remaining signs alternate.
struct Row {
  int len = 0;
  Sign lead = Sign::Plus;
  int mult = 0;

  friend bool operator==(const Row&, const Row&) = default;
};

// Canonical row order: length descending, then + before -.
bool row_before(const Row& a, const Row& b);

struct RealForm {
  Family family = Family::Sp;
  int p = 0;  // Sp only
  int q = 0;  // Sp only
  int n = 0;  // complex rank (p+q for Sp)

  static RealForm sp(int p, int q);
  static RealForm so_star(int n);

  int rank() const { return n; }
  int boxes() const { return 2 * n; }
  std::string str() const;  // "Sp(2,1)" or "SO*(6)"

  friend bool operator==(const RealForm&, const RealForm&) = default;
};

struct Violation {
  std::string rule;
  int length = 0;
  std::string detail;
};

// A signed Young tableau: a nilpotent K-orbit on p for the given real
// form.  Rows are stored canonically (length desc, + before -, groups
// merged); equality is equality of the canonical form.
class SignedTableau {
 public:
  SignedTableau() = default;
  SignedTableau(std::vector<Row> rows, RealForm form);

  // Grammar (bit-exact): whitespace-separated groups <length><sign>[^<mult>],
  // e.g. "3+^2 3-^2 2+ 2- 1+^2".  Duplicate (length, sign) groups are
  // rejected; the printer always emits canonical form.
  static SignedTableau parse(std::string_view text, RealForm form);

  const std::vector<Row>& rows() const { return rows_; }
  const RealForm& form() const { return form_; }

  Partition shape() const;
  int boxes() const;
  std::pair<int, int> signature() const;  // (# plus boxes, # minus boxes)
  int count(int len, Sign lead) const;
  int row_count() const;  // rows counted with multiplicity

  std::vector<Violation> validate() const;
  bool is_valid() const { return validate().empty(); }

  std::string str() const;

  friend bool operator==(const SignedTableau&, const SignedTableau&) = default;
  friend bool operator<(const SignedTableau& a, const SignedTableau& b);

 private:
  std::vector<Row> rows_;
  RealForm form_;
};

// All canonical valid tableaux of the given shape for rf, deterministically
// ordered.  Throws if the shape is not an even-column Jordan type of the
// right size for rf's complexification.
std::vector<SignedTableau> enumerate_K_orbits(const RealForm& rf,
                                              const Partition& shape);

// All shapes of the right total with even columns admitting at least one
// valid tableau for rf.
std::vector<Partition> shapes_meeting_p(const RealForm& rf);

}  // namespace unipcert
