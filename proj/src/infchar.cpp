#include "unipcert/infchar.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace unipcert {

InfChar::InfChar(std::vector<int> doubled, WeylKind kind)
    : doubled_(std::move(doubled)), kind_(kind) {
  bool has_zero = false;
  int negatives = 0;
  for (int& x : doubled_) {
    if (x == 0) has_zero = true;
    if (x < 0) {
      ++negatives;
      x = -x;
    }
  }
  std::sort(doubled_.begin(), doubled_.end(), std::greater<int>());
  // Dominant representative for D without zeros keeps the sign parity.
  if (kind_ == WeylKind::D && !has_zero && negatives % 2 != 0 &&
      !doubled_.empty())
    doubled_.back() = -doubled_.back();
}

bool InfChar::integral() const {
  for (int x : doubled_)
    if (x % 2 != 0) return false;
  return true;
}

std::string doubled_to_string(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string InfChar::str() const {
  std::string out;
  for (size_t i = 0; i < doubled_.size(); ++i) {
    if (i) out += ',';
    out += doubled_to_string(doubled_[i]);
  }
  return out;
}

bool equal_mod_w(const InfChar& a, const InfChar& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("equal_mod_w: size mismatch");
  if (a.kind() != b.kind())
    throw std::invalid_argument("equal_mod_w: Weyl kind mismatch");
  return a.doubled() == b.doubled();
}

bool equal_mod_w_abs(const InfChar& a, const InfChar& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("equal_mod_w_abs: size mismatch");
  auto abs_sorted = [](const InfChar& x) {
    std::vector<int> v = x.doubled();
    for (int& e : v) e = std::abs(e);
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
  };
  return abs_sorted(a) == abs_sorted(b);
}

InfChar concat(const InfChar& a, const std::vector<int>& doubled_fragment) {
  std::vector<int> all = a.doubled();
  all.insert(all.end(), doubled_fragment.begin(), doubled_fragment.end());
  return InfChar(std::move(all), a.kind());
}

}  // namespace unipcert
