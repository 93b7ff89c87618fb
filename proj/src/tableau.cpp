#include "unipcert/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace unipcert {

std::string to_string(Family f) {
  return f == Family::Sp ? "sp" : "sostar";
}

bool row_before(const Row& a, const Row& b) {
  if (a.len != b.len) return a.len > b.len;
  return a.lead < b.lead;
}

RealForm RealForm::sp(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("Sp(p,q) needs p,q >= 0");
  RealForm rf;
  rf.family = Family::Sp;
  rf.p = p;
  rf.q = q;
  rf.n = p + q;
  return rf;
}

RealForm RealForm::so_star(int n) {
  if (n < 0) throw std::invalid_argument("SO*(2n) needs n >= 0");
  RealForm rf;
  rf.family = Family::SOStar;
  rf.n = n;
  return rf;
}

std::string RealForm::str() const {
  if (family == Family::Sp)
    return "Sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return "SO*(" + std::to_string(2 * n) + ")";
}

namespace {

std::vector<Row> canonicalize(std::vector<Row> rows) {
  std::map<std::pair<int, int>, int> merged;  // (len, lead) -> mult
  for (const Row& r : rows) {
    if (r.len <= 0) throw std::invalid_argument("row length must be positive");
    if (r.mult < 0) throw std::invalid_argument("row multiplicity must be >= 0");
    if (r.mult == 0) continue;
    merged[{r.len, static_cast<int>(r.lead)}] += r.mult;
  }
  std::vector<Row> out;
  out.reserve(merged.size());
  for (const auto& [key, mult] : merged)
    out.push_back(Row{key.first, static_cast<Sign>(key.second), mult});
  std::sort(out.begin(), out.end(), row_before);
  return out;
}

}  // namespace

SignedTableau::SignedTableau(std::vector<Row> rows, RealForm form)
    : rows_(canonicalize(std::move(rows))), form_(form) {}

SignedTableau SignedTableau::parse(std::string_view text, RealForm form) {
  std::vector<Row> rows;
  std::set<std::pair<int, int>> seen;
  size_t i = 0;
  auto fail = [](size_t col, const std::string& msg) {
    throw std::invalid_argument("col " + std::to_string(col + 1) + ": " + msg);
  };
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i == text.size()) break;
    size_t start = i;
    int len = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      len = len * 10 + (text[i] - '0');
      ++i;
    }
    if (i == start) fail(i, "expected a row length");
    if (len <= 0) fail(start, "row length must be positive");
    if (i == text.size() || (text[i] != '+' && text[i] != '-'))
      fail(i, "expected '+' or '-'");
    Sign lead = text[i] == '+' ? Sign::Plus : Sign::Minus;
    ++i;
    int mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t mstart = i;
      mult = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        mult = mult * 10 + (text[i] - '0');
        ++i;
      }
      if (i == mstart) fail(i, "expected a multiplicity after '^'");
      if (mult <= 0) fail(mstart, "multiplicity must be positive");
    }
    if (!seen.insert({len, static_cast<int>(lead)}).second)
      fail(start, "duplicate row group " + std::to_string(len) + sign_char(lead));
    rows.push_back(Row{len, lead, mult});
    if (i < text.size() && text[i] != ' ' && text[i] != '\t')
      fail(i, "expected whitespace between row groups");
  }
  return SignedTableau(std::move(rows), form);
}

Partition SignedTableau::shape() const {
  std::vector<int> parts;
  for (const Row& r : rows_)
    for (int i = 0; i < r.mult; ++i) parts.push_back(r.len);
  return Partition(std::move(parts));
}

int SignedTableau::boxes() const {
  int total = 0;
  for (const Row& r : rows_) total += r.len * r.mult;
  return total;
}

std::pair<int, int> SignedTableau::signature() const {
  int plus = 0, minus = 0;
  for (const Row& r : rows_) {
    int lead_boxes = (r.len + 1) / 2;
    int other_boxes = r.len / 2;
    if (r.lead == Sign::Plus) {
      plus += r.mult * lead_boxes;
      minus += r.mult * other_boxes;
    } else {
      minus += r.mult * lead_boxes;
      plus += r.mult * other_boxes;
    }
  }
  return {plus, minus};
}

int SignedTableau::count(int len, Sign lead) const {
  for (const Row& r : rows_)
    if (r.len == len && r.lead == lead) return r.mult;
  return 0;
}

int SignedTableau::row_count() const {
  int total = 0;
  for (const Row& r : rows_) total += r.mult;
  return total;
}

std::vector<Violation> SignedTableau::validate() const {
  std::vector<Violation> out;
  std::set<int> lengths;
  for (const Row& r : rows_) lengths.insert(r.len);
  for (int len : lengths) {
    int kp = count(len, Sign::Plus);
    int km = count(len, Sign::Minus);
    if (form_.family == Family::Sp) {
      if (len % 2 == 1) {
        if (kp % 2 != 0 || km % 2 != 0)
          out.push_back({"odd-part-sign-multiplicity", len,
                         "odd length " + std::to_string(len) +
                             " has sign counts (" + std::to_string(kp) + "," +
                             std::to_string(km) + "), both must be even"});
      } else if (kp != km) {
        out.push_back({"even-part-sign-balance", len,
                       "even length " + std::to_string(len) +
                           " has sign counts (" + std::to_string(kp) + "," +
                           std::to_string(km) + "), must be equal"});
      }
    } else {
      if (len % 2 == 0) {
        if (kp % 2 != 0 || km % 2 != 0)
          out.push_back({"even-part-sign-multiplicity", len,
                         "even length " + std::to_string(len) +
                             " has sign counts (" + std::to_string(kp) + "," +
                             std::to_string(km) + "), both must be even"});
      } else if (kp != km) {
        out.push_back({"odd-part-sign-balance", len,
                       "odd length " + std::to_string(len) +
                           " has sign counts (" + std::to_string(kp) + "," +
                           std::to_string(km) + "), must be equal"});
      }
    }
  }
  if (form_.family == Family::Sp) {
    auto [plus, minus] = signature();
    if (plus != 2 * form_.p || minus != 2 * form_.q)
      out.push_back({"signature", 0,
                     "box signature (" + std::to_string(plus) + "," +
                         std::to_string(minus) + ") differs from (" +
                         std::to_string(2 * form_.p) + "," +
                         std::to_string(2 * form_.q) + ")"});
  } else if (boxes() != form_.boxes()) {
    out.push_back({"box-count", 0,
                   "box count " + std::to_string(boxes()) + " differs from " +
                       std::to_string(form_.boxes())});
  }
  return out;
}

std::string SignedTableau::str() const {
  std::string out;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(rows_[i].len);
    out += sign_char(rows_[i].lead);
    if (rows_[i].mult > 1) {
      out += '^';
      out += std::to_string(rows_[i].mult);
    }
  }
  return out;
}

bool operator<(const SignedTableau& a, const SignedTableau& b) {
  auto key = [](const Row& r) {
    return std::tuple<int, int, int>(-r.len, static_cast<int>(r.lead), r.mult);
  };
  return std::lexicographical_compare(
      a.rows_.begin(), a.rows_.end(), b.rows_.begin(), b.rows_.end(),
      [&](const Row& x, const Row& y) { return key(x) < key(y); });
}

std::vector<SignedTableau> enumerate_K_orbits(const RealForm& rf,
                                              const Partition& shape) {
  if (shape.total() != rf.boxes())
    throw std::invalid_argument("shape has " + std::to_string(shape.total()) +
                                " boxes, expected " +
                                std::to_string(rf.boxes()));
  const Partition cols = transpose(shape);
  for (int c : cols.parts())
    if (c % 2 != 0)
      throw std::invalid_argument("shape has an odd column; it cannot meet p");
  FormType complex_type =
      rf.family == Family::Sp ? FormType::C : FormType::D;
  if (!is_type(shape, complex_type))
    throw std::invalid_argument("shape is not a valid Jordan type for " +
                                to_string(complex_type));

  // One sign-count choice per distinct length; only one parity class is free.
  std::vector<std::pair<int, int>> classes;  // (length, multiplicity)
  {
    const auto& parts = shape.parts();
    for (size_t i = 0; i < parts.size();) {
      size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      classes.push_back({parts[i], static_cast<int>(j - i)});
      i = j;
    }
  }
  std::vector<SignedTableau> out;
  std::vector<Row> rows;
  auto emit = [&]() {
    SignedTableau t(rows, rf);
    if (t.is_valid()) out.push_back(std::move(t));
  };
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == classes.size()) {
      emit();
      return;
    }
    auto [len, mult] = classes[idx];
    bool balanced =  // k+ = k- forced for this parity
        (rf.family == Family::Sp) == (len % 2 == 0);
    if (balanced) {
      int half = mult / 2;
      rows.push_back({len, Sign::Plus, half});
      rows.push_back({len, Sign::Minus, half});
      rec(idx + 1);
      rows.pop_back();
      rows.pop_back();
    } else {
      for (int kp = mult; kp >= 0; kp -= 2) {
        rows.push_back({len, Sign::Plus, kp});
        rows.push_back({len, Sign::Minus, mult - kp});
        rec(idx + 1);
        rows.pop_back();
        rows.pop_back();
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> shapes_meeting_p(const RealForm& rf) {
  std::vector<Partition> out;
  for (const Partition& shape : even_multiplicity_partitions(rf.boxes()))
    if (!enumerate_K_orbits(rf, shape).empty()) out.push_back(shape);
  return out;
}

}  // namespace unipcert
