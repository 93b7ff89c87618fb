#include "unipcert/catalog.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "unipcert/duality.hpp"

namespace unipcert {

std::vector<UnipotentRecord> unip_prime(const RealForm& rf,
                                        const Partition& shape) {
  Family fam = rf.family;
  std::vector<SignedTableau> orbits = enumerate_K_orbits(rf, shape);
  if (orbits.empty())
    throw std::invalid_argument("unip_prime: shape " + shape.str() +
                                " does not meet p for " + rf.str());
  InfChar chi = chi_prime(shape, fam);
  DualDirection up =
      fam == Family::Sp ? DualDirection::CtoB : DualDirection::DtoD;
  DualDirection down =
      fam == Family::Sp ? DualDirection::BtoC : DualDirection::DtoD;
  FormType dual_type = fam == Family::Sp ? FormType::B : FormType::D;

  Partition dual = spaltenstein_dual(shape, up);
  std::optional<Partition> dual_even;
  if (is_even_orbit(dual, dual_type) &&
      spaltenstein_dual(dual, down) == shape)
    dual_even = dual;

  std::string tag = "maximal primitive ideal over " + chi.str() +
                    "; AV = closure of " + shape.str();
  std::vector<UnipotentRecord> out;
  for (const SignedTableau& orbit : orbits) {
    UnipotentRecord rec;
    rec.realform = rf;
    rec.orbit = orbit;
    rec.shape = shape;
    rec.infchar = chi;
    rec.annihilator_tag = tag;
    rec.av_multiplicity = 1;
    rec.dual_even = dual_even;
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

// Part of the moving parity with multiplicity > 2 to attack next: largest
// multiplicity, then largest part (parts scan in decreasing order, so the
// first strict maximum wins both tie rules).
std::optional<int> pick_offending_part(const SignedTableau& s) {
  Family fam = s.form().family;
  int moving_parity = fam == Family::Sp ? 0 : 1;
  std::optional<int> part;
  int best_mult = 2;
  Partition shape = s.shape();
  const auto& parts = shape.parts();
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int mult = static_cast<int>(j - i);
    if (parts[i] % 2 == moving_parity && mult > best_mult) {
      best_mult = mult;
      part = parts[i];
    }
    i = j;
  }
  return part;
}

}  // namespace

UnitarityCertificate certify(const SignedTableau& s) {
  if (!s.is_valid())
    throw std::invalid_argument("certify: tableau is not valid for " +
                                s.form().str());
  Family fam = s.form().family;
  UnitarityCertificate cert;
  SignedTableau cur = s;
  for (int guard = 0;; ++guard) {
    if (guard > 10000)
      throw std::logic_error("certify: reduction chain does not terminate");
    std::optional<int> part = pick_offending_part(cur);
    if (!part) break;
    int r = *part / 2;  // part = 2r (Sp) resp. 2r+1 (SO*)
    InductionStep step = unique_raise(cur, r, 1);
    InfChar lhs = chi_prime(step.target.shape(), fam);
    InfChar rhs =
        concat(chi_prime(cur.shape(), fam), det_string(step.k, 1));
    if (!equal_mod_w(lhs, rhs))
      throw std::logic_error(
          "certify: chain step fails the infinitesimal character identity");
    cert.steps.push_back(step);
    cur = step.target;
  }
  cert.terminal = aq_datum(cur);
  cert.kind = cert.steps.empty() ? UnitarityCertificate::Kind::Direct
                                 : UnitarityCertificate::Kind::Chain;
  return cert;
}

std::vector<SpecialEntry> special_catalog(const RealForm& rf,
                                          const Partition& dual) {
  Family fam = rf.family;
  FormType dual_type = fam == Family::Sp ? FormType::B : FormType::D;
  DualDirection down =
      fam == Family::Sp ? DualDirection::BtoC : DualDirection::DtoD;
  int expected_boxes = fam == Family::Sp ? 2 * rf.n + 1 : 2 * rf.n;
  if (dual.total() != expected_boxes)
    throw std::invalid_argument("special_catalog: dual has " +
                                std::to_string(dual.total()) +
                                " boxes, expected " +
                                std::to_string(expected_boxes));
  if (!is_type(dual, dual_type))
    throw std::invalid_argument("special_catalog: dual is not a " +
                                to_string(dual_type) + "-partition");

  std::vector<SpecialEntry> out;
  if (is_even_orbit(dual, dual_type)) {
    Partition shape = spaltenstein_dual(dual, down);
    for (UnipotentRecord& rec : unip_prime(rf, shape)) {
      SpecialEntry entry;
      entry.certificate = certify(rec.orbit);
      entry.record = std::move(rec);
      out.push_back(std::move(entry));
    }
  } else {
    for (InducedDatum& datum : special_unipotent_data(dual, rf)) {
      SpecialEntry entry;
      entry.certificate.kind = UnitarityCertificate::Kind::Nonintegral;
      entry.certificate.nonintegral = datum;
      entry.datum = std::move(datum);
      out.push_back(std::move(entry));
    }
  }
  return out;
}

namespace {

struct DominoGrid {
  std::vector<int> row_len;               // shape rows
  std::vector<std::vector<int>> label;    // doubled label per box, -1 empty
  std::vector<std::vector<int>> domino;   // domino id per box, -1 empty

  bool in_shape(int r, int c) const {
    return r >= 0 && r < static_cast<int>(row_len.size()) && c >= 0 &&
           c < row_len[r];
  }
};

// Completion checks of the pinned convention: every upper level set is a
// Young diagram with even columns, and each column's distinct labels form
// a consecutive run.
bool global_rules_ok(const DominoGrid& g) {
  std::vector<int> values;
  for (size_t r = 0; r < g.label.size(); ++r)
    for (int v : g.label[r]) values.push_back(v);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  int ncols = g.row_len.empty() ? 0 : g.row_len[0];
  for (int v : values) {
    // Row lengths of the >= v region (left-justified by row weakness).
    std::vector<int> lens;
    for (size_t r = 0; r < g.label.size(); ++r) {
      int len = 0;
      while (len < g.row_len[r] && g.label[r][len] >= v) ++len;
      lens.push_back(len);
    }
    for (size_t r = 0; r + 1 < lens.size(); ++r)
      if (lens[r] < lens[r + 1]) return false;
    std::vector<int> colheight(ncols, 0);
    for (int len : lens)
      for (int c = 0; c < len; ++c) ++colheight[c];
    for (int c = 0; c < ncols; ++c)
      if (colheight[c] % 2 != 0) return false;
  }
  for (int c = 0; c < ncols; ++c) {
    std::vector<int> col;
    for (size_t r = 0; r < g.label.size(); ++r)
      if (g.in_shape(static_cast<int>(r), c)) col.push_back(g.label[r][c]);
    std::sort(col.begin(), col.end(), std::greater<int>());
    col.erase(std::unique(col.begin(), col.end()), col.end());
    for (size_t i = 0; i + 1 < col.size(); ++i)
      if (col[i] - col[i + 1] != 2) return false;
  }
  return true;
}

}  // namespace

long long domino_count(const Partition& shape, const InfChar& labels) {
  if (shape.total() != 2 * labels.size())
    throw std::invalid_argument("domino_count: " +
                                std::to_string(labels.size()) +
                                " dominoes cannot tile " +
                                std::to_string(shape.total()) + " boxes");
  constexpr int kEmpty = std::numeric_limits<int>::min();
  DominoGrid g;
  g.row_len = shape.parts();
  for (int len : g.row_len) {
    g.label.emplace_back(len, kEmpty);
    g.domino.emplace_back(len, -1);
  }
  std::map<int, int> pool;  // doubled label -> remaining count
  for (int v : labels.doubled()) ++pool[v];

  long long count = 0;
  int next_id = 0;

  auto filled = [&](int r, int c) {
    return g.in_shape(r, c) && g.label[r][c] != kEmpty;
  };
  // All already-filled neighbors of (r,c) must be compatible with label v:
  // weak decrease along rows, strict decrease down columns across dominoes.
  auto fits = [&](int r, int c, int v, int id) {
    if (filled(r, c - 1) && g.label[r][c - 1] < v) return false;
    if (filled(r, c + 1) && v < g.label[r][c + 1]) return false;
    if (filled(r - 1, c) && g.domino[r - 1][c] != id && g.label[r - 1][c] <= v)
      return false;
    if (filled(r + 1, c) && g.domino[r + 1][c] != id && v <= g.label[r + 1][c])
      return false;
    return true;
  };
  auto set_box = [&](int r, int c, int v, int id) {
    g.label[r][c] = v;
    g.domino[r][c] = id;
  };
  auto clear_box = [&](int r, int c) {
    g.label[r][c] = kEmpty;
    g.domino[r][c] = -1;
  };

  std::function<void()> rec = [&]() {
    int rr = -1, cc = -1;
    for (size_t r = 0; r < g.label.size() && rr < 0; ++r)
      for (int c = 0; c < g.row_len[r]; ++c)
        if (g.label[r][c] == kEmpty) {
          rr = static_cast<int>(r);
          cc = c;
          break;
        }
    if (rr < 0) {
      if (global_rules_ok(g)) ++count;
      return;
    }
    int id = next_id++;
    for (auto& [v, avail] : pool) {
      if (avail == 0) continue;
      // Horizontal domino.
      if (g.in_shape(rr, cc + 1) && g.label[rr][cc + 1] == kEmpty &&
          fits(rr, cc, v, id)) {
        set_box(rr, cc, v, id);
        if (fits(rr, cc + 1, v, id)) {
          set_box(rr, cc + 1, v, id);
          --avail;
          rec();
          ++avail;
          clear_box(rr, cc + 1);
        }
        clear_box(rr, cc);
      }
      // Vertical domino.
      if (g.in_shape(rr + 1, cc) && g.label[rr + 1][cc] == kEmpty &&
          fits(rr, cc, v, id)) {
        set_box(rr, cc, v, id);
        if (fits(rr + 1, cc, v, id)) {
          set_box(rr + 1, cc, v, id);
          --avail;
          rec();
          ++avail;
          clear_box(rr + 1, cc);
        }
        clear_box(rr, cc);
      }
    }
    --next_id;
  };
  rec();
  return count;
}

}  // namespace unipcert
