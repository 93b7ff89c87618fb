#include "unipcert/parabolic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace unipcert {

namespace {

std::vector<Row> canonical_rows(std::vector<Row> rows) {
  std::map<std::pair<int, int>, int> merged;
  for (const Row& r : rows) {
    if (r.len <= 0) throw std::invalid_argument("row length must be positive");
    if (r.mult < 0) throw std::invalid_argument("row multiplicity must be >= 0");
    if (r.mult == 0) continue;
    merged[{r.len, static_cast<int>(r.lead)}] += r.mult;
  }
  std::vector<Row> out;
  for (const auto& [key, mult] : merged)
    out.push_back(Row{key.first, static_cast<Sign>(key.second), mult});
  std::sort(out.begin(), out.end(), row_before);
  return out;
}

}  // namespace

PromotedTableau::PromotedTableau(std::vector<Row> rows, RealForm form,
                                 std::optional<SignedTableau> source)
    : rows_(canonical_rows(std::move(rows))),
      form_(form),
      source_(std::move(source)) {
  int keep_parity = form_.family == Family::Sp ? 1 : 0;
  for (const Row& r : rows_)
    if (r.len % 2 != keep_parity)
      throw std::invalid_argument(
          "promoted tableau rows must all have the " +
          std::string(keep_parity ? "odd" : "even") + " parity");
}

Partition PromotedTableau::shape() const {
  std::vector<int> parts;
  for (const Row& r : rows_)
    for (int i = 0; i < r.mult; ++i) parts.push_back(r.len);
  return Partition(std::move(parts));
}

int PromotedTableau::count(int len, Sign lead) const {
  for (const Row& r : rows_)
    if (r.len == len && r.lead == lead) return r.mult;
  return 0;
}

std::pair<int, int> PromotedTableau::signature() const {
  int plus = 0, minus = 0;
  for (const Row& r : rows_) {
    int lead_boxes = (r.len + 1) / 2;
    int other = r.len / 2;
    if (r.lead == Sign::Plus) {
      plus += r.mult * lead_boxes;
      minus += r.mult * other;
    } else {
      minus += r.mult * lead_boxes;
      plus += r.mult * other;
    }
  }
  return {plus, minus};
}

std::string PromotedTableau::str() const {
  std::string out;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(rows_[i].len);
    out += sign_char(rows_[i].lead);
    if (rows_[i].mult > 1) out += '^' + std::to_string(rows_[i].mult);
  }
  return out;
}

int LeviSequence::p_sum() const {
  int s = 0;
  for (auto [p, q] : pq) s += p;
  return s;
}

int LeviSequence::q_sum() const {
  int s = 0;
  for (auto [p, q] : pq) s += q;
  return s;
}

int LeviSequence::rank() const { return p_sum() + q_sum(); }

PromotedTableau promote(const SignedTableau& s) {
  if (!s.is_valid())
    throw std::invalid_argument("promote: tableau is not valid for " +
                                s.form().str());
  int moving_parity = s.form().family == Family::Sp ? 0 : 1;
  std::vector<Row> out;
  for (const Row& r : s.rows()) {
    if (r.len % 2 != moving_parity) {
      out.push_back(r);
      continue;
    }
    // Validity gives k+ = k-; the pairing needs at most one pair per length.
    if (r.mult > 1)
      throw std::invalid_argument("promote: part " + std::to_string(r.len) +
                                  " has multiplicity > 2");
    if (r.lead == Sign::Plus) {
      out.push_back(Row{r.len + 1, Sign::Plus, 1});
      if (r.len - 1 > 0) out.push_back(Row{r.len - 1, Sign::Minus, 1});
    }
    // The minus member of the pair is consumed by its plus partner.
  }
  return PromotedTableau(std::move(out), s.form(), s);
}

LeviSequence levi_sequence(const PromotedTableau& s1) {
  Family fam = s1.form().family;
  std::map<int, std::pair<int, int>> counts;  // len -> (k+, k-)
  for (const Row& r : s1.rows()) {
    auto& c = counts[r.len];
    (r.lead == Sign::Plus ? c.first : c.second) += r.mult;
  }
  int maxlen = counts.empty() ? 0 : counts.rbegin()->first;
  int r = 0;
  if (maxlen > 0) r = fam == Family::Sp ? (maxlen - 1) / 2 : (maxlen - 2) / 2;

  LeviSequence levi;
  levi.family = fam;
  levi.pq.assign(r + 1, {0, 0});
  for (int i = r; i >= 1; --i) {
    int len = fam == Family::Sp ? 2 * i + 1 : 2 * i + 2;
    int kp = 0, km = 0;
    auto it = counts.find(len);
    if (it != counts.end()) {
      kp = it->second.first;
      km = it->second.second;
      counts.erase(it);
    }
    levi.pq[i] = {kp, km};
    if (kp + km > 0) {
      // Trimming one box from each end flips the lead.
      auto& down = counts[len - 2];
      down.first += km;
      down.second += kp;
    }
  }
  int residue_len = fam == Family::Sp ? 1 : 2;
  int kp = 0, km = 0;
  if (auto it = counts.find(residue_len); it != counts.end()) {
    kp = it->second.first;
    km = it->second.second;
  }
  if (fam == Family::Sp) {
    if (kp % 2 != 0 || km % 2 != 0)
      throw std::logic_error(
          "levi_sequence: residue signature cannot be halved");
    levi.pq[0] = {kp / 2, km / 2};
  } else {
    // Even-length residue rows carry one box of each sign, so the halved
    // signature is exactly the pair of lead counts.
    levi.pq[0] = {kp, km};
  }

  if (fam == Family::Sp) {
    if (levi.p_sum() != s1.form().p || levi.q_sum() != s1.form().q)
      throw std::logic_error("levi_sequence: sums do not match the real form");
  } else if (levi.rank() != s1.form().n) {
    throw std::logic_error("levi_sequence: rank does not match the real form");
  }
  return levi;
}

PromotedTableau reconstruct_dense(const LeviSequence& levi) {
  if (levi.pq.empty())
    throw std::invalid_argument("reconstruct_dense: empty Levi sequence");
  for (auto [p, q] : levi.pq)
    if (p < 0 || q < 0)
      throw std::invalid_argument("reconstruct_dense: negative entry");
  Family fam = levi.family;
  int r = static_cast<int>(levi.pq.size()) - 1;

  // Column heights of the stack; the flank columns appear twice, the
  // middle once (doubled for Sp, split into a sign-swapped pair for SO*).
  std::vector<int> h(r + 1);
  h[0] = (fam == Family::Sp ? 2 : 1) *
         (levi.pq[0].first + levi.pq[0].second);
  for (int i = 1; i <= r; ++i) h[i] = levi.pq[i].first + levi.pq[i].second;
  for (int i = 0; i < r; ++i)
    if (h[i] < h[i + 1])
      throw std::invalid_argument(
          "reconstruct_dense: column heights are not unimodal");
  if (r >= 1 && h[r] == 0)
    throw std::invalid_argument("reconstruct_dense: trailing empty factor");

  // a[i] = number of rows in length class i whose box sign at the central
  // column is +; the per-column sign counts determine them uniquely.
  std::vector<int> ncls(r + 1), A(r + 2, 0);
  for (int i = 0; i <= r; ++i) ncls[i] = h[i] - (i < r ? h[i + 1] : 0);
  for (int i = r; i >= 1; --i)
    A[i] = i % 2 == 0 ? levi.pq[i].first : levi.pq[i].second;
  A[0] = fam == Family::Sp ? 2 * levi.pq[0].first : levi.pq[0].first;

  std::vector<Row> rows;
  for (int i = r; i >= 0; --i) {
    int a = A[i] - A[i + 1];
    if (a < 0 || a > ncls[i])
      throw std::invalid_argument(
          "reconstruct_dense: alternation conflict in the column stack");
    int len = fam == Family::Sp ? 2 * i + 1 : 2 * i + 2;
    Sign lead_center_plus = i % 2 == 0 ? Sign::Plus : Sign::Minus;
    if (a > 0) rows.push_back(Row{len, lead_center_plus, a});
    if (ncls[i] - a > 0)
      rows.push_back(Row{len, flip(lead_center_plus), ncls[i] - a});
  }
  RealForm form = fam == Family::Sp
                      ? RealForm::sp(levi.p_sum(), levi.q_sum())
                      : RealForm::so_star(levi.rank());
  return PromotedTableau(std::move(rows), form);
}

SignedTableau collapse_promoted(const PromotedTableau& s1) {
  Family fam = s1.form().family;
  std::map<std::pair<int, int>, int> counts;  // (len, sign) -> mult
  for (const Row& r : s1.rows())
    counts[{r.len, static_cast<int>(r.lead)}] += r.mult;

  std::set<std::pair<int, int>> excess;
  for (const auto& [key, mult] : counts)
    if (mult % 2 != 0) excess.insert(key);

  std::vector<Row> merged;
  std::set<std::pair<int, int>> consumed;
  const int plus = static_cast<int>(Sign::Plus);
  const int minus = static_cast<int>(Sign::Minus);
  for (auto it = excess.rbegin(); it != excess.rend(); ++it) {
    auto [len, sign] = *it;
    if (sign != plus || consumed.count(*it)) continue;
    std::pair<int, int> partner{len - 2, minus};
    bool virtual_partner = fam == Family::SOStar && len == 2;
    if (!virtual_partner) {
      if (len - 2 < 1 || !excess.count(partner) || consumed.count(partner))
        throw std::invalid_argument(
            "collapse_promoted: unmatched row group " + std::to_string(len) +
            "+; input is outside the promotion image");
      consumed.insert(partner);
      counts[partner] -= 1;
    }
    consumed.insert(*it);
    counts[*it] -= 1;
    merged.push_back(Row{len - 1, Sign::Plus, 1});
    merged.push_back(Row{len - 1, Sign::Minus, 1});
  }
  for (const auto& key : excess)
    if (!consumed.count(key))
      throw std::invalid_argument(
          "collapse_promoted: unmatched row group of length " +
          std::to_string(key.first) +
          "; input is outside the promotion image");

  std::vector<Row> rows = merged;
  for (const auto& [key, mult] : counts)
    if (mult > 0)
      rows.push_back(Row{key.first, static_cast<Sign>(key.second), mult});
  SignedTableau out(std::move(rows), s1.form());
  if (!out.is_valid())
    throw std::invalid_argument(
        "collapse_promoted: result is not a valid tableau; input is outside "
        "the promotion image");
  return out;
}

Partition induced_shape(const LeviSequence& levi) {
  if (levi.pq.empty())
    throw std::invalid_argument("induced_shape: empty Levi sequence");
  int r = static_cast<int>(levi.pq.size()) - 1;
  std::vector<int> cols;
  for (int i = r; i >= 1; --i)
    cols.push_back(levi.pq[i].first + levi.pq[i].second);
  int middle = levi.pq[0].first + levi.pq[0].second;
  if (levi.family == Family::Sp) {
    cols.push_back(2 * middle);
  } else {
    cols.push_back(middle);
    cols.push_back(middle);
  }
  for (int i = 1; i <= r; ++i)
    cols.push_back(levi.pq[i].first + levi.pq[i].second);
  std::erase(cols, 0);
  Partition shape = transpose(Partition(std::move(cols)));
  return collapse(shape,
                  levi.family == Family::Sp ? FormType::C : FormType::D);
}

bool birational_check(const SignedTableau& s) {
  FormType t = s.form().family == Family::Sp ? FormType::C : FormType::D;
  LeviSequence levi = levi_sequence(promote(s));
  return orbit_dimension(s.shape(), t) ==
         orbit_dimension(induced_shape(levi), t);
}

namespace {

// Coordinate layout of the theta-stable parabolic in standard coordinates:
// the U blocks in a chosen order, then the Sp(p_0,q_0) factor (which
// carries the trivial character) for the Sp family.
//
// For SO* the promoted tableau has even rows only, so the column stack
// consists entirely of sign-swapped pairs; the terminal factor behaves as
// an innermost U(p_0,q_0) block with its own scalar and the SO* factor of
// the Levi is empty.
//
// The weakly fair range depends on the order of the U blocks, which the
// construction leaves free; solve_lambda searches the orderings.
struct BlockLayout {
  int n = 0;
  std::vector<int> free_factors;  // factor indices carrying a scalar, in order
  std::vector<int> block_of;      // factor index per coordinate; -1 = Sp factor
  std::vector<int> rho2;          // doubled rho of g
  std::vector<int> rho_l2;        // doubled rho of the Levi
};

BlockLayout make_layout(const LeviSequence& levi,
                        const std::vector<int>& factor_order) {
  BlockLayout L;
  L.n = levi.rank();
  L.free_factors = factor_order;
  for (int i : L.free_factors) {
    int size = levi.pq[i].first + levi.pq[i].second;
    for (int j = 0; j < size; ++j) {
      L.block_of.push_back(i);
      L.rho_l2.push_back(size - 1 - 2 * j);  // gl(size) rho, doubled
    }
  }
  if (levi.family == Family::Sp) {
    int s0 = levi.pq[0].first + levi.pq[0].second;
    for (int j = 0; j < s0; ++j) {
      L.block_of.push_back(-1);
      L.rho_l2.push_back(2 * (s0 - j));  // sp(2 s0) rho, doubled
    }
  }
  for (int c = 0; c < L.n; ++c)
    L.rho2.push_back(levi.family == Family::Sp ? 2 * (L.n - c)
                                               : 2 * (L.n - 1 - c));
  return L;
}

bool weakly_fair_ok(const BlockLayout& L, Family fam,
                    const std::vector<int>& lambda_plus_rho_u2) {
  const auto& v = lambda_plus_rho_u2;
  for (int i = 0; i < L.n; ++i) {
    bool i_fixed = L.block_of[i] == -1;
    if (fam == Family::Sp && !i_fixed && v[i] < 0) return false;  // 2e_i
    for (int j = i + 1; j < L.n; ++j) {
      bool j_fixed = L.block_of[j] == -1;
      if (L.block_of[i] != L.block_of[j] && v[i] - v[j] < 0)
        return false;  // e_i - e_j
      if (!(i_fixed && j_fixed) && v[i] + v[j] < 0) return false;  // e_i + e_j
    }
  }
  return true;
}

}  // namespace

namespace {

// Exact matching of block strings against the remaining chi' multiset for
// one block ordering; returns the first weakly fair scalar assignment.
std::optional<std::vector<int>> solve_for_order(const LeviSequence& levi,
                                                Family fam,
                                                std::multiset<int> remaining,
                                                const std::vector<int>& order,
                                                bool& any_solution) {
  BlockLayout L = make_layout(levi, order);
  std::vector<int> start, size;
  {
    int off = 0;
    for (int i : order) {
      start.push_back(off);
      size.push_back(levi.pq[i].first + levi.pq[i].second);
      off += size.back();
    }
  }
  int r = static_cast<int>(levi.pq.size()) - 1;
  std::vector<int> t2(r + 1, 0);
  std::optional<std::vector<int>> best;

  std::function<void(size_t)> rec = [&](size_t bi) {
    if (best) return;
    if (bi == order.size()) {
      any_solution = true;
      std::vector<int> wf2(L.n);
      for (int c = 0; c < L.n; ++c) {
        int lam = L.block_of[c] == -1 ? 0 : t2[L.block_of[c]];
        wf2[c] = lam + L.rho2[c] - L.rho_l2[c];
      }
      if (weakly_fair_ok(L, fam, wf2)) best = t2;
      return;
    }
    int i = order[bi];
    int m = size[bi];
    if (m == 0) {
      t2[i] = 0;
      rec(bi + 1);
      return;
    }
    int R2 = L.rho2[start[bi]];
    int maxrem = remaining.empty() ? 0 : *remaining.rbegin();
    for (int top = maxrem; top >= -maxrem && !best; top -= 2) {
      // Try the block string top, top-2, ..., top-2(m-1).
      std::vector<int> taken;
      bool ok = true;
      for (int j = 0; j < m; ++j) {
        int v = std::abs(top - 2 * j);
        auto it = remaining.find(v);
        if (it == remaining.end()) {
          ok = false;
          break;
        }
        remaining.erase(it);
        taken.push_back(v);
      }
      if (ok) {
        t2[i] = top - R2;
        rec(bi + 1);
      }
      for (int v : taken) remaining.insert(v);
    }
  };
  rec(0);
  return best;
}

}  // namespace

AqDatum solve_lambda(const SignedTableau& s) {
  PromotedTableau s1 = promote(s);
  LeviSequence levi = levi_sequence(s1);
  Family fam = s.form().family;
  WeylKind wk = fam == Family::Sp ? WeylKind::BC : WeylKind::D;
  int r = static_cast<int>(levi.pq.size()) - 1;

  std::multiset<int> remaining;
  for (int x : chi_prime_raw(s.shape(), fam)) remaining.insert(x);

  if (fam == Family::Sp) {
    // The Sp factor carries lambda = 0, so its block of lambda + rho is
    // pinned to the tail of rho.
    int s0 = levi.pq[0].first + levi.pq[0].second;
    for (int j = 0; j < s0; ++j) {
      int v = 2 * (s0 - j);
      auto it = remaining.find(v);
      if (it == remaining.end())
        throw std::logic_error(
            "solve_lambda: chi' does not contain the fixed-factor string");
      remaining.erase(it);
    }
  }

  std::vector<int> factors;
  for (int i = 1; i <= r; ++i) factors.push_back(i);
  if (fam == Family::SOStar) factors.insert(factors.begin(), 0);

  bool any_solution = false;
  std::optional<std::vector<int>> best;
  std::vector<int> chosen_order;
  std::vector<int> perm = factors;
  do {
    best = solve_for_order(levi, fam, remaining, perm, any_solution);
    if (best) {
      chosen_order = perm;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (!best) {
    if (any_solution)
      throw std::logic_error(
          "solve_lambda: solutions exist but none is weakly fair");
    throw std::logic_error("solve_lambda: no lambda matches chi'");
  }

  BlockLayout L = make_layout(levi, chosen_order);
  std::vector<int> t2 = *best;
  std::vector<int> lambda_doubled(r + 1, 0);
  for (int i : chosen_order) lambda_doubled[i] = t2[i];
  std::vector<int> v2(L.n);
  for (int c = 0; c < L.n; ++c)
    v2[c] = (L.block_of[c] == -1 ? 0 : t2[L.block_of[c]]) + L.rho2[c];

  AqDatum datum;
  datum.levi = levi;
  datum.lambda_doubled = std::move(lambda_doubled);
  datum.infchar = InfChar(std::move(v2), wk);
  datum.weakly_fair = true;
  datum.dense_orbit = collapse_promoted(reconstruct_dense(levi));
  datum.multiplicity = 1;
  if (!equal_mod_w(datum.infchar, chi_prime(s.shape(), fam)))
    throw std::logic_error("solve_lambda: infinitesimal character mismatch");
  return datum;
}

AqDatum aq_datum(const SignedTableau& s) {
  AqDatum datum = solve_lambda(s);
  if (!(datum.dense_orbit == s))
    throw std::logic_error(
        "aq_datum: reconstructed dense orbit differs from the input tableau");
  return datum;
}

}  // namespace unipcert
