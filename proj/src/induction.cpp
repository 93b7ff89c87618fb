#include "unipcert/induction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "unipcert/duality.hpp"

namespace unipcert {

std::vector<SignedTableau> raise_rows(const SignedTableau& s, int k) {
  if (k <= 0) throw std::invalid_argument("raise_rows: k must be positive");
  if (!s.is_valid())
    throw std::invalid_argument("raise_rows: tableau is not valid");
  if (s.row_count() < 2 * k)
    throw std::invalid_argument("raise_rows: fewer than 2k rows");

  // Everything strictly longer than the boundary length is raised; the
  // remaining rows come from the boundary class in any sign split.
  int need = 2 * k;
  std::vector<std::pair<int, int>> classes;  // (len, total mult), len desc
  for (const Row& r : s.rows()) {
    if (!classes.empty() && classes.back().first == r.len)
      classes.back().second += r.mult;
    else
      classes.push_back({r.len, r.mult});
  }
  int acc = 0;
  size_t ci = 0;
  for (; ci < classes.size(); ++ci) {
    if (acc + classes[ci].second >= need) break;
    acc += classes[ci].second;
  }
  int boundary_len = classes[ci].first;
  int from_boundary = need - acc;

  RealForm grown = s.form().family == Family::Sp
                       ? RealForm::sp(s.form().p + k, s.form().q + k)
                       : RealForm::so_star(s.form().n + 2 * k);

  int kp = s.count(boundary_len, Sign::Plus);
  int km = s.count(boundary_len, Sign::Minus);
  std::set<SignedTableau> results;
  for (int xp = std::max(0, from_boundary - km);
       xp <= std::min(kp, from_boundary); ++xp) {
    int xm = from_boundary - xp;
    std::vector<Row> rows;
    for (const Row& r : s.rows()) {
      if (r.len > boundary_len) {
        rows.push_back(Row{r.len + 2, r.lead, r.mult});
      } else if (r.len == boundary_len) {
        int raised = r.lead == Sign::Plus ? xp : xm;
        if (raised > 0) rows.push_back(Row{r.len + 2, r.lead, raised});
        if (r.mult - raised > 0)
          rows.push_back(Row{r.len, r.lead, r.mult - raised});
      } else {
        rows.push_back(r);
      }
    }
    SignedTableau t(std::move(rows), grown);
    if (t.is_valid()) results.insert(std::move(t));
  }
  return {results.begin(), results.end()};
}

InductionStep unique_raise(const SignedTableau& s, int r, int a_prime) {
  Family fam = s.form().family;
  int part = fam == Family::Sp ? 2 * r : 2 * r + 1;
  if (part <= 0)
    throw std::invalid_argument("unique_raise: part must be positive");
  const Partition shape = s.shape();
  int mult = shape.multiplicity(part);
  if (mult == 0)
    throw std::invalid_argument("unique_raise: no part of size " +
                                std::to_string(part));
  int a = mult / 2;
  if (a_prime < 1 || a_prime > a)
    throw std::invalid_argument("unique_raise: a' must satisfy 1 <= a' <= a");
  int larger = 0;
  for (int m : shape.parts())
    if (m > part) ++larger;
  int b = larger / 2;
  int k = a_prime + b;
  std::vector<SignedTableau> raised = raise_rows(s, k);
  if (raised.size() != 1)
    throw std::logic_error("unique_raise: expected exactly one raise, found " +
                           std::to_string(raised.size()));
  InductionStep step;
  step.k = k;
  step.source = s;
  step.target = raised.front();
  step.r = r;
  step.a = a;
  step.a_prime = a_prime;
  step.b = b;
  return step;
}

std::vector<int> det_string(int k, int t_doubled) {
  if (k <= 0) throw std::invalid_argument("det_string: k must be positive");
  std::vector<int> out;
  out.reserve(2 * k);
  for (int j = 0; j < 2 * k; ++j) out.push_back(t_doubled + (2 * k - 1) - 2 * j);
  return out;
}

namespace {

// Raising variant for the strip-and-induce route: when the tableau has
// fewer than 2k rows, the 2k largest rows include rows of length zero,
// which grow into new rows of length two.
std::vector<SignedTableau> raise_rows_grow(const SignedTableau& s, int k) {
  if (s.row_count() >= 2 * k) return raise_rows(s, k);
  int grow = 2 * k - s.row_count();
  RealForm grown = s.form().family == Family::Sp
                       ? RealForm::sp(s.form().p + k, s.form().q + k)
                       : RealForm::so_star(s.form().n + 2 * k);
  std::set<SignedTableau> results;
  for (int xp = 0; xp <= grow; ++xp) {
    std::vector<Row> rows;
    for (const Row& r : s.rows()) rows.push_back(Row{r.len + 2, r.lead, r.mult});
    if (xp > 0) rows.push_back(Row{2, Sign::Plus, xp});
    if (grow - xp > 0) rows.push_back(Row{2, Sign::Minus, grow - xp});
    SignedTableau t(std::move(rows), grown);
    if (t.is_valid()) results.insert(std::move(t));
  }
  return {results.begin(), results.end()};
}

}  // namespace

std::pair<Partition, std::vector<int>> strip_even_parts(const Partition& dual) {
  std::vector<int> core, gl;
  const auto& parts = dual.parts();
  for (size_t i = 0; i < parts.size();) {
    if (parts[i] % 2 != 0) {
      core.push_back(parts[i]);
      ++i;
      continue;
    }
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    size_t mult = j - i;
    if (mult % 2 != 0)
      throw std::invalid_argument(
          "strip_even_parts: even part with odd multiplicity");
    for (size_t t = 0; t < mult / 2; ++t) gl.push_back(parts[i] / 2);
    i = j;
  }
  std::sort(gl.begin(), gl.end(), std::greater<int>());
  return {Partition(std::move(core)), std::move(gl)};
}

std::vector<InducedDatum> special_unipotent_data(const Partition& dual,
                                                 const RealForm& rf) {
  Family fam = rf.family;
  FormType dual_type = fam == Family::Sp ? FormType::B : FormType::D;
  int expected_boxes = fam == Family::Sp ? 2 * rf.n + 1 : 2 * rf.n;
  if (dual.total() != expected_boxes)
    throw std::invalid_argument("special_unipotent_data: dual has " +
                                std::to_string(dual.total()) +
                                " boxes, expected " +
                                std::to_string(expected_boxes));
  if (!is_type(dual, dual_type))
    throw std::invalid_argument(
        "special_unipotent_data: dual is not a " + to_string(dual_type) +
        "-partition");
  if (is_even_orbit(dual, dual_type))
    throw std::invalid_argument(
        "special_unipotent_data: dual is even; use the integral route");

  auto [core, gl_sizes] = strip_even_parts(dual);
  int K = 0;
  for (int ki : gl_sizes) K += ki;

  RealForm base;
  if (fam == Family::Sp) {
    if (rf.p < K || rf.q < K) return {};
    base = RealForm::sp(rf.p - K, rf.q - K);
  } else {
    if (rf.n < 2 * K) return {};
    base = RealForm::so_star(rf.n - 2 * K);
  }

  DualDirection down =
      fam == Family::Sp ? DualDirection::BtoC : DualDirection::DtoD;
  Partition base_shape = spaltenstein_dual(core, down);
  Partition target_shape = spaltenstein_dual(dual, down);
  // A dual whose d has an odd column meets no K-orbit: nothing is carried.
  if (!has_even_columns(base_shape)) return {};
  InfChar expected_chi = chi_of_dual(dual, dual_type);

  // An all-even dual labels two orbits whose characters differ by the
  // type D sign parity; the bare Jordan type cannot tell them apart.
  bool very_even = true;
  for (int m : dual.parts()) very_even = very_even && m % 2 == 0;

  // The induced representation can have reducible associated variety (the
  // raises are not always unique), so the data enumerate the components of
  // the iterated raise: together they exhaust the K-orbits over d(dual).
  std::vector<InducedDatum> out;
  for (const SignedTableau& base_orbit : enumerate_K_orbits(base, base_shape)) {
    InfChar chi = chi_prime(base_shape, fam);
    for (int ki : gl_sizes) chi = concat(chi, det_string(ki, 0));
    bool chi_ok = very_even ? equal_mod_w_abs(chi, expected_chi)
                            : equal_mod_w(chi, expected_chi);
    if (!chi_ok)
      throw std::logic_error(
          "special_unipotent_data: infinitesimal character mismatch");

    std::vector<SignedTableau> frontier = {base_orbit};
    for (int ki : gl_sizes) {
      std::vector<SignedTableau> next;
      for (const SignedTableau& t : frontier) {
        std::vector<SignedTableau> raised = raise_rows_grow(t, ki);
        if (raised.empty())
          throw std::logic_error("special_unipotent_data: empty raise");
        next.insert(next.end(), raised.begin(), raised.end());
      }
      frontier = std::move(next);
    }
    for (const SignedTableau& t : frontier) {
      if (!(t.shape() == target_shape))
        throw std::logic_error(
            "special_unipotent_data: induced shape is not d(dual)");
      InducedDatum datum;
      datum.base_form = base;
      datum.gl_sizes = gl_sizes;
      datum.base_orbit = base_orbit;
      datum.infchar = chi;
      datum.induced_orbit = t;
      out.push_back(std::move(datum));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const InducedDatum& a, const InducedDatum& b) {
              if (!(a.induced_orbit == b.induced_orbit))
                return a.induced_orbit < b.induced_orbit;
              return a.base_orbit < b.base_orbit;
            });
  return out;
}

}  // namespace unipcert
