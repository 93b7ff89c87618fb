#include "unipcert/duality.hpp"

#include <stdexcept>

namespace unipcert {

Partition spaltenstein_dual(const Partition& p, DualDirection dir) {
  switch (dir) {
    case DualDirection::CtoB: {
      if (!is_type(p, FormType::C))
        throw std::invalid_argument("spaltenstein_dual: not a C-partition");
      std::vector<int> v = p.parts();
      if (v.empty())
        v.push_back(1);
      else
        v.front() += 1;
      return transpose(collapse(Partition(std::move(v)), FormType::B));
    }
    case DualDirection::BtoC: {
      if (!is_type(p, FormType::B))
        throw std::invalid_argument("spaltenstein_dual: not a B-partition");
      if (p.empty())
        throw std::invalid_argument("spaltenstein_dual: empty B-partition");
      std::vector<int> v = p.parts();
      v.front() -= 1;
      if (v.front() == 0) v.erase(v.begin());
      return collapse(transpose(Partition(std::move(v))), FormType::C);
    }
    case DualDirection::DtoD: {
      if (!is_type(p, FormType::D))
        throw std::invalid_argument("spaltenstein_dual: not a D-partition");
      return collapse(transpose(p), FormType::D);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<int> chi_prime_raw(const Partition& shape, Family family) {
  std::vector<int> out;
  const auto cols = transpose(shape).parts();
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] % 2 != 0)
      throw std::invalid_argument("chi_prime: column " + std::to_string(i + 1) +
                                  " is odd");
    int d = cols[i] / 2;
    bool one_based = (i % 2 == 0) == (family == Family::Sp);
    if (one_based) {
      for (int v = 1; v <= d; ++v) out.push_back(2 * v);
    } else {
      for (int v = 0; v < d; ++v) out.push_back(2 * v);
    }
  }
  return out;
}

InfChar chi_prime(const Partition& shape, Family family) {
  return InfChar(chi_prime_raw(shape, family),
                 family == Family::Sp ? WeylKind::BC : WeylKind::D);
}

InfChar chi_of_dual(const Partition& dual, FormType t) {
  // chi = h/2, so the doubled entries of chi are exactly the entries of h.
  return InfChar(jm_element(dual, t),
                 t == FormType::D ? WeylKind::D : WeylKind::BC);
}

bool part_occurrence_criterion(const Partition& shape, Family family) {
  int k = shape.largest();
  int first = family == Family::Sp ? 2 : 1;
  for (int v = first; v <= k; v += 2)
    if (shape.multiplicity(v) == 0) return false;
  return true;
}

IcReport check_ic_equivalence(Family family, int n) {
  if (n < 1) throw std::invalid_argument("check_ic_equivalence: n >= 1");
  IcReport report;
  report.family = family;
  report.n = n;
  DualDirection dir =
      family == Family::Sp ? DualDirection::CtoB : DualDirection::DtoD;
  FormType dual_type = family == Family::Sp ? FormType::B : FormType::D;
  for (const Partition& shape : even_multiplicity_partitions(2 * n)) {
    ++report.shapes_checked;
    Partition dual = spaltenstein_dual(shape, dir);
    IcCounterexample c;
    c.shape = shape;
    c.chi_match = equal_mod_w(chi_of_dual(dual, dual_type),
                              chi_prime(shape, family));
    c.dual_even = is_even_orbit(dual, dual_type);
    c.parts_criterion = part_occurrence_criterion(shape, family);
    if (c.chi_match != c.dual_even || c.dual_even != c.parts_criterion)
      report.counterexamples.push_back(std::move(c));
  }
  return report;
}

}  // namespace unipcert
