#include "unipcert/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace unipcert {

std::string to_string(FormType t) {
  switch (t) {
    case FormType::B: return "B";
    case FormType::C: return "C";
    case FormType::D: return "D";
  }
  return "?";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_) {
    if (x <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  if (i == text.size()) return Partition{};
  while (i < text.size()) {
    size_t start = i;
    int value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + (text[i] - '0');
      ++i;
    }
    if (i == start)
      throw std::invalid_argument("col " + std::to_string(start + 1) +
                                  ": expected an integer part");
    if (value <= 0)
      throw std::invalid_argument("col " + std::to_string(start + 1) +
                                  ": parts must be positive");
    parts.push_back(value);
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i < text.size()) {
      if (text[i] != ',')
        throw std::invalid_argument("col " + std::to_string(i + 1) +
                                    ": expected ','");
      ++i;
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
      if (i == text.size())
        throw std::invalid_argument("col " + std::to_string(i + 1) +
                                    ": trailing ','");
    }
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition transpose(const Partition& p) {
  std::vector<int> cols;
  cols.reserve(p.largest());
  for (int j = 1; j <= p.largest(); ++j) {
    int c = 0;
    for (int part : p.parts())
      if (part >= j) ++c;
    cols.push_back(c);
  }
  return Partition(std::move(cols));
}

namespace {

bool bad_parity(int part, FormType t) {
  return t == FormType::C ? part % 2 == 1 : part % 2 == 0;
}

}  // namespace

bool is_type(const Partition& p, FormType t) {
  const auto& v = p.parts();
  for (size_t i = 0; i < v.size();) {
    size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (bad_parity(v[i], t) && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

Partition collapse(const Partition& p, FormType t) {
  if (t == FormType::C && p.total() % 2 != 0)
    throw std::invalid_argument("no symplectic partition of odd total");
  std::vector<int> v = p.parts();
  for (;;) {
    // Largest part of the wrong parity occurring an odd number of times.
    int q = 0;
    for (size_t i = 0; i < v.size();) {
      size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      if (bad_parity(v[i], t) && (j - i) % 2 != 0) {
        q = v[i];
        break;
      }
      i = j;
    }
    if (q == 0) break;
    if (q == 1) throw std::logic_error("collapse: cannot shrink a part of size 1");
    // Move one box from the last row of size q to the first later row
    // that can take it.
    size_t last = 0;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] == q) last = i;
    v[last] -= 1;
    size_t j = last + 1;
    while (j < v.size() && v[j] > q - 2) ++j;
    if (j < v.size())
      v[j] += 1;
    else
      v.push_back(1);
  }
  return Partition(std::move(v));
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.total() != b.total())
    throw std::invalid_argument("dominance requires equal totals");
  long long sa = 0, sb = 0;
  size_t n = std::max(a.parts().size(), b.parts().size());
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.parts().size() ? a.parts()[i] : 0;
    sb += i < b.parts().size() ? b.parts()[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::vector<int> jm_element(const Partition& p, FormType t) {
  if (!is_type(p, t))
    throw std::invalid_argument("jm_element: partition is not of type " +
                                to_string(t));
  std::vector<int> h;
  h.reserve(p.total());
  for (int m : p.parts())
    for (int k = m - 1; k >= 1 - m; k -= 2) h.push_back(k);
  std::sort(h.begin(), h.end(), std::greater<int>());
  h.resize(p.total() / 2);
  return h;
}

bool is_even_orbit(const Partition& p, FormType t) {
  for (int x : jm_element(p, t))
    if (x % 2 != 0) return false;
  return true;
}

long long orbit_dimension(const Partition& p, FormType t) {
  if (!is_type(p, t))
    throw std::invalid_argument("orbit_dimension: partition is not of type " +
                                to_string(t));
  long long total = p.total();
  long long dim_g = 0;
  switch (t) {
    case FormType::C: dim_g = (total / 2) * (total + 1); break;       // sp(total)
    case FormType::B: dim_g = ((total - 1) / 2) * total; break;       // so(total)
    case FormType::D: dim_g = (total / 2) * (total - 1); break;       // so(total)
  }
  long long sq = 0;
  const Partition pt = transpose(p);
  for (int c : pt.parts()) sq += static_cast<long long>(c) * c;
  long long odd = 0;
  for (int m : p.parts())
    if (m % 2 != 0) ++odd;
  if (t == FormType::C) return dim_g - (sq + odd) / 2;
  return dim_g - (sq - odd) / 2;
}

bool is_special(const Partition& p, FormType t) {
  return is_type(p, t) && is_type(transpose(p), t);
}

bool has_even_columns(const Partition& p) {
  const auto& v = p.parts();
  for (size_t i = 0; i < v.size();) {
    size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int first = std::min(rest, maxpart); first >= 1; --first) {
      cur.push_back(first);
      rec(rest - first, first);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n == 0 ? 1 : n);
  return out;
}

std::vector<Partition> even_multiplicity_partitions(int total) {
  std::vector<Partition> out;
  if (total < 0 || total % 2 != 0) return out;
  for (const Partition& half : partitions_of(total / 2)) {
    std::vector<int> doubled;
    doubled.reserve(2 * half.parts().size());
    for (int m : half.parts()) {
      doubled.push_back(m);
      doubled.push_back(m);
    }
    out.push_back(Partition(std::move(doubled)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace unipcert
