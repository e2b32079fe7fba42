#include "unip/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace unip {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1]))
      throw Error("row lengths must be weakly decreasing and positive");
  }
  total_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

YoungDiagram YoungDiagram::from_multiset(std::vector<int> lengths) {
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return YoungDiagram(std::move(lengths));
}

int YoungDiagram::c(int i) const {
  if (i < 1) return 0;
  int count = 0;
  for (int row : rows_)
    if (row >= i) ++count;
  return count;
}

bool YoungDiagram::contains(const YoungDiagram& other) const {
  if (other.num_rows() > num_rows()) return false;
  for (int i = 1; i <= other.num_rows(); ++i)
    if (other.r(i) > r(i)) return false;
  return true;
}

YoungDiagram YoungDiagram::transpose() const {
  std::vector<int> cols(num_cols());
  for (int j = 1; j <= num_cols(); ++j) cols[j - 1] = c(j);
  return YoungDiagram(std::move(cols));
}

YoungDiagram diagram_union(const YoungDiagram& a, const YoungDiagram& b, UnionMode mode) {
  if (mode == UnionMode::Cols)
    return diagram_union(a.transpose(), b.transpose(), UnionMode::Rows).transpose();
  std::vector<int> merged = a.rows();
  merged.insert(merged.end(), b.rows().begin(), b.rows().end());
  return YoungDiagram::from_multiset(std::move(merged));
}

namespace {

// Parity of row lengths that must occur with even multiplicity.
int paired_parity(Family fam) { return fam == Family::C ? 1 : 0; }

}  // namespace

bool is_valid_orbit(const YoungDiagram& d, Family fam) {
  if (fam == Family::GL) return true;
  const int parity = paired_parity(fam);
  const auto& rows = d.rows();
  for (size_t i = 0; i < rows.size();) {
    size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    if (rows[i] % 2 == parity && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

YoungDiagram collapse(const YoungDiagram& d, Family fam) {
  if (fam == Family::B && d.size() % 2 == 0)
    throw IncompatibleSize("B-collapse needs odd total size");
  if ((fam == Family::C || fam == Family::D) && d.size() % 2 != 0)
    throw IncompatibleSize("C/D-collapse needs even total size");
  if (fam == Family::GL || is_valid_orbit(d, fam)) return d;

  std::vector<int> rows = d.rows();
  const int parity = paired_parity(fam);
  while (true) {
    // Largest row length of the paired parity occurring an odd number of times.
    int bad = -1;
    for (size_t i = 0; i < rows.size();) {
      size_t j = i;
      while (j < rows.size() && rows[j] == rows[i]) ++j;
      if (rows[i] % 2 == parity && (j - i) % 2 != 0) {
        bad = rows[i];
        break;  // rows are sorted descending, first hit is the largest
      }
      i = j;
    }
    if (bad < 0) break;
    // Move one box from the last row of length `bad` to the first legal spot below.
    size_t i = 0;
    while (i + 1 < rows.size() && rows[i + 1] >= bad) ++i;
    while (rows[i] != bad) --i;
    --rows[i];
    size_t j = i + 1;
    while (j < rows.size() && rows[j] >= bad - 1) ++j;
    if (j < rows.size())
      ++rows[j];
    else
      rows.push_back(1);
  }
  return YoungDiagram(std::move(rows));
}

long long orbit_dim(const YoungDiagram& d, Family fam) {
  if (!is_valid_orbit(d, fam)) throw InvalidOrbit(to_string(d));
  const long long n = d.size();
  long long col_sq = 0;
  for (int j = 1; j <= d.num_cols(); ++j) {
    long long c = d.c(j);
    col_sq += c * c;
  }
  long long odd_rows = 0;
  for (int row : d.rows())
    if (row % 2 != 0) ++odd_rows;
  switch (fam) {
    case Family::GL:
      return n * n - col_sq;
    case Family::B:
    case Family::D:
      return (n * n - n) / 2 - (col_sq - odd_rows) / 2;
    case Family::C:
      return (n * n + n) / 2 - (col_sq + odd_rows) / 2;
  }
  throw Error("unreachable");
}

bool dominates(const YoungDiagram& a, const YoungDiagram& b) {
  if (a.size() != b.size()) return false;
  long long pa = 0, pb = 0;
  const int rows = std::max(a.num_rows(), b.num_rows());
  for (int i = 1; i <= rows; ++i) {
    pa += a.r(i);
    pb += b.r(i);
    if (pa < pb) return false;
  }
  return true;
}

YoungDiagram parse_diagram(std::string_view text) {
  if (text.empty() || text == "0") return YoungDiagram();
  std::vector<int> rows;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string part(text.substr(pos, comma - pos));
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw Error("bad diagram entry '" + part + "'");
    }
    if (used != part.size() || value < 0) throw Error("bad diagram entry '" + part + "'");
    rows.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return YoungDiagram(std::move(rows));
}

std::string to_string(const YoungDiagram& d) {
  if (d.empty()) return "0";
  std::ostringstream out;
  for (int i = 0; i < d.num_rows(); ++i) {
    if (i) out << ',';
    out << d.rows()[i];
  }
  return out.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc,
                    std::vector<YoungDiagram>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    acc.push_back(part);
    gen_partitions(n - part, part, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n) { return partitions_of_max(n, n); }

std::vector<YoungDiagram> partitions_of_max(int n, int max_part) {
  std::vector<YoungDiagram> out;
  if (n < 0) return out;
  std::vector<int> acc;
  gen_partitions(n, std::min(n, max_part), acc, out);
  if (n == 0) out.assign(1, YoungDiagram());
  return out;
}

}  // namespace unip
