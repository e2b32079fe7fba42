#include "unip/painting.hpp"

#include <algorithm>
#include <array>

namespace unip {

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::Dot: return '*';
    case Symbol::S: return 's';
    case Symbol::R: return 'r';
    case Symbol::C: return 'c';
    case Symbol::D: return 'd';
  }
  return '?';
}

Painting::Painting(YoungDiagram shape, std::vector<Symbol> cells)
    : shape_(std::move(shape)), cells_(std::move(cells)) {
  if (static_cast<int>(cells_.size()) != shape_.size())
    throw Error("painting needs one symbol per box");
  offsets_.reserve(shape_.num_rows());
  int offset = 0;
  for (int row : shape_.rows()) {
    offsets_.push_back(offset);
    offset += row;
  }
}

Symbol Painting::at(int i, int j) const {
  if (!shape_.has_box(i, j)) throw Error("box out of range");
  return cells_[offsets_[i - 1] + j - 1];
}

void Painting::set(int i, int j, Symbol s) {
  if (!shape_.has_box(i, j)) throw Error("box out of range");
  cells_[offsets_[i - 1] + j - 1] = s;
}

int Painting::count(Symbol s) const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), s));
}

std::vector<std::pair<int, int>> Painting::boxes_with(Symbol s) const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= shape_.num_rows(); ++i)
    for (int j = 1; j <= shape_.r(i); ++j)
      if (at(i, j) == s) out.emplace_back(i, j);
  return out;
}

bool is_valid_painting(const Painting& p) {
  const YoungDiagram& shape = p.shape();
  // Prefix diagrams: boxes with rank <= k must form a Young diagram for every k.
  for (int rank = 0; rank < 4; ++rank) {
    std::vector<int> prefix_rows(shape.num_rows(), 0);
    for (int i = 1; i <= shape.num_rows(); ++i) {
      int len = 0;
      while (len < shape.r(i) && static_cast<int>(p.at(i, len + 1)) <= rank) ++len;
      // Every box of rank <= `rank` must be left-justified in its row.
      for (int j = len + 1; j <= shape.r(i); ++j)
        if (static_cast<int>(p.at(i, j)) <= rank) return false;
      prefix_rows[i - 1] = len;
    }
    for (size_t i = 0; i + 1 < prefix_rows.size(); ++i)
      if (prefix_rows[i] < prefix_rows[i + 1]) return false;
  }
  for (int i = 1; i <= shape.num_rows(); ++i) {
    int s = 0, r = 0;
    for (int j = 1; j <= shape.r(i); ++j) {
      s += p.at(i, j) == Symbol::S;
      r += p.at(i, j) == Symbol::R;
    }
    if (s > 1 || r > 1) return false;
  }
  for (int j = 1; j <= shape.num_cols(); ++j) {
    int c = 0, d = 0;
    for (int i = 1; i <= shape.c(j); ++i) {
      c += p.at(i, j) == Symbol::C;
      d += p.at(i, j) == Symbol::D;
    }
    if (c > 1 || d > 1) return false;
  }
  return true;
}

std::string to_string(const Painting& p) {
  std::string out;
  for (int i = 1; i <= p.shape().num_rows(); ++i) {
    if (i > 1) out += '/';
    for (int j = 1; j <= p.shape().r(i); ++j) out += symbol_char(p.at(i, j));
  }
  return out;
}

Painting parse_painting(std::string_view text) {
  if (text.empty()) return Painting();
  std::vector<int> rows;
  std::vector<Symbol> cells;
  int row_len = 0;
  for (char ch : text) {
    switch (ch) {
      case '/':
        rows.push_back(row_len);
        row_len = 0;
        break;
      case '*': cells.push_back(Symbol::Dot); ++row_len; break;
      case 's': cells.push_back(Symbol::S); ++row_len; break;
      case 'r': cells.push_back(Symbol::R); ++row_len; break;
      case 'c': cells.push_back(Symbol::C); ++row_len; break;
      case 'd': cells.push_back(Symbol::D); ++row_len; break;
      default: throw Error(std::string("bad painting character '") + ch + "'");
    }
  }
  rows.push_back(row_len);
  return Painting(YoungDiagram(std::move(rows)), std::move(cells));
}

YoungDiagram dot_diagram(const Painting& p) {
  std::vector<int> rows;
  for (int i = 1; i <= p.shape().num_rows(); ++i) {
    int len = 0;
    while (len < p.shape().r(i) && p.at(i, len + 1) == Symbol::Dot) ++len;
    rows.push_back(len);
  }
  return YoungDiagram(std::move(rows));
}

StripKind strip_kind(Symbol s) {
  switch (s) {
    case Symbol::Dot: return StripKind::Any;
    case Symbol::S:
    case Symbol::R: return StripKind::Vertical;
    case Symbol::C:
    case Symbol::D: return StripKind::Horizontal;
  }
  return StripKind::Any;
}

namespace {

void gen_layers(const YoungDiagram& from, const YoungDiagram& to, StripKind kind, int row,
                int prev_len, std::vector<int>& acc, std::vector<YoungDiagram>& out) {
  const int rows = to.num_rows();
  if (row > rows) {
    out.push_back(YoungDiagram(acc));
    return;
  }
  int hi = std::min(to.r(row), prev_len);
  const int lo = from.r(row);
  switch (kind) {
    case StripKind::Any:
      break;
    case StripKind::Vertical:
      hi = std::min(hi, from.r(row) + 1);  // at most one new box per row
      break;
    case StripKind::Horizontal:
      if (row >= 2) hi = std::min(hi, from.r(row - 1));  // one new box per column
      break;
  }
  for (int len = hi; len >= lo; --len) {
    acc.push_back(len);
    gen_layers(from, to, kind, row + 1, len, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> layer_extensions(const YoungDiagram& from, const YoungDiagram& to,
                                           StripKind kind) {
  std::vector<YoungDiagram> out;
  if (!to.contains(from)) return out;
  std::vector<int> acc;
  gen_layers(from, to, kind, 1, to.num_cols() + 1, acc, out);
  return out;
}

namespace {

// Horizontal-strip check used when a layer must *end* at the full shape.
bool layer_ok(const YoungDiagram& from, const YoungDiagram& to, StripKind kind) {
  if (!to.contains(from)) return false;
  const int rows = to.num_rows();
  for (int i = 1; i <= rows; ++i) {
    switch (kind) {
      case StripKind::Any:
        break;
      case StripKind::Vertical:
        if (to.r(i) - from.r(i) > 1) return false;
        break;
      case StripKind::Horizontal:
        if (from.r(i) < to.r(i + 1)) return false;
        break;
    }
  }
  return true;
}

void paint_boxes(Painting& p, const YoungDiagram& from, const YoungDiagram& to, Symbol s) {
  for (int i = 1; i <= to.num_rows(); ++i)
    for (int j = from.r(i) + 1; j <= to.r(i); ++j) p.set(i, j, s);
}

void gen_chains(const YoungDiagram& shape, const YoungDiagram& dots,
                const YoungDiagram& current, std::span<const Symbol> alphabet, size_t idx,
                std::vector<YoungDiagram>& chain, std::vector<Painting>& out) {
  if (idx == alphabet.size()) {
    if (!(current == shape)) return;
    Painting p(shape, std::vector<Symbol>(shape.size(), Symbol::Dot));
    YoungDiagram prev = dots;
    for (size_t k = 0; k < chain.size(); ++k) {
      paint_boxes(p, prev, chain[k], alphabet[k]);
      prev = chain[k];
    }
    out.push_back(std::move(p));
    return;
  }
  if (idx + 1 == alphabet.size()) {
    // Last layer is forced to reach the full shape.
    if (layer_ok(current, shape, strip_kind(alphabet[idx]))) {
      chain.push_back(shape);
      gen_chains(shape, dots, shape, alphabet, idx + 1, chain, out);
      chain.pop_back();
    }
    return;
  }
  for (const YoungDiagram& next : layer_extensions(current, shape, strip_kind(alphabet[idx]))) {
    chain.push_back(next);
    gen_chains(shape, dots, next, alphabet, idx + 1, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<Painting> paintings_with_dots(const YoungDiagram& shape, const YoungDiagram& dots,
                                          std::span<const Symbol> alphabet) {
  std::vector<Painting> out;
  if (!shape.contains(dots)) return out;
  std::vector<Symbol> tail(alphabet.begin(), alphabet.end());
  if (!tail.empty() && tail.front() == Symbol::Dot) tail.erase(tail.begin());
  if (tail.empty() && !(dots == shape)) return out;
  std::vector<YoungDiagram> chain;
  gen_chains(shape, dots, dots, tail, 0, chain, out);
  // The chain painter fills layers after `dots`; the first `dots` boxes stay •.
  return out;
}

std::vector<Painting> all_paintings(const YoungDiagram& shape, std::span<const Symbol> alphabet) {
  std::vector<Painting> out;
  const bool has_dot = !alphabet.empty() && alphabet.front() == Symbol::Dot;
  if (has_dot) {
    for (const YoungDiagram& dots : layer_extensions(YoungDiagram(), shape, StripKind::Any)) {
      auto batch = paintings_with_dots(shape, dots, alphabet);
      out.insert(out.end(), batch.begin(), batch.end());
    }
  } else {
    out = paintings_with_dots(shape, YoungDiagram(), alphabet);
  }
  return out;
}

}  // namespace unip
