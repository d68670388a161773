#include "kmc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "kmc/errors.hpp"

namespace kmc {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned degree) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

unsigned Permutation::order() const {
  unsigned result = 1;
  std::vector<bool> seen(degree(), false);
  for (unsigned start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    unsigned len = 0;
    for (unsigned i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()));
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) images[i] = q(p(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) images[p(i)] = i;
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& h, const Permutation& g) {
  return compose(compose(g, h), inverse(g));
}

Permutation commutator(const Permutation& x, const Permutation& y) {
  return compose(compose(compose(inverse(x), inverse(y)), x), y);
}

Permutation parse_cycles(unsigned degree, std::string_view text) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);

  auto apply_cycle = [&](const std::vector<unsigned>& cycle) {
    // Right-multiply the accumulated permutation by the cycle.
    if (cycle.size() < 2) return;
    std::vector<unsigned> step(degree);
    std::iota(step.begin(), step.end(), 0u);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      step[cycle[k]] = cycle[(k + 1) % cycle.size()];
    for (unsigned i = 0; i < degree; ++i) images[i] = step[images[i]];
  };

  std::size_t i = 0;
  bool saw_cycle = false;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation", i);
    ++i;
    saw_cycle = true;
    std::vector<unsigned> cycle;
    std::vector<bool> in_cycle(degree, false);
    while (true) {
      while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= n) throw ParseError("unterminated cycle", n);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point or ')' in cycle", i);
      std::size_t start = i;
      unsigned long value = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        if (value > degree) throw ParseError("point exceeds degree", start);
        ++i;
      }
      if (value == 0) throw ParseError("points are 1-based", start);
      unsigned point = static_cast<unsigned>(value - 1);
      if (in_cycle[point])
        throw ParseError("point repeated within a cycle", start);
      in_cycle[point] = true;
      cycle.push_back(point);
    }
    apply_cycle(cycle);
  }
  if (!saw_cycle) throw ParseError("empty permutation text", 0);
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (unsigned start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) {
      seen[start] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (unsigned i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace kmc
